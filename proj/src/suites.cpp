#include "ellw/suites.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <exception>
#include <numbers>
#include <string>
#include <vector>

#include "ellw/cmatrix.hpp"
#include "ellw/modes.hpp"
#include "ellw/rmatrix.hpp"
#include "ellw/rng.hpp"
#include "ellw/special.hpp"
#include "ellw/structure.hpp"

namespace ellw {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTableExactTol = 1e-12;

// Identity checks evaluated per pre-generated sample; pole hits are
// skipped and counted, anything else aborts the suite.
template <class Fn>
CheckLine sampled_check(const char* name, int n, double tol, Fn&& fn) {
    double res = 0.0;
    int skipped = 0;
    std::exception_ptr fatal;
#pragma omp parallel for schedule(dynamic) reduction(max : res) \
    reduction(+ : skipped)
    for (int i = 0; i < n; ++i) {
        try {
            res = std::max(res, fn(i));
        } catch (const PoleError&) {
            ++skipped;
        } catch (const SingularMatrixError&) {
            ++skipped;
        } catch (...) {
#pragma omp critical
            if (!fatal) fatal = std::current_exception();
        }
    }
    if (fatal) std::rethrow_exception(fatal);
    CheckLine c;
    c.name = name;
    c.samples = n;
    c.skipped = skipped;
    c.max_residual = res;
    c.tolerance = tol;
    c.pass = res < tol && 2 * skipped <= n;
    return c;
}

CheckLine value_check(const char* name, double res, double tol, int samples = 1) {
    CheckLine c;
    c.name = name;
    c.samples = samples;
    c.max_residual = res;
    c.tolerance = tol;
    c.pass = res < tol;
    return c;
}

void echo_params(CheckReport& rep, const SuiteConfig& cfg) {
    auto put = [&](const char* k, const std::string& v) {
        rep.params.emplace_back(k, v);
    };
    put("N", std::to_string(cfg.mp.N));
    put("M", std::to_string(cfg.M));
    put("h", std::to_string(cfg.h));
    put("i", std::to_string(cfg.i));
    put("j", std::to_string(cfg.j));
    put("k", std::to_string(cfg.k));
    put("q", format_complex(cfg.mp.q));
    put("p", format_complex(cfg.mp.p));
    auto real_str = [](double v) {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%g", v);
        return std::string(buf);
    };
    put("tol_abs", real_str(cfg.tol.abs));
    put("tol_rel", real_str(cfg.tol.rel));
    put("trunc_theta", std::to_string(cfg.trunc.theta_terms));
    put("trunc_prod", std::to_string(cfg.trunc.prod_terms));
    put("trunc_series", std::to_string(cfg.trunc.series_lmax));
    put("samples", std::to_string(cfg.samples));
    put("r_max", std::to_string(cfg.r_max));
    put("seed", std::to_string(cfg.seed));
}

// Function-level Jacobi combination; identically zero for odd kernels.
template <class F>
cplx jacobi_sum(F&& f, cplx x, cplx y, cplx z) {
    return f(y / x) * (f(z / y) + f(z / x)) +
           f(z / y) * (f(x / z) + f(x / y)) +
           f(x / z) * (f(y / x) + f(y / z));
}

double fh_quadrature_radius(int N, double abs_q) {
    // first positive pole exponent of |x^2| on the h-limit ladders:
    // 2 for even N, 1 for odd N; the contour sits mid-sector
    return std::pow(abs_q, (N % 2 == 0) ? 0.5 : 0.25);
}

}  // namespace

CheckReport run_special_suite(const SuiteConfig& cfg) {
    cfg.mp.validate();
    CheckReport rep;
    rep.suite = "special";
    echo_params(rep, cfg);
    const TruncationConfig& tc = cfg.trunc;
    const double tol = cfg.tol.abs;
    const int n = cfg.samples;

    SampleGen gen(cfg.seed);
    struct ThetaPt {
        ThetaChar ch;
        cplx xi, tau;
    };
    const double chars[] = {0.0, 0.5, 1.0 / 3.0, -0.5, 1.0 / 6.0};
    std::vector<ThetaPt> tp(n);
    for (auto& t : tp) {
        t.ch.g1 = chars[size_t(gen.uniform(0.0, 5.0))];
        t.ch.g2 = chars[size_t(gen.uniform(0.0, 5.0))];
        t.xi = cplx(gen.uniform(-1.0, 1.0), gen.uniform(-0.4, 0.4));
        t.tau = cplx(gen.uniform(-0.5, 0.5), gen.uniform(0.25, 1.2));
    }
    const cplx i2pi(0.0, 2.0 * kPi);

    rep.add(sampled_check("theta_quasi_period_xi", n, tol, [&](int i) {
        const auto& t = tp[i];
        cplx lhs = theta_char(t.ch, t.xi + 1.0, t.tau, tc);
        cplx rhs = std::exp(i2pi * t.ch.g1) * theta_char(t.ch, t.xi, t.tau, tc);
        return std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs));
    }));
    rep.add(sampled_check("theta_quasi_period_tau", n, tol, [&](int i) {
        const auto& t = tp[i];
        cplx lhs = theta_char(t.ch, t.xi + t.tau, t.tau, tc);
        cplx fac = std::exp(-cplx(0.0, kPi) * t.tau - i2pi * (t.xi + t.ch.g2));
        cplx rhs = fac * theta_char(t.ch, t.xi, t.tau, tc);
        return std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs));
    }));
    rep.add(sampled_check("theta_half_char_odd", n, tol, [&](int i) {
        const auto& t = tp[i];
        ThetaChar half{0.5, 0.5};
        return std::abs(theta_char(half, -t.xi, t.tau, tc) +
                        theta_char(half, t.xi, t.tau, tc));
    }));

    std::vector<cplx> zs(n), nomes(n);
    for (int i = 0; i < n; ++i) {
        zs[i] = std::polar(gen.uniform(0.5, 1.8), gen.uniform(-3.0, 3.0));
        // |nome| <= 0.5 keeps the default 64-factor products fully converged
        nomes[i] = std::polar(gen.uniform(0.05, 0.5), gen.uniform(-0.6, 0.6));
    }
    rep.add(sampled_check("big_theta_shift", n, tol, [&](int i) {
        cplx z = zs[i], nm = nomes[i];
        return std::abs(big_theta(nm * z, nm, tc) + big_theta(z, nm, tc) / z);
    }));
    rep.add(sampled_check("big_theta_inversion", n, tol, [&](int i) {
        cplx z = zs[i], nm = nomes[i];
        return std::abs(big_theta(nm / z, nm, tc) - big_theta(z, nm, tc));
    }));
    rep.add(sampled_check("pochhammer_shift", n, tol, [&](int i) {
        cplx x = 0.7 * zs[i], b = nomes[i];
        return std::abs(q_pochhammer(x, b, tc) -
                        (1.0 - x) * q_pochhammer(x * b, b, tc));
    }));
    rep.add(sampled_check("pochhammer2_peel_row", n, tol, [&](int i) {
        cplx x = 0.7 * zs[i], b1 = nomes[i], b2 = 0.8 * nomes[(i + 1) % n];
        return std::abs(q_pochhammer2(x, b1, b2, tc) -
                        q_pochhammer(x, b2, tc) *
                            q_pochhammer2(x * b1, b1, b2, tc));
    }));

    std::vector<cplx> taus(n);
    for (int i = 0; i < n; ++i) taus[i] = gen.spectral_point(cfg.mp);
    const cplx qN = ipow(cfg.mp.q, cfg.mp.N);
    rep.add(sampled_check("tau_n_periodicity", n, tol, [&](int i) {
        return std::abs(tau_n(qN * taus[i], cfg.mp, tc) -
                        tau_n(taus[i], cfg.mp, tc));
    }));
    rep.add(sampled_check("tau_n_inversion", n, tol, [&](int i) {
        return std::abs(tau_n(1.0 / taus[i], cfg.mp, tc) *
                            tau_n(taus[i], cfg.mp, tc) -
                        1.0);
    }));
    rep.add(value_check("tau_n_at_one",
                        std::abs(tau_n(1.0, cfg.mp, tc) - 1.0), tol));
    rep.add(value_check(
        "kappa_inv_vanishing_point",
        std::abs(kappa_inv(ipow(cfg.mp.q, 2L * cfg.mp.N), cfg.mp, tc)), tol));

    std::vector<cplx> qs(n);
    for (int i = 0; i < n; ++i)
        qs[i] = std::polar(gen.uniform(0.2, 0.9), gen.uniform(-1.0, 1.0));
    rep.add(sampled_check("q_number_oddness", n, kTableExactTol, [&](int i) {
        double worst = 0.0;
        for (long r = 1; r <= 25; ++r)
            worst = std::max(worst, std::abs(q_number(r, qs[i]) +
                                             q_number(-r, qs[i])));
        return worst;
    }));
    rep.add(sampled_check("q_number_addition", n, tol, [&](int i) {
        cplx q = qs[i];
        long a = 1 + i % 7, b = 2 + i % 5;
        return std::abs(q_number(a + b, q) - (q_number(a, q) * ipow(q, b) +
                                              q_number(b, q) * ipow(q, -a)));
    }));

    return rep;
}

CheckReport run_rmatrix_suite(const SuiteConfig& cfg) {
    CheckReport rep =
        verify_properties(cfg.mp, cfg.trunc, cfg.tol, cfg.samples, cfg.seed);
    rep.params.clear();
    echo_params(rep, cfg);
    return rep;
}

CheckReport run_structure_suite(const SuiteConfig& cfg) {
    cfg.mp.validate();
    CheckReport rep;
    rep.suite = "structure";
    echo_params(rep, cfg);
    const TruncationConfig& tc = cfg.trunc;
    const double tol = cfg.tol.abs;
    const int n = cfg.samples;
    const int N = cfg.mp.N;

    ModularParams crit = cfg.mp;
    crit.c = cplx(-double(N), 0.0);

    SampleGen gen(cfg.seed);
    std::vector<cplx> xs(n);
    for (auto& x : xs) x = gen.structure_point(cfg.mp);
    std::vector<std::array<cplx, 3>> triples(n);
    for (auto& t : triples)
        t = {gen.structure_point(cfg.mp), gen.structure_point(cfg.mp),
             gen.structure_point(cfg.mp)};

    rep.add(sampled_check("t_critical", n, tol, [&](int i) {
        return std::abs(t_function(xs[i], crit, tc) - 1.0);
    }));
    rep.add(sampled_check("m_critical", n, tol, [&](int i) {
        return max_abs_diff(m_function(xs[i], crit, tc),
                            CMatrix::identity(N * N));
    }));
    rep.add(sampled_check("m_derivative_vanishes", n, kFdDerivTolerance,
                          [&](int i) {
        // small enough that the curvature term stays under the tolerance
        // even at awkward sample points, large enough to sit well above
        // the rounding floor of the theta sums
        const double d = 1e-4;
        ModularParams up = cfg.mp, dn = cfg.mp;
        up.c = cplx(-double(N) + d, 0.0);
        dn.c = cplx(-double(N) - d, 0.0);
        CMatrix diff = m_function(xs[i], up, tc) - m_function(xs[i], dn, tc);
        diff *= cplx(1.0 / (2.0 * d), 0.0);
        return max_abs(diff);
    }));
    rep.add(sampled_check("f_matches_dt_dc", n, kFdMatchTolerance, [&](int i) {
        const double d = 1e-4;
        ModularParams up = cfg.mp, dn = cfg.mp;
        up.c = cplx(-double(N) + d, 0.0);
        dn.c = cplx(-double(N) - d, 0.0);
        cplx fd = (t_function(xs[i], up, tc) - t_function(xs[i], dn, tc)) /
                  (2.0 * d);
        cplx fv = f_function(xs[i], cfg.mp, tc);
        return std::abs(fd - fv) / std::abs(fv);
    }));
    rep.add(sampled_check("f_odd", n, tol, [&](int i) {
        return std::abs(f_function(1.0 / xs[i], cfg.mp, tc) +
                        f_function(xs[i], cfg.mp, tc));
    }));
    rep.add(sampled_check("f_jacobi_cyclic", n, tol, [&](int i) {
        auto f = [&](cplx u) { return f_function(u, cfg.mp, tc); };
        const auto& t = triples[i];
        return std::abs(jacobi_sum(f, t[0], t[1], t[2]));
    }));

    {
        SurfacePoint sp = solve_surface(N, cfg.M, cfg.mp.q, cfg.mp.p);
        double res = std::abs(ipow(-std::sqrt(sp.p), long(N) * cfg.M) -
                              cpow(sp.q, -sp.c - double(N)));
        rep.add(value_check("surface_residual", res, tol));
    }

    const cplx q = cfg.mp.q, p = cfg.mp.p;
    rep.add(sampled_check("y_period", n, tol, [&](int i) {
        return std::abs(y_exchange(N, cfg.M, xs[i] * ipow(q, N), q, p, tc) -
                        y_exchange(N, cfg.M, xs[i], q, p, tc));
    }));
    rep.add(sampled_check("y_cyclic_product", n, tol, [&](int i) {
        cplx prod = 1.0;
        for (int jj = 0; jj < N; ++jj)
            prod *= y_exchange(N, cfg.M, xs[i] * ipow(q, jj), q, p, tc);
        return std::abs(prod - 1.0);
    }));
    rep.add(sampled_check("y_inversion", n, tol, [&](int i) {
        return std::abs(y_exchange(N, cfg.M, 1.0 / xs[i], q, p, tc) *
                            y_exchange(N, cfg.M, xs[i], q, p, tc) -
                        1.0);
    }));
    if (N == 2) {
        rep.add(sampled_check("y_sl2_half_step", n, tol, [&](int i) {
            return std::abs(y_exchange(2, cfg.M, xs[i], q, p, tc) *
                                y_exchange(2, cfg.M, xs[i] * q, q, p, tc) -
                            1.0);
        }));
    }

    // Reported only: the conjectured closure Y(x) = F(M,x)/F(M,1/x) does not
    // hold numerically (the deviation is x-dependent); we track its size but
    // never gate on it.
    {
        CheckLine c = sampled_check("y_vs_f_ratio_deviation", n, tol, [&](int i) {
            cplx y = y_exchange(N, cfg.M, xs[i], q, p, tc);
            cplx fr = f_exchange(cfg.M, xs[i], cfg.mp, tc) /
                      f_exchange(cfg.M, 1.0 / xs[i], cfg.mp, tc);
            return std::abs(y / fr - 1.0);
        });
        c.informational = true;
        c.pass = true;
        rep.add(c);
    }

    return rep;
}

CheckReport run_classical_suite(const SuiteConfig& cfg) {
    cfg.mp.validate();
    CheckReport rep;
    rep.suite = "classical";
    echo_params(rep, cfg);
    const TruncationConfig& tc = cfg.trunc;
    const double tol = cfg.tol.abs;
    const int n = cfg.samples;
    const int N = cfg.mp.N;
    const cplx q = cfg.mp.q;
    const long m = std::labs(long(cfg.M));

    SampleGen gen(cfg.seed);
    std::vector<cplx> xs(n);
    for (auto& x : xs) x = gen.structure_point(cfg.mp);
    std::vector<std::array<cplx, 3>> triples(n);
    for (auto& t : triples)
        t = {gen.structure_point(cfg.mp), gen.structure_point(cfg.mp),
             gen.structure_point(cfg.mp)};

    // degeneration surfaces p = q^{Nh}; h = -1 has |p| > 1, which only
    // y_exchange (raw parameters) accepts
    for (int h : {1, 2, -1}) {
        cplx ph = ipow(q, long(N) * h);
        std::string name = "theorem4_y_is_one_h_" + std::to_string(h);
        rep.add(sampled_check(name.c_str(), n, tol, [&, ph](int i) {
            return std::abs(y_exchange(N, 1, xs[i], q, ph, tc) - 1.0);
        }));
    }

    // cover both parities, following the configured h where possible
    const int odd_h = (cfg.h % 2 != 0) ? cfg.h : 1;
    const int even_h = (cfg.h % 2 == 0) ? cfg.h : 2;
    for (int h : {odd_h, even_h}) {
        std::string oname = "fh_odd_h" + std::to_string(h);
        rep.add(sampled_check(oname.c_str(), n, tol, [&, h](int i) {
            return std::abs(f_h_function(1.0 / xs[i], N, cfg.M, h, q, tc) +
                            f_h_function(xs[i], N, cfg.M, h, q, tc));
        }));
        std::string jname = "fh_jacobi_h" + std::to_string(h);
        rep.add(sampled_check(jname.c_str(), n, tol, [&, h](int i) {
            auto f = [&](cplx u) { return f_h_function(u, N, cfg.M, h, q, tc); };
            const auto& t = triples[i];
            return std::abs(jacobi_sum(f, t[0], t[1], t[2]));
        }));
    }

    // even parity: f_h is a constant multiple of f, the constant being the
    // ratio of the printed prefactors
    {
        const double expect = -double(N) * N * m * (N * m + 1) * even_h / 2.0;
        rep.add(sampled_check("fh_even_over_f_constant", n, tol, [&](int i) {
            cplx ratio = f_h_function(xs[i], N, cfg.M, even_h, q, tc) /
                         f_function(xs[i], cfg.mp, tc);
            return std::abs(ratio - expect);
        }));
    }

    // quadrature modes of f_h against the printed h-limit tables: the mode
    // display drops the f_h normalization, so the measured ratio is -N h for
    // odd h and -N^2 m (N m + 1) h / 2 for even h
    {
        const double rho = fh_quadrature_radius(N, std::abs(q));
        const int rmax = cfg.r_max;
        for (int h : {odd_h, even_h}) {
            ModeCoeffTable tab = h_limit_table(N, cfg.M, h, q, rmax);
            auto fn = [&, h](cplx u) {
                return f_h_function(u, N, cfg.M, h, q, tc);
            };
            std::vector<cplx> quad = quadrature_mode_table(fn, rho, rmax);
            double expect = (h % 2 != 0)
                                ? -double(N) * h
                                : -double(N) * N * m * (N * m + 1) * h / 2.0;
            double res = 0.0;
            for (long r = 1; r <= rmax; ++r)
                res = std::max(res, std::abs(quad[size_t(r + rmax)] /
                                                 tab.at(r) -
                                             expect));
            std::string name = std::string("hlimit_quadrature_ratio_") +
                               ((h % 2 != 0) ? "odd" : "even");
            rep.add(value_check(name.c_str(), res, tol, rmax));
        }
    }

    return rep;
}

CheckReport run_modes_suite(const SuiteConfig& cfg) {
    cfg.mp.validate();
    CheckReport rep;
    rep.suite = "modes";
    echo_params(rep, cfg);
    const TruncationConfig& tc = cfg.trunc;
    const double tol = cfg.tol.abs;
    const int n = cfg.samples;
    const int N = cfg.mp.N;
    const cplx q = cfg.mp.q;
    const int rmax = cfg.r_max;

    const int hs_i = std::min(cfg.i, N), hs_j = std::min(cfg.j, N);
    std::vector<ModeCoeffTable> tables;
    tables.push_back(critical_k0_table(N, q, rmax));
    tables.push_back(sl2_sector_table(cfg.k, q, rmax));
    tables.push_back(higher_spin_k0_table(hs_i, hs_j, N, q, rmax));
    tables.push_back(h_limit_table(N, cfg.M, 1, q, rmax));
    tables.push_back(h_limit_table(N, cfg.M, 2, q, rmax));

    double c0 = 0.0, oddres = 0.0;
    for (const auto& t : tables) {
        c0 = std::max(c0, std::abs(t.at(0)));
        for (long r = 1; r <= rmax; ++r)
            oddres = std::max(oddres, std::abs(t.at(-r) + t.at(r)));
    }
    rep.add(value_check("table_zero_mode", c0,
                        std::min(tol, kTableExactTol), int(tables.size())));
    rep.add(value_check("table_oddness", oddres, std::min(tol, kTableExactTol),
                        int(tables.size())));

    {
        ModeCoeffTable a = sl2_sector_table(0, q, rmax);
        ModeCoeffTable b = critical_k0_table(2, q, rmax);
        double res = 0.0;
        for (long r = -rmax; r <= rmax; ++r)
            res = std::max(res, std::abs(a.at(r) - b.at(r)));
        rep.add(value_check("sl2_k0_matches_critical", res, tol));
    }
    {
        ModeCoeffTable central = higher_spin_k0_table(hs_i, N, N, q, rmax);
        double res = 0.0;
        for (long r = -rmax; r <= rmax; ++r)
            res = std::max(res, std::abs(central.at(r)));
        rep.add(value_check("higher_spin_centrality_table", res,
                            std::min(tol, kTableExactTol)));
    }
    {
        ModeCoeffTable a = h_limit_table(N, cfg.M, 2, q, rmax);
        ModeCoeffTable b = critical_k0_table(N, q, rmax);
        double res = 0.0;
        for (long r = -rmax; r <= rmax; ++r)
            res = std::max(res, std::abs(a.at(r) - b.at(r)));
        rep.add(value_check("h_even_table_matches_critical", res,
                            std::min(tol, kTableExactTol)));
    }

    // contour quadrature around the mid-sector circle reproduces the
    // analytic tables
    {
        ModeCoeffTable tab = critical_k0_table(N, q, rmax);
        auto fn = [&](cplx u) { return f_function(u, cfg.mp, tc); };
        std::vector<cplx> quad =
            quadrature_mode_table(fn, std::sqrt(std::abs(q)), rmax);
        double res = 0.0;
        for (long r = -rmax; r <= rmax; ++r)
            res = std::max(res, std::abs(quad[size_t(r + rmax)] - tab.at(r)));
        rep.add(value_check("quadrature_matches_critical", res, tol,
                            2 * rmax + 1));
    }
    {
        // mode magnitudes grow like |q|^{-2ks}, so compare relatively
        ModeCoeffTable tab = sl2_sector_table(cfg.k, q, rmax);
        ModularParams mp2 = cfg.mp;
        mp2.N = 2;
        auto fn = [&](cplx u) { return f_function(u, mp2, tc); };
        std::vector<cplx> quad = quadrature_mode_table(
            fn, std::pow(std::abs(q), cfg.k + 0.5), rmax);
        double res = 0.0;
        for (long r = -rmax; r <= rmax; ++r)
            res = std::max(res, std::abs(quad[size_t(r + rmax)] - tab.at(r)) /
                                    std::max(1.0, std::abs(tab.at(r))));
        rep.add(value_check("quadrature_matches_sl2_sector", res, tol,
                            2 * rmax + 1));
    }
    {
        // fixed higher-spin reference point (1,2) at N=3, contour |x| = 1
        ModeCoeffTable tab = higher_spin_k0_table(1, 2, 3, q, rmax);
        ModularParams mp3 = cfg.mp;
        mp3.N = 3;
        auto fn = [&](cplx u) {
            return classical_higher_spin_f(1, 2, u, mp3, tc);
        };
        std::vector<cplx> quad = quadrature_mode_table(fn, 1.0, rmax);
        double res = 0.0;
        for (long r = -rmax; r <= rmax; ++r)
            res = std::max(res, std::abs(quad[size_t(r + rmax)] - tab.at(r)));
        rep.add(value_check("quadrature_matches_higher_spin", res, tol,
                            2 * rmax + 1));
    }

    SampleGen gen(cfg.seed);
    std::vector<cplx> xs(n);
    for (auto& x : xs) x = gen.structure_point(cfg.mp);
    SurfacePoint sp = solve_surface(N, cfg.M, cfg.mp.q, cfg.mp.p);

    rep.add(sampled_check("s_n_centrality", n, tol, [&](int i) {
        double worst = 0.0;
        for (int ii = 1; ii < N; ++ii)
            worst = std::max(
                worst,
                std::abs(quantum_higher_spin_y(ii, N, xs[i], sp, tc) - 1.0));
        return worst;
    }));
    rep.add(sampled_check("double_exchange_inverse", n, tol, [&](int i) {
        return std::abs(quantum_higher_spin_y(hs_i, hs_j, xs[i], sp, tc) *
                            quantum_higher_spin_y(hs_j, hs_i, 1.0 / xs[i], sp,
                                                  tc) -
                        1.0);
    }));

    {
        ModeCoeffTable tab = critical_k0_table(N, q, rmax);
        FormalBracket b1 = bracket(tab, 3, -1);
        FormalBracket b2 = bracket(tab, -1, 3);
        double res = 0.0;
        for (const auto& t1 : b1.terms)
            for (const auto& t2 : b2.terms)
                if (t2.r == -t1.r) {
                    // same product of generators, opposite coefficient
                    res = std::max(res, std::abs(t1.coeff + t2.coeff));
                    if (t1.left_index != t2.right_index ||
                        t1.right_index != t2.left_index)
                        res = std::max(res, 1.0);
                }
        rep.add(value_check("bracket_antisymmetry", res,
                            std::min(tol, kTableExactTol),
                            int(b1.terms.size())));
    }

    return rep;
}

std::vector<CheckReport> run_suites(const std::string& which,
                                    const SuiteConfig& cfg) {
    std::vector<CheckReport> out;
    if (which == "special" || which == "all")
        out.push_back(run_special_suite(cfg));
    if (which == "rmatrix" || which == "all")
        out.push_back(run_rmatrix_suite(cfg));
    if (which == "structure" || which == "all")
        out.push_back(run_structure_suite(cfg));
    if (which == "classical" || which == "all")
        out.push_back(run_classical_suite(cfg));
    if (which == "modes" || which == "all")
        out.push_back(run_modes_suite(cfg));
    if (out.empty())
        throw DomainError("unknown suite: " + which);
    return out;
}

}  // namespace ellw
