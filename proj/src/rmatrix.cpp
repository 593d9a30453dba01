#include "ellw/rmatrix.hpp"

#include <cmath>
#include <exception>
#include <numbers>
#include <vector>

#include "ellw/rng.hpp"
#include "ellw/special.hpp"

namespace ellw {

namespace {
constexpr double kPi = std::numbers::pi;
const cplx kIPi(0.0, kPi);
}  // namespace

Elementary elementary_matrices(int N) {
    if (N < 2) throw DomainError("elementary_matrices: N must be >= 2");
    Elementary e;
    e.omega = std::exp(cplx(0.0, 2.0 * kPi / N));
    e.g = CMatrix(N, N);
    e.h = CMatrix(N, N);
    for (int i = 0; i < N; ++i) {
        e.g.at(i, i) = ipow(e.omega, i);
        e.h.at(i, (i + 1) % N) = 1.0;
    }
    return e;
}

CMatrix weyl_monomial(int N, int a1, int a2) {
    Elementary e = elementary_matrices(N);
    CMatrix m = CMatrix::identity(N);
    for (int k = 0; k < ((a2 % N) + N) % N; ++k) m = m * e.g;
    for (int k = 0; k < ((a1 % N) + N) % N; ++k) m = m * e.h;
    return m;
}

cplx weight_w(int N, int a1, int a2, cplx xi, cplx zeta, cplx tau,
              const TruncationConfig& tc) {
    ThetaChar ch{0.5 + double(a1) / N, 0.5 + double(a2) / N};
    cplx den = theta_char(ch, zeta / double(N), tau, tc);
    if (std::abs(den) < kPoleEps)
        throw PoleError("weight_w: characteristic theta vanishes at zeta/N");
    return theta_char(ch, xi + zeta / double(N), tau, tc) / den / double(N);
}

CMatrix build_r_tilde(cplx z, const ModularParams& mp,
                      const TruncationConfig& tc) {
    mp.validate();
    const int N = mp.N;
    cplx xi = principal_log(z) / kIPi;
    cplx zeta = principal_log(mp.q) / kIPi;
    cplx tau = principal_log(mp.p) / (2.0 * kIPi);

    cplx den = theta_char({0.5, 0.5}, xi + zeta, tau, tc);
    if (std::abs(den) < kPoleEps)
        throw PoleError("build_r_tilde: theta[1/2;1/2](xi+zeta) vanishes");
    cplx pref = cpow(z, cplx(2.0 / N - 2.0, 0.0)) * kappa_inv(z * z, mp, tc) *
                theta_char({0.5, 0.5}, zeta, tau, tc) / den;

    CMatrix R(N * N, N * N);
    for (int a1 = 0; a1 < N; ++a1) {
        for (int a2 = 0; a2 < N; ++a2) {
            cplx w = weight_w(N, a1, a2, xi, zeta, tau, tc);
            CMatrix I = weyl_monomial(N, a1, a2);
            // I is unitary (monomial with unimodular entries), so the
            // inverse is the adjoint
            R += w * kron(I, adjoint(I));
        }
    }
    R *= pref;
    return R;
}

CMatrix gauge_transform(const CMatrix& rt, const ModularParams& mp) {
    const int N = mp.N;
    CMatrix gh(N, N), ghi(N, N);
    for (int i = 0; i < N; ++i) {
        gh.at(i, i) = std::exp(cplx(0.0, kPi * i / N));
        ghi.at(i, i) = std::exp(cplx(0.0, -kPi * i / N));
    }
    return kron(gh, gh) * rt * kron(ghi, ghi);
}

CMatrix build_r(cplx z, const ModularParams& mp, const TruncationConfig& tc) {
    return gauge_transform(build_r_tilde(z, mp, tc), mp);
}

CMatrix build_r_hat(cplx z, const ModularParams& mp,
                    const TruncationConfig& tc) {
    cplx scale = tau_n(std::sqrt(mp.q) / z, mp, tc);
    CMatrix r = build_r(z, mp, tc);
    r *= scale;
    return r;
}

PropertyResiduals property_residuals(cplx z, cplx w, const ModularParams& mp,
                                     const TruncationConfig& tc) {
    const int N = mp.N;
    const CMatrix I2 = CMatrix::identity(N * N);
    Elementary el = elementary_matrices(N);

    CMatrix Rz = build_r(z, mp, tc);
    CMatrix Rw = build_r(w, mp, tc);
    CMatrix Rwz = build_r(w / z, mp, tc);

    CMatrix L = embed_pair(Rz, N, "12") * embed_pair(Rw, N, "13") *
                embed_pair(Rwz, N, "23");
    CMatrix Rr = embed_pair(Rwz, N, "23") * embed_pair(Rw, N, "13") *
                 embed_pair(Rz, N, "12");
    double ybe = max_abs_diff(L, Rr);

    double uni = max_abs_diff(Rz * swap_factors(build_r(1.0 / z, mp, tc), N), I2);

    cplx qmN = cpow(mp.q, cplx(-double(N), 0.0));
    double cro = max_abs_diff(
        partial_transpose_second(Rz, N) *
            partial_transpose_second(swap_factors(build_r(qmN / z, mp, tc), N), N),
        I2);

    CMatrix Rmz = build_r(-z, mp, tc);
    CMatrix gi1 = kron(inverse(el.g), CMatrix::identity(N));
    CMatrix g1 = kron(el.g, CMatrix::identity(N));
    double anti = max_abs_diff(Rmz, el.omega * (gi1 * Rz * g1));

    // conjugator g^{1/2} h g^{1/2} acting on the first site
    CMatrix gh(N, N);
    for (int i = 0; i < N; ++i) gh.at(i, i) = std::exp(cplx(0.0, kPi * i / N));
    CMatrix C = kron(gh * el.h * gh, CMatrix::identity(N));
    CMatrix lhs = build_r_hat(-std::sqrt(mp.p) * z, mp, tc);
    CMatrix rhs =
        inverse(C) * inverse(swap_factors(build_r_hat(1.0 / z, mp, tc), N)) * C;
    double qua = max_abs_diff(lhs, rhs);

    return {ybe, uni, cro, anti, qua};
}

CheckReport verify_properties(const ModularParams& mp,
                              const TruncationConfig& tc, const Tolerance& tol,
                              int samples, std::uint64_t seed) {
    mp.validate();
    const int N = mp.N;
    CheckReport rep;
    rep.suite = "rmatrix";

    // deterministic pre-generation, then an order-independent max-reduction
    SampleGen gen(seed);
    std::vector<std::pair<cplx, cplx>> pts;
    pts.reserve(samples);
    for (int i = 0; i < samples; ++i) pts.push_back(gen.spectral_pair(mp));

    double ybe = 0.0, uni = 0.0, cro = 0.0, anti = 0.0, qua = 0.0;
    int skipped = 0;
    std::exception_ptr fatal;  // exceptions may not escape the parallel region
#pragma omp parallel for schedule(dynamic) \
    reduction(max : ybe, uni, cro, anti, qua) reduction(+ : skipped)
    for (int i = 0; i < samples; ++i) {
        try {
            PropertyResiduals r =
                property_residuals(pts[i].first, pts[i].second, mp, tc);
            ybe = std::max(ybe, r.yang_baxter);
            uni = std::max(uni, r.unitarity);
            cro = std::max(cro, r.crossing);
            anti = std::max(anti, r.antisymmetry);
            qua = std::max(qua, r.quasi_periodicity);
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

    auto line = [&](const char* name, double res) {
        CheckLine c;
        c.name = name;
        c.samples = samples;
        c.skipped = skipped;
        c.max_residual = res;
        c.tolerance = tol.abs;
        c.pass = res < tol.abs && skipped * 2 <= samples;
        rep.add(c);
    };
    line("yang_baxter", ybe);
    line("unitarity", uni);
    line("crossing", cro);
    line("antisymmetry", anti);
    line("quasi_periodicity", qua);

    // structural identities of the building blocks (sample-free)
    {
        Elementary el = elementary_matrices(N);
        double weyl = max_abs_diff(el.h * el.g, el.omega * (el.g * el.h));
        CheckLine c;
        c.name = "weyl_relation";
        c.samples = 1;
        c.max_residual = weyl;
        c.tolerance = tol.abs;
        c.pass = weyl < tol.abs;
        rep.add(c);

        double hN = max_abs_diff(weyl_monomial(N, N, 0), CMatrix::identity(N));
        double gN = max_abs_diff(weyl_monomial(N, 0, N), CMatrix::identity(N));
        CheckLine c2;
        c2.name = "monomial_order_n";
        c2.samples = 1;
        c2.max_residual = std::max(hN, gN);
        c2.tolerance = tol.abs;
        c2.pass = c2.max_residual < tol.abs;
        rep.add(c2);

        // I_{(a1,a2)}^{-1} = omega^{a1 a2} I_{(-a1,-a2)}
        double phase = 0.0;
        for (int a1 = 0; a1 < N; ++a1)
            for (int a2 = 0; a2 < N; ++a2)
                phase = std::max(
                    phase,
                    max_abs_diff(inverse(weyl_monomial(N, a1, a2)),
                                 ipow(el.omega, long(a1) * a2) *
                                     weyl_monomial(N, -a1, -a2)));
        CheckLine c3;
        c3.name = "monomial_inverse_phase";
        c3.samples = N * N;
        c3.max_residual = phase;
        c3.tolerance = tol.abs;
        c3.pass = phase < tol.abs;
        rep.add(c3);
    }

    // weights at xi = 0 collapse to 1/N
    {
        cplx zeta = principal_log(mp.q) / kIPi;
        cplx tau = principal_log(mp.p) / (2.0 * kIPi);
        double res = 0.0;
        for (int a1 = 0; a1 < N; ++a1)
            for (int a2 = 0; a2 < N; ++a2)
                res = std::max(res, std::abs(weight_w(N, a1, a2, cplx(0.0, 0.0),
                                                      zeta, tau, tc) -
                                             1.0 / double(N)));
        CheckLine c;
        c.name = "weight_normalization";
        c.samples = N * N;
        c.max_residual = res;
        c.tolerance = tol.abs;
        c.pass = res < tol.abs;
        rep.add(c);
    }

    // Z_N symmetry of the ungauged matrix at one spectral point
    {
        SampleGen g2(seed + 1);
        cplx z = g2.spectral_point(mp);
        CMatrix Rt = build_r_tilde(z, mp, tc);
        double res = 0.0;
        for (int a = 0; a < N; ++a)
         for (int b = 0; b < N; ++b)
          for (int c = 0; c < N; ++c)
           for (int d = 0; d < N; ++d)
            for (int s = 1; s < N; ++s)
                res = std::max(
                    res, std::abs(Rt.at(((a + s) % N) * N + (b + s) % N,
                                        ((c + s) % N) * N + (d + s) % N) -
                                  Rt.at(a * N + b, c * N + d)));
        CheckLine c;
        c.name = "zn_symmetry";
        c.samples = 1;
        c.max_residual = res;
        c.tolerance = tol.abs;
        c.pass = res < tol.abs;
        rep.add(c);
    }

    return rep;
}

}  // namespace ellw
