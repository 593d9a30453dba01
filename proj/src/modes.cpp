#include "ellw/modes.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numbers>
#include <sstream>

#include "ellw/special.hpp"

namespace ellw {

namespace {
constexpr double kPi = std::numbers::pi;

ModeCoeffTable make_table(const std::string& kind, cplx q, int r_max) {
    if (r_max < 0) throw DomainError("mode table: r_max must be >= 0");
    ModeCoeffTable t;
    t.kind = kind;
    t.q = q;
    t.r_max = r_max;
    t.coeff.assign(size_t(2 * r_max + 1), cplx(0.0, 0.0));
    return t;
}
}  // namespace

std::vector<long> pole_ladder(int N, long cutoff) {
    if (N < 2) throw DomainError("pole_ladder: N must be >= 2");
    std::vector<long> out{0, 1};
    for (long l = 1; N * l - 1 <= cutoff; ++l)
        for (long d : {N * l - 1, N * l, N * l + 1})
            if (d <= cutoff) out.push_back(d);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

ModeCoeffTable critical_k0_table(int N, cplx q, int r_max) {
    if (N < 2) throw DomainError("critical_k0_table: N must be >= 2");
    ModeCoeffTable t = make_table("critical-k0", q, r_max);
    t.N = N;
    cplx lnq = principal_log(q);
    for (long r = -r_max; r <= r_max; ++r) {
        if (r == 0) continue;  // C_0 = 0
        t.coeff[size_t(r + r_max)] = -2.0 * (q - 1.0 / q) * lnq *
                                     q_number((N - 1) * r, q) * q_number(r, q) /
                                     q_number(N * r, q);
    }
    return t;
}

ModeCoeffTable sl2_sector_table(int k, cplx q, int s_max) {
    if (k < 0) throw DomainError("sl2_sector_table: k must be >= 0");
    ModeCoeffTable t = make_table("sl2-sector", q, s_max);
    t.N = 2;
    t.k = k;
    cplx lnq = principal_log(q);
    double sign = (k % 2 == 0) ? -1.0 : 1.0;  // (-1)^{k+1}
    for (long s = -s_max; s <= s_max; ++s) {
        if (s == 0) continue;
        cplx a = ipow(q, (2L * k + 1) * s);
        t.coeff[size_t(s + s_max)] =
            sign * 2.0 * lnq * (a - 1.0 / a) / (ipow(q, s) + ipow(q, -s));
    }
    return t;
}

ModeCoeffTable higher_spin_k0_table(int i, int j, int N, cplx q, int r_max) {
    if (N < 2) throw DomainError("higher_spin_k0_table: N must be >= 2");
    if (i < 1 || j < 1 || i > N || j > N)
        throw DomainError("higher_spin_k0_table: need 1 <= i, j <= N");
    ModeCoeffTable t = make_table("higher-spin-k0", q, r_max);
    t.N = N;
    t.i = i;
    t.j = j;
    cplx lnq = principal_log(q);
    const long hi = std::max(i, j), lo = std::min(i, j);
    for (long r = -r_max; r <= r_max; ++r) {
        if (r == 0) continue;
        // [(N - max)r] vanishes identically when max(i,j) = N: s_N is central
        t.coeff[size_t(r + r_max)] = -2.0 * (q - 1.0 / q) * lnq *
                                     q_number((N - hi) * r, q) *
                                     q_number(lo * r, q) / q_number(N * r, q);
    }
    return t;
}

ModeCoeffTable h_limit_table(int N, int M, int h, cplx q, int r_max) {
    if (N < 2) throw DomainError("h_limit_table: N must be >= 2");
    if (M == 0 || h == 0) throw DomainError("h_limit_table requires M, h != 0");
    if (h % 2 == 0) {
        // even parity collapses onto the critical table (same bytes)
        ModeCoeffTable t = critical_k0_table(N, q, r_max);
        t.kind = "h-limit";
        t.M = M;
        t.h = h;
        return t;
    }
    ModeCoeffTable t = make_table("h-limit", q, r_max);
    t.N = N;
    t.M = M;
    t.h = h;
    const long m = std::labs(long(M));
    long A = int_part(N * m / 2.0);
    A = A * (A + 1);
    long B = int_part((N * m + 1) / 2.0);
    B = B * B;
    cplx lnq = principal_log(q);
    for (long r = -r_max; r <= r_max; ++r) {
        if (r == 0) continue;
        cplx qr = q_number(r, q), qNr = q_number(N * r, q);
        t.coeff[size_t(r + r_max)] =
            -2.0 * (q - 1.0 / q) * lnq *
            (-double(B) * qr * qr / qNr +
             double(A) * q_number((N - 1) * r, q) * qr / qNr);
    }
    return t;
}

FormalBracket bracket(const ModeCoeffTable& table, long n, long m) {
    FormalBracket b;
    b.n = n;
    b.m = m;
    std::ostringstream disp;
    disp << "{t_" << n << ", t_" << m << "} =";
    bool any = false;
    for (long r = -table.r_max; r <= table.r_max; ++r) {
        cplx c = table.at(r);
        if (std::abs(c) == 0.0) continue;
        b.terms.push_back({r, c, n - 2 * r, m + 2 * r});
        if (!any) disp << " ";
        else disp << " + ";
        disp << "(" << format_complex(c, 6) << ") t_" << n - 2 * r << " t_"
             << m + 2 * r;
        any = true;
    }
    if (!any) disp << " 0";
    b.display = disp.str();
    return b;
}

cplx classical_higher_spin_f(int i, int j, cplx x, const ModularParams& mp,
                             const TruncationConfig& tc) {
    if (i < 1 || j < 1)
        throw DomainError("classical_higher_spin_f: need i, j >= 1");
    cplx tot = 0.0;
    for (int du = 0; du < i; ++du) {
        for (int dv = 0; dv < j; ++dv) {
            double u = -(i - 1) / 2.0 + du;
            double v = -(j - 1) / 2.0 + dv;
            tot += f_function(cpow(mp.q, cplx(v - u, 0.0)) * x, mp, tc);
        }
    }
    return tot;
}

cplx quantum_higher_spin_y(int i, int j, cplx x, const SurfacePoint& sp,
                           const TruncationConfig& tc) {
    if (i < 1 || j < 1)
        throw DomainError("quantum_higher_spin_y: need i, j >= 1");
    sp.validate();
    cplx tot = 1.0;
    for (int du = 0; du < i; ++du) {
        for (int dv = 0; dv < j; ++dv) {
            double u = -(i - 1) / 2.0 + du;
            double v = -(j - 1) / 2.0 + dv;
            tot *= y_exchange(sp.N, sp.M, cpow(sp.q, cplx(v - u, 0.0)) * x,
                              sp.q, sp.p, tc);
        }
    }
    return tot;
}

cplx laurent_coeff(const std::function<cplx(cplx)>& fn, double radius, long s,
                   int nodes) {
    if (!(radius > 0.0)) throw DomainError("laurent_coeff: radius must be > 0");
    if (nodes < 4) throw DomainError("laurent_coeff: too few nodes");
    cplx acc = 0.0;
    for (int jn = 0; jn < nodes; ++jn) {
        double th = 2.0 * kPi * jn / nodes;
        acc += fn(std::polar(radius, th)) *
               std::exp(cplx(0.0, -2.0 * s * th));
    }
    return acc / std::pow(radius, 2.0 * s) / double(nodes);
}

cplx quadrature_mode(const std::function<cplx(cplx)>& fn, double radius, long s,
                     int nodes) {
    // the contour picks up a_s from x^{2s}; the bracket coefficient is the
    // antisymmetric combination
    return (laurent_coeff(fn, radius, -s, nodes) -
            laurent_coeff(fn, radius, s, nodes)) /
           2.0;
}

std::vector<cplx> quadrature_mode_table(const std::function<cplx(cplx)>& fn,
                                        double radius, int r_max, int nodes) {
    if (!(radius > 0.0))
        throw DomainError("quadrature_mode_table: radius must be > 0");
    if (nodes < 4) throw DomainError("quadrature_mode_table: too few nodes");
    // evaluate the kernel once per node, reuse across all modes
    std::vector<cplx> vals(nodes);
    std::exception_ptr fatal;
#pragma omp parallel for schedule(static)
    for (int jn = 0; jn < nodes; ++jn) {
        try {
            vals[jn] = fn(std::polar(radius, 2.0 * kPi * jn / nodes));
        } catch (...) {
#pragma omp critical
            if (!fatal) fatal = std::current_exception();
        }
    }
    if (fatal) std::rethrow_exception(fatal);
    std::vector<cplx> a(size_t(2 * r_max + 1));
    for (long s = -r_max; s <= r_max; ++s) {
        cplx acc = 0.0;
        for (int jn = 0; jn < nodes; ++jn) {
            double th = 2.0 * kPi * jn / nodes;
            acc += vals[jn] * std::exp(cplx(0.0, -2.0 * s * th));
        }
        a[size_t(s + r_max)] = acc / std::pow(radius, 2.0 * s) / double(nodes);
    }
    std::vector<cplx> out(size_t(2 * r_max + 1));
    for (long s = -r_max; s <= r_max; ++s)
        out[size_t(s + r_max)] =
            (a[size_t(-s + r_max)] - a[size_t(s + r_max)]) / 2.0;
    return out;
}

}  // namespace ellw
