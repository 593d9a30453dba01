#include "ellw/special.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

namespace ellw {

namespace {
constexpr double kPi = std::numbers::pi;

thread_local bool t_branch_flag = false;

std::string fmt_double(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}
}  // namespace

bool branch_flagged() { return t_branch_flag; }
void clear_branch_flag() { t_branch_flag = false; }

cplx principal_log(cplx z) {
    if (z == cplx(0.0, 0.0))
        throw DomainError("log of zero");
    // near the cut: negative real axis
    if (z.real() < 0.0 && std::abs(z.imag()) < kBranchMargin * std::abs(z.real()))
        t_branch_flag = true;
    return std::log(z);
}

cplx cpow(cplx z, cplx a) {
    if (a == cplx(0.0, 0.0)) return {1.0, 0.0};
    return std::exp(a * principal_log(z));
}

cplx ipow(cplx z, long n) {
    if (n < 0) return 1.0 / ipow(z, -n);
    cplx acc{1.0, 0.0};
    while (n) {
        if (n & 1) acc *= z;
        n >>= 1;
        z *= z;
    }
    return acc;
}

std::string format_complex(cplx v, int sig_digits) {
    std::string re = fmt_double(v.real(), sig_digits);
    std::string im = fmt_double(std::abs(v.imag()), sig_digits);
    char sign = std::signbit(v.imag()) ? '-' : '+';
    return re + sign + im + "i";
}

void ModularParams::validate() const {
    if (N < 2) throw DomainError("N must be >= 2");
    double aq = std::abs(q), ap = std::abs(p);
    if (!(aq > 0.0) || !(aq < 1.0))
        throw DomainError("q must satisfy 0 < |q| < 1, got |q| = " + fmt_double(aq, 6));
    if (!(ap > 0.0) || !(ap < 1.0))
        throw DomainError("p must satisfy 0 < |p| < 1, got |p| = " + fmt_double(ap, 6));
}

cplx theta_char(const ThetaChar& ch, cplx xi, cplx tau,
                const TruncationConfig& tc) {
    if (!(tau.imag() > 0.0))
        throw DomainError("theta_char requires Im tau > 0");
    const cplx ipi(0.0, kPi);
    const int T = tc.theta_terms;
    // grow |m| outward so the dominant central terms accumulate first
    cplx s = std::exp(ipi * (ch.g1 * ch.g1) * tau +
                      2.0 * ipi * ch.g1 * (xi + ch.g2));
    for (int m = 1; m <= T; ++m) {
        for (int sgn : {+1, -1}) {
            double mm = double(sgn * m) + ch.g1;
            s += std::exp(ipi * (mm * mm) * tau + 2.0 * ipi * mm * (xi + ch.g2));
        }
    }
    // first omitted terms on both sides bound the tail
    double tail = 0.0;
    for (int sgn : {+1, -1}) {
        double mm = double(sgn * (T + 1)) + ch.g1;
        double lg = -kPi * mm * mm * tau.imag() - 2.0 * kPi * mm * (xi + ch.g2).imag();
        tail += std::exp(lg);
    }
    if (tail > tc.tail_bound * std::max(1.0, std::abs(s)))
        throw TruncationError("theta_char tail " + fmt_double(tail, 3) +
                              " exceeds bound at " +
                              std::to_string(tc.theta_terms) + " terms");
    return s;
}

cplx q_pochhammer(cplx x, cplx base, const TruncationConfig& tc) {
    double ab = std::abs(base);
    if (!(ab < 1.0))
        throw DomainError("q_pochhammer requires |base| < 1");
    cplx r{1.0, 0.0};
    cplx bp{1.0, 0.0};
    for (int n = 0; n < tc.prod_terms; ++n) {
        r *= (1.0 - x * bp);
        bp *= base;
    }
    double tail = std::abs(x) * std::abs(bp) / (1.0 - ab);
    if (tail > tc.tail_bound)
        throw TruncationError("q_pochhammer tail " + fmt_double(tail, 3) +
                              " exceeds bound at " +
                              std::to_string(tc.prod_terms) + " factors");
    return r;
}

cplx q_pochhammer2(cplx x, cplx b1, cplx b2, const TruncationConfig& tc) {
    double a1 = std::abs(b1), a2 = std::abs(b2);
    if (!(a1 < 1.0) || !(a2 < 1.0))
        throw DomainError("q_pochhammer2 requires |b1| < 1 and |b2| < 1");
    cplx r{1.0, 0.0};
    cplx xm = x;
    int m = 0;
    for (; m < tc.prod_terms; ++m) {
        // remaining rows multiply to 1 + O(|xm|/(1-a1)(1-a2)); stop once flat
        if (std::abs(xm) / ((1.0 - a1) * (1.0 - a2)) < 1e-18) break;
        r *= q_pochhammer(xm, b2, tc);
        xm *= b1;
    }
    double tail = std::abs(xm) / ((1.0 - a1) * (1.0 - a2));
    if (tail > tc.tail_bound)
        throw TruncationError("q_pochhammer2 tail " + fmt_double(tail, 3) +
                              " exceeds bound at " +
                              std::to_string(tc.prod_terms) + " rows");
    return r;
}

cplx big_theta(cplx z, cplx nome, const TruncationConfig& tc) {
    if (z == cplx(0.0, 0.0))
        throw DomainError("big_theta argument must be nonzero");
    return q_pochhammer(z, nome, tc) * q_pochhammer(nome / z, nome, tc) *
           q_pochhammer(nome, nome, tc);
}

cplx kappa_inv(cplx z2, const ModularParams& mp, const TruncationConfig& tc) {
    mp.validate();
    if (z2 == cplx(0.0, 0.0))
        throw DomainError("kappa_inv argument must be nonzero");
    const cplx q = mp.q, p = mp.p;
    const cplx P = ipow(q, 2L * mp.N);
    const cplx q2 = q * q;
    const cplx y = z2;
    cplx num = q_pochhammer2(P / y, p, P, tc) * q_pochhammer2(q2 * y, p, P, tc) *
               q_pochhammer2(p / y, p, P, tc) *
               q_pochhammer2(p * P / q2 * y, p, P, tc);
    cplx den = q_pochhammer2(P * y, p, P, tc) * q_pochhammer2(q2 / y, p, P, tc) *
               q_pochhammer2(p * y, p, P, tc) *
               q_pochhammer2(p * P / q2 / y, p, P, tc);
    if (std::abs(den) < kPoleEps)
        throw PoleError("kappa_inv pole: denominator vanishes");
    return num / den;
}

cplx tau_n(cplx z, const ModularParams& mp, const TruncationConfig& tc) {
    mp.validate();
    if (z == cplx(0.0, 0.0))
        throw DomainError("tau_n argument must be nonzero");
    const cplx P = ipow(mp.q, 2L * mp.N);
    cplx den = big_theta(mp.q / (z * z), P, tc);
    if (std::abs(den) < kPoleEps)
        throw PoleError("tau_n pole: Theta(q z^{-2}) vanishes");
    return cpow(z, cplx(2.0 / mp.N - 2.0, 0.0)) *
           big_theta(mp.q * z * z, P, tc) / den;
}

cplx q_number(long r, cplx q) {
    cplx den = q - 1.0 / q;
    if (std::abs(den) < kPoleEps)
        throw DomainError("q_number undefined at q = +/-1");
    if (r == 0) return {0.0, 0.0};
    // compute the numerator from |r| so that [-r] = -[r] holds bit-exactly
    cplx a = ipow(q, r > 0 ? r : -r);
    cplx b = 1.0 / a;
    cplx numer = (r > 0) ? (a - b) : (b - a);
    return numer / den;
}

long int_part(double x) { return static_cast<long>(std::floor(x)); }

}  // namespace ellw
