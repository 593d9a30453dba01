#include "ellw/structure.hpp"

#include <cmath>

#include "ellw/rmatrix.hpp"
#include "ellw/special.hpp"

namespace ellw {

namespace {

// One ladder rung: 2a/(1-a) - a q^2/(1-a q^2) - a q^-2/(1-a q^-2).
cplx rung(cplx a, cplx q2, cplx qm2) {
    cplx d0 = 1.0 - a, d1 = 1.0 - a * q2, d2 = 1.0 - a * qm2;
    if (std::abs(d0) < kPoleEps || std::abs(d1) < kPoleEps ||
        std::abs(d2) < kPoleEps)
        throw PoleError("structure series: ladder denominator vanishes");
    return 2.0 * a / d0 - a * q2 / d1 - a * qm2 / d2;
}

// Geometric ladder sum_{l>=0} rung(y q^{2Nl+shift}) with tail control.
cplx ladder_sum(cplx y, int shift, int N, cplx q, const TruncationConfig& tc) {
    const cplx q2 = q * q, qm2 = 1.0 / q2;
    const cplx step = ipow(q, 2L * N);
    cplx a = y * ipow(q, shift);
    cplx s = 0.0;
    for (int l = 0; l <= tc.series_lmax; ++l) {
        s += rung(a, q2, qm2);
        a *= step;
    }
    double tail = 4.0 * std::abs(a) / (1.0 - std::abs(step));
    if (tail > tc.tail_bound * std::max(1.0, std::abs(s)))
        throw TruncationError("structure series tail exceeds bound at lmax = " +
                              std::to_string(tc.series_lmax));
    return s;
}

// Boundary combination D0(y) = 2y/(1-y) - y q^2/(1-y q^2) - y q^-2/(1-y q^-2).
cplx boundary(cplx y, cplx q) { return rung(y, q * q, 1.0 / (q * q)); }

}  // namespace

cplx t_function(cplx x, const ModularParams& mp, const TruncationConfig& tc) {
    mp.validate();
    if (!mp.c) throw DomainError("t_function requires the level c");
    const cplx c = *mp.c;
    const cplx sq = std::sqrt(mp.q);
    const cplx qs = cpow(mp.q, cplx(0.5, 0.0) - c);
    return tau_n(sq / x, mp, tc) * tau_n(qs * x, mp, tc) /
           (tau_n(sq * x, mp, tc) * tau_n(qs / x, mp, tc));
}

CMatrix m_function(cplx x, const ModularParams& mp, const TruncationConfig& tc) {
    mp.validate();
    if (!mp.c) throw DomainError("m_function requires the level c");
    const int N = mp.N;
    const cplx c = *mp.c;

    CMatrix R21x = swap_factors(build_r(x, mp, tc), N);
    CMatrix R21s = swap_factors(build_r(cpow(mp.q, c + double(N)) * x, mp, tc), N);
    CMatrix R12inv = inverse(build_r(1.0 / x, mp, tc));
    CMatrix R12s = build_r(cpow(mp.q, c) / x, mp, tc);

    CMatrix A = partial_transpose_second(R21x * inverse(R21s) * R12inv, N);
    CMatrix B = A * partial_transpose_second(R12s, N);
    return partial_transpose_second(B, N);
}

cplx f_function(cplx x, const ModularParams& mp, const TruncationConfig& tc) {
    mp.validate();
    cplx lnq = principal_log(mp.q);
    cplx y = x * x;
    auto half = [&](cplx u) {
        cplx s = ladder_sum(u, 0, mp.N, mp.q, tc);
        return s - 0.5 * boundary(u, mp.q);
    };
    return -2.0 * lnq * (half(y) - half(1.0 / y));
}

cplx f_exchange(int M, cplx x, const ModularParams& mp,
                const TruncationConfig& tc) {
    mp.validate();
    if (M == 0) throw DomainError("f_exchange requires M != 0");
    const cplx q = mp.q, p = mp.p;
    const cplx P = ipow(q, 2L * mp.N);
    const cplx q2 = q * q;
    const cplx x2 = x * x;
    if (M > 0) {
        cplx r = ipow(q, 2L * M * (mp.N - 1));
        for (int k = 0; k < mp.N * M; ++k) {
            cplx pk = ipow(p, k), pmk = ipow(p, -k);
            cplx den = big_theta(q2 * pmk / x2, P, tc) *
                       big_theta(x2 * q2 * pk, P, tc);
            if (std::abs(den) < kPoleEps)
                throw PoleError("f_exchange: Theta factor vanishes");
            r *= big_theta(pmk / x2, P, tc) * big_theta(x2 * pk, P, tc) / den;
        }
        return r;
    }
    const int Ma = -M;
    cplx r = ipow(q, -2L * Ma * (mp.N - 1));
    for (int k = 1; k <= mp.N * Ma; ++k) {
        cplx pk = ipow(p, k), pmk = ipow(p, -k);
        cplx den = big_theta(pk / x2, P, tc) * big_theta(x2 * pmk, P, tc);
        if (std::abs(den) < kPoleEps)
            throw PoleError("f_exchange: Theta factor vanishes");
        r *= big_theta(q2 * pk / x2, P, tc) * big_theta(x2 * q2 * pmk, P, tc) / den;
    }
    return r;
}

cplx y_exchange(int N, int M, cplx x, cplx q, cplx p,
                const TruncationConfig& tc) {
    if (N < 2) throw DomainError("y_exchange: N must be >= 2");
    if (M == 0) throw DomainError("y_exchange requires M != 0");
    const cplx P = ipow(q, 2L * N);
    if (!(std::abs(P) < 1.0))
        throw DomainError("y_exchange requires |q^{2N}| < 1");
    const cplx q2 = q * q;
    const cplx x2 = x * x;
    const int kmax = M > 0 ? N * M : N * (-M) - 1;
    cplx r{1.0, 0.0};
    for (int k = 1; k <= kmax; ++k) {
        cplx pk = ipow(p, k), pmk = ipow(p, -k);
        cplx tn = big_theta(x2 * pmk, P, tc);
        cplx den = big_theta(x2 * pk, P, tc);
        cplx den2 = big_theta(x2 * q2 * pmk, P, tc) *
                    big_theta(x2 / q2 * pmk, P, tc);
        if (std::abs(den) < kPoleEps || std::abs(den2) < kPoleEps)
            throw PoleError("y_exchange: Theta factor vanishes");
        r *= tn * tn * big_theta(x2 * q2 * pk, P, tc) *
             big_theta(x2 / q2 * pk, P, tc) / (den * den) / den2;
    }
    return r;
}

cplx f_h_function(cplx x, int N, int M, int h, cplx q,
                  const TruncationConfig& tc) {
    if (N < 2) throw DomainError("f_h_function: N must be >= 2");
    if (M == 0 || h == 0) throw DomainError("f_h_function requires M, h != 0");
    const long m = std::labs(long(M));
    const cplx lnq = principal_log(q);
    cplx pref;
    long A = 0, B = 0;
    const bool odd = (h % 2) != 0;
    if (odd) {
        A = int_part(N * m / 2.0);
        A = A * (A + 1);
        B = int_part((N * m + 1) / 2.0);
        B = B * B;
        pref = 2.0 * N * h * lnq;
    } else {
        pref = double(N) * N * m * (N * m + 1) * double(h) * lnq;
    }
    auto half = [&](cplx y) {
        if (odd)
            return double(A) * ladder_sum(y, 0, N, q, tc) +
                   double(B) * ladder_sum(y, N, N, q, tc) -
                   0.5 * double(A) * boundary(y, q);
        return ladder_sum(y, 0, N, q, tc) - 0.5 * boundary(y, q);
    };
    cplx y = x * x;
    return pref * (half(y) - half(1.0 / y));
}

void SurfacePoint::validate() const {
    if (N < 2) throw DomainError("SurfacePoint: N must be >= 2");
    double aq = std::abs(q), ap = std::abs(p);
    if (!(aq > 0.0 && aq < 1.0 && ap > 0.0 && ap < 1.0))
        throw DomainError("SurfacePoint requires 0 < |q| < 1 and 0 < |p| < 1");
}

SurfacePoint solve_surface(int N, int M, cplx q, cplx p) {
    SurfacePoint sp;
    sp.N = N;
    sp.M = M;
    sp.q = q;
    sp.p = p;
    sp.c = -double(N) -
           double(N) * M * principal_log(-std::sqrt(p)) / principal_log(q);
    sp.validate();
    return sp;
}

}  // namespace ellw
