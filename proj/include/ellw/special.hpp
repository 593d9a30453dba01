#pragma once

#include "ellw/types.hpp"

namespace ellw {

// theta[g1; g2](xi, tau) = sum_m exp(i pi (m+g1)^2 tau + 2 i pi (m+g1)(xi+g2)),
// Im tau > 0.  Bilateral sum over |m| <= tc.theta_terms with a tail check on
// the first omitted term of each side.
cplx theta_char(const ThetaChar& ch, cplx xi, cplx tau,
                const TruncationConfig& tc = {});

// (x; b)_inf = prod_{n>=0} (1 - x b^n), |b| < 1.
cplx q_pochhammer(cplx x, cplx base, const TruncationConfig& tc = {});

// (x; b1, b2)_inf = prod_{m,n>=0} (1 - x b1^m b2^n), |b1|,|b2| < 1.
cplx q_pochhammer2(cplx x, cplx b1, cplx b2, const TruncationConfig& tc = {});

// Theta_p(z) = (z; p)_inf (p/z; p)_inf (p; p)_inf.
cplx big_theta(cplx z, cplx nome, const TruncationConfig& tc = {});

// 1/kappa(y) as a ratio of eight double q-Pochhammer symbols with bases
// (p, q^{2N}); the argument is y = z^2.
cplx kappa_inv(cplx z2, const ModularParams& mp,
               const TruncationConfig& tc = {});

// tau_N(z) = z^{2/N-2} Theta_{q^{2N}}(q z^2) / Theta_{q^{2N}}(q z^{-2}).
cplx tau_n(cplx z, const ModularParams& mp, const TruncationConfig& tc = {});

// [r]_q = (q^r - q^{-r}) / (q - q^{-1}).  Exactly odd in r.
cplx q_number(long r, cplx q);

// E(x): integer part (floor on the values that arise here, which are >= 0).
long int_part(double x);

}  // namespace ellw
