#pragma once

#include <cstdint>

#include "ellw/cmatrix.hpp"
#include "ellw/report.hpp"
#include "ellw/types.hpp"

namespace ellw {

struct Elementary {
    CMatrix g, h;   // g = diag(omega^i), h: cyclic shift  h[i][(i+1) mod N] = 1
    cplx omega;     // exp(2 i pi / N)
};

Elementary elementary_matrices(int N);

// I_{(a1,a2)} = g^{a2} h^{a1}; unitary monomial matrix.
CMatrix weyl_monomial(int N, int a1, int a2);

// W_{(a1,a2)}(xi, zeta, tau) = (1/N) theta[1/2+a1/N; 1/2+a2/N](xi + zeta/N, tau)
//                                  / theta[same](zeta/N, tau)
cplx weight_w(int N, int a1, int a2, cplx xi, cplx zeta, cplx tau,
              const TruncationConfig& tc = {});

// Z_N-symmetric vertex R-matrix on C^N (x) C^N, basis (a,b) -> a*N + b:
//   Rt(z) = z^{2/N-2} / kappa(z^2) * theta[1/2;1/2](zeta) / theta[1/2;1/2](xi+zeta)
//           * sum_alpha W_alpha I_alpha (x) I_alpha^{-1}
// with xi = Log z / (i pi), zeta = Log q / (i pi), tau = Log p / (2 i pi).
CMatrix build_r_tilde(cplx z, const ModularParams& mp,
                      const TruncationConfig& tc = {});

// R = (g^{1/2} (x) g^{1/2}) Rt (g^{-1/2} (x) g^{-1/2}),
// g^{1/2} = diag(exp(i pi i / N)).
CMatrix gauge_transform(const CMatrix& rt, const ModularParams& mp);

CMatrix build_r(cplx z, const ModularParams& mp,
                const TruncationConfig& tc = {});

// Rhat(z) = tau_N(q^{1/2} z^{-1}) R(z)
CMatrix build_r_hat(cplx z, const ModularParams& mp,
                    const TruncationConfig& tc = {});

// Residuals of the five defining properties at one pair of spectral points.
struct PropertyResiduals {
    double yang_baxter, unitarity, crossing, antisymmetry, quasi_periodicity;
};
PropertyResiduals property_residuals(cplx z, cplx w, const ModularParams& mp,
                                     const TruncationConfig& tc = {});

// Five defining properties (Yang-Baxter, unitarity, crossing, antisymmetry,
// quasi-periodicity) plus the structural identities of the weights, sampled
// at `samples` branch-safe spectral points.
CheckReport verify_properties(const ModularParams& mp,
                              const TruncationConfig& tc, const Tolerance& tol,
                              int samples, std::uint64_t seed);

}  // namespace ellw
