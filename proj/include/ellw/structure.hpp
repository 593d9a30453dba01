#pragma once

#include "ellw/cmatrix.hpp"
#include "ellw/types.hpp"

namespace ellw {

// T(x) = tau_N(q^{1/2} x^{-1}) tau_N(q^{1/2-c} x)
//      / [tau_N(q^{1/2} x) tau_N(q^{1/2-c} x^{-1})]
// Identically 1 at the critical value c = -N.
cplx t_function(cplx x, const ModularParams& mp,
                const TruncationConfig& tc = {});

// Matrix-valued criticality witness: reduces to the identity at c = -N.
// Composition of gauge-transformed R factors, partial transposes and
// inverses; the scalar normalizations cancel into t_function.
CMatrix m_function(cplx x, const ModularParams& mp,
                   const TruncationConfig& tc = {});

// f(x) = dT/dc at c = -N; p-independent, odd under x -> 1/x.
cplx f_function(cplx x, const ModularParams& mp,
                const TruncationConfig& tc = {});

// F(M, x): exchange kernel on the quantization surface, a finite product
// of Theta_{q^{2N}} factors along the p-ladder.
cplx f_exchange(int M, cplx x, const ModularParams& mp,
                const TruncationConfig& tc = {});

// Y_{N,p,q,M}(x): scalar exchange function, t(z) t(w) = Y(w/z) t(w) t(z).
// Takes raw q, p: only the nome q^{2N} must lie inside the unit disk, so
// |p| > 1 (h < 0 surfaces) is admissible here.
cplx y_exchange(int N, int M, cplx x, cplx q, cplx p,
                const TruncationConfig& tc = {});

// Classical limit p = q^{Nh} of the first c-derivative, parity-split in h.
// Uses m = |M| inside the E(.) arguments and prefactors.
cplx f_h_function(cplx x, int N, int M, int h, cplx q,
                  const TruncationConfig& tc = {});

struct SurfacePoint {
    int N = 2;
    int M = 1;
    cplx q, p, c;
    void validate() const;  // 0 < |q| < 1, 0 < |p| < 1
};

// Solve (-p^{1/2})^{NM} = q^{-c-N} for c on principal branches.
SurfacePoint solve_surface(int N, int M, cplx q, cplx p);

}  // namespace ellw
