#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "ellw/types.hpp"

namespace ellw {

// Deterministic spectral-parameter sampler.  All draws live in the lower
// half-plane, where the principal branch satisfies xi(-z) = xi(z) + 1
// exactly, and keep a safety distance from the pole loci of the vertex
// weights (z = +/- q^e p^{m/2} for small e, m).
class SampleGen {
public:
    explicit SampleGen(std::uint64_t seed) : rng_(seed) {}

    double uniform(double lo, double hi);

    // modulus in [aq^{0.45}, aq^{-0.45}], arg in (arg_lo, arg_hi)
    cplx annulus_point(double abs_q, double arg_lo, double arg_hi);

    // branch-safe z for single-argument properties
    cplx spectral_point(const ModularParams& mp);

    // branch-safe pair (z, w) with arg(w/z) also in the lower half-plane
    std::pair<cplx, cplx> spectral_pair(const ModularParams& mp);

    // generic point for structure functions: modulus in [0.8, 1.25],
    // away from the real axis and from |x^2| resonances with q, p
    cplx structure_point(const ModularParams& mp);

private:
    bool excluded(cplx z, const ModularParams& mp) const;
    std::mt19937_64 rng_;
};

}  // namespace ellw
