#include "ellw/rng.hpp"

#include <cmath>
#include <numbers>

namespace ellw {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kExclusionRadius = 1e-3;
constexpr int kMaxAttempts = 1000;
}  // namespace

double SampleGen::uniform(double lo, double hi) {
    std::uniform_real_distribution<double> d(lo, hi);
    return d(rng_);
}

cplx SampleGen::annulus_point(double abs_q, double arg_lo, double arg_hi) {
    double rmin = std::pow(abs_q, 0.45);
    double r = uniform(rmin, 1.0 / rmin);
    double th = uniform(arg_lo, arg_hi);
    return std::polar(r, th);
}

bool SampleGen::excluded(cplx z, const ModularParams& mp) const {
    // pole loci cluster on +/- q^e p^{m/2}; only those with modulus near
    // the sampling annulus matter
    for (int e = -1; e <= 1; ++e) {
        cplx qe = std::pow(mp.q, cplx(double(e), 0.0));
        for (int m = -6; m <= 6; ++m) {
            cplx s = qe * std::pow(mp.p, cplx(m / 2.0, 0.0));
            double as = std::abs(s);
            if (as < 0.4 || as > 2.5) continue;
            if (std::abs(z - s) < kExclusionRadius) return true;
            if (std::abs(z + s) < kExclusionRadius) return true;
        }
    }
    return false;
}

cplx SampleGen::spectral_point(const ModularParams& mp) {
    for (int i = 0; i < kMaxAttempts; ++i) {
        cplx z = annulus_point(std::abs(mp.q), -0.95 * kPi, -0.05 * kPi);
        if (excluded(z, mp)) continue;
        if (z.imag() > -1e-6) continue;  // strict lower half-plane re-check
        return z;
    }
    throw DomainError("spectral_point: no admissible sample after 1000 draws");
}

std::pair<cplx, cplx> SampleGen::spectral_pair(const ModularParams& mp) {
    for (int i = 0; i < kMaxAttempts; ++i) {
        // keep arg(w/z) inside the lower half-plane as well
        cplx z = annulus_point(std::abs(mp.q), -0.50 * kPi, -0.30 * kPi);
        cplx w = annulus_point(std::abs(mp.q), -0.95 * kPi, -0.55 * kPi);
        cplx r = w / z;
        if (excluded(z, mp) || excluded(w, mp) || excluded(r, mp)) continue;
        if (z.imag() > -1e-6 || w.imag() > -1e-6 || r.imag() > -1e-6) continue;
        return {z, w};
    }
    throw DomainError("spectral_pair: no admissible sample after 1000 draws");
}

cplx SampleGen::structure_point(const ModularParams& mp) {
    for (int i = 0; i < kMaxAttempts; ++i) {
        double r = uniform(0.8, 1.25);
        double th = uniform(-0.95 * kPi, -0.05 * kPi);
        cplx x = std::polar(r, th);
        if (excluded(x, mp)) continue;
        if (x.imag() > -1e-6) continue;
        return x;
    }
    throw DomainError("structure_point: no admissible sample after 1000 draws");
}

}  // namespace ellw
