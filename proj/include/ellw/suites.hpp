#pragma once

#include <cstdint>
#include <vector>

#include "ellw/report.hpp"
#include "ellw/types.hpp"

namespace ellw {

struct SuiteConfig {
    ModularParams mp;          // N, q, p (c derived where needed)
    int M = 1;
    int h = 1;
    int i = 1, j = 2, k = 1;   // higher-spin labels and sl(2) sector
    TruncationConfig trunc;
    Tolerance tol;
    int samples = 20;
    int r_max = 5;
    std::uint64_t seed = 42;
};

// Finite-difference checks compare against a derivative, not an identity,
// so they carry pinned tolerances independent of the user's.
inline constexpr double kFdDerivTolerance = 1e-6;   // matrix dM/dc at c=-N
inline constexpr double kFdMatchTolerance = 1e-5;   // f vs dT/dc, relative

CheckReport run_special_suite(const SuiteConfig& cfg);
CheckReport run_rmatrix_suite(const SuiteConfig& cfg);
CheckReport run_structure_suite(const SuiteConfig& cfg);
CheckReport run_classical_suite(const SuiteConfig& cfg);
CheckReport run_modes_suite(const SuiteConfig& cfg);

std::vector<CheckReport> run_suites(const std::string& which,
                                    const SuiteConfig& cfg);

}  // namespace ellw
