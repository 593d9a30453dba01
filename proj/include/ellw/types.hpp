#pragma once

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>

namespace ellw {

using cplx = std::complex<double>;

// Denominators smaller than this are treated as exact poles.
inline constexpr double kPoleEps = 1e-12;

struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct PoleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct TruncationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct BranchError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct SingularMatrixError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TruncationConfig {
    int theta_terms = 64;    // bilateral sum runs over |m| <= theta_terms
    int prod_terms = 64;     // factors per geometric ladder
    int series_lmax = 64;    // terms in the structure-function series
    double tail_bound = 1e-14;
};

struct Tolerance {
    double abs = 1e-8;
    double rel = 1e-8;
};

struct ModularParams {
    int N = 2;
    cplx q{0.5, 0.0};
    cplx p{0.3, 0.0};
    std::optional<cplx> c{};

    void validate() const;   // throws DomainError
    cplx c_or_critical() const { return c ? *c : cplx(-double(N), 0.0); }
};

// Theta characteristics.  The values used by the vertex weights are
// half-integers shifted by alpha/N, so doubles represent them exactly.
struct ThetaChar {
    double g1 = 0.0;
    double g2 = 0.0;
};

// Principal-branch helpers.  Arguments within kBranchMargin of the
// negative real axis set a thread-local flag so callers can resample
// instead of silently crossing the cut.
inline constexpr double kBranchMargin = 1e-9;

bool branch_flagged();
void clear_branch_flag();

cplx principal_log(cplx z);          // flags near-cut arguments
cplx cpow(cplx z, cplx a);           // exp(a Log z)
cplx ipow(cplx z, long n);           // exact integer power by squaring

std::string format_complex(cplx v, int sig_digits = 15);

}  // namespace ellw
