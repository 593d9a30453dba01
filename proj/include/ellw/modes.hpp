#pragma once

#include <functional>
#include <string>
#include <vector>

#include "ellw/structure.hpp"
#include "ellw/types.hpp"

namespace ellw {

// Exponents P with a pole of the structure function at |x^2| = |q|^P:
// {0, 1} together with {Nl-1, Nl, Nl+1} for l >= 1, up to the cutoff.
std::vector<long> pole_ladder(int N, long cutoff);

// Laurent-mode table r -> C_r of a mode bracket
// {t_n, t_m} = sum_r C_r t_{n-2r} t_{m+2r}; always odd in r.
struct ModeCoeffTable {
    std::string kind;
    int N = 0, M = 0, h = 0, i = 0, j = 0, k = 0;
    cplx q;
    int r_max = 0;
    std::vector<cplx> coeff;  // index r + r_max

    cplx at(long r) const {
        if (r < -r_max || r > r_max)
            throw DomainError("ModeCoeffTable: index out of range");
        return coeff[size_t(r + r_max)];
    }
};

// C_r = -2 (q - q^{-1}) ln q [(N-1)r]_q [r]_q / [Nr]_q, C_0 = 0.
ModeCoeffTable critical_k0_table(int N, cplx q, int r_max);

// sl(2) sector k:
// C_s = (-1)^{k+1} 2 ln q (q^{(2k+1)s} - q^{-(2k+1)s}) / (q^s + q^{-s}).
ModeCoeffTable sl2_sector_table(int k, cplx q, int s_max);

// C_r = -2 (q - q^{-1}) ln q [(N-max(i,j))r]_q [min(i,j)r]_q / [Nr]_q.
ModeCoeffTable higher_spin_k0_table(int i, int j, int N, cplx q, int r_max);

// Classical-limit table, parity-selected in h with m = |M| substituted:
//   h odd:  C_r = -2 (q-q^{-1}) ln q (-B [r]^2/[Nr] + A [(N-1)r][r]/[Nr]),
//           A = E(Nm/2)(E(Nm/2)+1), B = E((Nm+1)/2)^2
//   h even: identical to critical_k0_table(N, q, r_max)
ModeCoeffTable h_limit_table(int N, int M, int h, cplx q, int r_max);

// {t_n, t_m} as a formal sum sum_r C_r t_{n-2r} t_{m+2r} over the table range.
struct FormalBracket {
    long n = 0, m = 0;
    struct Term {
        long r;
        cplx coeff;
        long left_index;   // n - 2r
        long right_index;  // m + 2r
    };
    std::vector<Term> terms;  // nonzero coefficients only
    std::string display;
};

FormalBracket bracket(const ModeCoeffTable& table, long n, long m);

// sum over the half-integer grids u in {-(i-1)/2, ..., (i-1)/2},
// v in {-(j-1)/2, ..., (j-1)/2} of f(q^{v-u} x)
cplx classical_higher_spin_f(int i, int j, cplx x, const ModularParams& mp,
                             const TruncationConfig& tc = {});

// product over the same grids of Y(q^{v-u} x) on a surface point
cplx quantum_higher_spin_y(int i, int j, cplx x, const SurfacePoint& sp,
                           const TruncationConfig& tc = {});

// Trapezoid contour quadrature: Laurent coefficient a_s of fn(x) in x^{2s}
// on |x| = radius, then the bracket mode C_s = (a_{-s} - a_s)/2.
cplx laurent_coeff(const std::function<cplx(cplx)>& fn, double radius, long s,
                   int nodes = 2048);
cplx quadrature_mode(const std::function<cplx(cplx)>& fn, double radius, long s,
                     int nodes = 2048);

// all modes |r| <= r_max from one pass over the contour nodes
std::vector<cplx> quadrature_mode_table(const std::function<cplx(cplx)>& fn,
                                        double radius, int r_max,
                                        int nodes = 2048);

}  // namespace ellw
