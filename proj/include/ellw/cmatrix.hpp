#pragma once

#include <vector>

#include "ellw/types.hpp"

namespace ellw {

// Dense row-major complex matrix.  Everything here stays small (at most
// N^3 x N^3 = 27 x 27 for the vertex models we drive), so the priorities
// are exactness and clarity, not cache blocking.
class CMatrix {
public:
    CMatrix() = default;
    CMatrix(int rows, int cols) : r_(rows), c_(cols), a_(size_t(rows) * cols) {}

    static CMatrix identity(int n) {
        CMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
        return m;
    }

    int rows() const { return r_; }
    int cols() const { return c_; }

    cplx& at(int i, int j) { return a_[size_t(i) * c_ + j]; }
    const cplx& at(int i, int j) const { return a_[size_t(i) * c_ + j]; }

    cplx* data() { return a_.data(); }
    const cplx* data() const { return a_.data(); }

    CMatrix& operator*=(cplx s) {
        for (auto& v : a_) v *= s;
        return *this;
    }
    CMatrix& operator+=(const CMatrix& o);
    CMatrix& operator-=(const CMatrix& o);

private:
    int r_ = 0, c_ = 0;
    std::vector<cplx> a_;
};

CMatrix operator*(const CMatrix& a, const CMatrix& b);  // dispatches to matmul
CMatrix operator*(cplx s, CMatrix m);
CMatrix operator+(CMatrix a, const CMatrix& b);
CMatrix operator-(CMatrix a, const CMatrix& b);

// Parallel product (OpenMP over output rows) and the serial reference it
// is validated against.  Row ownership is exclusive, so the parallel
// result is bitwise identical to the serial one.
CMatrix matmul(const CMatrix& a, const CMatrix& b);
CMatrix matmul_serial(const CMatrix& a, const CMatrix& b);

// Kronecker product, index-mapped, plus the naive quadruple-loop
// reference used by the tests.
CMatrix kron(const CMatrix& a, const CMatrix& b);
CMatrix kron_reference(const CMatrix& a, const CMatrix& b);

CMatrix adjoint(const CMatrix& m);

// Gauss-Jordan with partial pivoting; throws SingularMatrixError when the
// pivot falls under kPoleEps relative to the largest entry.
CMatrix inverse(const CMatrix& m);

// Operations on N^2 x N^2 matrices indexed by pairs (a,b) -> a*N + b.
CMatrix swap_factors(const CMatrix& m, int N);              // R21 from R12
CMatrix partial_transpose_second(const CMatrix& m, int N);  // t2
// Embed an N^2 x N^2 two-site matrix into slots (12), (13) or (23) of the
// three-site space.
CMatrix embed_pair(const CMatrix& m, int N, const char* slot);

double max_abs(const CMatrix& m);
double max_abs_diff(const CMatrix& a, const CMatrix& b);

}  // namespace ellw
