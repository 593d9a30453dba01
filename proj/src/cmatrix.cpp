#include "ellw/cmatrix.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>

namespace ellw {

namespace {
void require_same_shape(const CMatrix& a, const CMatrix& b, const char* who) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DomainError(std::string(who) + ": shape mismatch");
}
}  // namespace

CMatrix& CMatrix::operator+=(const CMatrix& o) {
    require_same_shape(*this, o, "operator+=");
    for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& o) {
    require_same_shape(*this, o, "operator-=");
    for (size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
}

CMatrix operator*(cplx s, CMatrix m) {
    m *= s;
    return m;
}

CMatrix operator+(CMatrix a, const CMatrix& b) {
    a += b;
    return a;
}

CMatrix operator-(CMatrix a, const CMatrix& b) {
    a -= b;
    return a;
}

CMatrix matmul_serial(const CMatrix& a, const CMatrix& b) {
    if (a.cols() != b.rows()) throw DomainError("matmul: inner dim mismatch");
    CMatrix c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            cplx aik = a.at(i, k);
            if (aik == cplx(0.0, 0.0)) continue;
            for (int j = 0; j < b.cols(); ++j) c.at(i, j) += aik * b.at(k, j);
        }
    return c;
}

CMatrix matmul(const CMatrix& a, const CMatrix& b) {
    if (a.cols() != b.rows()) throw DomainError("matmul: inner dim mismatch");
    CMatrix c(a.rows(), b.cols());
#pragma omp parallel for schedule(static)
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            cplx aik = a.at(i, k);
            if (aik == cplx(0.0, 0.0)) continue;
            for (int j = 0; j < b.cols(); ++j) c.at(i, j) += aik * b.at(k, j);
        }
    return c;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) { return matmul(a, b); }

CMatrix kron(const CMatrix& a, const CMatrix& b) {
    CMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < c.rows(); ++i) {
        int ia = i / b.rows(), ib = i % b.rows();
        for (int j = 0; j < c.cols(); ++j)
            c.at(i, j) = a.at(ia, j / b.cols()) * b.at(ib, j % b.cols());
    }
    return c;
}

CMatrix kron_reference(const CMatrix& a, const CMatrix& b) {
    CMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
    for (int ia = 0; ia < a.rows(); ++ia)
        for (int ja = 0; ja < a.cols(); ++ja)
            for (int ib = 0; ib < b.rows(); ++ib)
                for (int jb = 0; jb < b.cols(); ++jb)
                    c.at(ia * b.rows() + ib, ja * b.cols() + jb) =
                        a.at(ia, ja) * b.at(ib, jb);
    return c;
}

CMatrix adjoint(const CMatrix& m) {
    CMatrix c(m.cols(), m.rows());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) c.at(j, i) = std::conj(m.at(i, j));
    return c;
}

CMatrix inverse(const CMatrix& m) {
    if (m.rows() != m.cols()) throw DomainError("inverse: matrix not square");
    const int n = m.rows();
    CMatrix a = m;
    CMatrix inv = CMatrix::identity(n);
    double scale = max_abs(m);
    if (scale == 0.0) throw SingularMatrixError("inverse: zero matrix");
    for (int col = 0; col < n; ++col) {
        int piv = col;
        double best = std::abs(a.at(col, col));
        for (int r = col + 1; r < n; ++r) {
            double v = std::abs(a.at(r, col));
            if (v > best) { best = v; piv = r; }
        }
        if (best < kPoleEps * scale)
            throw SingularMatrixError("inverse: pivot " + std::to_string(best) +
                                      " below threshold");
        if (piv != col) {
            for (int j = 0; j < n; ++j) {
                std::swap(a.at(piv, j), a.at(col, j));
                std::swap(inv.at(piv, j), inv.at(col, j));
            }
        }
        cplx d = a.at(col, col);
        for (int j = 0; j < n; ++j) {
            a.at(col, j) /= d;
            inv.at(col, j) /= d;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            cplx f = a.at(r, col);
            if (f == cplx(0.0, 0.0)) continue;
            for (int j = 0; j < n; ++j) {
                a.at(r, j) -= f * a.at(col, j);
                inv.at(r, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

CMatrix swap_factors(const CMatrix& m, int N) {
    CMatrix s(N * N, N * N);
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b)
            for (int c = 0; c < N; ++c)
                for (int d = 0; d < N; ++d)
                    s.at(a * N + b, c * N + d) = m.at(b * N + a, d * N + c);
    return s;
}

CMatrix partial_transpose_second(const CMatrix& m, int N) {
    CMatrix s(N * N, N * N);
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b)
            for (int c = 0; c < N; ++c)
                for (int d = 0; d < N; ++d)
                    s.at(a * N + b, c * N + d) = m.at(a * N + d, c * N + b);
    return s;
}

CMatrix embed_pair(const CMatrix& m, int N, const char* slot) {
    const int D = N * N * N;
    CMatrix out(D, D);
    enum { S12, S13, S23 } which;
    if (!std::strcmp(slot, "12")) which = S12;
    else if (!std::strcmp(slot, "13")) which = S13;
    else if (!std::strcmp(slot, "23")) which = S23;
    else throw DomainError("embed_pair: slot must be 12, 13 or 23");
    for (int a = 0; a < N; ++a)
     for (int b = 0; b < N; ++b)
      for (int c = 0; c < N; ++c)
       for (int d = 0; d < N; ++d)
        for (int e = 0; e < N; ++e)
         for (int f = 0; f < N; ++f) {
            int i = (a * N + b) * N + c, j = (d * N + e) * N + f;
            switch (which) {
                case S12:
                    if (c == f) out.at(i, j) = m.at(a * N + b, d * N + e);
                    break;
                case S13:
                    if (b == e) out.at(i, j) = m.at(a * N + c, d * N + f);
                    break;
                case S23:
                    if (a == d) out.at(i, j) = m.at(b * N + c, e * N + f);
                    break;
            }
         }
    return out;
}

double max_abs(const CMatrix& m) {
    double best = 0.0;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            best = std::max(best, std::abs(m.at(i, j)));
    return best;
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
    require_same_shape(a, b, "max_abs_diff");
    double best = 0.0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            best = std::max(best, std::abs(a.at(i, j) - b.at(i, j)));
    return best;
}

}  // namespace ellw
