#include "lkrep/poly_matrix.hpp"

#include "lkrep/errors.hpp"

namespace lkrep {

PolyMatrix PolyMatrix::identity(int dim) {
  PolyMatrix m(dim);
  for (int i = 0; i < dim; ++i) m(i, i) = LaurentPoly2(1);
  return m;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.dim_ != b.dim_) throw DomainError("matrix dimension mismatch in product");
  const int d = a.dim_;
  PolyMatrix out(d);
  for (int i = 0; i < d; ++i) {
    for (int k = 0; k < d; ++k) {
      const auto& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < d; ++j) {
        const auto& bkj = b(k, j);
        if (bkj.is_zero()) continue;
        if (aik.is_one()) {
          out(i, j) += bkj;
        } else if (bkj.is_one()) {
          out(i, j) += aik;
        } else {
          out(i, j) += aik * bkj;
        }
      }
    }
  }
  return out;
}

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.dim_ != b.dim_) throw DomainError("matrix dimension mismatch in sum");
  PolyMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.dim_ != b.dim_) throw DomainError("matrix dimension mismatch in difference");
  PolyMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
  return out;
}

bool PolyMatrix::is_identity() const { return *this == identity(dim_); }

PolyMatrix PolyMatrix::principal_block(int start, int size) const {
  if (start < 0 || size < 0 || start + size > dim_) throw DomainError("block out of range");
  PolyMatrix out(size);
  for (int r = 0; r < size; ++r) {
    for (int c = 0; c < size; ++c) out(r, c) = (*this)(start + r, start + c);
  }
  return out;
}

std::vector<LaurentPoly2> PolyMatrix::block(int r0, int c0, int rows, int cols) const {
  if (r0 < 0 || c0 < 0 || rows < 0 || cols < 0 || r0 + rows > dim_ || c0 + cols > dim_) {
    throw DomainError("block out of range");
  }
  std::vector<LaurentPoly2> out;
  out.reserve(static_cast<std::size_t>(rows * cols));
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) out.push_back((*this)(r0 + r, c0 + c));
  }
  return out;
}

Eigen::MatrixXcd PolyMatrix::eval(Complex q, Complex t) const {
  Eigen::MatrixXcd m(dim_, dim_);
  for (int r = 0; r < dim_; ++r) {
    for (int c = 0; c < dim_; ++c) m(r, c) = (*this)(r, c).eval(q, t);
  }
  return m;
}

PolyMatrix PolyMatrix::substitute_t(int t_value) const {
  PolyMatrix out(dim_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i].substitute_t(t_value);
  return out;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix out(dim_);
  for (int r = 0; r < dim_; ++r) {
    for (int c = 0; c < dim_; ++c) out(c, r) = (*this)(r, c);
  }
  return out;
}

LaurentPoly2 PolyMatrix::trace() const {
  LaurentPoly2 sum;
  for (int i = 0; i < dim_; ++i) sum += (*this)(i, i);
  return sum;
}

std::vector<LaurentPoly2> characteristic_polynomial(const PolyMatrix& a) {
  const int n = a.dim();
  if (n == 0) return {LaurentPoly2(1)};
  // vec holds the coefficients of the trailing principal submatrix,
  // highest degree first.
  std::vector<LaurentPoly2> vec{LaurentPoly2(1), -a(n - 1, n - 1)};
  for (int s = n - 2; s >= 0; --s) {
    const int m = n - 1 - s;  // size of the trailing block below s
    std::vector<LaurentPoly2> col(static_cast<std::size_t>(m + 2));
    col[0] = LaurentPoly2(1);
    col[1] = -a(s, s);
    std::vector<LaurentPoly2> d(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) d[static_cast<std::size_t>(i)] = a(s + 1 + i, s);
    for (int k = 0; k < m; ++k) {
      LaurentPoly2 dot;
      for (int i = 0; i < m; ++i) {
        const auto& r = a(s, s + 1 + i);
        const auto& di = d[static_cast<std::size_t>(i)];
        if (!r.is_zero() && !di.is_zero()) dot += r * di;
      }
      col[static_cast<std::size_t>(k + 2)] = -dot;
      if (k + 1 < m) {
        std::vector<LaurentPoly2> next(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) {
          for (int j = 0; j < m; ++j) {
            const auto& x = a(s + 1 + i, s + 1 + j);
            const auto& dj = d[static_cast<std::size_t>(j)];
            if (!x.is_zero() && !dj.is_zero()) next[static_cast<std::size_t>(i)] += x * dj;
          }
        }
        d = std::move(next);
      }
    }
    // Lower-triangular Toeplitz (m+2) x (m+1) times vec.
    std::vector<LaurentPoly2> out(static_cast<std::size_t>(m + 2));
    for (int i = 0; i < m + 2; ++i) {
      for (int j = 0; j <= std::min(i, m); ++j) {
        const auto& c = col[static_cast<std::size_t>(i - j)];
        const auto& v = vec[static_cast<std::size_t>(j)];
        if (!c.is_zero() && !v.is_zero()) out[static_cast<std::size_t>(i)] += c * v;
      }
    }
    vec = std::move(out);
  }
  return {vec.rbegin(), vec.rend()};
}

LaurentPoly2 determinant(const PolyMatrix& a) {
  auto c = characteristic_polynomial(a);
  return (a.dim() % 2 == 0) ? c[0] : -c[0];
}

PolyMatrix unit_inverse(const PolyMatrix& a) {
  const int d = a.dim();
  auto c = characteristic_polynomial(a);
  if (!c[0].is_unit()) {
    throw DomainError("determinant is not a unit; no exact inverse over the Laurent ring");
  }
  // B = sum_{k>=1} c_k A^{k-1} by Horner; A^{-1} = -B / c_0.
  PolyMatrix b = PolyMatrix::identity(d);
  for (int k = d - 1; k >= 1; --k) {
    b = b * a;
    for (int i = 0; i < d; ++i) b(i, i) += c[static_cast<std::size_t>(k)];
  }
  const LaurentPoly2 scale = -c[0].unit_inverse();
  for (int r = 0; r < d; ++r) {
    for (int col = 0; col < d; ++col) {
      if (!b(r, col).is_zero()) b(r, col) *= scale;
    }
  }
  return b;
}

}  // namespace lkrep
