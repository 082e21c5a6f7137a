#pragma once

#include <vector>

#include <Eigen/Dense>

#include "lkrep/laurent.hpp"

namespace lkrep {

/// Dense square matrix over Z[q^{+-1}, t^{+-1}].
class PolyMatrix {
 public:
  PolyMatrix() = default;
  explicit PolyMatrix(int dim) : dim_(dim), data_(static_cast<std::size_t>(dim * dim)) {}

  static PolyMatrix identity(int dim);

  int dim() const { return dim_; }
  LaurentPoly2& operator()(int r, int c) { return data_[index(r, c)]; }
  const LaurentPoly2& operator()(int r, int c) const { return data_[index(r, c)]; }

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b);
  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

  bool is_identity() const;
  /// Square block on rows and columns [start, start + size).
  PolyMatrix principal_block(int start, int size) const;
  /// Rectangular block, row-major.
  std::vector<LaurentPoly2> block(int r0, int c0, int rows, int cols) const;

  Eigen::MatrixXcd eval(Complex q, Complex t) const;
  PolyMatrix substitute_t(int t_value) const;
  PolyMatrix transpose() const;
  LaurentPoly2 trace() const;

 private:
  std::size_t index(int r, int c) const { return static_cast<std::size_t>(r * dim_ + c); }

  int dim_ = 0;
  std::vector<LaurentPoly2> data_;
};

/// Coefficients c_0..c_d of det(x I - A), computed division-free with
/// Berkowitz's algorithm. c_d == 1.
std::vector<LaurentPoly2> characteristic_polynomial(const PolyMatrix& a);

/// Exact determinant (from the characteristic polynomial).
LaurentPoly2 determinant(const PolyMatrix& a);

/// Exact inverse of a matrix whose determinant is a unit of the ring, via
/// Cayley-Hamilton. Throws DomainError when the determinant is not a unit.
PolyMatrix unit_inverse(const PolyMatrix& a);

}  // namespace lkrep
