#pragma once

#include <complex>
#include <compare>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace lkrep {

using BigInt = boost::multiprecision::cpp_int;
using Complex = std::complex<double>;

/// Exponent pair q^dq t^dt.
struct Monomial {
  int dq = 0;
  int dt = 0;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Exact element of Z[q^{+-1}, t^{+-1}] with arbitrary-precision integer
/// coefficients.
///
/// Terms are stored sorted by (dq, dt) with no zero coefficients, so the
/// zero polynomial is the empty term list and equality is term-wise.
class LaurentPoly2 {
 public:
  struct Term {
    Monomial deg;
    BigInt coeff;

    friend bool operator==(const Term&, const Term&) = default;
  };

  LaurentPoly2() = default;
  LaurentPoly2(long long constant);  // NOLINT(google-explicit-constructor)

  static LaurentPoly2 monomial(const BigInt& coeff, int dq, int dt);
  static LaurentPoly2 q(int power = 1) { return monomial(1, power, 0); }
  static LaurentPoly2 t(int power = 1) { return monomial(1, 0, power); }
  /// Builds from arbitrary (possibly repeated or zero) terms.
  static LaurentPoly2 from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  /// Single term with coefficient +-1: the units of the ring.
  bool is_unit() const;
  /// True when some term has nonzero t-degree.
  bool has_t() const;

  LaurentPoly2 operator-() const;
  LaurentPoly2& operator+=(const LaurentPoly2& other);
  LaurentPoly2& operator-=(const LaurentPoly2& other);
  LaurentPoly2& operator*=(const LaurentPoly2& other);

  friend LaurentPoly2 operator+(LaurentPoly2 a, const LaurentPoly2& b) { return a += b; }
  friend LaurentPoly2 operator-(LaurentPoly2 a, const LaurentPoly2& b) { return a -= b; }
  friend LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b);
  friend bool operator==(const LaurentPoly2&, const LaurentPoly2&) = default;

  /// Non-negative integer power.
  LaurentPoly2 pow(unsigned exponent) const;

  /// Inverse of a unit. Throws DomainError otherwise.
  LaurentPoly2 unit_inverse() const;

  /// Numeric value at (q, t); q and t must be nonzero. Terms are grouped by
  /// t-degree and each group is evaluated by Horner in q.
  Complex eval(Complex q, Complex t) const;

  /// Exact specialization t -> t_value with t_value in {+1, -1}.
  LaurentPoly2 substitute_t(int t_value) const;

  /// Human-readable form such as "-q^2*t + q - 1".
  std::string to_string() const;

 private:
  void normalize();

  std::vector<Term> terms_;
};

}  // namespace lkrep
