#include "lkrep/laurent.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "lkrep/errors.hpp"

namespace lkrep {

namespace {

Complex ipow(Complex z, int e) {
  if (e == 0) return {1.0, 0.0};
  Complex base = e > 0 ? z : Complex(1.0, 0.0) / z;
  unsigned n = static_cast<unsigned>(e > 0 ? e : -e);
  Complex acc(1.0, 0.0);
  while (n != 0) {
    if (n & 1U) acc *= base;
    base *= base;
    n >>= 1U;
  }
  return acc;
}

// Horner over a sparse list of (degree, value) sorted by ascending degree.
template <class Get>
Complex sparse_horner(std::size_t count, Get get, Complex x) {
  if (count == 0) return {0.0, 0.0};
  auto [top_deg, acc] = get(count - 1);
  for (std::size_t k = count - 1; k-- > 0;) {
    auto [deg, value] = get(k);
    acc = acc * ipow(x, top_deg - deg) + value;
    top_deg = deg;
  }
  return acc * ipow(x, top_deg);
}

}  // namespace

LaurentPoly2::LaurentPoly2(long long constant) {
  if (constant != 0) terms_.push_back({{0, 0}, BigInt(constant)});
}

LaurentPoly2 LaurentPoly2::monomial(const BigInt& coeff, int dq, int dt) {
  LaurentPoly2 p;
  if (coeff != 0) p.terms_.push_back({{dq, dt}, coeff});
  return p;
}

LaurentPoly2 LaurentPoly2::from_terms(std::vector<Term> terms) {
  LaurentPoly2 p;
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

void LaurentPoly2::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.deg < b.deg; });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (auto& term : terms_) {
    if (!merged.empty() && merged.back().deg == term.deg) {
      merged.back().coeff += term.coeff;
    } else {
      if (!merged.empty() && merged.back().coeff == 0) merged.pop_back();
      merged.push_back(std::move(term));
    }
  }
  if (!merged.empty() && merged.back().coeff == 0) merged.pop_back();
  terms_ = std::move(merged);
}

bool LaurentPoly2::is_one() const {
  return terms_.size() == 1 && terms_[0].deg == Monomial{0, 0} && terms_[0].coeff == 1;
}

bool LaurentPoly2::is_unit() const {
  return terms_.size() == 1 && (terms_[0].coeff == 1 || terms_[0].coeff == -1);
}

bool LaurentPoly2::has_t() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const Term& x) { return x.deg.dt != 0; });
}

LaurentPoly2 LaurentPoly2::operator-() const {
  LaurentPoly2 p = *this;
  for (auto& term : p.terms_) term.coeff = -term.coeff;
  return p;
}

LaurentPoly2& LaurentPoly2::operator+=(const LaurentPoly2& other) {
  if (other.is_zero()) return *this;
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->deg < b->deg)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->deg < a->deg) {
      out.push_back(*b++);
    } else {
      BigInt c = a->coeff + b->coeff;
      if (c != 0) out.push_back({a->deg, std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

LaurentPoly2& LaurentPoly2::operator-=(const LaurentPoly2& other) { return *this += -other; }

LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b) {
  if (a.is_zero() || b.is_zero()) return {};
  LaurentPoly2 p;
  p.terms_.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      p.terms_.push_back({{x.deg.dq + y.deg.dq, x.deg.dt + y.deg.dt}, x.coeff * y.coeff});
    }
  }
  if (a.terms_.size() > 1 && b.terms_.size() > 1) p.normalize();
  return p;
}

LaurentPoly2& LaurentPoly2::operator*=(const LaurentPoly2& other) {
  *this = *this * other;
  return *this;
}

LaurentPoly2 LaurentPoly2::pow(unsigned exponent) const {
  LaurentPoly2 acc(1);
  LaurentPoly2 base = *this;
  while (exponent != 0) {
    if (exponent & 1U) acc *= base;
    exponent >>= 1U;
    if (exponent != 0) base *= base;
  }
  return acc;
}

LaurentPoly2 LaurentPoly2::unit_inverse() const {
  if (!is_unit()) throw DomainError("not a unit of Z[q^+-1, t^+-1]: " + to_string());
  const auto& term = terms_[0];
  return monomial(term.coeff, -term.deg.dq, -term.deg.dt);
}

Complex LaurentPoly2::eval(Complex q, Complex t) const {
  if (q == Complex(0.0, 0.0) || t == Complex(0.0, 0.0)) {
    throw DomainError("Laurent polynomial evaluated at q = 0 or t = 0");
  }
  // Group by t-degree; within a group, Horner in q.
  std::map<int, std::vector<const Term*>> by_t;
  for (const auto& term : terms_) by_t[term.deg.dt].push_back(&term);
  std::vector<std::pair<int, Complex>> groups;
  groups.reserve(by_t.size());
  for (const auto& [dt, list] : by_t) {
    Complex value = sparse_horner(
        list.size(),
        [&](std::size_t k) {
          return std::pair<int, Complex>{list[k]->deg.dq,
                                         Complex(list[k]->coeff.convert_to<double>(), 0.0)};
        },
        q);
    groups.emplace_back(dt, value);
  }
  return sparse_horner(
      groups.size(), [&](std::size_t k) { return groups[k]; }, t);
}

LaurentPoly2 LaurentPoly2::substitute_t(int t_value) const {
  if (t_value != 1 && t_value != -1) throw DomainError("substitute_t accepts only +1 or -1");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& term : terms_) {
    const bool flip = t_value == -1 && (term.deg.dt % 2 != 0);
    out.push_back({{term.deg.dq, 0}, flip ? BigInt(-term.coeff) : term.coeff});
  }
  return from_terms(std::move(out));
}

std::string LaurentPoly2::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  // Highest degree first reads more naturally.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    BigInt c = it->coeff;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const bool constant = it->deg.dq == 0 && it->deg.dt == 0;
    std::string mono;
    auto append = [&](const char* var, int d) {
      if (d == 0) return;
      if (!mono.empty()) mono += "*";
      mono += var;
      if (d != 1) mono += "^" + std::to_string(d);
    };
    append("q", it->deg.dq);
    append("t", it->deg.dt);
    if (constant || c != 1) {
      out += c.str();
      if (!constant) out += "*";
    }
    out += mono;
  }
  return out;
}

}  // namespace lkrep
