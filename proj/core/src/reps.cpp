#include "lkrep/reps.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <queue>

#include "lkrep/errors.hpp"

namespace lkrep {

std::string_view to_string(RepKind kind) {
  switch (kind) {
    case RepKind::burau:
      return "burau";
    case RepKind::lk:
      return "lk";
    case RepKind::perm:
      return "perm";
  }
  return "?";
}

RepKind parse_rep_kind(std::string_view text) {
  if (text == "burau") return RepKind::burau;
  if (text == "lk") return RepKind::lk;
  if (text == "perm") return RepKind::perm;
  throw ParseError("unknown representation kind '" + std::string(text) + "' (burau|lk|perm)");
}

std::string_view to_string(BasisKind kind) {
  switch (kind) {
    case BasisKind::standard:
      return "standard";
    case BasisKind::pairs:
      return "pairs";
    case BasisKind::perm_quotient:
      return "perm_quotient";
    case BasisKind::sym_square:
      return "sym_square";
    case BasisKind::alt_square:
      return "alt_square";
  }
  return "?";
}

PairBasis::PairBasis(int n) : n_(n) {
  if (n < 2) throw DomainError("pair basis needs n >= 2");
  for (int j = 2; j <= n; ++j) {
    for (int i = 1; i < j; ++i) pairs_.emplace_back(i, j);
  }
}

int PairBasis::index_of(int i, int j) const {
  if (i < 1 || i >= j || j > n_) {
    throw DomainError("no basis vector v_{" + std::to_string(i) + "," + std::to_string(j) + "}");
  }
  return prefix_size(j - 1) + (i - 1);
}

namespace {

void check_generator(int n, int i) {
  if (n < 2) throw DomainError("braid representations need n >= 2, got " + std::to_string(n));
  if (i < 1 || i > n - 1) {
    throw DomainError("generator index " + std::to_string(i) + " out of range for n=" +
                      std::to_string(n));
  }
}

PolyMatrix perm_matrix(const Permutation& p) {
  const int n = p.size();
  PolyMatrix m(n - 1);
  // f_j -> e_{p(j)} - e_{p(j+1)}, rewritten as a signed run of f's.
  for (int j = 1; j <= n - 1; ++j) {
    const int a = p.images[static_cast<std::size_t>(j - 1)];
    const int b = p.images[static_cast<std::size_t>(j)];
    const int lo = std::min(a, b);
    const int hi = std::max(a, b);
    const long long sign = a < b ? 1 : -1;
    for (int k = lo; k < hi; ++k) m(k - 1, j - 1) += LaurentPoly2(sign);
  }
  return m;
}

template <class Matrix, class Scalar, class Make>
Matrix square_functor(const Matrix& m, int d, bool symmetric, Make make) {
  const int out_dim = symmetric ? d * (d + 1) / 2 : d * (d - 1) / 2;
  Matrix out = make(out_dim);
  auto index = [symmetric](int i, int j) { return symmetric ? j * (j + 1) / 2 + i : j * (j - 1) / 2 + i; };
  for (int b = 0; b < d; ++b) {
    for (int a = 0; a < (symmetric ? b + 1 : b); ++a) {
      const int col = index(a, b);
      // (M e_a) op (M e_b) expanded on the ordered basis.
      for (int j = 0; j < d; ++j) {
        for (int i = 0; i < (symmetric ? j + 1 : j); ++i) {
          Scalar value = m(i, a) * m(j, b);
          if (i != j) {
            if (symmetric) {
              value += m(j, a) * m(i, b);
            } else {
              value -= m(j, a) * m(i, b);
            }
          }
          out(index(i, j), col) = value;
        }
      }
    }
  }
  return out;
}

}  // namespace

ExactRep burau_gen(int n, int i) {
  check_generator(n, i);
  PolyMatrix m = PolyMatrix::identity(n - 1);
  const int c = i - 1;
  m(c, c) = -LaurentPoly2::q();
  if (c - 1 >= 0) m(c - 1, c) = -LaurentPoly2::q();
  if (c + 1 < n - 1) m(c + 1, c) = LaurentPoly2(-1);
  return {std::move(m), {BasisKind::standard, n - 1}};
}

ExactRep lk_gen(int n, int i) {
  check_generator(n, i);
  const PairBasis basis(n);
  PolyMatrix m(basis.size());
  const LaurentPoly2 q = LaurentPoly2::q();
  const LaurentPoly2 t = LaurentPoly2::t();
  const LaurentPoly2 one(1);
  for (const auto& [j, k] : basis.pairs()) {
    const int col = basis.index_of(j, k);
    auto add = [&](int a, int b, const LaurentPoly2& value) { m(basis.index_of(a, b), col) += value; };
    if (i != j - 1 && i != j && i != k - 1 && i != k) {
      add(j, k, one);
    } else if (i == j - 1) {
      add(i, k, q);
      add(i, j, q * q - q);
      add(j, k, one - q);
    } else if (i == j && i != k - 1) {
      add(j + 1, k, one);
    } else if (i == k - 1 && i != j) {
      add(j, i, q);
      add(j, k, one - q);
      add(i, k, -((q * q - q) * t));
    } else if (i == k) {
      add(j, k + 1, one);
    } else {  // i == j == k - 1
      add(j, k, -(t * q * q));
    }
  }
  return {std::move(m), {BasisKind::pairs, n}};
}

LaurentPoly2 lk_generator_determinant(int n) {
  // -t(-q)^n
  return LaurentPoly2::monomial(n % 2 == 0 ? -1 : 1, n, 1);
}

const GeneratorSet& generators(RepKind kind, int n) {
  static std::mutex mutex;
  static std::map<std::pair<RepKind, int>, GeneratorSet> cache;
  if (n < 2) throw DomainError("braid representations need n >= 2, got " + std::to_string(n));
  std::lock_guard lock(mutex);
  auto it = cache.find({kind, n});
  if (it != cache.end()) return it->second;

  GeneratorSet set{kind, n, {}, {}, {}};
  for (int i = 1; i <= n - 1; ++i) {
    ExactRep g;
    switch (kind) {
      case RepKind::burau:
        g = burau_gen(n, i);
        break;
      case RepKind::lk:
        g = lk_gen(n, i);
        break;
      case RepKind::perm:
        g = perm_rep(BraidWord(n, {{i, 1}}));
        break;
    }
    set.basis = g.basis;
    PolyMatrix inverse = unit_inverse(g.entries);
    if (!(g.entries * inverse).is_identity()) {
      throw ComputationError("exact generator inverse failed verification");
    }
    set.gens.push_back(std::move(g.entries));
    set.inverses.push_back(std::move(inverse));
  }
  return cache.emplace(std::pair{kind, n}, std::move(set)).first->second;
}

ExactRep rep_of_word(RepKind kind, const BraidWord& word) {
  const auto& set = generators(kind, word.strands());
  PolyMatrix acc = PolyMatrix::identity(set.gens.front().dim());
  for (const auto& l : word.letters()) {
    const auto idx = static_cast<std::size_t>(l.index - 1);
    acc = acc * (l.sign > 0 ? set.gens[idx] : set.inverses[idx]);
  }
  return {std::move(acc), set.basis};
}

NumericGenerators::NumericGenerators(RepKind kind, int n, Complex q, Complex t)
    : kind_(kind), n_(n), dim_(0), q_(q), t_(t) {
  const auto& set = generators(kind, n);
  dim_ = set.gens.front().dim();
  for (std::size_t i = 0; i < set.gens.size(); ++i) {
    gens_.push_back(set.gens[i].eval(q, t));
    inverses_.push_back(set.inverses[i].eval(q, t));
  }
}

Eigen::MatrixXcd NumericGenerators::evaluate(const BraidWord& word) const {
  if (word.strands() != n_) {
    throw DomainError("word on " + std::to_string(word.strands()) + " strands evaluated in a " +
                      std::to_string(n_) + "-strand representation");
  }
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Identity(dim_, dim_);
  for (const auto& l : word.letters()) {
    acc = acc * (l.sign > 0 ? gen(l.index) : inv(l.index));
  }
  return acc;
}

NumericRep rep_of_word(RepKind kind, const BraidWord& word, Complex q, Complex t) {
  NumericGenerators g(kind, word.strands(), q, t);
  return {g.evaluate(word), generators(kind, word.strands()).basis};
}

ExactRep perm_rep(const BraidWord& word) {
  if (word.strands() < 2) throw DomainError("perm_rep needs n >= 2");
  return {perm_matrix(permutation_of(word)), {BasisKind::perm_quotient, word.strands()}};
}

PolyMatrix sym_square(const PolyMatrix& m) {
  return square_functor<PolyMatrix, LaurentPoly2>(m, m.dim(), true, [](int d) { return PolyMatrix(d); });
}

PolyMatrix alt_square(const PolyMatrix& m) {
  return square_functor<PolyMatrix, LaurentPoly2>(m, m.dim(), false, [](int d) { return PolyMatrix(d); });
}

Eigen::MatrixXcd sym_square(const Eigen::MatrixXcd& m) {
  return square_functor<Eigen::MatrixXcd, Complex>(
      m, static_cast<int>(m.rows()), true, [](int d) { return Eigen::MatrixXcd::Zero(d, d).eval(); });
}

Eigen::MatrixXcd alt_square(const Eigen::MatrixXcd& m) {
  return square_functor<Eigen::MatrixXcd, Complex>(
      m, static_cast<int>(m.rows()), false, [](int d) { return Eigen::MatrixXcd::Zero(d, d).eval(); });
}

ExactRep sym_square(const ExactRep& m) {
  return {sym_square(m.entries), {BasisKind::sym_square, m.entries.dim()}};
}
ExactRep alt_square(const ExactRep& m) {
  return {alt_square(m.entries), {BasisKind::alt_square, m.entries.dim()}};
}
NumericRep sym_square(const NumericRep& m) {
  return {sym_square(m.entries), {BasisKind::sym_square, static_cast<int>(m.entries.rows())}};
}
NumericRep alt_square(const NumericRep& m) {
  return {alt_square(m.entries), {BasisKind::alt_square, static_cast<int>(m.entries.rows())}};
}

Complex su_scale(int n, Complex q, Complex t) {
  if (n < 2) throw DomainError("su_scale needs n >= 2");
  const Complex det = lk_generator_determinant(n).eval(q, t);
  const double p = n * (n - 1) / 2.0;
  return std::exp(-std::log(det) / p);
}

NumericRep normalize_su(const NumericRep& m, int word_exponent, int n, Complex q, Complex t) {
  const Complex mu = su_scale(n, q, t);
  NumericRep out = m;
  out.entries *= std::pow(mu, word_exponent);
  return out;
}

Sym2Comparison lk_vs_sym2_burau(int n, const BraidWord& word) {
  if (n < 2) throw DomainError("lk_vs_sym2_burau needs n >= 2");
  if (word.strands() != n) throw DomainError("word strand count does not match n");
  Sym2Comparison out;
  out.n = n;
  const PolyMatrix lk = rep_of_word(RepKind::lk, word).entries.substitute_t(-1);
  const PolyMatrix sym = sym_square(rep_of_word(RepKind::burau, word).entries);
  out.lk_charpoly = characteristic_polynomial(lk);
  out.sym2_charpoly = characteristic_polynomial(sym);
  out.charpoly_equal = out.lk_charpoly == out.sym2_charpoly;
  out.identical = lk == sym;

  // Diagonal search at a generic point on the unit circle.
  const Complex q0 = std::polar(1.0, 0.7310585786);
  const Eigen::MatrixXcd a = lk.eval(q0, {-1.0, 0.0});
  const Eigen::MatrixXcd b = sym.eval(q0, {-1.0, 0.0});
  const int d = static_cast<int>(a.rows());
  const double scale = std::max(1.0, std::max(a.cwiseAbs().maxCoeff(), b.cwiseAbs().maxCoeff()));
  const double eps = 1e-9 * scale;
  bool pattern_ok = true;
  for (int r = 0; r < d && pattern_ok; ++r) {
    for (int c = 0; c < d; ++c) {
      if ((std::abs(a(r, c)) > eps) != (std::abs(b(r, c)) > eps)) {
        pattern_ok = false;
        break;
      }
    }
  }
  if (pattern_ok) {
    std::vector<Complex> diag(static_cast<std::size_t>(d), Complex(0.0, 0.0));
    for (int root = 0; root < d; ++root) {
      if (diag[static_cast<std::size_t>(root)] != Complex(0.0, 0.0)) continue;
      diag[static_cast<std::size_t>(root)] = 1.0;
      std::queue<int> pending;
      pending.push(root);
      while (!pending.empty()) {
        const int x = pending.front();
        pending.pop();
        for (int y = 0; y < d; ++y) {
          // b(x,y) = d_x a(x,y) / d_y and b(y,x) = d_y a(y,x) / d_x.
          auto& dy = diag[static_cast<std::size_t>(y)];
          if (dy != Complex(0.0, 0.0)) continue;
          if (std::abs(a(x, y)) > eps) {
            dy = diag[static_cast<std::size_t>(x)] * a(x, y) / b(x, y);
            pending.push(y);
          } else if (std::abs(a(y, x)) > eps) {
            dy = diag[static_cast<std::size_t>(x)] * b(y, x) / a(y, x);
            pending.push(y);
          }
        }
      }
    }
    bool ok = true;
    for (int r = 0; r < d && ok; ++r) {
      for (int c = 0; c < d; ++c) {
        const Complex lhs = diag[static_cast<std::size_t>(r)] * a(r, c) / diag[static_cast<std::size_t>(c)];
        if (std::abs(lhs - b(r, c)) > eps) {
          ok = false;
          break;
        }
      }
    }
    out.diagonal_rescaling = ok;
    if (ok) out.rescaling = std::move(diag);
  }
  return out;
}

}  // namespace lkrep
