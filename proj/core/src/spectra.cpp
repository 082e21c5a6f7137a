#include "lkrep/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <random>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "lkrep/errors.hpp"

namespace lkrep {

namespace {

bool lex_less(Complex a, Complex b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

std::string format_complex(Complex z, int digits) {
  auto clean = [digits](double x) {
    const double cutoff = 0.5 * std::pow(10.0, -digits);
    return std::abs(x) < cutoff ? 0.0 : x;
  };
  char buf[96];
  std::snprintf(buf, sizeof buf, "(%.*f,%.*f)", digits, clean(z.real()), digits, clean(z.imag()));
  return buf;
}

// Counts over the entries of a clustered multiset; removal matches a value
// to the nearest entry with a positive count.
struct Pool {
  std::vector<Complex> values;
  std::vector<int> counts;
  double tol;

  explicit Pool(const EigMultiset& e) : tol(e.tol()) {
    for (const auto& entry : e.entries()) {
      values.push_back(entry.value);
      counts.push_back(entry.mult);
    }
  }

  int find(Complex z) const {
    int best = -1;
    double best_dist = tol;
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (counts[i] == 0) continue;
      const double d = std::abs(values[i] - z);
      if (d <= best_dist) {
        best = static_cast<int>(i);
        best_dist = d;
      }
    }
    return best;
  }

  // Removes every value or nothing; on success the taken indices are
  // appended to undo.
  bool take_all(const std::vector<Complex>& zs, std::vector<int>& undo) {
    const std::size_t mark = undo.size();
    for (Complex z : zs) {
      const int idx = find(z);
      if (idx < 0) {
        restore(undo, mark);
        return false;
      }
      --counts[static_cast<std::size_t>(idx)];
      undo.push_back(idx);
    }
    return true;
  }

  void restore(std::vector<int>& undo, std::size_t mark) {
    while (undo.size() > mark) {
      ++counts[static_cast<std::size_t>(undo.back())];
      undo.pop_back();
    }
  }

  bool exhausted() const {
    return std::all_of(counts.begin(), counts.end(), [](int c) { return c == 0; });
  }
};

void check_search_size(int size) {
  if (size > tol::max_search_dimension) {
    throw DomainError("exhaustive search refused above dimension " +
                      std::to_string(tol::max_search_dimension));
  }
}

bool contains_equivalent(const std::vector<EigMultiset>& found, const EigMultiset& candidate) {
  return std::any_of(found.begin(), found.end(),
                     [&](const EigMultiset& f) { return multiset_equal(f, candidate, candidate.tol()); });
}

EigMultiset scaled(const EigMultiset& e, Complex s) {
  std::vector<Complex> v = e.expanded();
  for (auto& z : v) z *= s;
  return EigMultiset::from_values(v, e.tol());
}

// Gauge equivalence (s A1, A2 / s) with s fixed by sending some element of
// A1 to the first element of B1.
bool gauge_equivalent(const MultisetPair& a, const MultisetPair& b) {
  const double tol = a.first.tol();
  const Complex target = b.first.entries().front().value;
  for (const auto& entry : a.first.entries()) {
    const Complex s = target / entry.value;
    if (multiset_equal(scaled(a.first, s), b.first, tol) &&
        multiset_equal(scaled(a.second, 1.0 / s), b.second, tol)) {
      return true;
    }
  }
  return false;
}

}  // namespace

EigMultiset EigMultiset::from_values(const std::vector<Complex>& values, double tol) {
  const std::size_t n = values.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::abs(values[i] - values[j]) <= tol) parent[root(i)] = root(j);
    }
  }
  std::vector<Complex> sums(n, Complex(0.0, 0.0));
  std::vector<int> counts(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    sums[root(i)] += values[i];
    ++counts[root(i)];
  }
  EigMultiset out;
  out.tol_ = tol;
  for (std::size_t i = 0; i < n; ++i) {
    if (counts[i] > 0) out.entries_.push_back({sums[i] / static_cast<double>(counts[i]), counts[i]});
  }
  std::sort(out.entries_.begin(), out.entries_.end(),
            [](const Entry& a, const Entry& b) { return lex_less(a.value, b.value); });
  return out;
}

EigMultiset EigMultiset::from_entries(const std::vector<Entry>& entries, double tol) {
  std::vector<Complex> values;
  for (const auto& e : entries) {
    if (e.mult < 1) throw DomainError("multiplicities must be positive");
    values.insert(values.end(), static_cast<std::size_t>(e.mult), e.value);
  }
  return from_values(values, tol);
}

int EigMultiset::size() const {
  int total = 0;
  for (const auto& e : entries_) total += e.mult;
  return total;
}

std::vector<Complex> EigMultiset::expanded() const {
  std::vector<Complex> out;
  for (const auto& e : entries_) out.insert(out.end(), static_cast<std::size_t>(e.mult), e.value);
  return out;
}

std::string EigMultiset::to_string(int digits) const {
  std::string out;
  for (const auto& e : entries_) {
    if (!out.empty()) out += ' ';
    out += format_complex(e.value, digits) + '^' + std::to_string(e.mult);
  }
  return out;
}

bool multiset_equal(const std::vector<Complex>& a, const std::vector<Complex>& b, double tol) {
  if (a.size() != b.size()) return false;
  std::vector<Complex> lhs = a;
  std::sort(lhs.begin(), lhs.end(), lex_less);
  std::vector<bool> used(b.size(), false);
  for (Complex z : lhs) {
    std::size_t best = b.size();
    double best_dist = tol;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (used[j]) continue;
      const double d = std::abs(b[j] - z);
      if (d <= best_dist) {
        best = j;
        best_dist = d;
      }
    }
    if (best == b.size()) return false;
    used[best] = true;
  }
  return true;
}

bool multiset_equal(const EigMultiset& a, const EigMultiset& b, double tol) {
  return multiset_equal(a.expanded(), b.expanded(), tol);
}

EigMultiset multiset_difference(const EigMultiset& a, const EigMultiset& b) {
  std::vector<Complex> rest = a.expanded();
  std::vector<bool> used(rest.size(), false);
  for (Complex z : b.expanded()) {
    std::size_t best = rest.size();
    double best_dist = a.tol();
    for (std::size_t j = 0; j < rest.size(); ++j) {
      if (used[j]) continue;
      const double d = std::abs(rest[j] - z);
      if (d <= best_dist) {
        best = j;
        best_dist = d;
      }
    }
    if (best == rest.size()) {
      throw ComputationError("multiset difference not contained: no partner for " + format_complex(z, 12));
    }
    used[best] = true;
  }
  std::vector<Complex> out;
  for (std::size_t j = 0; j < rest.size(); ++j) {
    if (!used[j]) out.push_back(rest[j]);
  }
  return EigMultiset::from_values(out, a.tol());
}

EigMultiset multiset_union(const EigMultiset& a, const EigMultiset& b) {
  std::vector<Complex> v = a.expanded();
  const std::vector<Complex> w = b.expanded();
  v.insert(v.end(), w.begin(), w.end());
  return EigMultiset::from_values(v, a.tol());
}

EigMultiset eigen_multiset(const Eigen::MatrixXcd& m, double tol) {
  if (m.rows() != m.cols()) throw DomainError("eigen_multiset needs a square matrix");
  if (m.rows() == 0) return EigMultiset::from_values({}, tol);
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m, false);
  if (solver.info() != Eigen::Success) throw ComputationError("eigenvalue iteration did not converge");
  const auto& ev = solver.eigenvalues();
  return EigMultiset::from_values(std::vector<Complex>(ev.data(), ev.data() + ev.size()), tol);
}

EigMultiset eigen_multiset(const NumericRep& m, double tol) { return eigen_multiset(m.entries, tol); }

EigMultiset lk_generator_spectrum(int n, Complex q, Complex t) {
  if (n < 2) throw DomainError("lk_generator_spectrum needs n >= 2");
  std::vector<EigMultiset::Entry> entries{{-t * q * q, 1}};
  if (n > 2) entries.push_back({-q, n - 2});
  if (n > 2) entries.push_back({1.0, (n - 1) * (n - 2) / 2});
  return EigMultiset::from_entries(entries);
}

EigMultiset burau_full_twist_spectrum(int n, int k, Complex q) {
  if (k < 2 || k > n) throw DomainError("need 2 <= k <= n");
  std::vector<EigMultiset::Entry> entries{{std::pow(q, k), k - 1}};
  if (n > k) entries.push_back({1.0, n - k});
  return EigMultiset::from_entries(entries);
}

EigMultiset sym2_multiset(const EigMultiset& e) {
  const std::vector<Complex> v = e.expanded();
  std::vector<Complex> out;
  for (std::size_t j = 0; j < v.size(); ++j) {
    for (std::size_t i = 0; i <= j; ++i) out.push_back(v[i] * v[j]);
  }
  return EigMultiset::from_values(out, e.tol());
}

EigMultiset alt2_multiset(const EigMultiset& e) {
  const std::vector<Complex> v = e.expanded();
  std::vector<Complex> out;
  for (std::size_t j = 0; j < v.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) out.push_back(v[i] * v[j]);
  }
  return EigMultiset::from_values(out, e.tol());
}

EigMultiset lk_spectrum_via_recursion(int n, const BraidWord& word_in_bk, Complex q, Complex t) {
  const int k = word_in_bk.strands();
  if (k < 2 || k > n) throw DomainError("recursion needs 2 <= k <= n");
  const BraidWord in_bn = include(word_in_bk, n);
  const EigMultiset burau_n = eigen_multiset(NumericGenerators(RepKind::burau, n, q, t).evaluate(in_bn));
  const EigMultiset burau_k = eigen_multiset(NumericGenerators(RepKind::burau, k, q, t).evaluate(word_in_bk));
  const EigMultiset lk_k = eigen_multiset(NumericGenerators(RepKind::lk, k, q, t).evaluate(word_in_bk));
  return multiset_union(multiset_difference(sym2_multiset(burau_n), sym2_multiset(burau_k)), lk_k);
}

bool conjugation_closed(const EigMultiset& e) {
  std::vector<Complex> conj = e.expanded();
  for (auto& z : conj) z = std::conj(z);
  return multiset_equal(e.expanded(), conj, e.tol());
}

std::vector<MultisetPair> kronecker_factorizations(const EigMultiset& e, int n1, int n2) {
  if (n1 < 2 || n2 < 2) throw DomainError("Kronecker factors need sizes >= 2");
  if (n1 * n2 != e.size()) {
    throw DomainError("factor sizes " + std::to_string(n1) + "x" + std::to_string(n2) +
                      " do not match multiset size " + std::to_string(e.size()));
  }
  check_search_size(e.size());
  const double tol = e.tol();
  const auto& entries = e.entries();
  const std::size_t distinct = entries.size();
  std::vector<MultisetPair> found;

  // Gauge: 1 is in M1, so M2 = 1 * M2 is a sub-multiset of e. Enumerate M2
  // by multiplicity vectors over the entries of e.
  std::vector<int> pick(distinct, 0);
  auto each_m2 = [&](auto&& self, std::size_t idx, int remaining, auto&& visit) -> void {
    if (idx == distinct) {
      if (remaining == 0) visit();
      return;
    }
    const int cap = std::min(remaining, entries[idx].mult);
    for (int c = cap; c >= 0; --c) {
      pick[idx] = c;
      self(self, idx + 1, remaining - c, visit);
    }
    pick[idx] = 0;
  };

  each_m2(each_m2, 0, n2, [&] {
    std::vector<Complex> m2;
    for (std::size_t i = 0; i < distinct; ++i) {
      m2.insert(m2.end(), static_cast<std::size_t>(pick[i]), entries[i].value);
    }
    Pool pool(e);
    for (std::size_t i = 0; i < distinct; ++i) pool.counts[i] -= pick[i];
    const Complex anchor = m2.front();
    std::vector<Complex> m1{Complex(1.0, 0.0)};
    std::vector<int> undo;

    auto extend = [&](auto&& self, std::size_t start) -> void {
      if (static_cast<int>(m1.size()) == n1) {
        if (!pool.exhausted()) return;
        MultisetPair candidate{EigMultiset::from_values(m1, tol), EigMultiset::from_values(m2, tol)};
        const bool seen = std::any_of(found.begin(), found.end(),
                                      [&](const MultisetPair& f) { return gauge_equivalent(f, candidate); });
        if (!seen) found.push_back(std::move(candidate));
        return;
      }
      for (std::size_t c = start; c < distinct; ++c) {
        if (pool.counts[c] == 0) continue;
        const Complex x = pool.values[c] / anchor;
        std::vector<Complex> row;
        row.reserve(m2.size());
        for (Complex y : m2) row.push_back(x * y);
        const std::size_t mark = undo.size();
        if (!pool.take_all(row, undo)) continue;
        m1.push_back(x);
        self(self, c);
        m1.pop_back();
        pool.restore(undo, mark);
      }
    };
    extend(extend, 0);
  });
  return found;
}

std::vector<EigMultiset> square_root_multisets(const EigMultiset& e, SquareMode mode) {
  const int size = e.size();
  check_search_size(size);
  int m = 0;
  while ((mode == SquareMode::sym ? m * (m + 1) / 2 : m * (m - 1) / 2) < size) ++m;
  if ((mode == SquareMode::sym ? m * (m + 1) / 2 : m * (m - 1) / 2) != size) {
    throw DomainError("multiset size " + std::to_string(size) + " is not triangular");
  }
  if (mode == SquareMode::alt && m < 3) {
    throw DomainError("alternating square roots need at least 3 eigenvalues");
  }
  const double tol = e.tol();
  std::vector<EigMultiset> found;
  Pool pool(e);
  std::vector<int> undo;
  std::vector<Complex> chosen;
  const std::size_t distinct = pool.values.size();

  // New element x contributes x * l for every chosen l, plus x^2 in sym mode.
  auto products_with = [&](Complex x) {
    std::vector<Complex> out;
    for (Complex l : chosen) out.push_back(x * l);
    if (mode == SquareMode::sym) out.push_back(x * x);
    return out;
  };

  auto extend = [&](auto&& self, std::size_t start) -> void {
    if (static_cast<int>(chosen.size()) == m) {
      if (!pool.exhausted()) return;
      EigMultiset candidate = EigMultiset::from_values(chosen, tol);
      if (!contains_equivalent(found, candidate)) found.push_back(std::move(candidate));
      return;
    }
    const Complex lead = chosen.front();
    for (std::size_t c = start; c < distinct; ++c) {
      if (pool.counts[c] == 0) continue;
      const Complex x = pool.values[c] / lead;
      const std::size_t mark = undo.size();
      if (!pool.take_all(products_with(x), undo)) continue;
      chosen.push_back(x);
      self(self, c);
      chosen.pop_back();
      pool.restore(undo, mark);
    }
  };

  for (const double sign : {1.0, -1.0}) {
    if (mode == SquareMode::sym) {
      // The lead l satisfies l^2 in e.
      for (std::size_t a = 0; a < distinct; ++a) {
        const Complex lead = sign * std::sqrt(pool.values[a]);
        const std::size_t mark = undo.size();
        if (!pool.take_all({lead * lead}, undo)) continue;
        chosen = {lead};
        extend(extend, 0);
        pool.restore(undo, mark);
      }
    } else {
      // With l1 l2 = e_a, l1 l3 = e_b, l2 l3 = e_c: l1^2 = e_a e_b / e_c.
      for (std::size_t a = 0; a < distinct; ++a) {
        for (std::size_t b = 0; b < distinct; ++b) {
          for (std::size_t c = 0; c < distinct; ++c) {
            const Complex lead = sign * std::sqrt(pool.values[a] * pool.values[b] / pool.values[c]);
            const Complex l2 = pool.values[a] / lead;
            const Complex l3 = pool.values[b] / lead;
            const std::size_t mark = undo.size();
            if (!pool.take_all({lead * l2, lead * l3, l2 * l3}, undo)) continue;
            chosen = {lead, l2, l3};
            extend(extend, 0);
            pool.restore(undo, mark);
          }
        }
      }
    }
  }
  return found;
}

int commutant_dimension(const std::vector<Eigen::MatrixXcd>& generators) {
  if (generators.empty()) throw DomainError("commutant needs at least one matrix");
  const Eigen::Index d = generators.front().rows();
  for (const auto& a : generators) {
    if (a.rows() != d || a.cols() != d) throw DomainError("commutant needs square matrices of equal size");
  }
  const Eigen::Index unknowns = d * d;
  if (unknowns == 0) return 0;
  // Column-major vec: vec(X A - A X) = (A^T kron I - I kron A) vec(X).
  Eigen::MatrixXcd system = Eigen::MatrixXcd::Zero(unknowns * static_cast<Eigen::Index>(generators.size()), unknowns);
  for (std::size_t g = 0; g < generators.size(); ++g) {
    const auto& a = generators[g];
    const Eigen::Index off = unknowns * static_cast<Eigen::Index>(g);
    for (Eigen::Index j = 0; j < d; ++j) {      // column of X
      for (Eigen::Index i = 0; i < d; ++i) {    // row of X
        const Eigen::Index col = j * d + i;
        // (X A)(i, c) gets X(i, j) A(j, c).
        for (Eigen::Index c = 0; c < d; ++c) system(off + c * d + i, col) += a(j, c);
        // (A X)(r, j) gets A(r, i) X(i, j).
        for (Eigen::Index r = 0; r < d; ++r) system(off + j * d + r, col) -= a(r, i);
      }
    }
  }
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(system);
  const auto& s = svd.singularValues();
  double scale = 0.0;
  for (const auto& a : generators) scale = std::max(scale, a.norm());
  const double largest = std::max(s.size() > 0 ? s(0) : 0.0, scale);
  Eigen::Index rank = 0;
  for (Eigen::Index k = 0; k < s.size(); ++k) {
    if (s(k) > tol::nullspace_relative * largest) ++rank;
  }
  return static_cast<int>(unknowns - rank);
}

TorusReport torus_rank_test(int n, Complex q, Complex t, int height) {
  if (n < 3) throw DomainError("torus test needs n >= 3");
  TorusReport report;
  report.n = n;
  report.relation_height = height;
  const int r = n - 2;
  NumericGenerators gens(RepKind::lk, n, q, t);
  std::vector<Eigen::MatrixXcd> twists;
  for (int k = 2; k <= n - 1; ++k) {
    const NumericRep raw{gens.evaluate(full_twist(n, k)), {BasisKind::pairs, n}};
    twists.push_back(normalize_su(raw, k * (k - 1), n, q, t).entries);
  }
  for (std::size_t a = 0; a < twists.size(); ++a) {
    for (std::size_t b = a + 1; b < twists.size(); ++b) {
      report.commute_residual =
          std::max(report.commute_residual, (twists[a] * twists[b] - twists[b] * twists[a]).norm());
    }
  }

  // A generic combination separates the joint eigenspaces.
  std::mt19937_64 rng(0x5eedULL);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
  Eigen::MatrixXcd combo = Eigen::MatrixXcd::Zero(twists.front().rows(), twists.front().cols());
  for (const auto& u : twists) combo += std::polar(1.0 + angle(rng), angle(rng)) * u;
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(combo);
  if (solver.info() != Eigen::Success) throw ComputationError("joint diagonalization did not converge");
  const Eigen::MatrixXcd& v = solver.eigenvectors();
  const Eigen::PartialPivLU<Eigen::MatrixXcd> lu(v);
  const Eigen::Index p = v.rows();
  report.angles.resize(p, r);
  for (int k = 0; k < r; ++k) {
    const Eigen::MatrixXcd diag = lu.solve(twists[static_cast<std::size_t>(k)] * v);
    for (Eigen::Index i = 0; i < p; ++i) {
      for (Eigen::Index j = 0; j < p; ++j) {
        if (i != j) report.diagonal_residual = std::max(report.diagonal_residual, std::abs(diag(i, j)));
      }
      report.angles(i, k) = std::arg(diag(i, i)) / (2.0 * M_PI);
    }
  }

  // Greedy row choice: largest component orthogonal to rows already taken.
  Eigen::MatrixXd basis(0, r);
  for (int step = 0; step < r; ++step) {
    Eigen::Index best = -1;
    double best_norm = 0.0;
    Eigen::RowVectorXd best_residual;
    for (Eigen::Index i = 0; i < p; ++i) {
      Eigen::RowVectorXd row = report.angles.row(i);
      for (Eigen::Index b = 0; b < basis.rows(); ++b) row -= row.dot(basis.row(b)) * basis.row(b);
      if (row.norm() > best_norm) {
        best = i;
        best_norm = row.norm();
        best_residual = row;
      }
    }
    if (best < 0) break;
    report.selected_rows.push_back(static_cast<int>(best));
    basis.conservativeResize(basis.rows() + 1, r);
    basis.row(basis.rows() - 1) = best_residual / best_norm;
  }
  if (static_cast<int>(report.selected_rows.size()) < r) return report;
  Eigen::MatrixXd block(r, r);
  for (int i = 0; i < r; ++i) block.row(i) = report.angles.row(report.selected_rows[static_cast<std::size_t>(i)]);
  report.selected_min_singular = Eigen::JacobiSVD<Eigen::MatrixXd>(block).singularValues().minCoeff();

  // Kronecker: the projected subgroup is dense in T^r iff no nonzero integer
  // c has c . block(:, k) in Z for every k.
  std::vector<int> c(static_cast<std::size_t>(r), -height);
  while (true) {
    const bool nonzero = std::any_of(c.begin(), c.end(), [](int x) { return x != 0; });
    if (nonzero) {
      bool all_integral = true;
      for (int k = 0; k < r && all_integral; ++k) {
        double s = 0.0;
        for (int i = 0; i < r; ++i) s += c[static_cast<std::size_t>(i)] * block(i, k);
        all_integral = std::abs(s - std::round(s)) < tol::integer_relation;
      }
      if (all_integral) {
        report.relation_found = true;
        break;
      }
    }
    int pos = 0;
    while (pos < r && c[static_cast<std::size_t>(pos)] == height) c[static_cast<std::size_t>(pos++)] = -height;
    if (pos == r) break;
    ++c[static_cast<std::size_t>(pos)];
  }
  report.full_rank = report.selected_min_singular > tol::nullspace_relative && !report.relation_found;
  return report;
}

}  // namespace lkrep
