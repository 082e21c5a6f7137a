#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "lkrep/braid.hpp"
#include "lkrep/laurent.hpp"
#include "lkrep/poly_matrix.hpp"

namespace lkrep {

enum class RepKind { burau, lk, perm };

std::string_view to_string(RepKind kind);
RepKind parse_rep_kind(std::string_view text);

/// Basis {v_{i,j} : 1 <= i < j <= n} ordered by (j, i). For every k <= n the
/// first k(k-1)/2 vectors span E_k = {v_{i,j} : j <= k}, so the inclusion
/// B_k into B_n acts on a prefix.
class PairBasis {
 public:
  explicit PairBasis(int n);

  int n() const { return n_; }
  int size() const { return static_cast<int>(pairs_.size()); }
  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
  /// 0-based position of v_{i,j}, 1 <= i < j <= n.
  int index_of(int i, int j) const;
  static int prefix_size(int k) { return k * (k - 1) / 2; }

 private:
  int n_;
  std::vector<std::pair<int, int>> pairs_;
};

/// What the coordinates of a representation matrix refer to.
enum class BasisKind {
  standard,       // e_1..e_d
  pairs,          // PairBasis(n)
  perm_quotient,  // f_i = e_i - e_{i+1}, i = 1..n-1, of the permutation module
  sym_square,     // e_i . e_j, i <= j, ordered by (j, i)
  alt_square,     // e_i ^ e_j, i < j, ordered by (j, i)
};

struct Basis {
  BasisKind kind = BasisKind::standard;
  // Strand count for pairs and perm_quotient; underlying dimension for
  // sym_square and alt_square; the dimension itself for standard.
  int n = 0;

  friend bool operator==(const Basis&, const Basis&) = default;
};

std::string_view to_string(BasisKind kind);

/// Matrix acting on column vectors: column c is the image of basis vector c.
/// Exact and numeric matrices are distinct types and never mix.
template <class Entries>
struct RepMatrix {
  Entries entries;
  Basis basis;
};

using ExactRep = RepMatrix<PolyMatrix>;
using NumericRep = RepMatrix<Eigen::MatrixXcd>;

/// Reduced Burau matrix psi_n(sigma_i), dimension n-1: -q at (i,i), -q at
/// (i-1,i) and -1 at (i+1,i) where those rows exist, 1 elsewhere on the
/// diagonal (1-based).
ExactRep burau_gen(int n, int i);

/// Lawrence-Krammer matrix rho_n(sigma_i) on PairBasis(n), Bigelow-Budney
/// sign convention for t.
ExactRep lk_gen(int n, int i);

/// Closed form det rho_n(sigma_i) = -t(-q)^n.
LaurentPoly2 lk_generator_determinant(int n);

/// Generators and their exact inverses for one representation, built once
/// per (kind, n) and cached. Inverses are verified by multiplication.
struct GeneratorSet {
  RepKind kind;
  int n;
  Basis basis;
  std::vector<PolyMatrix> gens;
  std::vector<PolyMatrix> inverses;
};

const GeneratorSet& generators(RepKind kind, int n);

/// Exact image of a word: ordered product of generator matrices.
ExactRep rep_of_word(RepKind kind, const BraidWord& word);

/// Numeric generator matrices at fixed (q, t); evaluates words by dense
/// products. Cheap to copy around for repeated evaluation.
class NumericGenerators {
 public:
  NumericGenerators(RepKind kind, int n, Complex q, Complex t);

  RepKind kind() const { return kind_; }
  int n() const { return n_; }
  int dim() const { return dim_; }
  Complex q() const { return q_; }
  Complex t() const { return t_; }
  const Eigen::MatrixXcd& gen(int i) const { return gens_[static_cast<std::size_t>(i - 1)]; }
  const Eigen::MatrixXcd& inv(int i) const { return inverses_[static_cast<std::size_t>(i - 1)]; }

  Eigen::MatrixXcd evaluate(const BraidWord& word) const;

 private:
  RepKind kind_;
  int n_;
  int dim_;
  Complex q_;
  Complex t_;
  std::vector<Eigen::MatrixXcd> gens_;
  std::vector<Eigen::MatrixXcd> inverses_;
};

NumericRep rep_of_word(RepKind kind, const BraidWord& word, Complex q, Complex t);

/// Standard (n-1)-dimensional representation of the word's permutation on
/// f_i = e_i - e_{i+1}: the sum-zero complement of (1,...,1) in C^n.
ExactRep perm_rep(const BraidWord& word);

/// Induced operators on e_i . e_j (i <= j) and e_i ^ e_j (i < j), bases
/// ordered by (j, i) like PairBasis.
PolyMatrix sym_square(const PolyMatrix& m);
PolyMatrix alt_square(const PolyMatrix& m);
Eigen::MatrixXcd sym_square(const Eigen::MatrixXcd& m);
Eigen::MatrixXcd alt_square(const Eigen::MatrixXcd& m);
ExactRep sym_square(const ExactRep& m);
ExactRep alt_square(const ExactRep& m);
NumericRep sym_square(const NumericRep& m);
NumericRep alt_square(const NumericRep& m);

/// mu = det(rho_n(sigma_1))^{-2/(n(n-1))}, principal branch of the log.
Complex su_scale(int n, Complex q, Complex t);

/// rho'_n(beta) = mu^{[beta]} rho_n(beta), determinant 1.
NumericRep normalize_su(const NumericRep& m, int word_exponent, int n, Complex q, Complex t);

/// Result of comparing rho_n(w) at t = -1 with Sym^2 psi_n(w).
struct Sym2Comparison {
  int n = 0;
  std::vector<LaurentPoly2> lk_charpoly;
  std::vector<LaurentPoly2> sym2_charpoly;
  bool charpoly_equal = false;
  // v_{i,j} <-> e_i . e_{j-1}: both bases are ordered by (j, i), so this is
  // plain entrywise equality.
  bool identical = false;
  // Whether some diagonal D gives D rho D^{-1} = Sym^2 psi at a generic
  // numeric q; when it exists the diagonal is reported.
  bool diagonal_rescaling = false;
  std::vector<Complex> rescaling;
};

Sym2Comparison lk_vs_sym2_burau(int n, const BraidWord& word);

}  // namespace lkrep
