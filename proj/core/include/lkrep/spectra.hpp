#pragma once

#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "lkrep/braid.hpp"
#include "lkrep/laurent.hpp"
#include "lkrep/reps.hpp"
#include "lkrep/tolerances.hpp"

namespace lkrep {

/// Multiset of complex numbers with multiplicities, clustered at tol.
///
/// Entries are sorted by (re, im) of their representative. Two entries are
/// never within tol of each other.
class EigMultiset {
 public:
  struct Entry {
    Complex value;
    int mult = 1;
  };

  EigMultiset() = default;
  /// Clusters raw values: values within tol of each other (transitively)
  /// merge into one entry whose value is the cluster mean.
  static EigMultiset from_values(const std::vector<Complex>& values, double tol = tol::multiset);
  static EigMultiset from_entries(const std::vector<Entry>& entries, double tol = tol::multiset);

  const std::vector<Entry>& entries() const { return entries_; }
  double tol() const { return tol_; }
  int size() const;
  bool empty() const { return entries_.empty(); }
  /// Every value repeated by its multiplicity, sorted by (re, im).
  std::vector<Complex> expanded() const;

  /// "value^mult" items separated by spaces, value printed as (re,im).
  std::string to_string(int digits = 6) const;

 private:
  std::vector<Entry> entries_;
  double tol_ = tol::multiset;
};

/// Greedy nearest matching of the expanded lists; true when every element
/// finds a partner within tol.
bool multiset_equal(const EigMultiset& a, const EigMultiset& b, double tol = tol::multiset);
bool multiset_equal(const std::vector<Complex>& a, const std::vector<Complex>& b,
                    double tol = tol::multiset);

/// a minus b. Throws ComputationError naming the first value of b that has
/// no partner in a.
EigMultiset multiset_difference(const EigMultiset& a, const EigMultiset& b);
EigMultiset multiset_union(const EigMultiset& a, const EigMultiset& b);

EigMultiset eigen_multiset(const Eigen::MatrixXcd& m, double tol = tol::multiset);
EigMultiset eigen_multiset(const NumericRep& m, double tol = tol::multiset);

/// {-tq^2} {-q}^{n-2} {1}^{(n-1)(n-2)/2}
EigMultiset lk_generator_spectrum(int n, Complex q, Complex t);

/// {q^k}^{k-1} {1}^{n-k}: Burau image of the full twist of the first k
/// strands.
EigMultiset burau_full_twist_spectrum(int n, int k, Complex q);

/// {l_i l_j : i <= j} and {l_i l_j : i < j}.
EigMultiset sym2_multiset(const EigMultiset& e);
EigMultiset alt2_multiset(const EigMultiset& e);

/// Ev rho_n(b) from Burau data and rho_k only:
/// (Sym^2 Ev psi_n(b) minus Sym^2 Ev psi_k(b)) union Ev rho_k(b),
/// for a word b on k strands included into B_n.
EigMultiset lk_spectrum_via_recursion(int n, const BraidWord& word_in_bk, Complex q, Complex t);

/// Invariance of the multiset under complex conjugation at its tol.
bool conjugation_closed(const EigMultiset& e);

using MultisetPair = std::pair<EigMultiset, EigMultiset>;

/// All (M1, M2) of sizes n1, n2 with {x y : x in M1, y in M2} = e, up to the
/// gauge (s M1, M2 / s). Representatives are gauge-fixed so that M1
/// contains 1. Throws DomainError if n1 * n2 != |e|, n1 or n2 < 2, or |e|
/// exceeds the search bound.
std::vector<MultisetPair> kronecker_factorizations(const EigMultiset& e, int n1, int n2);

enum class SquareMode { sym, alt };

/// All L with sym2_multiset(L) = e (or alt2_multiset). L and -L are both
/// reported. Alt mode needs |L| >= 3, since smaller alternating squares do
/// not determine L. For |L| = 4 the dual {sqrt(prod L) / l} has the same
/// alternating square, so two +- pairs come back. Throws DomainError when |e| is not triangular.
std::vector<EigMultiset> square_root_multisets(const EigMultiset& e, SquareMode mode);

/// Dimension of {X : X A_i = A_i X for all i}, counting singular values
/// below 1e-8 of the largest as zero.
int commutant_dimension(const std::vector<Eigen::MatrixXcd>& generators);

/// Joint spectrum of the SU-normalized full twists beta_{n,k},
/// k = 2..n-1, and a test that they generate a dense subgroup of an
/// (n-2)-dimensional torus.
struct TorusReport {
  int n = 0;
  double commute_residual = 0.0;   // max ||U_a U_b - U_b U_a||_F
  double diagonal_residual = 0.0;  // max off-diagonal after joint diagonalization
  Eigen::MatrixXd angles;          // p x (n-2), arg / (2 pi)
  std::vector<int> selected_rows;  // n-2 rows with a nonsingular angle block
  double selected_min_singular = 0.0;
  int relation_height = 0;         // |c_i| bound searched
  bool relation_found = false;     // some integer c != 0 with c . angles in Z^{n-2}
  bool full_rank = false;          // the closure is (n-2)-dimensional
};

TorusReport torus_rank_test(int n, Complex q, Complex t, int height = 20);

}  // namespace lkrep
