#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "lkrep/laurent.hpp"
#include "lkrep/poly_matrix.hpp"

namespace lkrep::testing {

inline Complex unit(double angle) { return std::polar(1.0, angle); }

inline Complex random_unit(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 2.0 * std::numbers::pi);
  return unit(u(rng));
}

inline LaurentPoly2 random_poly(std::mt19937_64& rng, int terms = 4, int deg = 3, int coeff = 5) {
  std::uniform_int_distribution<int> d(-deg, deg);
  std::uniform_int_distribution<int> c(-coeff, coeff);
  LaurentPoly2 p;
  for (int k = 0; k < terms; ++k) p += LaurentPoly2::monomial(c(rng), d(rng), d(rng));
  return p;
}

// Eigenvalues through Eigen's general complex solver, independent of the
// library's multiset code.
inline std::vector<Complex> eigenvalues(const Eigen::MatrixXcd& m) {
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(m, false);
  const auto& v = es.eigenvalues();
  return {v.data(), v.data() + v.size()};
}

// Sorts both lists and matches greedily; true when every value pairs up.
inline bool same_values(std::vector<Complex> a, std::vector<Complex> b, double tol) {
  if (a.size() != b.size()) return false;
  std::vector<bool> used(b.size(), false);
  for (const Complex& x : a) {
    std::size_t best = b.size();
    double best_dist = tol;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (!used[j] && std::abs(x - b[j]) <= best_dist) {
        best = j;
        best_dist = std::abs(x - b[j]);
      }
    }
    if (best == b.size()) return false;
    used[best] = true;
  }
  return true;
}

// Leibniz expansion over all permutations, used as an oracle for the
// division-free characteristic polynomial.
inline LaurentPoly2 leibniz_determinant(const PolyMatrix& a) {
  const int d = a.dim();
  std::vector<int> perm(static_cast<std::size_t>(d));
  std::iota(perm.begin(), perm.end(), 0);
  LaurentPoly2 det;
  do {
    int inversions = 0;
    for (int i = 0; i < d; ++i) {
      for (int j = i + 1; j < d; ++j) inversions += perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)];
    }
    LaurentPoly2 term = inversions % 2 ? -1 : 1;
    for (int i = 0; i < d; ++i) term *= a(i, perm[static_cast<std::size_t>(i)]);
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

}  // namespace lkrep::testing
