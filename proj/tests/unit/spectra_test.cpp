#include <gtest/gtest.h>

#include "lkrep/errors.hpp"
#include "lkrep/spectra.hpp"
#include "test_util.hpp"

namespace lkrep {
namespace {

using testing::unit;

EigMultiset ms(std::vector<Complex> v) { return EigMultiset::from_values(v); }

TEST(EigMultiset, ClustersWithinTolerance) {
  const EigMultiset e = ms({1.0, 1.0 + 1e-12, 2.0, Complex(0, 1), 2.0});
  ASSERT_EQ(e.entries().size(), 3u);
  EXPECT_EQ(e.size(), 5);
  EXPECT_EQ(e.entries()[0].value, Complex(0, 1));
  EXPECT_EQ(e.entries()[1].mult, 2);
  EXPECT_EQ(e.to_string(2), "(0.00,1.00)^1 (1.00,0.00)^2 (2.00,0.00)^2");
}

TEST(EigMultiset, DifferenceUnionAndContainment) {
  const EigMultiset a = ms({1.0, 1.0, 2.0, 3.0});
  const EigMultiset b = ms({1.0, 3.0});
  EXPECT_TRUE(multiset_equal(multiset_difference(a, b), ms({1.0, 2.0})));
  EXPECT_TRUE(multiset_equal(multiset_union(multiset_difference(a, b), b), a));
  EXPECT_THROW(multiset_difference(b, ms({2.0})), ComputationError);
  EXPECT_FALSE(multiset_equal(a, ms({1.0, 2.0, 2.0, 3.0})));
}

TEST(Spectra, GeneratorClosedFormAgainstDirectEigensolve) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 10; ++trial) {
    const Complex q = testing::random_unit(rng);
    const Complex t = testing::random_unit(rng);
    for (int n = 3; n <= 6; ++n) {
      const auto direct = testing::eigenvalues(NumericGenerators(RepKind::lk, n, q, t).gen(n / 2));
      EXPECT_TRUE(testing::same_values(direct, lk_generator_spectrum(n, q, t).expanded(), 1e-8));
    }
  }
}

TEST(Spectra, BurauFullTwistAgainstDirectEigensolve) {
  const Complex q = unit(0.9);
  for (int n = 3; n <= 6; ++n) {
    for (int k = 2; k <= n; ++k) {
      const auto m = rep_of_word(RepKind::burau, full_twist(n, k), q, 1.0).entries;
      EXPECT_TRUE(testing::same_values(testing::eigenvalues(m), burau_full_twist_spectrum(n, k, q).expanded(), 1e-8))
          << "n=" << n << " k=" << k;
    }
  }
}

TEST(Spectra, RecursionAgainstDirectEigensolve) {
  std::mt19937_64 rng(42);
  const Complex q = unit(0.37);
  const Complex t = unit(2.1);
  for (int n = 4; n <= 6; ++n) {
    for (int k = 2; k < n; ++k) {
      std::uniform_int_distribution<int> letter(1, k - 1);
      std::vector<Letter> letters;
      for (int i = 0; i < 5; ++i) letters.push_back({letter(rng), i % 2 ? -1 : 1});
      const BraidWord b(k, letters);
      const auto direct = testing::eigenvalues(rep_of_word(RepKind::lk, include(b, n), q, t).entries);
      EXPECT_TRUE(testing::same_values(direct, lk_spectrum_via_recursion(n, b, q, t).expanded(), 1e-7))
          << "n=" << n << " k=" << k;
    }
  }
}

TEST(Spectra, ConjugationClosed) {
  EXPECT_TRUE(conjugation_closed(ms({unit(0.3), unit(-0.3), 1.0})));
  EXPECT_FALSE(conjugation_closed(ms({unit(0.3), 1.0})));
}

// (M1, M2) ~ (s M1, M2 / s); s is a ratio of elements of the two M1s.
bool gauge_equivalent(const MultisetPair& a, const MultisetPair& b) {
  for (const Complex& x : a.first.expanded()) {
    for (const Complex& y : b.first.expanded()) {
      const Complex s = x / y;
      std::vector<Complex> s1;
      std::vector<Complex> s2;
      for (const Complex& v : b.first.expanded()) s1.push_back(s * v);
      for (const Complex& v : b.second.expanded()) s2.push_back(v / s);
      if (multiset_equal(a.first, ms(s1)) && multiset_equal(a.second, ms(s2))) return true;
    }
  }
  return false;
}

// Oracle: M1 ranges over sub-multisets of the ratios e_i / e_j containing 1,
// M2 over sub-multisets of e itself (1 in M1 puts M2 inside e).
std::vector<MultisetPair> brute_kronecker(const EigMultiset& e, int n1, int n2) {
  const auto ev = e.expanded();
  std::vector<Complex> ratios;
  for (const Complex& a : ev) {
    for (const Complex& b : ev) ratios.push_back(a / b);
  }
  std::vector<MultisetPair> out;
  auto add = [&](const std::vector<Complex>& m1, const std::vector<Complex>& m2) {
    const MultisetPair cand{ms(m1), ms(m2)};
    for (const auto& p : out) {
      if (gauge_equivalent(p, cand)) return;
    }
    out.push_back(cand);
  };
  auto choose = [](const std::vector<Complex>& pool, int k, auto&& fn) {
    std::vector<int> idx(static_cast<std::size_t>(k));
    auto rec = [&](auto&& self, int pos, int start) -> void {
      if (pos == k) {
        std::vector<Complex> pick;
        for (int i : idx) pick.push_back(pool[static_cast<std::size_t>(i)]);
        fn(pick);
        return;
      }
      for (int i = start; i < static_cast<int>(pool.size()); ++i) {
        idx[static_cast<std::size_t>(pos)] = i;
        self(self, pos + 1, i + 1);
      }
    };
    rec(rec, 0, 0);
  };
  choose(ratios, n1 - 1, [&](std::vector<Complex> rest1) {
    rest1.push_back(1.0);
    choose(ev, n2, [&](const std::vector<Complex>& m2) {
      std::vector<Complex> prod;
      for (const Complex& x : rest1) {
        for (const Complex& y : m2) prod.push_back(x * y);
      }
      if (multiset_equal(ms(prod), e)) add(rest1, m2);
    });
  });
  return out;
}

bool contains_pair(const std::vector<MultisetPair>& list, const MultisetPair& p) {
  for (const auto& x : list) {
    if (gauge_equivalent(x, p)) return true;
  }
  return false;
}

TEST(Kronecker, AgreesWithBruteForce) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 6; ++trial) {
    std::vector<Complex> m1{1.0, testing::random_unit(rng)};
    std::vector<Complex> m2{testing::random_unit(rng), testing::random_unit(rng), testing::random_unit(rng)};
    std::vector<Complex> prod;
    for (const Complex& x : m1) {
      for (const Complex& y : m2) prod.push_back(x * y);
    }
    const EigMultiset e = ms(prod);
    const auto fast = kronecker_factorizations(e, 2, 3);
    const auto slow = brute_kronecker(e, 2, 3);
    EXPECT_EQ(fast.size(), slow.size());
    for (const auto& p : slow) EXPECT_TRUE(contains_pair(fast, p));
    EXPECT_TRUE(contains_pair(fast, {ms(m1), ms(m2)}));
  }
}

TEST(Kronecker, RepeatedValuesAndNoFactorization) {
  const Complex a = unit(0.4);
  const Complex b = unit(1.1);
  // {a^2, ab, ab, b^2} = {a, b} x {a, b} ~ {1, b/a} x {a^2, ab}.
  const auto f = kronecker_factorizations(ms({a * a, a * b, a * b, b * b}), 2, 2);
  ASSERT_EQ(f.size(), 1u);
  EXPECT_TRUE(gauge_equivalent(f[0], {ms({1.0, b / a}), ms({a * a, a * b})}));
  // Four generic values have no 2x2 factorization.
  const EigMultiset generic = ms({unit(0.1), unit(0.5), unit(1.7), unit(2.9)});
  EXPECT_TRUE(kronecker_factorizations(generic, 2, 2).empty());
  EXPECT_TRUE(brute_kronecker(generic, 2, 2).empty());
  EXPECT_THROW(kronecker_factorizations(generic, 2, 3), DomainError);
}

// Oracle for symmetric roots: every element of L squares into e, so L is
// drawn from the square roots of e.
std::vector<EigMultiset> brute_sym_roots(const EigMultiset& e, int m) {
  std::vector<Complex> pool;
  for (const auto& entry : e.entries()) {
    const Complex r = std::sqrt(entry.value);
    pool.push_back(r);
    pool.push_back(-r);
  }
  std::vector<EigMultiset> out;
  std::vector<int> idx(static_cast<std::size_t>(m), 0);
  auto rec = [&](auto&& self, int pos, int start) -> void {
    if (pos == m) {
      std::vector<Complex> l;
      for (int i : idx) l.push_back(pool[static_cast<std::size_t>(i)]);
      const EigMultiset cand = ms(l);
      if (!multiset_equal(sym2_multiset(cand), e)) return;
      for (const auto& x : out) {
        if (multiset_equal(x, cand)) return;
      }
      out.push_back(cand);
      return;
    }
    for (int i = start; i < static_cast<int>(pool.size()); ++i) {
      idx[static_cast<std::size_t>(pos)] = i;
      self(self, pos + 1, i);  // with repetition
    }
  };
  rec(rec, 0, 0);
  return out;
}

TEST(SquareRoots, SymmetricAgreesWithBruteForce) {
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 5; ++trial) {
    const EigMultiset l = ms({testing::random_unit(rng), testing::random_unit(rng), testing::random_unit(rng)});
    const EigMultiset e = sym2_multiset(l);
    const auto fast = square_root_multisets(e, SquareMode::sym);
    const auto slow = brute_sym_roots(e, 3);
    EXPECT_EQ(fast.size(), slow.size());
    for (const auto& x : slow) {
      bool found = false;
      for (const auto& y : fast) found = found || multiset_equal(x, y);
      EXPECT_TRUE(found);
    }
  }
}

bool contains(const std::vector<EigMultiset>& list, const std::vector<Complex>& v) {
  for (const auto& x : list) {
    if (multiset_equal(x, ms(v))) return true;
  }
  return false;
}

std::vector<Complex> scaled(const std::vector<Complex>& v, Complex s) {
  std::vector<Complex> out;
  for (const Complex& x : v) out.push_back(s * x);
  return out;
}

TEST(SquareRoots, AlternatingRecoversPlusMinusL) {
  std::mt19937_64 rng(45);
  for (int m : {3, 5, 6}) {
    std::vector<Complex> v;
    for (int i = 0; i < m; ++i) v.push_back(testing::random_unit(rng));
    const auto roots = square_root_multisets(alt2_multiset(ms(v)), SquareMode::alt);
    ASSERT_EQ(roots.size(), 2u) << "m=" << m;
    for (const auto& r : roots) EXPECT_TRUE(multiset_equal(alt2_multiset(r), alt2_multiset(ms(v))));
    EXPECT_TRUE(contains(roots, v));
    EXPECT_TRUE(contains(roots, scaled(v, -1.0)));
  }
}

TEST(SquareRoots, AlternatingFourHasADualPair) {
  // In dimension 4, x_i x_j and x_k x_l swap under x -> sqrt(det) / x, so
  // the dual multiset has the same alternating square.
  std::mt19937_64 rng(46);
  std::vector<Complex> v;
  for (int i = 0; i < 4; ++i) v.push_back(testing::random_unit(rng));
  const Complex root_det = std::sqrt(v[0] * v[1] * v[2] * v[3]);
  std::vector<Complex> dual;
  for (const Complex& x : v) dual.push_back(root_det / x);
  const auto roots = square_root_multisets(alt2_multiset(ms(v)), SquareMode::alt);
  ASSERT_EQ(roots.size(), 4u);
  EXPECT_TRUE(contains(roots, v));
  EXPECT_TRUE(contains(roots, scaled(v, -1.0)));
  EXPECT_TRUE(contains(roots, dual));
  EXPECT_TRUE(contains(roots, scaled(dual, -1.0)));
}

TEST(SquareRoots, RejectsNonTriangularSizes) {
  EXPECT_THROW(square_root_multisets(ms({1.0, 2.0}), SquareMode::sym), DomainError);
}

TEST(Commutant, KnownDimensions) {
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(3, 3);
  EXPECT_EQ(commutant_dimension({id}), 9);
  Eigen::MatrixXcd diag = Eigen::MatrixXcd::Zero(4, 4);
  diag.diagonal() << 1.0, 2.0, 3.0, 4.0;
  EXPECT_EQ(commutant_dimension({diag}), 4);
  // Two copies of an irreducible 2-dimensional block: commutant M_2(C).
  Eigen::MatrixXcd x(2, 2);
  x << 0, 1, 1, 0;
  Eigen::MatrixXcd z(2, 2);
  z << 1, 0, 0, -1;
  Eigen::MatrixXcd xx = Eigen::MatrixXcd::Zero(4, 4);
  Eigen::MatrixXcd zz = Eigen::MatrixXcd::Zero(4, 4);
  xx.topLeftCorner(2, 2) = x;
  xx.bottomRightCorner(2, 2) = x;
  zz.topLeftCorner(2, 2) = z;
  zz.bottomRightCorner(2, 2) = z;
  EXPECT_EQ(commutant_dimension({xx, zz}), 4);
  // Inequivalent blocks (spectra of the second generator differ): only
  // scalars on each.
  zz.bottomRightCorner(2, 2) = 2.0 * z;
  EXPECT_EQ(commutant_dimension({xx, zz}), 2);
}

TEST(Commutant, LkIsIrreducibleAtAGenericPoint) {
  for (int n = 3; n <= 5; ++n) {
    const NumericGenerators g(RepKind::lk, n, unit(0.005), -unit(0.1));
    std::vector<Eigen::MatrixXcd> gens;
    for (int i = 1; i < n; ++i) gens.push_back(g.gen(i));
    EXPECT_EQ(commutant_dimension(gens), 1) << "n=" << n;
  }
}

TEST(Torus, FullTwistsGenerateFullRankTori) {
  for (int n = 3; n <= 5; ++n) {
    const TorusReport r = torus_rank_test(n, unit(0.005), -unit(0.1));
    EXPECT_LT(r.commute_residual, 1e-8);
    EXPECT_LT(r.diagonal_residual, 1e-8);
    EXPECT_EQ(r.angles.cols(), n - 2);
    EXPECT_FALSE(r.relation_found);
    EXPECT_TRUE(r.full_rank) << "n=" << n;
  }
}

}  // namespace
}  // namespace lkrep
