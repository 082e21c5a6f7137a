#include <gtest/gtest.h>

#include "lkrep/errors.hpp"
#include "lkrep/reps.hpp"
#include "test_util.hpp"

namespace lkrep {
namespace {

class ExactRelations : public ::testing::TestWithParam<std::tuple<RepKind, int>> {};

TEST_P(ExactRelations, BraidAndFarCommutation) {
  const auto [kind, n] = GetParam();
  const auto& g = generators(kind, n).gens;
  ASSERT_EQ(static_cast<int>(g.size()), n - 1);
  for (int i = 0; i + 1 < n - 1; ++i) {
    EXPECT_EQ(g[i] * g[i + 1] * g[i], g[i + 1] * g[i] * g[i + 1]) << "i=" << i + 1;
  }
  for (int i = 0; i < n - 1; ++i) {
    for (int j = i + 2; j < n - 1; ++j) EXPECT_EQ(g[i] * g[j], g[j] * g[i]);
  }
}

TEST_P(ExactRelations, InversesAreExact) {
  const auto [kind, n] = GetParam();
  const auto& set = generators(kind, n);
  for (std::size_t i = 0; i < set.gens.size(); ++i) {
    EXPECT_TRUE((set.gens[i] * set.inverses[i]).is_identity());
    EXPECT_TRUE((set.inverses[i] * set.gens[i]).is_identity());
  }
}

INSTANTIATE_TEST_SUITE_P(BurauAndLk, ExactRelations,
                         ::testing::Combine(::testing::Values(RepKind::burau, RepKind::lk),
                                            ::testing::Values(3, 4, 5)),
                         [](const auto& info) {
                           return std::string(to_string(std::get<0>(info.param))) + "_n" +
                                  std::to_string(std::get<1>(info.param));
                         });

TEST(Reps, KindNames) {
  EXPECT_EQ(parse_rep_kind("lk"), RepKind::lk);
  EXPECT_EQ(to_string(RepKind::burau), "burau");
  EXPECT_THROW(parse_rep_kind("jones"), ParseError);
}

TEST(Reps, PairBasisOrderAndPrefix) {
  const PairBasis b(4);
  ASSERT_EQ(b.size(), 6);
  const std::vector<std::pair<int, int>> want{{1, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}, {3, 4}};
  EXPECT_EQ(b.pairs(), want);
  for (int k = 0; k < b.size(); ++k) {
    EXPECT_EQ(b.index_of(want[static_cast<std::size_t>(k)].first, want[static_cast<std::size_t>(k)].second), k);
  }
  EXPECT_EQ(PairBasis::prefix_size(3), 3);
}

TEST(Reps, LkPreservesThePrefixSubspace) {
  for (int n = 4; n <= 5; ++n) {
    for (int k = 3; k < n; ++k) {
      const int p = PairBasis::prefix_size(k);
      const int d = PairBasis(n).size();
      for (int i = 1; i < k; ++i) {
        const PolyMatrix m = lk_gen(n, i).entries;
        for (const auto& entry : m.block(p, 0, d - p, p)) EXPECT_TRUE(entry.is_zero());
        EXPECT_EQ(m.principal_block(0, p), lk_gen(k, i).entries);
      }
    }
  }
}

TEST(Reps, LkDeterminantAgainstLeibniz) {
  for (int n = 3; n <= 4; ++n) {
    for (int i = 1; i < n; ++i) {
      EXPECT_EQ(testing::leibniz_determinant(lk_gen(n, i).entries), lk_generator_determinant(n));
    }
  }
  const LaurentPoly2 want = -LaurentPoly2::t() * LaurentPoly2(-1).pow(5) * LaurentPoly2::q(5);
  EXPECT_EQ(lk_generator_determinant(5), want);
}

TEST(Reps, NumericMatchesExactEvaluation) {
  std::mt19937_64 rng(31);
  const BraidWord w = parse_braid("1 -2 3 2 -1 3", 4);
  for (RepKind kind : {RepKind::burau, RepKind::lk}) {
    const Complex q = testing::random_unit(rng);
    const Complex t = testing::random_unit(rng);
    const Eigen::MatrixXcd exact = rep_of_word(kind, w).entries.eval(q, t);
    const Eigen::MatrixXcd numeric = rep_of_word(kind, w, q, t).entries;
    EXPECT_LT((exact - numeric).norm(), 1e-10);
  }
}

TEST(Reps, PermCharacterIsFixedPointsMinusOne) {
  std::mt19937_64 rng(32);
  std::uniform_int_distribution<int> letter(1, 4);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Letter> letters;
    for (int k = 0; k < 7; ++k) letters.push_back({letter(rng), k % 3 ? 1 : -1});
    const BraidWord w(5, letters);
    // Independent count: apply transpositions to 1..5 directly.
    std::vector<int> pos{0, 1, 2, 3, 4};
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
      for (int& p : pos) {
        if (p == it->index - 1) {
          p = it->index;
        } else if (p == it->index) {
          p = it->index - 1;
        }
      }
    }
    int fixed = 0;
    for (int i = 0; i < 5; ++i) fixed += pos[static_cast<std::size_t>(i)] == i;
    const LaurentPoly2 tr = perm_rep(w).entries.trace();
    EXPECT_EQ(tr, LaurentPoly2(fixed - 1));
  }
}

TEST(Reps, BurauFullTwistIsScalar) {
  const Complex q = testing::unit(0.7);
  for (int n = 3; n <= 6; ++n) {
    const Eigen::MatrixXcd m = rep_of_word(RepKind::burau, full_twist(n, n), q, 1.0).entries;
    const Complex scalar = std::pow(q, n);
    EXPECT_LT((m - scalar * Eigen::MatrixXcd::Identity(n - 1, n - 1)).norm(), 1e-10) << "n=" << n;
  }
}

TEST(Reps, LkFullTwistIsCentralExactly) {
  const int n = 4;
  const PolyMatrix d2 = rep_of_word(RepKind::lk, full_twist(n, n)).entries;
  for (const auto& g : generators(RepKind::lk, n).gens) EXPECT_EQ(d2 * g, g * d2);
}

TEST(Reps, SymAndAltSquareSpectraArePairProducts) {
  std::mt19937_64 rng(33);
  const Eigen::MatrixXcd m = Eigen::MatrixXcd::Random(4, 4);
  const auto ev = testing::eigenvalues(m);
  std::vector<Complex> sym;
  std::vector<Complex> alt;
  for (std::size_t i = 0; i < ev.size(); ++i) {
    for (std::size_t j = i; j < ev.size(); ++j) {
      sym.push_back(ev[i] * ev[j]);
      if (j > i) alt.push_back(ev[i] * ev[j]);
    }
  }
  EXPECT_TRUE(testing::same_values(testing::eigenvalues(sym_square(m)), sym, 1e-8));
  EXPECT_TRUE(testing::same_values(testing::eigenvalues(alt_square(m)), alt, 1e-8));
}

TEST(Reps, ExactSquaresCommuteWithEvaluation) {
  const ExactRep b = rep_of_word(RepKind::burau, parse_braid("1 2 -1", 4));
  const Complex q = testing::unit(1.3);
  EXPECT_LT((sym_square(b.entries).eval(q, 1.0) - sym_square(b.entries.eval(q, 1.0))).norm(), 1e-10);
  EXPECT_LT((alt_square(b.entries).eval(q, 1.0) - alt_square(b.entries.eval(q, 1.0))).norm(), 1e-10);
  EXPECT_EQ(sym_square(b).basis.kind, BasisKind::sym_square);
}

TEST(Reps, SuNormalizationHasUnitDeterminant) {
  const Complex q = testing::unit(0.005);
  const Complex t = -testing::unit(0.1);
  for (int n = 3; n <= 5; ++n) {
    const BraidWord w = parse_braid("1 2 -1 1", n);
    const NumericRep m = normalize_su(rep_of_word(RepKind::lk, w, q, t), exponent_sum(w), n, q, t);
    EXPECT_LT(std::abs(m.entries.determinant() - 1.0), 1e-10);
  }
}

TEST(Reps, LkAtMinusOneVersusBurauSymmetricSquare) {
  for (int n = 3; n <= 4; ++n) {
    for (const char* text : {"1", "1 2", "1 -2 1 2"}) {
      const Sym2Comparison c = lk_vs_sym2_burau(n, parse_braid(text, n));
      EXPECT_TRUE(c.charpoly_equal) << text;
      EXPECT_EQ(c.lk_charpoly, c.sym2_charpoly);
    }
    // Same spectrum, but the matrices are not the same and not diagonally
    // conjugate in the shared pair ordering.
    const Sym2Comparison c = lk_vs_sym2_burau(n, parse_braid("1", n));
    EXPECT_FALSE(c.identical);
    EXPECT_FALSE(c.diagonal_rescaling);
  }
}

}  // namespace
}  // namespace lkrep
