#include <algorithm>

#include <gtest/gtest.h>

#include "lkrep/errors.hpp"
#include "lkrep/forms.hpp"
#include "test_util.hpp"

namespace lkrep {
namespace {

const Complex kQ = scan_q(0.1, 0.05);
const Complex kT = scan_t(0.1);

TEST(Forms, ScanPointParametrization) {
  EXPECT_LT(std::abs(kQ - std::polar(1.0, 0.005)), 1e-15);
  EXPECT_LT(std::abs(kT + std::polar(1.0, 0.1)), 1e-15);
}

TEST(Forms, DefiniteAtTheReferencePoint) {
  for (int n = 3; n <= 6; ++n) {
    const HermitianForm h = invariant_form(n, kQ, kT);
    EXPECT_LT(h.residual, 1e-10);
    EXPECT_EQ(h.nullspace_dim, 1);
    EXPECT_LT((h.gram - h.gram.adjoint()).norm(), 1e-12);
    const Definiteness d = is_definite(h);
    EXPECT_TRUE(d.definite) << "n=" << n;
    EXPECT_GT(d.min_eigenvalue, 0.5);
  }
}

TEST(Forms, InvariantUnderRandomWords) {
  std::mt19937_64 rng(51);
  std::uniform_int_distribution<int> letter(1, 4);
  const HermitianForm h = invariant_form(5, kQ, kT);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Letter> letters;
    for (int k = 0; k < 10; ++k) letters.push_back({letter(rng), trial % 2 ? 1 : -1});
    const Eigen::MatrixXcd a = rep_of_word(RepKind::lk, BraidWord(5, letters), kQ, kT).entries;
    EXPECT_LT((a.adjoint() * h.gram * a - h.gram).norm(), 1e-9);
  }
}

TEST(Forms, IrreducibleUnitaryGroupGivesScalarForm) {
  // Pauli X and Z generate an irreducible group; the only invariant form is
  // the identity up to scale.
  Eigen::MatrixXcd x(2, 2);
  x << 0, 1, 1, 0;
  Eigen::MatrixXcd z(2, 2);
  z << 1, 0, 0, -1;
  const std::vector<Eigen::MatrixXcd> gens{x, z};
  const HermitianForm h = invariant_form(gens);
  EXPECT_EQ(h.nullspace_dim, 1);
  EXPECT_LT((h.gram - Eigen::MatrixXcd::Identity(2, 2)).norm(), 1e-12);
  EXPECT_LT(invariance_residual(h.gram, gens), 1e-12);
}

TEST(Forms, ConjugatedUnitaryGroupGivesPulledBackForm) {
  // A_i = S U_i S^{-1} preserves H = S^{-*} S^{-1}.
  Eigen::MatrixXcd x(2, 2);
  x << 0, 1, 1, 0;
  Eigen::MatrixXcd z(2, 2);
  z << 1, 0, 0, -1;
  Eigen::MatrixXcd s(2, 2);
  s << 2.0, Complex(0.5, 1.0), 0.0, 1.0;
  const Eigen::MatrixXcd si = s.inverse();
  const std::vector<Eigen::MatrixXcd> gens{s * x * si, s * z * si};
  const HermitianForm h = invariant_form(gens);
  Eigen::MatrixXcd want = si.adjoint() * si;
  want /= want.operatorNorm();
  EXPECT_LT((h.gram - want).norm(), 1e-10);
}

TEST(Forms, UnitarizedGeneratorsAreUnitary) {
  const int n = 4;
  const HermitianForm h = invariant_form(n, kQ, kT);
  const NumericGenerators g(RepKind::lk, n, kQ, kT);
  for (int i = 1; i < n; ++i) {
    const Eigen::MatrixXcd u = unitarize(g.gen(i), h);
    EXPECT_LT((u.adjoint() * u - Eigen::MatrixXcd::Identity(u.rows(), u.cols())).norm(), 1e-8);
  }
}

TEST(Forms, IndefinitePointIsReportedAndRefused) {
  const HermitianForm h = invariant_form(4, scan_q(1.0, 3.0), scan_t(1.0));
  EXPECT_LT(h.residual, 1e-10);
  const Definiteness d = is_definite(h);
  EXPECT_FALSE(d.definite);
  EXPECT_LT(d.min_eigenvalue, -0.1);
  EXPECT_THROW(unitarize(NumericGenerators(RepKind::lk, 4, h.q, h.t).gen(1), h), DomainError);
}

TEST(Forms, OffTorusIsADomainError) {
  EXPECT_THROW(invariant_form(3, Complex(2.0, 0.0), kT), DomainError);
}

TEST(Forms, DefinitenessOfPlainMatrices) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(3, 3);
  EXPECT_TRUE(is_definite(m).definite);
  EXPECT_TRUE(is_definite(Eigen::MatrixXcd(-m)).definite);  // sign is normalized away
  m(2, 2) = -1.0;
  EXPECT_FALSE(is_definite(m).definite);
}

TEST(Forms, ScanGridOrderAndCsv) {
  const std::vector<double> theta{0.1, 1.0};
  const std::vector<double> ratio{0.05, 3.0};
  const auto rows = definiteness_scan(4, theta, ratio);
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_DOUBLE_EQ(rows[1].theta_t, 0.1);
  EXPECT_DOUBLE_EQ(rows[1].ratio, 3.0);
  EXPECT_DOUBLE_EQ(rows[2].theta_t, 1.0);
  EXPECT_TRUE(rows[0].definite);
  EXPECT_FALSE(rows[3].definite);
  const std::string csv = scan_csv(rows);
  EXPECT_EQ(csv.substr(0, csv.find('\n')),
            "n,theta_t,ratio,q_re,q_im,t_re,t_im,residual,nullspace_dim,definite,min_eig");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 5);
}

}  // namespace
}  // namespace lkrep
