#include "lkrep/density.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "lkrep/errors.hpp"
#include "lkrep/forms.hpp"
#include "parallel.hpp"

namespace lkrep {

namespace {

BraidWord word_of(int n, std::vector<Letter> letters) { return BraidWord(n, std::move(letters)); }

}  // namespace

BraidWord random_word(int strands, int length, std::mt19937_64& rng) {
  if (strands < 2) throw DomainError("random words need at least 2 strands");
  if (length < 0) throw DomainError("word length must be non-negative");
  std::uniform_int_distribution<int> pick(0, 2 * (strands - 1) - 1);
  std::vector<Letter> letters;
  letters.reserve(static_cast<std::size_t>(length));
  for (int i = 0; i < length; ++i) {
    const int v = pick(rng);
    letters.push_back({v / 2 + 1, v % 2 == 0 ? +1 : -1});
  }
  return BraidWord(strands, std::move(letters));
}

BraidWord random_conjugate(const BraidWord& base, int length, std::mt19937_64& rng) {
  const BraidWord alpha = random_word(base.strands(), length, rng);
  return compose(compose(alpha, base), invert(alpha));
}

Complex stabilized_trace(const BraidWord& conj, const NumericGenerators& lk_n) {
  const int n = lk_n.n();
  if (conj.strands() != n - 1) throw DomainError("stabilized trace needs a braid on n-1 strands");
  const BraidWord w = compose(include(conj, n), BraidWord(n, {{n - 1, +1}}));
  return lk_n.evaluate(w).trace();
}

Complex stabilized_trace(const BraidWord& conj, int n, Complex q, Complex t) {
  return stabilized_trace(conj, NumericGenerators(RepKind::lk, n, q, t));
}

int distinct_count(const std::vector<Complex>& values, double tol) {
  return static_cast<int>(EigMultiset::from_values(values, tol).entries().size());
}

ExperimentReport run_experiment(const ExperimentConfig& cfg) {
  if (cfg.samples < 1) throw DomainError("samples must be >= 1");
  if (cfg.conjugator_length < 1) throw DomainError("conjugator_length must be >= 1");
  if (cfg.base_braid.strands() != cfg.n - 1) throw DomainError("base braid must live on n-1 strands");
  const HermitianForm form = invariant_form(cfg.n, cfg.q, cfg.t);
  const Definiteness def = is_definite(form);
  if (!def.definite) {
    throw DomainError("invariant form is not positive definite at (q, t); the experiment requires a definite form");
  }

  ExperimentReport report;
  report.config = cfg;
  report.form_min_eig = def.min_eigenvalue;
  std::mt19937_64 rng(cfg.rng_seed);
  std::vector<BraidWord> conjugates;
  report.samples.resize(static_cast<std::size_t>(cfg.samples));
  for (auto& s : report.samples) {
    s.conjugator = random_word(cfg.base_braid.strands(), cfg.conjugator_length, rng);
    conjugates.push_back(compose(compose(s.conjugator, cfg.base_braid), invert(s.conjugator)));
  }
  const NumericGenerators lk(RepKind::lk, cfg.n, cfg.q, cfg.t);
  detail::parallel_for(conjugates.size(), [&](std::size_t i) {
    auto& s = report.samples[i];
    s.trace = stabilized_trace(conjugates[i], lk);
    s.modulus = std::abs(s.trace);
    s.argument = std::arg(s.trace);
  });

  std::vector<Complex> traces;
  for (const auto& s : report.samples) traces.push_back(s.trace);
  report.distinct_count = distinct_count(traces, report.tol);
  const auto [min_mod, max_mod] = std::minmax_element(
      report.samples.begin(), report.samples.end(), [](const auto& a, const auto& b) { return a.modulus < b.modulus; });
  const auto [min_arg, max_arg] = std::minmax_element(
      report.samples.begin(), report.samples.end(), [](const auto& a, const auto& b) { return a.argument < b.argument; });
  report.min_mod = min_mod->modulus;
  report.max_mod = max_mod->modulus;
  report.min_arg = min_arg->argument;
  report.max_arg = max_arg->argument;

  if (!cfg.output_path.empty()) {
    std::ofstream out(cfg.output_path);
    if (!out) throw DomainError("cannot open " + cfg.output_path + " for writing");
    out << samples_csv(report.samples);
  }
  return report;
}

std::string samples_csv(const std::vector<TraceSample>& samples) {
  std::string out = "sample_index,conjugator_word,trace_re,trace_im,modulus,argument\n";
  char buf[256];
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const auto& s = samples[i];
    std::snprintf(buf, sizeof buf, ",%.17g,%.17g,%.17g,%.17g\n", s.trace.real(), s.trace.imag(), s.modulus,
                  s.argument);
    out += std::to_string(i) + ",\"" + s.conjugator.to_string() + '"' + buf;
  }
  return out;
}

bool scalar_burau_check(const BraidWord& b, Complex q) {
  const Eigen::MatrixXcd m = NumericGenerators(RepKind::burau, b.strands(), q, {-1.0, 0.0}).evaluate(b);
  const Complex c = m.trace() / static_cast<double>(m.rows());
  const Eigen::MatrixXcd diff = m - c * Eigen::MatrixXcd::Identity(m.rows(), m.cols());
  return diff.cwiseAbs().maxCoeff() <= tol::scalar_matrix;
}

Eigen::MatrixXcd complement_block(const Eigen::MatrixXcd& rho, const Eigen::MatrixXcd& gram, int prefix) {
  const Eigen::Index p = rho.rows();
  const Eigen::Index rest = p - prefix;
  // y_j = e_j - E c_j with E^* H y_j = 0, for e_j outside the prefix.
  Eigen::MatrixXcd y = Eigen::MatrixXcd::Zero(p, rest);
  y.bottomRows(rest).setIdentity();
  if (prefix > 0) {
    const Eigen::MatrixXcd hee = gram.topLeftCorner(prefix, prefix);
    const Eigen::MatrixXcd her = gram.topRightCorner(prefix, rest);
    y.topRows(prefix) = -hee.ldlt().solve(her);
  }
  // rho Y = Y M, read off with the form: M = (Y^* H Y)^{-1} Y^* H rho Y.
  const Eigen::MatrixXcd yhy = y.adjoint() * gram * y;
  return yhy.ldlt().solve(y.adjoint() * gram * rho * y);
}

RestrictedReport restricted_rep_check(int n, const BraidWord& word, Complex q, Complex t1, Complex t2, double tol) {
  if (n < 3) throw DomainError("restricted_rep_check needs n >= 3");
  if (word.strands() != n - 1) throw DomainError("word must live on n-1 strands");
  RestrictedReport report;
  report.n = n;
  const BraidWord in_bn = include(word, n);
  const int prefix = PairBasis::prefix_size(n - 1);
  auto spectrum_at = [&](Complex t) {
    const HermitianForm form = invariant_form(n, q, t);
    if (!is_definite(form).definite) throw DomainError("restricted_rep_check requires a definite form");
    const Eigen::MatrixXcd rho = NumericGenerators(RepKind::lk, n, q, t).evaluate(in_bn);
    const Eigen::MatrixXcd block = complement_block(rho, form.gram, prefix);
    report.block_dim = static_cast<int>(block.rows());
    return eigen_multiset(block, tol);
  };
  report.spectrum_t1 = spectrum_at(t1);
  report.spectrum_t2 = spectrum_at(t2);
  const EigMultiset burau = eigen_multiset(NumericGenerators(RepKind::burau, n - 1, q, t1).evaluate(word), tol);
  report.expected = multiset_union(burau, EigMultiset::from_values({Complex(1.0, 0.0)}, tol));
  report.matches_burau = multiset_equal(report.spectrum_t1, report.expected, tol);
  report.t_independent = multiset_equal(report.spectrum_t1, report.spectrum_t2, tol);
  return report;
}

std::vector<BraidWord> family_words(int n, const SubgroupFamily& family) {
  if (n < 2) throw DomainError("subgroup families need n >= 2");
  std::vector<BraidWord> out;
  auto power = [&](int index, int exponent) {
    const int sign = exponent > 0 ? +1 : -1;
    return word_of(n, std::vector<Letter>(static_cast<std::size_t>(std::abs(exponent)), Letter{index, sign}));
  };
  switch (family.kind) {
    case FamilyKind::squared_generators:
      if (family.m == 0) throw DomainError("squared_generators needs m != 0");
      for (int k = 1; k <= n - 1; ++k) out.push_back(power(k, 2 * family.m));
      break;
    case FamilyKind::hilden:
      if (n % 2 != 0 || n < 4) throw DomainError("hilden needs even n >= 4");
      for (int i = 1; i <= n / 2; ++i) out.push_back(power(2 * i - 1, 1));
      for (int i = 1; i < n / 2; ++i) {
        out.push_back(word_of(n, {{2 * i, 1}, {2 * i - 1, 1}, {2 * i + 1, 1}, {2 * i, 1}}));
        out.push_back(word_of(n, {{2 * i, 1}, {2 * i - 1, 1}, {2 * i - 1, 1}, {2 * i, 1}}));
      }
      break;
    case FamilyKind::odd_generators:
      if (family.m == 0) throw DomainError("odd_generators needs m != 0");
      if (family.a < 2) throw DomainError("odd_generators needs a >= 2");
      for (int k = -n; k <= n; ++k) {
        const int index = family.a * k + family.l;
        if (index >= 1 && index <= n - 1) out.push_back(power(index, 2 * family.m));
      }
      if (out.empty()) throw DomainError("odd_generators selects no generator for this n");
      break;
  }
  return out;
}

SubgroupReport subgroup_irreducibility(int n, const SubgroupFamily& family, Complex q, Complex t) {
  const std::vector<BraidWord> words = family_words(n, family);
  const NumericGenerators lk(RepKind::lk, n, q, t);
  std::vector<Eigen::MatrixXcd> mats;
  for (const auto& w : words) mats.push_back(lk.evaluate(w));
  SubgroupReport report;
  report.generator_count = static_cast<int>(mats.size());
  report.commutant_dim = commutant_dimension(mats);
  if (family.kind == FamilyKind::hilden) {
    const PairBasis basis(n);
    std::vector<int> v1;
    for (int i = 1; i <= n / 2; ++i) v1.push_back(basis.index_of(2 * i - 1, 2 * i));
    double leak = 0.0;
    for (const auto& m : mats) {
      for (int c : v1) {
        for (int r = 0; r < basis.size(); ++r) {
          if (std::find(v1.begin(), v1.end(), r) == v1.end()) leak = std::max(leak, std::abs(m(r, c)));
        }
      }
    }
    report.v1_invariant = leak <= tol::scalar_matrix;
  }
  return report;
}

}  // namespace lkrep
