#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "lkrep/braid.hpp"
#include "lkrep/laurent.hpp"
#include "lkrep/reps.hpp"
#include "lkrep/spectra.hpp"
#include "lkrep/tolerances.hpp"

namespace lkrep {

/// Trace experiment over B_{n-1}-conjugates of a base braid.
struct ExperimentConfig {
  int schema_version = 1;
  BraidWord base_braid = BraidWord::identity(2);  // on n-1 strands
  int n = 3;
  Complex q{1.0, 0.0};
  Complex t{-1.0, 0.0};
  int samples = 1;
  int conjugator_length = 1;
  std::uint64_t rng_seed = 0;
  std::string output_path;  // CSV destination; empty skips writing
};

struct TraceSample {
  BraidWord conjugator = BraidWord::identity(1);  // alpha
  Complex trace;
  double modulus = 0.0;
  double argument = 0.0;
};

struct ExperimentReport {
  ExperimentConfig config;
  std::vector<TraceSample> samples;
  int distinct_count = 0;
  double tol = tol::trace_distinct;
  double min_mod = 0.0;
  double max_mod = 0.0;
  double min_arg = 0.0;
  double max_arg = 0.0;
  double form_min_eig = 0.0;
};

/// Word of the given length with letters uniform over sigma_i^{+-1},
/// i = 1..strands-1.
BraidWord random_word(int strands, int length, std::mt19937_64& rng);

/// alpha base alpha^{-1} for a random alpha of the given length on the
/// base's strands.
BraidWord random_conjugate(const BraidWord& base, int length, std::mt19937_64& rng);

/// tr rho_n(b sigma_{n-1}) with b (on n-1 strands) included into B_n.
Complex stabilized_trace(const BraidWord& conj, const NumericGenerators& lk_n);
Complex stabilized_trace(const BraidWord& conj, int n, Complex q, Complex t);

/// Number of clusters of values at tol (single linkage).
int distinct_count(const std::vector<Complex>& values, double tol = tol::trace_distinct);

/// Draws conjugators sequentially from the seed, evaluates traces in
/// parallel, writes the CSV when output_path is set. Throws DomainError
/// when the invariant form at (q, t) is not positive definite.
ExperimentReport run_experiment(const ExperimentConfig& cfg);

/// Columns: sample_index, conjugator_word, trace_re, trace_im, modulus,
/// argument.
std::string samples_csv(const std::vector<TraceSample>& samples);

/// psi(b) within 1e-9 (max entry) of a multiple of the identity.
bool scalar_burau_check(const BraidWord& b, Complex q);

struct RestrictedReport {
  int n = 0;
  int block_dim = 0;
  EigMultiset spectrum_t1;
  EigMultiset spectrum_t2;
  EigMultiset expected;       // Ev psi_{n-1}(word) with an extra 1
  bool matches_burau = false;
  bool t_independent = false;
};

/// Action of rho_n(word), word in B_{n-1}, on the form-orthogonal
/// complement of E_{n-1}, compared with psi_{n-1} plus a trivial summand
/// and across two values of t. Requires definite forms at both points.
RestrictedReport restricted_rep_check(int n, const BraidWord& word, Complex q, Complex t1, Complex t2,
                                      double tol = 1e-8);

/// Complement block itself, in the H-orthogonalized basis built from the
/// standard vectors outside E_{n-1}.
Eigen::MatrixXcd complement_block(const Eigen::MatrixXcd& rho, const Eigen::MatrixXcd& gram, int prefix);

enum class FamilyKind { squared_generators, hilden, odd_generators };

struct SubgroupFamily {
  FamilyKind kind = FamilyKind::squared_generators;
  int m = 1;  // exponent 2m for squared and odd families
  int a = 2;  // odd family: indices a k + l
  int l = 1;
};

/// Generator words of the family in B_n. hilden: sigma_{2i-1},
/// sigma_{2i} sigma_{2i-1} sigma_{2i+1} sigma_{2i} and
/// sigma_{2i} sigma_{2i-1}^2 sigma_{2i}.
std::vector<BraidWord> family_words(int n, const SubgroupFamily& family);

struct SubgroupReport {
  int commutant_dim = 0;
  int generator_count = 0;
  // hilden only: span{v_{2i-1,2i}} maps into itself under every generator.
  bool v1_invariant = false;
};

SubgroupReport subgroup_irreducibility(int n, const SubgroupFamily& family, Complex q, Complex t);

}  // namespace lkrep
