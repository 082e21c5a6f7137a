#pragma once

#include <functional>
#include <string>
#include <vector>

#include "lkrep/laurent.hpp"

namespace lkrep::verify {

// Default point inside the measured definite region.
inline constexpr double kThetaT = 0.1;
inline constexpr double kRatio = 0.05;
Complex default_q();
Complex default_t();

struct Options {
  int n_max = 6;
  unsigned long long seed = 20240611ULL;
};

struct Outcome {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
  double limit_seconds = 0.0;  // 0: no runtime requirement
};

Outcome exact_braid_relations(const Options& opt);
Outcome determinant_identity(const Options& opt);
Outcome generator_spectrum(const Options& opt);
Outcome symmetric_square_specialization(const Options& opt);
Outcome eigenspace_recursion(const Options& opt);
Outcome full_twist_spectrum(const Options& opt);
Outcome invariant_form_certificate(const Options& opt);
Outcome dimension_table(const Options& opt);
Outcome exclusion_tests(const Options& opt);
Outcome density_experiment(const Options& opt);
Outcome subgroup_probes(const Options& opt);

/// Criteria in order 1..11.
const std::vector<std::function<Outcome(const Options&)>>& criteria();

/// Runs every criterion, including the runtime limit in the verdict.
std::vector<Outcome> run_all(const Options& opt);

/// "[PASS] 3 generator spectrum: detail", with elapsed time appended when
/// requested.
std::string format(const Outcome& o, bool with_time);

}  // namespace lkrep::verify
