// lkrep: command-line front end for the braid representation toolkit.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "io.hpp"
#include "lkrep/braid.hpp"
#include "lkrep/density.hpp"
#include "lkrep/errors.hpp"
#include "lkrep/forms.hpp"
#include "lkrep/lie_dims.hpp"
#include "lkrep/reps.hpp"
#include "lkrep/spectra.hpp"
#include "verify.hpp"

namespace {

using namespace lkrep;

constexpr int kExitMath = 1;
constexpr int kExitUsage = 2;

struct PointArgs {
  std::string q;
  std::string t;

  void add(CLI::App* cmd, bool required) {
    auto* oq = cmd->add_option("--q", q, "q as re,im or arg:theta (default arg:0.005)");
    auto* ot = cmd->add_option("--t", t, "t as re,im, arg:theta or -arg:theta (default -arg:0.1)");
    if (required) {
      oq->required();
      ot->required();
    }
  }
  bool given() const { return !q.empty() || !t.empty(); }
  Complex q_value() const { return q.empty() ? verify::default_q() : cli::parse_complex(q); }
  Complex t_value() const { return t.empty() ? verify::default_t() : cli::parse_complex(t); }
};

int rep_dump(const std::string& kind_text, int n, const std::string& word_text, const PointArgs& point) {
  const RepKind kind = parse_rep_kind(kind_text);
  const BraidWord word = parse_braid(word_text, n);
  nlohmann::json out;
  if (kind == RepKind::perm) {
    out = cli::to_json(perm_rep(word), kind, n);
  } else if (point.given()) {
    out = cli::to_json(rep_of_word(kind, word, point.q_value(), point.t_value()), kind, n);
  } else {
    out = cli::to_json(rep_of_word(kind, word), kind, n);
  }
  std::cout << out.dump(1) << '\n';
  return 0;
}

int rep_check_relations(int n) {
  if (n < 2) throw DomainError("--n must be >= 2");
  bool ok = true;
  for (RepKind kind : {RepKind::burau, RepKind::lk}) {
    const auto& g = generators(kind, n).gens;
    int braid = 0;
    int far = 0;
    int braid_ok = 0;
    int far_ok = 0;
    for (int i = 0; i + 1 < n - 1; ++i) {
      ++braid;
      const auto& a = g[static_cast<std::size_t>(i)];
      const auto& b = g[static_cast<std::size_t>(i + 1)];
      if (a * b * a == b * a * b) ++braid_ok;
    }
    for (int i = 0; i < n - 1; ++i) {
      for (int j = i + 2; j < n - 1; ++j) {
        ++far;
        const auto& a = g[static_cast<std::size_t>(i)];
        const auto& b = g[static_cast<std::size_t>(j)];
        if (a * b == b * a) ++far_ok;
      }
    }
    const auto& inv = generators(kind, n).inverses;
    int inverse_ok = 0;
    for (std::size_t i = 0; i < g.size(); ++i) {
      if ((g[i] * inv[i]).is_identity()) ++inverse_ok;
    }
    std::cout << to_string(kind) << " n=" << n << ": braid " << braid_ok << '/' << braid << ", commuting " << far_ok
              << '/' << far << ", inverses " << inverse_ok << '/' << g.size() << '\n';
    ok = ok && braid_ok == braid && far_ok == far && inverse_ok == static_cast<int>(g.size());
  }
  std::cout << (ok ? "all relations hold exactly" : "RELATION FAILURE") << '\n';
  return ok ? 0 : kExitMath;
}

int spectra_gen(int n, const PointArgs& point) {
  const Complex q = point.q_value();
  const Complex t = point.t_value();
  const EigMultiset closed = lk_generator_spectrum(n, q, t);
  const EigMultiset computed = eigen_multiset(NumericGenerators(RepKind::lk, n, q, t).gen(1));
  const bool match = multiset_equal(closed, computed, 1e-9);
  std::cout << "closed form: " << closed.to_string() << '\n'
            << "computed:    " << computed.to_string() << '\n'
            << "match: " << (match ? "yes" : "no") << '\n';
  return match ? 0 : kExitMath;
}

int spectra_word(const std::string& kind_text, int n, const std::string& word_text, const PointArgs& point) {
  const RepKind kind = parse_rep_kind(kind_text);
  const BraidWord word = parse_braid(word_text, n);
  Eigen::MatrixXcd m;
  if (kind == RepKind::perm) {
    m = perm_rep(word).entries.eval(1.0, 1.0);
  } else {
    m = NumericGenerators(kind, n, point.q_value(), point.t_value()).evaluate(word);
  }
  std::cout << eigen_multiset(m).to_string() << '\n';
  return 0;
}

int form_solve(int n, const PointArgs& point) {
  const HermitianForm h = invariant_form(n, point.q_value(), point.t_value());
  const Definiteness d = is_definite(h);
  std::printf("n: %d\nq: (%.12f,%.12f)\nt: (%.12f,%.12f)\nresidual: %.2e\nnullspace_dim: %d\n", n, h.q.real(),
              h.q.imag(), h.t.real(), h.t.imag(), h.residual, h.nullspace_dim);
  std::printf("definite: %s\nmin_eig: %.8f\n", d.definite ? "true" : "false", d.min_eigenvalue);
  return 0;
}

int form_scan(int n, const std::string& theta, const std::string& ratio, const std::string& out_path) {
  const auto theta_values = cli::parse_real_list(theta);
  const auto ratio_values = cli::parse_real_list(ratio);
  const auto rows = definiteness_scan(n, theta_values, ratio_values);
  const std::string csv = scan_csv(rows);
  if (out_path.empty()) {
    std::cout << csv;
  } else {
    std::ofstream(out_path) << csv;
  }
  return 0;
}

int dims_eval(const std::string& diagram_text, const std::string& labels_text, bool direct, bool verbose) {
  const Diagram d = parse_diagram(diagram_text);
  const DynkinLabeling l = parse_labeling(d, labels_text);
  if (direct && d.type != DiagramType::E) throw DomainError("--direct applies to E6 only");
  const BigInt dim = direct ? e6_dimension_direct(l.labels) : weyl_dimension(l);
  if (verbose) {
    std::cout << to_string(d) << ' ' << labels_to_string(l) << " dimension " << dim << " asymmetric "
              << (is_asymmetric(l) ? "true" : "false") << '\n';
  } else {
    std::cout << dim << '\n';
  }
  return 0;
}

int dims_enumerate(const std::string& diagram_text, long long bound, bool asymmetric) {
  const Diagram d = parse_diagram(diagram_text);
  std::cout << irreps_csv(enumerate_irreps_below(d, BigInt(bound), asymmetric));
  return 0;
}

int density_run(const std::string& config_path, const std::string& report_path) {
  std::ifstream in(config_path);
  if (!in) throw ParseError("cannot read config " + config_path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("config is not valid JSON: ") + e.what());
  }
  const ExperimentReport report = run_experiment(cli::config_from_json(j));
  const std::string text = cli::report_to_json(report).dump(1) + '\n';
  if (report_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream(report_path) << text;
  }
  return 0;
}

int verify_all(int n_max, bool timings) {
  verify::Options opt;
  opt.n_max = n_max;
  bool ok = true;
  for (const auto& criterion : verify::criteria()) {
    const verify::Outcome o = criterion(opt);
    std::cout << verify::format(o, timings) << std::endl;
    ok = ok && o.pass;
  }
  return ok ? 0 : kExitMath;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lawrence-Krammer and Burau braid representation toolkit"};
  app.require_subcommand(1);
  app.footer("Example: lkrep dims eval --diagram E6 --labels 1,0,0,0,0,0");

  std::optional<int> result;
  auto run = [&](auto&& fn) { return [&result, fn] { result = fn(); }; };

  // rep
  auto* rep = app.add_subcommand("rep", "Representation matrices");
  rep->require_subcommand(1);
  std::string kind = "lk";
  std::string word;
  int n = 0;
  PointArgs point;
  auto* dump = rep->add_subcommand("dump", "Matrix of a braid word as JSON (exact unless --q/--t given)");
  dump->add_option("--kind", kind, "lk, burau or perm")->check(CLI::IsMember({"lk", "burau", "perm"}));
  dump->add_option("--n", n, "strand count")->required()->check(CLI::Range(2, 64));
  dump->add_option("--word", word, "braid word such as \"1 -2 1\"");
  point.add(dump, false);
  dump->footer("Example: lkrep rep dump --kind lk --n 3 --word \"1 2\"");
  dump->callback(run([&] { return rep_dump(kind, n, word, point); }));

  auto* relations = rep->add_subcommand("check-relations", "Exact braid relations for burau and lk");
  relations->add_option("--n", n, "strand count")->required()->check(CLI::Range(2, 8));
  relations->footer("Example: lkrep rep check-relations --n 4");
  relations->callback(run([&] { return rep_check_relations(n); }));

  // spectra
  auto* spectra = app.add_subcommand("spectra", "Eigenvalue multisets");
  spectra->require_subcommand(1);
  auto* gen = spectra->add_subcommand("gen", "rho_n(sigma_1): closed form against computed spectrum");
  gen->add_option("--n", n, "strand count")->required()->check(CLI::Range(2, 10));
  point.add(gen, false);
  gen->footer("Example: lkrep spectra gen --n 4 --q arg:0.005 --t -arg:0.1");
  gen->callback(run([&] { return spectra_gen(n, point); }));

  auto* sword = spectra->add_subcommand("word", "Spectrum of a braid word");
  sword->add_option("--kind", kind, "lk, burau or perm")->check(CLI::IsMember({"lk", "burau", "perm"}));
  sword->add_option("--n", n, "strand count")->required()->check(CLI::Range(2, 10));
  sword->add_option("--word", word, "braid word")->required();
  point.add(sword, false);
  sword->footer("Example: lkrep spectra word --n 3 --word \"1 1 2\"");
  sword->callback(run([&] { return spectra_word(kind, n, word, point); }));

  // form
  auto* form = app.add_subcommand("form", "Invariant Hermitian form");
  form->require_subcommand(1);
  auto* solve = form->add_subcommand("solve", "Solve and certify the invariant form at (q, t)");
  solve->add_option("--n", n, "strand count")->required()->check(CLI::Range(2, 8));
  point.add(solve, false);
  solve->footer("Example: lkrep form solve --n 4 --q arg:0.005 --t -arg:0.1");
  solve->callback(run([&] { return form_solve(n, point); }));

  std::string theta;
  std::string ratio;
  std::string out_path;
  auto* scan = form->add_subcommand("scan", "Definiteness over t = -e^{i theta_t}, q = e^{i ratio theta_t}");
  scan->add_option("--n", n, "strand count")->required()->check(CLI::Range(2, 8));
  scan->add_option("--theta-t", theta, "comma-separated theta_t values in (0, pi)")->required();
  scan->add_option("--ratio", ratio, "comma-separated positive ratios")->required();
  scan->add_option("--out", out_path, "CSV path (default stdout)");
  scan->footer("Example: lkrep form scan --n 4 --theta-t 0.1,0.5 --ratio 0.05,1,20");
  scan->callback(run([&] { return form_scan(n, theta, ratio, out_path); }));

  // dims
  auto* dims = app.add_subcommand("dims", "Weyl dimensions of simple Lie algebra irreps");
  dims->require_subcommand(1);
  std::string diagram;
  std::string labels;
  bool direct = false;
  bool verbose = false;
  auto* eval = dims->add_subcommand("eval", "Dimension of one labeling");
  eval->add_option("--diagram", diagram, "A<r>, D<r> or E6")->required();
  eval->add_option("--labels", labels, "comma-separated node labels")->required();
  eval->add_flag("--direct", direct, "use the closed E6 formula instead of Weyl's product");
  eval->add_flag("--verbose", verbose, "print labeling, dimension and asymmetry");
  eval->footer("Example: lkrep dims eval --diagram E6 --labels 1,0,0,0,0,0");
  eval->callback(run([&] { return dims_eval(diagram, labels, direct, verbose); }));

  long long bound = 0;
  bool asymmetric = false;
  auto* enumerate = dims->add_subcommand("enumerate", "All labelings up to a dimension bound, as CSV");
  enumerate->add_option("--diagram", diagram, "A<r>, D<r> or E6")->required();
  enumerate->add_option("--bound", bound, "largest dimension")->required()->check(CLI::PositiveNumber);
  enumerate->add_flag("--asymmetric", asymmetric, "only labelings without diagram symmetry");
  enumerate->footer("Example: lkrep dims enumerate --diagram D5 --bound 21 --asymmetric");
  enumerate->callback(run([&] { return dims_enumerate(diagram, bound, asymmetric); }));

  // density
  auto* density = app.add_subcommand("density", "Stabilized trace experiments");
  density->require_subcommand(1);
  std::string config;
  std::string report;
  auto* drun = density->add_subcommand("run", "Run an experiment from a JSON config; prints the JSON report");
  drun->add_option("--config", config, "config file (schema_version 1)")->required();
  drun->add_option("--report", report, "write the report here instead of stdout");
  drun->footer("Example: lkrep density run --config experiment.json");
  drun->callback(run([&] { return density_run(config, report); }));

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Acceptance checks");
  verify_cmd->require_subcommand(1);
  int n_max = 6;
  bool timings = false;
  auto* all = verify_cmd->add_subcommand("all", "Run every acceptance criterion");
  all->add_option("--n-max", n_max, "largest strand count used")->check(CLI::Range(3, 6));
  all->add_flag("--timings", timings, "append elapsed time to each line");
  all->footer("Example: lkrep verify all --n-max 5");
  all->callback(run([&] { return verify_all(n_max, timings); }));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ComputationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitMath;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitMath;
  }
  return result.value_or(0);
}
