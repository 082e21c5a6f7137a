#include "verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

#include "lkrep/braid.hpp"
#include "lkrep/density.hpp"
#include "lkrep/errors.hpp"
#include "lkrep/forms.hpp"
#include "lkrep/lie_dims.hpp"
#include "lkrep/poly_matrix.hpp"
#include "lkrep/reps.hpp"
#include "lkrep/spectra.hpp"

namespace lkrep::verify {

namespace {

using Clock = std::chrono::steady_clock;

BigInt binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Outcome make(int id, std::string title, double limit = 0.0) {
  Outcome o;
  o.id = id;
  o.title = std::move(title);
  o.limit_seconds = limit;
  return o;
}

// Runs body, records elapsed time and folds the runtime limit into pass.
Outcome timed(Outcome o, const std::function<bool(std::string&)>& body) {
  const auto start = Clock::now();
  try {
    o.pass = body(o.detail);
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail += std::string(o.detail.empty() ? "" : "; ") + "error: " + e.what();
  }
  o.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  if (o.limit_seconds > 0.0 && o.seconds >= o.limit_seconds) {
    o.pass = false;
    o.detail += "; runtime limit exceeded";
  }
  return o;
}

int n_upper(const Options& opt, int wanted) { return std::min(wanted, opt.n_max); }

}  // namespace

Complex default_q() { return scan_q(kThetaT, kRatio); }
Complex default_t() { return scan_t(kThetaT); }

Outcome exact_braid_relations(const Options& opt) {
  const int hi = n_upper(opt, 6);
  return timed(make(1, "exact braid relations", 10.0), [&](std::string& detail) {
    int checked = 0;
    int failed = 0;
    for (RepKind kind : {RepKind::burau, RepKind::lk}) {
      for (int n = 3; n <= hi; ++n) {
        const auto& g = generators(kind, n).gens;
        for (int i = 0; i + 1 < n - 1; ++i) {
          ++checked;
          const auto& a = g[static_cast<std::size_t>(i)];
          const auto& b = g[static_cast<std::size_t>(i + 1)];
          if (!(a * b * a == b * a * b)) ++failed;
        }
        for (int i = 0; i < n - 1; ++i) {
          for (int j = i + 2; j < n - 1; ++j) {
            ++checked;
            const auto& a = g[static_cast<std::size_t>(i)];
            const auto& b = g[static_cast<std::size_t>(j)];
            if (!(a * b == b * a)) ++failed;
          }
        }
      }
    }
    detail = "burau and lk, n=3.." + std::to_string(hi) + ": " + std::to_string(checked - failed) + "/" +
             std::to_string(checked) + " relations hold exactly";
    return failed == 0 && checked > 0;
  });
}

Outcome determinant_identity(const Options& opt) {
  const int hi = n_upper(opt, 5);
  return timed(make(2, "determinant identity"), [&](std::string& detail) {
    int checked = 0;
    int failed = 0;
    for (int n = 3; n <= hi; ++n) {
      const LaurentPoly2 expected = lk_generator_determinant(n);
      for (int i = 1; i <= n - 1; ++i) {
        ++checked;
        if (!(determinant(lk_gen(n, i).entries) == expected)) ++failed;
      }
    }
    detail = "det rho_n(sigma_i) = -t(-q)^n for n=3.." + std::to_string(hi) + ": " +
             std::to_string(checked - failed) + "/" + std::to_string(checked) + " exact";
    return failed == 0 && checked > 0;
  });
}

Outcome generator_spectrum(const Options& opt) {
  const int hi = n_upper(opt, 6);
  return timed(make(3, "generator spectrum"), [&](std::string& detail) {
    std::mt19937_64 rng(opt.seed + 3);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
    int checked = 0;
    int failed = 0;
    for (int point = 0; point < 10; ++point) {
      const Complex q = std::polar(1.0, angle(rng));
      const Complex t = std::polar(1.0, angle(rng));
      for (int n = 3; n <= hi; ++n) {
        ++checked;
        const EigMultiset computed = eigen_multiset(NumericGenerators(RepKind::lk, n, q, t).gen(1));
        if (!multiset_equal(computed, lk_generator_spectrum(n, q, t), 1e-9)) ++failed;
      }
    }
    detail = "10 random unit-torus points, n=3.." + std::to_string(hi) + ": " +
             std::to_string(checked - failed) + "/" + std::to_string(checked) + " match at 1e-9";
    return failed == 0 && checked > 0;
  });
}

Outcome symmetric_square_specialization(const Options& opt) {
  const int hi = n_upper(opt, 5);
  return timed(make(4, "symmetric-square specialization"), [&](std::string& detail) {
    std::mt19937_64 rng(opt.seed + 4);
    int checked = 0;
    int failed = 0;
    for (int n = 3; n <= hi; ++n) {
      for (int w = 0; w < 20; ++w) {
        const BraidWord word = random_word(n, 6, rng);
        ++checked;
        if (!lk_vs_sym2_burau(n, word).charpoly_equal) ++failed;
      }
    }
    detail = "20 random 6-letter words per n=3.." + std::to_string(hi) + ": " + std::to_string(checked - failed) +
             "/" + std::to_string(checked) + " characteristic polynomials equal exactly";
    return failed == 0 && checked > 0;
  });
}

Outcome eigenspace_recursion(const Options& opt) {
  const int hi = n_upper(opt, 6);
  return timed(make(5, "eigenspace recursion"), [&](std::string& detail) {
    std::mt19937_64 rng(opt.seed + 5);
    const Complex q = default_q();
    const Complex t = default_t();
    std::uniform_int_distribution<int> pick_n(3, std::max(3, hi));
    int checked = 0;
    int failed = 0;
    for (int trial = 0; trial < 20; ++trial) {
      const int n = pick_n(rng);
      std::uniform_int_distribution<int> pick_k(2, n - 1);
      const int k = pick_k(rng);
      const BraidWord word = random_word(k, 6, rng);
      ++checked;
      const EigMultiset recursion = lk_spectrum_via_recursion(n, word, q, t);
      const EigMultiset direct =
          eigen_multiset(NumericGenerators(RepKind::lk, n, q, t).evaluate(include(word, n)), 1e-8);
      if (!multiset_equal(recursion, direct, 1e-8)) ++failed;
    }
    detail = "20 random (k, n, word), k < n <= " + std::to_string(hi) + ": " + std::to_string(checked - failed) +
             "/" + std::to_string(checked) + " agree with direct eigenvalues at 1e-8";
    return failed == 0 && checked > 0;
  });
}

Outcome full_twist_spectrum(const Options& opt) {
  const int hi = n_upper(opt, 6);
  return timed(make(6, "full-twist spectrum"), [&](std::string& detail) {
    const Complex q = default_q();
    int spectra_checked = 0;
    int spectra_failed = 0;
    int pairs_checked = 0;
    int pairs_failed = 0;
    for (int n = 2; n <= hi; ++n) {
      NumericGenerators burau(RepKind::burau, n, q, default_t());
      std::vector<PolyMatrix> twists;
      for (int k = 2; k <= n; ++k) {
        ++spectra_checked;
        const EigMultiset ev = eigen_multiset(burau.evaluate(full_twist(n, k)));
        if (!multiset_equal(ev, burau_full_twist_spectrum(n, k, q), 1e-9)) ++spectra_failed;
        twists.push_back(rep_of_word(RepKind::lk, full_twist(n, k)).entries);
      }
      // rho' differs from rho by a scalar, so exact commutation of rho
      // images is exact commutation of rho' images.
      for (std::size_t a = 0; a < twists.size(); ++a) {
        for (std::size_t b = a + 1; b < twists.size(); ++b) {
          ++pairs_checked;
          if (!(twists[a] * twists[b] == twists[b] * twists[a])) ++pairs_failed;
        }
      }
    }
    detail = "Burau spectra " + std::to_string(spectra_checked - spectra_failed) + "/" +
             std::to_string(spectra_checked) + " at 1e-9; rho full twists commute exactly " +
             std::to_string(pairs_checked - pairs_failed) + "/" + std::to_string(pairs_checked);
    return spectra_failed == 0 && pairs_failed == 0;
  });
}

Outcome invariant_form_certificate(const Options& opt) {
  const int hi = n_upper(opt, 5);
  return timed(make(7, "invariant form"), [&](std::string& detail) {
    const Complex q = default_q();
    const Complex t = default_t();
    bool ok = hi >= 3;
    std::ostringstream out;
    out << "theta_t=" << kThetaT << " ratio=" << kRatio << ":";
    for (int n = 3; n <= hi; ++n) {
      const HermitianForm h = invariant_form(n, q, t);
      const Definiteness d = is_definite(h);
      double unitary_defect = 0.0;
      NumericGenerators g(RepKind::lk, n, q, t);
      for (int i = 1; i <= n - 1; ++i) {
        const Eigen::MatrixXcd u = unitarize(g.gen(i), h);
        const Eigen::MatrixXcd defect = u.adjoint() * u - Eigen::MatrixXcd::Identity(u.rows(), u.cols());
        unitary_defect = std::max(unitary_defect, defect.cwiseAbs().maxCoeff());
      }
      const bool pass = h.residual <= 1e-8 && h.nullspace_dim == 1 && d.definite && unitary_defect <= 1e-8;
      ok = ok && pass;
      out << " n=" << n << (pass ? " ok" : " FAILED") << " (nullspace " << h.nullspace_dim
          << (d.definite ? ", definite" : ", indefinite") << ")";
    }
    detail = out.str();
    return ok;
  });
}

Outcome dimension_table(const Options&) {
  return timed(make(8, "dimension table", 30.0), [&](std::string& detail) {
    int checked = 0;
    int failed = 0;
    auto expect = [&](const Diagram& d, std::vector<int> labels, const BigInt& want) {
      ++checked;
      if (weyl_dimension(DynkinLabeling{d, std::move(labels)}) != want) ++failed;
    };
    const Diagram a5{DiagramType::A, 5};
    expect(a5, {0, 0, 1, 0, 0}, 20);
    expect(a5, {1, 0, 1, 0, 0}, 105);
    expect(a5, {0, 1, 1, 0, 0}, 210);
    for (int n = 3; n <= 7; ++n) {
      const Diagram an{DiagramType::A, n};
      auto at = [n](std::initializer_list<int> head) {
        std::vector<int> l(static_cast<std::size_t>(n), 0);
        std::copy(head.begin(), head.end(), l.begin());
        return l;
      };
      expect(an, at({2}), BigInt((n + 1) * (n + 2) / 2));
      expect(an, at({0, 2}), BigInt((n + 2) * (n + 1) * (n + 1) * n / 12));
      expect(an, at({1, 1}), BigInt((n + 2) * (n + 1) * n / 3));
      expect(an, at({3}), binom(n + 3, 3));
      expect(an, at({0, 0, 1}), binom(n + 1, 3));
      expect(an, at({0, 1, 1}), (n + 1) * binom(n + 2, 4));
      expect(an, at({1, 0, 1}), 3 * binom(n + 2, 4));
    }
    const Diagram d5{DiagramType::D, 5};
    expect(d5, {0, 0, 0, 0, 1}, 16);
    expect(d5, {1, 0, 0, 0, 1}, 144);
    expect(d5, {0, 0, 0, 0, 2}, 126);
    const Diagram e6{DiagramType::E, 6};
    expect(e6, {1, 0, 0, 0, 0, 0}, 27);
    expect(e6, {2, 0, 0, 0, 0, 0}, 351);

    int cross = 0;
    int cross_failed = 0;
    const RootSystem rs = positive_roots(e6);
    std::vector<int> l(6, 0);
    auto walk = [&](auto&& self, int node, int budget) -> void {
      if (node == 6) {
        if (budget == 3) return;  // skip the zero labeling
        ++cross;
        if (e6_dimension_direct(l) != weyl_dimension(rs, l)) ++cross_failed;
        return;
      }
      for (int a = 0; a <= budget; ++a) {
        l[static_cast<std::size_t>(node)] = a;
        self(self, node + 1, budget - a);
      }
      l[static_cast<std::size_t>(node)] = 0;
    };
    walk(walk, 0, 3);
    detail = "reference values " + std::to_string(checked - failed) + "/" + std::to_string(checked) +
             "; E6 closed form = Weyl on " + std::to_string(cross - cross_failed) + "/" + std::to_string(cross) +
             " labelings with sum <= 3";
    return failed == 0 && cross_failed == 0;
  });
}

Outcome exclusion_tests(const Options& opt) {
  return timed(make(9, "exclusion tests"), [&](std::string& detail) {
    const Complex q = default_q();
    const Complex t = default_t();
    std::ostringstream out;
    bool ok = true;

    bool closed_any = false;
    for (int n = 3; n <= n_upper(opt, 6); ++n) {
      std::vector<Complex> normalized = lk_generator_spectrum(n, q, t).expanded();
      const Complex mu = su_scale(n, q, t);
      for (auto& z : normalized) z *= mu;
      closed_any = closed_any || conjugation_closed(EigMultiset::from_values(normalized));
    }
    ok = ok && !closed_any;
    out << "normalized sigma_1 spectrum " << (closed_any ? "conjugation-closed" : "not conjugation-closed");

    const auto k4 = kronecker_factorizations(lk_generator_spectrum(4, q, t), 2, 3);
    const auto k5 = kronecker_factorizations(lk_generator_spectrum(5, q, t), 2, 5);
    ok = ok && k4.empty() && k5.empty();
    out << "; Kronecker 2x3 (n=4): " << k4.size() << ", 2x5 (n=5): " << k5.size();

    // At q = -1 the generator spectrum collapses to {-t}{1}^{p-1}.
    const Complex x = -t;
    const auto sym = square_root_multisets(EigMultiset::from_entries({{x, 1}, {1.0, 5}}), SquareMode::sym);
    const auto alt = square_root_multisets(EigMultiset::from_entries({{x, 1}, {1.0, 9}}), SquareMode::alt);
    ok = ok && sym.empty() && alt.empty();
    out << "; square roots sym {x}{1}^5: " << sym.size() << ", alt {x}{1}^9: " << alt.size();

    auto commutant_of = [](Complex qq, Complex tt) {
      NumericGenerators g(RepKind::lk, 4, qq, tt);
      std::vector<Eigen::MatrixXcd> mats;
      for (int i = 1; i <= 3; ++i) mats.push_back(g.gen(i));
      return commutant_dimension(mats);
    };
    const int generic = commutant_of(q, t);
    const int special = commutant_of(1.0, -1.0);
    ok = ok && generic == 1 && special > 1;
    out << "; commutant rho_4 generic " << generic << ", at (1,-1) " << special;
    detail = out.str();
    return ok;
  });
}

Outcome density_experiment(const Options&) {
  return timed(make(10, "density experiment", 60.0), [&](std::string& detail) {
    ExperimentConfig cfg;
    cfg.n = 5;
    cfg.q = default_q();
    cfg.t = default_t();
    cfg.samples = 200;
    cfg.conjugator_length = 12;
    cfg.rng_seed = 1;
    cfg.base_braid = parse_braid("1 2 3", 4);
    const ExperimentReport generic = run_experiment(cfg);
    cfg.base_braid = full_twist(4, 4);
    const ExperimentReport central = run_experiment(cfg);
    ExperimentConfig short_cfg = cfg;
    short_cfg.base_braid = parse_braid("1 2 3", 4);
    short_cfg.conjugator_length = 8;
    const ExperimentReport short_words = run_experiment(short_cfg);
    detail = "sigma1 sigma2 sigma3, 200 samples, conjugator length 12: " + std::to_string(generic.distinct_count) +
             " distinct traces (need >= 50); Delta^2 of B_4: " + std::to_string(central.distinct_count) +
             " (need 1); info: length 8 gives " + std::to_string(short_words.distinct_count);
    return generic.distinct_count >= 50 && central.distinct_count == 1;
  });
}

Outcome subgroup_probes(const Options&) {
  return timed(make(11, "subgroup probes"), [&](std::string& detail) {
    const Complex q = default_q();
    const Complex t = default_t();
    const SubgroupReport squared = subgroup_irreducibility(4, {FamilyKind::squared_generators, 1}, q, t);
    const SubgroupReport hilden_q1 = subgroup_irreducibility(4, {FamilyKind::hilden}, 1.0, t);
    const SubgroupReport hilden_near = subgroup_irreducibility(4, {FamilyKind::hilden}, q, t);
    detail = "squared generators commutant " + std::to_string(squared.commutant_dim) + "; Hilden at q=1 commutant " +
             std::to_string(hilden_q1.commutant_dim) + (hilden_q1.v1_invariant ? " with" : " without") +
             " invariant span{v12,v34}; Hilden at q=e^{0.005i} commutant " +
             std::to_string(hilden_near.commutant_dim);
    return squared.commutant_dim == 1 && hilden_q1.v1_invariant && hilden_q1.commutant_dim >= 2 &&
           hilden_near.commutant_dim == 1;
  });
}

const std::vector<std::function<Outcome(const Options&)>>& criteria() {
  static const std::vector<std::function<Outcome(const Options&)>> all{
      exact_braid_relations, determinant_identity, generator_spectrum, symmetric_square_specialization,
      eigenspace_recursion,  full_twist_spectrum,  invariant_form_certificate, dimension_table,
      exclusion_tests,       density_experiment,   subgroup_probes};
  return all;
}

std::vector<Outcome> run_all(const Options& opt) {
  std::vector<Outcome> out;
  for (const auto& c : criteria()) out.push_back(c(opt));
  return out;
}

std::string format(const Outcome& o, bool with_time) {
  std::string line = std::string(o.pass ? "[PASS] " : "[FAIL] ") + std::to_string(o.id) + " " + o.title + ": " +
                     o.detail;
  if (with_time) {
    char buf[64];
    std::snprintf(buf, sizeof buf, " (%.2f s", o.seconds);
    line += buf;
    if (o.limit_seconds > 0.0) {
      std::snprintf(buf, sizeof buf, ", limit %.0f s", o.limit_seconds);
      line += buf;
    }
    line += ")";
  }
  return line;
}

}  // namespace lkrep::verify
