#include "io.hpp"

#include <charconv>
#include <cmath>
#include <limits>

#include "lkrep/errors.hpp"

namespace lkrep::cli {

namespace {

double parse_real(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  // from_chars for double is missing from older libstdc++; strtod on a copy.
  const std::string copy(text);
  char* end = nullptr;
  const double value = std::strtod(copy.c_str(), &end);
  if (copy.empty() || end != copy.c_str() + copy.size() || !std::isfinite(value)) {
    throw ParseError("bad number '" + copy + "'");
  }
  return value;
}

template <class T>
T field(const nlohmann::json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("config is missing '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ParseError(std::string("config field '") + key + "' has the wrong type");
  }
}

Complex complex_field(const nlohmann::json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("config is missing '") + key + "'");
  const auto& v = j.at(key);
  if (v.is_string()) return parse_complex(v.get<std::string>());
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
    return {v[0].get<double>(), v[1].get<double>()};
  }
  throw ParseError(std::string("config field '") + key + "' must be a complex string or [re, im]");
}

}  // namespace

Complex parse_complex(std::string_view text) {
  bool negate = false;
  std::string_view rest = text;
  if (rest.starts_with("-arg:")) {
    negate = true;
    rest.remove_prefix(5);
  } else if (rest.starts_with("arg:")) {
    rest.remove_prefix(4);
  } else {
    const auto comma = rest.find(',');
    if (comma == std::string_view::npos) {
      throw ParseError("bad complex value '" + std::string(text) + "' (use re,im or arg:theta)");
    }
    return {parse_real(rest.substr(0, comma)), parse_real(rest.substr(comma + 1))};
  }
  const Complex z = std::polar(1.0, parse_real(rest));
  return negate ? -z : z;
}

std::vector<double> parse_real_list(std::string_view text) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    out.push_back(parse_real(text.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  return out;
}

nlohmann::json to_json(const LaurentPoly2& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& term : p.terms()) {
    nlohmann::json coeff;
    if (term.coeff >= std::numeric_limits<long long>::min() && term.coeff <= std::numeric_limits<long long>::max()) {
      coeff = term.coeff.convert_to<long long>();
    } else {
      coeff = term.coeff.str();
    }
    terms.push_back({term.deg.dq, term.deg.dt, coeff});
  }
  return terms;
}

nlohmann::json complex_json(Complex z) { return {z.real(), z.imag()}; }

nlohmann::json to_json(const ExactRep& m, RepKind kind, int n) {
  nlohmann::json rows = nlohmann::json::array();
  for (int r = 0; r < m.entries.dim(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = 0; c < m.entries.dim(); ++c) row.push_back(to_json(m.entries(r, c)));
    rows.push_back(std::move(row));
  }
  return {{"kind", std::string(to_string(kind))},
          {"n", n},
          {"mode", "exact"},
          {"basis", std::string(to_string(m.basis.kind))},
          {"entries", std::move(rows)}};
}

nlohmann::json to_json(const NumericRep& m, RepKind kind, int n) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index r = 0; r < m.entries.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index c = 0; c < m.entries.cols(); ++c) row.push_back(complex_json(m.entries(r, c)));
    rows.push_back(std::move(row));
  }
  return {{"kind", std::string(to_string(kind))},
          {"n", n},
          {"mode", "numeric"},
          {"basis", std::string(to_string(m.basis.kind))},
          {"entries", std::move(rows)}};
}

ExperimentConfig config_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("config must be a JSON object");
  ExperimentConfig cfg;
  cfg.schema_version = field<int>(j, "schema_version");
  if (cfg.schema_version != 1) {
    throw ParseError("unsupported schema_version " + std::to_string(cfg.schema_version));
  }
  cfg.n = field<int>(j, "n");
  if (cfg.n < 3) throw ParseError("config n must be >= 3");
  cfg.base_braid = parse_braid(field<std::string>(j, "base_braid"), cfg.n - 1);
  cfg.q = complex_field(j, "q");
  cfg.t = complex_field(j, "t");
  cfg.samples = field<int>(j, "samples");
  cfg.conjugator_length = field<int>(j, "conjugator_length");
  cfg.rng_seed = field<std::uint64_t>(j, "rng_seed");
  cfg.output_path = j.value("output_path", std::string());
  return cfg;
}

nlohmann::json config_to_json(const ExperimentConfig& cfg) {
  return {{"schema_version", cfg.schema_version},
          {"base_braid", cfg.base_braid.to_string()},
          {"n", cfg.n},
          {"q", complex_json(cfg.q)},
          {"t", complex_json(cfg.t)},
          {"samples", cfg.samples},
          {"conjugator_length", cfg.conjugator_length},
          {"rng_seed", cfg.rng_seed},
          {"output_path", cfg.output_path}};
}

nlohmann::json report_to_json(const ExperimentReport& report) {
  return {{"distinct_count", report.distinct_count},
          {"tol", report.tol},
          {"min_mod", report.min_mod},
          {"max_mod", report.max_mod},
          {"min_arg", report.min_arg},
          {"max_arg", report.max_arg},
          {"form_min_eig", report.form_min_eig},
          {"config", config_to_json(report.config)}};
}

}  // namespace lkrep::cli
