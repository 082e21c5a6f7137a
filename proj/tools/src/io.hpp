#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "lkrep/density.hpp"
#include "lkrep/laurent.hpp"
#include "lkrep/reps.hpp"

namespace lkrep::cli {

/// "re,im", "arg:theta" for e^{i theta} or "-arg:theta" for -e^{i theta}.
Complex parse_complex(std::string_view text);

/// Comma-separated reals.
std::vector<double> parse_real_list(std::string_view text);

nlohmann::json to_json(const LaurentPoly2& p);
nlohmann::json to_json(const ExactRep& m, RepKind kind, int n);
nlohmann::json to_json(const NumericRep& m, RepKind kind, int n);
nlohmann::json complex_json(Complex z);

/// Versioned experiment config. q and t accept the parse_complex syntax or
/// a [re, im] array. Throws ParseError on a missing field or a schema
/// version other than 1.
ExperimentConfig config_from_json(const nlohmann::json& j);
nlohmann::json config_to_json(const ExperimentConfig& cfg);
nlohmann::json report_to_json(const ExperimentReport& report);

}  // namespace lkrep::cli
