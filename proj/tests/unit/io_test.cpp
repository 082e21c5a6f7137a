#include <gtest/gtest.h>

#include "io.hpp"
#include "lkrep/errors.hpp"

namespace lkrep::cli {
namespace {

TEST(Io, ParseComplex) {
  EXPECT_EQ(parse_complex("1.5,-2"), Complex(1.5, -2.0));
  EXPECT_LT(std::abs(parse_complex("arg:0.5") - std::polar(1.0, 0.5)), 1e-15);
  EXPECT_LT(std::abs(parse_complex("-arg:0.1") + std::polar(1.0, 0.1)), 1e-15);
  EXPECT_THROW(parse_complex("1.5"), ParseError);
  EXPECT_THROW(parse_complex("arg:x"), ParseError);
  EXPECT_THROW(parse_complex("1,nan"), ParseError);
}

TEST(Io, ParseRealList) {
  EXPECT_EQ(parse_real_list("0.1, 2,3e-1"), (std::vector<double>{0.1, 2.0, 0.3}));
  EXPECT_THROW(parse_real_list("1,,2"), ParseError);
}

TEST(Io, PolynomialJson) {
  const LaurentPoly2 p = LaurentPoly2::monomial(-3, 2, 1) + 1;
  EXPECT_EQ(to_json(p).dump(), "[[0,0,1],[2,1,-3]]");
  BigInt huge = 1;
  huge <<= 80;
  EXPECT_EQ(to_json(LaurentPoly2::monomial(huge, 0, 0)).dump(), "[[0,0,\"" + huge.str() + "\"]]");
}

TEST(Io, RepJson) {
  const auto j = to_json(rep_of_word(RepKind::burau, parse_braid("1", 3)), RepKind::burau, 3);
  EXPECT_EQ(j["kind"], "burau");
  EXPECT_EQ(j["mode"], "exact");
  EXPECT_EQ(j["entries"].size(), 2u);
}

nlohmann::json valid_config() {
  return {{"schema_version", 1}, {"n", 4},         {"base_braid", "1 2"}, {"q", "arg:0.005"},
          {"t", {-1.0, 0.0}},    {"samples", 10},  {"conjugator_length", 4}, {"rng_seed", 3}};
}

TEST(Io, ConfigRoundTrip) {
  const ExperimentConfig cfg = config_from_json(valid_config());
  EXPECT_EQ(cfg.n, 4);
  EXPECT_EQ(cfg.base_braid.to_string(), "1 2");
  EXPECT_EQ(cfg.t, Complex(-1.0, 0.0));
  EXPECT_TRUE(cfg.output_path.empty());
  const ExperimentConfig back = config_from_json(config_to_json(cfg));
  EXPECT_EQ(back.base_braid, cfg.base_braid);
  EXPECT_EQ(back.q, cfg.q);
  EXPECT_EQ(back.rng_seed, cfg.rng_seed);
}

TEST(Io, ConfigErrors) {
  auto j = valid_config();
  j["schema_version"] = 2;
  EXPECT_THROW(config_from_json(j), ParseError);
  j = valid_config();
  j.erase("samples");
  EXPECT_THROW(config_from_json(j), ParseError);
  j = valid_config();
  j["n"] = "four";
  EXPECT_THROW(config_from_json(j), ParseError);
  j = valid_config();
  j["base_braid"] = "1 3";  // needs a braid on n - 1 = 3 strands
  EXPECT_THROW(config_from_json(j), ParseError);
  EXPECT_THROW(config_from_json(nlohmann::json::array()), ParseError);
}

}  // namespace
}  // namespace lkrep::cli
