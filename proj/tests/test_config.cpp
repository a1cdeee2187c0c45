#include <doctest.h>

#include "randpoly/config.hpp"

using namespace randpoly;

TEST_CASE("full config text round-trips into an ExperimentConfig") {
  std::string text = R"(
# comment line
[ensemble]
dist = cauchy(2.0)

[basis]
kind = faber-ellipse(2)

[domain]
kind = ellipse(2)

[run]
degrees = 16, 32, 64
trials = 7
sectors = 6
t = 0.5
r = 2.0
seed = 99
workers = 3
label = demo
)";
  ExperimentConfig c = parse_config_text(text);
  c.validate();
  CHECK(c.ensemble.base.kind == DistKind::Cauchy);
  CHECK(c.ensemble.base.scale == 2.0);
  CHECK(c.basis.kind == BasisKind::FaberEllipse);
  CHECK(c.domain.kind == DomainKind::Ellipse);
  CHECK(c.degrees == std::vector<int>{16, 32, 64});
  CHECK(c.trials_per_degree == 7);
  CHECK(c.sectors().size() == 6);
  CHECK(c.t == 0.5);
  CHECK(c.master_seed == 99);
  CHECK(c.workers == 3);
  CHECK(c.label == "demo");
}

TEST_CASE("explicit sectors override the generated partition") {
  std::string text = R"(
[run]
sector = annular(0.5, 0, 1.5)
sector = annular(0.5, 1.5, 3.0)
)";
  ExperimentConfig c = parse_config_text(text);
  REQUIRE(c.sectors().size() == 2);
  CHECK(c.sectors()[0].alpha == 0.0);
  CHECK(c.sectors()[1].id == 1);
}

TEST_CASE("malformed config lines name their line number") {
  try {
    (void)parse_config_text("[ensemble]\ndist = complex-gaussian\nbogus line\n");
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(e.line_number == 3);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  CHECK_THROWS_AS((void)parse_config_text("[nope]\n"), ConfigError);
  CHECK_THROWS_AS((void)parse_config_text("key = 1\n"), ConfigError);
  CHECK_THROWS_AS((void)parse_config_text("[run]\ndegrees = abc\n"),
                  ConfigError);
}

TEST_CASE("presets cover the golden ensembles") {
  for (const std::string& name : preset_names()) {
    ExperimentConfig c = preset_config(name);
    c.validate();
    CHECK(c.label == name);
  }
  CHECK(preset_config("cauchy-kac").t == 0.5);
  CHECK(preset_config("chebyshev-rademacher").domain.kind ==
        DomainKind::Interval);
  CHECK(preset_config("bergman-gaussian").basis.kind == BasisKind::BergmanDisk);
  CHECK(preset_config("variance-decay").ensemble.mode ==
        EnsembleMode::VarianceDecay);
  CHECK_THROWS_AS((void)preset_config("no-such-preset"), std::invalid_argument);
}

TEST_CASE("validation rejects broken run parameters") {
  ExperimentConfig c = preset_config("gaussian-kac");
  c.degrees = {64, 64};
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c.degrees = {128, 64};
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c.degrees = {64};
  c.trials_per_degree = 0;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c.trials_per_degree = 1;
  c.t = 1.5;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c.t = 1.0;
  c.validate();
}

TEST_CASE("missing config files surface the path") {
  try {
    (void)load_config("/nonexistent/missing.tomllike");
    FAIL("expected an error");
  } catch (const std::exception& e) {
    CHECK(std::string(e.what()).find("missing.tomllike") != std::string::npos);
  }
}

TEST_CASE("describe_config echoes the run parameters") {
  ExperimentConfig c = preset_config("gaussian-kac");
  auto kv = describe_config(c);
  bool found = false;
  for (const auto& [k, v] : kv)
    if (k == "label" && v == "gaussian-kac") found = true;
  CHECK(found);
}
