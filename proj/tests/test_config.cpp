#include <doctest.h>

#include <cstdlib>

#include "gkdv/config.hpp"
#include "gkdv/presets.hpp"

using namespace gkdv;

TEST_CASE("minimal document fills defaults") {
  const ParseResult r = parse_config_text(R"({"model": {"p": 6}})");
  REQUIRE(r.ok());
  CHECK(r.config->p == 6);
  CHECK(r.config->grid.n == 1024);
  CHECK(r.config->solver.dealias.kind == DealiasKind::zero_pad);  // p >= 6 default
  CHECK(r.config->solver.dealias.factor == 4);
  CHECK(r.config->scales.eta == 0.1);
  CHECK(r.config->monitors.cadence == "log");
}

TEST_CASE("p below 2 is rejected with its path") {
  const ParseResult r = parse_config_text(R"({"model": {"p": 1}})");
  REQUIRE_FALSE(r.ok());
  bool found = false;
  for (const auto& e : r.errors)
    if (e.find("model.p") != std::string::npos) found = true;
  CHECK(found);
}

TEST_CASE("undersized zero_pad factor is rejected") {
  const ParseResult r = parse_config_text(
      R"({"model": {"p": 6}, "solver": {"dealias": {"kind": "zero_pad", "factor": 2}}})");
  REQUIRE_FALSE(r.ok());
  bool found = false;
  for (const auto& e : r.errors)
    if (e.find("zero_pad factor") != std::string::npos) found = true;
  CHECK(found);
}

TEST_CASE("unknown keys and type mismatches are reported with paths") {
  const ParseResult r = parse_config_text(
      R"({"model": {"p": 6, "powers": 3}, "grid": {"n": "many"}, "bogus": {}})");
  REQUIRE_FALSE(r.ok());
  int hits = 0;
  for (const auto& e : r.errors) {
    if (e.find("model.powers") != std::string::npos) ++hits;
    if (e.find("grid.n") != std::string::npos) ++hits;
    if (e.find("config.bogus") != std::string::npos) ++hits;
  }
  CHECK(hits == 3);
}

TEST_CASE("all validation errors are collected at once") {
  const ParseResult r = parse_config_text(
      R"({"model": {"p": 1}, "grid": {"n": 7}, "scales": {"eta": -1.0}})");
  REQUIRE_FALSE(r.ok());
  CHECK(r.errors.size() >= 3);
}

TEST_CASE("environment overrides map 1:1 onto config keys") {
  ::setenv("GKDV_MODEL__P", "7", 1);
  ::setenv("GKDV_SOLVER__DT_MAX", "0.5", 1);
  const ParseResult r = parse_config_text_with_env(R"({"model": {"p": 6}})");
  ::unsetenv("GKDV_MODEL__P");
  ::unsetenv("GKDV_SOLVER__DT_MAX");
  REQUIRE(r.ok());
  CHECK(r.config->p == 7);
  CHECK(r.config->solver.dt_max == 0.5);
}

TEST_CASE("config echo round-trips") {
  RunConfig cfg = preset_config("global_small_p6");
  const ParseResult r = parse_config_text(config_to_json(cfg));
  REQUIRE(r.ok());
  CHECK(r.config->p == cfg.p);
  CHECK(r.config->grid.n == cfg.grid.n);
  CHECK(r.config->solver.t_end == cfg.solver.t_end);
  CHECK(r.config->monitors.local_decay == cfg.monitors.local_decay);
  CHECK(config_to_json(*r.config) == config_to_json(cfg));
}

TEST_CASE("every preset round-trips through the parser") {
  for (const auto& name : preset_names()) {
    const RunConfig cfg = preset_config(name);
    const ParseResult r = parse_config_text(config_to_json(cfg));
    REQUIRE_MESSAGE(r.ok(), name);
  }
}

TEST_CASE("custom samples must match the grid") {
  const ParseResult r = parse_config_text(
      R"({"model": {"p": 6}, "grid": {"n": 8}, "init": {"kind": "custom_samples", "values": [1, 2]}})");
  REQUIRE_FALSE(r.ok());
}
