#include "gkdv/config.hpp"

#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

extern char** environ;

namespace gkdv {

using nlohmann::json;

namespace {

struct Collector {
  std::vector<std::string> errors;
  void add(const std::string& path, const std::string& msg) { errors.push_back(path + ": " + msg); }
};

void check_keys(const json& j, const std::string& path, const std::set<std::string>& allowed,
                Collector& errs) {
  if (!j.is_object()) {
    errs.add(path, "expected an object");
    return;
  }
  for (const auto& [key, _] : j.items())
    if (!allowed.count(key)) errs.add(path + "." + key, "unknown key");
}

template <typename T>
void read(const json& j, const std::string& path, const char* key, T& out, Collector& errs) {
  if (!j.contains(key)) return;
  try {
    out = j.at(key).get<T>();
  } catch (const json::exception&) {
    errs.add(path + "." + key, "type mismatch");
  }
}

InitSpec parse_init(const json& j, int p, Collector& errs) {
  check_keys(j, "init",
             {"kind", "c", "x0", "amplitude_factor", "amplitude", "width", "c1", "x1", "c2", "x2",
              "values"},
             errs);
  std::string kind = "gaussian";
  read(j, "init", "kind", kind, errs);
  if (kind == "soliton") {
    SolitonInit s{p, 1.0, 0.0};
    read(j, "init", "c", s.c, errs);
    read(j, "init", "x0", s.x0, errs);
    if (!(s.c > 0.0)) errs.add("init.c", "soliton speed must be positive");
    return s;
  }
  if (kind == "scaled_soliton") {
    ScaledSolitonInit s{p, 1.0, 1.0, 0.0};
    read(j, "init", "amplitude_factor", s.amplitude_factor, errs);
    read(j, "init", "c", s.c, errs);
    read(j, "init", "x0", s.x0, errs);
    if (!(s.c > 0.0)) errs.add("init.c", "soliton speed must be positive");
    return s;
  }
  if (kind == "gaussian") {
    GaussianInit s{1.0, 1.0, 0.0};
    read(j, "init", "amplitude", s.amplitude, errs);
    read(j, "init", "width", s.width, errs);
    read(j, "init", "x0", s.x0, errs);
    if (!(s.width > 0.0)) errs.add("init.width", "gaussian width must be positive");
    return s;
  }
  if (kind == "two_soliton") {
    TwoSolitonInit s{p, 1.0, 0.0, 1.0, 0.0};
    read(j, "init", "c1", s.c1, errs);
    read(j, "init", "x1", s.x1, errs);
    read(j, "init", "c2", s.c2, errs);
    read(j, "init", "x2", s.x2, errs);
    if (!(s.c1 > 0.0) || !(s.c2 > 0.0)) errs.add("init.c1/c2", "soliton speeds must be positive");
    return s;
  }
  if (kind == "custom_samples") {
    CustomSamplesInit s;
    read(j, "init", "values", s.values, errs);
    return s;
  }
  errs.add("init.kind", "unknown initial-data kind '" + kind + "'");
  return GaussianInit{0.0, 1.0, 0.0};
}

RunConfig parse_document(const json& root, Collector& errs) {
  RunConfig cfg;
  check_keys(root, "config", {"grid", "model", "init", "solver", "scales", "monitors", "output"},
             errs);
  if (!errs.errors.empty() && !root.is_object()) return cfg;

  if (root.contains("model")) {
    check_keys(root["model"], "model", {"p"}, errs);
    read(root["model"], "model", "p", cfg.p, errs);
  }
  if (cfg.p < 2) errs.add("model.p", "nonlinearity power must be an integer >= 2");

  if (root.contains("grid")) {
    const json& g = root["grid"];
    check_keys(g, "grid", {"n", "length", "center"}, errs);
    read(g, "grid", "n", cfg.grid.n, errs);
    read(g, "grid", "length", cfg.grid.length, errs);
    read(g, "grid", "center", cfg.grid.center, errs);
  }
  if (cfg.grid.n < 4 || cfg.grid.n % 2 != 0) errs.add("grid.n", "must be even and >= 4");
  if (!(cfg.grid.length > 0.0)) errs.add("grid.length", "must be positive");

  cfg.solver.p = cfg.p;
  cfg.solver.dealias = default_dealias(cfg.p);
  if (root.contains("solver")) {
    const json& s = root["solver"];
    check_keys(s, "solver",
               {"scheme", "dealias", "dt", "cfl_safety", "dt_min", "dt_max", "t_end",
                "blowup_sup_threshold", "blowup_grad_factor", "sample_every"},
               errs);
    std::string scheme = "if_rk4";
    read(s, "solver", "scheme", scheme, errs);
    if (scheme == "if_rk4") cfg.solver.scheme = Scheme::if_rk4;
    else if (scheme == "etd_rk4") cfg.solver.scheme = Scheme::etd_rk4;
    else errs.add("solver.scheme", "must be if_rk4 or etd_rk4");
    if (s.contains("dealias")) {
      const json& d = s["dealias"];
      check_keys(d, "solver.dealias", {"kind", "factor"}, errs);
      std::string kind = cfg.solver.dealias.kind == DealiasKind::zero_pad ? "zero_pad"
                                                                          : "two_thirds";
      read(d, "solver.dealias", "kind", kind, errs);
      if (kind == "two_thirds") cfg.solver.dealias.kind = DealiasKind::two_thirds;
      else if (kind == "zero_pad") cfg.solver.dealias.kind = DealiasKind::zero_pad;
      else errs.add("solver.dealias.kind", "must be two_thirds or zero_pad");
      read(d, "solver.dealias", "factor", cfg.solver.dealias.factor, errs);
    }
    read(s, "solver", "dt", cfg.solver.dt, errs);
    read(s, "solver", "cfl_safety", cfg.solver.cfl_safety, errs);
    read(s, "solver", "dt_min", cfg.solver.dt_min, errs);
    read(s, "solver", "dt_max", cfg.solver.dt_max, errs);
    read(s, "solver", "t_end", cfg.solver.t_end, errs);
    read(s, "solver", "blowup_sup_threshold", cfg.solver.blowup_sup_threshold, errs);
    read(s, "solver", "blowup_grad_factor", cfg.solver.blowup_grad_factor, errs);
    read(s, "solver", "sample_every", cfg.solver.sample_every, errs);
  }
  try {
    cfg.solver.validate();
  } catch (const std::exception& e) {
    errs.add("solver", e.what());
  }

  cfg.init = root.contains("init") ? parse_init(root["init"], cfg.p, errs)
                                   : InitSpec(GaussianInit{0.0, 1.0, 0.0});
  if (const auto* cs = std::get_if<CustomSamplesInit>(&cfg.init)) {
    if (static_cast<int>(cs->values.size()) != cfg.grid.n)
      errs.add("init.values", "custom_samples length must equal grid.n");
  }

  if (root.contains("scales")) {
    const json& s = root["scales"];
    check_keys(s, "scales", {"C0", "C1", "eta", "beta_min", "regime_override"}, errs);
    read(s, "scales", "C0", cfg.scales.C0, errs);
    read(s, "scales", "C1", cfg.scales.C1, errs);
    read(s, "scales", "eta", cfg.scales.eta, errs);
    read(s, "scales", "beta_min", cfg.scales.beta_min, errs);
    read(s, "scales", "regime_override", cfg.scales.regime_override, errs);
  }
  if (!(cfg.scales.C0 > 0.0)) errs.add("scales.C0", "must be positive");
  if (!(cfg.scales.C1 > 0.0)) errs.add("scales.C1", "must be positive");
  if (!(cfg.scales.eta > 0.0)) errs.add("scales.eta", "must be positive");
  if (!(cfg.scales.beta_min > 0.0)) errs.add("scales.beta_min", "must be positive");
  if (cfg.scales.regime_override != "auto" && cfg.scales.regime_override != "global" &&
      cfg.scales.regime_override != "blowup")
    errs.add("scales.regime_override", "must be auto, global or blowup");

  if (root.contains("monitors")) {
    const json& m = root["monitors"];
    check_keys(m, "monitors",
               {"farfield", "local_decay", "mt01bis", "mt01bis_beta", "mt01bis_a", "mt01bis_b",
                "kato", "kato_L", "kato_front", "linvirial", "linvirial_theta",
                "linvirial_lambda1", "linvirial_lambda2", "linvirial_mu", "cadence", "log_points",
                "liminf_reduction_factor", "mu_tracking", "mu0", "boundary_mass_tol"},
               errs);
    auto& mc = cfg.monitors;
    read(m, "monitors", "farfield", mc.farfield, errs);
    read(m, "monitors", "local_decay", mc.local_decay, errs);
    read(m, "monitors", "mt01bis", mc.mt01bis, errs);
    read(m, "monitors", "mt01bis_beta", mc.mt01bis_beta, errs);
    read(m, "monitors", "mt01bis_a", mc.mt01bis_a, errs);
    read(m, "monitors", "mt01bis_b", mc.mt01bis_b, errs);
    read(m, "monitors", "kato", mc.kato, errs);
    read(m, "monitors", "kato_L", mc.kato_L, errs);
    read(m, "monitors", "kato_front", mc.kato_front, errs);
    read(m, "monitors", "linvirial", mc.linvirial, errs);
    read(m, "monitors", "linvirial_theta", mc.linvirial_theta, errs);
    read(m, "monitors", "linvirial_lambda1", mc.linvirial_lambda1, errs);
    read(m, "monitors", "linvirial_lambda2", mc.linvirial_lambda2, errs);
    read(m, "monitors", "linvirial_mu", mc.linvirial_mu, errs);
    read(m, "monitors", "cadence", mc.cadence, errs);
    read(m, "monitors", "log_points", mc.log_points, errs);
    read(m, "monitors", "liminf_reduction_factor", mc.liminf_reduction_factor, errs);
    read(m, "monitors", "mu_tracking", mc.mu_tracking, errs);
    read(m, "monitors", "mu0", mc.mu0, errs);
    read(m, "monitors", "boundary_mass_tol", mc.boundary_mass_tol, errs);
  }
  if (cfg.monitors.cadence != "log" && cfg.monitors.cadence != "uniform")
    errs.add("monitors.cadence", "must be log or uniform");
  if (cfg.monitors.log_points < 2) errs.add("monitors.log_points", "must be >= 2");
  if (!(cfg.monitors.liminf_reduction_factor > 1.0))
    errs.add("monitors.liminf_reduction_factor", "must exceed 1");
  if (cfg.monitors.mt01bis && cfg.p % 2 != 0)
    errs.add("monitors.mt01bis", "requires an even power p = 2n");
  if (!(cfg.monitors.kato_L > 0.0)) errs.add("monitors.kato_L", "must be positive");
  if (!(cfg.monitors.linvirial_theta > 0.0) || !(cfg.monitors.linvirial_lambda1 > 0.0) ||
      !(cfg.monitors.linvirial_lambda2 > 0.0))
    errs.add("monitors.linvirial_*", "compact weight scales must be positive");
  if (!(cfg.monitors.boundary_mass_tol > 0.0))
    errs.add("monitors.boundary_mass_tol", "must be positive");

  if (root.contains("output")) {
    const json& o = root["output"];
    check_keys(o, "output", {"directory", "csv", "json", "checkpoint_every"}, errs);
    read(o, "output", "directory", cfg.output.directory, errs);
    read(o, "output", "csv", cfg.output.csv, errs);
    read(o, "output", "json", cfg.output.json, errs);
    read(o, "output", "checkpoint_every", cfg.output.checkpoint_every, errs);
  }
  if (cfg.output.checkpoint_every < 0) errs.add("output.checkpoint_every", "must be >= 0");

  return cfg;
}

void apply_env_overrides(json& root) {
  for (char** env = environ; *env; ++env) {
    const std::string entry(*env);
    if (entry.rfind("GKDV_", 0) != 0) continue;
    const auto eq = entry.find('=');
    if (eq == std::string::npos) continue;
    std::string path = entry.substr(5, eq - 5);
    const std::string value = entry.substr(eq + 1);
    // double underscore separates path segments
    std::vector<std::string> parts;
    std::size_t pos = 0;
    while (pos <= path.size()) {
      const auto sep = path.find("__", pos);
      if (sep == std::string::npos) {
        parts.push_back(path.substr(pos));
        break;
      }
      parts.push_back(path.substr(pos, sep - pos));
      pos = sep + 2;
    }
    json* node = &root;
    for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
      std::string key = parts[i];
      for (char& ch : key) ch = static_cast<char>(std::tolower(ch));
      node = &(*node)[key];
    }
    std::string leaf = parts.back();
    for (char& ch : leaf) ch = static_cast<char>(std::tolower(ch));
    json parsed = json::parse(value, nullptr, false);
    (*node)[leaf] = parsed.is_discarded() ? json(value) : parsed;
  }
}

ParseResult parse_json(json root, bool with_env) {
  ParseResult result;
  if (with_env) apply_env_overrides(root);
  Collector errs;
  RunConfig cfg = parse_document(root, errs);
  result.errors = std::move(errs.errors);
  if (result.errors.empty()) result.config = std::move(cfg);
  return result;
}

}  // namespace

ParseResult parse_config_text(const std::string& json_text) {
  json root = json::parse(json_text, nullptr, false);
  if (root.is_discarded()) return ParseResult{std::nullopt, {"document: malformed JSON"}};
  return parse_json(std::move(root), false);
}

ParseResult parse_config_text_with_env(const std::string& json_text) {
  json root = json::parse(json_text, nullptr, false);
  if (root.is_discarded()) return ParseResult{std::nullopt, {"document: malformed JSON"}};
  return parse_json(std::move(root), true);
}

ParseResult parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) return ParseResult{std::nullopt, {"document: cannot open '" + path + "'"}};
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config_text_with_env(ss.str());
}

std::string config_to_json(const RunConfig& cfg) {
  json j;
  j["grid"] = {{"n", cfg.grid.n}, {"length", cfg.grid.length}, {"center", cfg.grid.center}};
  j["model"] = {{"p", cfg.p}};
  json init;
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, SolitonInit>) {
          init = {{"kind", "soliton"}, {"c", s.c}, {"x0", s.x0}};
        } else if constexpr (std::is_same_v<T, ScaledSolitonInit>) {
          init = {{"kind", "scaled_soliton"},
                  {"amplitude_factor", s.amplitude_factor},
                  {"c", s.c},
                  {"x0", s.x0}};
        } else if constexpr (std::is_same_v<T, GaussianInit>) {
          init = {{"kind", "gaussian"},
                  {"amplitude", s.amplitude},
                  {"width", s.width},
                  {"x0", s.x0}};
        } else if constexpr (std::is_same_v<T, TwoSolitonInit>) {
          init = {{"kind", "two_soliton"},
                  {"c1", s.c1},
                  {"x1", s.x1},
                  {"c2", s.c2},
                  {"x2", s.x2}};
        } else {
          init = {{"kind", "custom_samples"}, {"values", s.values}};
        }
      },
      cfg.init);
  j["init"] = init;
  j["solver"] = {
      {"scheme", cfg.solver.scheme == Scheme::if_rk4 ? "if_rk4" : "etd_rk4"},
      {"dealias",
       {{"kind", cfg.solver.dealias.kind == DealiasKind::zero_pad ? "zero_pad" : "two_thirds"},
        {"factor", cfg.solver.dealias.factor}}},
      {"dt", cfg.solver.dt},
      {"cfl_safety", cfg.solver.cfl_safety},
      {"dt_min", cfg.solver.dt_min},
      {"dt_max", cfg.solver.dt_max},
      {"t_end", cfg.solver.t_end},
      {"blowup_sup_threshold", cfg.solver.blowup_sup_threshold},
      {"blowup_grad_factor", cfg.solver.blowup_grad_factor},
      {"sample_every", cfg.solver.sample_every}};
  j["scales"] = {{"C0", cfg.scales.C0},
                 {"C1", cfg.scales.C1},
                 {"eta", cfg.scales.eta},
                 {"beta_min", cfg.scales.beta_min},
                 {"regime_override", cfg.scales.regime_override}};
  j["monitors"] = {{"farfield", cfg.monitors.farfield},
                   {"local_decay", cfg.monitors.local_decay},
                   {"mt01bis", cfg.monitors.mt01bis},
                   {"mt01bis_beta", cfg.monitors.mt01bis_beta},
                   {"mt01bis_a", cfg.monitors.mt01bis_a},
                   {"mt01bis_b", cfg.monitors.mt01bis_b},
                   {"kato", cfg.monitors.kato},
                   {"kato_L", cfg.monitors.kato_L},
                   {"kato_front", cfg.monitors.kato_front},
                   {"linvirial", cfg.monitors.linvirial},
                   {"linvirial_theta", cfg.monitors.linvirial_theta},
                   {"linvirial_lambda1", cfg.monitors.linvirial_lambda1},
                   {"linvirial_lambda2", cfg.monitors.linvirial_lambda2},
                   {"linvirial_mu", cfg.monitors.linvirial_mu},
                   {"cadence", cfg.monitors.cadence},
                   {"log_points", cfg.monitors.log_points},
                   {"liminf_reduction_factor", cfg.monitors.liminf_reduction_factor},
                   {"mu_tracking", cfg.monitors.mu_tracking},
                   {"mu0", cfg.monitors.mu0},
                   {"boundary_mass_tol", cfg.monitors.boundary_mass_tol}};
  j["output"] = {{"directory", cfg.output.directory},
                 {"csv", cfg.output.csv},
                 {"json", cfg.output.json},
                 {"checkpoint_every", cfg.output.checkpoint_every}};
  return j.dump(2);
}

}  // namespace gkdv
