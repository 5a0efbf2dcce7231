#include "gkdv/presets.hpp"

#include <stdexcept>

namespace gkdv {

namespace {

RunConfig soliton_transport(int p, double dt) {
  RunConfig cfg;
  cfg.p = p;
  cfg.grid = {2048, 100.0, 0.0};
  cfg.init = SolitonInit{p, 1.0, 0.0};
  cfg.solver.p = p;
  cfg.solver.dealias = default_dealias(p);
  cfg.solver.dt = dt;
  cfg.solver.t_end = 5.0;
  cfg.solver.sample_every = 200;
  cfg.monitors.farfield = false;
  cfg.monitors.local_decay = false;
  cfg.monitors.cadence = "uniform";
  return cfg;
}

}  // namespace

std::vector<std::string> preset_names() {
  return {"zero",        "soliton_transport_p2", "soliton_transport_p4", "soliton_transport_p6",
          "kato_p2",     "linvirial_p6",         "blowup_p6",            "global_small_p6",
          "global_case2_p6", "mt01bis_p6"};
}

RunConfig preset_config(const std::string& name) {
  if (name == "zero") {
    RunConfig cfg;
    cfg.p = 6;
    cfg.grid = {512, 100.0, 0.0};
    cfg.init = GaussianInit{0.0, 1.0, 0.0};
    cfg.solver.p = 6;
    cfg.solver.dealias = default_dealias(6);
    cfg.solver.dt = 1e-2;
    cfg.solver.t_end = 1.0;
    cfg.solver.sample_every = 10;
    cfg.monitors.cadence = "uniform";
    cfg.preset_name = name;
    return cfg;
  }
  if (name == "soliton_transport_p2") {
    RunConfig cfg = soliton_transport(2, 4.0e-4);
    cfg.preset_name = name;
    return cfg;
  }
  if (name == "soliton_transport_p4") {
    RunConfig cfg = soliton_transport(4, 3.0e-4);
    cfg.preset_name = name;
    return cfg;
  }
  if (name == "soliton_transport_p6") {
    RunConfig cfg = soliton_transport(6, 1.5e-4);
    cfg.preset_name = name;
    return cfg;
  }
  if (name == "kato_p2") {
    RunConfig cfg;
    cfg.p = 2;
    cfg.grid = {2048, 100.0, 0.0};
    cfg.init = SolitonInit{2, 1.0, 0.0};
    cfg.solver.p = 2;
    cfg.solver.dealias = default_dealias(2);
    cfg.solver.dt = 2.0e-3;
    cfg.solver.t_end = 5.0;
    cfg.solver.sample_every = 20;  // 0.04 between samples
    cfg.monitors.farfield = false;
    cfg.monitors.local_decay = false;
    cfg.monitors.kato = true;
    cfg.monitors.kato_L = 2.0;
    cfg.monitors.kato_front = 5.0;
    cfg.monitors.cadence = "uniform";
    cfg.preset_name = name;
    return cfg;
  }
  if (name == "linvirial_p6") {
    RunConfig cfg;
    cfg.p = 6;
    cfg.grid = {2048, 100.0, 0.0};
    cfg.init = SolitonInit{6, 1.0, 0.0};
    cfg.solver.p = 6;
    cfg.solver.dealias = default_dealias(6);
    cfg.solver.dt = 2.0e-4;  // u^6 flux drift below the 1e-8 mass gate
    cfg.solver.t_end = 5.0;
    cfg.solver.sample_every = 5;  // 1e-3 between samples keeps the FD floor under 1e-6
    cfg.monitors.farfield = false;
    cfg.monitors.local_decay = false;
    cfg.monitors.linvirial = true;
    cfg.monitors.linvirial_theta = 1.0;
    cfg.monitors.linvirial_lambda1 = 1.0;
    cfg.monitors.linvirial_lambda2 = 2.0;
    cfg.monitors.linvirial_mu = 2.5;
    cfg.monitors.cadence = "uniform";
    cfg.preset_name = name;
    return cfg;
  }
  if (name == "blowup_p6") {
    RunConfig cfg;
    cfg.p = 6;
    cfg.grid = {4096, 100.0, 0.0};
    cfg.init = ScaledSolitonInit{6, 1.5, 1.0, 0.0};
    cfg.solver.p = 6;
    cfg.solver.dealias = default_dealias(6);
    cfg.solver.dt = 0.0;  // adaptive
    cfg.solver.cfl_safety = 0.45;
    cfg.solver.dt_max = 1.0e-2;
    cfg.solver.dt_min = 1.0e-9;
    cfg.solver.t_end = 1.0;
    cfg.solver.blowup_grad_factor = 20.0;
    cfg.solver.blowup_sup_threshold = 1.0e3;
    cfg.solver.sample_every = 10;
    cfg.monitors.farfield = false;
    cfg.monitors.local_decay = true;
    cfg.monitors.cadence = "uniform";
    cfg.scales.regime_override = "blowup";
    cfg.preset_name = name;
    return cfg;
  }
  if (name == "global_small_p6" || name == "global_case2_p6") {
    RunConfig cfg;
    cfg.p = 6;
    cfg.grid = {8192, 800.0, 0.0};
    cfg.init = GaussianInit{0.05, 2.5, 0.0};
    cfg.solver.p = 6;
    cfg.solver.dealias = default_dealias(6);
    cfg.solver.dt = 2.0e-2;
    // t_end 20 covers the far-field proxy; the case-2 local monitor needs
    // a longer horizon for its running minimum to traverse a decade
    cfg.solver.t_end = name == "global_small_p6" ? 20.0 : 60.0;
    cfg.solver.sample_every = 10;  // 0.2 between samples
    cfg.monitors.farfield = true;
    // the far-field preset stops at t=20; a decade of local decay needs the
    // longer case-2 horizon, so the local monitor lives on that preset
    cfg.monitors.local_decay = name == "global_case2_p6";
    cfg.monitors.cadence = "uniform";
    cfg.scales.regime_override = "global";
    cfg.preset_name = name;
    return cfg;
  }
  if (name == "mt01bis_p6") {
    RunConfig cfg;
    cfg.p = 6;
    cfg.grid = {8192, 800.0, 0.0};
    cfg.init = GaussianInit{0.7, 1.0, 0.0};
    cfg.solver.p = 6;
    cfg.solver.dealias = default_dealias(6);
    cfg.solver.dt = 5.0e-3;  // keeps the u^6 flux drift below the 1e-8 mass gate
    cfg.solver.t_end = 20.0;
    cfg.solver.sample_every = 40;
    cfg.monitors.farfield = false;
    cfg.monitors.local_decay = false;
    cfg.monitors.mt01bis = true;
    cfg.monitors.cadence = "uniform";
    cfg.scales.regime_override = "global";
    cfg.preset_name = name;
    return cfg;
  }
  throw std::invalid_argument("unknown preset '" + name + "'");
}

}  // namespace gkdv
