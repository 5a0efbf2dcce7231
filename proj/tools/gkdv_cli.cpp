/*
  Command-line driver: run single experiments or presets, sweep parameter
  grids, execute verification suites, and extract plot-data columns.
*/
#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "gkdv/diagnostics.hpp"
#include "gkdv/output.hpp"
#include "gkdv/presets.hpp"
#include "gkdv/verify.hpp"

namespace {

void print_verdicts(const std::vector<gkdv::Verdict>& verdicts) {
  for (const auto& v : verdicts) {
    std::printf("[%s] %-34s %s  measured=%.6g threshold=%.6g%s%s\n", v.criterion.c_str(),
                v.name.c_str(), v.pass ? "PASS" : "FAIL", v.measured, v.threshold,
                v.note.empty() ? "" : "  ", v.note.c_str());
  }
}

int run_one(const gkdv::RunConfig& cfg, const std::string& out_dir, bool quiet = false) {
  gkdv::RunConfig effective = cfg;
  if (!out_dir.empty()) effective.output.directory = out_dir;
  const gkdv::ExperimentReport report = gkdv::run_experiment(effective);
  if (!effective.output.directory.empty())
    gkdv::write_artifacts(report, effective.output.directory);
  if (!quiet) {
    std::printf("run %s: regime=%s samples=%zu%s\n",
                effective.preset_name.empty() ? "(config)" : effective.preset_name.c_str(),
                report.regime == gkdv::Regime::blowup ? "blowup" : "global",
                report.monitors.size(), report.reached_t_end ? "" : " (stopped early)");
    if (report.blowup) {
      std::printf("blow-up detected at t=%.8g reason=%s\n", report.blowup->t_detect,
                  gkdv::to_string(report.blowup->reason).c_str());
      if (report.blowup->fit)
        std::printf("fitted T*=%.8g exponent=%.4f rms=%.3g n=%d reliable=%s\n",
                    report.blowup->fit->T_star, report.blowup->fit->exponent,
                    report.blowup->fit->rms_log_residual, report.blowup->fit->n_samples,
                    report.blowup->fit->reliable ? "yes" : "no");
    }
    for (const auto& w : report.warnings) std::printf("warning: %s\n", w.c_str());
    print_verdicts(report.verdicts);
  }
  return report.all_pass() ? 0 : 1;
}

gkdv::RunConfig load_config_or_die(const std::string& config_path, const std::string& preset) {
  if (!preset.empty()) {
    gkdv::RunConfig cfg = gkdv::preset_config(preset);
    if (!config_path.empty()) {
      std::fprintf(stderr, "error: --config and --preset are mutually exclusive\n");
      std::exit(2);
    }
    return cfg;
  }
  if (config_path.empty()) {
    std::fprintf(stderr, "error: provide --config PATH or --preset NAME\n");
    std::exit(2);
  }
  const gkdv::ParseResult parsed = gkdv::parse_config_file(config_path);
  if (!parsed.ok()) {
    std::fprintf(stderr, "configuration errors:\n");
    for (const auto& e : parsed.errors) std::fprintf(stderr, "  %s\n", e.c_str());
    std::exit(2);
  }
  return *parsed.config;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pseudospectral gKdV simulator and diagnostics"};
  app.require_subcommand(1);

  std::string config_path, preset, out_dir, suite;
  int jobs = 1;
  std::vector<std::string> sweep_sets;

  auto* run = app.add_subcommand("run", "run one experiment");
  run->add_option("--config", config_path, "JSON run configuration");
  run->add_option("--preset", preset, "named preset");
  run->add_option("--out", out_dir, "output directory");

  auto* sweep = app.add_subcommand("sweep", "run a parameter grid");
  sweep->add_option("--config", config_path, "base JSON configuration");
  sweep->add_option("--preset", preset, "base preset");
  sweep->add_option("--set", sweep_sets,
                    "path=v1,v2,... (repeatable; cartesian product)")
      ->required();
  sweep->add_option("--out", out_dir, "output root directory")->required();
  sweep->add_option("--jobs", jobs, "concurrent runs");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", suite, "grid|initdata|identities|inequalities|scales|all")
      ->required();

  auto* plotdata = app.add_subcommand("plotdata", "emit plot columns from a run directory");
  std::string run_dir, plot_out;
  plotdata->add_option("--run", run_dir, "finished run directory")->required();
  plotdata->add_option("--out", plot_out, "output directory (default: run dir)");

  auto* presets_cmd = app.add_subcommand("presets", "list named presets");

  CLI11_PARSE(app, argc, argv);

  try {
    if (presets_cmd->parsed()) {
      for (const auto& name : gkdv::preset_names()) std::printf("%s\n", name.c_str());
      return 0;
    }
    if (run->parsed()) {
      return run_one(load_config_or_die(config_path, preset), out_dir);
    }
    if (sweep->parsed()) {
      gkdv::RunConfig base = load_config_or_die(config_path, preset);
      // expand the cartesian product of --set values over JSON paths
      struct Axis {
        std::string path;
        std::vector<std::string> values;
      };
      std::vector<Axis> axes;
      for (const auto& spec : sweep_sets) {
        const auto eq = spec.find('=');
        if (eq == std::string::npos) {
          std::fprintf(stderr, "error: --set expects path=v1,v2,...\n");
          return 2;
        }
        Axis axis;
        axis.path = spec.substr(0, eq);
        std::stringstream ss(spec.substr(eq + 1));
        std::string item;
        while (std::getline(ss, item, ',')) axis.values.push_back(item);
        if (axis.values.empty()) {
          std::fprintf(stderr, "error: --set %s has no values\n", axis.path.c_str());
          return 2;
        }
        axes.push_back(std::move(axis));
      }
      std::vector<std::vector<std::string>> combos{{}};
      for (const auto& axis : axes) {
        std::vector<std::vector<std::string>> next;
        for (const auto& combo : combos)
          for (const auto& v : axis.values) {
            auto extended = combo;
            extended.push_back(v);
            next.push_back(std::move(extended));
          }
        combos = std::move(next);
      }
      const std::string base_json = gkdv::config_to_json(base);
      struct Task {
        gkdv::RunConfig cfg;
        std::string dir;
        std::string label;
      };
      std::vector<Task> tasks;
      for (std::size_t ci = 0; ci < combos.size(); ++ci) {
        nlohmann::json doc = nlohmann::json::parse(base_json);
        std::string label;
        for (std::size_t ai = 0; ai < axes.size(); ++ai) {
          nlohmann::json* node = &doc;
          std::stringstream ps(axes[ai].path);
          std::string seg;
          std::vector<std::string> segs;
          while (std::getline(ps, seg, '.')) segs.push_back(seg);
          for (std::size_t si = 0; si + 1 < segs.size(); ++si) node = &(*node)[segs[si]];
          nlohmann::json value = nlohmann::json::parse(combos[ci][ai], nullptr, false);
          (*node)[segs.back()] = value.is_discarded() ? nlohmann::json(combos[ci][ai]) : value;
          if (!label.empty()) label += "_";
          label += segs.back() + "=" + combos[ci][ai];
        }
        const gkdv::ParseResult parsed = gkdv::parse_config_text(doc.dump());
        if (!parsed.ok()) {
          std::fprintf(stderr, "sweep point %s invalid:\n", label.c_str());
          for (const auto& e : parsed.errors) std::fprintf(stderr, "  %s\n", e.c_str());
          return 2;
        }
        Task task;
        task.cfg = *parsed.config;
        task.cfg.preset_name = base.preset_name;
        task.dir = (std::filesystem::path(out_dir) / label).string();
        task.label = label;
        tasks.push_back(std::move(task));
      }

      std::atomic<std::size_t> next_task{0};
      std::mutex io_mutex;
      std::vector<std::string> aggregate(tasks.size());
      auto worker = [&]() {
        for (;;) {
          const std::size_t i = next_task.fetch_add(1);
          if (i >= tasks.size()) return;
          const gkdv::ExperimentReport rep = [&] {
            gkdv::RunConfig cfg = tasks[i].cfg;
            cfg.output.directory = tasks[i].dir;
            return gkdv::run_experiment(cfg);
          }();
          gkdv::write_artifacts(rep, tasks[i].dir);
          std::ostringstream row;
          row << tasks[i].label << ',' << (rep.blowup ? "blowup" : "completed") << ','
              << (rep.blowup && rep.blowup->fit ? rep.blowup->fit->exponent : 0.0) << ','
              << (rep.all_pass() ? "pass" : "fail");
          aggregate[i] = row.str();
          std::lock_guard<std::mutex> lock(io_mutex);
          std::printf("done %s\n", tasks[i].label.c_str());
        }
      };
      std::vector<std::thread> pool;
      const int nthreads = std::max(1, jobs);
      for (int tix = 0; tix < nthreads; ++tix) pool.emplace_back(worker);
      for (auto& th : pool) th.join();
      std::filesystem::create_directories(out_dir);
      std::ofstream agg(std::filesystem::path(out_dir) / "aggregate.csv");
      agg << "label,outcome,fitted_exponent,verdicts\n";
      for (const auto& row : aggregate) agg << row << "\n";
      std::printf("sweep complete: %zu runs -> %s\n", tasks.size(), out_dir.c_str());
      return 0;
    }
    if (verify->parsed()) {
      std::vector<std::string> suites =
          suite == "all" ? gkdv::verify_suite_names() : std::vector<std::string>{suite};
      bool all_pass = true;
      for (const auto& name : suites) {
        std::printf("== verify %s\n", name.c_str());
        const auto verdicts = gkdv::verify_suite(name);
        print_verdicts(verdicts);
        for (const auto& v : verdicts) all_pass = all_pass && v.pass;
      }
      return all_pass ? 0 : 1;
    }
    if (plotdata->parsed()) {
      const auto files = gkdv::write_plotdata(run_dir, plot_out.empty() ? run_dir : plot_out);
      for (const auto& f : files) std::printf("%s\n", f.c_str());
      return 0;
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 2;
}
