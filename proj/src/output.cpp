#include "gkdv/output.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace gkdv {

const char* const kCsvSchemaVersion = "gkdv.run.v1";

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

const char* const kColumns =
    "t,mass,energy,grad_l2,sup,hs_crit,right_mass,left_mass,local_lp_normalized,"
    "running_min_local,J_quad,J_lin,kato_residual,linvirial_residual,theta,lambda1,lambda2,mu,"
    "beta_right,beta_left,beta_floor";

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

}  // namespace

std::string run_csv_text(const ExperimentReport& report) {
  std::ostringstream os;
  os << "# schema=" << kCsvSchemaVersion << "\n" << kColumns << "\n";
  for (std::size_t i = 0; i < report.monitors.size(); ++i) {
    const MonitorRecord& m = report.monitors[i];
    const ConservationRecord& c = report.conservation[i];
    os << fmt(m.t) << ',' << fmt(c.mass) << ',' << fmt(c.energy) << ',' << fmt(c.grad_l2) << ','
       << fmt(c.sup) << ',' << fmt(c.hs_crit) << ',' << fmt(m.right_mass) << ','
       << fmt(m.left_mass) << ',' << fmt(m.local_lp_normalized) << ','
       << fmt(m.running_min_local) << ',' << fmt(m.J_quad) << ',' << fmt(m.J_lin) << ','
       << fmt(m.kato_residual) << ',' << fmt(m.linvirial_residual) << ',' << fmt(m.theta) << ','
       << fmt(m.lambda1) << ',' << fmt(m.lambda2) << ',' << fmt(m.mu) << ',' << fmt(m.beta_right)
       << ',' << fmt(m.beta_left) << ',' << fmt(m.beta_floor) << "\n";
  }
  return os.str();
}

namespace {

std::string terms_csv_text(const ExperimentReport& report) {
  std::ostringstream os;
  os << "# schema=gkdv.terms.v1\n";
  os << "t,kato_time,kato_gradient,kato_dispersive,kato_flux,lin_time,lin_dispersive,lin_flux,"
        "lin_coercive\n";
  const bool has_kato = !report.kato_terms.empty();
  const bool has_lin = !report.linvirial_terms.empty();
  for (std::size_t i = 0; i < report.monitors.size(); ++i) {
    const double nan = std::nan("");
    const KatoTerms k = has_kato ? report.kato_terms[i] : KatoTerms{nan, nan, nan, nan};
    LinearVirialTerms l;
    if (has_lin) l = report.linvirial_terms[i];
    else l = LinearVirialTerms{nan, nan, nan, std::nullopt};
    os << fmt(report.monitors[i].t) << ',' << fmt(k.time_term) << ',' << fmt(k.gradient_term)
       << ',' << fmt(k.dispersive_term) << ',' << fmt(k.flux_term) << ',' << fmt(l.time_term)
       << ',' << fmt(l.dispersive_term) << ',' << fmt(l.flux_term) << ','
       << fmt(l.coercive_term ? *l.coercive_term : std::nan("")) << "\n";
  }
  return os.str();
}

}  // namespace

std::string report_json_text(const ExperimentReport& report) {
  using nlohmann::json;
  json j;
  j["schema"] = "gkdv.report.v1";
  j["config"] = json::parse(config_to_json(report.config));
  j["preset"] = report.config.preset_name;
  j["regime"] = report.regime == Regime::blowup ? "blowup" : "global";
  j["reached_t_end"] = report.reached_t_end;
  j["samples"] = report.monitors.size();
  if (report.T_star_estimate) {
    j["T_star_estimate"] = *report.T_star_estimate;
    j["T_star_from_fit"] = report.T_star_from_fit;
  }
  if (report.blowup) {
    json b;
    b["t_detect"] = report.blowup->t_detect;
    b["reason"] = to_string(report.blowup->reason);
    if (report.blowup->fit) {
      b["fit"] = {{"T_star", report.blowup->fit->T_star},
                  {"exponent", report.blowup->fit->exponent},
                  {"rms_log_residual", report.blowup->fit->rms_log_residual},
                  {"n_samples", report.blowup->fit->n_samples},
                  {"reliable", report.blowup->fit->reliable}};
    }
    j["blowup"] = b;
  }
  j["events"] = json::array();
  for (const auto& e : report.events)
    j["events"].push_back({{"t", e.t}, {"kind", e.kind}, {"detail", e.detail}});
  j["warnings"] = report.warnings;
  j["verdicts"] = json::array();
  for (const auto& v : report.verdicts)
    j["verdicts"].push_back({{"name", v.name},
                             {"criterion", v.criterion},
                             {"pass", v.pass},
                             {"measured", v.measured},
                             {"threshold", v.threshold},
                             {"note", v.note}});
  j["metadata"] = {{"beta_floor_envelope_width", 10},
                   {"csv_schema", kCsvSchemaVersion}};
  return j.dump(2) + "\n";
}

void write_artifacts(const ExperimentReport& report, const std::string& directory) {
  namespace fs = std::filesystem;
  const fs::path dir(directory);
  fs::create_directories(dir);
  write_file(dir / "config.json", config_to_json(report.config) + "\n");
  if (report.config.output.csv) write_file(dir / "run.csv", run_csv_text(report));
  if (report.config.output.json) write_file(dir / "report.json", report_json_text(report));
  if (!report.kato_terms.empty() || !report.linvirial_terms.empty())
    write_file(dir / "terms.csv", terms_csv_text(report));
  int index = 0;
  for (const auto& [t, field] : report.checkpoints) {
    char name[64];
    std::snprintf(name, sizeof(name), "checkpoint_%04d.csv", index++);
    std::ostringstream os;
    os << "# t=" << fmt(t) << "\nx,u\n";
    for (int jj = 0; jj < field.grid->n(); ++jj)
      os << fmt(field.grid->x(jj)) << ',' << fmt(field.values[jj]) << "\n";
    write_file(dir / name, os.str());
  }
}

namespace {

struct CsvTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  int col(const std::string& name) const {
    for (std::size_t i = 0; i < columns.size(); ++i)
      if (columns[i] == name) return static_cast<int>(i);
    throw std::runtime_error("column not found: " + name);
  }
};

CsvTable read_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  CsvTable table;
  std::string line;
  bool header_done = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (!header_done) {
      table.columns = cells;
      header_done = true;
      continue;
    }
    std::vector<double> row;
    row.reserve(cells.size());
    for (const auto& c : cells) row.push_back(std::strtod(c.c_str(), nullptr));
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace

std::vector<std::string> write_plotdata(const std::string& run_directory,
                                        const std::string& out_directory) {
  namespace fs = std::filesystem;
  const fs::path run_dir(run_directory);
  if (!fs::exists(run_dir / "run.csv"))
    throw std::runtime_error("no run.csv in " + run_directory);
  const CsvTable table = read_csv(run_dir / "run.csv");

  bool truncated = false;
  double T_star = std::nan("");
  int p = 0;
  if (fs::exists(run_dir / "report.json")) {
    std::ifstream in(run_dir / "report.json");
    std::stringstream ss;
    ss << in.rdbuf();
    auto j = nlohmann::json::parse(ss.str(), nullptr, false);
    if (!j.is_discarded()) {
      truncated = j.contains("reached_t_end") && !j["reached_t_end"].get<bool>();
      if (j.contains("T_star_estimate")) T_star = j["T_star_estimate"].get<double>();
      if (j.contains("config")) p = j["config"]["model"]["p"].get<int>();
    }
  }

  fs::create_directories(out_directory);
  const fs::path out_dir(out_directory);
  std::vector<std::string> written;

  auto emit = [&](const char* name, const std::vector<int>& cols) {
    std::ostringstream os;
    os << "# columns:";
    for (int c : cols) os << ' ' << table.columns[c];
    os << "\n";
    for (const auto& row : table.rows) {
      for (std::size_t i = 0; i < cols.size(); ++i)
        os << (i ? " " : "") << fmt(row[cols[i]]);
      os << "\n";
    }
    if (truncated) os << "# truncated\n";
    write_file(out_dir / name, os.str());
    written.push_back((out_dir / name).string());
  };

  emit("right_mass.dat", {table.col("t"), table.col("right_mass")});
  emit("left_mass.dat", {table.col("t"), table.col("left_mass")});
  emit("local_decay.dat",
       {table.col("t"), table.col("local_lp_normalized"), table.col("running_min_local")});

  // gradient growth against the minimal-rate curve, calibrated through
  // the final sample when a T* estimate exists
  {
    const int tc = table.col("t"), gc = table.col("grad_l2");
    double C = std::nan(""), expo = std::nan("");
    if (std::isfinite(T_star) && p >= 5 && !table.rows.empty()) {
      expo = (1.0 - (p - 5) / (2.0 * (p - 1))) / 3.0;
      const auto& last = table.rows.back();
      const double s_last = T_star - last[tc];
      if (s_last > 0) C = last[gc] * std::pow(s_last, expo);
    }
    std::ostringstream os;
    os << "# columns: t grad_l2 minimal_rate_curve\n";
    for (const auto& row : table.rows) {
      double curve = std::nan("");
      if (std::isfinite(C) && T_star - row[tc] > 0)
        curve = C * std::pow(T_star - row[tc], -expo);
      os << fmt(row[tc]) << ' ' << fmt(row[gc]) << ' ' << fmt(curve) << "\n";
    }
    if (truncated) os << "# truncated\n";
    write_file(out_dir / "gradient_rate.dat", os.str());
    written.push_back((out_dir / "gradient_rate.dat").string());
  }
  return written;
}

}  // namespace gkdv
