/*
  Run artifacts: the fixed-schema time-series CSV, the structured report
  file, per-term virial CSV, field checkpoints and plot-data columns.
*/
#pragma once

#include <string>

#include "gkdv/diagnostics.hpp"

namespace gkdv {

// Column order is fixed and versioned; see kCsvSchemaVersion.
extern const char* const kCsvSchemaVersion;

std::string run_csv_text(const ExperimentReport& report);
std::string report_json_text(const ExperimentReport& report);

// Writes config.json, run.csv, report.json, terms.csv (when virial
// monitors ran) and checkpoint files into the directory.
void write_artifacts(const ExperimentReport& report, const std::string& directory);

// Emits plot-data column files from a finished run directory; returns the
// list of files written.  Partial runs get a trailing truncation marker.
std::vector<std::string> write_plotdata(const std::string& run_directory,
                                        const std::string& out_directory);

}  // namespace gkdv
