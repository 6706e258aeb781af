#pragma once

#include "config.h"
#include "snapshot.h"
#include "study.h"

namespace frds {

// Orchestration layer between configuration text and the solver: builds the
// model, initial data, and stepper settings from a config, runs, and writes
// any requested output files into out_dir.
struct RunProducts {
  RunSummary summary;
  int arity = 1;
  std::string model_name;
  GridSpec grid{4, 0.0, 1.0, 0.0, 1.0};
  StepperConfig cfg;
  std::vector<std::string> files;
};

// Executes a `run` config. out_dir empty: no files are written. Divergence
// is recorded in the summary rather than thrown.
RunProducts run_from_config(Config& cfg, const std::string& out_dir);

// Executes a `converge-time` / `converge-space` config.
ErrorTable temporal_table_from_config(Config& cfg);
ErrorTable spatial_table_from_config(Config& cfg);

// Deterministic plain-text run report (no timing data).
std::string summary_text(const RunProducts& products);

}  // namespace frds
