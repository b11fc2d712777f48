#pragma once

// Batch commands behind the command-line front-end. Each reads a Config,
// writes its products under [output] dir, and throws an Error subclass on
// failure.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "nestimpute/config.hpp"

namespace nestimpute {

struct RunOptions {
  std::optional<std::uint64_t> seed;
  std::optional<int> threads;
  // Per-iteration S1 and S9 wall times go to <stem>.bench.tsv.
  bool bench = false;
  std::optional<int> checkpoint_every;
  // Continue from <stem>.ckpt instead of starting afresh.
  bool resume = false;
  std::ostream* out = nullptr;  // one-line progress summaries
};

void cmd_impute(const Config& cfg, const RunOptions& opt = {});
void cmd_synthesize(const Config& cfg, const RunOptions& opt = {});
void cmd_evaluate(const Config& cfg, const RunOptions& opt = {});
void cmd_simulate(const Config& cfg, const RunOptions& opt = {});
void cmd_diagnose(const Config& cfg, const RunOptions& opt = {});

struct ChainSummary {
  std::string column;
  std::size_t n = 0;
  double mean = 0.0;
  double sd = 0.0;
  double lag1 = 0.0;
  double ess = 0.0;
  double min = 0.0;
  double max = 0.0;
};

// Effective sample size from the initial positive sequence of
// autocorrelation pairs.
double effective_sample_size(const std::vector<double>& x);
ChainSummary summarize_series(const std::string& column, const std::vector<double>& x);

}  // namespace nestimpute
