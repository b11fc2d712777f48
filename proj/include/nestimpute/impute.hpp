#pragma once

// Completed-data and synthetic-data products built from posterior draws.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "nestimpute/gibbs.hpp"

namespace nestimpute {

struct CompletedDatasetSet {
  std::vector<Dataset> datasets;  // original layout
  std::vector<int> iterations;    // source iterate of each dataset
  std::uint64_t seed = 0;
};

// Picks L of the given draws (evenly spaced or random over their iterates),
// maps each completed dataset back to the original layout and checks that
// every household is feasible.
CompletedDatasetSet emit_completed_datasets(const std::vector<RetainedDraw>& draws, int L, Selection how, Rng& rng,
                                            const RuleSet& rules);

// Feasible households drawn from the truncated model with exactly counts[h]
// households of each size, in the layout of `schema`.
Dataset draw_feasible_households(const ModelParams& params, std::shared_ptr<const DatasetSchema> schema,
                                 const RuleSet& rules, const std::map<int, std::size_t>& counts, Rng& rng,
                                 std::uint64_t cap = 1'000'000'000);

// Fully synthetic replacement for `d` matching its per-size counts, returned
// in the original layout.
Dataset generate_synthetic(const ModelParams& params, const Dataset& d, const RuleSet& rules, Rng& rng,
                           std::uint64_t cap = 1'000'000'000);

struct ManifestEntry {
  std::string file;
  int iteration = 0;
  std::string sha256;
};

// Writes <dir>/<stem>.<tag><l>.csv for l = 1..L plus <dir>/<stem>.manifest.json.
std::vector<ManifestEntry> write_dataset_set(const std::vector<Dataset>& datasets, const std::vector<int>& iterations,
                                             const std::string& dir, const std::string& stem, const std::string& tag,
                                             std::uint64_t seed, bool with_missing = false);

std::string sha256_file(const std::string& path);

}  // namespace nestimpute
