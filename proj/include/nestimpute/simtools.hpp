#pragma once

// Data generators and missingness mechanisms for validation studies.

#include <cstdint>
#include <map>
#include <memory>
#include <string>

#include "nestimpute/model.hpp"

namespace nestimpute {

// Feasible households from the truncated model with exact per-size counts.
Dataset sample_population(const ModelParams& params, std::shared_ptr<const DatasetSchema> schema,
                          const RuleSet& rules, const std::map<int, std::size_t>& counts, Rng& rng,
                          std::uint64_t cap = 1'000'000'000);

// Leaves round(complete_frac * n) randomly chosen households complete; every
// other cell of the remaining households (except household size and the
// head's relationship) is masked independently with probability rate.
Dataset apply_mcar(const Dataset& d, double complete_frac, double rate, Rng& rng);

// Variable positions of the census-style layout (original coding).
struct CensusLayout {
  int ownership = -1;  // household
  int gender = -1;     // individual
  int race = -1;
  int hispanic = -1;
  int age = -1;
  int relationship = -1;
  int head_level = 0;
  // Relationship labels in order after removing the head.
  static const std::vector<std::string>& relationship_labels();

  // Throws SchemaError when the schema is not of this layout.
  static CensusLayout resolve(const DatasetSchema& schema);
};

struct StressRates {
  double household = 0.30;
  double demographic = 0.30;  // gender, race, Hispanic origin of non-heads
};

// Missingness stress mechanism on original-layout data: household variables
// other than size (and the head's age) at 30%, non-head demographics at 30%,
// age by relationship group and relationship by age band.
Dataset apply_stress_mechanism(const Dataset& d, Rng& rng, const StressRates& rates = {});

// Probability that a non-head's age is blanked given its relationship level
// (original coding), and that its relationship is blanked given its age.
double stress_age_rate(const CensusLayout& layout, int relationship_level);
double stress_relationship_rate(int age_years);

// Census-like households on the census layout (sizes from the schema),
// rejected against `rules`. Ground truth for pipeline tests and benchmarks.
Dataset simulate_census(std::shared_ptr<const DatasetSchema> schema, const RuleSet& rules, std::size_t n, Rng& rng);

}  // namespace nestimpute
