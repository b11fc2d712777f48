#pragma once

// Blocked Gibbs sampler for the truncated model with structural zeros:
// rejection-based data augmentation for the impossible households, latent
// class assignment, conjugate updates, and rejection imputation of missing
// cells.

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "nestimpute/model.hpp"

namespace nestimpute {

using Rational = boost::rational<std::int64_t>;

// Parses "0.5", "1/3" or "1" into an exact fraction.
Rational parse_rational(std::string_view text);

enum class Selection { evenly_spaced, random };

struct SamplerConfig {
  int iterations = 10000;
  int burn_in = 5000;
  int thin = 5;
  // Cap-and-weight fraction per household size; sizes not listed use 1.
  std::map<int, Rational> psi;
  // Starred steps (cap-and-weight). With every psi at 1 they coincide with
  // the plain steps.
  bool capped = false;
  std::uint64_t seed = 1;
  int threads = 1;
  bool impute_enabled = true;
  std::uint64_t augment_cap = 1'000'000'000;  // untruncated draws per size
  std::uint64_t impute_cap = 1'000'000;       // proposals per household
  // Number of completed datasets / parameter draws kept from the retained
  // iterates, and how they are chosen.
  int keep = 0;
  Selection selection = Selection::evenly_spaced;
  // Number of label-invariant probability averages written to the trace.
  int probes = 8;
  int checkpoint_every = 0;
  std::string checkpoint_path;

  Rational psi_for(int h) const;
  int retained() const { return (iterations - burn_in) / thin; }
  void validate() const;
};

// 0-based classes for every observed household and individual.
struct LatentState {
  std::vector<int> G;
  std::vector<int> M;                 // flattened over households
  std::vector<std::size_t> offset;    // first row of household i in M

  int m(std::size_t i, int j) const { return M[offset[i] + static_cast<std::size_t>(j)]; }
};

// Sufficient statistics for one block of households.
struct CountBlock {
  Vector U;                 // F
  Matrix V;                 // F x S
  std::vector<Matrix> eta;  // per household variable, F x d_k
  std::vector<Matrix> nu;   // per individual variable, (F*S) x d_k

  void reset(const DatasetSchema& schema, int F, int S);
  void add(const HouseholdView& h, int p, int g, const int* m);
  // this += other * w, computed as (other * num) / den.
  void add_weighted(const CountBlock& other, const Rational& w);
  friend bool operator==(const CountBlock& a, const CountBlock& b);
};

struct CountStatistics {
  CountBlock observed;
  std::map<int, CountBlock> augmented;  // by household size
  CountBlock total;                     // observed + weighted augmented
};

struct AugmentedSample {
  std::map<int, CountBlock> counts;     // by household size
  std::map<int, std::uint64_t> n0h;
  std::map<int, std::uint64_t> feasible_draws;
  std::uint64_t n0 = 0;
  // Filled only when requested.
  std::vector<GeneratedHousehold> households;
};

struct AugmentOptions {
  bool capped = false;
  std::map<int, Rational> psi;
  std::uint64_t cap = 1'000'000'000;
  bool keep_households = false;
  int threads = 1;
  std::uint64_t stream_seed = 0;  // parallel mode streams
  std::uint64_t stream_tag = 0;
};

// Target number of feasible draws for size h: n_1h or ceil(n_1h * psi_h).
std::uint64_t feasible_target(std::uint64_t n1h, const Rational& psi, bool capped);

AugmentedSample augment_rejection(const Dataset& d, const ModelParams& params, const RuleSet& rules,
                                  const AugmentOptions& opt, Rng& rng);

LatentState assign_latent_classes(const Dataset& d, const ModelParams& params, Rng& rng);

// Per-household posterior class probabilities (pi*), for inspection.
std::vector<double> household_class_posterior(const HouseholdView& h, const DatasetSchema& schema,
                                              const ModelParams& params);

CountStatistics assemble_counts(const Dataset& d, const LatentState& state, const AugmentedSample& aug,
                                int F, int S, const std::map<int, Rational>& psi, bool capped);

struct StickDraw {
  Vector u;
  Vector pi;
  Matrix v;
  Matrix omega;
};

StickDraw update_stick_weights(const CountStatistics& stats, double alpha, double beta, Rng& rng);
void update_multinomial_probs(const CountStatistics& stats, ModelParams& params, Rng& rng);
std::pair<double, double> update_concentration_params(const Vector& u, const Matrix& v, const Hyperparams& hp,
                                                      Rng& rng);

// Redraws every masked cell until the household is feasible. Returns the
// number of proposals made.
std::uint64_t impute_missing_rejection(Dataset& d, const LatentState& state, const ModelParams& params,
                                       const RuleSet& rules, Rng& rng, std::uint64_t cap = 1'000'000);

// Fills masked cells from available-case marginals, redrawing until feasible.
void init_missing(Dataset& d, const RuleSet& rules, Rng& rng, std::uint64_t cap = 1'000'000);

struct TraceRow {
  int iteration = 0;
  double alpha = 0.0;
  double beta = 0.0;
  std::vector<double> probes;
  int occupied_household = 0;
  int occupied_individual = 0;
  std::uint64_t n0 = 0;
  double augment_seconds = 0.0;
  double impute_seconds = 0.0;
};

// Label-invariant diagnostic: a fixed subset of marginal probabilities
// sum_g pi_g lambda_gc (household) or sum_g pi_g sum_m omega_gm phi_gmc.
struct Probe {
  bool household = true;
  int var = 0;
  int level = 0;  // 1-based
};
std::vector<Probe> choose_probes(const DatasetSchema& schema, int count, std::uint64_t seed);
double evaluate_probe(const Probe& probe, const ModelParams& params);

struct RetainedDraw {
  int iteration = 0;
  ModelParams params;
  Dataset data;  // completed, chain layout
};

struct ChainResult {
  std::vector<TraceRow> trace;
  std::vector<int> retained_iterations;
  std::vector<RetainedDraw> kept;
  ModelParams final_params;
  Dataset final_data;
  LatentState final_state;
  double seconds = 0.0;
};

struct ChainHooks {
  std::function<void(const TraceRow&)> on_iteration;
};

// Iterations whose draws are kept, given the retained iterate list.
std::vector<int> select_kept(const std::vector<int>& retained, int keep, Selection how, std::uint64_t seed);

// Runs the full sampler. `rules` may be bound to the original or to the
// chain's layout; it is rebound to d.schema.
ChainResult run_chain(Dataset d, const RuleSet& rules, const Hyperparams& hp, const SamplerConfig& cfg,
                      const ChainHooks& hooks = {});

// Continues a chain from a checkpoint written by run_chain.
ChainResult resume_chain(const std::string& checkpoint_path, const Dataset& original, const RuleSet& rules,
                         const SamplerConfig& cfg, const ChainHooks& hooks = {});

}  // namespace nestimpute
