#pragma once

// Truncated nested Dirichlet process mixture of products of multinomials.
// Class labels are 0-based: households in [0, F), individuals in [0, S).

#include <iosfwd>
#include <optional>
#include <vector>

#include "nestimpute/random.hpp"
#include "nestimpute/rules.hpp"
#include "nestimpute/schema.hpp"

namespace nestimpute {

struct Hyperparams {
  int F = 30;
  int S = 15;
  double a_alpha = 0.25;
  double b_alpha = 0.25;
  double a_beta = 0.25;
  double b_beta = 0.25;

  void validate() const;
  friend bool operator==(const Hyperparams&, const Hyperparams&) = default;
};

struct ModelParams {
  Vector pi;                   // F
  Vector u;                    // F, u[F-1] = 1
  Matrix omega;                // F x S
  Matrix v;                    // F x S, v(g, S-1) = 1
  std::vector<Matrix> lambda;  // per household variable, F x d_k
  std::vector<Matrix> phi;     // per individual variable, (F*S) x d_k, row g*S + m
  double alpha = 1.0;
  double beta = 1.0;

  int F() const { return static_cast<int>(pi.size()); }
  int S() const { return static_cast<int>(omega.cols()); }
  Eigen::Index phi_row(int g, int m) const { return static_cast<Eigen::Index>(g) * S() + m; }

  // Throws ModelError when a simplex or stick-breaking invariant fails.
  void validate(double tol = 1e-12) const;
  friend bool operator==(const ModelParams& a, const ModelParams& b);
};

// pi_g = u_g prod_{f<g} (1 - u_f).
Vector stick_break(const Vector& u);

ModelParams init_from_prior(const Hyperparams& hp, const DatasetSchema& schema, Rng& rng);

// Uniform parameters: every lambda/phi row uniform, pi and omega uniform.
ModelParams uniform_params(const DatasetSchema& schema, int F, int S);

struct GeneratedHousehold {
  Household household;
  int g = 0;
  std::vector<int> m;  // one class per stored row
};

// Cached per-size draw tables for repeated sampling from one parameter value.
class HouseholdGenerator {
 public:
  HouseholdGenerator(const ModelParams& params, const DatasetSchema& schema);

  // Draws into `out` (resized as needed). With no g, the class comes from pi
  // reweighted by the probability of size h.
  void draw(std::optional<int> g, int h, Rng& rng, GeneratedHousehold& out) const;

  // pi** for size h (normalised).
  const std::vector<double>& size_weights(int h) const;

 private:
  const DatasetSchema* schema_;
  int F_ = 0;
  int S_ = 0;
  std::vector<std::vector<double>> size_pi_;  // by size level
  std::vector<CumulativeRows> size_pi_cum_;
  CumulativeRows omega_;
  std::vector<CumulativeRows> lambda_;
  std::vector<CumulativeRows> phi_;
};

GeneratedHousehold sample_household_untruncated(const ModelParams& params, const DatasetSchema& schema,
                                                std::optional<int> g, int h, Rng& rng);

// Log of the mixture kernel summed over households; -inf when any household
// is infeasible. Requires a completed dataset.
double loglik_kernel(const Dataset& d, const ModelParams& params, const RuleSet& rules);

// Log of the kernel for one household.
double household_loglik(const HouseholdView& h, const DatasetSchema& schema, const ModelParams& params);

// Pr(X in S_h | theta, size h), by enumeration of C_h.
double pi0h_bruteforce(const ModelParams& params, const DatasetSchema& schema, const RuleSet& rules, int h,
                       std::uint64_t limit = 2'000'000);

// Exact text checkpoint (hexfloat) of hyperparameters and parameters.
void write_params(std::ostream& out, const Hyperparams& hp, const ModelParams& params);
std::pair<Hyperparams, ModelParams> read_params(std::istream& in);

}  // namespace nestimpute
