#pragma once

// Estimands over completed or synthetic datasets and the combining rules for
// multiple imputation and partially synthetic data.

#include <cstdint>
#include <limits>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "nestimpute/rules.hpp"
#include "nestimpute/schema.hpp"

namespace nestimpute {

enum class EstimandKind { marginal, bivariate, trivariate, cell, household_predicate };
enum class Denominator { households, individuals };

struct CellCondition {
  Scope scope = Scope::individual;
  int var = 0;
  int level = 0;  // 1-based
};

struct Estimand {
  std::string name;
  EstimandKind kind = EstimandKind::cell;
  Denominator denominator = Denominator::households;
  int size = 0;  // restrict to households of this size (0: all)
  std::vector<CellCondition> cells;
  // Household predicate: satisfied when every rule of at least one group
  // holds.
  std::vector<RuleSet> any_of;
};

struct Estimate {
  double q = 0.0;
  double u = 0.0;
  std::size_t n = 0;
};

// Sample proportion and its Wald variance q(1-q)/n. Dataset must be filled.
Estimate estimate_on_dataset(const Dataset& z, const Estimand& e);
// Same for many estimands, tabulating each variable tuple once.
std::vector<Estimate> estimate_all(const Dataset& z, const std::vector<Estimand>& estimands);

struct MIResult {
  int L = 0;
  double qbar = 0.0;
  double b = 0.0;
  double ubar = 0.0;
  double T = 0.0;
  double nu = std::numeric_limits<double>::infinity();
  double lo = 0.0;
  double hi = 0.0;
};

// Two-sided 1 - gamma intervals. With b = 0 the reference distribution is
// normal.
MIResult combine_rubin(const std::vector<Estimate>& results, double gamma = 0.05);
MIResult combine_partial_synth(const std::vector<Estimate>& results, double gamma = 0.05);
// p +/- z sqrt(p(1-p)/n) for a single complete dataset.
MIResult wald_interval(const Estimate& e, double gamma = 0.05);

// Upper 1 - gamma/2 quantile of Student t (normal when nu is infinite).
double t_quantile(double nu, double gamma);

struct SuiteOptions {
  bool marginal = true;
  bool bivariate = true;
  bool trivariate = true;
  bool include_size = false;
  // Keep at most this many bivariate and trivariate cells each (0: all).
  std::size_t subsample = 0;
  std::uint64_t seed = 1;
};

std::vector<Estimand> estimand_suite(const DatasetSchema& schema, const SuiteOptions& opt = {});

// Estimand file: one estimand per line,
//   name | denominator | query
// denominator: households | individuals, optionally followed by size=<h>
// query: "cell var=label, ..." or rule clauses joined by ';' (and) and
// '||' (or). "@suite marginal,bivariate[,trivariate] [subsample=N] [seed=S]"
// expands to the generated suite.
std::vector<Estimand> parse_estimands(std::string_view text, const std::shared_ptr<const DatasetSchema>& schema);

}  // namespace nestimpute
