#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace nestimpute {

using Matrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Vector = Eigen::VectorXd;

// Seeded random stream. Every sampling routine in the library takes one of
// these explicitly; nothing touches a global generator.
class Rng {
 public:
  using engine_type = std::mt19937_64;

  explicit Rng(std::uint64_t seed = 1);

  // Independent stream keyed by (seed, coords...). Used to give parallel
  // workers their own reproducible generators.
  static Rng stream(std::uint64_t seed, std::initializer_list<std::uint64_t> coords);

  // Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  std::uint64_t bits() { return engine_(); }
  // Uniform integer on [0, n).
  std::uint64_t below(std::uint64_t n);

  // Gamma with shape/rate parameterization (mean shape/rate).
  double gamma(double shape, double rate);
  double beta(double a, double b);
  // Fills `out` with a Dirichlet(concentration) draw.
  void dirichlet(std::span<const double> concentration, std::span<double> out);
  // Index drawn proportionally to nonnegative `weights` (linear scan).
  int categorical(std::span<const double> weights);

  engine_type& engine() { return engine_; }
  std::string state() const;
  void set_state(const std::string& s);

  friend bool operator==(const Rng& a, const Rng& b) { return a.engine_ == b.engine_; }

 private:
  engine_type engine_;
};

// Cumulative sums for every row of a row-stochastic matrix so that repeated
// draws from the same row cost one uniform and a binary search.
class CumulativeRows {
 public:
  CumulativeRows() = default;
  explicit CumulativeRows(const Matrix& probs);

  // Returns a 0-based column index.
  int sample(Eigen::Index row, Rng& rng) const;
  Eigen::Index rows() const { return rows_; }
  Eigen::Index cols() const { return cols_; }

 private:
  std::vector<double> cum_;
  Eigen::Index rows_ = 0;
  Eigen::Index cols_ = 0;
};

}  // namespace nestimpute
