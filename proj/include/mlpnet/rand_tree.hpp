#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

namespace mlpnet {

/// Multi-index theta labeling one independent random source in the
/// recursion tree. Entries may be negative.
class MultiIndex {
 public:
  MultiIndex() : path_{0} {}
  explicit MultiIndex(std::vector<std::int64_t> path);

  const std::vector<std::int64_t>& path() const { return path_; }
  std::size_t size() const { return path_.size(); }

  /// Returns this index with (a, b) appended, the child key (theta, a, b).
  MultiIndex extended(std::int64_t a, std::int64_t b) const;

  bool operator==(const MultiIndex& other) const { return path_ == other.path_; }
  std::string to_string() const;

 private:
  std::vector<std::int64_t> path_;
};

/// Deterministic randomness oracle: a pure function of (master seed, theta)
/// yielding the single uniform and the single d-dimensional standard
/// Gaussian attached to that index. Stateless; safe to query from any
/// thread.
class RandTree {
 public:
  RandTree(std::uint64_t master_seed, int dim);

  std::uint64_t master_seed() const { return seed_; }
  int dim() const { return dim_; }

  /// The 64-bit stream key derived from (seed, theta); exposed for
  /// collision audits.
  std::uint64_t stream_key(const MultiIndex& theta) const;

  /// The U[0,1] variable attached to theta.
  double uniform(const MultiIndex& theta) const;

  /// The time point t + (T - t) * uniform(theta); requires 0 <= t <= T.
  double time_point(const MultiIndex& theta, double t, double horizon) const;

  /// The theta-keyed standard Gaussian vector of length d.
  Eigen::VectorXd gaussian(const MultiIndex& theta) const;

  /// sqrt(dt) times the theta-keyed Gaussian; dt = 0 gives the zero vector.
  Eigen::VectorXd brownian_increment(const MultiIndex& theta, double dt) const;

 private:
  std::uint64_t seed_;
  int dim_;
};

/// Inverse standard normal CDF (double precision rational approximation).
double inverse_normal_cdf(double p);

}  // namespace mlpnet
