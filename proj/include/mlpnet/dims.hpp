#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace mlpnet {

/// Layer-dimension vector (k_0, ..., k_{H+1}) of a feedforward network:
/// k_0 is the input width, k_{H+1} the output width, and H >= 1 hidden
/// layers sit in between. Immutable after construction.
class DimVector {
 public:
  explicit DimVector(std::vector<std::int64_t> dims);
  DimVector(std::initializer_list<std::int64_t> dims);

  const std::vector<std::int64_t>& entries() const { return dims_; }
  std::size_t len() const { return dims_.size(); }
  std::int64_t operator[](std::size_t i) const { return dims_[i]; }
  std::int64_t input_width() const { return dims_.front(); }
  std::int64_t output_width() const { return dims_.back(); }

  /// Largest entry, the sup-norm over all layer widths.
  std::int64_t sup_norm() const;
  /// Largest interior (hidden-layer) entry.
  std::int64_t max_hidden() const;

  bool operator==(const DimVector& other) const { return dims_ == other.dims_; }
  bool operator!=(const DimVector& other) const { return !(*this == other); }

  std::string to_string() const;

 private:
  std::vector<std::int64_t> dims_;
};

/// Composition operator on dimension vectors: the dims of f's network
/// composed after g's network. Length adds minus one; the seam width is
/// beta_last + alpha_0.
DimVector odot(const DimVector& alpha, const DimVector& beta);

/// Parallel-sum operator: requires equal length and matching endpoint
/// widths; interior widths add, endpoints are preserved.
DimVector boxplus(const DimVector& alpha, const DimVector& beta);

/// The neutral vector (1, 2, ..., 2, 1) of total length n >= 3, the dims
/// of a scalar identity network with n-2 hidden layers.
DimVector neutral(std::int64_t n);

}  // namespace mlpnet
