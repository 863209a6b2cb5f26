#include "mlpnet/dims.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace mlpnet {

namespace {

void validate(const std::vector<std::int64_t>& dims) {
  if (dims.size() < 3) {
    throw std::invalid_argument("DimVector needs at least 3 entries, got " +
                                std::to_string(dims.size()));
  }
  for (std::int64_t k : dims) {
    if (k < 1) {
      throw std::invalid_argument("DimVector entries must be positive");
    }
  }
}

}  // namespace

DimVector::DimVector(std::vector<std::int64_t> dims) : dims_(std::move(dims)) {
  validate(dims_);
}

DimVector::DimVector(std::initializer_list<std::int64_t> dims) : dims_(dims) {
  validate(dims_);
}

std::int64_t DimVector::sup_norm() const {
  return *std::max_element(dims_.begin(), dims_.end());
}

std::int64_t DimVector::max_hidden() const {
  return *std::max_element(dims_.begin() + 1, dims_.end() - 1);
}

std::string DimVector::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    if (i > 0) out << ',';
    out << dims_[i];
  }
  out << ')';
  return out.str();
}

DimVector odot(const DimVector& alpha, const DimVector& beta) {
  std::vector<std::int64_t> out;
  out.reserve(alpha.len() + beta.len() - 1);
  const auto& a = alpha.entries();
  const auto& b = beta.entries();
  out.insert(out.end(), b.begin(), b.end() - 1);
  out.push_back(b.back() + a.front());
  out.insert(out.end(), a.begin() + 1, a.end());
  return DimVector(std::move(out));
}

DimVector boxplus(const DimVector& alpha, const DimVector& beta) {
  if (alpha.len() != beta.len()) {
    throw std::invalid_argument("boxplus: length mismatch " +
                                alpha.to_string() + " vs " + beta.to_string());
  }
  if (alpha.input_width() != beta.input_width() ||
      alpha.output_width() != beta.output_width()) {
    throw std::invalid_argument("boxplus: endpoint mismatch " +
                                alpha.to_string() + " vs " + beta.to_string());
  }
  std::vector<std::int64_t> out(alpha.entries());
  for (std::size_t i = 1; i + 1 < out.size(); ++i) {
    out[i] += beta[i];
  }
  return DimVector(std::move(out));
}

DimVector neutral(std::int64_t n) {
  if (n < 3) {
    throw std::invalid_argument("neutral: length must be >= 3, got " +
                                std::to_string(n));
  }
  std::vector<std::int64_t> out(static_cast<std::size_t>(n), 2);
  out.front() = 1;
  out.back() = 1;
  return DimVector(std::move(out));
}

}  // namespace mlpnet
