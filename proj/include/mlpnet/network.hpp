#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mlpnet/dims.hpp"

namespace mlpnet {

/// One affine layer: y = w * x + b with w of shape rows x cols.
struct Layer {
  Eigen::MatrixXd w;
  Eigen::VectorXd b;
};

/// An explicit feedforward ReLU network: an ordered list of affine layers.
/// ReLU is applied after every layer except the last. Networks have at
/// least two layers (one hidden layer) and are immutable after
/// construction; every operation below returns a fresh network.
class Network {
 public:
  explicit Network(std::vector<Layer> layers);

  const std::vector<Layer>& layers() const { return layers_; }
  std::size_t num_layers() const { return layers_.size(); }
  std::int64_t input_width() const { return layers_.front().w.cols(); }
  std::int64_t output_width() const { return layers_.back().w.rows(); }

 private:
  std::vector<Layer> layers_;
};

/// Forward pass: affine layers with componentwise max{.,0} after every
/// layer except the last.
Eigen::VectorXd realize(const Network& net, const Eigen::VectorXd& x);

/// Scalar convenience wrappers for 1->1 networks.
double realize_scalar(const Network& net, double x);

/// Layer widths (k_0, ..., k_{H+1}) including input and output.
DimVector dims(const Network& net);

/// Number of weights plus biases: sum over layers of k_n * (k_{n-1} + 1).
std::int64_t param_count(const Network& net);

/// Scalar identity network with H >= 1 hidden layers: dims (1,2,...,2,1),
/// realizing x = max{x,0} - max{-x,0} exactly.
Network identity_net(int hidden_layers);

/// All-zero network with the given layer count; dims (d_in, 1, ..., 1, d_out).
Network zero_net(std::int64_t d_in, std::int64_t d_out, int num_layers);

/// Wraps an affine transformation around a network:
/// realize(result, y) = lambda * (realize(net, y + b) + a). Dims unchanged.
Network affine_wrap(const Network& net, double lambda, const Eigen::VectorXd& b,
                    const Eigen::VectorXd& a);

/// Network composition: realize(result, x) = realize(net_f, realize(net_g, x)),
/// dims(result) = odot(dims(net_f), dims(net_g)). The glue stacks g's output
/// layer as (w,-w) and folds f's first layer with [I|-I], so the dim identity
/// holds literally.
Network compose(const Network& net_f, const Network& net_g);

/// Weighted parallel sum: realize(result, x) = sum_i h_i * realize(net_i, x).
/// All nets must share depth, input width and output width; dims(result) is
/// the boxplus-fold of the member dims. First layer stacks weights
/// vertically, interior layers are block-diagonal, the last layer
/// concatenates h_i-scaled blocks.
Network parallel_sum(const std::vector<std::pair<double, Network>>& terms);

/// Pads a scalar-output network with identity layers until dims(net) has
/// target_len entries: result dims = neutral(k) odot dims(net). target_len
/// must equal the current length (no-op) or exceed it by at least 2.
Network extend_depth(const Network& net, std::size_t target_len);

/// JSON serialization: {"dims": [...], "layers": [{"w": [[row-major]],
/// "b": [...]}, ...]}. Weights survive a round-trip bit-exactly.
std::string to_json(const Network& net);
Network network_from_json(const std::string& text);

}  // namespace mlpnet
