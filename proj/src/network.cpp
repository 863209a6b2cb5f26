#include "mlpnet/network.hpp"

#include <nlohmann/json.hpp>
#include <stdexcept>

namespace mlpnet {

using nlohmann::json;

Network::Network(std::vector<Layer> layers) : layers_(std::move(layers)) {
  if (layers_.size() < 2) {
    throw std::invalid_argument("Network needs at least 2 layers");
  }
  for (std::size_t i = 0; i < layers_.size(); ++i) {
    const Layer& l = layers_[i];
    if (l.w.rows() < 1 || l.w.cols() < 1) {
      throw std::invalid_argument("Network: empty weight matrix at layer " +
                                  std::to_string(i));
    }
    if (l.b.size() != l.w.rows()) {
      throw std::invalid_argument("Network: bias length mismatch at layer " +
                                  std::to_string(i));
    }
    if (i > 0 && l.w.cols() != layers_[i - 1].w.rows()) {
      throw std::invalid_argument("Network: layer shapes do not chain at layer " +
                                  std::to_string(i));
    }
  }
}

Eigen::VectorXd realize(const Network& net, const Eigen::VectorXd& x) {
  if (x.size() != net.input_width()) {
    throw std::invalid_argument("realize: input has length " +
                                std::to_string(x.size()) + ", expected " +
                                std::to_string(net.input_width()));
  }
  Eigen::VectorXd h = x;
  const auto& layers = net.layers();
  for (std::size_t i = 0; i + 1 < layers.size(); ++i) {
    h = (layers[i].w * h + layers[i].b).cwiseMax(0.0);
  }
  return layers.back().w * h + layers.back().b;
}

double realize_scalar(const Network& net, double x) {
  Eigen::VectorXd v(1);
  v[0] = x;
  return realize(net, v)[0];
}

DimVector dims(const Network& net) {
  std::vector<std::int64_t> out;
  out.reserve(net.num_layers() + 1);
  out.push_back(net.input_width());
  for (const Layer& l : net.layers()) {
    out.push_back(l.w.rows());
  }
  return DimVector(std::move(out));
}

std::int64_t param_count(const Network& net) {
  std::int64_t total = 0;
  for (const Layer& l : net.layers()) {
    total += l.w.rows() * (l.w.cols() + 1);
  }
  return total;
}

Network identity_net(int hidden_layers) {
  if (hidden_layers < 1) {
    throw std::invalid_argument("identity_net: need at least 1 hidden layer");
  }
  std::vector<Layer> layers;
  layers.reserve(static_cast<std::size_t>(hidden_layers) + 1);
  Eigen::MatrixXd w1(2, 1);
  w1 << 1.0, -1.0;
  layers.push_back({w1, Eigen::VectorXd::Zero(2)});
  for (int i = 1; i < hidden_layers; ++i) {
    layers.push_back({Eigen::MatrixXd::Identity(2, 2), Eigen::VectorXd::Zero(2)});
  }
  Eigen::MatrixXd wout(1, 2);
  wout << 1.0, -1.0;
  layers.push_back({wout, Eigen::VectorXd::Zero(1)});
  return Network(std::move(layers));
}

Network zero_net(std::int64_t d_in, std::int64_t d_out, int num_layers) {
  if (num_layers < 2) {
    throw std::invalid_argument("zero_net: need at least 2 layers");
  }
  if (d_in < 1 || d_out < 1) {
    throw std::invalid_argument("zero_net: widths must be positive");
  }
  std::vector<Layer> layers;
  layers.reserve(static_cast<std::size_t>(num_layers));
  layers.push_back({Eigen::MatrixXd::Zero(1, d_in), Eigen::VectorXd::Zero(1)});
  for (int i = 1; i + 1 < num_layers; ++i) {
    layers.push_back({Eigen::MatrixXd::Zero(1, 1), Eigen::VectorXd::Zero(1)});
  }
  layers.push_back({Eigen::MatrixXd::Zero(d_out, 1), Eigen::VectorXd::Zero(d_out)});
  return Network(std::move(layers));
}

Network affine_wrap(const Network& net, double lambda, const Eigen::VectorXd& b,
                    const Eigen::VectorXd& a) {
  if (b.size() != net.input_width()) {
    throw std::invalid_argument("affine_wrap: b has length " +
                                std::to_string(b.size()) + ", expected " +
                                std::to_string(net.input_width()));
  }
  if (a.size() != net.output_width()) {
    throw std::invalid_argument("affine_wrap: a has length " +
                                std::to_string(a.size()) + ", expected " +
                                std::to_string(net.output_width()));
  }
  std::vector<Layer> layers = net.layers();
  layers.front().b = layers.front().b + layers.front().w * b;
  layers.back().w = lambda * layers.back().w;
  layers.back().b = lambda * net.layers().back().b + lambda * a;
  return Network(std::move(layers));
}

Network compose(const Network& net_f, const Network& net_g) {
  const std::int64_t mid = net_g.output_width();
  if (net_f.input_width() != mid) {
    throw std::invalid_argument(
        "compose: width mismatch, f takes " +
        std::to_string(net_f.input_width()) + " but g produces " +
        std::to_string(mid));
  }
  std::vector<Layer> layers;
  layers.reserve(net_f.num_layers() + net_g.num_layers());
  const auto& gl = net_g.layers();
  for (std::size_t i = 0; i + 1 < gl.size(); ++i) {
    layers.push_back(gl[i]);
  }
  // Stack g's output layer as (w,-w) so the seam carries (y+, y-).
  {
    const Layer& out = gl.back();
    Eigen::MatrixXd w(2 * mid, out.w.cols());
    w << out.w, -out.w;
    Eigen::VectorXd b(2 * mid);
    b << out.b, -out.b;
    layers.push_back({std::move(w), std::move(b)});
  }
  // Fold f's first layer with [I|-I] to recombine y = y+ - y-.
  {
    const Layer& first = net_f.layers().front();
    Eigen::MatrixXd w(first.w.rows(), 2 * mid);
    w << first.w, -first.w;
    layers.push_back({std::move(w), first.b});
  }
  const auto& fl = net_f.layers();
  for (std::size_t i = 1; i < fl.size(); ++i) {
    layers.push_back(fl[i]);
  }
  return Network(std::move(layers));
}

Network parallel_sum(const std::vector<std::pair<double, Network>>& terms) {
  if (terms.empty()) {
    throw std::invalid_argument("parallel_sum: empty term list");
  }
  const Network& first = terms.front().second;
  const std::size_t depth = first.num_layers();
  const std::int64_t p = first.input_width();
  const std::int64_t q = first.output_width();
  for (const auto& [h, net] : terms) {
    (void)h;
    if (net.num_layers() != depth || net.input_width() != p ||
        net.output_width() != q) {
      throw std::invalid_argument(
          "parallel_sum: members must share depth, input width and output "
          "width (got " + dims(net).to_string() + " vs " +
          dims(first).to_string() + ")");
    }
  }
  std::vector<Layer> layers;
  layers.reserve(depth);
  // First layer: stack member weights vertically over the shared input.
  {
    std::int64_t rows = 0;
    for (const auto& [h, net] : terms) rows += net.layers().front().w.rows();
    Eigen::MatrixXd w(rows, p);
    Eigen::VectorXd b(rows);
    std::int64_t at = 0;
    for (const auto& [h, net] : terms) {
      const Layer& l = net.layers().front();
      w.middleRows(at, l.w.rows()) = l.w;
      b.segment(at, l.b.size()) = l.b;
      at += l.w.rows();
    }
    layers.push_back({std::move(w), std::move(b)});
  }
  // Interior layers: block-diagonal.
  for (std::size_t n = 1; n + 1 < depth; ++n) {
    std::int64_t rows = 0, cols = 0;
    for (const auto& [h, net] : terms) {
      rows += net.layers()[n].w.rows();
      cols += net.layers()[n].w.cols();
    }
    Eigen::MatrixXd w = Eigen::MatrixXd::Zero(rows, cols);
    Eigen::VectorXd b(rows);
    std::int64_t r = 0, c = 0;
    for (const auto& [h, net] : terms) {
      const Layer& l = net.layers()[n];
      w.block(r, c, l.w.rows(), l.w.cols()) = l.w;
      b.segment(r, l.b.size()) = l.b;
      r += l.w.rows();
      c += l.w.cols();
    }
    layers.push_back({std::move(w), std::move(b)});
  }
  // Last layer: concatenate h_i-scaled blocks, sum h_i-scaled biases.
  {
    std::int64_t cols = 0;
    for (const auto& [h, net] : terms) cols += net.layers().back().w.cols();
    Eigen::MatrixXd w(q, cols);
    Eigen::VectorXd b = Eigen::VectorXd::Zero(q);
    std::int64_t at = 0;
    for (const auto& [h, net] : terms) {
      const Layer& l = net.layers().back();
      w.middleCols(at, l.w.cols()) = h * l.w;
      b += h * l.b;
      at += l.w.cols();
    }
    layers.push_back({std::move(w), std::move(b)});
  }
  return Network(std::move(layers));
}

Network extend_depth(const Network& net, std::size_t target_len) {
  if (net.output_width() != 1) {
    throw std::invalid_argument("extend_depth: network must have scalar output");
  }
  const std::size_t len = net.num_layers() + 1;
  if (target_len < len) {
    throw std::invalid_argument("extend_depth: target length " +
                                std::to_string(target_len) +
                                " below current " + std::to_string(len));
  }
  if (target_len == len) {
    return net;
  }
  if (target_len == len + 1) {
    throw std::invalid_argument(
        "extend_depth: a single extra layer is not expressible as a neutral "
        "composition; pad by 0 or by >= 2");
  }
  const int hidden = static_cast<int>(target_len - len - 1);
  return compose(identity_net(hidden), net);
}

std::string to_json(const Network& net) {
  json j;
  j["dims"] = dims(net).entries();
  json layers = json::array();
  for (const Layer& l : net.layers()) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < l.w.rows(); ++r) {
      json row = json::array();
      for (Eigen::Index c = 0; c < l.w.cols(); ++c) {
        row.push_back(l.w(r, c));
      }
      rows.push_back(std::move(row));
    }
    json b = json::array();
    for (Eigen::Index i = 0; i < l.b.size(); ++i) {
      b.push_back(l.b[i]);
    }
    layers.push_back(json{{"w", std::move(rows)}, {"b", std::move(b)}});
  }
  j["layers"] = std::move(layers);
  return j.dump();
}

Network network_from_json(const std::string& text) {
  json j = json::parse(text);
  if (!j.contains("layers") || !j["layers"].is_array()) {
    throw std::invalid_argument("network json: missing layers array");
  }
  std::vector<Layer> layers;
  for (const json& jl : j["layers"]) {
    const json& rows = jl.at("w");
    const json& b = jl.at("b");
    if (rows.empty() || rows.front().empty()) {
      throw std::invalid_argument("network json: empty weight matrix");
    }
    Eigen::MatrixXd w(rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != static_cast<std::size_t>(w.cols())) {
        throw std::invalid_argument("network json: ragged weight matrix");
      }
      for (std::size_t c = 0; c < rows[r].size(); ++c) {
        w(r, c) = rows[r][c].get<double>();
      }
    }
    Eigen::VectorXd bv(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) {
      bv[i] = b[i].get<double>();
    }
    layers.push_back({std::move(w), std::move(bv)});
  }
  Network net(std::move(layers));
  if (j.contains("dims")) {
    const auto stored = j["dims"].get<std::vector<std::int64_t>>();
    if (DimVector(stored) != dims(net)) {
      throw std::invalid_argument("network json: dims do not match layers");
    }
  }
  return net;
}

}  // namespace mlpnet
