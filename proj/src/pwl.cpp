#include "mlpnet/pwl.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mlpnet {

Grid::Grid(double a_, double b_, std::int64_t n_cells_)
    : a(a_), b(b_), n_cells(n_cells_) {
  if (!(b > a)) {
    throw std::invalid_argument("Grid: need b > a");
  }
  if (n_cells < 1) {
    throw std::invalid_argument("Grid: need at least one cell");
  }
  points.resize(static_cast<std::size_t>(n_cells) + 1);
  for (std::int64_t n = 0; n <= n_cells; ++n) {
    points[static_cast<std::size_t>(n)] =
        a + (b - a) * static_cast<double>(n) / static_cast<double>(n_cells);
  }
  points.front() = a;
  points.back() = b;
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (!(points[i] > points[i - 1])) {
      throw std::invalid_argument("Grid: knots not strictly increasing");
    }
  }
}

double PwlFunction::operator()(double x) const {
  if (x <= knots.front()) return values.front();
  if (x > knots.back()) return values.back();
  // Cells are half-open (xi_n, xi_{n+1}]; knot values agree either way.
  const auto it = std::lower_bound(knots.begin(), knots.end(), x);
  std::size_t cell = static_cast<std::size_t>(it - knots.begin());
  if (cell > 0) --cell;
  if (cell >= slopes.size()) cell = slopes.size() - 1;
  return values[cell] + slopes[cell] * (x - knots[cell]);
}

PwlFunction interp_values(const LipschitzFn& f, const Grid& grid) {
  PwlFunction g;
  g.knots = grid.points;
  g.values.reserve(g.knots.size());
  for (double xi : g.knots) {
    g.values.push_back(f.eval(xi));
  }
  g.slopes.resize(g.knots.size() - 1);
  for (std::size_t n = 0; n + 1 < g.knots.size(); ++n) {
    g.slopes[n] = (g.values[n + 1] - g.values[n]) / (g.knots[n + 1] - g.knots[n]);
  }
  return g;
}

Network interp_net(const LipschitzFn& f, const Grid& grid) {
  const PwlFunction g = interp_values(f, grid);
  const std::int64_t n = grid.n_cells;
  Eigen::MatrixXd w1 = Eigen::MatrixXd::Ones(n + 1, 1);
  Eigen::VectorXd b1(n + 1);
  for (std::int64_t k = 0; k <= n; ++k) {
    b1[k] = -g.knots[static_cast<std::size_t>(k)];
  }
  // c_k = a_k - a_{k-1} with a_{-1} = a_N = 0.
  Eigen::MatrixXd w2(1, n + 1);
  for (std::int64_t k = 0; k <= n; ++k) {
    const double right = (k < n) ? g.slopes[static_cast<std::size_t>(k)] : 0.0;
    const double left = (k > 0) ? g.slopes[static_cast<std::size_t>(k - 1)] : 0.0;
    w2(0, k) = right - left;
  }
  Eigen::VectorXd b2(1);
  b2[0] = g.values.front();
  std::vector<Layer> layers;
  layers.push_back({std::move(w1), std::move(b1)});
  layers.push_back({std::move(w2), std::move(b2)});
  return Network(std::move(layers));
}

double clipped_width_bound(double lipschitz, double f0_abs, double q, double eps) {
  const double base = lipschitz * (4.0 * lipschitz + 2.0 * f0_abs);
  const double factor = std::max(1.0, std::pow(std::abs(base), 1.0 / (q - 1.0)));
  return 16.0 * factor * std::pow(eps, -q / (q - 1.0)) + 1.0;
}

Network clipped_approx(const LipschitzFn& f, double q, double eps,
                       ClippedApproxInfo* info) {
  if (!(q > 1.0)) {
    throw std::invalid_argument("clipped_approx: need q > 1");
  }
  if (!(eps > 0.0 && eps < 1.0)) {
    throw std::invalid_argument("clipped_approx: need eps in (0,1)");
  }
  if (f.lipschitz < 0.0) {
    throw std::invalid_argument("clipped_approx: negative Lipschitz constant");
  }
  const double scale = 4.0 * f.lipschitz + 2.0 * f.f0_abs;
  // Degenerate f == const == 0 leaves the radius equation unsolvable; a unit
  // grid satisfies every conclusion for the zero function.
  double radius = 1.0;
  if (scale > 0.0) {
    radius = std::pow(scale / eps, 1.0 / (q - 1.0));
  }
  std::int64_t n = 2;
  const double lr4 = 4.0 * f.lipschitz * radius;
  if (lr4 > 2.0 * eps) {
    n = static_cast<std::int64_t>(std::ceil(lr4 / eps));
    while (n > 2 && lr4 / static_cast<double>(n - 1) <= eps) --n;
    while (lr4 / static_cast<double>(n) > eps) ++n;
  }
  const Grid grid(-radius, radius, n);
  if (info) {
    info->radius = radius;
    info->n_cells = n;
    info->width = n + 1;
    info->width_bound = clipped_width_bound(f.lipschitz, f.f0_abs, q, eps);
  }
  return interp_net(f, grid);
}

}  // namespace mlpnet
