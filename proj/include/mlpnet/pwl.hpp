#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "mlpnet/network.hpp"

namespace mlpnet {

/// Equispaced grid xi_n = a + (b-a)n/N, n = 0..N.
struct Grid {
  Grid(double a, double b, std::int64_t n_cells);

  double a;
  double b;
  std::int64_t n_cells;
  std::vector<double> points;
};

/// A scalar Lipschitz function together with its constant L and |f(0)|.
struct LipschitzFn {
  std::function<double(double)> eval;
  double lipschitz = 0.0;
  double f0_abs = 0.0;
};

/// The clipped piecewise-linear interpolant of f on a grid: equals f at
/// every knot, affine on each cell, constant outside [a, b].
struct PwlFunction {
  std::vector<double> knots;
  std::vector<double> values;  // f at the knots
  std::vector<double> slopes;  // one per cell

  double operator()(double x) const;
};

/// Samples f at the grid knots and returns the clipped interpolant.
PwlFunction interp_values(const LipschitzFn& f, const Grid& grid);

/// The one-hidden-layer network realizing the clipped interpolant exactly:
/// dims (1, N+1, 1), g(x) = f(xi_0) + sum_k c_k * max{x - xi_k, 0} with
/// c_k the slope increments.
Network interp_net(const LipschitzFn& f, const Grid& grid);

/// Sizing parameters chosen by clipped_approx.
struct ClippedApproxInfo {
  double radius = 0.0;      // grid half-width R
  std::int64_t n_cells = 0;
  std::int64_t width = 0;   // hidden width N+1
  double width_bound = 0.0;
};

/// Builds the clipped interpolant of f on [-R, R] sized so that
/// |f(x) - g(x)| <= eps * (1 + |x|^q) for all real x, with g Lipschitz-L
/// and hidden width within the stated bound. Requires q > 1, eps in (0,1).
Network clipped_approx(const LipschitzFn& f, double q, double eps,
                       ClippedApproxInfo* info = nullptr);

/// The hidden-width bound for clipped_approx:
/// 16 * max{1, |L(4L+2|f(0)|)|^{1/(q-1)}} * eps^{-q/(q-1)} + 1.
double clipped_width_bound(double lipschitz, double f0_abs, double q, double eps);

}  // namespace mlpnet
