#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

namespace cpdist {

template <class F, class Map>
Maximum1D grid_golden_maximize(F&& f, double lo, double hi, int grid_points, double tol, Map&& to_param) {
  grid_points = std::max(grid_points, 3);
  std::vector<double> xs(grid_points);
  std::vector<double> ys(grid_points);
  const double step = (hi - lo) / (grid_points - 1);
  std::size_t best = 0;
  for (int k = 0; k < grid_points; ++k) {
    xs[k] = (k == grid_points - 1) ? hi : lo + step * k;
    ys[k] = f(xs[k]);
    // strict comparison keeps the first (smallest) maximizer on ties
    if (ys[k] > ys[best]) best = k;
  }

  double a = xs[best == 0 ? 0 : best - 1];
  double b = xs[std::min<std::size_t>(best + 1, grid_points - 1)];
  double best_x = xs[best];
  double best_y = ys[best];

  constexpr double kInvPhi = 0.6180339887498949;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c);
  double fd = f(d);
  for (int iter = 0; iter < 200; ++iter) {
    if (std::abs(to_param(b) - to_param(a)) < tol) break;
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
  }
  const double mid = 0.5 * (a + b);
  const double fmid = f(mid);
  if (fmid > best_y) {
    best_x = mid;
    best_y = fmid;
  }
  if (fc > best_y) {
    best_x = c;
    best_y = fc;
  }
  if (fd > best_y) {
    best_x = d;
    best_y = fd;
  }

  Maximum1D out;
  out.argmax = best_x;
  out.value = best_y;
  const double span = std::abs(to_param(xs[1]) - to_param(xs[0]));
  out.at_lower = std::abs(to_param(best_x) - to_param(lo)) < std::min(tol * 10.0, span);
  out.at_upper = std::abs(to_param(best_x) - to_param(hi)) < std::min(tol * 10.0, span);
  return out;
}

}  // namespace cpdist
