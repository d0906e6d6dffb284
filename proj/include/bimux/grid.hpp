#pragma once

#include <stdexcept>
#include <vector>

// Uniform symmetric frequency grid for the 2-D joint-amplitude sampling,
// Gamma3 units. Defaults follow the golden-run convention: +-400 window,
// 1024 points per axis (512 for sweeps).

namespace bimux {

struct FrequencyGrid {
  double half_width = 400.0;
  int n_points = 1024;

  void validate() const {
    if (!(half_width > 0.0))
      throw std::invalid_argument("grid.half_width must be > 0");
    if (n_points < 64)
      throw std::invalid_argument("grid.n_points must be >= 64");
  }

  double spacing() const { return 2.0 * half_width / (n_points - 1); }

  std::vector<double> points() const {
    std::vector<double> x(n_points);
    const double d = spacing();
    for (int j = 0; j < n_points; ++j) x[j] = -half_width + j * d;
    return x;
  }
};

}  // namespace bimux
