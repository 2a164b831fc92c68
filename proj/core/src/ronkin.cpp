#include "crystalq/ronkin.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace crystalq {

double ronkin(double x, double y, long grid_n) {
  if (grid_n < 64) throw std::invalid_argument("ronkin: grid_n must be >= 64");
  const double step = 2.0 * std::numbers::pi / grid_n;
  std::vector<double> c(grid_n), s(grid_n);
  for (long k = 0; k < grid_n; ++k) {
    double a = (k + 0.5) * step;  // midpoint offset avoids the singularity
    c[k] = std::cos(a);
    s[k] = std::sin(a);
  }
  const double ex = std::exp(x), ey = std::exp(y);
  double sum = 0.0;
  for (long i = 0; i < grid_n; ++i) {
    double re0 = ex * c[i] - 1.0, im0 = ex * s[i];
    for (long j = 0; j < grid_n; ++j) {
      double re = re0 + ey * c[j];
      double im = im0 + ey * s[j];
      sum += 0.5 * std::log(re * re + im * im);
    }
  }
  return sum / (static_cast<double>(grid_n) * grid_n);
}

}  // namespace crystalq
