#pragma once

#include <utility>
#include <vector>

#include "crystalq/qseries.hpp"
#include "crystalq/rational.hpp"

namespace crystalq {

// Plancherel descendent sum for P^1:
//   sum_{|lambda|=d} (dim lambda / d!)^2 prod_i p_{k_i+1}(lambda)/(k_i+1)!
// Empty insertion list gives the plain Plancherel mass (1 for every d).
struct DescendentQuery {
  long degree = 0;
  std::vector<long> insertions;
};
Rat descendent_p1(const DescendentQuery& q);

// Degree-0 series M(-q)^m through q^trunc, exact rational exponent.
QSeries degree0_dt_series(const Rat& m, long trunc);

// Exact coefficient of u^{2g-2} in the asymptotic expansion of ln M(e^{-u})
// for g >= 2: zeta(3-2g) zeta(1-2g) / (2g-2)!.
Rat mcmahon_expansion_coefficient(long g);

// Residual report for the asymptotic expansion of ln M(e^{-u}). Row g holds
// the partial sum through the order-g term and the residual against the
// truncated-product value of ln M(e^{-u}).
struct AsymptoticsRow {
  long g;
  double partial_sum;
  double residual;
};
struct AsymptoticsReport {
  double u;
  double log_m;          // ln M(e^{-u}) from the truncated product
  int g1_sign;           // sign of the (1/12) ln u term selected by best fit
  std::vector<AsymptoticsRow> rows;
};
// Requires trunc * u >= 30 (throws std::invalid_argument otherwise).
AsymptoticsReport mcmahon_asymptotics(double u, long g_max, long trunc);

// Scaled truncated Eisenstein value E_3(x) * (-ln x)^3 next to the limit
// constant 2 zeta(3). Requires terms * (-ln x) >= 30.
std::pair<double, double> e3_thermodynamic(double x, long terms);

// High-precision constants used by the asymptotics.
double zeta_prime_minus_one();  // zeta'(-1)
double two_zeta_three();        // 2 zeta(3)

}  // namespace crystalq
