#pragma once

#include "crystalq/rational.hpp"

namespace crystalq {

// Bernoulli number B_n with the B_1 = -1/2 convention.
Rat bernoulli(long n);

// zeta(-k) for k >= 0, exact: (-1)^k B_{k+1}/(k+1).
// zeta(0) = -1/2, zeta(-1) = -1/12, zeta(-2m) = 0 for m >= 1.
Rat zeta_negative(long k);

}  // namespace crystalq
