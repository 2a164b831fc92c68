#pragma once

namespace crystalq {

// Ronkin function of z + w = 1:
//   (2 pi)^{-2} integral ln|e^{x+i theta} + e^{y+i phi} - 1| d theta d phi,
// tensor-product quadrature on a grid_n x grid_n grid of angles with a
// half-cell midpoint offset so the integrable logarithmic singularity on the
// unit torus is never hit on a node. Requires grid_n >= 64.
double ronkin(double x, double y, long grid_n);

}  // namespace crystalq
