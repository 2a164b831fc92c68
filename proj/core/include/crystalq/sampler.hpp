#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "crystalq/plane_partition.hpp"

namespace crystalq {

// Metropolis chain over plane partitions with stationary law Q^{|pi|}/Z.
struct ChainConfig {
  double fugacity = 0.5;  // Q in (0,1)
  long burnin = 1000;
  long steps = 10000;
  std::uint64_t seed = 0;
  long max_extent = 64;   // hard cap on heightfield support
  long max_volume = -1;   // restrict the chain to |pi| <= max_volume (-1: off)
};

struct ChainResult {
  double mean_volume = 0.0;
  double variance = 0.0;
  double std_error = 0.0;  // autocorrelation-adjusted (batch means)
  long accepted = 0;
  long steps = 0;
  PlanePartition final_state;
  std::vector<long> volume_counts;  // visit counts per volume (post-burnin)
};

// Single-box add/remove moves; proposal is uniform over the addable and
// removable boxes of the current state, acceptance min(1, Q^{dV} n_cur /
// n_prop). Reproducible: same config, same seed => identical result. Throws
// std::domain_error("extent cap reached") if the chain outgrows max_extent.
ChainResult run_chain(const ChainConfig& c);

// Heightfield rescaled by r = -ln Q in every direction: rows of (i r, j r,
// h(i,j) r) over the support of pi. Empty pi => empty grid.
std::vector<std::array<double, 3>> export_rescaled_shape(
    const PlanePartition& pi, double Q);

void write_shape_csv(const std::string& path,
                     const std::vector<std::array<double, 3>>& grid);
// Heatmap of the rescaled heightfield, one rect per cell.
void write_shape_svg(const std::string& path,
                     const std::vector<std::array<double, 3>>& grid);

}  // namespace crystalq
