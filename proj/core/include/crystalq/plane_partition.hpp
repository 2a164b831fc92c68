#pragma once

#include <array>
#include <optional>
#include <vector>

#include "crystalq/partitions.hpp"
#include "crystalq/qseries.hpp"

namespace crystalq {

// 3D partition as a heightfield h(i,j), weakly decreasing in i and j.
//
// The optional legs (lambda, mu, nu) are the cross-section profiles of
// infinite legs along the three coordinate axes:
//   axis 1 (i): box (i,j,k) present for all i when (j,k) is in lambda,
//   axis 2 (j): box present for all j when (k,i) is in mu,
//   axis 3 (k): box present for all k when (i,j) is in nu.
// With legs, the stored heightfield covers a bounding box; columns inside the
// nu leg carry kInfiniteHeight, and the field agrees with the leg profiles
// outside a bounded region (checked via stabilization of the renormalized
// volume).
struct PlanePartition {
  static constexpr long kInfiniteHeight = -1;

  std::vector<std::vector<long>> heights;
  std::optional<std::array<Partition2D, 3>> legs;

  PlanePartition() = default;
  explicit PlanePartition(std::vector<std::vector<long>> h);
  static PlanePartition with_legs(Partition2D lambda, Partition2D mu,
                                  Partition2D nu,
                                  std::vector<std::vector<long>> h);

  bool has_legs() const { return legs.has_value(); }
  long rows() const { return static_cast<long>(heights.size()); }
  long cols(long i) const {
    return i < rows() ? static_cast<long>(heights[i].size()) : 0;
  }

  // Total number of boxes; finite configurations only.
  long size() const;

  // Column height of the pure leg profile at (i,j) (kInfiniteHeight inside
  // the nu leg). Zero everywhere when there are no legs.
  long leg_profile_height(long i, long j) const;

  // Column height including stored heights and leg profiles.
  long column_height(long i, long j) const;

  bool contains(long i, long j, long k) const;

  // Lattice points of the finite configuration, in row-major column order.
  std::vector<std::array<long, 3>> boxes() const;

  bool operator==(const PlanePartition&) const = default;
};

// All plane partitions with |pi| = n, each exactly once.
//
// Canonical order: a DFS builds the height matrix row by row; each row is a
// partition pointwise dominated by the previous row, a row is closed (and the
// next row opened) before it is extended, and part values are tried in
// decreasing order.
std::vector<PlanePartition> enumerate_plane_partitions(long n);

// #{boxes in [0,N-1]^3} - N (|lambda|+|mu|+|nu|). Requires the value to be
// stable between N and N+1; throws std::domain_error("not stabilized")
// otherwise.
long renormalized_volume(const PlanePartition& pi, long N);

// Counting series sum_pi q^{renormalized volume} over configurations ending
// on the given legs (the Calabi-Yau counting specialization). Laurent series:
// the minimal configuration can have negative renormalized volume.
QSeries legged_counting_series(const Partition2D& lambda,
                               const Partition2D& mu, const Partition2D& nu,
                               long trunc);

}  // namespace crystalq
