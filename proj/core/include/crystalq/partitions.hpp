#pragma once

#include <vector>

#include "crystalq/rational.hpp"

namespace crystalq {

// Ordinary partition: weakly decreasing positive parts. Zero parts are never
// stored; all formulas below are padding-invariant.
struct Partition2D {
  std::vector<long> parts;

  Partition2D() = default;
  explicit Partition2D(std::vector<long> p);

  long size() const;  // |lambda|
  bool empty() const { return parts.empty(); }
  long num_parts() const { return static_cast<long>(parts.size()); }
  long part(long i) const {  // 0-based, 0 beyond the last part
    return i < num_parts() ? parts[i] : 0;
  }
  Partition2D conjugate() const;
  // Diagram membership: row r, column c (0-based).
  bool contains(long r, long c) const { return c < part(r); }

  bool operator==(const Partition2D&) const = default;
};

// All partitions of d, each exactly once, in lexicographic descending order
// ((d), (d-1,1), ..., (1,...,1)).
std::vector<Partition2D> enumerate_partitions(long d);

// Number of standard Young tableaux of shape lambda (hook-length formula).
BigInt dimension(const Partition2D& lambda);

// (dim lambda / d!)^2 with d = |lambda|.
Rat plancherel_weight(const Partition2D& lambda);

// Regularized power sum
//   p_k(lambda) = sum_i [(lambda_i - i + 1/2)^k - (-i + 1/2)^k]
//                 + (1 - 2^{-k}) zeta(-k),
// finite sum over the nonzero parts.
Rat p_k(const Partition2D& lambda, long k);

}  // namespace crystalq
