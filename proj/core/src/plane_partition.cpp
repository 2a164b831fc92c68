#include "crystalq/plane_partition.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>

namespace crystalq {

namespace {

void check_monotone(const std::vector<std::vector<long>>& h, bool allow_inf) {
  for (size_t i = 0; i < h.size(); ++i) {
    for (size_t j = 0; j < h[i].size(); ++j) {
      long v = h[i][j];
      if (v < 0 && !(allow_inf && v == PlanePartition::kInfiniteHeight))
        throw std::invalid_argument("PlanePartition: negative height");
    }
  }
  auto at = [&](size_t i, size_t j) -> long {
    if (i >= h.size() || j >= h[i].size()) return 0;
    long v = h[i][j];
    return v == PlanePartition::kInfiniteHeight
               ? std::numeric_limits<long>::max()
               : v;
  };
  for (size_t i = 0; i < h.size(); ++i)
    for (size_t j = 0; j < h[i].size(); ++j) {
      if (at(i, j) < at(i + 1, j) || at(i, j) < at(i, j + 1))
        throw std::invalid_argument("PlanePartition: heights not weakly decreasing");
    }
}

}  // namespace

PlanePartition::PlanePartition(std::vector<std::vector<long>> h)
    : heights(std::move(h)) {
  check_monotone(heights, false);
}

PlanePartition PlanePartition::with_legs(Partition2D lambda, Partition2D mu,
                                         Partition2D nu,
                                         std::vector<std::vector<long>> h) {
  PlanePartition p;
  p.heights = std::move(h);
  p.legs = std::array<Partition2D, 3>{std::move(lambda), std::move(mu),
                                      std::move(nu)};
  check_monotone(p.heights, true);
  return p;
}

long PlanePartition::size() const {
  if (has_legs())
    throw std::domain_error("size: legged configuration has infinite volume");
  long s = 0;
  for (const auto& row : heights)
    for (long v : row) s += v;
  return s;
}

long PlanePartition::leg_profile_height(long i, long j) const {
  if (!has_legs()) return 0;
  const auto& [lambda, mu, nu] = *legs;
  if (nu.contains(i, j)) return kInfiniteHeight;
  // axis-1 leg fills k < lambda_j in every column; axis-2 leg fills
  // k < conj(mu)_i (the number of mu-rows longer than i).
  long h1 = lambda.part(j);
  long h2 = 0;
  for (long k = 0; k < mu.num_parts(); ++k)
    if (mu.part(k) > i) ++h2;
  return std::max(h1, h2);
}

long PlanePartition::column_height(long i, long j) const {
  long stored = (i < rows() && j < cols(i)) ? heights[i][j] : 0;
  if (!has_legs()) return stored;
  long prof = leg_profile_height(i, j);
  if (stored == kInfiniteHeight || prof == kInfiniteHeight)
    return kInfiniteHeight;
  return std::max(stored, prof);
}

bool PlanePartition::contains(long i, long j, long k) const {
  if (i < 0 || j < 0 || k < 0) return false;
  long h = column_height(i, j);
  return h == kInfiniteHeight || k < h;
}

std::vector<std::array<long, 3>> PlanePartition::boxes() const {
  if (has_legs())
    throw std::domain_error("boxes: legged configuration is infinite");
  std::vector<std::array<long, 3>> out;
  for (long i = 0; i < rows(); ++i)
    for (long j = 0; j < cols(i); ++j)
      for (long k = 0; k < heights[i][j]; ++k) out.push_back({i, j, k});
  return out;
}

std::vector<PlanePartition> enumerate_plane_partitions(long n) {
  if (n < 0)
    throw std::invalid_argument("enumerate_plane_partitions: n must be >= 0");
  std::vector<PlanePartition> out;
  std::vector<std::vector<long>> acc;
  // Builds rows top to bottom; each row pointwise dominated by the previous.
  // The previous row is addressed by index into acc: push_back may reallocate,
  // so a pointer or reference into acc would dangle across recursive calls.
  auto rec = [&](auto&& self, long prev_idx, long rem) -> void {
    if (rem == 0) {
      PlanePartition p;
      p.heights = acc;
      out.push_back(std::move(p));
      return;
    }
    std::vector<long> row;
    auto gen = [&](auto&& gself, long pos, long sum) -> void {
      if (!row.empty() && sum <= rem) {
        acc.push_back(row);
        self(self, static_cast<long>(acc.size()) - 1, rem - sum);
        acc.pop_back();
      }
      long cap;
      if (prev_idx < 0) {
        cap = rem - sum;
      } else {
        const std::vector<long>& prev = acc[prev_idx];
        cap = pos < static_cast<long>(prev.size()) ? prev[pos] : 0;
      }
      long last = row.empty() ? rem : row.back();
      for (long v = std::min({cap, last, rem - sum}); v >= 1; --v) {
        row.push_back(v);
        gself(gself, pos + 1, sum + v);
        row.pop_back();
      }
    };
    gen(gen, 0, 0);
  };
  rec(rec, -1, n);
  return out;
}

namespace {

long boxed_count(const PlanePartition& pi, long N) {
  long total = 0;
  for (long i = 0; i < N; ++i)
    for (long j = 0; j < N; ++j) {
      long h = pi.column_height(i, j);
      total += (h == PlanePartition::kInfiniteHeight) ? N : std::min(h, N);
    }
  return total;
}

long leg_degree(const PlanePartition& pi) {
  if (!pi.has_legs()) return 0;
  const auto& [lambda, mu, nu] = *pi.legs;
  return lambda.size() + mu.size() + nu.size();
}

}  // namespace

long renormalized_volume(const PlanePartition& pi, long N) {
  if (N < 1) throw std::invalid_argument("renormalized_volume: N must be >= 1");
  long d = leg_degree(pi);
  long vN = boxed_count(pi, N) - N * d;
  long vN1 = boxed_count(pi, N + 1) - (N + 1) * d;
  if (vN != vN1) throw std::domain_error("not stabilized");
  return vN;
}

namespace {

using Box = std::array<long, 3>;

struct LegProfiles {
  Partition2D lambda, mu, nu;
  // Column height of the cylinder union at (i,j); -1 means infinite.
  long profile(long i, long j) const {
    if (nu.contains(i, j)) return -1;
    long h1 = lambda.part(j);
    long h2 = 0;
    for (long k = 0; k < mu.num_parts(); ++k)
      if (mu.part(k) > i) ++h2;
    return std::max(h1, h2);
  }
  bool contains(long i, long j, long k) const {
    if (i < 0 || j < 0 || k < 0) return false;
    long p = profile(i, j);
    return p == -1 || k < p;
  }
  long extent() const {
    long e = 1;
    for (const auto* l : {&lambda, &mu, &nu}) {
      e = std::max(e, l->num_parts());
      if (!l->empty()) e = std::max(e, l->parts[0]);
    }
    return e;
  }
};

}  // namespace

QSeries legged_counting_series(const Partition2D& lambda, const Partition2D& mu,
                               const Partition2D& nu, long trunc) {
  LegProfiles legs{lambda, mu, nu};
  long d = lambda.size() + mu.size() + nu.size();

  // Renormalized volume of the minimal configuration (pure cylinder union),
  // with an explicit two-point stabilization check.
  long N0 = legs.extent() + 2;
  auto min_count = [&](long N) {
    long total = 0;
    for (long i = 0; i < N; ++i)
      for (long j = 0; j < N; ++j) {
        long p = legs.profile(i, j);
        total += (p == -1) ? N : std::min(p, N);
      }
    return total;
  };
  long min_vol = min_count(N0) - N0 * d;
  if (min_vol != min_count(N0 + 1) - (N0 + 1) * d)
    throw std::domain_error("not stabilized");
  if (trunc < min_vol)
    throw std::invalid_argument(
        "legged_counting_series: trunc below minimal renormalized volume");

  long budget = trunc - min_vol;
  // Any added box sits on a support chain of added boxes reaching the
  // cylinder union, so its coordinates are bounded by extent + budget.
  long cap = legs.extent() + budget + 1;

  std::vector<Rat> counts(budget + 1, Rat(0));
  counts[0] = 1;  // the minimal configuration

  using Config = std::vector<Box>;  // sorted set of added boxes
  std::set<Config> level = {{}};
  for (long m = 1; m <= budget; ++m) {
    std::set<Config> next;
    for (const auto& cfg : level) {
      auto in_cfg = [&](long i, long j, long k) {
        if (legs.contains(i, j, k)) return true;
        return std::binary_search(cfg.begin(), cfg.end(), Box{i, j, k});
      };
      for (long i = 0; i < cap; ++i)
        for (long j = 0; j < cap; ++j)
          for (long k = 0; k < cap; ++k) {
            if (in_cfg(i, j, k)) continue;
            if (i > 0 && !in_cfg(i - 1, j, k)) continue;
            if (j > 0 && !in_cfg(i, j - 1, k)) continue;
            if (k > 0 && !in_cfg(i, j, k - 1)) continue;
            Config c = cfg;
            c.insert(std::upper_bound(c.begin(), c.end(), Box{i, j, k}),
                     Box{i, j, k});
            next.insert(std::move(c));
          }
    }
    counts[m] = Rat(static_cast<long>(next.size()));
    level = std::move(next);
  }
  return QSeries(min_vol, trunc, std::move(counts));
}

}  // namespace crystalq
