#include "crystalq/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <stdexcept>

namespace crystalq {

namespace {

// mt19937_64 has a fixed, portable output sequence. The derived draws below
// are hand-rolled because std::uniform_*_distribution output is
// implementation-defined and would break seed portability across platforms.
struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}

  std::uint64_t uniform_index(std::uint64_t n) {  // [0, n), unbiased rejection
    std::uint64_t lim = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t r;
    do {
      r = gen();
    } while (r >= lim);
    return r % n;
  }
  double uniform01() {  // [0, 1) with 53 random bits
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
  }
};

struct Move {
  long i, j;
  bool add;  // add a box on column (i, j) vs remove the top box
};

// Heightfield with O(rows*cols) move enumeration; states stay small at the
// fugacities of interest so this dominates nothing.
struct State {
  std::vector<std::vector<long>> h;  // ragged, trailing zeros trimmed
  long volume = 0;

  long height(long i, long j) const {
    if (i < 0 || j < 0) return 0;
    if (i >= static_cast<long>(h.size())) return 0;
    if (j >= static_cast<long>(h[i].size())) return 0;
    return h[i][j];
  }

  std::vector<Move> moves() const {
    std::vector<Move> out;
    long rows = static_cast<long>(h.size());
    for (long i = 0; i <= rows; ++i) {
      long cols = i < rows ? static_cast<long>(h[i].size()) : 0;
      for (long j = 0; j <= cols; ++j) {
        long v = height(i, j);
        // Add is legal when the incremented column stays dominated by the
        // (virtually infinite) boundary columns at i-1, j-1.
        long capi = i == 0 ? v + 1 : height(i - 1, j);
        long capj = j == 0 ? v + 1 : height(i, j - 1);
        if (v + 1 <= std::min(capi, capj)) out.push_back({i, j, true});
        // Remove is legal when the decremented column still dominates its
        // successors.
        if (v > 0 && v - 1 >= std::max(height(i + 1, j), height(i, j + 1)))
          out.push_back({i, j, false});
      }
    }
    return out;
  }

  void apply(const Move& m, long max_extent) {
    if (m.add) {
      if (m.i >= max_extent || m.j >= max_extent ||
          height(m.i, m.j) + 1 > max_extent)
        throw std::domain_error("extent cap reached");
      if (m.i >= static_cast<long>(h.size())) h.resize(m.i + 1);
      if (m.j >= static_cast<long>(h[m.i].size())) h[m.i].resize(m.j + 1, 0);
      ++h[m.i][m.j];
      ++volume;
    } else {
      --h[m.i][m.j];
      --volume;
      while (!h[m.i].empty() && h[m.i].back() == 0) h[m.i].pop_back();
      while (!h.empty() && h.back().empty()) h.pop_back();
    }
  }
};

}  // namespace

ChainResult run_chain(const ChainConfig& c) {
  if (!(c.fugacity > 0.0 && c.fugacity < 1.0))
    throw std::invalid_argument("run_chain: fugacity must lie in (0,1)");
  if (c.steps <= 0) throw std::invalid_argument("run_chain: steps must be > 0");
  if (c.burnin < 0) throw std::invalid_argument("run_chain: burnin must be >= 0");

  Rng rng(c.seed);
  State st;
  std::vector<double> samples;
  samples.reserve(c.steps);
  ChainResult res;
  res.steps = c.steps;

  for (long step = 0; step < c.burnin + c.steps; ++step) {
    auto mv = st.moves();
    std::uint64_t n_cur = mv.size();
    const Move& m = mv[rng.uniform_index(n_cur)];
    // Moves leaving the restricted state space are rejected outright; the
    // indicator keeps detailed balance on the restricted chain.
    if (c.max_volume >= 0 && m.add && st.volume + 1 > c.max_volume) {
      if (step >= c.burnin) {
        samples.push_back(static_cast<double>(st.volume));
        if (st.volume >= static_cast<long>(res.volume_counts.size()))
          res.volume_counts.resize(st.volume + 1, 0);
        ++res.volume_counts[st.volume];
      }
      continue;
    }
    State prop = st;
    prop.apply(m, c.max_extent);
    std::uint64_t n_prop = prop.moves().size();
    double ratio = (m.add ? c.fugacity : 1.0 / c.fugacity) *
                   static_cast<double>(n_cur) / static_cast<double>(n_prop);
    if (ratio >= 1.0 || rng.uniform01() < ratio) {
      st = std::move(prop);
      if (step >= c.burnin) ++res.accepted;
    }
    if (step >= c.burnin) {
      samples.push_back(static_cast<double>(st.volume));
      if (st.volume >= static_cast<long>(res.volume_counts.size()))
        res.volume_counts.resize(st.volume + 1, 0);
      ++res.volume_counts[st.volume];
    }
  }

  double n = static_cast<double>(samples.size());
  double mean = 0.0;
  for (double v : samples) mean += v;
  mean /= n;
  double var = 0.0;
  for (double v : samples) var += (v - mean) * (v - mean);
  var /= n;
  res.mean_volume = mean;
  res.variance = var;

  // Batch means absorb autocorrelation into the between-batch variance.
  long nb = std::max(2L, std::min(64L, c.steps / 64));
  long bs = c.steps / nb;
  double bvar = 0.0;
  for (long b = 0; b < nb; ++b) {
    double bm = 0.0;
    for (long k = 0; k < bs; ++k) bm += samples[b * bs + k];
    bm /= bs;
    bvar += (bm - mean) * (bm - mean);
  }
  bvar /= (nb - 1);
  res.std_error = std::sqrt(bvar / nb);

  res.final_state = PlanePartition(st.h);
  return res;
}

std::vector<std::array<double, 3>> export_rescaled_shape(
    const PlanePartition& pi, double Q) {
  if (!(Q > 0.0 && Q < 1.0))
    throw std::invalid_argument("export_rescaled_shape: Q must lie in (0,1)");
  double r = -std::log(Q);
  std::vector<std::array<double, 3>> out;
  for (long i = 0; i < pi.rows(); ++i)
    for (long j = 0; j < pi.cols(i); ++j)
      if (pi.heights[i][j] > 0)
        out.push_back({i * r, j * r, pi.heights[i][j] * r});
  return out;
}

void write_shape_csv(const std::string& path,
                     const std::vector<std::array<double, 3>>& grid) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  f << "x,y,h\n";
  f.precision(12);
  for (const auto& row : grid)
    f << row[0] << "," << row[1] << "," << row[2] << "\n";
}

void write_shape_svg(const std::string& path,
                     const std::vector<std::array<double, 3>>& grid) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  double cell = 0.0, hmax = 1e-12, xmax = 0.0, ymax = 0.0;
  for (const auto& r : grid) {
    xmax = std::max(xmax, r[0]);
    ymax = std::max(ymax, r[1]);
    hmax = std::max(hmax, r[2]);
  }
  // Infer the lattice spacing from the data (uniform rescaled grid).
  for (const auto& r : grid)
    for (double v : {r[0], r[1]})
      if (v > 0 && (cell == 0.0 || v < cell)) cell = v;
  if (cell == 0.0) cell = 1.0;
  double scale = 16.0 / cell;
  long w = static_cast<long>((xmax + cell) * scale) + 1;
  long ht = static_cast<long>((ymax + cell) * scale) + 1;
  f << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w
    << "\" height=\"" << ht << "\">\n";
  for (const auto& r : grid) {
    int shade = static_cast<int>(255.0 * (1.0 - r[2] / hmax));
    f << "<rect x=\"" << r[0] * scale << "\" y=\"" << r[1] * scale
      << "\" width=\"" << cell * scale << "\" height=\"" << cell * scale
      << "\" fill=\"rgb(" << shade << "," << shade << ",255)\"/>\n";
  }
  f << "</svg>\n";
}

}  // namespace crystalq
