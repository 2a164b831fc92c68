#include "crystalq/partitions.hpp"

#include <numeric>
#include <stdexcept>

#include "crystalq/zeta.hpp"

namespace crystalq {

Partition2D::Partition2D(std::vector<long> p) : parts(std::move(p)) {
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0)
      throw std::invalid_argument("Partition2D: parts must be positive");
    if (i > 0 && parts[i] > parts[i - 1])
      throw std::invalid_argument("Partition2D: parts must be weakly decreasing");
  }
}

long Partition2D::size() const {
  return std::accumulate(parts.begin(), parts.end(), 0L);
}

Partition2D Partition2D::conjugate() const {
  if (parts.empty()) return {};
  std::vector<long> c(parts[0], 0);
  for (long p : parts)
    for (long j = 0; j < p; ++j) ++c[j];
  return Partition2D(std::move(c));
}

std::vector<Partition2D> enumerate_partitions(long d) {
  if (d < 0) throw std::invalid_argument("enumerate_partitions: d must be >= 0");
  std::vector<Partition2D> out;
  std::vector<long> cur;
  auto rec = [&](auto&& self, long rem, long maxpart) -> void {
    if (rem == 0) {
      out.emplace_back(Partition2D{std::vector<long>(cur)});
      return;
    }
    for (long p = std::min(rem, maxpart); p >= 1; --p) {
      cur.push_back(p);
      self(self, rem - p, p);
      cur.pop_back();
    }
  };
  rec(rec, d, d);
  return out;
}

BigInt dimension(const Partition2D& lambda) {
  long d = lambda.size();
  if (d == 0) return BigInt(1);
  Partition2D conj = lambda.conjugate();
  BigInt num = factorial(d);
  BigInt hooks(1);
  for (long r = 0; r < lambda.num_parts(); ++r) {
    for (long c = 0; c < lambda.parts[r]; ++c) {
      long hook = (lambda.parts[r] - c) + (conj.parts[c] - r) - 1;
      hooks *= hook;
    }
  }
  return num / hooks;  // exact: hook-length formula
}

Rat plancherel_weight(const Partition2D& lambda) {
  Rat w(dimension(lambda), factorial(lambda.size()));
  w.canonicalize();
  return w * w;
}

Rat p_k(const Partition2D& lambda, long k) {
  if (k < 1) throw std::invalid_argument("p_k: k must be >= 1");
  Rat sum(0);
  for (long i = 1; i <= lambda.num_parts(); ++i) {
    // (lambda_i - i + 1/2)^k - (-i + 1/2)^k, with halves kept exact.
    Rat a = Rat(2 * (lambda.part(i - 1) - i) + 1, 2);
    Rat b = Rat(-2 * i + 1, 2);
    a.canonicalize();
    b.canonicalize();
    sum += rat_pow(a, k) - rat_pow(b, k);
  }
  Rat reg = (Rat(1) - rat_pow(Rat(1, 2), k)) * zeta_negative(k);
  return sum + reg;
}

}  // namespace crystalq
