#include "crystalq/zeta.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace crystalq {

namespace {
std::mutex cache_mutex;
std::vector<Rat> cache;  // cache[n] = B_n
}

Rat bernoulli(long n) {
  if (n < 0) throw std::invalid_argument("bernoulli: n must be >= 0");
  std::lock_guard<std::mutex> lock(cache_mutex);
  if (cache.empty()) cache.push_back(Rat(1));
  // sum_{j=0}^{m} C(m+1, j) B_j = 0 for m >= 1.
  while (static_cast<long>(cache.size()) <= n) {
    long m = static_cast<long>(cache.size());
    Rat s(0);
    for (long j = 0; j < m; ++j) {
      BigInt binom;
      mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(m + 1),
                   static_cast<unsigned long>(j));
      s += Rat(binom) * cache[j];
    }
    cache.push_back(-s / Rat(m + 1));
  }
  return cache[n];
}

Rat zeta_negative(long k) {
  if (k < 0) throw std::invalid_argument("zeta_negative: k must be >= 0");
  Rat b = bernoulli(k + 1);
  Rat v = b / Rat(k + 1);
  return (k % 2 == 0) ? v : -v;
}

}  // namespace crystalq
