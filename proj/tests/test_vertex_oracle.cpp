#include <doctest.h>

#include <array>
#include <cstdlib>
#include <vector>

#include "crystalq/plane_partition.hpp"
#include "crystalq/vertex.hpp"

using crystalq::PlanePartition;

// Independent oracle for the vertex character.
//
// The character is defined through the complement generating function
//   R_pi(z) = sum over lattice points outside pi of z^{T(box)},
//   V_pi(z) = R_empty(z) - R_pi(z) R_pi(z^-1) / R_empty(z^-1),
// a finite Laurent polynomial. The oracle grades z_i -> s^{w_i} with weights
// making the exponent map injective on the support window, and evaluates the
// right-hand side purely by truncated Laurent-series arithmetic in u = 1/s:
//   * R_pi(z^-1) and R_empty(z^-1) by direct lattice-point counting,
//   * the division by truncated series inversion,
//   * R_pi(z) from the per-factor geometric expansion of 1/(1 - s^{w_i})
//     in powers of u, minus the finite box polynomial.
// No closed-form simplification of the character enters anywhere.

namespace {

// Laurent series in u supported on [lo, hi]; entries above `exact` (if set
// by mul) are meaningless. Coefficients are exact 64-bit integers.
struct USeries {
  long lo, hi;
  std::vector<long long> c;  // c[k] is the coefficient of u^{lo+k}

  USeries(long l, long h) : lo(l), hi(h), c(h - l + 1, 0) {}
  long long& at(long e) { return c[e - lo]; }
  long long get(long e) const { return (e < lo || e > hi) ? 0 : c[e - lo]; }
};

USeries mul(const USeries& a, const USeries& b, long cap) {
  USeries r(a.lo + b.lo, cap);
  for (long i = a.lo; i <= a.hi; ++i) {
    if (a.get(i) == 0) continue;
    long jmax = std::min(b.hi, cap - i);
    for (long j = b.lo; j <= jmax; ++j) r.at(i + j) += a.get(i) * b.get(j);
  }
  return r;
}

USeries sub(const USeries& a, const USeries& b) {
  long lo = std::min(a.lo, b.lo), hi = std::max(a.hi, b.hi);
  USeries r(lo, hi);
  for (long e = lo; e <= hi; ++e) r.at(e) = a.get(e) - b.get(e);
  return r;
}

// Power-series inverse of a (a.lo == 0, a(0) == 1), exact through u^cap.
USeries inv(const USeries& a, long cap) {
  REQUIRE(a.lo == 0);
  REQUIRE(a.get(0) == 1);
  USeries r(0, cap);
  r.at(0) = 1;
  for (long k = 1; k <= cap; ++k) {
    long long s = 0;
    for (long j = 1; j <= std::min(k, a.hi); ++j)
      s += a.get(j) * r.get(k - j);
    r.at(k) = -s;
  }
  return r;
}

// #{b in Z^3_{>=0} : w.b = m} for m = 0..cap: R_empty(z^-1) coefficients.
USeries empty_counting(const std::array<long, 3>& w, long cap) {
  USeries r(0, cap);
  for (long b3 = 0; b3 * w[2] <= cap; ++b3)
    for (long b2 = 0; b3 * w[2] + b2 * w[1] <= cap; ++b2)
      for (long b1 = 0; b3 * w[2] + b2 * w[1] + b1 * w[0] <= cap; ++b1)
        ++r.at(b1 * w[0] + b2 * w[1] + b3 * w[2]);
  return r;
}

// R_empty(z) = prod_i 1/(1 - s^{w_i}) as an element of Z((u)): each factor
// expands as -sum_{k>=1} u^{k w_i}.
USeries empty_in_u(const std::array<long, 3>& w, long cap) {
  USeries r(0, 0);
  r.at(0) = 1;
  for (long wi : w) {
    USeries f(wi, cap);
    for (long e = wi; e <= cap; e += wi) f.at(e) = -1;
    r = mul(r, f, cap);
  }
  return r;
}

// Finite box polynomial Q(z^{sign}) graded by w, padded as exactly known on
// [lo, cap].
USeries box_poly(const PlanePartition& pi, const std::array<long, 3>& w,
                 long sign, long cap) {
  long lo = 0;
  for (const auto& b : pi.boxes())
    lo = std::min(lo, sign * (b[0] * w[0] + b[1] * w[1] + b[2] * w[2]));
  USeries r(lo, cap);
  for (const auto& b : pi.boxes())
    ++r.at(sign * (b[0] * w[0] + b[1] * w[1] + b[2] * w[2]));
  return r;
}

void check_pi(const PlanePartition& pi, const std::array<long, 3>& w) {
  const long wsum = w[0] + w[1] + w[2];
  long maxq = 0;  // largest grading of a box of pi
  for (const auto& b : pi.boxes())
    maxq = std::max(maxq, b[0] * w[0] + b[1] * w[1] + b[2] * w[2]);
  // True support of V_pi under the grading lies within [-window, window].
  const long window = 2 * maxq + wsum + 1;
  // Each truncated product loses exactness over a band of width maxq (the
  // depth of the most negative exponent in play); two products occur.
  const long margin = 2 * maxq + 8;
  const long cap = window + margin;
  const long exact_hi = window + 4;

  USeries p_empty = empty_counting(w, cap);  // R_empty(z^-1)
  USeries inv_empty = inv(p_empty, cap);     // 1 / R_empty(z^-1)
  USeries r_empty_u = empty_in_u(w, cap);    // R_empty(z) in Z((u))
  USeries q_bar = box_poly(pi, w, +1, cap);  // Q(z^-1)
  USeries q_s = box_poly(pi, w, -1, cap);    // Q(z)

  USeries r_pi_u = sub(r_empty_u, q_s);    // R_pi(z) in Z((u))
  USeries r_pi_bar = sub(p_empty, q_bar);  // R_pi(z^-1)

  USeries prod = mul(mul(r_pi_u, r_pi_bar, cap), inv_empty, cap);
  USeries v = sub(r_empty_u, prod);  // V_pi in Z((u))

  // Closed-form character, graded the same way.
  auto closed = crystalq::vertex_character(pi);
  USeries expect(-window, window);
  for (const auto& [a, coef] : closed.terms()) {
    // Injectivity of the grading holds on this window for both weight sets.
    CHECK(std::abs(a[0]) <= 5);
    CHECK(std::abs(a[1]) <= 5);
    CHECK(std::abs(a[2]) <= 5);
    long e = -(a[0] * w[0] + a[1] * w[1] + a[2] * w[2]);
    REQUIRE(std::abs(e) <= window);
    expect.at(e) += coef;
  }
  for (long e = v.lo; e <= window; ++e) CHECK(v.get(e) == expect.get(e));
  // Beyond the support window the Laurent polynomial must vanish.
  for (long e = window + 1; e <= exact_hi; ++e) CHECK(v.get(e) == 0);
}

}  // namespace

TEST_CASE("series inversion self-check") {
  const std::array<long, 3> w{1, 11, 127};
  USeries p = empty_counting(w, 400);
  USeries one = mul(p, inv(p, 400), 400);
  CHECK(one.get(0) == 1);
  for (long e = 1; e <= 400; ++e) CHECK(one.get(e) == 0);
}

TEST_CASE("vertex character matches the complement-series oracle") {
  const std::array<long, 3> w1{1, 11, 127};
  const std::array<long, 3> w2{1, 13, 149};
  for (long n = 0; n <= 5; ++n)
    for (const auto& pi : crystalq::enumerate_plane_partitions(n)) {
      check_pi(pi, w1);
      check_pi(pi, w2);
    }
}
