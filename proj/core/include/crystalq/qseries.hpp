#pragma once

#include <vector>

#include "crystalq/rational.hpp"

namespace crystalq {

// Truncated Laurent series in q with exact rational coefficients.
//
// A series is exact modulo q^{trunc+1}: coefficients at exponents
// min_exp..trunc are stored, anything below min_exp is zero, anything above
// trunc is unknown. Binary operations truncate to the smaller reliable order;
// mixed-order products account for min_exp shifts. Values are immutable after
// construction.
class QSeries {
 public:
  QSeries(long min_exp, long trunc, std::vector<Rat> coeffs);

  static QSeries zero(long trunc, long min_exp = 0);
  static QSeries constant(const Rat& c, long trunc);
  static QSeries monomial(const Rat& c, long exp, long trunc);

  long min_exp() const { return min_exp_; }
  long trunc() const { return trunc_; }

  // Coefficient of q^n. Zero below min_exp; throws std::out_of_range for
  // n > trunc (that coefficient is not known).
  const Rat& coeff(long n) const;

  bool is_zero() const;

  QSeries truncated(long new_trunc) const;
  QSeries shifted(long k) const;  // multiply by q^k
  QSeries scaled(const Rat& c) const;

  // q -> -q (coefficient at q^n picks up (-1)^n).
  QSeries at_neg_q() const;

  // q d/dq: coefficient c_n -> n c_n.
  QSeries q_ddq() const;

  friend QSeries operator+(const QSeries& a, const QSeries& b);
  friend QSeries operator-(const QSeries& a, const QSeries& b);
  friend QSeries operator*(const QSeries& a, const QSeries& b);

  // Multiplicative inverse. Requires unit leading coefficient after factoring
  // out q^{min_exp}; throws std::domain_error("non-invertible leading term").
  QSeries inverse() const;

  // log: requires min_exp <= 0 <= trunc, constant term 1, nothing below q^0.
  QSeries log() const;
  // exp: requires constant term 0, nothing below q^0.
  QSeries exp() const;
  // a^r = exp(r log a).
  QSeries pow(const Rat& r) const;

  // Exact division a/b where b has unit constant term (used for expectation
  // ratios). Equivalent to a * b.inverse() but with one convolution.
  static QSeries div_unit(const QSeries& a, const QSeries& b);

  // Structural equality: same trunc and identical coefficients (exponents
  // outside the stored range count as zero).
  bool operator==(const QSeries& other) const;
  bool operator!=(const QSeries& other) const { return !(*this == other); }

 private:
  long min_exp_;
  long trunc_;
  std::vector<Rat> coeffs_;  // coeffs_[i] is the coefficient of q^{min_exp_+i}
};

// McMahon function prod_{n>0} (1-q^n)^{-n} modulo q^{trunc+1}.
QSeries mcmahon(long trunc);

// Odd-weight Eisenstein series E_{2k+1}(q) = sum_n q^n sum_{d|n} d^{2k}.
QSeries eisenstein_odd(long k, long trunc);

}  // namespace crystalq
