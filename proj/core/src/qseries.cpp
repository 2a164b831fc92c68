#include "crystalq/qseries.hpp"

#include <algorithm>
#include <stdexcept>

namespace crystalq {

namespace {
const Rat kZero(0);
}

QSeries::QSeries(long min_exp, long trunc, std::vector<Rat> coeffs)
    : min_exp_(min_exp), trunc_(trunc), coeffs_(std::move(coeffs)) {
  if (trunc_ < min_exp_)
    throw std::invalid_argument("QSeries: trunc below min_exp");
  if (static_cast<long>(coeffs_.size()) != trunc_ - min_exp_ + 1)
    throw std::invalid_argument("QSeries: coefficient count mismatch");
}

QSeries QSeries::zero(long trunc, long min_exp) {
  return QSeries(min_exp, trunc,
                 std::vector<Rat>(trunc - min_exp + 1, Rat(0)));
}

QSeries QSeries::constant(const Rat& c, long trunc) {
  auto s = zero(trunc, 0);
  s.coeffs_[0] = c;
  return s;
}

QSeries QSeries::monomial(const Rat& c, long exp, long trunc) {
  if (exp > trunc)
    throw std::invalid_argument("QSeries::monomial: exponent above trunc");
  auto s = zero(trunc, exp);
  s.coeffs_[0] = c;
  return s;
}

const Rat& QSeries::coeff(long n) const {
  if (n > trunc_) throw std::out_of_range("QSeries: coefficient beyond trunc");
  if (n < min_exp_) return kZero;
  return coeffs_[n - min_exp_];
}

bool QSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rat& c) { return c == 0; });
}

QSeries QSeries::truncated(long new_trunc) const {
  if (new_trunc > trunc_)
    throw std::invalid_argument("QSeries::truncated: cannot extend");
  long me = std::min(min_exp_, new_trunc);
  std::vector<Rat> c(new_trunc - me + 1, Rat(0));
  for (long n = me; n <= new_trunc; ++n)
    if (n >= min_exp_) c[n - me] = coeffs_[n - min_exp_];
  return QSeries(me, new_trunc, std::move(c));
}

QSeries QSeries::shifted(long k) const {
  return QSeries(min_exp_ + k, trunc_ + k, coeffs_);
}

QSeries QSeries::scaled(const Rat& c) const {
  std::vector<Rat> out(coeffs_);
  for (auto& x : out) x *= c;
  return QSeries(min_exp_, trunc_, std::move(out));
}

QSeries QSeries::at_neg_q() const {
  std::vector<Rat> out(coeffs_);
  for (long n = min_exp_; n <= trunc_; ++n)
    if ((n % 2 + 2) % 2 == 1) out[n - min_exp_] = -out[n - min_exp_];
  return QSeries(min_exp_, trunc_, std::move(out));
}

QSeries QSeries::q_ddq() const {
  std::vector<Rat> out(coeffs_);
  for (long n = min_exp_; n <= trunc_; ++n) out[n - min_exp_] *= n;
  return QSeries(min_exp_, trunc_, std::move(out));
}

QSeries operator+(const QSeries& a, const QSeries& b) {
  long trunc = std::min(a.trunc_, b.trunc_);
  long me = std::min({a.min_exp_, b.min_exp_, trunc});
  std::vector<Rat> c(trunc - me + 1, Rat(0));
  for (long n = me; n <= trunc; ++n) {
    Rat v(0);
    if (n >= a.min_exp_) v += a.coeffs_[n - a.min_exp_];
    if (n >= b.min_exp_) v += b.coeffs_[n - b.min_exp_];
    c[n - me] = v;
  }
  return QSeries(me, trunc, std::move(c));
}

QSeries operator-(const QSeries& a, const QSeries& b) {
  return a + b.scaled(Rat(-1));
}

QSeries operator*(const QSeries& a, const QSeries& b) {
  // Terms above a.trunc_ convolved with b's lowest term land at
  // a.trunc_ + b.min_exp_ + 1 and above; symmetrically for b.
  long trunc = std::min(a.trunc_ + b.min_exp_, b.trunc_ + a.min_exp_);
  long me = a.min_exp_ + b.min_exp_;
  if (trunc < me) trunc = me;  // degenerate but keep a valid window
  std::vector<Rat> c(trunc - me + 1, Rat(0));
  for (long i = a.min_exp_; i <= a.trunc_; ++i) {
    const Rat& ai = a.coeffs_[i - a.min_exp_];
    if (ai == 0) continue;
    long jmax = std::min(b.trunc_, trunc - i);
    for (long j = b.min_exp_; j <= jmax; ++j) {
      const Rat& bj = b.coeffs_[j - b.min_exp_];
      if (bj == 0) continue;
      c[i + j - me] += ai * bj;
    }
  }
  return QSeries(me, trunc, std::move(c));
}

QSeries QSeries::inverse() const {
  if (coeffs_.empty() || coeffs_[0] != 1)
    throw std::domain_error("non-invertible leading term");
  long n = trunc_ - min_exp_;  // relative order
  std::vector<Rat> inv(n + 1, Rat(0));
  inv[0] = 1;
  for (long k = 1; k <= n; ++k) {
    Rat s(0);
    for (long j = 1; j <= k; ++j) s += coeffs_[j] * inv[k - j];
    inv[k] = -s;
  }
  return QSeries(-min_exp_, n - min_exp_, std::move(inv));
}

QSeries QSeries::log() const {
  if (min_exp_ > 0 || trunc_ < 0 || coeff(0) != 1)
    throw std::domain_error("non-invertible leading term");
  for (long n = min_exp_; n < 0; ++n)
    if (coeffs_[n - min_exp_] != 0)
      throw std::domain_error("non-invertible leading term");
  long N = trunc_;
  // log(f) via (log f)' = f'/f: n c_n = sum_{j<n} (n-j) a_{n-j} c_j  with a_0=1.
  std::vector<Rat> a(N + 1, Rat(0));
  for (long n = 0; n <= N; ++n) a[n] = coeff(n);
  std::vector<Rat> c(N + 1, Rat(0));
  for (long n = 1; n <= N; ++n) {
    Rat s = Rat(n) * a[n];
    for (long j = 1; j < n; ++j) s -= Rat(j) * c[j] * a[n - j];
    c[n] = s / n;
  }
  return QSeries(0, N, std::move(c));
}

QSeries QSeries::exp() const {
  if (trunc_ < 0 || coeff(0) != 0)
    throw std::domain_error("exp requires zero constant term");
  for (long n = min_exp_; n < 0; ++n)
    if (coeffs_[n - min_exp_] != 0)
      throw std::domain_error("exp requires zero constant term");
  long N = trunc_;
  std::vector<Rat> a(N + 1, Rat(0));
  for (long n = 0; n <= N; ++n) a[n] = coeff(n);
  // (exp f)' = f' exp f: n e_n = sum_{j=1..n} j a_j e_{n-j}.
  std::vector<Rat> e(N + 1, Rat(0));
  e[0] = 1;
  for (long n = 1; n <= N; ++n) {
    Rat s(0);
    for (long j = 1; j <= n; ++j) s += Rat(j) * a[j] * e[n - j];
    e[n] = s / n;
  }
  return QSeries(0, N, std::move(e));
}

QSeries QSeries::pow(const Rat& r) const {
  if (r == 0) return constant(Rat(1), trunc_);
  return log().scaled(r).exp();
}

QSeries QSeries::div_unit(const QSeries& a, const QSeries& b) {
  if (b.coeff(0) != 1 || b.min_exp_ > 0)
    throw std::domain_error("non-invertible leading term");
  for (long n = b.min_exp_; n < 0; ++n)
    if (b.coeffs_[n - b.min_exp_] != 0)
      throw std::domain_error("non-invertible leading term");
  long me = std::min(a.min_exp_, 0L);
  long trunc = std::min(a.trunc_, b.trunc_ + me);
  std::vector<Rat> out(trunc - me + 1, Rat(0));
  std::vector<Rat> rem(trunc - me + 1, Rat(0));
  for (long n = me; n <= trunc; ++n) rem[n - me] = a.coeff(n);
  for (long n = me; n <= trunc; ++n) {
    out[n - me] = rem[n - me];
    if (out[n - me] == 0) continue;
    for (long j = 1; n + j <= trunc; ++j) {
      long bj = j;
      if (bj > b.trunc_) break;
      rem[n + j - me] -= out[n - me] * b.coeff(bj);
    }
  }
  return QSeries(me, trunc, std::move(out));
}

bool QSeries::operator==(const QSeries& other) const {
  if (trunc_ != other.trunc_) return false;
  long lo = std::min(min_exp_, other.min_exp_);
  for (long n = lo; n <= trunc_; ++n)
    if (coeff(n) != other.coeff(n)) return false;
  return true;
}

QSeries mcmahon(long trunc) {
  if (trunc < 0) throw std::invalid_argument("mcmahon: trunc must be >= 0");
  QSeries m = QSeries::constant(Rat(1), trunc);
  for (long n = 1; n <= trunc; ++n) {
    // (1-q^n)^{-n} = sum_k C(n+k-1, k) q^{nk}
    std::vector<Rat> f(trunc + 1, Rat(0));
    for (long k = 0; n * k <= trunc; ++k) {
      BigInt binom;
      mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(n + k - 1),
                   static_cast<unsigned long>(k));
      f[n * k] = Rat(binom);
    }
    m = m * QSeries(0, trunc, std::move(f));
  }
  return m;
}

QSeries eisenstein_odd(long k, long trunc) {
  if (k < 1) throw std::invalid_argument("eisenstein_odd: k must be >= 1");
  std::vector<Rat> c(trunc + 1, Rat(0));
  for (long d = 1; d <= trunc; ++d) {
    BigInt dp;
    mpz_ui_pow_ui(dp.get_mpz_t(), static_cast<unsigned long>(d),
                  static_cast<unsigned long>(2 * k));
    for (long n = d; n <= trunc; n += d) c[n] += Rat(dp);
  }
  return QSeries(0, trunc, std::move(c));
}

}  // namespace crystalq
