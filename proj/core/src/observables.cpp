#include "crystalq/observables.hpp"

#include <stdexcept>

namespace crystalq {

namespace {

Rat scale(const Rat& v, const Rat& c) { return v * c; }
QSeries scale(const QSeries& v, const Rat& c) { return v.scaled(c); }

// alpha-polynomial arithmetic over a coefficient ring R (Rat or eps-QSeries).
template <class R>
std::vector<R> alpha_mul(const std::vector<R>& a, const std::vector<R>& b,
                         const R& zero) {
  size_t n = a.size();
  std::vector<R> c(n, zero);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; i + j < n; ++j) c[i + j] = c[i + j] + a[i] * b[j];
  return c;
}

// e^{alpha x} through alpha^{kmax}, x in the coefficient ring.
template <class R>
std::vector<R> alpha_exp(const R& x, long kmax, const R& zero, const R& one) {
  std::vector<R> out(kmax + 1, zero);
  out[0] = one;
  R cur = one;
  Rat fact(1);
  for (long k = 1; k <= kmax; ++k) {
    cur = cur * x;
    fact *= k;
    out[k] = scale(cur, Rat(1) / fact);
  }
  return out;
}

template <class R>
std::vector<R> ch_impl(const PlanePartition& pi, const std::array<R, 3>& tw,
                       long kmax, const R& zero, const R& one,
                       auto&& t_of_box) {
  std::vector<R> q(kmax + 1, zero);
  for (const auto& b : pi.boxes()) {
    auto e = alpha_exp<R>(t_of_box(b), kmax, zero, one);
    for (long k = 0; k <= kmax; ++k) q[k] = q[k] + e[k];
  }
  std::vector<R> prod(kmax + 1, zero);
  prod[0] = one;
  for (int axis = 0; axis < 3; ++axis) {
    auto e = alpha_exp<R>(tw[axis], kmax, zero, one);
    std::vector<R> f(kmax + 1, zero);
    f[0] = one - e[0];
    for (long k = 1; k <= kmax; ++k) f[k] = zero - e[k];
    prod = alpha_mul(prod, f, zero);
  }
  auto r = alpha_mul(q, prod, zero);
  std::vector<R> out(kmax + 1, zero);
  out[0] = one - r[0];
  for (long k = 1; k <= kmax; ++k) out[k] = zero - r[k];
  return out;
}

}  // namespace

std::vector<Rat> ch(const PlanePartition& pi, const TorusWeights& t,
                    long kmax) {
  return ch_impl<Rat>(
      pi, {t.t1, t.t2, t.t3}, kmax, Rat(0), Rat(1),
      [&](const std::array<long, 3>& b) { return t.T({b[0], b[1], b[2]}); });
}

std::vector<QSeries> ch_series(const PlanePartition& pi, const TorusWeights& t,
                               const TorusWeights& dir, long kmax, long ord) {
  auto lin = [&](const Rat& c, const Rat& s) {
    std::vector<Rat> v(ord + 1, Rat(0));
    v[0] = c;
    if (ord >= 1) v[1] = s;
    return QSeries(0, ord, std::move(v));
  };
  QSeries zero = QSeries::zero(ord);
  QSeries one = QSeries::constant(Rat(1), ord);
  std::array<QSeries, 3> tw = {lin(t.t1, dir.t1), lin(t.t2, dir.t2),
                               lin(t.t3, dir.t3)};
  return ch_impl<QSeries>(pi, tw, kmax, zero, one,
                          [&](const std::array<long, 3>& b) {
                            LatticeVector a{b[0], b[1], b[2]};
                            return lin(t.T(a), dir.T(a));
                          });
}

namespace {

// Numerator sum_pi w(pi) ch_k(pi) and denominator sum_pi w(pi), both as exact
// q-series after eps-pole cancellation.
void expectation_sums(long k, const TorusWeights& t, long trunc,
                      const TorusWeights& dir, QSeries& num, QSeries& den) {
  std::vector<Rat> nc(trunc + 1, Rat(0)), dc(trunc + 1, Rat(0));
  for (long n = 0; n <= trunc; ++n) {
    QSeries wsum = QSeries::zero(0);
    QSeries csum = QSeries::zero(0);
    for (const auto& pi : enumerate_plane_partitions(n)) {
      QSeries w = evaluate_weight_series(weight(pi), t, dir);
      long ord = -std::min(w.min_exp(), 0L);
      QSeries chk = ch_series(pi, t, dir, k, ord)[k];
      wsum = wsum + w;
      csum = csum + (w * chk).truncated(0);
    }
    for (const QSeries* s : {&wsum, &csum})
      for (long e = s->min_exp(); e < 0; ++e)
        if (s->coeff(e) != 0)
          throw std::domain_error(
              "non-generic weights: pole terms do not cancel in expectation");
    dc[n] = wsum.coeff(0);
    nc[n] = csum.coeff(0);
  }
  num = QSeries(0, trunc, std::move(nc));
  den = QSeries(0, trunc, std::move(dc));
}

}  // namespace

QSeries expectation_ch(long k, const TorusWeights& t, long trunc,
                       const TorusWeights& dir) {
  QSeries num = QSeries::zero(trunc), den = QSeries::zero(trunc);
  expectation_sums(k, t, trunc, dir, num, den);
  // den has constant term 1 (the empty configuration has weight 1).
  return QSeries::div_unit(num, den);
}

QSeries expected_volume(const TorusWeights& t, long trunc,
                        const TorusWeights& dir) {
  Rat t123 = t.t1 * t.t2 * t.t3;
  return expectation_ch(3, t, trunc, dir).scaled(Rat(1) / t123);
}

DifferentialAlgebraFit fit_differential_algebra(long k, const TorusWeights& t,
                                                long trunc,
                                                const TorusWeights& dir) {
  DifferentialAlgebraFit fit;
  fit.basis_names = {"E3(-q)", "qd/dq E3(-q)", "(qd/dq)^2 E3(-q)", "E5(-q)"};
  QSeries target = expectation_ch(k, t, trunc, dir);
  QSeries e3 = eisenstein_odd(1, trunc).at_neg_q();
  QSeries e5 = eisenstein_odd(2, trunc).at_neg_q();
  std::vector<QSeries> basis = {e3, e3.q_ddq(), e3.q_ddq().q_ddq(), e5};
  size_t nb = basis.size();
  if (static_cast<size_t>(trunc) < nb) return fit;

  // Exact Gaussian elimination on the first nb coefficient rows (q^1..q^nb),
  // then consistency check on all rows through q^trunc.
  std::vector<std::vector<Rat>> m(nb, std::vector<Rat>(nb + 1, Rat(0)));
  for (size_t r = 0; r < nb; ++r) {
    for (size_t c = 0; c < nb; ++c) m[r][c] = basis[c].coeff(r + 1);
    m[r][nb] = target.coeff(r + 1);
  }
  for (size_t c = 0; c < nb; ++c) {
    size_t piv = c;
    while (piv < nb && m[piv][c] == 0) ++piv;
    if (piv == nb) return fit;  // singular: no unique solve in this basis
    std::swap(m[c], m[piv]);
    Rat inv = Rat(1) / m[c][c];
    for (auto& x : m[c]) x *= inv;
    for (size_t r = 0; r < nb; ++r) {
      if (r == c || m[r][c] == 0) continue;
      Rat f = m[r][c];
      for (size_t x = 0; x <= nb; ++x) m[r][x] -= f * m[c][x];
    }
  }
  std::vector<Rat> sol(nb);
  for (size_t c = 0; c < nb; ++c) sol[c] = m[c][nb];
  for (long n = 0; n <= trunc; ++n) {
    Rat s(0);
    for (size_t c = 0; c < nb; ++c) s += sol[c] * basis[c].coeff(n);
    if (s != target.coeff(n)) return fit;
  }
  fit.fits = true;
  fit.coefficients = std::move(sol);
  return fit;
}

}  // namespace crystalq
