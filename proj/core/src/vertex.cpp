#include "crystalq/vertex.hpp"

#include <future>
#include <sstream>
#include <stdexcept>

namespace crystalq {

void ExponentPolynomial::add_term(const LatticeVector& a, long c) {
  if (c == 0) return;
  auto it = terms_.find(a);
  if (it == terms_.end()) {
    terms_.emplace(a, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

long ExponentPolynomial::coefficient(const LatticeVector& a) const {
  auto it = terms_.find(a);
  return it == terms_.end() ? 0 : it->second;
}

ExponentPolynomial ExponentPolynomial::negated_argument() const {
  ExponentPolynomial out;
  for (const auto& [a, c] : terms_)
    out.add_term({-a[0], -a[1], -a[2]}, c);
  return out;
}

ExponentPolynomial operator+(const ExponentPolynomial& x,
                             const ExponentPolynomial& y) {
  ExponentPolynomial out = x;
  for (const auto& [a, c] : y.terms_) out.add_term(a, c);
  return out;
}

ExponentPolynomial operator-(const ExponentPolynomial& x,
                             const ExponentPolynomial& y) {
  ExponentPolynomial out = x;
  for (const auto& [a, c] : y.terms_) out.add_term(a, -c);
  return out;
}

ExponentPolynomial operator*(const ExponentPolynomial& x,
                             const ExponentPolynomial& y) {
  ExponentPolynomial out;
  for (const auto& [a, ca] : x.terms_)
    for (const auto& [b, cb] : y.terms_)
      out.add_term({a[0] + b[0], a[1] + b[1], a[2] + b[2]}, ca * cb);
  return out;
}

ExponentPolynomial box_character(const PlanePartition& pi) {
  if (pi.has_legs())
    throw std::domain_error("legged character not supported");
  ExponentPolynomial q;
  for (const auto& b : pi.boxes()) q.add_term(b, 1);
  return q;
}

ExponentPolynomial vertex_character(const PlanePartition& pi) {
  ExponentPolynomial q = box_character(pi);
  ExponentPolynomial qbar = q.negated_argument();

  ExponentPolynomial shift;  // z^{-(t1+t2+t3)}
  shift.add_term({-1, -1, -1}, 1);

  ExponentPolynomial prod;  // (1-z^{-t1})(1-z^{-t2})(1-z^{-t3})
  prod.add_term({0, 0, 0}, 1);
  for (int axis = 0; axis < 3; ++axis) {
    ExponentPolynomial f;
    f.add_term({0, 0, 0}, 1);
    LatticeVector e{0, 0, 0};
    e[axis] = -1;
    f.add_term(e, -1);
    prod = prod * f;
  }

  ExponentPolynomial v = q - shift * qbar - q * qbar * prod;
  if (v.coefficient({0, 0, 0}) != 0)
    throw std::logic_error("vertex_character: nonzero coefficient at origin");
  return v;
}

FactoredWeight weight(const PlanePartition& pi) {
  FactoredWeight w;
  w.chi = pi.size();
  ExponentPolynomial v_pi = vertex_character(pi);
  for (const auto& [a, v] : v_pi.terms())
    w.exponents.emplace(a, -v);
  return w;
}

namespace {

std::string vec_str(const LatticeVector& a) {
  std::ostringstream os;
  os << "(" << a[0] << "," << a[1] << "," << a[2] << ")";
  return os.str();
}

}  // namespace

Rat evaluate_weight(const FactoredWeight& w, const TorusWeights& t) {
  Rat value(1);
  for (const auto& [a, e] : w.exponents) {
    Rat f = t.T(a);
    if (f == 0)
      throw std::domain_error("non-generic weights: T(a) vanishes at a=" +
                              vec_str(a));
    value *= rat_pow(f, e);
  }
  return value;
}

QSeries evaluate_weight_series(const FactoredWeight& w, const TorusWeights& t,
                               const TorusWeights& dir) {
  // prod (c_a + s_a eps)^{e(a)}: vanishing forms (c_a = 0) contribute
  // eps^{e} s^{e}; the rest expand around eps = 0. Expanded to relative
  // order -min_exp so the eps^0 coefficient of any sum is exact.
  long vanish_order = 0;
  for (const auto& [a, e] : w.exponents)
    if (t.T(a) == 0) vanish_order += e;

  long ord = std::max(0L, -vanish_order);  // relative expansion order
  QSeries acc = QSeries::constant(Rat(1), ord);
  long shift = 0;
  for (const auto& [a, e] : w.exponents) {
    Rat c = t.T(a);
    Rat s = dir.T(a);
    if (c == 0) {
      if (s == 0)
        throw std::domain_error("non-generic direction: form vanishes at a=" +
                                vec_str(a));
      shift += e;
      acc = acc.scaled(rat_pow(s, e));
    } else {
      // (c + s eps)^{|e|} or its inverse, as a unit series in eps.
      std::vector<Rat> lin(ord + 1, Rat(0));
      lin[0] = 1;
      if (ord >= 1) lin[1] = s / c;
      QSeries unit(0, ord, std::move(lin));
      QSeries factor = e > 0 ? unit : unit.inverse();
      long reps = e > 0 ? e : -e;
      for (long r = 0; r < reps; ++r) acc = acc * factor;
      acc = acc.scaled(rat_pow(c, e));
      acc = acc.truncated(std::min(acc.trunc(), ord));
    }
  }
  return acc.shifted(shift).truncated(std::min(0L, shift + ord));
}

TorusWeights default_perturbation() { return {Rat(1), Rat(7), Rat(13)}; }

Rat interaction_factor(const LatticeVector& a1, const LatticeVector& a2,
                       const TorusWeights& t) {
  Rat dT = t.T(a1) - t.T(a2);
  const Rat& t1 = t.t1;
  const Rat& t2 = t.t2;
  const Rat& t3 = t.t3;
  Rat den[] = {dT + t1, dT + t2, dT + t3, dT + t1 + t2 + t3};
  for (const Rat& f : den)
    if (f == 0) throw std::domain_error("singular pair");
  if (dT == 0) throw std::domain_error("singular pair");
  Rat num = dT * (dT + t1 + t2) * (dT + t1 + t3) * (dT + t2 + t3);
  return num / (den[0] * den[1] * den[2] * den[3]);
}

QSeries vertex_series(const TorusWeights& t, long trunc,
                      const TorusWeights& dir, int threads) {
  std::vector<Rat> coeffs(trunc + 1, Rat(0));
  for (long n = 0; n <= trunc; ++n) {
    auto pps = enumerate_plane_partitions(n);
    auto sum_range = [&](size_t lo, size_t hi) {
      QSeries s = QSeries::zero(0);
      for (size_t i = lo; i < hi; ++i)
        s = s + evaluate_weight_series(weight(pps[i]), t, dir);
      return s;
    };
    QSeries total = QSeries::zero(0);
    if (threads <= 1 || pps.size() < 16) {
      total = sum_range(0, pps.size());
    } else {
      size_t nw = static_cast<size_t>(threads);
      size_t chunk = (pps.size() + nw - 1) / nw;
      std::vector<std::future<QSeries>> futs;
      for (size_t lo = 0; lo < pps.size(); lo += chunk)
        futs.push_back(std::async(std::launch::async, sum_range, lo,
                                  std::min(lo + chunk, pps.size())));
      // Deterministic fold in chunk order; rational addition is exact, so
      // the result is identical to the single-worker sum.
      for (auto& f : futs) total = total + f.get();
    }
    for (long e = total.min_exp(); e < 0; ++e)
      if (total.coeff(e) != 0)
        throw std::domain_error(
            "non-generic weights: pole terms do not cancel in vertex series");
    coeffs[n] = total.coeff(0);
  }
  return QSeries(0, trunc, std::move(coeffs));
}

}  // namespace crystalq
