#pragma once

#include <array>
#include <map>

#include "crystalq/plane_partition.hpp"
#include "crystalq/qseries.hpp"
#include "crystalq/rational.hpp"

namespace crystalq {

using LatticeVector = std::array<long, 3>;

// Finite-support integer-coefficient function on Z^3; a Laurent polynomial in
// z^{t_1}, z^{t_2}, z^{t_3} with monomials z^{T(a)} indexed by lattice
// vectors a. Zero coefficients are never stored.
class ExponentPolynomial {
 public:
  ExponentPolynomial() = default;

  void add_term(const LatticeVector& a, long c);
  long coefficient(const LatticeVector& a) const;
  const std::map<LatticeVector, long>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  ExponentPolynomial negated_argument() const;  // z -> z^{-1}

  friend ExponentPolynomial operator+(const ExponentPolynomial&,
                                      const ExponentPolynomial&);
  friend ExponentPolynomial operator-(const ExponentPolynomial&,
                                      const ExponentPolynomial&);
  friend ExponentPolynomial operator*(const ExponentPolynomial&,
                                      const ExponentPolynomial&);
  bool operator==(const ExponentPolynomial&) const = default;

 private:
  std::map<LatticeVector, long> terms_;
};

// Torus weights (t1, t2, t3); T(a) = a1 t1 + a2 t2 + a3 t3.
struct TorusWeights {
  Rat t1, t2, t3;
  Rat T(const LatticeVector& a) const {
    return Rat(a[0]) * t1 + Rat(a[1]) * t2 + Rat(a[2]) * t3;
  }
};

// q^chi prod_a T(a)^{e(a)} in factored form; the weight is never expanded
// into a polynomial ring in t, evaluation happens at chosen rational t.
struct FactoredWeight {
  long chi = 0;
  std::map<LatticeVector, long> exponents;  // no entry at a = 0, no zeros
};

// Q_pi = sum_{boxes of pi} z^{T(box)}. Finite configurations only; a legged
// input throws std::domain_error("legged character not supported").
ExponentPolynomial box_character(const PlanePartition& pi);

// V_pi = Q - z^{-(t1+t2+t3)} Qbar - Q Qbar (1-z^{-t1})(1-z^{-t2})(1-z^{-t3})
// with Q = box_character(pi), Qbar(z) = Q(z^{-1}). The coefficient at the
// origin is always zero (checked; violation is an internal error).
ExponentPolynomial vertex_character(const PlanePartition& pi);

// Equivariant vertex measure in factored form: chi = |pi|,
// exponents e(a) = -v_pi(a).
FactoredWeight weight(const PlanePartition& pi);

// Exact value of prod T(a)^{e(a)} at t. Throws
// std::domain_error("non-generic weights: T(a) vanishes at a=(..)")
// when a linear form in the support vanishes.
Rat evaluate_weight(const FactoredWeight& w, const TorusWeights& t);

// Weight as an exact Laurent series in a perturbation parameter eps,
// evaluated along t + eps*dir. Returns a QSeries in eps with trunc 0: the
// eps^0 coefficient is the directional limit value; negative exponents are
// pole terms that must cancel across a sum. Throws if some vanishing form
// also vanishes along dir ("non-generic direction").
QSeries evaluate_weight_series(const FactoredWeight& w, const TorusWeights& t,
                               const TorusWeights& dir);

// Default perturbation direction for limit evaluation at non-generic t.
TorusWeights default_perturbation();

// U(box1, box2) with deltaT = T(a1) - T(a2):
//   deltaT (deltaT+t1+t2)(deltaT+t1+t3)(deltaT+t2+t3)
//   / [(deltaT+t1)(deltaT+t2)(deltaT+t3)(deltaT+t1+t2+t3)].
// Throws std::domain_error("singular pair") when a denominator factor (or the
// deltaT = 0 numerator factor) vanishes.
Rat interaction_factor(const LatticeVector& a1, const LatticeVector& a2,
                       const TorusWeights& t);

// sum_{|pi| <= trunc} w(pi)-evaluation * q^{|pi|}. Weights are evaluated as
// eps-series along dir and summed per volume; all negative eps-coefficients
// of each sum must cancel exactly (throws "non-generic weights" otherwise).
QSeries vertex_series(const TorusWeights& t, long trunc,
                      const TorusWeights& dir = default_perturbation(),
                      int threads = 1);

}  // namespace crystalq
