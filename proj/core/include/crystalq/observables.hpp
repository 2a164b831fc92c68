#pragma once

#include <string>
#include <vector>

#include "crystalq/vertex.hpp"

namespace crystalq {

// Chern-character observables ch_k(pi): coefficients of the alpha-expansion
// of 1 - Q_pi(e^alpha) (1-e^{alpha t1})(1-e^{alpha t2})(1-e^{alpha t3}).
// ch_0 = 1, ch_1 = ch_2 = 0, ch_3 = t1 t2 t3 |pi|.
std::vector<Rat> ch(const PlanePartition& pi, const TorusWeights& t, long kmax);

// ch_k along t + eps*dir: entry k is a polynomial in eps (QSeries, min_exp 0)
// expanded through eps^ord. Needed when pairing with weights that have eps
// pole terms.
std::vector<QSeries> ch_series(const PlanePartition& pi, const TorusWeights& t,
                               const TorusWeights& dir, long kmax, long ord);

// <ch_k>_w = sum_pi w(pi) ch_k(pi) / sum_pi w(pi) through q^trunc, exact
// rational coefficients. Weight evaluations use the eps-limit machinery along
// dir; pole terms must cancel within each fixed-volume sum.
QSeries expectation_ch(long k, const TorusWeights& t, long trunc,
                       const TorusWeights& dir = default_perturbation());

// <|pi|>_w = <ch_3>_w / (t1 t2 t3) = -gamma E_3(-q).
QSeries expected_volume(const TorusWeights& t, long trunc,
                        const TorusWeights& dir = default_perturbation());

// Report (not an assertion): attempt an exact linear solve expressing
// <ch_k>_w in the fixed basis {E3(-q), qd/dq E3(-q), (qd/dq)^2 E3(-q),
// E5(-q)} and report fit/no-fit with the coefficients found.
struct DifferentialAlgebraFit {
  bool fits = false;
  std::vector<std::string> basis_names;
  std::vector<Rat> coefficients;  // valid when fits
};
DifferentialAlgebraFit fit_differential_algebra(
    long k, const TorusWeights& t, long trunc,
    const TorusWeights& dir = default_perturbation());

}  // namespace crystalq
