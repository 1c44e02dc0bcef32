// Copyright 2026 The qunc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QUNC_BOUNDS_HPP
#define QUNC_BOUNDS_HPP

#include <optional>

#include "qunc/linalg.hpp"
#include "qunc/states.hpp"

namespace qunc {

/// lambda_max - lambda_min <= kMixedTol * max(1, lambda_max) counts as the
/// maximally mixed state; so does a spectrum forming a single cluster.
inline constexpr double kMixedTol = 1e-10;

/// Below this extreme-eigenvalue gap the quantum term is evaluated as an
/// eigenbasis double sum instead of coefficient * ||[A, rho^s]||^2.
inline constexpr double kStableGap = 1e-6;

/// Tr(rho X).
Complex expectation(const DensityMatrix& rho, const ComplexMatrix& x);

/// Tr(rho A^2) - (Tr rho A)^2, with rounding noise down to -1e-12 clamped to 0.
/// Throws DimensionMismatch.
double variance(const DensityMatrix& rho, const Observable& a);

/// Symmetrised covariance <{A,B}>/2 - <A><B>. Throws DimensionMismatch.
double covariance(const DensityMatrix& rho, const Observable& a, const Observable& b);

/// ||[A, rho^s]||^2. Throws InvalidS for s < 1/2.
double comm_norm_sq(const DensityMatrix& rho, const Observable& a, double s);

bool is_maximally_mixed(const DensityMatrix& rho);

/// (lambda_max + lambda_min) / (2 (lambda_max^s - lambda_min^s)^2), or nullopt
/// for the maximally mixed state, whose quantum term is zero by convention.
/// Throws InvalidS.
std::optional<double> optimal_coefficient(const DensityMatrix& rho, double s);

/// Sum over the spectral projectors P of rho of P A P.
Observable pinch(const DensityMatrix& rho, const Observable& a);

/// Variance of the pinched observable; the classical part of the variance.
double classical_variance(const DensityMatrix& rho, const Observable& a);

/// One evaluation of the variance and its lower bounds for a fixed (rho, A, s).
struct BoundReport {
  double s = 0.5;
  double variance = 0.0;
  double classical_variance = 0.0;
  double comm_norm_sq = 0.0;
  std::optional<double> coefficient;  // nullopt: maximally mixed
  double luo_bound = 0.0;             // comm_norm_sq / 2
  bool luo_valid = false;             // luo_bound is the skew-information bound only at s = 1/2
  double optimal_bound = 0.0;         // coefficient * comm_norm_sq, 0 when maximally mixed
  double sharp_bound = 0.0;           // classical_variance + optimal_bound
  double slack = 0.0;                 // variance - sharp_bound
};

/// Precomputes everything about rho that the bounds need for a fixed s, so
/// repeated reports over many observables do not redo the spectral work.
class BoundEvaluator {
 public:
  /// Throws InvalidS.
  BoundEvaluator(DensityMatrix rho, double s);

  const DensityMatrix& state() const noexcept { return rho_; }
  double s() const noexcept { return s_; }
  std::optional<double> coefficient() const noexcept { return coefficient_; }

  double comm_norm_sq(const Observable& a) const;
  /// coefficient * ||[A, rho^s]||^2, or 0 for the maximally mixed state.
  double quantum_term(const Observable& a) const;
  Observable pinch(const Observable& a) const;
  BoundReport report(const Observable& a) const;

 private:
  void require_dim(const Observable& a) const;

  DensityMatrix rho_;
  double s_;
  ComplexMatrix rho_power_;
  std::optional<double> coefficient_;
  double gap_ = 0.0;
  double extreme_sum_ = 0.0;
  RealVector powered_eigenvalues_;  // clustered eigenvalues raised to s
  double powered_gap_ = 0.0;
};

/// Throws InvalidS or DimensionMismatch.
BoundReport single_bound_report(const DensityMatrix& rho, const Observable& a, double s);

/// |d><1| + |1><d| with |1>, |d> the first eigenvectors of the lowest and the
/// highest eigenvalue clusters. Saturates the sharp bound for every s.
/// Throws MaximallyMixedState.
Observable tight_witness(const DensityMatrix& rho);

struct CoherenceReport {
  double delta_a = 0.0;            // smallest gap between distinct eigenvalues of A
  double coherence = 0.0;          // ||rho - D_A(rho)||^2
  double decoherence_bound = 0.0;  // c_1 * delta_a^2 * coherence
  double s1_bound = 0.0;           // c_1 * ||[A, rho]||^2
};

/// D_A(X): sum over the spectral projectors P of A of P X P.
ComplexMatrix decohere(const Observable& a, const ComplexMatrix& x);

/// Throws ScalarObservable when A has a single eigenvalue cluster.
CoherenceReport coherence_report(const DensityMatrix& rho, const Observable& a);

/// (x^s - y^s)^2 / (x + y). Throws NonPositiveInput or InvalidS.
double lemma_ratio(double x, double y, double s);

struct LemmaScan {
  double s = 0.5;
  double grid_max = 0.0;
  double argmax_x = 0.0;  // reported with argmax_x >= argmax_y (F is symmetric)
  double argmax_y = 0.0;
  double corner_value = 0.0;  // F(M, m)
  bool holds = false;         // grid_max <= corner_value * (1 + 1e-12)
};

/// Evaluates F on a grid x grid lattice over [m, M]^2 (endpoints included).
/// Throws DomainError unless 0 < m < M with M - m > 1e-9 M and grid >= 2.
LemmaScan lemma_scan(double m, double big_m, int grid, double s);

}  // namespace qunc

#endif  // QUNC_BOUNDS_HPP
