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

#ifndef QUNC_QUBIT_HPP
#define QUNC_QUBIT_HPP

#include <cstdint>

namespace qunc {

/// Uniform averages over independent spin directions a, b on S^2 of each
/// lower bound on V(A) V(B), for a qubit state of purity P.
struct AveragedBounds {
  double purity = 1.0;
  double avg_robertson = 0.0;
  double avg_schrodinger = 0.0;
  double avg_luo = 0.0;
  double avg_optimal = 0.0;
  double avg_sharp = 0.0;
  double avg_variance_product = 0.0;
};

/// 1 - r^2 cos^2(theta), theta the angle between the spin axis and the Bloch
/// vector. Throws DomainError outside r in [0, 1], theta in [0, pi].
double qubit_variance(double r, double theta);

/// (1 - r^2) cos^2(theta). Valid as the classical variance for r > 0 only;
/// at r = 0 the classical variance equals the full variance.
double qubit_classical_variance(double r, double theta);

struct QubitIdentity {
  double residual = 0.0;      // V - (V_cl + quantum_term), closed form
  double quantum_term = 0.0;  // sin^2(theta) for r > 0, 0 at r = 0
  double matrix_slack = 0.0;  // slack of the sharp bound on the 2x2 matrices
};

/// Checks the exact qubit decomposition V = V_cl + c_s ||[A, rho^s]||^2 both in
/// closed form and through the general matrix path, for rho with Bloch vector
/// r z and A = sin(theta) sigma_x + cos(theta) sigma_z.
QubitIdentity qubit_identity_check(double r, double theta, double s);

/// Closed-form averages. Throws DomainError unless 1/2 <= P <= 1.
AveragedBounds averaged_bounds_analytic(double purity);

struct MonteCarloBounds {
  AveragedBounds mean;
  AveragedBounds standard_error;  // purity field mirrors mean.purity
  std::uint64_t samples = 0;

  /// Every column within n_sigma standard errors of `exact`, with a 1e-12
  /// absolute floor for columns whose samples are all identical.
  bool agrees_with(const AveragedBounds& exact, double n_sigma = 5.0) const;
};

/// Monte Carlo estimate of the averaged bounds. The state is the Bloch state
/// (r = sqrt(2P - 1), z); sample i draws a and b from substream i of `seed`, and
/// every bound is evaluated on the 2x2 matrices. Samples are reduced in fixed
/// blocks in index order, so the result is bitwise identical for any `workers`.
///
/// At P = 1/2 the quantum term of the state is zero by convention, while the
/// averaged optimal curve is continuous there; that single column is evaluated
/// at the one-sided limit state r = 1e-6.
///
/// Throws DomainError for P outside [1/2, 1] or samples == 0.
MonteCarloBounds averaged_bounds_monte_carlo(double purity, std::uint64_t samples,
                                             std::uint64_t seed, double s = 1.0,
                                             unsigned workers = 1);

}  // namespace qunc

#endif  // QUNC_QUBIT_HPP
