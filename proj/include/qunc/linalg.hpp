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

#ifndef QUNC_LINALG_HPP
#define QUNC_LINALG_HPP

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace qunc {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

/// Hermiticity is accepted when ||M - M^dagger|| <= kHermitianTol * ||M||.
inline constexpr double kHermitianTol = 1e-12;

/// Default degeneracy clustering tolerance, 1e-9 * max(1, ||M||).
double default_cluster_tol(const ComplexMatrix& m);

/// Throws NotSquare / NonFinite if `m` is empty, rectangular or holds NaN/Inf.
void require_square_finite(const ComplexMatrix& m);

bool is_hermitian(const ComplexMatrix& m, double rel_tol = kHermitianTol);

/// Tr(X^dagger X).
double hs_norm_sq(const ComplexMatrix& x);

/// AB - BA. Throws DimensionMismatch.
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

/// Eigen-decomposition of a Hermitian matrix with eigenvalues grouped into
/// degenerate clusters.
///
/// Eigenvalues are ascending and clusters are contiguous index ranges of the
/// sorted spectrum. Each cluster is summarised by a representative value (the
/// mean of its members) and an orthogonal projector. Every eigenvector is
/// phase-fixed so that its largest-magnitude component is real and positive.
struct SpectralDecomposition {
  struct Cluster {
    std::size_t first = 0;  // index into eigenvalues / eigenvector columns
    std::size_t size = 0;
    double value = 0.0;
  };

  RealVector eigenvalues;
  ComplexMatrix eigenvectors;  // column k belongs to eigenvalues[k]
  std::vector<Cluster> clusters;
  std::vector<ComplexMatrix> projectors;  // one per cluster
  double cluster_tol = 0.0;

  std::size_t dim() const { return static_cast<std::size_t>(eigenvalues.size()); }

  /// Eigenvalue of index k replaced by the representative value of its cluster.
  RealVector clustered_eigenvalues() const;

  /// Sum over clusters of value * projector.
  ComplexMatrix reconstruct() const;
};

/// Cyclic Jacobi with off-diagonal threshold 1e-13 * ||M|| and a 100-sweep
/// cap. A negative `cluster_tol` selects default_cluster_tol(m).
///
/// Throws NotHermitian, NoConvergence, NotSquare, NonFinite.
SpectralDecomposition herm_eig(const ComplexMatrix& m, double cluster_tol = -1.0);

/// Sum over clusters of value^s * projector, for a positive semidefinite
/// decomposition. Cluster values in [-1e-12, 1e-12] are treated as exact zeros; a zero
/// value maps to zero for every s (so s = 0 yields the support projector).
///
/// Throws NegativeSpectrum if any eigenvalue is below -1e-12, DomainError if
/// s is negative or not finite.
ComplexMatrix matrix_power(const SpectralDecomposition& d, double s);

/// Eigenvalues within kNegativeSpectrumTol of zero count as rounding noise.
inline constexpr double kNegativeSpectrumTol = 1e-12;

/// v^s for a single eigenvalue, with the same zero snapping as matrix_power.
inline double eigenvalue_power(double v, double s) {
  return v <= kNegativeSpectrumTol ? 0.0 : std::pow(v, s);
}

}  // namespace qunc

#endif  // QUNC_LINALG_HPP
