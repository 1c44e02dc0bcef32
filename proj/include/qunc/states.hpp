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

#ifndef QUNC_STATES_HPP
#define QUNC_STATES_HPP

#include <array>
#include <cstdint>

#include "qunc/linalg.hpp"
#include "qunc/random.hpp"

namespace qunc {

/// |Tr rho - 1| above this is rejected.
inline constexpr double kTraceTol = 1e-12;

/// A validated Hermitian operator.
class Observable {
 public:
  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  Eigen::Index dim() const noexcept { return matrix_.rows(); }

 private:
  explicit Observable(ComplexMatrix m) : matrix_(std::move(m)) {}
  friend Observable make_observable(const ComplexMatrix& m);
  friend Observable hermitian_part(const ComplexMatrix& m);

  ComplexMatrix matrix_;
};

/// Throws NotSquare, NonFinite or NotHermitian. The stored matrix is the
/// exactly Hermitian part (M + M^dagger) / 2.
Observable make_observable(const ComplexMatrix& m);

/// (M + M^dagger) / 2 without the tolerance check, for operators that are
/// Hermitian by construction up to rounding. Throws NotSquare, NonFinite.
Observable hermitian_part(const ComplexMatrix& m);

/// A validated quantum state: Hermitian, unit trace, positive semidefinite.
/// The spectral decomposition is computed once at construction.
class DensityMatrix {
 public:
  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  const SpectralDecomposition& spectrum() const noexcept { return spectrum_; }
  Eigen::Index dim() const noexcept { return matrix_.rows(); }

  /// Smallest and largest eigenvalues (raw, before clustering).
  double lambda_min() const noexcept { return spectrum_.eigenvalues(0); }
  double lambda_max() const noexcept { return spectrum_.eigenvalues(spectrum_.eigenvalues.size() - 1); }

 private:
  DensityMatrix(ComplexMatrix m, SpectralDecomposition d)
      : matrix_(std::move(m)), spectrum_(std::move(d)) {}
  friend DensityMatrix make_density(const ComplexMatrix& m, double cluster_tol);

  ComplexMatrix matrix_;
  SpectralDecomposition spectrum_;
};

/// Throws NotSquare, NonFinite, NotHermitian, TraceNotOne, NotPSD.
/// A negative `cluster_tol` selects the linalg default.
DensityMatrix make_density(const ComplexMatrix& m, double cluster_tol = -1.0);

using Vector3 = std::array<double, 3>;

/// Qubit state (I + r n.sigma) / 2.
struct BlochState {
  double r = 0.0;
  Vector3 n{0.0, 0.0, 1.0};
};

/// Throws DomainError unless 0 <= r <= 1 and |n| = 1 within 1e-12.
BlochState make_bloch(double r, const Vector3& n);

DensityMatrix from_bloch(const BlochState& b);

/// Tr rho^2.
double purity(const DensityMatrix& rho);

ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();

/// a.sigma for a real 3-vector `a`.
ComplexMatrix pauli_dot(const Vector3& a);

/// Ginibre-induced state G G^dagger / Tr(G G^dagger), G a dim x rank matrix of
/// independent complex Gaussians drawn from `stream`.
///
/// Throws DomainError for dim < 2 or rank outside [1, dim].
DensityMatrix random_density(int dim, int rank, RandomStream& stream);
DensityMatrix random_density(int dim, int rank, std::uint64_t seed);

/// (G + G^dagger) / 2 for a complex Gaussian G.
Observable random_observable(int dim, RandomStream& stream);
Observable random_observable(int dim, std::uint64_t seed);

}  // namespace qunc

#endif  // QUNC_STATES_HPP
