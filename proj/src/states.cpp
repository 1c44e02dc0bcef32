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

#include "qunc/states.hpp"

#include <cmath>
#include <sstream>

#include "qunc/errors.hpp"

namespace qunc {

namespace {

ComplexMatrix gaussian_matrix(int rows, int cols, RandomStream& stream) {
  ComplexMatrix g(rows, cols);
  // Column-major fill order is part of the determinism contract.
  for (int j = 0; j < cols; ++j) {
    for (int i = 0; i < rows; ++i) {
      const double re = stream.normal();
      const double im = stream.normal();
      g(i, j) = Complex(re, im);
    }
  }
  return g;
}

}  // namespace

std::array<double, 3> random_unit_vector3(RandomStream& stream) {
  for (;;) {
    const double x = stream.normal();
    const double y = stream.normal();
    const double z = stream.normal();
    const double norm = std::sqrt(x * x + y * y + z * z);
    if (norm > 0.0) return {x / norm, y / norm, z / norm};
  }
}

Observable make_observable(const ComplexMatrix& m) {
  require_square_finite(m);
  if (!is_hermitian(m)) {
    throw Error(ErrorKind::NotHermitian, "observable asymmetry exceeds 1e-12 * ||A||");
  }
  return Observable(0.5 * (m + m.adjoint()));
}

Observable hermitian_part(const ComplexMatrix& m) {
  require_square_finite(m);
  return Observable(0.5 * (m + m.adjoint()));
}

DensityMatrix make_density(const ComplexMatrix& m, double cluster_tol) {
  require_square_finite(m);
  if (!is_hermitian(m)) {
    throw Error(ErrorKind::NotHermitian, "state asymmetry exceeds 1e-12 * ||rho||");
  }
  const double trace = m.trace().real();
  if (std::abs(trace - 1.0) > kTraceTol) {
    std::ostringstream os;
    os.precision(17);
    os << "trace is " << trace << ", expected 1 within 1e-12";
    throw Error(ErrorKind::TraceNotOne, os.str());
  }
  ComplexMatrix herm = 0.5 * (m + m.adjoint());
  SpectralDecomposition d = herm_eig(herm, cluster_tol);
  if (d.eigenvalues(0) < -kNegativeSpectrumTol) {
    std::ostringstream os;
    os << "smallest eigenvalue " << d.eigenvalues(0) << " is below -1e-12";
    throw Error(ErrorKind::NotPSD, os.str());
  }
  return DensityMatrix(std::move(herm), std::move(d));
}

BlochState make_bloch(double r, const Vector3& n) {
  if (!(r >= 0.0 && r <= 1.0)) throw Error(ErrorKind::DomainError, "Bloch length must lie in [0, 1]");
  const double len = std::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]);
  if (!(std::abs(len - 1.0) <= 1e-12)) {
    throw Error(ErrorKind::DomainError, "Bloch direction must be a unit vector");
  }
  return BlochState{r, n};
}

DensityMatrix from_bloch(const BlochState& b) {
  const Vector3 v{b.r * b.n[0], b.r * b.n[1], b.r * b.n[2]};
  return make_density(0.5 * (ComplexMatrix::Identity(2, 2) + pauli_dot(v)));
}

double purity(const DensityMatrix& rho) { return hs_norm_sq(rho.matrix()); }

ComplexMatrix pauli_x() {
  ComplexMatrix m(2, 2);
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}

ComplexMatrix pauli_y() {
  ComplexMatrix m(2, 2);
  m << 0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0;
  return m;
}

ComplexMatrix pauli_z() {
  ComplexMatrix m(2, 2);
  m << 1.0, 0.0, 0.0, -1.0;
  return m;
}

ComplexMatrix pauli_dot(const Vector3& a) {
  ComplexMatrix m(2, 2);
  m << a[2], Complex(a[0], -a[1]), Complex(a[0], a[1]), -a[2];
  return m;
}

DensityMatrix random_density(int dim, int rank, RandomStream& stream) {
  if (dim < 2) throw Error(ErrorKind::DomainError, "random_density needs dim >= 2");
  if (rank < 1 || rank > dim) throw Error(ErrorKind::DomainError, "rank must lie in [1, dim]");
  const ComplexMatrix g = gaussian_matrix(dim, rank, stream);
  ComplexMatrix m = g * g.adjoint();
  m /= m.trace().real();
  return make_density(0.5 * (m + m.adjoint()));
}

DensityMatrix random_density(int dim, int rank, std::uint64_t seed) {
  RandomStream stream(seed);
  return random_density(dim, rank, stream);
}

Observable random_observable(int dim, RandomStream& stream) {
  if (dim < 2) throw Error(ErrorKind::DomainError, "random_observable needs dim >= 2");
  const ComplexMatrix g = gaussian_matrix(dim, dim, stream);
  return make_observable(0.5 * (g + g.adjoint()));
}

Observable random_observable(int dim, std::uint64_t seed) {
  RandomStream stream(seed);
  return random_observable(dim, stream);
}

}  // namespace qunc
