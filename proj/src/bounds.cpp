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

#include "qunc/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "qunc/errors.hpp"

namespace qunc {

namespace {

void require_same_dim(const DensityMatrix& rho, const Observable& a) {
  if (rho.dim() != a.dim()) {
    std::ostringstream os;
    os << "state has dim " << rho.dim() << ", observable has dim " << a.dim();
    throw Error(ErrorKind::DimensionMismatch, os.str());
  }
}

void require_valid_s(double s) {
  if (!(s >= 0.5) || !std::isfinite(s)) {
    std::ostringstream os;
    os << "s = " << s << " is outside [1/2, inf)";
    throw Error(ErrorKind::InvalidS, os.str());
  }
}

double clamp_rounding(double v) { return (v < 0.0 && v >= -1e-12) ? 0.0 : v; }

// Re Tr(rho (A - <A>)^2), the centred form of Tr(rho A^2) - <A>^2.
double centred_variance(const ComplexMatrix& rho, const ComplexMatrix& a) {
  const Eigen::Index n = rho.rows();
  const double mean = (rho.cwiseProduct(a.transpose())).sum().real();
  const ComplexMatrix a0 = a - mean * ComplexMatrix::Identity(n, n);
  return (rho.cwiseProduct((a0 * a0).transpose())).sum().real();
}

struct Extremes {
  double min = 0.0;
  double max = 0.0;
  bool mixed = true;
};

Extremes extremes(const DensityMatrix& rho) {
  const auto& clusters = rho.spectrum().clusters;
  Extremes e;
  e.min = std::max(clusters.front().value, 0.0);
  e.max = std::max(clusters.back().value, 0.0);
  e.mixed = clusters.size() == 1 || (e.max - e.min) <= kMixedTol * std::max(1.0, e.max);
  return e;
}

ComplexMatrix sandwich(const std::vector<ComplexMatrix>& projectors, const ComplexMatrix& x) {
  ComplexMatrix out = ComplexMatrix::Zero(x.rows(), x.cols());
  for (const auto& p : projectors) out += p * x * p;
  return out;
}

}  // namespace

Complex expectation(const DensityMatrix& rho, const ComplexMatrix& x) {
  if (rho.dim() != x.rows() || x.rows() != x.cols()) {
    throw Error(ErrorKind::DimensionMismatch, "expectation of an operator with the wrong shape");
  }
  return rho.matrix().cwiseProduct(x.transpose()).sum();
}

double variance(const DensityMatrix& rho, const Observable& a) {
  require_same_dim(rho, a);
  return clamp_rounding(centred_variance(rho.matrix(), a.matrix()));
}

double covariance(const DensityMatrix& rho, const Observable& a, const Observable& b) {
  require_same_dim(rho, a);
  require_same_dim(rho, b);
  const Eigen::Index n = rho.dim();
  const auto id = ComplexMatrix::Identity(n, n);
  const ComplexMatrix a0 = a.matrix() - expectation(rho, a.matrix()).real() * id;
  const ComplexMatrix b0 = b.matrix() - expectation(rho, b.matrix()).real() * id;
  const ComplexMatrix anti = a0 * b0 + b0 * a0;
  return 0.5 * rho.matrix().cwiseProduct(anti.transpose()).sum().real();
}

double comm_norm_sq(const DensityMatrix& rho, const Observable& a, double s) {
  require_valid_s(s);
  require_same_dim(rho, a);
  return hs_norm_sq(commutator(a.matrix(), matrix_power(rho.spectrum(), s)));
}

bool is_maximally_mixed(const DensityMatrix& rho) { return extremes(rho).mixed; }

std::optional<double> optimal_coefficient(const DensityMatrix& rho, double s) {
  require_valid_s(s);
  const Extremes e = extremes(rho);
  if (e.mixed) return std::nullopt;
  const double diff = eigenvalue_power(e.max, s) - eigenvalue_power(e.min, s);
  return (e.max + e.min) / (2.0 * diff * diff);
}

Observable pinch(const DensityMatrix& rho, const Observable& a) {
  require_same_dim(rho, a);
  return hermitian_part(sandwich(rho.spectrum().projectors, a.matrix()));
}

double classical_variance(const DensityMatrix& rho, const Observable& a) {
  return variance(rho, pinch(rho, a));
}

BoundEvaluator::BoundEvaluator(DensityMatrix rho, double s) : rho_(std::move(rho)), s_(s) {
  require_valid_s(s);
  rho_power_ = matrix_power(rho_.spectrum(), s);
  coefficient_ = optimal_coefficient(rho_, s);
  const Extremes e = extremes(rho_);
  gap_ = e.max - e.min;
  extreme_sum_ = e.max + e.min;
  powered_eigenvalues_ = rho_.spectrum().clustered_eigenvalues().unaryExpr(
      [s](double v) { return eigenvalue_power(v, s); });
  powered_gap_ = eigenvalue_power(e.max, s) - eigenvalue_power(e.min, s);
}

void BoundEvaluator::require_dim(const Observable& a) const { require_same_dim(rho_, a); }

double BoundEvaluator::comm_norm_sq(const Observable& a) const {
  require_dim(a);
  return hs_norm_sq(commutator(a.matrix(), rho_power_));
}

double BoundEvaluator::quantum_term(const Observable& a) const {
  require_dim(a);
  if (!coefficient_) return 0.0;
  if (gap_ >= kStableGap) return *coefficient_ * comm_norm_sq(a);

  // Near-degenerate extremes: c * ||[A, rho^s]||^2 equals
  // (lambda_max + lambda_min) * sum_{i<j} ratio_ij^2 |A_ij|^2 with
  // ratio_ij = (lambda_i^s - lambda_j^s) / (lambda_max^s - lambda_min^s), and
  // the ratio stays bounded while the coefficient and the norm do not.
  const auto& v = rho_.spectrum().eigenvectors;
  const ComplexMatrix a_eig = v.adjoint() * a.matrix() * v;
  const Eigen::Index n = a_eig.rows();
  double sum = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const double ratio = (powered_eigenvalues_(j) - powered_eigenvalues_(i)) / powered_gap_;
      sum += ratio * ratio * std::norm(a_eig(i, j));
    }
  }
  return extreme_sum_ * sum;
}

Observable BoundEvaluator::pinch(const Observable& a) const {
  require_dim(a);
  return hermitian_part(sandwich(rho_.spectrum().projectors, a.matrix()));
}

BoundReport BoundEvaluator::report(const Observable& a) const {
  require_dim(a);
  BoundReport r;
  r.s = s_;
  r.variance = variance(rho_, a);
  r.classical_variance = variance(rho_, pinch(a));
  r.comm_norm_sq = comm_norm_sq(a);
  r.coefficient = coefficient_;
  r.luo_bound = 0.5 * r.comm_norm_sq;
  r.luo_valid = s_ == 0.5;
  r.optimal_bound = quantum_term(a);
  r.sharp_bound = r.classical_variance + r.optimal_bound;
  r.slack = r.variance - r.sharp_bound;
  return r;
}

BoundReport single_bound_report(const DensityMatrix& rho, const Observable& a, double s) {
  return BoundEvaluator(rho, s).report(a);
}

Observable tight_witness(const DensityMatrix& rho) {
  if (is_maximally_mixed(rho)) {
    throw Error(ErrorKind::MaximallyMixedState,
                "no witness exists: for the maximally mixed state the quantum term is zero "
                "and every observable saturates the bound");
  }
  const auto& d = rho.spectrum();
  const auto low = d.eigenvectors.col(static_cast<Eigen::Index>(d.clusters.front().first));
  const auto high = d.eigenvectors.col(static_cast<Eigen::Index>(d.clusters.back().first));
  return hermitian_part(high * low.adjoint() + low * high.adjoint());
}

ComplexMatrix decohere(const Observable& a, const ComplexMatrix& x) {
  return sandwich(herm_eig(a.matrix()).projectors, x);
}

CoherenceReport coherence_report(const DensityMatrix& rho, const Observable& a) {
  require_same_dim(rho, a);
  const SpectralDecomposition eig_a = herm_eig(a.matrix());
  if (eig_a.clusters.size() < 2) {
    throw Error(ErrorKind::ScalarObservable,
                "observable has a single eigenvalue cluster, so its minimal gap is undefined");
  }
  CoherenceReport r;
  r.delta_a = std::numeric_limits<double>::infinity();
  for (std::size_t k = 1; k < eig_a.clusters.size(); ++k) {
    r.delta_a = std::min(r.delta_a, eig_a.clusters[k].value - eig_a.clusters[k - 1].value);
  }
  r.coherence = hs_norm_sq(rho.matrix() - sandwich(eig_a.projectors, rho.matrix()));

  const BoundEvaluator s1(rho, 1.0);
  r.s1_bound = s1.quantum_term(a);
  if (const auto c = s1.coefficient()) r.decoherence_bound = *c * r.delta_a * r.delta_a * r.coherence;
  return r;
}

double lemma_ratio(double x, double y, double s) {
  require_valid_s(s);
  if (!(x > 0.0) || !(y > 0.0)) {
    throw Error(ErrorKind::NonPositiveInput, "lemma_ratio needs x > 0 and y > 0");
  }
  if (x == y) return 0.0;
  const double diff = std::pow(x, s) - std::pow(y, s);
  return diff * diff / (x + y);
}

LemmaScan lemma_scan(double m, double big_m, int grid, double s) {
  require_valid_s(s);
  if (!(m > 0.0) || !(big_m > m) || !std::isfinite(big_m) || !(big_m - m > 1e-9 * big_m)) {
    throw Error(ErrorKind::DomainError, "lemma scan needs 0 < m < M with M - m > 1e-9 M");
  }
  if (grid < 2) throw Error(ErrorKind::DomainError, "lemma scan needs at least 2 grid points");

  const auto point = [&](int i) {
    if (i == grid - 1) return big_m;
    return m + (big_m - m) * static_cast<double>(i) / static_cast<double>(grid - 1);
  };

  LemmaScan out;
  out.s = s;
  out.grid_max = -1.0;
  for (int i = 0; i < grid; ++i) {
    const double x = point(i);
    for (int j = 0; j < grid; ++j) {
      const double y = point(j);
      const double f = lemma_ratio(x, y, s);
      if (f > out.grid_max) {
        out.grid_max = f;
        out.argmax_x = std::max(x, y);
        out.argmax_y = std::min(x, y);
      }
    }
  }
  out.corner_value = lemma_ratio(big_m, m, s);
  out.holds = out.grid_max <= out.corner_value * (1.0 + 1e-12);
  return out;
}

}  // namespace qunc
