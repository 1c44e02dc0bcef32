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

#include "qunc/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <sstream>
#include <utility>

#include "qunc/errors.hpp"

namespace qunc {

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kOffDiagonalTol = 1e-13;

// v^H h v / v^H v accumulated in long double.
double rayleigh_quotient(const ComplexMatrix& h, const ComplexMatrix::ConstColXpr& v) {
  using LC = std::complex<long double>;
  long double num = 0.0L, den = 0.0L;
  for (Eigen::Index i = 0; i < h.rows(); ++i) {
    LC hv = 0.0L;
    for (Eigen::Index j = 0; j < h.cols(); ++j) hv += LC(h(i, j)) * LC(v(j));
    num += (std::conj(LC(v(i))) * hv).real();
    den += std::norm(LC(v(i)));
  }
  return static_cast<double>(num / den);
}

double off_diagonal_norm(const ComplexMatrix& a) {
  double sum = 0.0;
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (i != j) sum += std::norm(a(i, j));
    }
  }
  return std::sqrt(sum);
}

// One complex Jacobi rotation zeroing a(p, q). The rotation is the product
// of a phase diag(1, e^{-i phi}) making a(p, q) real and a real Givens
// rotation; it is applied as a <- V^dagger a V and w <- w V.
void rotate(ComplexMatrix& a, ComplexMatrix& w, Eigen::Index p, Eigen::Index q) {
  const Complex b = a(p, q);
  const double abs_b = std::abs(b);
  if (abs_b == 0.0) return;

  const Complex phase = b / abs_b;
  const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * abs_b);
  const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::hypot(1.0, tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  const Complex v_pp = c;
  const Complex v_pq = s;
  const Complex v_qp = -std::conj(phase) * s;
  const Complex v_qq = std::conj(phase) * c;

  const Eigen::Index n = a.rows();
  for (Eigen::Index k = 0; k < n; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = akp * v_pp + akq * v_qp;
    a(k, q) = akp * v_pq + akq * v_qq;

    const Complex wkp = w(k, p);
    const Complex wkq = w(k, q);
    w(k, p) = wkp * v_pp + wkq * v_qp;
    w(k, q) = wkp * v_pq + wkq * v_qq;
  }
  for (Eigen::Index k = 0; k < n; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = std::conj(v_pp) * apk + std::conj(v_qp) * aqk;
    a(q, k) = std::conj(v_pq) * apk + std::conj(v_qq) * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();
}

void fix_phase(Eigen::Ref<Eigen::VectorXcd> v) {
  Eigen::Index best = 0;
  double best_abs = -1.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double m = std::abs(v(i));
    if (m > best_abs) {
      best_abs = m;
      best = i;
    }
  }
  if (best_abs > 0.0) v *= std::conj(v(best)) / best_abs;
}

}  // namespace

double default_cluster_tol(const ComplexMatrix& m) {
  return 1e-9 * std::max(1.0, std::sqrt(hs_norm_sq(m)));
}

void require_square_finite(const ComplexMatrix& m) {
  if (m.rows() == 0 || m.rows() != m.cols()) {
    std::ostringstream os;
    os << "expected a non-empty square matrix, got " << m.rows() << "x" << m.cols();
    throw Error(ErrorKind::NotSquare, os.str());
  }
  if (!m.allFinite()) throw Error(ErrorKind::NonFinite, "matrix holds NaN or Inf entries");
}

bool is_hermitian(const ComplexMatrix& m, double rel_tol) {
  if (m.rows() != m.cols()) return false;
  const double asym = std::sqrt(hs_norm_sq(m - m.adjoint()));
  return asym <= rel_tol * std::sqrt(hs_norm_sq(m));
}

double hs_norm_sq(const ComplexMatrix& x) { return x.squaredNorm(); }

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    std::ostringstream os;
    os << "commutator of " << a.rows() << "x" << a.cols() << " and " << b.rows() << "x"
       << b.cols();
    throw Error(ErrorKind::DimensionMismatch, os.str());
  }
  return a * b - b * a;
}

RealVector SpectralDecomposition::clustered_eigenvalues() const {
  RealVector out(eigenvalues.size());
  for (const auto& c : clusters) {
    out.segment(static_cast<Eigen::Index>(c.first), static_cast<Eigen::Index>(c.size))
        .setConstant(c.value);
  }
  return out;
}

ComplexMatrix SpectralDecomposition::reconstruct() const {
  const auto n = static_cast<Eigen::Index>(dim());
  ComplexMatrix out = ComplexMatrix::Zero(n, n);
  for (std::size_t k = 0; k < clusters.size(); ++k) out += clusters[k].value * projectors[k];
  return out;
}

SpectralDecomposition herm_eig(const ComplexMatrix& m, double cluster_tol) {
  require_square_finite(m);
  if (!is_hermitian(m)) {
    throw Error(ErrorKind::NotHermitian, "asymmetry exceeds 1e-12 * ||M||");
  }
  const Eigen::Index n = m.rows();
  const double norm = std::sqrt(hs_norm_sq(m));
  const double threshold = kOffDiagonalTol * norm;

  const ComplexMatrix h = 0.5 * (m + m.adjoint());
  ComplexMatrix a = h;
  ComplexMatrix w = ComplexMatrix::Identity(n, n);
  int sweeps = 0;
  while (off_diagonal_norm(a) > threshold) {
    if (sweeps == kMaxSweeps) {
      throw Error(ErrorKind::NoConvergence, "Jacobi sweep cap reached");
    }
    ++sweeps;
    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) rotate(a, w, p, q);
    }
  }

  // The rotated diagonal carries a few ulps of accumulated error; the
  // Rayleigh quotient against the input is accurate to second order.
  Eigen::VectorXd values(n);
  for (Eigen::Index k = 0; k < n; ++k) values(k) = rayleigh_quotient(h, std::as_const(w).col(k));

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index i, Eigen::Index j) { return values(i) < values(j); });

  SpectralDecomposition d;
  d.cluster_tol = cluster_tol < 0.0 ? default_cluster_tol(m) : cluster_tol;
  d.eigenvalues.resize(n);
  d.eigenvectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const Eigen::Index src = order[static_cast<std::size_t>(k)];
    d.eigenvalues(k) = values(src);
    d.eigenvectors.col(k) = w.col(src);
    fix_phase(d.eigenvectors.col(k));
  }

  // Greedy contiguous grouping keeps each cluster's spread within the tolerance.
  std::size_t start = 0;
  const auto size = static_cast<std::size_t>(n);
  while (start < size) {
    std::size_t end = start + 1;
    const double base = d.eigenvalues(static_cast<Eigen::Index>(start));
    while (end < size && d.eigenvalues(static_cast<Eigen::Index>(end)) - base <= d.cluster_tol) ++end;

    SpectralDecomposition::Cluster c;
    c.first = start;
    c.size = end - start;
    c.value = d.eigenvalues.segment(static_cast<Eigen::Index>(start), static_cast<Eigen::Index>(c.size)).mean();
    const auto block = d.eigenvectors.middleCols(static_cast<Eigen::Index>(start),
                                                 static_cast<Eigen::Index>(c.size));
    d.projectors.push_back(block * block.adjoint());
    d.clusters.push_back(c);
    start = end;
  }
  return d;
}

ComplexMatrix matrix_power(const SpectralDecomposition& d, double s) {
  if (!std::isfinite(s) || s < 0.0) {
    throw Error(ErrorKind::DomainError, "matrix power exponent must be finite and >= 0");
  }
  if (d.dim() > 0 && d.eigenvalues.minCoeff() < -kNegativeSpectrumTol) {
    std::ostringstream os;
    os << "eigenvalue " << d.eigenvalues.minCoeff() << " is below -1e-12";
    throw Error(ErrorKind::NegativeSpectrum, os.str());
  }
  const auto n = static_cast<Eigen::Index>(d.dim());
  ComplexMatrix out = ComplexMatrix::Zero(n, n);
  for (std::size_t k = 0; k < d.clusters.size(); ++k) {
    // rounding noise around a zero eigenvalue would blow up under small s
    const double v = eigenvalue_power(d.clusters[k].value, s);
    if (v == 0.0) continue;
    out += v * d.projectors[k];
  }
  return out;
}

}  // namespace qunc
