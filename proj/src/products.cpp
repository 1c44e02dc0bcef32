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

#include "qunc/products.hpp"

#include <cmath>

namespace qunc {

double robertson(const DensityMatrix& rho, const Observable& a, const Observable& b) {
  const Complex mean = expectation(rho, commutator(a.matrix(), b.matrix()));
  return 0.25 * std::norm(mean);
}

double schrodinger(const DensityMatrix& rho, const Observable& a, const Observable& b) {
  const double cov = covariance(rho, a, b);
  return robertson(rho, a, b) + cov * cov;
}

double luo_product(const DensityMatrix& rho, const Observable& a, const Observable& b) {
  const BoundEvaluator half(rho, 0.5);
  return 0.25 * half.comm_norm_sq(a) * half.comm_norm_sq(b);
}

double optimal_product(const DensityMatrix& rho, const Observable& a, const Observable& b,
                       double s) {
  const BoundEvaluator e(rho, s);
  return e.quantum_term(a) * e.quantum_term(b);
}

double sharp_product(const DensityMatrix& rho, const Observable& a, const Observable& b,
                     double s) {
  const BoundEvaluator e(rho, s);
  return e.report(a).sharp_bound * e.report(b).sharp_bound;
}

ProductEvaluator::ProductEvaluator(const DensityMatrix& rho, double s) : at_s_(rho, s) {
  if (s != 0.5) at_half_.emplace(rho, 0.5);
}

ProductReport ProductEvaluator::report(const Observable& a, const Observable& b) const {
  const BoundReport ra = at_s_.report(a);
  const BoundReport rb = at_s_.report(b);
  const BoundEvaluator& half = at_half_ ? *at_half_ : at_s_;
  const DensityMatrix& rho = at_s_.state();

  ProductReport p;
  p.s = at_s_.s();
  p.variance_product = ra.variance * rb.variance;
  p.robertson = robertson(rho, a, b);
  const double cov = covariance(rho, a, b);
  p.schrodinger = p.robertson + cov * cov;
  p.luo_product = 0.25 * half.comm_norm_sq(a) * half.comm_norm_sq(b);
  p.optimal_product = ra.optimal_bound * rb.optimal_bound;
  p.sharp_product = ra.sharp_bound * rb.sharp_bound;
  return p;
}

ProductReport product_report(const DensityMatrix& rho, const Observable& a,
                             const Observable& b, double s) {
  return ProductEvaluator(rho, s).report(a, b);
}

}  // namespace qunc
