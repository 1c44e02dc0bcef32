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

#ifndef QUNC_PRODUCTS_HPP
#define QUNC_PRODUCTS_HPP

#include <optional>

#include "qunc/bounds.hpp"

namespace qunc {

/// Lower bounds on V(A) V(B) for one (rho, A, B, s).
struct ProductReport {
  double s = 0.5;
  double variance_product = 0.0;
  double robertson = 0.0;
  double schrodinger = 0.0;
  double luo_product = 0.0;
  double optimal_product = 0.0;
  double sharp_product = 0.0;
};

/// |<[A,B]>|^2 / 4.
double robertson(const DensityMatrix& rho, const Observable& a, const Observable& b);

/// Robertson term plus the squared symmetrised covariance.
double schrodinger(const DensityMatrix& rho, const Observable& a, const Observable& b);

/// ||[A, sqrt rho]||^2 ||[B, sqrt rho]||^2 / 4.
double luo_product(const DensityMatrix& rho, const Observable& a, const Observable& b);

/// Product of the two single-observable optimal bounds.
double optimal_product(const DensityMatrix& rho, const Observable& a, const Observable& b,
                       double s);

/// Product of the two single-observable sharp bounds (classical + quantum).
double sharp_product(const DensityMatrix& rho, const Observable& a, const Observable& b,
                     double s);

/// Evaluates every product bound for many observable pairs against one state.
/// The optimal and sharp products are built from BoundReports so the single
/// and product paths share one coefficient and one set of norms.
class ProductEvaluator {
 public:
  ProductEvaluator(const DensityMatrix& rho, double s);

  ProductReport report(const Observable& a, const Observable& b) const;

 private:
  BoundEvaluator at_s_;
  std::optional<BoundEvaluator> at_half_;  // engaged only when s != 1/2
};

ProductReport product_report(const DensityMatrix& rho, const Observable& a,
                             const Observable& b, double s);

}  // namespace qunc

#endif  // QUNC_PRODUCTS_HPP
