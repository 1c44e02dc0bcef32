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

#include "qunc/qubit.hpp"

#include <array>
#include <atomic>
#include <cmath>
#include <numbers>
#include <optional>
#include <thread>
#include <vector>

#include "qunc/errors.hpp"
#include "qunc/products.hpp"
#include "qunc/random.hpp"
#include "qunc/states.hpp"

namespace qunc {

namespace {

constexpr std::uint64_t kBlockSize = 4096;
constexpr double kLimitRadius = 1e-6;
constexpr std::size_t kColumns = 6;

void require_bloch_angle(double r, double theta) {
  if (!(r >= 0.0 && r <= 1.0)) throw Error(ErrorKind::DomainError, "r must lie in [0, 1]");
  if (!(theta >= 0.0 && theta <= std::numbers::pi)) {
    throw Error(ErrorKind::DomainError, "theta must lie in [0, pi]");
  }
}

void require_purity(double p) {
  if (!(p >= 0.5 && p <= 1.0)) throw Error(ErrorKind::DomainError, "purity must lie in [1/2, 1]");
}

// Running mean and centred second moment, mergeable in a fixed order.
struct Moments {
  double n = 0.0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double x) {
    n += 1.0;
    const double delta = x - mean;
    mean += delta / n;
    m2 += delta * (x - mean);
  }

  void merge(const Moments& o) {
    if (o.n == 0.0) return;
    const double total = n + o.n;
    const double delta = o.mean - mean;
    mean += delta * o.n / total;
    m2 += o.m2 + delta * delta * n * o.n / total;
    n = total;
  }

  double standard_error() const {
    if (n < 2.0) return 0.0;
    return std::sqrt(std::max(m2, 0.0) / (n - 1.0) / n);
  }
};

using Block = std::array<Moments, kColumns>;

AveragedBounds to_bounds(double purity, const std::array<double, kColumns>& v) {
  return AveragedBounds{purity, v[0], v[1], v[2], v[3], v[4], v[5]};
}

}  // namespace

double qubit_variance(double r, double theta) {
  require_bloch_angle(r, theta);
  const double c = std::cos(theta);
  return 1.0 - r * r * c * c;
}

double qubit_classical_variance(double r, double theta) {
  require_bloch_angle(r, theta);
  const double c = std::cos(theta);
  return (1.0 - r * r) * c * c;
}

QubitIdentity qubit_identity_check(double r, double theta, double s) {
  require_bloch_angle(r, theta);
  QubitIdentity out;
  const double v = qubit_variance(r, theta);
  if (r == 0.0) {
    out.quantum_term = 0.0;
    out.residual = 0.0;  // V_cl = V for the maximally mixed state
  } else {
    const double sn = std::sin(theta);
    out.quantum_term = sn * sn;
    out.residual = v - (qubit_classical_variance(r, theta) + out.quantum_term);
  }
  const DensityMatrix rho = from_bloch(make_bloch(r, {0.0, 0.0, 1.0}));
  const Observable a = make_observable(pauli_dot({std::sin(theta), 0.0, std::cos(theta)}));
  out.matrix_slack = single_bound_report(rho, a, s).slack;
  return out;
}

AveragedBounds averaged_bounds_analytic(double p) {
  require_purity(p);
  AveragedBounds b;
  b.purity = p;
  b.avg_robertson = (2.0 / 9.0) * (2.0 * p - 1.0);
  b.avg_schrodinger = (4.0 / 9.0) * (p * p - p + 1.0);
  const double luo_root = 1.0 - std::sqrt(2.0 * (1.0 - p));
  b.avg_luo = (4.0 / 9.0) * luo_root * luo_root;
  b.avg_optimal = 4.0 / 9.0;
  b.avg_sharp = 4.0 * (2.0 - p) * (2.0 - p) / 9.0;
  b.avg_variance_product = b.avg_sharp;
  return b;
}

bool MonteCarloBounds::agrees_with(const AveragedBounds& exact, double n_sigma) const {
  const auto ok = [n_sigma](double est, double se, double ref) {
    return std::abs(est - ref) <= n_sigma * se + 1e-12;
  };
  return ok(mean.avg_robertson, standard_error.avg_robertson, exact.avg_robertson) &&
         ok(mean.avg_schrodinger, standard_error.avg_schrodinger, exact.avg_schrodinger) &&
         ok(mean.avg_luo, standard_error.avg_luo, exact.avg_luo) &&
         ok(mean.avg_optimal, standard_error.avg_optimal, exact.avg_optimal) &&
         ok(mean.avg_sharp, standard_error.avg_sharp, exact.avg_sharp) &&
         ok(mean.avg_variance_product, standard_error.avg_variance_product,
            exact.avg_variance_product);
}

MonteCarloBounds averaged_bounds_monte_carlo(double p, std::uint64_t samples,
                                             std::uint64_t seed, double s,
                                             unsigned workers) {
  require_purity(p);
  if (samples == 0) throw Error(ErrorKind::DomainError, "Monte Carlo needs at least one sample");

  const double r = std::sqrt(std::max(2.0 * p - 1.0, 0.0));
  const DensityMatrix rho = from_bloch(make_bloch(std::min(r, 1.0), {0.0, 0.0, 1.0}));
  const ProductEvaluator products(rho, s);
  std::optional<BoundEvaluator> limit;
  if (is_maximally_mixed(rho)) {
    limit.emplace(from_bloch(make_bloch(kLimitRadius, {0.0, 0.0, 1.0})), s);
  }

  const RandomStream root(seed);
  const std::uint64_t n_blocks = (samples + kBlockSize - 1) / kBlockSize;
  std::vector<Block> blocks(n_blocks);

  const auto run_block = [&](std::uint64_t block) {
    Block acc{};
    const std::uint64_t begin = block * kBlockSize;
    const std::uint64_t end = std::min(samples, begin + kBlockSize);
    for (std::uint64_t i = begin; i < end; ++i) {
      RandomStream stream = root.substream(i);
      const Observable a = make_observable(pauli_dot(random_unit_vector3(stream)));
      const Observable b = make_observable(pauli_dot(random_unit_vector3(stream)));
      const ProductReport rep = products.report(a, b);
      const double optimal =
          limit ? limit->quantum_term(a) * limit->quantum_term(b) : rep.optimal_product;
      acc[0].add(rep.robertson);
      acc[1].add(rep.schrodinger);
      acc[2].add(rep.luo_product);
      acc[3].add(optimal);
      acc[4].add(rep.sharp_product);
      acc[5].add(rep.variance_product);
    }
    blocks[block] = acc;
  };

  const unsigned n_workers = std::max(1u, workers);
  if (n_workers == 1) {
    for (std::uint64_t k = 0; k < n_blocks; ++k) run_block(k);
  } else {
    std::atomic<std::uint64_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < n_workers; ++w) {
      pool.emplace_back([&] {
        for (std::uint64_t k = next++; k < n_blocks; k = next++) run_block(k);
      });
    }
    for (auto& t : pool) t.join();
  }

  Block total{};
  for (const Block& blk : blocks) {
    for (std::size_t c = 0; c < kColumns; ++c) total[c].merge(blk[c]);
  }
  std::array<double, kColumns> means{};
  std::array<double, kColumns> errors{};
  for (std::size_t c = 0; c < kColumns; ++c) {
    means[c] = total[c].mean;
    errors[c] = total[c].standard_error();
  }

  MonteCarloBounds out;
  out.mean = to_bounds(p, means);
  out.standard_error = to_bounds(p, errors);
  out.samples = samples;
  return out;
}

}  // namespace qunc
