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

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "oracles.hpp"
#include "qunc/bounds.hpp"
#include "qunc/errors.hpp"

using namespace qunc;

namespace {

constexpr double kPi = std::numbers::pi;

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected a qunc::Error");
  return ErrorKind::DomainError;
}

DensityMatrix diag_state(std::initializer_list<double> values) {
  return make_density(oracle::diag(values));
}

Observable obs(const ComplexMatrix& m) { return make_observable(m); }

// Bloch state along z and the spin observable at angle theta in the x-z plane.
DensityMatrix qubit_state(double r) { return from_bloch(make_bloch(r, {0.0, 0.0, 1.0})); }
Observable spin_at(double theta) {
  return obs(pauli_dot({std::sin(theta), 0.0, std::cos(theta)}));
}

DensityMatrix state_with_spectrum(const std::vector<double>& lambda, RandomStream& stream) {
  const int dim = static_cast<int>(lambda.size());
  const ComplexMatrix u = herm_eig(random_observable(dim, stream).matrix()).eigenvectors;
  ComplexMatrix d = ComplexMatrix::Zero(dim, dim);
  for (int i = 0; i < dim; ++i) d(i, i) = lambda[static_cast<std::size_t>(i)];
  const ComplexMatrix m = u * d * u.adjoint();
  return make_density(0.5 * (m + m.adjoint()));
}

const double kSValues[] = {0.5, 0.75, 1.0, 1.5, 2.0};

}  // namespace

TEST_CASE("variance examples") {
  CHECK(variance(diag_state({1.0, 0.0}), obs(pauli_z())) == 0.0);
  CHECK(variance(diag_state({0.5, 0.5}), obs(pauli_z())) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(variance(diag_state({0.7, 0.3}), obs(pauli_z())) == doctest::Approx(0.84).epsilon(1e-14));
  CHECK(kind_of([] { variance(diag_state({0.5, 0.5}), obs(ComplexMatrix::Identity(3, 3))); }) ==
        ErrorKind::DimensionMismatch);
}

TEST_CASE("covariance examples") {
  const DensityMatrix mixed = diag_state({0.5, 0.5});
  const DensityMatrix rho = diag_state({0.7, 0.3});
  CHECK(covariance(rho, obs(pauli_x()), obs(pauli_x())) == doctest::Approx(variance(rho, obs(pauli_x()))));
  CHECK(covariance(rho, obs(pauli_z()), obs(pauli_z())) == doctest::Approx(0.84));
  CHECK(std::abs(covariance(mixed, obs(pauli_x()), obs(pauli_y()))) < 1e-15);
  CHECK(covariance(mixed, obs(pauli_x()), obs(pauli_x() + pauli_z())) ==
        doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("comm_norm_sq examples") {
  const DensityMatrix rho = diag_state({0.7, 0.3});
  for (double s : kSValues) CHECK(comm_norm_sq(rho, obs(pauli_z()), s) == 0.0);
  CHECK(comm_norm_sq(rho, obs(pauli_x()), 1.0) == doctest::Approx(0.32).epsilon(1e-14));
  CHECK(kind_of([&] { comm_norm_sq(rho, obs(pauli_x()), 0.4); }) == ErrorKind::InvalidS);

  for (double r : {0.2, 0.5, 0.9, 1.0}) {
    for (double theta : {0.0, 0.4, kPi / 2, 2.5}) {
      for (double s : kSValues) {
        const double lp = (1 + r) / 2, lm = (1 - r) / 2;
        const double d = std::pow(lp, s) - std::pow(lm, s);
        const double expect = 2.0 * d * d * std::sin(theta) * std::sin(theta);
        CHECK(std::abs(comm_norm_sq(qubit_state(r), spin_at(theta), s) - expect) < 1e-14);
      }
    }
  }
}

TEST_CASE("optimal_coefficient examples") {
  CHECK(*optimal_coefficient(diag_state({0.7, 0.3}), 1.0) == doctest::Approx(3.125).epsilon(1e-14));
  CHECK_FALSE(optimal_coefficient(make_density(ComplexMatrix::Identity(3, 3) / 3.0), 1.0));

  // At s = 1/2 the coefficient is >= 1/2, with equality iff lambda_min = 0.
  for (double r : {0.1, 0.5, 0.9, 0.999}) {
    const double c = *optimal_coefficient(qubit_state(r), 0.5);
    const double d = std::sqrt((1 + r) / 2) - std::sqrt((1 - r) / 2);
    CHECK(c == doctest::Approx(1.0 / (2.0 * d * d)).epsilon(1e-13));
    CHECK(c > 0.5);
  }
  CHECK(*optimal_coefficient(qubit_state(1.0), 0.5) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(kind_of([] { optimal_coefficient(diag_state({0.7, 0.3}), 0.0); }) == ErrorKind::InvalidS);
}

TEST_CASE("pinch examples") {
  CHECK(pinch(diag_state({0.7, 0.3}), obs(pauli_x())).matrix().norm() == 0.0);

  RandomStream stream(3);
  const Observable a = random_observable(3, stream);
  const DensityMatrix mixed = make_density(ComplexMatrix::Identity(3, 3) / 3.0);
  CHECK((pinch(mixed, a).matrix() - a.matrix()).norm() < 1e-14);

  ComplexMatrix m(3, 3);
  m << 1.0, 2.0, 3.0, 2.0, -1.0, 4.0, 3.0, 4.0, 0.5;
  ComplexMatrix expected(3, 3);
  expected << 1.0, 2.0, 0.0, 2.0, -1.0, 0.0, 0.0, 0.0, 0.5;
  CHECK((pinch(diag_state({0.4, 0.4, 0.2}), obs(m)).matrix() - expected).norm() < 1e-14);
}

TEST_CASE("classical_variance examples") {
  CHECK(classical_variance(diag_state({0.7, 0.3}), obs(pauli_x())) == 0.0);

  RandomStream stream(8);
  for (int d = 2; d <= 6; ++d) {
    const Observable a = random_observable(d, stream);
    const DensityMatrix mixed = make_density(ComplexMatrix::Identity(d, d) / double(d));
    const ComplexMatrix a0 =
        a.matrix() - (a.matrix().trace() / double(d)) * ComplexMatrix::Identity(d, d);
    const double expected = hs_norm_sq(a0) / d;
    CHECK(classical_variance(mixed, a) == doctest::Approx(expected).epsilon(1e-12));
    CHECK(variance(mixed, a) == doctest::Approx(expected).epsilon(1e-12));
  }

  for (double r : {0.1, 0.6, 1.0}) {
    for (double theta : {0.0, 0.7, kPi / 2, 2.9}) {
      const double c = std::cos(theta);
      CHECK(std::abs(classical_variance(qubit_state(r), spin_at(theta)) - (1 - r * r) * c * c) <
            1e-14);
    }
  }
}

TEST_CASE("single_bound_report examples") {
  const BoundReport r = single_bound_report(diag_state({0.7, 0.3}), obs(pauli_x()), 1.0);
  CHECK(r.variance == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(r.classical_variance == 0.0);
  REQUIRE(r.coefficient);
  CHECK(*r.coefficient == doctest::Approx(3.125));
  CHECK(r.comm_norm_sq == doctest::Approx(0.32));
  CHECK(r.sharp_bound == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(std::abs(r.slack) < 1e-14);
  CHECK_FALSE(r.luo_valid);
  CHECK(r.luo_bound == doctest::Approx(0.16));

  RandomStream stream(4);
  for (int d = 2; d <= 5; ++d) {
    const DensityMatrix mixed = make_density(ComplexMatrix::Identity(d, d) / double(d));
    const BoundReport m = single_bound_report(mixed, random_observable(d, stream), 0.5);
    CHECK_FALSE(m.coefficient);
    CHECK(m.optimal_bound == 0.0);
    CHECK(m.sharp_bound == doctest::Approx(m.variance).epsilon(1e-13));
    CHECK(m.classical_variance == doctest::Approx(m.variance).epsilon(1e-13));
    CHECK(std::abs(m.slack) < 1e-13);
    CHECK(m.luo_valid);
  }

  // Pure qubit: the optimal bound alone equals the variance.
  for (double theta : {0.0, 0.3, 1.2, kPi / 2, 2.4}) {
    for (double s : kSValues) {
      const BoundReport p = single_bound_report(qubit_state(1.0), spin_at(theta), s);
      CHECK(std::abs(p.optimal_bound - p.variance) < 1e-12);
    }
  }
}

TEST_CASE("near-degenerate spectra use the stable quantum term") {
  for (double r : {1e-9, 1e-8, 3e-7}) {
    for (double theta : {0.3, 1.1, kPi / 2}) {
      for (double s : kSValues) {
        const BoundReport rep = single_bound_report(qubit_state(r), spin_at(theta), s);
        CHECK(std::abs(rep.optimal_bound - std::sin(theta) * std::sin(theta)) < 1e-9);
        CHECK(std::abs(rep.slack) < 1e-9);
      }
    }
  }
  // Below the mixed threshold the state counts as maximally mixed.
  const BoundReport tiny = single_bound_report(qubit_state(1e-12), spin_at(0.5), 1.0);
  CHECK_FALSE(tiny.coefficient);
  CHECK(std::abs(tiny.slack) < 1e-12);
}

TEST_CASE("tight_witness examples") {
  const DensityMatrix two = diag_state({0.3, 0.7});
  const Observable w2 = tight_witness(two);
  CHECK(std::abs(std::abs(w2.matrix()(0, 1)) - 1.0) < 1e-15);
  CHECK(std::abs(w2.matrix()(0, 0)) + std::abs(w2.matrix()(1, 1)) < 1e-15);

  const DensityMatrix three = diag_state({0.5, 0.3, 0.2});
  const Observable w3 = tight_witness(three);
  CHECK(std::abs(std::abs(w3.matrix()(0, 2)) - 1.0) < 1e-15);
  CHECK(w3.matrix().cwiseAbs().sum() == doctest::Approx(2.0).epsilon(1e-15));

  for (const DensityMatrix* rho : {&two, &three}) {
    const Observable w = tight_witness(*rho);
    for (double s : {0.5, 1.0, 2.0}) {
      const BoundReport r = single_bound_report(*rho, w, s);
      CHECK(std::abs(r.slack) < 1e-12);
      CHECK(std::abs(r.classical_variance) < 1e-12);
    }
  }

  CHECK(kind_of([] { tight_witness(make_density(ComplexMatrix::Identity(3, 3) / 3.0)); }) ==
        ErrorKind::MaximallyMixedState);
}

TEST_CASE("coherence_report examples") {
  const CoherenceReport commuting = coherence_report(diag_state({0.6, 0.3, 0.1}),
                                                     obs(oracle::diag({1.0, 2.0, 2.0})));
  CHECK(commuting.coherence < 1e-28);
  CHECK(commuting.decoherence_bound < 1e-26);
  CHECK(commuting.delta_a == doctest::Approx(1.0));

  for (double r : {0.2, 0.7, 1.0}) {
    for (double theta : {0.4, 1.3, kPi / 2}) {
      const CoherenceReport q = coherence_report(qubit_state(r), spin_at(theta));
      const double sn2 = std::sin(theta) * std::sin(theta);
      CHECK(q.delta_a == doctest::Approx(2.0).epsilon(1e-14));
      CHECK(q.coherence == doctest::Approx(r * r * sn2 / 2.0).epsilon(1e-12));
      CHECK(std::abs(q.decoherence_bound - sn2) < 1e-12);
      CHECK(std::abs(q.s1_bound - sn2) < 1e-12);
    }
  }

  RandomStream stream(21);
  const DensityMatrix rho = random_density(3, 3, stream);
  const CoherenceReport c = coherence_report(rho, obs(oracle::diag({0.0, 1.0, 3.0})));
  CHECK(c.delta_a == doctest::Approx(1.0));
  CHECK(c.decoherence_bound < c.s1_bound - 1e-6);

  CHECK(kind_of([&] { coherence_report(rho, obs(ComplexMatrix::Identity(3, 3))); }) ==
        ErrorKind::ScalarObservable);
}

TEST_CASE("lemma_ratio examples") {
  CHECK(lemma_ratio(0.4, 0.4, 0.5) == 0.0);
  CHECK(lemma_ratio(0.75, 0.25, 0.5) == doctest::Approx(0.13397459621556132).epsilon(1e-15));
  CHECK(lemma_ratio(0.9, 0.1, 0.5) == doctest::Approx(0.4).epsilon(1e-14));
  CHECK(kind_of([] { lemma_ratio(0.0, 0.5, 0.5); }) == ErrorKind::NonPositiveInput);
  CHECK(kind_of([] { lemma_ratio(0.5, -1.0, 0.5); }) == ErrorKind::NonPositiveInput);
  CHECK(kind_of([] { lemma_ratio(0.5, 0.2, 0.3); }) == ErrorKind::InvalidS);
}

TEST_CASE("lemma_scan agrees with a brute-force grid") {
  for (double s : {0.5, 0.75, 1.0, 2.0}) {
    const double m = 0.1, big_m = 0.9;
    const int grid = 200;
    double best = 0.0;
    for (int i = 0; i < grid; ++i) {
      for (int j = 0; j < grid; ++j) {
        const double x = m + (big_m - m) * i / (grid - 1.0);
        const double y = m + (big_m - m) * j / (grid - 1.0);
        if (x != y) best = std::max(best, oracle::lemma_f(x, y, s));
      }
    }
    const LemmaScan scan = lemma_scan(m, big_m, grid, s);
    CHECK(scan.holds);
    CHECK(scan.grid_max == doctest::Approx(best).epsilon(1e-13));
    CHECK(scan.argmax_x == doctest::Approx(big_m));
    CHECK(scan.argmax_y == doctest::Approx(m));
    CHECK(scan.corner_value == doctest::Approx(oracle::lemma_f(big_m, m, s)).epsilon(1e-13));
  }
  CHECK(kind_of([] { lemma_scan(0.5, 0.5 - 1e-3, 10, 0.5); }) == ErrorKind::DomainError);
  CHECK(kind_of([] { lemma_scan(0.9 - 1e-12, 0.9, 10, 0.5); }) == ErrorKind::DomainError);
  CHECK(kind_of([] { lemma_scan(0.0, 0.9, 10, 0.5); }) == ErrorKind::DomainError);
}

TEST_CASE("property: sharp bound holds and matches the eigenbasis oracle") {
  RandomStream root(1001);
  for (int t = 0; t < 700; ++t) {
    RandomStream stream = root.substream(static_cast<std::uint64_t>(t));
    const int dim = 2 + t % 7;
    const int rank = (t / 7) % 2 == 0 ? dim : 1 + (t / 14) % dim;
    const DensityMatrix rho = random_density(dim, rank, stream);
    const Observable a = random_observable(dim, stream);
    for (double s : kSValues) {
      const BoundReport r = single_bound_report(rho, a, s);
      CHECK(r.slack >= -1e-9);
      CHECK(r.optimal_bound <= r.sharp_bound + 1e-15);
      CHECK(r.classical_variance <= r.variance + 1e-12);
      const double ref = oracle::comm_double_sum(rho.matrix(), a.matrix(), s);
      CHECK(std::abs(r.comm_norm_sq - ref) <= 1e-10 * std::max(ref, 1e-300) + 1e-15);
      CHECK(std::abs(r.variance - oracle::variance(rho.matrix(), a.matrix())) < 1e-12);
    }
    const BoundReport half = single_bound_report(rho, a, 0.5);
    CHECK(half.variance >= half.sharp_bound - 1e-9);
    CHECK(half.sharp_bound >= half.optimal_bound - 1e-10);
    CHECK(half.optimal_bound >= half.luo_bound - 1e-10);
  }
}

TEST_CASE("property: pinching") {
  RandomStream root(314);
  for (int t = 0; t < 300; ++t) {
    RandomStream stream = root.substream(static_cast<std::uint64_t>(t));
    const int dim = 2 + t % 6;
    const DensityMatrix rho = random_density(dim, 1 + t % dim, stream);
    const Observable a = random_observable(dim, stream);
    const Observable p = pinch(rho, a);
    CHECK((pinch(rho, p).matrix() - p.matrix()).norm() < 1e-10);
    CHECK(commutator(p.matrix(), rho.matrix()).norm() < 1e-10);
    CHECK(std::abs(expectation(rho, p.matrix()) - expectation(rho, a.matrix())) < 1e-10);
    CHECK(std::abs(p.matrix().trace() - a.matrix().trace()) < 1e-10);
    CHECK(classical_variance(rho, a) <= variance(rho, a) + 1e-10);
  }
}

TEST_CASE("property: degenerate spectra keep the decomposition exact") {
  RandomStream root(55);
  for (int t = 0; t < 100; ++t) {
    RandomStream stream = root.substream(static_cast<std::uint64_t>(t));
    const DensityMatrix rho = state_with_spectrum({0.1, 0.1, 0.4, 0.4}, stream);
    REQUIRE(rho.spectrum().clusters.size() == 2);
    const Observable a = random_observable(4, stream);
    for (double s : kSValues) {
      // With two distinct eigenvalues every cross pair is extremal.
      CHECK(std::abs(single_bound_report(rho, a, s).slack) < 1e-12);
    }
  }
}

TEST_CASE("property: coefficient depends only on the extreme eigenvalues") {
  RandomStream root(77);
  for (int t = 0; t < 100; ++t) {
    RandomStream stream = root.substream(static_cast<std::uint64_t>(t));
    const int dim = 4 + t % 5;
    std::vector<double> lambda(static_cast<std::size_t>(dim));
    lambda.front() = 0.05;
    lambda.back() = 0.4;
    const double interior = (1.0 - 0.45) / (dim - 2);
    for (int i = 1; i < dim - 1; ++i) lambda[static_cast<std::size_t>(i)] = interior;
    std::vector<double> moved = lambda;
    const double delta = 0.3 * std::min(interior - 0.05, 0.4 - interior) * (1 + t % 3) / 3.0;
    moved[1] += delta;
    moved[2] -= delta;
    const DensityMatrix a = state_with_spectrum(lambda, stream);
    const DensityMatrix b = state_with_spectrum(moved, stream);
    for (double s : kSValues) {
      CHECK(std::abs(*optimal_coefficient(a, s) - *optimal_coefficient(b, s)) <= 1e-12);
    }
  }
}

TEST_CASE("property: the witness certifies optimality of the coefficient") {
  RandomStream root(900);
  for (int t = 0; t < 100; ++t) {
    RandomStream stream = root.substream(static_cast<std::uint64_t>(t));
    const int dim = 2 + t % 5;
    const DensityMatrix rho = random_density(dim, 1 + (t / 5) % dim, stream);
    const Observable w = tight_witness(rho);
    for (double s : kSValues) {
      const BoundReport r = single_bound_report(rho, w, s);
      CHECK(std::abs(r.slack) <= 1e-9);
      const double inflated =
          r.variance - (r.classical_variance + (1.0 + 1e-6) * *r.coefficient * r.comm_norm_sq);
      CHECK(inflated < 0.0);
    }
  }
}

TEST_CASE("property: coherence chain") {
  RandomStream root(4242);
  for (int t = 0; t < 300; ++t) {
    RandomStream stream = root.substream(static_cast<std::uint64_t>(t));
    const int dim = 2 + t % 6;
    const DensityMatrix rho = random_density(dim, 1 + t % dim, stream);
    const Observable a = random_observable(dim, stream);
    const CoherenceReport c = coherence_report(rho, a);
    CHECK(c.decoherence_bound <= c.s1_bound + 1e-10);
    CHECK(c.s1_bound <= variance(rho, a) + 1e-10);
    if (dim == 2) CHECK(std::abs(c.decoherence_bound - c.s1_bound) <= 1e-10);
  }
}
