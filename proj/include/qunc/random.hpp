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

#ifndef QUNC_RANDOM_HPP
#define QUNC_RANDOM_HPP

#include <array>
#include <cstdint>
#include <limits>
#include <random>

namespace qunc {

/// SplitMix64 finaliser; a bijective 64-bit mixer.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Seeded SplitMix64 stream.
///
/// A stream is identified by a 64-bit key. `substream(i)` derives a child
/// key from the parent key alone, so the i-th child is the same no matter
/// how many values were drawn from the parent or in which order children are
/// created. This is what lets Monte Carlo work be split across workers while
/// staying deterministic per seed.
class RandomStream {
 public:
  using result_type = std::uint64_t;

  explicit RandomStream(std::uint64_t seed = 0) noexcept : key_(seed), state_(mix64(seed)) {}

  RandomStream substream(std::uint64_t index) const noexcept {
    return RandomStream(mix64(key_ ^ mix64(index + 0x632be59bd9b4e019ULL)));
  }

  std::uint64_t key() const noexcept { return key_; }

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

  result_type operator()() noexcept {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Standard normal variate.
  double normal() { return normal_(*this); }

 private:
  std::uint64_t key_;
  std::uint64_t state_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

/// Uniform point on the unit sphere S^2 (normalised Gaussian triple).
std::array<double, 3> random_unit_vector3(RandomStream& stream);

}  // namespace qunc

#endif  // QUNC_RANDOM_HPP
