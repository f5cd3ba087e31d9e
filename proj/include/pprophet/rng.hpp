// Copyright 2026 The Poisson Prophet Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PPROPHET_RNG_HPP_
#define PPROPHET_RNG_HPP_

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>

namespace pprophet {

class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t seed) : state_(seed) {}

  constexpr std::uint64_t operator()() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

// xoshiro256** 1.0 (Blackman & Vigna). Satisfies UniformRandomBitGenerator.
class Xoshiro256 {
 public:
  using result_type = std::uint64_t;

  explicit constexpr Xoshiro256(std::uint64_t seed) {
    SplitMix64 sm(seed);
    for (auto& w : s_) w = sm();
  }

  // Independent stream for (seed, index): index is mixed through SplitMix64
  // before seeding, so streams for adjacent indices are decorrelated.
  static constexpr Xoshiro256 substream(std::uint64_t seed,
                                        std::uint64_t index) {
    SplitMix64 mix(seed ^ (0xd1b54a32d192ed03ULL * (index + 1)));
    mix();
    return Xoshiro256(mix());
  }

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }

  constexpr result_type operator()() {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

 private:
  static constexpr std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::array<std::uint64_t, 4> s_{};
};

// Uniform draws on the open interval (0, 1), (2m + 1) * 2^-53. The grid is
// symmetric, so 1 - u is exact and also lies in (0, 1).
class UniformSource {
 public:
  explicit UniformSource(Xoshiro256 gen, bool complement = false)
      : gen_(gen), complement_(complement) {}

  double operator()() {
    const double u =
        (static_cast<double>(gen_() >> 12) + 0.5) * 0x1.0p-52;
    return complement_ ? 1.0 - u : u;
  }

  // Unit-rate exponential by inversion.
  double exponential() { return -std::log((*this)()); }

 private:
  Xoshiro256 gen_;
  bool complement_;
};

}  // namespace pprophet

#endif  // PPROPHET_RNG_HPP_
