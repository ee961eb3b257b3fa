// Copyright 2026 The Coverlife Authors
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

#ifndef COVERLIFE_SPLITMIX_H_
#define COVERLIFE_SPLITMIX_H_

#include <cstdint>

namespace coverlife {

// SplitMix64 stream. The constants are fixed so that instances generated
// from a seed are bit-identical across platforms and languages.
class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t seed) : state_(seed) {}

  constexpr std::uint64_t Next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1) with 53 random mantissa bits.
  constexpr double NextUniform() {
    return static_cast<double>(Next() >> 11) * 0x1.0p-53;
  }

  constexpr std::uint64_t state() const { return state_; }

 private:
  std::uint64_t state_;
};

// One SplitMix64 step from `value`, used to derive decorrelated seeds.
constexpr std::uint64_t MixSeed(std::uint64_t value) {
  return SplitMix64(value).Next();
}

}  // namespace coverlife

#endif  // COVERLIFE_SPLITMIX_H_
