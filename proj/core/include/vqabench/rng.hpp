// Copyright 2026 The vqabench authors
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

#pragma once

#include <cstdint>

namespace vqabench::rng {

/// SplitMix64 finalizer. Bit-stable across platforms; all randomness in the
/// toolkit flows through this so results depend only on the seeds.
inline std::uint64_t mix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Counter-based child seed for trajectory (or instance) `index` under a
/// master seed. Independent of evaluation order by construction.
inline std::uint64_t child_seed(std::uint64_t master, std::uint64_t index) noexcept {
    return mix64(master + 0x9E3779B97F4A7C15ULL * (index + 1));
}

/// Minimal deterministic PRNG (SplitMix64 sequence).
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    std::uint64_t next_u64() noexcept {
        state_ += 0x9E3779B97F4A7C15ULL;
        return mix64(state_);
    }

    /// Uniform double in [0, 1), 53 mantissa bits.
    double next_double() noexcept {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi) noexcept {
        return lo + (hi - lo) * next_double();
    }

    /// Uniform integer in [0, bound).
    std::uint64_t next_below(std::uint64_t bound) noexcept {
        return next_u64() % bound;
    }

  private:
    std::uint64_t state_;
};

}  // namespace vqabench::rng
