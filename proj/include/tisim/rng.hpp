// Copyright 2026 The tisim developers.
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

#ifndef TISIM_RNG_HPP
#define TISIM_RNG_HPP

#include <cstdint>

namespace tisim {

/// Deterministic 64-bit random stream (SplitMix64).
///
/// Every stochastic operation in the library draws from one of these,
/// so a run is fully determined by its seed schedule. The generator is
/// self-contained (no std::random engines) to keep output bit-identical
/// across platforms and standard-library versions.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : state_(seed), seed_(seed) {}

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform01() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    std::uint64_t seed() const { return seed_; }

private:
    std::uint64_t state_;
    std::uint64_t seed_;
};

/// Stateless per-trial seed derivation: trial i of a batch keyed by
/// `master_seed` always receives the same stream, no matter in which
/// order (or on which thread) the trials execute.
///
///   trial_seed(m, i) = mix64(m + (i + 1) * 0x9E3779B97F4A7C15)
inline std::uint64_t derive_trial_seed(std::uint64_t master_seed, std::uint64_t trial_index) {
    std::uint64_t z = master_seed + (trial_index + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

} // namespace tisim

#endif // TISIM_RNG_HPP
