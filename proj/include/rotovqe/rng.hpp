// Copyright 2026 The rotovqe developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <cmath>
#include <cstdint>

namespace rotovqe {

/// SplitMix64 stream (Steele, Lea & Flood 2014). Every random draw in this
/// library goes through one of these so that results are bit-reproducible
/// across platforms; std::random distributions are never used.
///
/// Streams are derived, not advanced: `derive(seed, salt...)` hashes a seed
/// together with integer salts (trial index, evaluation index, term index, ...)
/// into a new independent stream, which makes parallel evaluation reproducible
/// regardless of scheduling.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1) with 53 significant bits.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform angle in (-pi, pi]; u = 0 maps to +pi, the closed endpoint.
    double next_angle() {
        const double pi = 3.14159265358979323846;
        return pi - 2.0 * pi * next_double();
    }

    /// Uniform integer in [0, n).
    std::uint64_t next_below(std::uint64_t n) { return next_u64() % n; }

    bool next_bernoulli(double p) { return next_double() < p; }

    /// +1 or -1 with equal probability.
    int next_sign() { return (next_u64() & 1ULL) ? 1 : -1; }

    /// Standard normal via Box-Muller (one value per call; no cached spare,
    /// so the stream position is a pure function of the call count).
    double next_normal() {
        double u1 = next_double();
        while (u1 <= 0.0) u1 = next_double();
        const double u2 = next_double();
        const double two_pi = 6.28318530717958647692;
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(two_pi * u2);
    }

  private:
    std::uint64_t state_;
};

namespace detail {
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}
} // namespace detail

/// Hash a seed with integer salts into a new stream seed.
inline std::uint64_t derive_seed(std::uint64_t seed) { return detail::mix64(seed + 0x9E3779B97F4A7C15ULL); }

template <typename... Salts>
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt, Salts... rest) {
    return derive_seed(detail::mix64(seed ^ (salt + 0x9E3779B97F4A7C15ULL + (seed << 6) + (seed >> 2))), rest...);
}

/// Named sub-stream salts used across the library. Keeping them in one place
/// guarantees that e.g. circuit initialization and SPSA perturbations never
/// alias even when run from the same master seed.
enum StreamSalt : std::uint64_t {
    kStreamCircuitInit = 1,
    kStreamOptimizer = 2,
    kStreamEstimator = 3,
    kStreamTarget = 4,
    kStreamTrial = 5,
};

} // namespace rotovqe
