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

namespace rotovqe {

inline constexpr double kPi = 3.14159265358979323846;

/// Canonicalize an angle to the half-open interval (-pi, pi].
/// The -pi boundary maps to +pi.
inline double wrap_angle(double theta) {
    double a = std::fmod(theta, 2.0 * kPi);
    if (a <= -kPi) {
        a += 2.0 * kPi;
    } else if (a > kPi) {
        a -= 2.0 * kPi;
    }
    return a;
}

} // namespace rotovqe
