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

#include "rotovqe/angles.hpp"

namespace rotovqe {

/// The three energy probes that determine a one-coordinate energy curve:
/// values at offset phi and at phi +- pi/2. The offset is a free choice.
struct ProbeTriple {
    double phi = 0.0;
    double m_at_phi = 0.0;
    double m_plus = 0.0;  // at phi + pi/2
    double m_minus = 0.0; // at phi - pi/2
};

/// E(theta) = A sin(theta + B) + C with A >= 0 and B in (-pi, pi].
struct SinusoidFit {
    double amplitude = 0.0;
    double phase = 0.0;
    double intercept = 0.0;

    double value_at(double theta) const;
};

/// Recover (A, B, C) from three probes:
///   C = (m_plus + m_minus) / 2
///   B = atan2(2 m_at_phi - m_plus - m_minus, m_plus - m_minus) - phi
///   A = sqrt((2 m_at_phi - m_plus - m_minus)^2 + (m_plus - m_minus)^2) / 2
/// A flat triple (both atan2 arguments zero) gets the convention B = 0.
SinusoidFit fit(const ProbeTriple& probes);

/// The minimizing angle
///   theta* = phi - pi/2 - atan2(2 m_at_phi - m_plus - m_minus,
///                               m_plus - m_minus),
/// wrapped into (-pi, pi]. Callers are expected to check the fitted
/// amplitude first: below their flatness threshold the coordinate is
/// redundant and the current angle should be kept instead.
double optimal_angle(const ProbeTriple& probes);

/// Energy attained at the minimizer, -A + C; costs no extra probe.
double extrapolated_minimum(const SinusoidFit& f);

} // namespace rotovqe
