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
#include "rotovqe/sinusoid.hpp"

#include <cmath>
#include <stdexcept>

namespace rotovqe {

namespace {
void check_finite(const ProbeTriple& p) {
    if (!std::isfinite(p.phi) || !std::isfinite(p.m_at_phi) || !std::isfinite(p.m_plus) ||
        !std::isfinite(p.m_minus)) {
        throw std::invalid_argument("probe triple contains a non-finite value");
    }
}
} // namespace

double SinusoidFit::value_at(double theta) const { return amplitude * std::sin(theta + phase) + intercept; }

SinusoidFit fit(const ProbeTriple& probes) {
    check_finite(probes);
    const double num = 2.0 * probes.m_at_phi - probes.m_plus - probes.m_minus; // ~ A sin(phi + B)
    const double den = probes.m_plus - probes.m_minus;                          // ~ A cos(phi + B)
    SinusoidFit f;
    f.intercept = 0.5 * (probes.m_plus + probes.m_minus);
    f.amplitude = 0.5 * std::sqrt(num * num + den * den);
    f.phase = (num == 0.0 && den == 0.0) ? 0.0 : wrap_angle(std::atan2(num, den) - probes.phi);
    return f;
}

double optimal_angle(const ProbeTriple& probes) {
    check_finite(probes);
    const double num = 2.0 * probes.m_at_phi - probes.m_plus - probes.m_minus;
    const double den = probes.m_plus - probes.m_minus;
    return wrap_angle(probes.phi - 0.5 * kPi - std::atan2(num, den));
}

double extrapolated_minimum(const SinusoidFit& f) { return -f.amplitude + f.intercept; }

} // namespace rotovqe
