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

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "rotovqe/circuit.hpp"
#include "rotovqe/estimator.hpp"

namespace rotovqe {

/// Conditions that end an optimization run. Any subset may be active; the
/// first to trigger wins. At least one must be set.
///   - max_cycles: fixed budget of full coordinate cycles (steps, for the
///     gradient optimizers).
///   - no_improve: stop after `cycles` consecutive cycles in which the best
///     energy decreased by less than `min_decrease`.
///   - max_evaluations: stop at the first update boundary where the counter
///     has reached the limit.
///   - target_energy: stop once the bookkeeping energy is at or below this.
struct StopRule {
    std::optional<int> max_cycles;
    std::optional<int> no_improve_cycles;
    double min_decrease = 0.0;
    std::optional<long long> max_evaluations;
    std::optional<double> target_energy;

    static StopRule cycles(int k1);
    static StopRule no_improvement(int k2, double min_decrease);
    static StopRule evaluations(long long limit);

    StopRule& with_target_energy(double e) {
        target_energy = e;
        return *this;
    }
    StopRule& with_max_cycles(int k1) {
        max_cycles = k1;
        return *this;
    }

    void validate() const;
};

/// Choice of probe offset phi for Rotosolve updates. CurrentAngle keeps the
/// probe at the operating point (and is what evaluation reuse requires);
/// Zero and Random are the other policies the update formula admits.
enum class PhiPolicy { CurrentAngle, Zero, Random };

struct RotoOptions {
    PhiPolicy phi_policy = PhiPolicy::CurrentAngle;
    /// Reuse the previous update's energy so Rotosolve probes twice and
    /// Rotoselect six times per update instead of 3 and 7.
    bool reuse = false;
    /// Below this fitted amplitude a coordinate is considered redundant and
    /// its angle is kept. The exact-mode default is tight; the sampled-mode
    /// threshold only guards exact zeros since noise rarely produces them.
    double flat_threshold_exact = 1e-9;
    double flat_threshold_sampled = 1e-12;
    /// Rotoselect reuse is singular where |cos theta_d| is below this; the
    /// update then falls back to measuring the shared probe directly.
    double reuse_cos_threshold = 1e-6;
    /// Record the exact energy next to every sampled record (uncounted).
    bool track_exact_energy = false;
};

struct TraceRecord {
    int cycle = 0;
    int gate_index = 0; // -1 for whole-vector (gradient) steps
    long long cumulative_evals = 0;
    /// Estimator-mode energy after the update: the extrapolated minimum for
    /// the coordinate methods, the exact energy for gradient methods in exact
    /// mode, NaN for gradient methods in sampled mode.
    double energy = 0.0;
    std::optional<double> exact_energy;
    std::optional<Pauli> generator;
    bool reuse_fallback = false;
};

struct OptimizerTrace {
    std::vector<TraceRecord> records;
    double best_energy = std::numeric_limits<double>::quiet_NaN();
    std::optional<double> best_exact_energy;
    std::vector<double> best_angles;
    std::vector<Pauli> best_generators; // empty when generators are not Pauli axes
    std::vector<double> final_angles;
    std::optional<Circuit> final_circuit;
    long long total_evals = 0;
    int cycles_completed = 0;
    std::string stop_reason;
};

struct RotosolveUpdateResult {
    double angle = 0.0;
    double energy = 0.0; // extrapolated minimum (the intercept, if flat)
    bool flat = false;
};

/// One Rotosolve coordinate update: probe the energy at phi and phi +- pi/2
/// with gate d's generator fixed, move the angle to the closed-form
/// minimizer, and return the extrapolated minimum. 3 evaluations; 2 if
/// `known_energy` (the energy at the current parameters) is supplied with
/// options.reuse, in which case phi is pinned to the current angle.
RotosolveUpdateResult rotosolve_update(Circuit& circuit, int d, const Estimator& estimator,
                                       EvalCounter& counter, const RotoOptions& options = {},
                                       std::optional<double> phi_override = std::nullopt,
                                       std::optional<double> known_energy = std::nullopt);

struct RotoselectUpdateResult {
    Pauli generator = Pauli::Z;
    double angle = 0.0;
    double energy = 0.0;
    bool flat = false;
    bool reused = false;
    bool reuse_fallback = false;
};

/// One Rotoselect update: with phi = 0 the probe at the origin is shared by
/// all three generators, so X, Y, Z are scored with 7 evaluations (1 shared
/// + 2 per generator). With reuse the shared probe is recovered analytically
/// from `known_energy` for 6 evaluations, unless |cos theta_d| <=
/// options.reuse_cos_threshold forces the direct measurement (7, flagged).
/// Ties are broken toward the current generator, then X < Y < Z.
RotoselectUpdateResult rotoselect_update(Circuit& circuit, int d, const Estimator& estimator,
                                         EvalCounter& counter, const RotoOptions& options = {},
                                         std::optional<double> known_energy = std::nullopt);

/// Coordinate descent over all rotation angles, cycling d = 0..D-1 until the
/// stop rule triggers.
OptimizerTrace rotosolve(Circuit circuit, const Estimator& estimator, const StopRule& stop,
                         const RotoOptions& options = {}, std::uint64_t seed = 0);

/// Rotosolve extended with per-gate generator selection over {X, Y, Z}.
/// Every rotation gate must currently carry a Pauli-axis generator.
OptimizerTrace rotoselect(Circuit circuit, const Estimator& estimator, const StopRule& stop,
                          const RotoOptions& options = {}, std::uint64_t seed = 0);

/// Parameter-shift gradient: dE/dtheta_d = (E(theta_d + pi/2) -
/// E(theta_d - pi/2)) / 2 per coordinate; 2D evaluations. Angles restored.
std::vector<double> parameter_shift_gradient(Circuit& circuit, const Estimator& estimator,
                                             EvalCounter& counter);

struct AdamOptions {
    double learning_rate = 0.05;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double epsilon = 1e-8;
    bool track_exact_energy = false;
};

/// Adam over parameter-shift gradients. 2D evaluations per step. The
/// recorded per-step energy is the exact energy of the current parameters
/// (free in simulation, not counted); in sampled mode the energy column is
/// NaN unless exact tracking is on.
OptimizerTrace adam(Circuit circuit, const Estimator& estimator, const StopRule& stop,
                    const AdamOptions& options = {}, std::uint64_t seed = 0);

struct SpsaOptions {
    /// Gain numerator for a_k = a / (k + 1 + A)^alpha. The default follows
    /// the hardware-calibrated family (large first updates annealed by the
    /// gain schedule) rather than the small-step regime; both converge, but
    /// they trade early-phase behavior differently.
    double a = 0.6;
    double c = 0.1;
    double alpha = 0.602;
    double gamma = 0.101;
    double stability = 0.0; // the A in a_k = a / (k + 1 + A)^alpha
    bool track_exact_energy = false;
};

/// Simultaneous perturbation: exactly 2 evaluations per step, at
/// theta +- c_k Delta with Delta a +-1 Bernoulli vector. Energy bookkeeping
/// as for adam().
OptimizerTrace spsa(Circuit circuit, const Estimator& estimator, const StopRule& stop,
                    const SpsaOptions& options = {}, std::uint64_t seed = 0);

} // namespace rotovqe
