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
#include "rotovqe/optimize.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "rotovqe/rng.hpp"
#include "rotovqe/sinusoid.hpp"

namespace rotovqe {

StopRule StopRule::cycles(int k1) {
    StopRule s;
    s.max_cycles = k1;
    return s;
}

StopRule StopRule::no_improvement(int k2, double min_decrease) {
    StopRule s;
    s.no_improve_cycles = k2;
    s.min_decrease = min_decrease;
    return s;
}

StopRule StopRule::evaluations(long long limit) {
    StopRule s;
    s.max_evaluations = limit;
    return s;
}

void StopRule::validate() const {
    if (!max_cycles && !no_improve_cycles && !max_evaluations && !target_energy) {
        throw std::invalid_argument("StopRule: no stopping criterion set");
    }
    if (max_cycles && *max_cycles < 1) throw std::invalid_argument("StopRule: max_cycles must be positive");
    if (no_improve_cycles && *no_improve_cycles < 1) {
        throw std::invalid_argument("StopRule: no_improve_cycles must be positive");
    }
    if (max_evaluations && *max_evaluations < 1) {
        throw std::invalid_argument("StopRule: max_evaluations must be positive");
    }
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double flat_threshold(const RotoOptions& options, const Estimator& estimator) {
    return estimator.is_exact() ? options.flat_threshold_exact : options.flat_threshold_sampled;
}

bool all_pauli(const Circuit& circuit) {
    for (int d = 0; d < circuit.num_rotations(); ++d) {
        if (!circuit.rotation(d).generator.is_pauli()) return false;
    }
    return true;
}

/// The energy a record contributes to best-so-far bookkeeping and to the
/// target_energy stop: the exact shadow when tracked, otherwise the
/// estimator-mode energy.
double bookkeeping_energy(const TraceRecord& rec) {
    if (rec.exact_energy) return *rec.exact_energy;
    return rec.energy;
}

struct RunState {
    OptimizerTrace trace;
    double best_book = kInf;
    int no_improve_streak = 0;

    void record(const TraceRecord& rec, const Circuit& circuit) {
        trace.records.push_back(rec);
        if (std::isfinite(rec.energy) &&
            (!std::isfinite(trace.best_energy) || rec.energy < trace.best_energy)) {
            trace.best_energy = rec.energy;
        }
        if (rec.exact_energy &&
            (!trace.best_exact_energy || *rec.exact_energy < *trace.best_exact_energy)) {
            trace.best_exact_energy = *rec.exact_energy;
        }
        const double book = bookkeeping_energy(rec);
        if (std::isfinite(book) && book < best_book) {
            best_book = book;
            trace.best_angles = circuit.angles();
            trace.best_generators = all_pauli(circuit) ? circuit.pauli_generators() : std::vector<Pauli>{};
        }
    }

    /// Returns true when the run should stop after this cycle.
    bool end_cycle(const StopRule& stop, double best_before) {
        ++trace.cycles_completed;
        if (!stop.no_improve_cycles) return false;
        if (best_before - best_book < stop.min_decrease) {
            ++no_improve_streak;
        } else {
            no_improve_streak = 0;
        }
        return no_improve_streak >= *stop.no_improve_cycles;
    }

    OptimizerTrace finish(Circuit circuit, long long evals, std::string reason) {
        trace.total_evals = evals;
        trace.stop_reason = std::move(reason);
        trace.final_angles = circuit.angles();
        if (!std::isfinite(trace.best_energy)) trace.best_energy = kNaN;
        if (trace.best_angles.empty()) {
            trace.best_angles = trace.final_angles;
            trace.best_generators = all_pauli(circuit) ? circuit.pauli_generators() : std::vector<Pauli>{};
        }
        trace.final_circuit = std::move(circuit);
        return std::move(trace);
    }
};

std::optional<Pauli> generator_of(const Circuit& circuit, int d) {
    const SingleQubitGenerator& g = circuit.rotation(d).generator;
    if (g.is_pauli()) return g.pauli_axis();
    return std::nullopt;
}

} // namespace

RotosolveUpdateResult rotosolve_update(Circuit& circuit, int d, const Estimator& estimator,
                                       EvalCounter& counter, const RotoOptions& options,
                                       std::optional<double> phi_override,
                                       std::optional<double> known_energy) {
    const double theta0 = circuit.rotation(d).angle;
    const bool reuse = options.reuse && known_energy.has_value();

    double phi = theta0;
    if (reuse) {
        phi = theta0; // reuse requires the probe at the known operating point
    } else if (phi_override) {
        phi = *phi_override;
    } else if (options.phi_policy == PhiPolicy::Zero) {
        phi = 0.0;
    } else if (options.phi_policy == PhiPolicy::Random) {
        throw std::logic_error("rotosolve_update: Random phi policy needs an explicit phi_override");
    }

    ProbeTriple probes;
    probes.phi = phi;
    if (reuse) {
        probes.m_at_phi = *known_energy;
    } else {
        circuit.set_angle(d, phi);
        probes.m_at_phi = estimator.energy(circuit, counter);
    }
    circuit.set_angle(d, phi + 0.5 * kPi);
    probes.m_plus = estimator.energy(circuit, counter);
    circuit.set_angle(d, phi - 0.5 * kPi);
    probes.m_minus = estimator.energy(circuit, counter);

    const SinusoidFit f = fit(probes);
    RotosolveUpdateResult result;
    if (f.amplitude < flat_threshold(options, estimator)) {
        // Redundant coordinate: keep the current angle.
        circuit.set_angle(d, theta0);
        result = {theta0, f.intercept, true};
    } else {
        const double theta_star = optimal_angle(probes);
        circuit.set_angle(d, theta_star);
        result = {theta_star, extrapolated_minimum(f), false};
    }
    return result;
}

RotoselectUpdateResult rotoselect_update(Circuit& circuit, int d, const Estimator& estimator,
                                         EvalCounter& counter, const RotoOptions& options,
                                         std::optional<double> known_energy) {
    const Pauli current = circuit.rotation(d).generator.pauli_axis();
    const double theta0 = circuit.rotation(d).angle;
    const double threshold = flat_threshold(options, estimator);

    auto probe_pm = [&](Pauli p, double& e_plus, double& e_minus) {
        circuit.set_gate(d, SingleQubitGenerator::pauli(p), 0.5 * kPi);
        e_plus = estimator.energy(circuit, counter);
        circuit.set_gate(d, SingleQubitGenerator::pauli(p), -0.5 * kPi);
        e_minus = estimator.energy(circuit, counter);
    };

    bool reused = false;
    bool fallback = false;
    double e0 = 0.0;
    double e_plus_cur = 0.0;
    double e_minus_cur = 0.0;

    if (options.reuse && known_energy.has_value()) {
        probe_pm(current, e_plus_cur, e_minus_cur);
        const double cos0 = std::cos(theta0);
        if (std::abs(cos0) > options.reuse_cos_threshold) {
            // E(theta) = A sin(theta + B) + C. The +-pi/2 probes give C and
            // A cos B; the known E(theta0) then determines A sin B, and with
            // it the shared probe E(0) = A sin B + C.
            const double intercept = 0.5 * (e_plus_cur + e_minus_cur);
            const double a_cos_b = 0.5 * (e_plus_cur - e_minus_cur);
            const double a_sin_b = (*known_energy - intercept - a_cos_b * std::sin(theta0)) / cos0;
            e0 = a_sin_b + intercept;
            reused = true;
        } else {
            circuit.set_gate(d, SingleQubitGenerator::pauli(current), 0.0);
            e0 = estimator.energy(circuit, counter);
            fallback = true;
        }
    } else {
        // At theta = 0 the gate is the identity for every generator, so one
        // probe is shared by all three candidates.
        circuit.set_gate(d, SingleQubitGenerator::pauli(current), 0.0);
        e0 = estimator.energy(circuit, counter);
        probe_pm(current, e_plus_cur, e_minus_cur);
    }

    struct Candidate {
        Pauli generator;
        double angle;
        double energy;
        bool flat;
    };
    std::optional<Candidate> best;
    auto consider = [&](Pauli p, double e_plus, double e_minus) {
        const ProbeTriple probes{0.0, e0, e_plus, e_minus};
        const SinusoidFit f = fit(probes);
        Candidate cand;
        if (f.amplitude < threshold) {
            cand = {p, theta0, f.intercept, true};
        } else {
            cand = {p, optimal_angle(probes), extrapolated_minimum(f), false};
        }
        // Strict comparison: on ties the earlier candidate (current
        // generator, then X < Y < Z) wins.
        if (!best || cand.energy < best->energy) best = cand;
    };

    consider(current, e_plus_cur, e_minus_cur);
    for (Pauli p : {Pauli::X, Pauli::Y, Pauli::Z}) {
        if (p == current) continue;
        double e_plus = 0.0;
        double e_minus = 0.0;
        probe_pm(p, e_plus, e_minus);
        consider(p, e_plus, e_minus);
    }

    circuit.set_gate(d, SingleQubitGenerator::pauli(best->generator), best->angle);
    return {best->generator, best->angle, best->energy, best->flat, reused, fallback};
}

namespace {

enum class CoordinateMethod { Rotosolve, Rotoselect };

OptimizerTrace run_coordinate_descent(CoordinateMethod method, Circuit circuit,
                                      const Estimator& estimator, const StopRule& stop,
                                      const RotoOptions& options, std::uint64_t seed) {
    stop.validate();
    if (circuit.num_rotations() < 1) {
        throw std::invalid_argument("coordinate descent needs at least one rotation gate");
    }
    if (method == CoordinateMethod::Rotoselect && !all_pauli(circuit)) {
        throw std::invalid_argument("rotoselect: every rotation gate must have a Pauli generator");
    }
    SplitMix64 phi_rng(derive_seed(seed, kStreamOptimizer));
    EvalCounter counter;
    RunState run;
    std::optional<double> known; // energy at the current parameters, for reuse
    const int num_gates = circuit.num_rotations();
    int cycle = 0;
    std::string reason;

    while (reason.empty()) {
        if (stop.max_cycles && cycle >= *stop.max_cycles) {
            reason = "max_cycles";
            break;
        }
        const double best_before = run.best_book;
        for (int d = 0; d < num_gates; ++d) {
            if (stop.max_evaluations && counter.count >= *stop.max_evaluations) {
                reason = "max_evaluations";
                break;
            }
            TraceRecord rec;
            rec.cycle = cycle;
            rec.gate_index = d;
            if (method == CoordinateMethod::Rotosolve) {
                std::optional<double> phi_override;
                if (options.phi_policy == PhiPolicy::Random && !(options.reuse && known)) {
                    phi_override = phi_rng.next_angle();
                }
                const auto r = rotosolve_update(circuit, d, estimator, counter, options, phi_override,
                                                options.reuse ? known : std::nullopt);
                known = r.energy;
                rec.energy = r.energy;
            } else {
                const auto r = rotoselect_update(circuit, d, estimator, counter, options,
                                                 options.reuse ? known : std::nullopt);
                known = r.energy;
                rec.energy = r.energy;
                rec.reuse_fallback = r.reuse_fallback;
            }
            rec.cumulative_evals = counter.count;
            rec.generator = generator_of(circuit, d);
            if (options.track_exact_energy && !estimator.is_exact()) {
                rec.exact_energy = estimator.exact_energy(circuit);
            }
            run.record(rec, circuit);
            if (stop.target_energy && bookkeeping_energy(rec) <= *stop.target_energy) {
                reason = "target_energy";
                break;
            }
        }
        if (!reason.empty()) break;
        ++cycle;
        if (run.end_cycle(stop, best_before)) reason = "no_improvement";
    }
    if (run.trace.cycles_completed < cycle) run.trace.cycles_completed = cycle;
    return run.finish(std::move(circuit), counter.count, std::move(reason));
}

} // namespace

OptimizerTrace rotosolve(Circuit circuit, const Estimator& estimator, const StopRule& stop,
                         const RotoOptions& options, std::uint64_t seed) {
    return run_coordinate_descent(CoordinateMethod::Rotosolve, std::move(circuit), estimator, stop,
                                  options, seed);
}

OptimizerTrace rotoselect(Circuit circuit, const Estimator& estimator, const StopRule& stop,
                          const RotoOptions& options, std::uint64_t seed) {
    return run_coordinate_descent(CoordinateMethod::Rotoselect, std::move(circuit), estimator, stop,
                                  options, seed);
}

std::vector<double> parameter_shift_gradient(Circuit& circuit, const Estimator& estimator,
                                             EvalCounter& counter) {
    const int num_gates = circuit.num_rotations();
    std::vector<double> grad(num_gates, 0.0);
    for (int d = 0; d < num_gates; ++d) {
        const double theta = circuit.rotation(d).angle;
        circuit.set_angle(d, theta + 0.5 * kPi);
        const double e_plus = estimator.energy(circuit, counter);
        circuit.set_angle(d, theta - 0.5 * kPi);
        const double e_minus = estimator.energy(circuit, counter);
        circuit.set_angle(d, theta);
        grad[d] = 0.5 * (e_plus - e_minus);
    }
    return grad;
}

namespace {

/// Shared per-step bookkeeping for the gradient optimizers.
struct GradientRun {
    RunState run;
    const Estimator& estimator;
    bool track_exact;

    /// Returns a non-empty stop reason when the run should end.
    std::string record_step(int step, const Circuit& circuit, const EvalCounter& counter,
                            const StopRule& stop) {
        TraceRecord rec;
        rec.cycle = step;
        rec.gate_index = -1;
        rec.cumulative_evals = counter.count;
        if (estimator.is_exact()) {
            rec.energy = estimator.exact_energy(circuit);
        } else {
            rec.energy = kNaN;
            if (track_exact) rec.exact_energy = estimator.exact_energy(circuit);
        }
        run.record(rec, circuit);
        if (stop.target_energy && bookkeeping_energy(rec) <= *stop.target_energy) {
            return "target_energy";
        }
        return "";
    }
};

} // namespace

OptimizerTrace adam(Circuit circuit, const Estimator& estimator, const StopRule& stop,
                    const AdamOptions& options, std::uint64_t seed) {
    stop.validate();
    (void)seed; // deterministic given the circuit; kept for interface symmetry
    const int num_gates = circuit.num_rotations();
    if (num_gates < 1) throw std::invalid_argument("adam: circuit has no rotation gates");

    std::vector<double> theta = circuit.angles();
    std::vector<double> m(num_gates, 0.0);
    std::vector<double> v(num_gates, 0.0);
    EvalCounter counter;
    GradientRun g{RunState{}, estimator, options.track_exact_energy};
    int step = 0;
    std::string reason;

    while (reason.empty()) {
        if (stop.max_cycles && step >= *stop.max_cycles) {
            reason = "max_cycles";
            break;
        }
        if (stop.max_evaluations && counter.count >= *stop.max_evaluations) {
            reason = "max_evaluations";
            break;
        }
        const double best_before = g.run.best_book;
        const std::vector<double> grad = parameter_shift_gradient(circuit, estimator, counter);
        const double t = static_cast<double>(step + 1);
        for (int d = 0; d < num_gates; ++d) {
            m[d] = options.beta1 * m[d] + (1.0 - options.beta1) * grad[d];
            v[d] = options.beta2 * v[d] + (1.0 - options.beta2) * grad[d] * grad[d];
            const double m_hat = m[d] / (1.0 - std::pow(options.beta1, t));
            const double v_hat = v[d] / (1.0 - std::pow(options.beta2, t));
            theta[d] -= options.learning_rate * m_hat / (std::sqrt(v_hat) + options.epsilon);
        }
        circuit.set_angles(theta);
        reason = g.record_step(step, circuit, counter, stop);
        ++step;
        if (reason.empty() && g.run.end_cycle(stop, best_before)) reason = "no_improvement";
    }
    if (g.run.trace.cycles_completed < step) g.run.trace.cycles_completed = step;
    return g.run.finish(std::move(circuit), counter.count, std::move(reason));
}

OptimizerTrace spsa(Circuit circuit, const Estimator& estimator, const StopRule& stop,
                    const SpsaOptions& options, std::uint64_t seed) {
    stop.validate();
    const int num_gates = circuit.num_rotations();
    if (num_gates < 1) throw std::invalid_argument("spsa: circuit has no rotation gates");

    SplitMix64 perturb_rng(derive_seed(seed, kStreamOptimizer));
    std::vector<double> theta = circuit.angles();
    std::vector<double> delta(num_gates, 0.0);
    std::vector<double> shifted(num_gates, 0.0);
    EvalCounter counter;
    GradientRun g{RunState{}, estimator, options.track_exact_energy};
    int step = 0;
    std::string reason;

    while (reason.empty()) {
        if (stop.max_cycles && step >= *stop.max_cycles) {
            reason = "max_cycles";
            break;
        }
        if (stop.max_evaluations && counter.count >= *stop.max_evaluations) {
            reason = "max_evaluations";
            break;
        }
        const double best_before = g.run.best_book;
        const double k = static_cast<double>(step);
        const double a_k = options.a / std::pow(k + 1.0 + options.stability, options.alpha);
        const double c_k = options.c / std::pow(k + 1.0, options.gamma);

        for (int d = 0; d < num_gates; ++d) delta[d] = static_cast<double>(perturb_rng.next_sign());
        for (int d = 0; d < num_gates; ++d) shifted[d] = theta[d] + c_k * delta[d];
        circuit.set_angles(shifted);
        const double e_plus = estimator.energy(circuit, counter);
        for (int d = 0; d < num_gates; ++d) shifted[d] = theta[d] - c_k * delta[d];
        circuit.set_angles(shifted);
        const double e_minus = estimator.energy(circuit, counter);

        const double diff = 0.5 * (e_plus - e_minus) / c_k;
        for (int d = 0; d < num_gates; ++d) theta[d] -= a_k * diff * delta[d];
        circuit.set_angles(theta);

        reason = g.record_step(step, circuit, counter, stop);
        ++step;
        if (reason.empty() && g.run.end_cycle(stop, best_before)) reason = "no_improvement";
    }
    if (g.run.trace.cycles_completed < step) g.run.trace.cycles_completed = step;
    return g.run.finish(std::move(circuit), counter.count, std::move(reason));
}

} // namespace rotovqe
