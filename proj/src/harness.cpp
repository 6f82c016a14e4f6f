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
#include "rotovqe/harness.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <ctime>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "rotovqe/rng.hpp"

namespace rotovqe {

double trace_distance_pure(const StateVector& a, const StateVector& b) {
    const double overlap = std::norm(inner_product(a, b));
    return std::sqrt(std::max(0.0, 1.0 - overlap));
}

StateVector haar_random_state(int num_qubits, std::uint64_t seed) {
    SplitMix64 rng(derive_seed(seed, kStreamTarget));
    const std::uint64_t dim = 1ULL << num_qubits;
    std::vector<Complex> amps(dim);
    double norm_sq = 0.0;
    for (std::uint64_t k = 0; k < dim; ++k) {
        amps[k] = Complex{rng.next_normal(), rng.next_normal()};
        norm_sq += std::norm(amps[k]);
    }
    const double inv = 1.0 / std::sqrt(norm_sq);
    for (auto& a : amps) a *= inv;
    return StateVector(num_qubits, std::move(amps));
}

double normalized_distance(double energy, const SpectrumBounds& bounds) {
    return (energy - bounds.e_min) / (bounds.e_max - bounds.e_min);
}

int scaling_depth(int num_qubits) {
    const int n = num_qubits;
    if (n % 2 == 0) return (3 * n * n) / 2 + 2 * n;
    return (3 * (n * n - 1)) / 2 + 2 * n;
}

std::string to_string(OptimizerKind kind) {
    switch (kind) {
    case OptimizerKind::Rotosolve: return "rotosolve";
    case OptimizerKind::Rotoselect: return "rotoselect";
    case OptimizerKind::Adam: return "adam";
    case OptimizerKind::Spsa: return "spsa";
    }
    throw std::logic_error("unreachable");
}

OptimizerKind optimizer_from_string(const std::string& name) {
    if (name == "rotosolve") return OptimizerKind::Rotosolve;
    if (name == "rotoselect") return OptimizerKind::Rotoselect;
    if (name == "adam") return OptimizerKind::Adam;
    if (name == "spsa") return OptimizerKind::Spsa;
    throw std::invalid_argument("unknown optimizer '" + name +
                                "' (expected rotosolve, rotoselect, adam or spsa)");
}

void ExperimentConfig::validate() const {
    if (trials < 1) throw std::invalid_argument("config: trials must be >= 1");
    if (layers < 1) throw std::invalid_argument("config: layers must be >= 1");
    if (num_qubits < 2) throw std::invalid_argument("config: need at least 2 qubits");
    if (cycles < 1) throw std::invalid_argument("config: cycles must be >= 1");
    if (shots < 0) throw std::invalid_argument("config: shots must be >= 0 (0 = exact)");
    if (optimizers.empty()) throw std::invalid_argument("config: no optimizer selected");
    if (ansatz != "layered" && ansatz != "circuit15") {
        throw std::invalid_argument("config: unknown ansatz '" + ansatz + "'");
    }
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct TrialPlan {
    OptimizerKind optimizer = OptimizerKind::Rotosolve;
    int num_qubits = 0;
    int layers = 0;
    int target_index = -1; // state-prep only
    std::uint64_t seed = 0;
};

double bookkeeping_energy(const TraceRecord& rec) {
    return rec.exact_energy ? *rec.exact_energy : rec.energy;
}

/// Shadow tracking is wanted whenever the estimator is noisy: the trace then
/// carries the exact energy of each visited point next to the sampled one,
/// and success thresholds compare against the exact value.
bool want_shadow(const ExperimentConfig& cfg) { return cfg.shots > 0; }

Hamiltonian build_objective_hamiltonian(const ExperimentConfig& cfg, int num_qubits) {
    if (cfg.hamiltonian_source == "heisenberg") {
        return build_heisenberg(num_qubits, cfg.coupling, cfg.field);
    }
    Hamiltonian h = load_hamiltonian(cfg.hamiltonian_source);
    if (h.num_qubits() != num_qubits) {
        throw std::invalid_argument("Hamiltonian file has " + std::to_string(h.num_qubits()) +
                                    " qubits but the experiment asks for " + std::to_string(num_qubits));
    }
    return h;
}

std::optional<SpectrumBounds> try_bounds(const Hamiltonian& h) {
    if (h.num_qubits() > 12) return std::nullopt;
    return exact_spectrum_bounds(h);
}

StopRule stop_rule_for(const ExperimentConfig& cfg, const std::optional<SpectrumBounds>& bounds) {
    StopRule stop = StopRule::cycles(cfg.cycles);
    if (cfg.no_improve_cycles) {
        stop.no_improve_cycles = cfg.no_improve_cycles;
        stop.min_decrease = cfg.no_improve_delta;
    }
    if (cfg.max_evaluations) stop.max_evaluations = cfg.max_evaluations;
    if (cfg.success_threshold && bounds) {
        stop.target_energy = bounds->e_min + *cfg.success_threshold * (bounds->e_max - bounds->e_min);
    }
    return stop;
}

Circuit build_ansatz(const ExperimentConfig& cfg, const TrialPlan& plan) {
    if (cfg.ansatz == "circuit15") return build_circuit15(plan.num_qubits, plan.layers, plan.seed);
    return build_layered_ansatz(plan.num_qubits, plan.layers, plan.seed);
}

TrialSummary execute_trial(const ExperimentConfig& cfg, const TrialPlan& plan, int global_index,
                           const std::optional<SpectrumBounds>& bounds) {
    const EstimatorConfig est_config =
        cfg.shots > 0 ? EstimatorConfig::sampled(cfg.shots, derive_seed(plan.seed, kStreamEstimator))
                      : EstimatorConfig::exact();
    std::optional<Estimator> estimator;
    if (plan.target_index >= 0) {
        estimator.emplace(haar_random_state(plan.num_qubits,
                                            derive_seed(cfg.master_seed, kStreamTarget,
                                                        static_cast<std::uint64_t>(plan.target_index))),
                          est_config);
    } else {
        estimator.emplace(build_objective_hamiltonian(cfg, plan.num_qubits), est_config);
    }

    Circuit circuit = build_ansatz(cfg, plan);
    const StopRule stop = stop_rule_for(cfg, bounds);

    OptimizerTrace trace;
    switch (plan.optimizer) {
    case OptimizerKind::Rotosolve:
    case OptimizerKind::Rotoselect: {
        RotoOptions options;
        options.reuse = cfg.reuse;
        options.track_exact_energy = want_shadow(cfg);
        trace = plan.optimizer == OptimizerKind::Rotosolve
                    ? rotosolve(std::move(circuit), *estimator, stop, options, plan.seed)
                    : rotoselect(std::move(circuit), *estimator, stop, options, plan.seed);
        break;
    }
    case OptimizerKind::Adam: {
        AdamOptions options = cfg.adam;
        options.track_exact_energy = want_shadow(cfg);
        trace = adam(std::move(circuit), *estimator, stop, options, plan.seed);
        break;
    }
    case OptimizerKind::Spsa: {
        SpsaOptions options = cfg.spsa;
        options.track_exact_energy = want_shadow(cfg);
        trace = spsa(std::move(circuit), *estimator, stop, options, plan.seed);
        break;
    }
    }

    TrialSummary s;
    s.trial = global_index;
    s.optimizer = plan.optimizer;
    s.num_qubits = plan.num_qubits;
    s.layers = plan.layers;
    s.target_index = plan.target_index;
    s.seed = plan.seed;
    s.best_energy = trace.best_energy;
    s.best_exact_energy = trace.best_exact_energy;
    s.total_evals = trace.total_evals;
    s.cycles_completed = trace.cycles_completed;
    s.stop_reason = trace.stop_reason;
    if (plan.target_index >= 0) {
        const double best = trace.best_exact_energy ? *trace.best_exact_energy : trace.best_energy;
        s.trace_distance = std::sqrt(std::max(0.0, 1.0 + best));
    }
    if (bounds) {
        const double threshold = cfg.success_threshold ? *cfg.success_threshold : 0.02;
        const double target = bounds->e_min + threshold * (bounds->e_max - bounds->e_min);
        for (const TraceRecord& rec : trace.records) {
            const double e = bookkeeping_energy(rec);
            if (std::isfinite(e) && e <= target) {
                s.evals_to_threshold = rec.cumulative_evals;
                break;
            }
        }
    }
    s.trace = std::move(trace);
    return s;
}

void parallel_for(int count, int threads, const std::function<void(int)>& body) {
    if (threads <= 1 || count <= 1) {
        for (int i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
            try {
                body(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    const int n = std::min(threads, count);
    pool.reserve(n);
    for (int t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

/// Fill record.groups with per-(optimizer, qubits, layers) aggregates.
/// `with_medians` adds the median evaluations-to-threshold (experiments that
/// compute spectrum bounds).
void aggregate_groups(RunRecord& record, bool with_medians) {
    record.groups.clear();
    for (const TrialSummary& t : record.trials) {
        auto match = [&](const GroupStats& g) {
            return g.optimizer == t.optimizer && g.num_qubits == t.num_qubits && g.layers == t.layers;
        };
        if (std::none_of(record.groups.begin(), record.groups.end(), match)) {
            GroupStats g;
            g.optimizer = t.optimizer;
            g.num_qubits = t.num_qubits;
            g.layers = t.layers;
            record.groups.push_back(g);
        }
    }
    for (GroupStats& g : record.groups) {
        std::vector<double> best;
        std::vector<double> dist;
        std::vector<double> evals;
        for (const TrialSummary& t : record.trials) {
            if (t.optimizer != g.optimizer || t.num_qubits != g.num_qubits || t.layers != g.layers) {
                continue;
            }
            best.push_back(t.best_exact_energy ? *t.best_exact_energy : t.best_energy);
            if (t.trace_distance) dist.push_back(*t.trace_distance);
            evals.push_back(t.evals_to_threshold ? static_cast<double>(*t.evals_to_threshold) : kInf);
        }
        g.count = static_cast<int>(best.size());
        auto mean_of = [](const std::vector<double>& v) {
            double s = 0.0;
            for (double x : v) s += x;
            return s / static_cast<double>(v.size());
        };
        auto sample_std = [](const std::vector<double>& v, double mu) {
            if (v.size() < 2) return 0.0;
            double s = 0.0;
            for (double x : v) s += (x - mu) * (x - mu);
            return std::sqrt(s / static_cast<double>(v.size() - 1));
        };
        g.mean_best_energy = mean_of(best);
        g.std_best_energy = sample_std(best, g.mean_best_energy);
        if (!dist.empty()) {
            g.mean_trace_distance = mean_of(dist);
            g.std_trace_distance = sample_std(dist, *g.mean_trace_distance);
        }
        if (with_medians && !evals.empty()) {
            std::sort(evals.begin(), evals.end());
            const std::size_t n = evals.size();
            g.median_evals_to_threshold =
                (n % 2 == 1) ? evals[n / 2] : 0.5 * (evals[n / 2 - 1] + evals[n / 2]);
        }
    }
}

/// Run every plan (in parallel when configured), then aggregate.
/// `bounds_for` yields the spectrum bounds a plan's trial should use.
RunRecord execute_plans(ExperimentConfig cfg, const std::vector<TrialPlan>& plans,
                        const std::function<std::optional<SpectrumBounds>(const TrialPlan&)>& bounds_for,
                        std::optional<SpectrumBounds> record_bounds) {
    const auto start = std::chrono::steady_clock::now();
    RunRecord record;
    record.config = std::move(cfg);
    record.bounds = record_bounds;
    record.trials.resize(plans.size());
    bool any_bounds = false;
    for (const TrialPlan& p : plans) {
        if (bounds_for(p)) {
            any_bounds = true;
            break;
        }
    }
    parallel_for(static_cast<int>(plans.size()), record.config.threads, [&](int i) {
        record.trials[i] = execute_trial(record.config, plans[i], i, bounds_for(plans[i]));
    });
    aggregate_groups(record, any_bounds);
    record.duration_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return record;
}

std::uint64_t plan_seed(const ExperimentConfig& cfg, std::size_t global_index) {
    return derive_seed(cfg.master_seed, kStreamTrial, static_cast<std::uint64_t>(global_index));
}

} // namespace

RunRecord run_vqe(const ExperimentConfig& config_in) {
    ExperimentConfig cfg = config_in;
    cfg.experiment = "vqe";
    cfg.validate();
    const auto bounds = try_bounds(build_objective_hamiltonian(cfg, cfg.num_qubits));
    std::vector<TrialPlan> plans;
    for (OptimizerKind opt : cfg.optimizers) {
        for (int r = 0; r < cfg.trials; ++r) {
            TrialPlan p;
            p.optimizer = opt;
            p.num_qubits = cfg.num_qubits;
            p.layers = cfg.layers;
            p.seed = plan_seed(cfg, plans.size());
            plans.push_back(p);
        }
    }
    return execute_plans(std::move(cfg), plans, [&](const TrialPlan&) { return bounds; }, bounds);
}

RunRecord run_layer_sweep(const ExperimentConfig& config_in, const std::vector<int>& layer_list) {
    ExperimentConfig cfg = config_in;
    cfg.experiment = "sweep-layers";
    cfg.validate();
    if (layer_list.empty()) throw std::invalid_argument("sweep-layers: empty layer list");
    const auto bounds = try_bounds(build_objective_hamiltonian(cfg, cfg.num_qubits));
    std::vector<TrialPlan> plans;
    for (OptimizerKind opt : cfg.optimizers) {
        for (int layers : layer_list) {
            if (layers < 1) throw std::invalid_argument("sweep-layers: layers must be >= 1");
            for (int r = 0; r < cfg.trials; ++r) {
                TrialPlan p;
                p.optimizer = opt;
                p.num_qubits = cfg.num_qubits;
                p.layers = layers;
                // Seed by replicate, not by position, so every layer count
                // sees the same family of initializations.
                p.seed = derive_seed(cfg.master_seed, kStreamTrial, static_cast<std::uint64_t>(r),
                                     static_cast<std::uint64_t>(layers));
                plans.push_back(p);
            }
        }
    }
    return execute_plans(std::move(cfg), plans, [&](const TrialPlan&) { return bounds; }, bounds);
}

RunRecord run_comparison(const ExperimentConfig& config_in) {
    ExperimentConfig cfg = config_in;
    cfg.experiment = "compare";
    cfg.optimizers = {OptimizerKind::Rotosolve, OptimizerKind::Rotoselect, OptimizerKind::Adam,
                      OptimizerKind::Spsa};
    cfg.validate();
    const auto bounds = try_bounds(build_objective_hamiltonian(cfg, cfg.num_qubits));
    std::vector<TrialPlan> plans;
    for (OptimizerKind opt : cfg.optimizers) {
        for (int r = 0; r < cfg.trials; ++r) {
            TrialPlan p;
            p.optimizer = opt;
            p.num_qubits = cfg.num_qubits;
            p.layers = cfg.layers;
            // Same replicate -> same seed -> identical initial circuit for
            // every optimizer, so the race starts from the same point.
            p.seed = derive_seed(cfg.master_seed, kStreamTrial, static_cast<std::uint64_t>(r));
            plans.push_back(p);
        }
    }
    return execute_plans(std::move(cfg), plans, [&](const TrialPlan&) { return bounds; }, bounds);
}

RunRecord run_scaling(const ExperimentConfig& config_in, const std::vector<int>& qubit_list) {
    ExperimentConfig cfg = config_in;
    cfg.experiment = "scaling";
    if (!cfg.success_threshold) cfg.success_threshold = 0.02;
    cfg.validate();
    if (qubit_list.empty()) throw std::invalid_argument("scaling: empty qubit list");
    if (cfg.hamiltonian_source != "heisenberg") {
        throw std::invalid_argument("scaling: only the heisenberg objective scales with n");
    }
    std::vector<TrialPlan> plans;
    std::vector<std::optional<SpectrumBounds>> bounds_by_n(13);
    for (int n : qubit_list) {
        if (n < 2 || n > 12) throw std::invalid_argument("scaling: qubit counts must be in [2, 12]");
        bounds_by_n[n] = try_bounds(build_heisenberg(n, cfg.coupling, cfg.field));
        for (OptimizerKind opt : cfg.optimizers) {
            for (int r = 0; r < cfg.trials; ++r) {
                TrialPlan p;
                p.optimizer = opt;
                p.num_qubits = n;
                p.layers = scaling_depth(n);
                p.seed = derive_seed(cfg.master_seed, kStreamTrial, static_cast<std::uint64_t>(r),
                                     static_cast<std::uint64_t>(n));
                plans.push_back(p);
            }
        }
    }
    return execute_plans(
        std::move(cfg), plans, [&](const TrialPlan& p) { return bounds_by_n[p.num_qubits]; },
        std::nullopt);
}

RunRecord run_state_prep(const ExperimentConfig& config_in, const std::vector<int>& layer_list) {
    ExperimentConfig cfg = config_in;
    cfg.experiment = "stateprep";
    cfg.ansatz = "circuit15";
    cfg.validate();
    if (layer_list.empty()) throw std::invalid_argument("stateprep: empty layer list");
    std::vector<TrialPlan> plans;
    for (OptimizerKind opt : cfg.optimizers) {
        for (int layers : layer_list) {
            if (layers < 1) throw std::invalid_argument("stateprep: layers must be >= 1");
            for (int target = 0; target < cfg.trials; ++target) {
                TrialPlan p;
                p.optimizer = opt;
                p.num_qubits = cfg.num_qubits;
                p.layers = layers;
                p.target_index = target;
                p.seed = derive_seed(cfg.master_seed, kStreamTrial, static_cast<std::uint64_t>(target),
                                     static_cast<std::uint64_t>(layers));
                plans.push_back(p);
            }
        }
    }
    return execute_plans(
        std::move(cfg), plans, [](const TrialPlan&) { return std::optional<SpectrumBounds>{}; },
        std::nullopt);
}

namespace {

std::string format_double(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    if (ec != std::errc()) return "nan";
    return std::string(buf, end);
}

} // namespace

std::string trace_csv(const RunRecord& record) {
    std::string out = "trial,cycle,gate_index,cumulative_evals,energy,exact_energy,generator\n";
    for (const TrialSummary& t : record.trials) {
        for (const TraceRecord& rec : t.trace.records) {
            out += std::to_string(t.trial);
            out += ',';
            out += std::to_string(rec.cycle);
            out += ',';
            out += std::to_string(rec.gate_index);
            out += ',';
            out += std::to_string(rec.cumulative_evals);
            out += ',';
            if (std::isfinite(rec.energy)) out += format_double(rec.energy);
            out += ',';
            if (rec.exact_energy) out += format_double(*rec.exact_energy);
            out += ',';
            if (rec.generator) out += to_char(*rec.generator);
            out += '\n';
        }
    }
    return out;
}

namespace {

nlohmann::ordered_json config_json(const ExperimentConfig& cfg) {
    nlohmann::ordered_json j;
    j["experiment"] = cfg.experiment;
    j["hamiltonian"] = cfg.hamiltonian_source;
    j["J"] = cfg.coupling;
    j["h"] = cfg.field;
    j["ansatz"] = cfg.ansatz;
    j["qubits"] = cfg.num_qubits;
    j["layers"] = cfg.layers;
    std::vector<std::string> names;
    for (OptimizerKind k : cfg.optimizers) names.push_back(to_string(k));
    j["optimizers"] = names;
    j["shots"] = cfg.shots;
    j["trials"] = cfg.trials;
    j["cycles"] = cfg.cycles;
    if (cfg.max_evaluations) j["max_evaluations"] = *cfg.max_evaluations;
    if (cfg.no_improve_cycles) {
        j["no_improve_cycles"] = *cfg.no_improve_cycles;
        j["no_improve_delta"] = cfg.no_improve_delta;
    }
    j["reuse"] = cfg.reuse;
    if (cfg.success_threshold) j["success_threshold"] = *cfg.success_threshold;
    j["adam"] = {{"learning_rate", cfg.adam.learning_rate},
                 {"beta1", cfg.adam.beta1},
                 {"beta2", cfg.adam.beta2},
                 {"epsilon", cfg.adam.epsilon}};
    j["spsa"] = {{"a", cfg.spsa.a},
                 {"c", cfg.spsa.c},
                 {"alpha", cfg.spsa.alpha},
                 {"gamma", cfg.spsa.gamma},
                 {"stability", cfg.spsa.stability}};
    j["seed"] = cfg.master_seed;
    j["threads"] = cfg.threads;
    return j;
}

Circuit reconstruct_best_circuit(const TrialSummary& t) {
    Circuit c = *t.trace.final_circuit;
    const auto& gens = t.trace.best_generators;
    const auto& angles = t.trace.best_angles;
    for (int d = 0; d < c.num_rotations(); ++d) {
        if (static_cast<int>(gens.size()) == c.num_rotations()) {
            c.set_gate(d, SingleQubitGenerator::pauli(gens[d]), angles[d]);
        } else {
            c.set_angle(d, angles[d]);
        }
    }
    return c;
}

} // namespace

std::string summary_json(const RunRecord& record) {
    nlohmann::ordered_json j;
    j["config"] = config_json(record.config);
    if (record.bounds) {
        j["spectrum_bounds"] = {{"e_min", record.bounds->e_min}, {"e_max", record.bounds->e_max}};
    }
    j["trials"] = nlohmann::ordered_json::array();
    for (const TrialSummary& t : record.trials) {
        nlohmann::ordered_json tj;
        tj["trial"] = t.trial;
        tj["optimizer"] = to_string(t.optimizer);
        tj["qubits"] = t.num_qubits;
        tj["layers"] = t.layers;
        if (t.target_index >= 0) tj["target_index"] = t.target_index;
        tj["seed"] = t.seed;
        tj["best_energy"] = t.best_energy;
        if (t.best_exact_energy) tj["best_exact_energy"] = *t.best_exact_energy;
        if (t.trace_distance) tj["trace_distance"] = *t.trace_distance;
        if (t.evals_to_threshold) tj["evals_to_threshold"] = *t.evals_to_threshold;
        tj["total_evals"] = t.total_evals;
        tj["cycles"] = t.cycles_completed;
        tj["stop_reason"] = t.stop_reason;
        if (t.trace.final_circuit && !t.trace.best_generators.empty()) {
            tj["best_circuit"] = dump_circuit(reconstruct_best_circuit(t));
        }
        j["trials"].push_back(std::move(tj));
    }
    j["groups"] = nlohmann::ordered_json::array();
    for (const GroupStats& g : record.groups) {
        nlohmann::ordered_json gj;
        gj["optimizer"] = to_string(g.optimizer);
        gj["qubits"] = g.num_qubits;
        gj["layers"] = g.layers;
        gj["count"] = g.count;
        gj["mean_best_energy"] = g.mean_best_energy;
        gj["std_best_energy"] = g.std_best_energy;
        if (g.mean_trace_distance) {
            gj["mean_trace_distance"] = *g.mean_trace_distance;
            gj["std_trace_distance"] = *g.std_trace_distance;
        }
        if (g.median_evals_to_threshold && std::isfinite(*g.median_evals_to_threshold)) {
            gj["median_evals_to_threshold"] = *g.median_evals_to_threshold;
        }
        j["groups"].push_back(std::move(gj));
    }
    j["duration_seconds"] = record.duration_seconds;
    const std::time_t now = std::time(nullptr);
    char stamp[32];
    std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%S", std::gmtime(&now));
    j["created_at"] = stamp;
    return j.dump(2) + "\n";
}

std::string write_outputs(const RunRecord& record) {
    namespace fs = std::filesystem;
    std::string stamp = record.config.label;
    if (stamp.empty()) {
        const std::time_t now = std::time(nullptr);
        char buf[32];
        std::strftime(buf, sizeof buf, "%Y%m%dT%H%M%S", std::gmtime(&now));
        stamp = buf;
    }
    const fs::path dir = fs::path(record.config.out_dir) / record.config.experiment /
                         (stamp + "_" + std::to_string(record.config.master_seed));
    fs::create_directories(dir);
    {
        std::ofstream csv(dir / "trace.csv", std::ios::binary);
        if (!csv) throw std::runtime_error("cannot write " + (dir / "trace.csv").string());
        csv << trace_csv(record);
    }
    {
        std::ofstream js(dir / "summary.json", std::ios::binary);
        if (!js) throw std::runtime_error("cannot write " + (dir / "summary.json").string());
        js << summary_json(record);
    }
    return dir.string();
}

} // namespace rotovqe
