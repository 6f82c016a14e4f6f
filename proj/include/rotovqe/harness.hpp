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
#include <optional>
#include <string>
#include <vector>

#include "rotovqe/estimator.hpp"
#include "rotovqe/hamiltonian.hpp"
#include "rotovqe/optimize.hpp"
#include "rotovqe/qstate.hpp"

namespace rotovqe {

/// Trace distance between two pure states, sqrt(1 - |<a|b>|^2).
double trace_distance_pure(const StateVector& a, const StateVector& b);

/// Uniformly random pure state: a complex standard-normal vector,
/// normalized. Deterministic per seed.
StateVector haar_random_state(int num_qubits, std::uint64_t seed);

/// (E - e_min) / (e_max - e_min); 0 at the ground state.
double normalized_distance(double energy, const SpectrumBounds& bounds);

/// Ansatz depth used by the scaling study: 3n^2/2 + 2n layers for even n,
/// 3(n^2-1)/2 + 2n for odd n.
int scaling_depth(int num_qubits);

enum class OptimizerKind { Rotosolve, Rotoselect, Adam, Spsa };

std::string to_string(OptimizerKind kind);
OptimizerKind optimizer_from_string(const std::string& name);

/// Everything a reproducible experiment needs. Flags map onto these fields
/// one-to-one; the JSON summary echoes the struct back.
struct ExperimentConfig {
    std::string experiment = "vqe"; // set by the runner

    // Objective. "heisenberg" builds the cyclic model from (coupling, field);
    // anything else is read as a Hamiltonian file path.
    std::string hamiltonian_source = "heisenberg";
    double coupling = 1.0;
    double field = 1.0;

    std::string ansatz = "layered"; // "layered" | "circuit15"
    int num_qubits = 5;
    int layers = 6;

    std::vector<OptimizerKind> optimizers = {OptimizerKind::Rotosolve, OptimizerKind::Rotoselect};
    int shots = 0; // 0 = exact
    int trials = 10;
    int cycles = 1000;
    std::optional<long long> max_evaluations;
    std::optional<int> no_improve_cycles;
    double no_improve_delta = 0.0;
    bool reuse = false;

    /// Stop a trial early once the exact energy is within this normalized
    /// distance of the ground state (requires computable spectrum bounds).
    std::optional<double> success_threshold;

    AdamOptions adam;
    SpsaOptions spsa;

    std::uint64_t master_seed = 7;
    int threads = 1;

    std::string out_dir = "runs";
    /// Replaces the timestamp in the output directory name when non-empty.
    std::string label;

    void validate() const;
};

/// One optimizer run within an experiment.
struct TrialSummary {
    int trial = 0; // global index within the experiment, the CSV key
    OptimizerKind optimizer = OptimizerKind::Rotosolve;
    int num_qubits = 0;
    int layers = 0;
    int target_index = -1; // state-prep target id, -1 otherwise
    std::uint64_t seed = 0;
    double best_energy = 0.0;
    std::optional<double> best_exact_energy;
    std::optional<double> trace_distance; // state-prep figure of merit
    std::optional<long long> evals_to_threshold;
    long long total_evals = 0;
    int cycles_completed = 0;
    std::string stop_reason;
    OptimizerTrace trace;
};

/// Aggregates over the trials that share (optimizer, qubits, layers).
struct GroupStats {
    OptimizerKind optimizer = OptimizerKind::Rotosolve;
    int num_qubits = 0;
    int layers = 0;
    int count = 0;
    double mean_best_energy = 0.0;
    double std_best_energy = 0.0;
    std::optional<double> mean_trace_distance;
    std::optional<double> std_trace_distance;
    /// Median evaluations to reach the success threshold; +inf when fewer
    /// than half the trials reached it.
    std::optional<double> median_evals_to_threshold;
};

struct RunRecord {
    ExperimentConfig config;
    std::optional<SpectrumBounds> bounds;
    std::vector<TrialSummary> trials;
    std::vector<GroupStats> groups;
    double duration_seconds = 0.0;
};

/// One problem, one or more optimizers, `trials` seeds each.
RunRecord run_vqe(const ExperimentConfig& config);

/// Rotosolve vs Rotoselect across a list of layer counts; aggregates
/// mean/std of the lowest energy encountered per (optimizer, layers).
RunRecord run_layer_sweep(const ExperimentConfig& config, const std::vector<int>& layer_list);

/// All four optimizers on the same problem, tracing energy against
/// cumulative evaluations.
RunRecord run_comparison(const ExperimentConfig& config);

/// Evaluations-to-solution as a function of system size, using the
/// scaling_depth() ansatz and stopping at the success threshold (default 2%)
/// or the cycle cap.
RunRecord run_scaling(const ExperimentConfig& config, const std::vector<int>& qubit_list);

/// State preparation against haar-random targets with the overlap objective
/// -|<target|psi>|^2; records trace distance per (optimizer, layers).
RunRecord run_state_prep(const ExperimentConfig& config, const std::vector<int>& layer_list);

/// Render the spec'd trace.csv:
/// trial,cycle,gate_index,cumulative_evals,energy,exact_energy,generator
std::string trace_csv(const RunRecord& record);

/// summary.json contents (config echo, bounds, per-trial summaries, group
/// aggregates; the timestamp lives only here).
std::string summary_json(const RunRecord& record);

/// Write trace.csv and summary.json under
/// <out>/<experiment>/<label-or-timestamp>_<seed>/ and return the directory.
std::string write_outputs(const RunRecord& record);

/// The `rotovqe` command line: subcommands vqe, compare, scaling, stateprep,
/// sweep-layers. Returns a process exit code.
int cli_main(int argc, char** argv);

} // namespace rotovqe
