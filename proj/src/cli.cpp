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
#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rotovqe/harness.hpp"

namespace rotovqe {

namespace {

/// Flags shared by every subcommand, bound straight onto an ExperimentConfig.
struct CommonFlags {
    std::vector<std::string> optimizer_names;
    std::vector<double> no_improve; // K2, delta
    long long eval_budget = 0;
    double threshold = -1.0;

    void attach(CLI::App& cmd, ExperimentConfig& cfg) {
        // --h is the field-strength flag, so help lives on --help alone.
        cmd.set_help_flag("--help", "print help");
        cmd.add_option("--qubits", cfg.num_qubits, "register size n");
        cmd.add_option("--layers", cfg.layers, "ansatz layers");
        cmd.add_option("--optimizer", optimizer_names,
                       "optimizer(s): rotosolve, rotoselect, adam, spsa")
            ->delimiter(',');
        cmd.add_option("--shots", cfg.shots, "shots per Hamiltonian term; 0 = exact");
        cmd.add_option("--trials", cfg.trials, "independent trials (targets, for stateprep)");
        cmd.add_option("--cycles", cfg.cycles, "cycle budget per trial");
        cmd.add_option("--no-improve", no_improve,
                       "stop after K2 cycles improving best energy by less than delta")
            ->expected(2);
        cmd.add_option("--eval-budget", eval_budget, "stop once this many energy evaluations are spent");
        cmd.add_option("--threshold", threshold,
                       "stop a trial at this normalized distance from the ground state");
        cmd.add_option("--seed", cfg.master_seed, "master seed");
        cmd.add_flag("--reuse", cfg.reuse, "reuse the previous update's energy (3->2, 7->6 probes)");
        cmd.add_option("--hamiltonian", cfg.hamiltonian_source, "'heisenberg' or a Hamiltonian file");
        cmd.add_option("--J", cfg.coupling, "heisenberg coupling strength");
        cmd.add_option("--h", cfg.field, "heisenberg field strength");
        cmd.add_option("--ansatz", cfg.ansatz, "'layered' or 'circuit15'");
        cmd.add_option("--out", cfg.out_dir, "output directory root");
        cmd.add_option("--label", cfg.label, "replaces the timestamp in the output directory name");
        cmd.add_option("--threads", cfg.threads, "worker threads for independent trials");
        cmd.add_option("--lr", cfg.adam.learning_rate, "adam learning rate");
        cmd.add_option("--spsa-a", cfg.spsa.a, "spsa gain numerator a");
        cmd.add_option("--spsa-c", cfg.spsa.c, "spsa perturbation size c");
        cmd.add_option("--spsa-alpha", cfg.spsa.alpha, "spsa gain exponent alpha");
        cmd.add_option("--spsa-gamma", cfg.spsa.gamma, "spsa perturbation exponent gamma");
        cmd.add_option("--spsa-A", cfg.spsa.stability, "spsa stability constant A");
    }

    void apply(ExperimentConfig& cfg) const {
        if (!optimizer_names.empty()) {
            cfg.optimizers.clear();
            for (const std::string& name : optimizer_names) {
                cfg.optimizers.push_back(optimizer_from_string(name));
            }
        }
        if (!no_improve.empty()) {
            cfg.no_improve_cycles = static_cast<int>(no_improve[0]);
            cfg.no_improve_delta = no_improve[1];
        }
        if (eval_budget > 0) cfg.max_evaluations = eval_budget;
        if (threshold >= 0.0) cfg.success_threshold = threshold;
    }
};

void report(const RunRecord& record) {
    const std::string dir = write_outputs(record);
    std::printf("wrote %s/trace.csv and summary.json (%.1f s)\n", dir.c_str(),
                record.duration_seconds);
    for (const GroupStats& g : record.groups) {
        if (g.mean_trace_distance) {
            std::printf("  %-10s n=%d layers=%-3d mean trace distance %.4f (std %.4f)\n",
                        to_string(g.optimizer).c_str(), g.num_qubits, g.layers,
                        *g.mean_trace_distance, *g.std_trace_distance);
        } else {
            std::printf("  %-10s n=%d layers=%-3d mean best energy %.6f (std %.6f)\n",
                        to_string(g.optimizer).c_str(), g.num_qubits, g.layers, g.mean_best_energy,
                        g.std_best_energy);
        }
    }
}

} // namespace

int cli_main(int argc, char** argv) {
    CLI::App app{"Variational quantum eigensolver workbench with closed-form coordinate optimizers"};
    app.set_help_flag("--help", "print help");
    app.require_subcommand(1);

    ExperimentConfig cfg;
    CommonFlags flags;

    auto* vqe_cmd = app.add_subcommand("vqe", "minimize a Hamiltonian with one or more optimizers");
    auto* sweep_cmd =
        app.add_subcommand("sweep-layers", "best energy as a function of circuit depth");
    auto* compare_cmd =
        app.add_subcommand("compare", "race all four optimizers on the same problem");
    auto* scaling_cmd =
        app.add_subcommand("scaling", "evaluations-to-solution as a function of system size");
    auto* stateprep_cmd =
        app.add_subcommand("stateprep", "overlap maximization against random target states");

    std::vector<int> layer_list;
    std::vector<int> qubit_list;
    for (CLI::App* cmd : {vqe_cmd, sweep_cmd, compare_cmd, scaling_cmd, stateprep_cmd}) {
        flags.attach(*cmd, cfg);
    }
    sweep_cmd->add_option("--layer-list", layer_list, "layer counts to sweep")
        ->delimiter(',')
        ->required();
    stateprep_cmd->add_option("--layer-list", layer_list, "layer counts to sweep")->delimiter(',');
    scaling_cmd->add_option("--qubit-list", qubit_list, "system sizes to run")
        ->delimiter(',')
        ->required();

    CLI11_PARSE(app, argc, argv);

    try {
        flags.apply(cfg);
        if (vqe_cmd->parsed()) {
            report(run_vqe(cfg));
        } else if (sweep_cmd->parsed()) {
            report(run_layer_sweep(cfg, layer_list));
        } else if (compare_cmd->parsed()) {
            // Defaults from the optimizer-comparison study: 5 qubits, depth
            // 30, exact energy, 5 trials.
            if (!compare_cmd->count("--layers")) cfg.layers = 30;
            if (!compare_cmd->count("--trials")) cfg.trials = 5;
            if (!compare_cmd->count("--shots")) cfg.shots = 0;
            report(run_comparison(cfg));
        } else if (scaling_cmd->parsed()) {
            // Study defaults: 1000 shots per term, a 10k-cycle desk-scale cap.
            if (!scaling_cmd->count("--shots")) cfg.shots = 1000;
            if (!scaling_cmd->count("--cycles")) cfg.cycles = 10000;
            report(run_scaling(cfg, qubit_list));
        } else if (stateprep_cmd->parsed()) {
            if (!stateprep_cmd->count("--qubits")) cfg.num_qubits = 4;
            if (!stateprep_cmd->count("--cycles")) cfg.cycles = 50;
            if (layer_list.empty()) layer_list = {1, 2, 3, 4, 5, 6, 7};
            report(run_state_prep(cfg, layer_list));
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}

} // namespace rotovqe
