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

#include "rotovqe/circuit.hpp"
#include "rotovqe/hamiltonian.hpp"
#include "rotovqe/qstate.hpp"

namespace rotovqe {

/// Exact expectations, or per-term shot sampling with a fixed seed.
/// shots_per_term = 0 selects exact mode.
struct EstimatorConfig {
    int shots_per_term = 0;
    std::uint64_t seed = 0;

    static EstimatorConfig exact() { return {}; }
    static EstimatorConfig sampled(int shots_per_term, std::uint64_t seed);

    bool is_exact() const { return shots_per_term == 0; }
};

/// Number of full energy estimates performed. One estimate over all
/// Hamiltonian terms counts as one evaluation; this is the cost unit every
/// optimizer comparison is measured in. Owned by a single optimizer run;
/// never shared across threads.
struct EvalCounter {
    long long count = 0;
};

/// The single chokepoint through which optimizers observe energy. Wraps an
/// objective -- a Pauli-term Hamiltonian, or state overlap -|<target|psi>|^2
/// -- together with an estimation mode.
///
/// In sampled mode each non-identity term is estimated as the mean of
/// shots_per_term signed eigenvalue samples drawn from the exact +-1 outcome
/// distribution; identity terms contribute their weight deterministically.
/// Each term draws from an independent stream derived from
/// (seed, evaluation index, term index), so results are bit-reproducible.
class Estimator {
  public:
    Estimator(Hamiltonian hamiltonian, EstimatorConfig config);
    Estimator(StateVector overlap_target, EstimatorConfig config);

    int num_qubits() const { return num_qubits_; }
    const EstimatorConfig& config() const { return config_; }
    bool is_exact() const { return config_.is_exact(); }

    /// Estimate the energy of the circuit's output state and count one
    /// evaluation.
    double energy(const Circuit& circuit, EvalCounter& counter) const;

    /// Exact energy at the circuit's current parameters, without touching the
    /// counter. Used for shadow bookkeeping next to sampled runs.
    double exact_energy(const Circuit& circuit) const;

    const Hamiltonian* hamiltonian() const { return hamiltonian_ ? &*hamiltonian_ : nullptr; }

  private:
    double estimate(const StateVector& state, long long eval_index) const;

    int num_qubits_;
    EstimatorConfig config_;
    std::optional<Hamiltonian> hamiltonian_;
    std::optional<StateVector> target_;
};

/// Free-function forms of the two objectives.
double energy(const Circuit& circuit, const Hamiltonian& hamiltonian, const EstimatorConfig& config,
              EvalCounter& counter);
double state_overlap_energy(const Circuit& circuit, const StateVector& target,
                            const EstimatorConfig& config, EvalCounter& counter);

} // namespace rotovqe
