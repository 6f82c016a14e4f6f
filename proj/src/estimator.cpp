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
#include "rotovqe/estimator.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "rotovqe/rng.hpp"

namespace rotovqe {

EstimatorConfig EstimatorConfig::sampled(int shots_per_term, std::uint64_t seed) {
    if (shots_per_term < 1) throw std::invalid_argument("sampled estimator needs shots_per_term >= 1");
    return {shots_per_term, seed};
}

Estimator::Estimator(Hamiltonian hamiltonian, EstimatorConfig config)
    : num_qubits_(hamiltonian.num_qubits()), config_(config), hamiltonian_(std::move(hamiltonian)) {}

Estimator::Estimator(StateVector overlap_target, EstimatorConfig config)
    : num_qubits_(overlap_target.num_qubits()), config_(config), target_(std::move(overlap_target)) {}

namespace {

/// Mean of `shots` signed eigenvalue samples for a term with exact
/// expectation `m`: each shot is +1 with probability (1 + m) / 2, else -1.
double sample_term_mean(double m, int shots, SplitMix64& rng) {
    const double p_plus = std::clamp(0.5 * (1.0 + m), 0.0, 1.0);
    long long plus = 0;
    for (int s = 0; s < shots; ++s) {
        if (rng.next_bernoulli(p_plus)) ++plus;
    }
    return 2.0 * static_cast<double>(plus) / shots - 1.0;
}

} // namespace

double Estimator::estimate(const StateVector& state, long long eval_index) const {
    if (hamiltonian_) {
        const auto& terms = hamiltonian_->terms();
        double e = 0.0;
        for (std::size_t t = 0; t < terms.size(); ++t) {
            if (config_.is_exact()) {
                e += terms[t].weight * expectation_of_word(state, terms[t].word);
            } else if (terms[t].word.is_identity()) {
                // Constant outcome: no shot noise.
                e += terms[t].weight;
            } else {
                SplitMix64 rng(derive_seed(config_.seed, kStreamEstimator,
                                           static_cast<std::uint64_t>(eval_index), t));
                const double m = expectation_of_word(state, terms[t].word);
                e += terms[t].weight * sample_term_mean(m, config_.shots_per_term, rng);
            }
        }
        return e;
    }
    // Overlap objective: energy of M = -|target><target| is -|<target|psi>|^2.
    const double p = std::clamp(std::norm(inner_product(*target_, state)), 0.0, 1.0);
    if (config_.is_exact()) return -p;
    SplitMix64 rng(derive_seed(config_.seed, kStreamEstimator, static_cast<std::uint64_t>(eval_index), 0));
    long long hits = 0;
    for (int s = 0; s < config_.shots_per_term; ++s) {
        if (rng.next_bernoulli(p)) ++hits;
    }
    return -static_cast<double>(hits) / config_.shots_per_term;
}

double Estimator::energy(const Circuit& circuit, EvalCounter& counter) const {
    if (circuit.num_qubits() != num_qubits_) {
        throw std::invalid_argument("Estimator::energy: circuit size does not match objective");
    }
    const StateVector state = evaluate(circuit);
    const long long eval_index = counter.count;
    counter.count += 1;
    return estimate(state, eval_index);
}

double Estimator::exact_energy(const Circuit& circuit) const {
    if (circuit.num_qubits() != num_qubits_) {
        throw std::invalid_argument("Estimator::exact_energy: circuit size does not match objective");
    }
    const StateVector state = evaluate(circuit);
    if (hamiltonian_) return expectation(state, *hamiltonian_);
    return -std::clamp(std::norm(inner_product(*target_, state)), 0.0, 1.0);
}

double energy(const Circuit& circuit, const Hamiltonian& hamiltonian, const EstimatorConfig& config,
              EvalCounter& counter) {
    return Estimator(hamiltonian, config).energy(circuit, counter);
}

double state_overlap_energy(const Circuit& circuit, const StateVector& target,
                            const EstimatorConfig& config, EvalCounter& counter) {
    return Estimator(target, config).energy(circuit, counter);
}

} // namespace rotovqe
