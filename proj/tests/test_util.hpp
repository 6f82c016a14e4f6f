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

#include <vector>

#include "rotovqe/circuit.hpp"
#include "rotovqe/hamiltonian.hpp"
#include "rotovqe/harness.hpp"
#include "rotovqe/rng.hpp"

namespace testutil {

inline rotovqe::Pauli random_axis(rotovqe::SplitMix64& rng) {
    constexpr rotovqe::Pauli axes[3] = {rotovqe::Pauli::X, rotovqe::Pauli::Y, rotovqe::Pauli::Z};
    return axes[rng.next_below(3)];
}

/// Random circuit mixing Pauli rotations with CZ and CNOT entanglers.
inline rotovqe::Circuit random_mixed_circuit(int num_qubits, int num_gates, rotovqe::SplitMix64& rng) {
    rotovqe::Circuit c(num_qubits);
    for (int g = 0; g < num_gates; ++g) {
        const std::uint64_t kind = num_qubits >= 2 ? rng.next_below(4) : 0;
        if (kind <= 1 || num_qubits < 2) {
            const int q = static_cast<int>(rng.next_below(num_qubits));
            c.append(rotovqe::Gate::rotation(q, rotovqe::SingleQubitGenerator::pauli(random_axis(rng)),
                                             rng.next_angle()));
        } else {
            const int a = static_cast<int>(rng.next_below(num_qubits));
            int b = static_cast<int>(rng.next_below(num_qubits - 1));
            if (b >= a) ++b;
            c.append(kind == 2 ? rotovqe::Gate::cz(a, b) : rotovqe::Gate::cnot(a, b));
        }
    }
    return c;
}

/// Random circuit guaranteed to contain at least one rotation gate.
inline rotovqe::Circuit random_parameterized_circuit(int num_qubits, int num_gates,
                                                     rotovqe::SplitMix64& rng) {
    rotovqe::Circuit c = random_mixed_circuit(num_qubits, num_gates, rng);
    if (c.num_rotations() == 0) {
        c.append(rotovqe::Gate::rotation(0, rotovqe::SingleQubitGenerator::pauli(random_axis(rng)),
                                         rng.next_angle()));
    }
    return c;
}

/// Random Hamiltonian with `terms` distinct non-identity words.
inline rotovqe::Hamiltonian random_hamiltonian(int num_qubits, int terms, rotovqe::SplitMix64& rng) {
    rotovqe::Hamiltonian h(num_qubits);
    for (int t = 0; t < terms; ++t) {
        std::string word(num_qubits, 'I');
        while (word.find_first_not_of('I') == std::string::npos) {
            for (int q = 0; q < num_qubits; ++q) {
                constexpr char letters[4] = {'I', 'X', 'Y', 'Z'};
                word[q] = letters[rng.next_below(4)];
            }
        }
        h.add_term(2.0 * rng.next_double() - 1.0, rotovqe::PauliString(word));
    }
    return h;
}

inline rotovqe::StateVector random_state(int num_qubits, std::uint64_t seed) {
    return rotovqe::haar_random_state(num_qubits, seed);
}

} // namespace testutil
