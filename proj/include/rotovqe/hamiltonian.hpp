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

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rotovqe/pauli.hpp"
#include "rotovqe/qstate.hpp"

namespace rotovqe {

struct PauliTerm {
    double weight = 0.0;
    PauliString word;
};

/// Weighted sum of Pauli words, all of the same length. Duplicate words are
/// merged at construction (weights summed); terms whose merged weight is
/// exactly zero are dropped, so the term list is canonical.
class Hamiltonian {
  public:
    explicit Hamiltonian(int num_qubits) : num_qubits_(num_qubits) {
        if (num_qubits < 1) throw std::invalid_argument("Hamiltonian: need at least one qubit");
    }

    Hamiltonian(int num_qubits, std::vector<PauliTerm> terms);

    void add_term(double weight, const PauliString& word);

    int num_qubits() const { return num_qubits_; }
    const std::vector<PauliTerm>& terms() const { return terms_; }
    std::size_t num_terms() const { return terms_.size(); }

  private:
    int num_qubits_;
    std::vector<PauliTerm> terms_;
};

struct SpectrumBounds {
    double e_min = 0.0;
    double e_max = 0.0;
};

/// Heisenberg model with a Z field on the cycle graph:
///   J * sum_{(i,j) in E} (X_i X_j + Y_i Y_j + Z_i Z_j) + h * sum_i Z_i
/// For n >= 3 the edges are {(i, (i+1) mod n)}; for n = 2 the cycle
/// degenerates to the single edge (0, 1).
Hamiltonian build_heisenberg(int num_qubits, double coupling, double field);

struct ParseError : std::runtime_error {
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}
    int line;
};

/// Parse the Hamiltonian text format: one `<weight> <word>` pair per line,
/// words over IXYZ, `#` starts a comment line, blank lines ignored. All words
/// must share one length and at least one term must be present.
Hamiltonian parse_hamiltonian(std::string_view text);

/// parse_hamiltonian applied to a file's contents.
Hamiltonian load_hamiltonian(const std::string& path);

/// <psi| W |psi> for a single Pauli word, by direct sparse action. Real up to
/// rounding; always in [-1, 1].
double expectation_of_word(const StateVector& state, const PauliString& word);

/// <psi| M |psi> = sum_i w_i <psi| M_i |psi>.
double expectation(const StateVector& state, const Hamiltonian& hamiltonian);

/// Smallest and largest eigenvalues of the dense 2^n x 2^n matrix, by dense
/// Hermitian diagonalization. Capped at `max_qubits` (default 12) because the
/// dense solve is O(8^n); no iterative fallback is provided.
SpectrumBounds exact_spectrum_bounds(const Hamiltonian& hamiltonian, int max_qubits = 12);

} // namespace rotovqe
