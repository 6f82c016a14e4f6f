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
#include <stdexcept>
#include <string>
#include <string_view>

namespace rotovqe {

enum class Pauli : char { I = 'I', X = 'X', Y = 'Y', Z = 'Z' };

inline char to_char(Pauli p) { return static_cast<char>(p); }

inline Pauli pauli_from_char(char c) {
    switch (c) {
    case 'I': return Pauli::I;
    case 'X': return Pauli::X;
    case 'Y': return Pauli::Y;
    case 'Z': return Pauli::Z;
    default: throw std::invalid_argument(std::string("invalid Pauli letter '") + c + "'");
    }
}

/// A word over {I, X, Y, Z}, one letter per qubit. Letter k acts on qubit k,
/// i.e. on bit k of the basis-state index (qubit 0 = least significant bit).
class PauliString {
  public:
    PauliString() = default;

    explicit PauliString(std::string_view letters) : letters_(letters) {
        for (char c : letters_) (void)pauli_from_char(c);
    }

    static PauliString identity(int num_qubits) { return PauliString(std::string(num_qubits, 'I')); }

    /// A word that is `p` on `qubit` and identity elsewhere.
    static PauliString single(int num_qubits, int qubit, Pauli p) {
        std::string s(num_qubits, 'I');
        s.at(qubit) = to_char(p);
        return PauliString(s);
    }

    /// A word that is `p` on two qubits and identity elsewhere.
    static PauliString pair(int num_qubits, int qubit_a, int qubit_b, Pauli p) {
        if (qubit_a == qubit_b) throw std::invalid_argument("PauliString::pair: qubits must be distinct");
        std::string s(num_qubits, 'I');
        s.at(qubit_a) = to_char(p);
        s.at(qubit_b) = to_char(p);
        return PauliString(s);
    }

    int num_qubits() const { return static_cast<int>(letters_.size()); }
    Pauli letter(int qubit) const { return static_cast<Pauli>(letters_.at(qubit)); }
    const std::string& str() const { return letters_; }
    bool is_identity() const { return letters_.find_first_not_of('I') == std::string::npos; }

    /// Bit mask of qubits whose letter is in `which` (e.g. "XY" for the flip mask).
    std::uint64_t mask_of(std::string_view which) const {
        std::uint64_t m = 0;
        for (std::size_t q = 0; q < letters_.size(); ++q) {
            if (which.find(letters_[q]) != std::string_view::npos) m |= (1ULL << q);
        }
        return m;
    }

    friend bool operator==(const PauliString&, const PauliString&) = default;
    friend auto operator<=>(const PauliString& a, const PauliString& b) { return a.letters_ <=> b.letters_; }

  private:
    std::string letters_;
};

} // namespace rotovqe
