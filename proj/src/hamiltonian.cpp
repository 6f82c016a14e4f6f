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
#include "rotovqe/hamiltonian.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

namespace rotovqe {

Hamiltonian::Hamiltonian(int num_qubits, std::vector<PauliTerm> terms) : Hamiltonian(num_qubits) {
    for (const PauliTerm& t : terms) add_term(t.weight, t.word);
}

void Hamiltonian::add_term(double weight, const PauliString& word) {
    if (word.num_qubits() != num_qubits_) {
        throw std::invalid_argument("Hamiltonian: word length " + std::to_string(word.num_qubits()) +
                                    " does not match qubit count " + std::to_string(num_qubits_));
    }
    auto it = std::find_if(terms_.begin(), terms_.end(),
                           [&](const PauliTerm& t) { return t.word == word; });
    if (it == terms_.end()) {
        if (weight != 0.0) terms_.push_back({weight, word});
        return;
    }
    it->weight += weight;
    if (it->weight == 0.0) terms_.erase(it);
}

Hamiltonian build_heisenberg(int num_qubits, double coupling, double field) {
    if (num_qubits < 2) throw std::invalid_argument("build_heisenberg: need at least 2 qubits");
    Hamiltonian h(num_qubits);
    std::vector<std::pair<int, int>> edges;
    if (num_qubits == 2) {
        edges = {{0, 1}};
    } else {
        for (int i = 0; i < num_qubits; ++i) edges.emplace_back(i, (i + 1) % num_qubits);
    }
    for (const auto& [i, j] : edges) {
        for (Pauli p : {Pauli::X, Pauli::Y, Pauli::Z}) {
            h.add_term(coupling, PauliString::pair(num_qubits, i, j, p));
        }
    }
    for (int i = 0; i < num_qubits; ++i) {
        h.add_term(field, PauliString::single(num_qubits, i, Pauli::Z));
    }
    return h;
}

namespace {

double parse_weight(const std::string& token, int line_no) {
    double value = 0.0;
    const char* begin = token.data();
    const char* end = begin + token.size();
    if (begin != end && *begin == '+') ++begin; // from_chars rejects a leading '+'
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end || begin == end) {
        throw ParseError(line_no, "malformed weight '" + token + "'");
    }
    return value;
}

} // namespace

Hamiltonian parse_hamiltonian(std::string_view text) {
    std::map<std::string, double> merged;
    std::vector<std::string> order; // first-seen order of words
    int word_length = -1;
    int line_no = 0;

    std::istringstream stream{std::string(text)};
    std::string line;
    while (std::getline(stream, line)) {
        ++line_no;
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;

        std::istringstream fields(line);
        std::string weight_token, word_token, extra;
        fields >> weight_token >> word_token;
        if (word_token.empty()) throw ParseError(line_no, "expected '<weight> <word>'");
        if (fields >> extra) throw ParseError(line_no, "trailing token '" + extra + "'");

        const double weight = parse_weight(weight_token, line_no);
        for (char c : word_token) {
            if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z') {
                throw ParseError(line_no, std::string("invalid Pauli letter '") + c + "'");
            }
        }
        if (word_length < 0) {
            word_length = static_cast<int>(word_token.size());
        } else if (static_cast<int>(word_token.size()) != word_length) {
            throw ParseError(line_no, "word length " + std::to_string(word_token.size()) +
                                          " differs from earlier length " + std::to_string(word_length));
        }
        if (merged.find(word_token) == merged.end()) order.push_back(word_token);
        merged[word_token] += weight;
    }
    if (word_length < 0) throw ParseError(line_no == 0 ? 1 : line_no, "no terms found");

    Hamiltonian h(word_length);
    for (const std::string& w : order) h.add_term(merged[w], PauliString(w));
    return h;
}

Hamiltonian load_hamiltonian(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open Hamiltonian file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_hamiltonian(buf.str());
}

double expectation_of_word(const StateVector& state, const PauliString& word) {
    if (word.num_qubits() != state.num_qubits()) {
        throw std::invalid_argument("expectation_of_word: word length does not match state");
    }
    const std::uint64_t flip = word.mask_of("XY");
    const std::uint64_t sign_mask = word.mask_of("YZ");
    const int y_count = std::popcount(word.mask_of("Y"));
    // i^y_count
    static constexpr Complex kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    const Complex y_phase = kIPow[y_count & 3];

    const auto amps = state.amplitudes();
    Complex acc{0.0, 0.0};
    for (std::uint64_t k = 0; k < amps.size(); ++k) {
        // W |k> = y_phase * (-1)^{popcount(k & sign_mask)} |k ^ flip>
        const double sgn = (std::popcount(k & sign_mask) & 1) ? -1.0 : 1.0;
        acc += std::conj(amps[k ^ flip]) * (sgn * amps[k]);
    }
    acc *= y_phase;
    return acc.real();
}

double expectation(const StateVector& state, const Hamiltonian& hamiltonian) {
    if (hamiltonian.num_qubits() != state.num_qubits()) {
        throw std::invalid_argument("expectation: Hamiltonian does not match state size");
    }
    double e = 0.0;
    for (const PauliTerm& t : hamiltonian.terms()) {
        e += t.weight * expectation_of_word(state, t.word);
    }
    return e;
}

SpectrumBounds exact_spectrum_bounds(const Hamiltonian& hamiltonian, int max_qubits) {
    const int n = hamiltonian.num_qubits();
    if (n > max_qubits) {
        throw std::invalid_argument("exact_spectrum_bounds: " + std::to_string(n) +
                                    " qubits exceeds the dense diagonalization cap of " +
                                    std::to_string(max_qubits));
    }
    const std::uint64_t dim = 1ULL << n;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    static constexpr Complex kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    for (const PauliTerm& t : hamiltonian.terms()) {
        const std::uint64_t flip = t.word.mask_of("XY");
        const std::uint64_t sign_mask = t.word.mask_of("YZ");
        const Complex y_phase = kIPow[std::popcount(t.word.mask_of("Y")) & 3];
        for (std::uint64_t col = 0; col < dim; ++col) {
            const double sgn = (std::popcount(col & sign_mask) & 1) ? -1.0 : 1.0;
            m(col ^ flip, col) += t.weight * sgn * y_phase;
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("exact_spectrum_bounds: eigensolver did not converge");
    }
    const auto& ev = solver.eigenvalues();
    return SpectrumBounds{ev(0), ev(ev.size() - 1)};
}

} // namespace rotovqe
