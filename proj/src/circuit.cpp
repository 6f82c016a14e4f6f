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
#include "rotovqe/circuit.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

#include "rotovqe/rng.hpp"

namespace rotovqe {

namespace {

Mat2 pauli_matrix(Pauli p) {
    switch (p) {
    case Pauli::I: return Mat2::identity();
    case Pauli::X: return {0.0, 1.0, 1.0, 0.0};
    case Pauli::Y: return {0.0, Complex{0.0, -1.0}, Complex{0.0, 1.0}, 0.0};
    case Pauli::Z: return {1.0, 0.0, 0.0, -1.0};
    }
    throw std::logic_error("unreachable");
}

double max_abs_diff(const Mat2& a, const Mat2& b) {
    double m = std::abs(a.m00 - b.m00);
    m = std::max(m, std::abs(a.m01 - b.m01));
    m = std::max(m, std::abs(a.m10 - b.m10));
    m = std::max(m, std::abs(a.m11 - b.m11));
    return m;
}

} // namespace

SingleQubitGenerator SingleQubitGenerator::pauli(Pauli axis) {
    if (axis == Pauli::I) {
        throw std::invalid_argument("pauli generator: identity is not a rotation axis");
    }
    SingleQubitGenerator g;
    g.kind_ = Kind::PauliAxis;
    g.axis_ = axis;
    return g;
}

SingleQubitGenerator SingleQubitGenerator::arbitrary_axis(double cx, double cy, double cz) {
    const double nrm = std::sqrt(cx * cx + cy * cy + cz * cz);
    if (std::abs(nrm - 1.0) > 1e-9) {
        throw std::invalid_argument("arbitrary_axis: coefficients are not a unit vector");
    }
    SingleQubitGenerator g;
    g.kind_ = Kind::ArbitraryAxis;
    g.c_[0] = cx;
    g.c_[1] = cy;
    g.c_[2] = cz;
    return g;
}

SingleQubitGenerator SingleQubitGenerator::conjugated(Pauli base, const Mat2& conjugator) {
    if (base == Pauli::I) {
        throw std::invalid_argument("conjugated generator: identity base is not a rotation axis");
    }
    SingleQubitGenerator g;
    g.kind_ = Kind::Conjugated;
    g.axis_ = base;
    g.h_ = conjugator * pauli_matrix(base) * conjugator.adjoint();
    if (max_abs_diff(g.h_ * g.h_, Mat2::identity()) > 1e-9) {
        throw std::invalid_argument("conjugated generator: H^2 != I (conjugator not unitary?)");
    }
    return g;
}

Pauli SingleQubitGenerator::pauli_axis() const {
    if (kind_ != Kind::PauliAxis) {
        throw std::logic_error("pauli_axis: generator is not a Pauli axis");
    }
    return axis_;
}

Mat2 SingleQubitGenerator::matrix() const {
    switch (kind_) {
    case Kind::PauliAxis: return pauli_matrix(axis_);
    case Kind::ArbitraryAxis:
        return {Complex{c_[2], 0.0}, Complex{c_[0], -c_[1]},
                Complex{c_[0], c_[1]}, Complex{-c_[2], 0.0}};
    case Kind::Conjugated: return h_;
    }
    throw std::logic_error("unreachable");
}

Mat2 SingleQubitGenerator::rotation_matrix(double theta) const {
    const double c = std::cos(0.5 * theta);
    const Complex mis{0.0, -std::sin(0.5 * theta)};
    const Mat2 h = matrix();
    return {c + mis * h.m00, mis * h.m01, mis * h.m10, c + mis * h.m11};
}

bool operator==(const SingleQubitGenerator& a, const SingleQubitGenerator& b) {
    if (a.kind_ != b.kind_) return false;
    switch (a.kind_) {
    case SingleQubitGenerator::Kind::PauliAxis: return a.axis_ == b.axis_;
    case SingleQubitGenerator::Kind::ArbitraryAxis:
        return a.c_[0] == b.c_[0] && a.c_[1] == b.c_[1] && a.c_[2] == b.c_[2];
    case SingleQubitGenerator::Kind::Conjugated: return max_abs_diff(a.h_, b.h_) == 0.0;
    }
    return false;
}

Gate Gate::rotation(int qubit, SingleQubitGenerator generator, double angle) {
    Gate g;
    g.kind = Kind::Rotation;
    g.qubit_a = qubit;
    g.generator = generator;
    g.angle = wrap_angle(angle);
    return g;
}

Gate Gate::cz(int qubit_a, int qubit_b) {
    Gate g;
    g.kind = Kind::CZ;
    g.qubit_a = qubit_a;
    g.qubit_b = qubit_b;
    return g;
}

Gate Gate::cnot(int control, int target) {
    Gate g;
    g.kind = Kind::CNOT;
    g.qubit_a = control;
    g.qubit_b = target;
    return g;
}

Circuit::Circuit(int num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits < 1) throw std::invalid_argument("Circuit: need at least one qubit");
}

void Circuit::append(const Gate& gate) {
    auto check = [this](int q) {
        if (q < 0 || q >= num_qubits_) {
            throw std::out_of_range("Circuit::append: qubit index out of range");
        }
    };
    check(gate.qubit_a);
    if (gate.kind != Gate::Kind::Rotation) {
        check(gate.qubit_b);
        if (gate.qubit_a == gate.qubit_b) {
            throw std::out_of_range("Circuit::append: two-qubit gate needs distinct qubits");
        }
    }
    if (gate.is_rotation()) rotation_positions_.push_back(gates_.size());
    gates_.push_back(gate);
}

int Circuit::check_rotation_index(int d) const {
    if (d < 0 || d >= num_rotations()) {
        throw std::out_of_range("rotation index " + std::to_string(d) + " out of range, D = " +
                                std::to_string(num_rotations()));
    }
    return static_cast<int>(rotation_positions_[d]);
}

const Gate& Circuit::rotation(int d) const { return gates_[check_rotation_index(d)]; }

void Circuit::set_gate(int d, const SingleQubitGenerator& generator, double angle) {
    Gate& g = gates_[check_rotation_index(d)];
    g.generator = generator;
    g.angle = wrap_angle(angle);
}

void Circuit::set_angle(int d, double angle) { gates_[check_rotation_index(d)].angle = wrap_angle(angle); }

std::vector<double> Circuit::angles() const {
    std::vector<double> out;
    out.reserve(rotation_positions_.size());
    for (std::size_t pos : rotation_positions_) out.push_back(gates_[pos].angle);
    return out;
}

void Circuit::set_angles(const std::vector<double>& angles) {
    if (angles.size() != rotation_positions_.size()) {
        throw std::invalid_argument("set_angles: expected " + std::to_string(rotation_positions_.size()) +
                                    " angles");
    }
    for (std::size_t d = 0; d < angles.size(); ++d) {
        gates_[rotation_positions_[d]].angle = wrap_angle(angles[d]);
    }
}

std::vector<Pauli> Circuit::pauli_generators() const {
    std::vector<Pauli> out;
    out.reserve(rotation_positions_.size());
    for (std::size_t pos : rotation_positions_) out.push_back(gates_[pos].generator.pauli_axis());
    return out;
}

void apply_rotation(StateVector& state, int qubit, const SingleQubitGenerator& generator, double theta) {
    if (generator.is_pauli()) {
        switch (generator.pauli_axis()) {
        case Pauli::X: state.apply_rx(qubit, theta); return;
        case Pauli::Y: state.apply_ry(qubit, theta); return;
        case Pauli::Z: state.apply_rz(qubit, theta); return;
        case Pauli::I: break;
        }
        throw std::logic_error("unreachable");
    }
    state.apply_one_qubit(qubit, generator.rotation_matrix(theta));
}

void apply_fixed(StateVector& state, const Gate& gate) {
    switch (gate.kind) {
    case Gate::Kind::CZ: state.apply_cz(gate.qubit_a, gate.qubit_b); return;
    case Gate::Kind::CNOT: state.apply_cnot(gate.qubit_a, gate.qubit_b); return;
    case Gate::Kind::Rotation: break;
    }
    throw std::invalid_argument("apply_fixed: gate is not a fixed gate");
}

StateVector evaluate(const Circuit& circuit, const StateVector& initial) {
    if (initial.num_qubits() != circuit.num_qubits()) {
        throw std::invalid_argument("evaluate: state size does not match circuit");
    }
    StateVector state = initial;
    for (const Gate& g : circuit.gates()) {
        if (g.is_rotation()) {
            apply_rotation(state, g.qubit_a, g.generator, g.angle);
        } else {
            apply_fixed(state, g);
        }
    }
    return state;
}

StateVector evaluate(const Circuit& circuit) { return evaluate(circuit, zero_state(circuit.num_qubits())); }

Circuit build_layered_ansatz(int num_qubits, int layers, std::uint64_t init_seed) {
    if (num_qubits < 2) throw std::invalid_argument("build_layered_ansatz: need at least 2 qubits");
    if (layers < 1) throw std::invalid_argument("build_layered_ansatz: need at least 1 layer");
    SplitMix64 rng(derive_seed(init_seed, kStreamCircuitInit));
    Circuit c(num_qubits);
    static constexpr Pauli kAxes[3] = {Pauli::X, Pauli::Y, Pauli::Z};
    for (int layer = 0; layer < layers; ++layer) {
        for (int q = 0; q < num_qubits; ++q) {
            const Pauli axis = kAxes[rng.next_below(3)];
            c.append(Gate::rotation(q, SingleQubitGenerator::pauli(axis), rng.next_angle()));
        }
        for (int q = 0; q + 1 < num_qubits; ++q) c.append(Gate::cz(q, q + 1));
    }
    return c;
}

Circuit build_circuit15(int num_qubits, int layers, std::uint64_t init_seed) {
    if (num_qubits < 3) throw std::invalid_argument("build_circuit15: need at least 3 qubits");
    if (layers < 1) throw std::invalid_argument("build_circuit15: need at least 1 layer");
    SplitMix64 rng(derive_seed(init_seed, kStreamCircuitInit));
    Circuit c(num_qubits);
    const int n = num_qubits;
    auto ry_column = [&] {
        for (int q = 0; q < n; ++q) {
            c.append(Gate::rotation(q, SingleQubitGenerator::pauli(Pauli::Y), rng.next_angle()));
        }
    };
    for (int layer = 0; layer < layers; ++layer) {
        ry_column();
        // First block: controls n-1, n-2, ..., 0; each targets (control+1) mod n.
        for (int ctrl = n - 1; ctrl >= 0; --ctrl) c.append(Gate::cnot(ctrl, (ctrl + 1) % n));
        ry_column();
        // Second block: controls n-1, 0, 1, ..., n-2; each targets (control-1) mod n.
        c.append(Gate::cnot(n - 1, n - 2));
        for (int ctrl = 0; ctrl < n - 1; ++ctrl) c.append(Gate::cnot(ctrl, (ctrl + n - 1) % n));
    }
    return c;
}

std::string dump_circuit(const Circuit& circuit) {
    std::string out;
    char buf[64];
    for (const Gate& g : circuit.gates()) {
        switch (g.kind) {
        case Gate::Kind::Rotation: {
            const Pauli axis = g.generator.pauli_axis(); // throws for exotic generators
            auto [end, ec] = std::to_chars(buf, buf + sizeof buf, g.angle);
            (void)ec;
            out += "ROT q" + std::to_string(g.qubit_a) + " " + to_char(axis) + " " +
                   std::string(buf, end) + "\n";
            break;
        }
        case Gate::Kind::CZ:
            out += "CZ q" + std::to_string(g.qubit_a) + " q" + std::to_string(g.qubit_b) + "\n";
            break;
        case Gate::Kind::CNOT:
            out += "CNOT q" + std::to_string(g.qubit_a) + " q" + std::to_string(g.qubit_b) + "\n";
            break;
        }
    }
    return out;
}

} // namespace rotovqe
