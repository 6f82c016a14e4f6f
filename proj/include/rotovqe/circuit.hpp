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
#include <string>
#include <vector>

#include "rotovqe/angles.hpp"
#include "rotovqe/pauli.hpp"
#include "rotovqe/qstate.hpp"

namespace rotovqe {

/// Generator of a rotation gate exp(-i theta/2 H): a Hermitian, unitary
/// one-qubit matrix (H^2 = I). Three flavors:
///   - a Pauli axis X, Y or Z (the candidates Rotoselect searches over),
///   - an arbitrary axis c_x X + c_y Y + c_z Z with (c_x, c_y, c_z) a unit
///     vector,
///   - a conjugated Pauli V P V^dag for a unitary V.
class SingleQubitGenerator {
  public:
    enum class Kind { PauliAxis, ArbitraryAxis, Conjugated };

    static SingleQubitGenerator pauli(Pauli axis);
    /// Axis must be a unit vector within 1e-9.
    static SingleQubitGenerator arbitrary_axis(double cx, double cy, double cz);
    /// H = V P V^dag; validated to satisfy H^2 = I within 1e-9.
    static SingleQubitGenerator conjugated(Pauli base, const Mat2& conjugator);

    Kind kind() const { return kind_; }
    bool is_pauli() const { return kind_ == Kind::PauliAxis; }
    Pauli pauli_axis() const;

    /// Dense 2x2 matrix of the generator itself.
    Mat2 matrix() const;
    /// cos(theta/2) I - i sin(theta/2) H.
    Mat2 rotation_matrix(double theta) const;

    friend bool operator==(const SingleQubitGenerator&, const SingleQubitGenerator&);

  private:
    SingleQubitGenerator() = default;

    Kind kind_ = Kind::PauliAxis;
    Pauli axis_ = Pauli::Z;              // PauliAxis, and the base of Conjugated
    double c_[3] = {0.0, 0.0, 1.0};      // ArbitraryAxis coefficients
    Mat2 h_ = Mat2::identity();          // dense generator for Conjugated
};

struct Gate {
    enum class Kind { Rotation, CZ, CNOT };

    Kind kind = Kind::Rotation;
    int qubit_a = 0; // rotation target, CZ first qubit, CNOT control
    int qubit_b = 0; // CZ second qubit, CNOT target
    SingleQubitGenerator generator = SingleQubitGenerator::pauli(Pauli::Z);
    double angle = 0.0; // canonical, in (-pi, pi]

    static Gate rotation(int qubit, SingleQubitGenerator generator, double angle);
    static Gate cz(int qubit_a, int qubit_b);
    static Gate cnot(int control, int target);

    bool is_rotation() const { return kind == Kind::Rotation; }
};

/// Ordered gate list on a fixed register. Rotation gates are the optimizable
/// coordinates and are indexed d = 0..num_rotations()-1 in program order.
class Circuit {
  public:
    explicit Circuit(int num_qubits);

    void append(const Gate& gate);

    int num_qubits() const { return num_qubits_; }
    const std::vector<Gate>& gates() const { return gates_; }

    /// Number of rotation gates D.
    int num_rotations() const { return static_cast<int>(rotation_positions_.size()); }
    const Gate& rotation(int d) const;
    /// Replace rotation gate d; the angle is canonicalized to (-pi, pi].
    void set_gate(int d, const SingleQubitGenerator& generator, double angle);
    void set_angle(int d, double angle);

    std::vector<double> angles() const;
    void set_angles(const std::vector<double>& angles);
    std::vector<Pauli> pauli_generators() const; // throws if any generator is not a Pauli axis

  private:
    int check_rotation_index(int d) const;

    int num_qubits_;
    std::vector<Gate> gates_;
    std::vector<std::size_t> rotation_positions_;
};

/// Apply exp(-i theta/2 H) for any supported generator.
void apply_rotation(StateVector& state, int qubit, const SingleQubitGenerator& generator, double theta);

/// Apply a fixed two-qubit gate (CZ or CNOT); rejects rotation gates.
void apply_fixed(StateVector& state, const Gate& gate);

/// All gates in program order, applied to a copy of `initial`.
StateVector evaluate(const Circuit& circuit, const StateVector& initial);
/// Evaluation from |0...0>.
StateVector evaluate(const Circuit& circuit);

/// One layer = a column of rotations (random Pauli generator, random angle)
/// on every qubit, then the CZ ladder (0,1), (1,2), ..., (n-2, n-1).
/// Deterministic for a fixed seed.
Circuit build_layered_ansatz(int num_qubits, int layers, std::uint64_t init_seed);

/// One layer = an R_Y column on every qubit, a descending CNOT ladder
/// (n-1 -> 0), (n-2 -> n-1), ..., (0 -> 1), a second R_Y column, then the
/// shifted ladder (n-1 -> n-2), (0 -> n-1), (1 -> 0), ..., (n-2 -> n-3).
///
/// The CNOT orderings are read off the 4-qubit circuit diagram this builder
/// generalizes: each block walks the controls top-to-bottom in time order,
/// the first block targeting (control+1) mod n and the second targeting
/// (control-1) mod n starting from the bottom wire. Initial generators are
/// all Y; angles are seeded-random.
Circuit build_circuit15(int num_qubits, int layers, std::uint64_t init_seed);

/// One gate per line: `ROT q<k> <X|Y|Z> <angle>`, `CZ q<i> q<j>`,
/// `CNOT q<i> q<j>`. Only Pauli-axis rotations are representable.
std::string dump_circuit(const Circuit& circuit);

} // namespace rotovqe
