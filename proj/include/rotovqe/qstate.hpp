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

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace rotovqe {

using Complex = std::complex<double>;

/// Row-major 2x2 complex matrix [[m00, m01], [m10, m11]].
struct Mat2 {
    Complex m00, m01, m10, m11;

    static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }

    Mat2 adjoint() const {
        return {std::conj(m00), std::conj(m10), std::conj(m01), std::conj(m11)};
    }

    friend Mat2 operator*(const Mat2& a, const Mat2& b) {
        return {a.m00 * b.m00 + a.m01 * b.m10, a.m00 * b.m01 + a.m01 * b.m11,
                a.m10 * b.m00 + a.m11 * b.m10, a.m10 * b.m01 + a.m11 * b.m11};
    }
};

/// Largest register the dense simulator accepts by default.
inline constexpr int kDefaultMaxQubits = 14;

/// Dense statevector of a pure n-qubit state: 2^n complex amplitudes with
/// unit norm. Qubit k addresses bit k of the basis-state index, so qubit 0
/// is the least significant bit.
///
/// Gate application mutates in place; callers that need value semantics copy
/// first (copies are cheap at the register sizes this library targets).
/// A StateVector shared across threads must be treated as read-only.
class StateVector {
  public:
    /// |0...0> on n qubits.
    explicit StateVector(int num_qubits, int max_qubits = kDefaultMaxQubits);

    /// Takes ownership of an amplitude vector; must have length 2^n and unit
    /// norm within 1e-12.
    StateVector(int num_qubits, std::vector<Complex> amplitudes, int max_qubits = kDefaultMaxQubits);

    int num_qubits() const { return num_qubits_; }
    std::uint64_t dim() const { return amps_.size(); }
    std::span<const Complex> amplitudes() const { return amps_; }
    Complex amplitude(std::uint64_t basis_index) const { return amps_.at(basis_index); }
    double norm() const;

    /// exp(-i theta/2 X) on `qubit`.
    void apply_rx(int qubit, double theta);
    /// exp(-i theta/2 Y) on `qubit`.
    void apply_ry(int qubit, double theta);
    /// exp(-i theta/2 Z) on `qubit`.
    void apply_rz(int qubit, double theta);
    /// Arbitrary one-qubit unitary.
    void apply_one_qubit(int qubit, const Mat2& u);
    /// Rotation about the axis (cx, cy, cz); the axis must be a unit vector
    /// within 1e-9.
    void apply_axis_rotation(int qubit, double cx, double cy, double cz, double theta);

    void apply_cz(int qubit_a, int qubit_b);
    void apply_cnot(int control, int target);

  private:
    void check_qubit(int qubit) const;

    int num_qubits_ = 0;
    std::vector<Complex> amps_;
};

/// |0...0> with a range check on n; identical to the StateVector constructor.
StateVector zero_state(int num_qubits, int max_qubits = kDefaultMaxQubits);

/// <a|b>. Both states must have the same qubit count.
Complex inner_product(const StateVector& a, const StateVector& b);

} // namespace rotovqe
