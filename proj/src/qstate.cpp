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
#include "rotovqe/qstate.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace rotovqe {

namespace {
constexpr double kNormTolerance = 1e-12;
}

StateVector::StateVector(int num_qubits, int max_qubits) : num_qubits_(num_qubits) {
    if (num_qubits < 1 || num_qubits > max_qubits) {
        throw std::invalid_argument("StateVector: qubit count " + std::to_string(num_qubits) +
                                    " outside [1, " + std::to_string(max_qubits) + "]");
    }
    amps_.assign(1ULL << num_qubits, Complex{0.0, 0.0});
    amps_[0] = Complex{1.0, 0.0};
}

StateVector::StateVector(int num_qubits, std::vector<Complex> amplitudes, int max_qubits)
    : num_qubits_(num_qubits), amps_(std::move(amplitudes)) {
    if (num_qubits < 1 || num_qubits > max_qubits) {
        throw std::invalid_argument("StateVector: qubit count out of range");
    }
    if (amps_.size() != (1ULL << num_qubits)) {
        throw std::invalid_argument("StateVector: amplitude vector has length " +
                                    std::to_string(amps_.size()) + ", expected 2^" +
                                    std::to_string(num_qubits));
    }
    if (std::abs(norm() - 1.0) > kNormTolerance) {
        throw std::invalid_argument("StateVector: amplitudes are not normalized");
    }
}

double StateVector::norm() const {
    double s = 0.0;
    for (const Complex& a : amps_) s += std::norm(a);
    return std::sqrt(s);
}

void StateVector::check_qubit(int qubit) const {
    if (qubit < 0 || qubit >= num_qubits_) {
        throw std::out_of_range("qubit index " + std::to_string(qubit) + " out of range for " +
                                std::to_string(num_qubits_) + " qubits");
    }
}

void StateVector::apply_rx(int qubit, double theta) {
    check_qubit(qubit);
    const double c = std::cos(0.5 * theta);
    const Complex mis{0.0, -std::sin(0.5 * theta)}; // -i sin(theta/2)
    const std::uint64_t step = 1ULL << qubit;
    const std::uint64_t dim = amps_.size();
    for (std::uint64_t base = 0; base < dim; base += 2 * step) {
        for (std::uint64_t k = base; k < base + step; ++k) {
            const Complex a0 = amps_[k];
            const Complex a1 = amps_[k + step];
            amps_[k] = c * a0 + mis * a1;
            amps_[k + step] = mis * a0 + c * a1;
        }
    }
}

void StateVector::apply_ry(int qubit, double theta) {
    check_qubit(qubit);
    const double c = std::cos(0.5 * theta);
    const double s = std::sin(0.5 * theta);
    const std::uint64_t step = 1ULL << qubit;
    const std::uint64_t dim = amps_.size();
    for (std::uint64_t base = 0; base < dim; base += 2 * step) {
        for (std::uint64_t k = base; k < base + step; ++k) {
            const Complex a0 = amps_[k];
            const Complex a1 = amps_[k + step];
            amps_[k] = c * a0 - s * a1;
            amps_[k + step] = s * a0 + c * a1;
        }
    }
}

void StateVector::apply_rz(int qubit, double theta) {
    check_qubit(qubit);
    const Complex e0 = std::polar(1.0, -0.5 * theta);
    const Complex e1 = std::polar(1.0, 0.5 * theta);
    const std::uint64_t mask = 1ULL << qubit;
    const std::uint64_t dim = amps_.size();
    for (std::uint64_t k = 0; k < dim; ++k) {
        amps_[k] *= (k & mask) ? e1 : e0;
    }
}

void StateVector::apply_one_qubit(int qubit, const Mat2& u) {
    check_qubit(qubit);
    const std::uint64_t step = 1ULL << qubit;
    const std::uint64_t dim = amps_.size();
    for (std::uint64_t base = 0; base < dim; base += 2 * step) {
        for (std::uint64_t k = base; k < base + step; ++k) {
            const Complex a0 = amps_[k];
            const Complex a1 = amps_[k + step];
            amps_[k] = u.m00 * a0 + u.m01 * a1;
            amps_[k + step] = u.m10 * a0 + u.m11 * a1;
        }
    }
}

void StateVector::apply_axis_rotation(int qubit, double cx, double cy, double cz, double theta) {
    const double nrm = std::sqrt(cx * cx + cy * cy + cz * cz);
    if (std::abs(nrm - 1.0) > 1e-9) {
        throw std::invalid_argument("apply_axis_rotation: axis is not a unit vector");
    }
    // cos(t/2) I - i sin(t/2) (cx X + cy Y + cz Z)
    const double c = std::cos(0.5 * theta);
    const double s = std::sin(0.5 * theta);
    const Mat2 u{Complex{c, -s * cz}, Complex{-s * cy, -s * cx},
                 Complex{s * cy, -s * cx}, Complex{c, s * cz}};
    apply_one_qubit(qubit, u);
}

void StateVector::apply_cz(int qubit_a, int qubit_b) {
    check_qubit(qubit_a);
    check_qubit(qubit_b);
    if (qubit_a == qubit_b) throw std::out_of_range("apply_cz: qubits must be distinct");
    const std::uint64_t mask = (1ULL << qubit_a) | (1ULL << qubit_b);
    const std::uint64_t dim = amps_.size();
    for (std::uint64_t k = 0; k < dim; ++k) {
        if ((k & mask) == mask) amps_[k] = -amps_[k];
    }
}

void StateVector::apply_cnot(int control, int target) {
    check_qubit(control);
    check_qubit(target);
    if (control == target) throw std::out_of_range("apply_cnot: qubits must be distinct");
    const std::uint64_t cmask = 1ULL << control;
    const std::uint64_t tmask = 1ULL << target;
    const std::uint64_t dim = amps_.size();
    for (std::uint64_t k = 0; k < dim; ++k) {
        if ((k & cmask) && !(k & tmask)) std::swap(amps_[k], amps_[k | tmask]);
    }
}

StateVector zero_state(int num_qubits, int max_qubits) { return StateVector(num_qubits, max_qubits); }

Complex inner_product(const StateVector& a, const StateVector& b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument("inner_product: qubit counts differ");
    }
    Complex acc{0.0, 0.0};
    const auto av = a.amplitudes();
    const auto bv = b.amplitudes();
    for (std::size_t k = 0; k < av.size(); ++k) acc += std::conj(av[k]) * bv[k];
    return acc;
}

} // namespace rotovqe
