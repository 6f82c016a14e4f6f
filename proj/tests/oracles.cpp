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
#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace oracle {

CMat identity(int dim) {
    CMat m(dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = 1.0;
    return m;
}

CMat mul(const CMat& x, const CMat& y) {
    if (x.dim != y.dim) throw std::invalid_argument("oracle::mul: dimension mismatch");
    CMat out(x.dim);
    for (int r = 0; r < x.dim; ++r) {
        for (int k = 0; k < x.dim; ++k) {
            const Complex xv = x.at(r, k);
            if (xv == Complex{0, 0}) continue;
            for (int c = 0; c < x.dim; ++c) out.at(r, c) += xv * y.at(k, c);
        }
    }
    return out;
}

CMat adjoint(const CMat& x) {
    CMat out(x.dim);
    for (int r = 0; r < x.dim; ++r) {
        for (int c = 0; c < x.dim; ++c) out.at(c, r) = std::conj(x.at(r, c));
    }
    return out;
}

CMat add(const CMat& x, const CMat& y) {
    if (x.dim != y.dim) throw std::invalid_argument("oracle::add: dimension mismatch");
    CMat out = x;
    for (std::size_t i = 0; i < out.a.size(); ++i) out.a[i] += y.a[i];
    return out;
}

CMat scale(Complex s, const CMat& x) {
    CMat out = x;
    for (auto& v : out.a) v *= s;
    return out;
}

CMat kron(const CMat& x, const CMat& y) {
    CMat out(x.dim * y.dim);
    for (int rx = 0; rx < x.dim; ++rx) {
        for (int cx = 0; cx < x.dim; ++cx) {
            const Complex xv = x.at(rx, cx);
            if (xv == Complex{0, 0}) continue;
            for (int ry = 0; ry < y.dim; ++ry) {
                for (int cy = 0; cy < y.dim; ++cy) {
                    out.at(rx * y.dim + ry, cx * y.dim + cy) = xv * y.at(ry, cy);
                }
            }
        }
    }
    return out;
}

double max_abs_diff(const CMat& x, const CMat& y) {
    if (x.dim != y.dim) throw std::invalid_argument("oracle::max_abs_diff: dimension mismatch");
    double m = 0.0;
    for (std::size_t i = 0; i < x.a.size(); ++i) m = std::max(m, std::abs(x.a[i] - y.a[i]));
    return m;
}

std::vector<Complex> mat_vec(const CMat& m, std::span<const Complex> v) {
    if (static_cast<std::size_t>(m.dim) != v.size()) {
        throw std::invalid_argument("oracle::mat_vec: dimension mismatch");
    }
    std::vector<Complex> out(v.size(), Complex{0, 0});
    for (int r = 0; r < m.dim; ++r) {
        Complex acc{0, 0};
        for (int c = 0; c < m.dim; ++c) acc += m.at(r, c) * v[c];
        out[r] = acc;
    }
    return out;
}

Complex expectation_value(const CMat& m, std::span<const Complex> v) {
    const std::vector<Complex> mv = mat_vec(m, v);
    Complex acc{0, 0};
    for (std::size_t i = 0; i < v.size(); ++i) acc += std::conj(v[i]) * mv[i];
    return acc;
}

CMat pauli_mat(rotovqe::Pauli p) {
    CMat m(2);
    switch (p) {
    case rotovqe::Pauli::I:
        m.at(0, 0) = 1;
        m.at(1, 1) = 1;
        break;
    case rotovqe::Pauli::X:
        m.at(0, 1) = 1;
        m.at(1, 0) = 1;
        break;
    case rotovqe::Pauli::Y:
        m.at(0, 1) = Complex{0, -1};
        m.at(1, 0) = Complex{0, 1};
        break;
    case rotovqe::Pauli::Z:
        m.at(0, 0) = 1;
        m.at(1, 1) = -1;
        break;
    }
    return m;
}

CMat embed_one_qubit(const CMat& u, int num_qubits, int qubit) {
    const int high = num_qubits - 1 - qubit;
    CMat out = identity(1 << high);
    out = kron(out, u);
    out = kron(out, identity(1 << qubit));
    return out;
}

CMat cz_mat(int num_qubits, int qubit_a, int qubit_b) {
    const int dim = 1 << num_qubits;
    CMat m(dim);
    const int mask = (1 << qubit_a) | (1 << qubit_b);
    for (int i = 0; i < dim; ++i) m.at(i, i) = ((i & mask) == mask) ? -1.0 : 1.0;
    return m;
}

CMat cnot_mat(int num_qubits, int control, int target) {
    const int dim = 1 << num_qubits;
    CMat m(dim);
    for (int i = 0; i < dim; ++i) {
        const int j = (i & (1 << control)) ? (i ^ (1 << target)) : i;
        m.at(j, i) = 1.0;
    }
    return m;
}

CMat gate_matrix(const rotovqe::Gate& gate, int num_qubits) {
    using rotovqe::Gate;
    using rotovqe::Pauli;
    switch (gate.kind) {
    case Gate::Kind::CZ: return cz_mat(num_qubits, gate.qubit_a, gate.qubit_b);
    case Gate::Kind::CNOT: return cnot_mat(num_qubits, gate.qubit_a, gate.qubit_b);
    case Gate::Kind::Rotation: break;
    }
    const double c = std::cos(0.5 * gate.angle);
    const double s = std::sin(0.5 * gate.angle);
    CMat u(2);
    switch (gate.generator.pauli_axis()) {
    case Pauli::X:
        u.at(0, 0) = c;
        u.at(0, 1) = Complex{0, -s};
        u.at(1, 0) = Complex{0, -s};
        u.at(1, 1) = c;
        break;
    case Pauli::Y:
        u.at(0, 0) = c;
        u.at(0, 1) = -s;
        u.at(1, 0) = s;
        u.at(1, 1) = c;
        break;
    case Pauli::Z:
        u.at(0, 0) = Complex{c, -s};
        u.at(1, 1) = Complex{c, s};
        break;
    case Pauli::I: throw std::invalid_argument("oracle::gate_matrix: identity generator");
    }
    return embed_one_qubit(u, num_qubits, gate.qubit_a);
}

CMat circuit_unitary(const rotovqe::Circuit& circuit) {
    CMat u = identity(1 << circuit.num_qubits());
    for (const rotovqe::Gate& g : circuit.gates()) {
        u = mul(gate_matrix(g, circuit.num_qubits()), u);
    }
    return u;
}

CMat word_matrix(const rotovqe::PauliString& word) {
    CMat m = identity(1);
    // Qubit 0 is the least significant bit, i.e. the last Kronecker factor.
    for (int q = word.num_qubits() - 1; q >= 0; --q) m = kron(m, pauli_mat(word.letter(q)));
    return m;
}

CMat hamiltonian_matrix(const rotovqe::Hamiltonian& h) {
    CMat m(1 << h.num_qubits());
    for (const rotovqe::PauliTerm& t : h.terms()) {
        m = add(m, scale(t.weight, word_matrix(t.word)));
    }
    return m;
}

std::vector<double> hermitian_eigenvalues(CMat m) {
    const int n = m.dim;
    auto off_diag_sq = [&] {
        double s = 0.0;
        for (int r = 0; r < n; ++r) {
            for (int c = r + 1; c < n; ++c) s += std::norm(m.at(r, c));
        }
        return s;
    };
    double scale_sq = 0.0;
    for (const Complex& v : m.a) scale_sq += std::norm(v);
    const double tol = 1e-28 * (scale_sq + 1e-300);

    for (int sweep = 0; sweep < 100 && off_diag_sq() > tol; ++sweep) {
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const Complex apq = m.at(p, q);
                const double abs_apq = std::abs(apq);
                if (abs_apq < 1e-300) continue;
                const double app = m.at(p, p).real();
                const double aqq = m.at(q, q).real();
                const double tau = (aqq - app) / (2.0 * abs_apq);
                const double sgn = tau >= 0.0 ? 1.0 : -1.0;
                const double t = -sgn / (std::abs(tau) + std::hypot(1.0, tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const Complex u = apq / abs_apq;
                // Columns, J = [[c, -s u], [s conj(u), c]] on (p, q).
                for (int r = 0; r < n; ++r) {
                    const Complex vp = m.at(r, p);
                    const Complex vq = m.at(r, q);
                    m.at(r, p) = c * vp + s * std::conj(u) * vq;
                    m.at(r, q) = -s * u * vp + c * vq;
                }
                // Rows, J^dag on the left.
                for (int col = 0; col < n; ++col) {
                    const Complex vp = m.at(p, col);
                    const Complex vq = m.at(q, col);
                    m.at(p, col) = c * vp + s * u * vq;
                    m.at(q, col) = -s * std::conj(u) * vp + c * vq;
                }
            }
        }
    }
    std::vector<double> ev(n);
    for (int i = 0; i < n; ++i) ev[i] = m.at(i, i).real();
    std::sort(ev.begin(), ev.end());
    return ev;
}

} // namespace oracle
