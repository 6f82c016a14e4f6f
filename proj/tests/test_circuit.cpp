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
#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "rotovqe/circuit.hpp"
#include "test_util.hpp"

using namespace rotovqe;

namespace {

int count_kind(const Circuit& c, Gate::Kind kind) {
    int n = 0;
    for (const Gate& g : c.gates()) {
        if (g.kind == kind) ++n;
    }
    return n;
}

double state_diff(const StateVector& a, const StateVector& b) {
    double m = 0.0;
    for (std::uint64_t i = 0; i < a.dim(); ++i) {
        m = std::max(m, std::abs(a.amplitude(i) - b.amplitude(i)));
    }
    return m;
}

} // namespace

TEST_CASE("layered ansatz counts and determinism") {
    const Circuit c = build_layered_ansatz(5, 6, 42);
    CHECK(c.num_rotations() == 30);
    CHECK(count_kind(c, Gate::Kind::CZ) == 24);

    const Circuit small = build_layered_ansatz(2, 1, 0);
    CHECK(small.num_rotations() == 2);
    CHECK(count_kind(small, Gate::Kind::CZ) == 1);

    const Circuit again = build_layered_ansatz(5, 6, 42);
    REQUIRE(again.gates().size() == c.gates().size());
    for (std::size_t i = 0; i < c.gates().size(); ++i) {
        CHECK(c.gates()[i].kind == again.gates()[i].kind);
        CHECK(c.gates()[i].angle == again.gates()[i].angle);
        if (c.gates()[i].is_rotation()) {
            CHECK(c.gates()[i].generator == again.gates()[i].generator);
        }
    }
    const Circuit other = build_layered_ansatz(5, 6, 43);
    bool identical = true;
    for (std::size_t i = 0; i < c.gates().size() && identical; ++i) {
        if (c.gates()[i].is_rotation() && c.gates()[i].angle != other.gates()[i].angle) {
            identical = false;
        }
    }
    CHECK_FALSE(identical);

    CHECK_THROWS_AS(build_layered_ansatz(1, 3, 0), std::invalid_argument);
    CHECK_THROWS_AS(build_layered_ansatz(3, 0, 0), std::invalid_argument);

    // Initial angles live in (-pi, pi] and generators are Pauli axes.
    for (const Gate& g : c.gates()) {
        if (!g.is_rotation()) continue;
        CHECK(g.angle > -kPi);
        CHECK(g.angle <= kPi);
        CHECK(g.generator.is_pauli());
    }
}

TEST_CASE("circuit15 structure matches the 4-qubit diagram") {
    const Circuit c = build_circuit15(4, 1, 9);
    CHECK(c.num_rotations() == 8);
    CHECK(count_kind(c, Gate::Kind::CNOT) == 8);
    CHECK(count_kind(c, Gate::Kind::CZ) == 0);
    for (int d = 0; d < c.num_rotations(); ++d) {
        CHECK(c.rotation(d).generator.pauli_axis() == Pauli::Y);
    }

    // Gate order: R_Y column, first CNOT block (3->0),(2->3),(1->2),(0->1),
    // R_Y column, second block (3->2),(0->3),(1->0),(2->1).
    std::vector<std::pair<int, int>> cnots;
    for (const Gate& g : c.gates()) {
        if (g.kind == Gate::Kind::CNOT) cnots.emplace_back(g.qubit_a, g.qubit_b);
    }
    const std::vector<std::pair<int, int>> expected = {{3, 0}, {2, 3}, {1, 2}, {0, 1},
                                                       {3, 2}, {0, 3}, {1, 0}, {2, 1}};
    CHECK(cnots == expected);

    CHECK(build_circuit15(4, 7, 1).num_rotations() == 56);
    CHECK_THROWS_AS(build_circuit15(2, 1, 0), std::invalid_argument);
}

TEST_CASE("set_gate canonicalizes angles into (-pi, pi]") {
    Circuit c = build_layered_ansatz(2, 1, 3);
    c.set_gate(0, SingleQubitGenerator::pauli(Pauli::Y), 1.5 * kPi);
    CHECK(c.rotation(0).angle == doctest::Approx(-0.5 * kPi));
    CHECK(c.rotation(0).generator.pauli_axis() == Pauli::Y);

    c.set_gate(0, SingleQubitGenerator::pauli(Pauli::X), -kPi);
    CHECK(c.rotation(0).angle == doctest::Approx(kPi));

    c.set_gate(1, SingleQubitGenerator::pauli(Pauli::Z), 0.25);
    CHECK(c.rotation(1).angle == doctest::Approx(0.25));
    CHECK(c.rotation(1).generator.pauli_axis() == Pauli::Z);

    CHECK_THROWS_AS(c.set_gate(2, SingleQubitGenerator::pauli(Pauli::X), 0.0), std::out_of_range);
    CHECK_THROWS_AS(c.set_angle(-1, 0.0), std::out_of_range);
}

TEST_CASE("wrap_angle convention") {
    CHECK(wrap_angle(1.5 * kPi) == doctest::Approx(-0.5 * kPi));
    CHECK(wrap_angle(-kPi) == doctest::Approx(kPi));
    CHECK(wrap_angle(kPi) == doctest::Approx(kPi));
    CHECK(wrap_angle(0.0) == 0.0);
    CHECK(wrap_angle(7.0 * kPi) == doctest::Approx(kPi));
}

TEST_CASE("evaluate: empty circuit, single gate, dense-oracle equivalence") {
    const Circuit empty(3);
    const StateVector init = testutil::random_state(3, 55);
    CHECK(state_diff(evaluate(empty, init), init) == 0.0);

    Circuit single(2);
    single.append(Gate::rotation(0, SingleQubitGenerator::pauli(Pauli::X), kPi));
    StateVector direct = zero_state(2);
    apply_rotation(direct, 0, SingleQubitGenerator::pauli(Pauli::X), kPi);
    CHECK(state_diff(evaluate(single), direct) < 1e-15);

    SplitMix64 rng(61);
    for (int trial = 0; trial < 16; ++trial) {
        const int n = 2 + trial % 3; // up to the spec'd dense-oracle range
        const Circuit c = testutil::random_mixed_circuit(n, 10, rng);
        const StateVector in = testutil::random_state(n, 800 + trial);
        const std::vector<Complex> amps(in.amplitudes().begin(), in.amplitudes().end());
        const auto expected = oracle::mat_vec(oracle::circuit_unitary(c), amps);
        const StateVector out = evaluate(c, in);
        double m = 0.0;
        for (std::uint64_t i = 0; i < out.dim(); ++i) {
            m = std::max(m, std::abs(out.amplitude(i) - expected[i]));
        }
        CHECK(m < 1e-12);
    }

    CHECK_THROWS_AS(evaluate(empty, zero_state(2)), std::invalid_argument);
}

TEST_CASE("a zero-angle rotation is the identity") {
    SplitMix64 rng(71);
    for (int trial = 0; trial < 10; ++trial) {
        Circuit c = testutil::random_parameterized_circuit(3, 12, rng);
        const int d = static_cast<int>(rng.next_below(c.num_rotations()));
        c.set_angle(d, 0.0);

        // The same circuit with gate d dropped.
        Circuit without(3);
        int seen = 0;
        for (const Gate& g : c.gates()) {
            if (g.is_rotation() && seen++ == d) continue;
            without.append(g);
        }
        CHECK(state_diff(evaluate(c), evaluate(without)) < 1e-12);
    }
}

TEST_CASE("appendix-B generators square to the identity") {
    SplitMix64 rng(83);
    for (int trial = 0; trial < 100; ++trial) {
        SingleQubitGenerator g = SingleQubitGenerator::pauli(Pauli::X);
        if (trial % 2 == 0) {
            double cx = rng.next_normal();
            double cy = rng.next_normal();
            double cz = rng.next_normal();
            const double nrm = std::sqrt(cx * cx + cy * cy + cz * cz);
            g = SingleQubitGenerator::arbitrary_axis(cx / nrm, cy / nrm, cz / nrm);
        } else {
            // Random unitary V as a product of axis rotations.
            const SingleQubitGenerator a =
                SingleQubitGenerator::arbitrary_axis(0.0, 0.0, 1.0);
            const SingleQubitGenerator b = SingleQubitGenerator::arbitrary_axis(0.0, 1.0, 0.0);
            const Mat2 v = a.rotation_matrix(rng.next_angle()) * b.rotation_matrix(rng.next_angle());
            g = SingleQubitGenerator::conjugated(testutil::random_axis(rng), v);
        }
        const Mat2 h = g.matrix();
        const Mat2 hh = h * h;
        CHECK(std::abs(hh.m00 - 1.0) < 1e-9);
        CHECK(std::abs(hh.m01) < 1e-9);
        CHECK(std::abs(hh.m10) < 1e-9);
        CHECK(std::abs(hh.m11 - 1.0) < 1e-9);
    }
}

TEST_CASE("conjugated generator rejects a non-unitary conjugator") {
    const Mat2 not_unitary{2.0, 0.0, 0.0, 1.0};
    CHECK_THROWS_AS(SingleQubitGenerator::conjugated(Pauli::Z, not_unitary), std::invalid_argument);
    CHECK_THROWS_AS(SingleQubitGenerator::arbitrary_axis(1.0, 1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(SingleQubitGenerator::pauli(Pauli::I), std::invalid_argument);
}

TEST_CASE("apply_fixed dispatches CZ and CNOT and rejects rotations") {
    StateVector s(2, std::vector<Complex>{0.0, 0.0, 0.0, 1.0});
    apply_fixed(s, Gate::cz(0, 1));
    CHECK(s.amplitude(3) == Complex{-1.0, 0.0});
    apply_fixed(s, Gate::cnot(0, 1));
    CHECK(s.amplitude(1) == Complex{-1.0, 0.0});
    CHECK_THROWS_AS(apply_fixed(s, Gate::rotation(0, SingleQubitGenerator::pauli(Pauli::X), 0.1)),
                    std::invalid_argument);
}

TEST_CASE("append validates qubit indices") {
    Circuit c(2);
    CHECK_THROWS_AS(c.append(Gate::cz(0, 0)), std::out_of_range);
    CHECK_THROWS_AS(c.append(Gate::cnot(0, 2)), std::out_of_range);
    CHECK_THROWS_AS(c.append(Gate::rotation(-1, SingleQubitGenerator::pauli(Pauli::X), 0.0)),
                    std::out_of_range);
}

TEST_CASE("dump format") {
    Circuit c(3);
    c.append(Gate::rotation(0, SingleQubitGenerator::pauli(Pauli::Y), 0.5));
    c.append(Gate::cz(0, 1));
    c.append(Gate::cnot(2, 0));
    CHECK(dump_circuit(c) == "ROT q0 Y 0.5\nCZ q0 q1\nCNOT q2 q0\n");

    Circuit exotic(1);
    exotic.append(Gate::rotation(0, SingleQubitGenerator::arbitrary_axis(1.0, 0.0, 0.0), 0.5));
    CHECK_THROWS_AS(dump_circuit(exotic), std::logic_error);
}
