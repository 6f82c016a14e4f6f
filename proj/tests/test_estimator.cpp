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

#include "rotovqe/estimator.hpp"
#include "test_util.hpp"

using namespace rotovqe;

namespace {

Circuit single_rx(double theta) {
    Circuit c(1);
    c.append(Gate::rotation(0, SingleQubitGenerator::pauli(Pauli::X), theta));
    return c;
}

Hamiltonian single_z() {
    Hamiltonian h(1);
    h.add_term(1.0, PauliString("Z"));
    return h;
}

} // namespace

TEST_CASE("exact energy of <Z> under R_X") {
    EvalCounter counter;
    CHECK(energy(single_rx(0.0), single_z(), EstimatorConfig::exact(), counter) ==
          doctest::Approx(1.0));
    CHECK(energy(single_rx(kPi), single_z(), EstimatorConfig::exact(), counter) ==
          doctest::Approx(-1.0));
    CHECK(counter.count == 2);
}

TEST_CASE("counter increments once per estimate regardless of term count") {
    SplitMix64 rng(401);
    const Hamiltonian h = testutil::random_hamiltonian(3, 6, rng);
    const Circuit c = build_layered_ansatz(3, 2, 4);
    EvalCounter counter;
    const Estimator exact(h, EstimatorConfig::exact());
    exact.energy(c, counter);
    CHECK(counter.count == 1);
    const Estimator sampled(h, EstimatorConfig::sampled(50, 9));
    sampled.energy(c, counter);
    sampled.energy(c, counter);
    CHECK(counter.count == 3);
    // exact_energy is bookkeeping and does not count.
    exact.exact_energy(c);
    CHECK(counter.count == 3);
}

TEST_CASE("sampled energy with a million shots sits within the statistical bound") {
    SplitMix64 rng(411);
    const Circuit c = build_layered_ansatz(3, 3, 21);
    Hamiltonian h(3);
    h.add_term(0.8, PauliString("ZZI"));
    h.add_term(-0.5, PauliString("XIY"));
    EvalCounter counter;
    const double exact = energy(c, h, EstimatorConfig::exact(), counter);
    const double sampled = energy(c, h, EstimatorConfig::sampled(1000000, 5), counter);
    CHECK(std::abs(sampled - exact) < 5e-3);
}

TEST_CASE("identity terms contribute deterministically in sampled mode") {
    Hamiltonian h(2);
    h.add_term(2.5, PauliString("II"));
    const Circuit c = build_layered_ansatz(2, 1, 2);
    EvalCounter counter;
    // A single shot would make any sampled term +-1; the identity term must
    // still come out as exactly its weight.
    const double e = energy(c, h, EstimatorConfig::sampled(1, 3), counter);
    CHECK(e == 2.5);
}

TEST_CASE("sampled mode is bit-reproducible per seed") {
    SplitMix64 rng(421);
    const Hamiltonian h = testutil::random_hamiltonian(3, 5, rng);
    const Circuit c = build_layered_ansatz(3, 2, 13);
    EvalCounter c1, c2, c3;
    const double a = energy(c, h, EstimatorConfig::sampled(200, 77), c1);
    const double b = energy(c, h, EstimatorConfig::sampled(200, 77), c2);
    const double other = energy(c, h, EstimatorConfig::sampled(200, 78), c3);
    CHECK(a == b);
    CHECK(a != other);

    // The evaluation index feeds the per-term streams: the second estimate
    // from one counter differs from the first.
    EvalCounter shared;
    const Estimator est(h, EstimatorConfig::sampled(200, 77));
    const double first = est.energy(c, shared);
    const double second = est.energy(c, shared);
    CHECK(first == a);
    CHECK(first != second);
}

TEST_CASE("sampled estimates are unbiased across seeds") {
    SplitMix64 rng(431);
    const Hamiltonian h = testutil::random_hamiltonian(3, 4, rng);
    const Circuit c = build_layered_ansatz(3, 2, 31);
    EvalCounter counter;
    const double exact = energy(c, h, EstimatorConfig::exact(), counter);

    const int shots = 1000;
    const int seeds = 200;
    double mean = 0.0;
    for (int s = 0; s < seeds; ++s) {
        EvalCounter k;
        mean += energy(c, h, EstimatorConfig::sampled(shots, 1000 + s), k);
    }
    mean /= seeds;

    // Standard error from the exact per-term variances.
    const StateVector psi = evaluate(c);
    double var = 0.0;
    for (const PauliTerm& t : h.terms()) {
        const double m = expectation_of_word(psi, t.word);
        var += t.weight * t.weight * (1.0 - m * m) / shots;
    }
    const double standard_error = std::sqrt(var / seeds);
    CHECK(std::abs(mean - exact) < 4.0 * standard_error);
}

TEST_CASE("state overlap energy") {
    const Circuit c = build_circuit15(4, 2, 17);
    const StateVector out = evaluate(c);
    EvalCounter counter;
    CHECK(state_overlap_energy(c, out, EstimatorConfig::exact(), counter) ==
          doctest::Approx(-1.0).epsilon(1e-12));

    // Orthogonal target: flip the output's first two amplitudes with signs.
    const StateVector target = testutil::random_state(4, 5);
    const double e = state_overlap_energy(c, target, EstimatorConfig::exact(), counter);
    CHECK(e == doctest::Approx(-std::norm(inner_product(target, out))).epsilon(1e-12));
    CHECK(e <= 0.0);
    CHECK(e >= -1.0);

    Circuit x_only(2);
    x_only.append(Gate::rotation(0, SingleQubitGenerator::pauli(Pauli::X), kPi));
    const StateVector zero = zero_state(2);
    CHECK(state_overlap_energy(x_only, zero, EstimatorConfig::exact(), counter) ==
          doctest::Approx(0.0).epsilon(1e-12));

    // Sampled overlap draws Bernoulli outcomes.
    EvalCounter k;
    const double sampled = state_overlap_energy(c, out, EstimatorConfig::sampled(500, 3), k);
    CHECK(sampled == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(k.count == 1);

    CHECK_THROWS_AS(state_overlap_energy(c, zero, EstimatorConfig::exact(), counter),
                    std::invalid_argument);
}

TEST_CASE("estimator config validation") {
    CHECK_THROWS_AS(EstimatorConfig::sampled(0, 1), std::invalid_argument);
    CHECK(EstimatorConfig::exact().is_exact());
    CHECK_FALSE(EstimatorConfig::sampled(10, 1).is_exact());
}
