// Copyright 2026 The tisim developers.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <limits>

#include "test_support.hpp"
#include "tisim/statevector.hpp"

using namespace tisim;

namespace {
constexpr double kRoot2Inv = 0.70710678118654752;
}

TEST_CASE("basis kets and patterns", "[statevector]") {
    const StateVector s = StateVector::basis_ket({"1", "2"}, "+-");
    REQUIRE(s.dimension() == 4);
    REQUIRE(s.amplitude(0b01) == Amplitude{1.0, 0.0});
    REQUIRE(s.pattern_of(0b01) == "+-");
    REQUIRE(s.pattern_of(0b10) == "-+");
    REQUIRE_THROWS_AS(StateVector::basis_ket({"1"}, "+-"), std::invalid_argument);
    REQUIRE_THROWS_AS(StateVector::basis_ket({"1"}, "x"), std::invalid_argument);
}

TEST_CASE("construction guards", "[statevector]") {
    REQUIRE_THROWS_AS(StateVector({"1", "1"}, std::vector<Amplitude>(4)), std::invalid_argument);
    REQUIRE_THROWS_AS(StateVector({"1"}, std::vector<Amplitude>(3)), std::invalid_argument);
    const double nan = std::numeric_limits<double>::quiet_NaN();
    REQUIRE_THROWS_AS(StateVector({"1"}, {Amplitude{nan, 0.0}, Amplitude{0.0, 0.0}}),
                      std::invalid_argument);
    std::vector<SubsystemId> too_many;
    for (int i = 0; i < 13; ++i) too_many.push_back(std::to_string(i));
    REQUIRE_THROWS_AS(StateVector::basis_ket(too_many, std::string(13, '+')),
                      std::invalid_argument);
}

TEST_CASE("tensor of basis kets", "[statevector]") {
    const StateVector s = tensor(ket_plus("1"), ket_minus("2"));
    REQUIRE(s.subsystems() == std::vector<SubsystemId>{"1", "2"});
    for (std::size_t i = 0; i < 4; ++i) {
        REQUIRE(std::abs(s.amplitude(i) - (i == 0b01 ? Amplitude{1.0, 0.0} : Amplitude{})) <
                kAlgebraTolerance);
    }
}

TEST_CASE("tensor of two singlets gives the four-particle state", "[statevector]") {
    const StateVector s = tensor(bell_state(BellKind::psi_minus, "1", "2"),
                                 bell_state(BellKind::psi_minus, "3", "4"));
    REQUIRE(s.subsystem_count() == 4);
    // (|+-+-> - |+--+> - |-++-> + |-+-+>)/2
    for (std::size_t i = 0; i < 16; ++i) {
        double expected = 0.0;
        if (s.pattern_of(i) == "+-+-") expected = 0.5;
        if (s.pattern_of(i) == "+--+") expected = -0.5;
        if (s.pattern_of(i) == "-++-") expected = -0.5;
        if (s.pattern_of(i) == "-+-+") expected = 0.5;
        REQUIRE(std::abs(s.amplitude(i) - Amplitude{expected, 0.0}) < kAlgebraTolerance);
    }
    REQUIRE(std::abs(s.norm() - 1.0) < kAlgebraTolerance);
}

TEST_CASE("tensor rejects overlapping subsystems and preserves norm", "[statevector]") {
    REQUIRE_THROWS_WITH(tensor(ket_plus("1"), ket_minus("1")),
                        Catch::Matchers::ContainsSubstring("'1'"));

    RandomStream rng(7001);
    for (int rep = 0; rep < 50; ++rep) {
        const StateVector a = test::random_state(rng, {"a1", "a2"});
        const StateVector b = test::random_state(rng, {"b1"});
        REQUIRE(std::abs(tensor(a, b).norm() - 1.0) < kAlgebraTolerance);
    }
}

TEST_CASE("inner products", "[statevector]") {
    REQUIRE(std::abs(inner(ket_plus("1"), ket_plus("1")) - Amplitude{1.0, 0.0}) <
            kAlgebraTolerance);
    REQUIRE(std::abs(inner(bell_state(BellKind::psi_plus, "1", "2"),
                           bell_state(BellKind::psi_minus, "1", "2"))) < kAlgebraTolerance);
    REQUIRE_THROWS_AS(inner(ket_plus("1"), ket_plus("2")), std::invalid_argument);

    // Conjugate linearity in the first slot.
    RandomStream rng(7002);
    const StateVector x = test::random_state(rng, {"q"});
    const StateVector y = test::random_state(rng, {"q"});
    const Amplitude c{0.3, -1.2};
    REQUIRE(std::abs(inner(c * x, y) - std::conj(c) * inner(x, y)) < kAlgebraTolerance);
    REQUIRE(std::abs(inner(x, c * y) - c * inner(x, y)) < kAlgebraTolerance);
    REQUIRE(inner(x, x).real() >= 0.0);
    REQUIRE(std::abs(inner(x, x).imag()) < kAlgebraTolerance);
}

TEST_CASE("first coefficient of the Bell-basis rewrite", "[statevector]") {
    const StateVector four = tensor(bell_state(BellKind::psi_minus, "1", "2"),
                                    bell_state(BellKind::psi_minus, "3", "4"));
    const StateVector basis_vec = tensor(bell_state(BellKind::psi_plus, "1", "4"),
                                         bell_state(BellKind::psi_plus, "2", "3"));
    const Amplitude c = inner(reorder(basis_vec, {"1", "2", "3", "4"}), four);
    REQUIRE(std::abs(c - Amplitude{0.5, 0.0}) < kAlgebraTolerance);
}

TEST_CASE("bell states", "[statevector]") {
    const StateVector psi_minus = bell_state(BellKind::psi_minus, "1", "2");
    REQUIRE(std::abs(psi_minus.amplitude(0b01) - Amplitude{kRoot2Inv, 0.0}) < kAlgebraTolerance);
    REQUIRE(std::abs(psi_minus.amplitude(0b10) - Amplitude{-kRoot2Inv, 0.0}) < kAlgebraTolerance);

    const StateVector phi_plus = bell_state(BellKind::phi_plus, "3", "4");
    REQUIRE(std::abs(phi_plus.amplitude(0b00) - Amplitude{kRoot2Inv, 0.0}) < kAlgebraTolerance);
    REQUIRE(std::abs(phi_plus.amplitude(0b11) - Amplitude{kRoot2Inv, 0.0}) < kAlgebraTolerance);

    const BellKind kinds[] = {BellKind::phi_plus, BellKind::phi_minus, BellKind::psi_plus,
                              BellKind::psi_minus};
    for (BellKind a : kinds) {
        for (BellKind b : kinds) {
            const Amplitude g = inner(bell_state(a, "i", "j"), bell_state(b, "i", "j"));
            REQUIRE(std::abs(g - (a == b ? Amplitude{1.0, 0.0} : Amplitude{})) <
                    kAlgebraTolerance);
        }
    }
    REQUIRE_THROWS_AS(bell_state(BellKind::phi_plus, "1", "1"), std::invalid_argument);
}

TEST_CASE("reorder basics", "[statevector]") {
    RandomStream rng(7003);
    const StateVector s = test::random_state(rng, {"1", "2", "3"});
    const StateVector same = reorder(s, {"1", "2", "3"});
    for (std::size_t i = 0; i < s.dimension(); ++i) {
        REQUIRE(same.amplitude(i) == s.amplitude(i));
    }

    const StateVector swapped = reorder(tensor(ket_plus("1"), ket_minus("2")), {"2", "1"});
    REQUIRE(swapped.subsystems() == std::vector<SubsystemId>{"2", "1"});
    REQUIRE(std::abs(swapped.amplitude(0b10) - Amplitude{1.0, 0.0}) < kAlgebraTolerance);

    REQUIRE_THROWS_AS(reorder(s, {"1", "2"}), std::invalid_argument);
    REQUIRE_THROWS_AS(reorder(s, {"1", "2", "2"}), std::invalid_argument);
    REQUIRE_THROWS_AS(reorder(s, {"1", "2", "x"}), std::invalid_argument);
}

TEST_CASE("reorder preserves inner products and matches direct recomputation",
          "[statevector]") {
    RandomStream rng(7004);
    const std::vector<SubsystemId> ids{"a", "b", "c", "d"};
    for (int rep = 0; rep < 50; ++rep) {
        const StateVector x = test::random_state(rng, ids);
        const StateVector y = test::random_state(rng, ids);
        std::vector<SubsystemId> perm = ids;
        for (std::size_t k = perm.size(); k > 1; --k) {
            std::swap(perm[k - 1], perm[rng.next_u64() % k]);
        }
        const StateVector rx = reorder(x, perm);
        const StateVector ry = reorder(y, perm);
        REQUIRE(std::abs(inner(rx, ry) - inner(x, y)) < kAlgebraTolerance);

        const StateVector oracle = test::reorder_oracle(x, perm);
        for (std::size_t i = 0; i < rx.dimension(); ++i) {
            REQUIRE(std::abs(rx.amplitude(i) - oracle.amplitude(i)) < kAlgebraTolerance);
        }
    }
}

TEST_CASE("normalization", "[statevector]") {
    const StateVector raw({"1"}, {Amplitude{3.0, 0.0}, Amplitude{0.0, 4.0}});
    const StateVector n = raw.normalized();
    REQUIRE(std::abs(n.norm() - 1.0) < kAlgebraTolerance);
    REQUIRE_THROWS_AS(StateVector({"1"}, {Amplitude{}, Amplitude{}}).normalized(),
                      std::invalid_argument);
}

TEST_CASE("apply_operator applies a gate to the right subsystem", "[statevector]") {
    const std::vector<Amplitude> pauli_x{Amplitude{0.0, 0.0}, Amplitude{1.0, 0.0},
                                         Amplitude{1.0, 0.0}, Amplitude{0.0, 0.0}};
    const StateVector s = tensor(ket_plus("1"), ket_plus("2"));
    const StateVector flipped = apply_operator(s, {"2"}, pauli_x);
    REQUIRE(std::abs(flipped.amplitude(0b01) - Amplitude{1.0, 0.0}) < kAlgebraTolerance);
    REQUIRE_THROWS_AS(apply_operator(s, {"2"}, std::vector<Amplitude>(3)),
                      std::invalid_argument);
}

TEST_CASE("fidelity ignores global phase", "[statevector]") {
    RandomStream rng(7005);
    const StateVector s = test::random_state(rng, {"1", "2"});
    const StateVector phased = Amplitude{std::cos(1.1), std::sin(1.1)} * s;
    REQUIRE(std::abs(fidelity(s, phased) - 1.0) < kAlgebraTolerance);
}
