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

#ifndef TISIM_TESTS_TEST_SUPPORT_HPP
#define TISIM_TESTS_TEST_SUPPORT_HPP

// Generators and independent oracles shared by the test suite. Everything
// here recomputes results from first principles (plain loops over indices);
// none of it reuses the library's code paths it is checking.

#include <array>
#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "tisim/basis.hpp"
#include "tisim/rng.hpp"
#include "tisim/statevector.hpp"

namespace tisim::test {

inline StateVector random_state(RandomStream& rng, std::vector<SubsystemId> ids) {
    const std::size_t dim = std::size_t{1} << ids.size();
    std::vector<Amplitude> amps(dim);
    for (auto& a : amps) {
        a = Amplitude{2.0 * rng.uniform01() - 1.0, 2.0 * rng.uniform01() - 1.0};
    }
    return StateVector(std::move(ids), std::move(amps)).normalized();
}

inline MeasurementAxis random_axis(RandomStream& rng) {
    const double cos_theta = 2.0 * rng.uniform01() - 1.0;
    const double sin_theta = std::sqrt(std::max(0.0, 1.0 - cos_theta * cos_theta));
    const double phi = 2.0 * M_PI * rng.uniform01();
    return MeasurementAxis(sin_theta * std::cos(phi), sin_theta * std::sin(phi), cos_theta);
}

/// Random orthonormal basis over `ids` via Gram-Schmidt on random vectors,
/// labeled "o0", "o1", ...
inline MeasurementBasis random_basis(RandomStream& rng, std::vector<SubsystemId> ids) {
    const std::size_t dim = std::size_t{1} << ids.size();
    std::vector<std::vector<Amplitude>> vecs;
    while (vecs.size() < dim) {
        std::vector<Amplitude> v(dim);
        for (auto& a : v) {
            a = Amplitude{2.0 * rng.uniform01() - 1.0, 2.0 * rng.uniform01() - 1.0};
        }
        for (int pass = 0; pass < 2; ++pass) { // re-orthogonalize for stability
            for (const auto& u : vecs) {
                Amplitude proj{0.0, 0.0};
                for (std::size_t i = 0; i < dim; ++i) proj += std::conj(u[i]) * v[i];
                for (std::size_t i = 0; i < dim; ++i) v[i] -= proj * u[i];
            }
        }
        double normatum = 0.0;
        for (const auto& a : v) normatum += std::norm(a);
        if (normatum < 1e-6) continue; // unlucky draw, try again
        const double inv = 1.0 / std::sqrt(normatum);
        for (auto& a : v) a *= inv;
        vecs.push_back(std::move(v));
    }
    std::vector<std::pair<std::string, StateVector>> outcomes;
    for (std::size_t k = 0; k < dim; ++k) {
        outcomes.emplace_back("o" + std::to_string(k), StateVector(ids, vecs[k]));
    }
    return MeasurementBasis(ids, std::move(outcomes));
}

/// Closed-form singular values of the 2x2 coefficient matrix of a two-qubit
/// state (first subsystem as the row index), descending.
inline std::array<double, 2> schmidt_2x2_oracle(const StateVector& s) {
    const Amplitude a = s.amplitude(0b00), b = s.amplitude(0b01);
    const Amplitude c = s.amplitude(0b10), d = s.amplitude(0b11);
    const double t = std::norm(a) + std::norm(b) + std::norm(c) + std::norm(d);
    const double det = std::abs(a * d - b * c);
    const double disc = std::sqrt(std::max(0.0, t * t - 4.0 * det * det));
    return {std::sqrt((t + disc) / 2.0), std::sqrt(std::max(0.0, (t - disc) / 2.0))};
}

/// Index-permutation recomputation of reorder(): for every new index, read
/// the bit of each subsystem from the old layout directly.
inline StateVector reorder_oracle(const StateVector& s, const std::vector<SubsystemId>& order) {
    const std::size_t n = s.subsystem_count();
    std::vector<Amplitude> amps(s.dimension());
    for (std::size_t j = 0; j < amps.size(); ++j) {
        std::size_t i = 0;
        for (std::size_t k = 0; k < n; ++k) {
            const std::size_t bit = (j >> (n - 1 - k)) & 1u;
            i |= bit << (n - 1 - s.position_of(order[k]));
        }
        amps[j] = s.amplitude(i);
    }
    return StateVector(order, std::move(amps));
}

/// <s| (sigma.a x sigma.b) |s> via an explicit 4x4 operator product; `s`
/// must be a two-qubit state ordered (first, second).
inline double spin_correlation_oracle(const StateVector& s, const MeasurementAxis& na,
                                      const MeasurementAxis& nb) {
    auto pauli = [](const MeasurementAxis& n) {
        return std::array<Amplitude, 4>{Amplitude{n.z, 0.0}, Amplitude{n.x, -n.y},
                                        Amplitude{n.x, n.y}, Amplitude{-n.z, 0.0}};
    };
    const auto pa = pauli(na), pb = pauli(nb);
    std::array<Amplitude, 16> op{};
    for (std::size_t r1 = 0; r1 < 2; ++r1)
        for (std::size_t c1 = 0; c1 < 2; ++c1)
            for (std::size_t r2 = 0; r2 < 2; ++r2)
                for (std::size_t c2 = 0; c2 < 2; ++c2)
                    op[(r1 * 2 + r2) * 4 + (c1 * 2 + c2)] = pa[r1 * 2 + c1] * pb[r2 * 2 + c2];
    Amplitude e{0.0, 0.0};
    for (std::size_t r = 0; r < 4; ++r) {
        Amplitude row{0.0, 0.0};
        for (std::size_t c = 0; c < 4; ++c) row += op[r * 4 + c] * s.amplitude(c);
        e += std::conj(s.amplitude(r)) * row;
    }
    return e.real();
}

} // namespace tisim::test

#endif // TISIM_TESTS_TEST_SUPPORT_HPP
