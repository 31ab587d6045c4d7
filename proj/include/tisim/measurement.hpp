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

#ifndef TISIM_MEASUREMENT_HPP
#define TISIM_MEASUREMENT_HPP

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "tisim/basis.hpp"
#include "tisim/rng.hpp"
#include "tisim/statevector.hpp"

namespace tisim {

namespace detail {

/// Contract `s` with the conjugate of `v` over v's subsystems, leaving the
/// (unnormalized) state of the remaining subsystems in their original order.
/// Its squared norm is the Born probability of the outcome `v`.
inline StateVector partial_inner(const StateVector& v, const StateVector& s) {
    const std::size_t n = s.subsystem_count();
    const std::size_t k = v.subsystem_count();
    std::vector<std::size_t> vpos(k);
    for (std::size_t t = 0; t < k; ++t) vpos[t] = s.position_of(v.subsystems()[t]);

    std::vector<std::size_t> rest_pos;
    std::vector<SubsystemId> rest_ids;
    for (std::size_t p = 0; p < n; ++p) {
        if (std::find(vpos.begin(), vpos.end(), p) == vpos.end()) {
            rest_pos.push_back(p);
            rest_ids.push_back(s.subsystems()[p]);
        }
    }
    const std::size_t m = rest_pos.size();
    std::vector<Amplitude> w(std::size_t{1} << m, Amplitude{0.0, 0.0});
    for (std::size_t r = 0; r < w.size(); ++r) {
        std::size_t base = 0;
        for (std::size_t q = 0; q < m; ++q) {
            base |= ((r >> (m - 1 - q)) & 1u) << (n - 1 - rest_pos[q]);
        }
        Amplitude acc{0.0, 0.0};
        for (std::size_t u = 0; u < v.dimension(); ++u) {
            std::size_t full = base;
            for (std::size_t t = 0; t < k; ++t) {
                full |= ((u >> (k - 1 - t)) & 1u) << (n - 1 - vpos[t]);
            }
            acc += std::conj(v.amplitude(u)) * s.amplitude(full);
        }
        w[r] = acc;
    }
    return StateVector(std::move(rest_ids), std::move(w));
}

inline void require_subset(const StateVector& s, const MeasurementBasis& basis) {
    for (const SubsystemId& id : basis.subsystems()) {
        if (!s.has_subsystem(id)) {
            throw std::invalid_argument("measurement: basis subsystem '" + id +
                                        "' is not part of the state");
        }
    }
}

} // namespace detail

/// Expansion coefficients of `s` in a basis spanning all of its subsystems,
/// in basis declaration order. The basis may list the subsystems in any
/// order; vectors are aligned internally.
inline std::vector<std::pair<std::string, Amplitude>> decompose(const StateVector& s,
                                                                const MeasurementBasis& basis) {
    detail::require_subset(s, basis);
    if (basis.subsystems().size() != s.subsystem_count()) {
        throw std::invalid_argument("decompose: basis must span every subsystem of the state");
    }
    std::vector<std::pair<std::string, Amplitude>> out;
    out.reserve(basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k) {
        const StateVector aligned = reorder(basis.vector(k), s.subsystems());
        out.emplace_back(basis.label(k), inner(aligned, s));
    }
    return out;
}

/// Born probabilities of each basis outcome, in basis declaration order.
inline std::vector<std::pair<std::string, double>> outcome_distribution(
    const StateVector& s, const MeasurementBasis& basis) {
    detail::require_subset(s, basis);
    std::vector<std::pair<std::string, double>> out;
    out.reserve(basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k) {
        out.emplace_back(basis.label(k),
                         detail::partial_inner(basis.vector(k), s).norm_squared());
    }
    return out;
}

inline double probability_of(const std::vector<std::pair<std::string, double>>& dist,
                             const std::string& label) {
    for (const auto& [l, p] : dist) {
        if (l == label) return p;
    }
    throw std::invalid_argument("probability_of: unknown outcome '" + label + "'");
}

/// Normalized post-measurement state of the unmeasured subsystems, given
/// that `outcome` occurred. The global phase is not pinned down; compare
/// results with fidelity(), not componentwise.
inline StateVector conditional_state(const StateVector& s, const MeasurementBasis& basis,
                                     const std::string& outcome) {
    detail::require_subset(s, basis);
    const StateVector w = detail::partial_inner(basis.vector_for(outcome), s);
    const double p = w.norm_squared();
    if (p <= kAlgebraTolerance) {
        throw std::invalid_argument("conditional_state: outcome '" + outcome +
                                    "' has (near-)zero probability; cannot condition on it");
    }
    return w.normalized();
}

struct MeasurementDraw {
    std::string outcome;
    double probability = 0.0;
    StateVector conditional;
};

/// One completed measurement: the outcome is drawn by inverse CDF over the
/// basis declaration order from a single uniform draw, so a fixed seed gives
/// a fixed outcome sequence.
inline MeasurementDraw measure(const StateVector& s, const MeasurementBasis& basis,
                               RandomStream& rng) {
    const auto dist = outcome_distribution(s, basis);
    const double u = rng.uniform01();
    double cum = 0.0;
    std::size_t pick = dist.size();
    for (std::size_t k = 0; k < dist.size(); ++k) {
        cum += dist[k].second;
        if (u < cum) {
            pick = k;
            break;
        }
    }
    if (pick == dist.size()) {
        // u landed beyond the accumulated total (rounding); take the last
        // outcome with nonzero probability.
        for (std::size_t k = dist.size(); k-- > 0;) {
            if (dist[k].second > 0.0) {
                pick = k;
                break;
            }
        }
    }
    return MeasurementDraw{dist[pick].first, dist[pick].second,
                           conditional_state(s, basis, dist[pick].first)};
}

/// Schmidt coefficients of the bipartition (left | complement), descending.
/// Squares sum to 1 for a normalized state. A product state has exactly one
/// nonzero coefficient; a maximally entangled two-qubit state has
/// (1/sqrt2, 1/sqrt2).
inline std::vector<double> schmidt_coefficients(const StateVector& s,
                                                const std::vector<SubsystemId>& left) {
    if (left.empty() || left.size() >= s.subsystem_count()) {
        throw std::invalid_argument(
            "schmidt_coefficients: bipartition must be a nonempty proper subset");
    }
    std::vector<std::size_t> lpos(left.size());
    for (std::size_t t = 0; t < left.size(); ++t) lpos[t] = s.position_of(left[t]);
    std::vector<bool> seen(s.subsystem_count(), false);
    for (std::size_t p : lpos) {
        if (seen[p]) throw std::invalid_argument("schmidt_coefficients: duplicate subsystem");
        seen[p] = true;
    }
    std::vector<std::size_t> rpos;
    for (std::size_t p = 0; p < s.subsystem_count(); ++p) {
        if (!seen[p]) rpos.push_back(p);
    }

    const std::size_t n = s.subsystem_count();
    const auto rows = std::size_t{1} << lpos.size();
    const auto cols = std::size_t{1} << rpos.size();
    Eigen::MatrixXcd m(rows, cols);
    for (std::size_t a = 0; a < rows; ++a) {
        for (std::size_t b = 0; b < cols; ++b) {
            std::size_t idx = 0;
            for (std::size_t t = 0; t < lpos.size(); ++t) {
                idx |= ((a >> (lpos.size() - 1 - t)) & 1u) << (n - 1 - lpos[t]);
            }
            for (std::size_t q = 0; q < rpos.size(); ++q) {
                idx |= ((b >> (rpos.size() - 1 - q)) & 1u) << (n - 1 - rpos[q]);
            }
            m(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = s.amplitude(idx);
        }
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    std::vector<double> out(svd.singularValues().data(),
                            svd.singularValues().data() + svd.singularValues().size());
    return out; // Eigen returns them in descending order
}

struct BellMatch {
    std::string label;
    double fidelity = 0.0;
};

/// Closest Bell state to a two-subsystem state, by fidelity.
inline BellMatch best_bell_match(const StateVector& s) {
    if (s.subsystem_count() != 2) {
        throw std::invalid_argument("best_bell_match: state must have exactly two subsystems");
    }
    BellMatch best;
    for (BellKind k : {BellKind::phi_plus, BellKind::phi_minus, BellKind::psi_plus,
                       BellKind::psi_minus}) {
        const double f = fidelity(bell_state(k, s.subsystems()[0], s.subsystems()[1]), s);
        if (f > best.fidelity) {
            best.label = to_string(k);
            best.fidelity = f;
        }
    }
    return best;
}

/// Expectation <(sigma.a)_i (sigma.b)_j> of the product of +-1 spin outcomes
/// along the given axes. Always in [-1, 1].
inline double spin_correlation(const StateVector& s, const SubsystemId& i,
                               const MeasurementAxis& a, const SubsystemId& j,
                               const MeasurementAxis& b) {
    if (i == j) {
        throw std::invalid_argument("spin_correlation: subsystems must differ");
    }
    StateVector t = apply_operator(s, {i}, pauli_dot(a));
    t = apply_operator(t, {j}, pauli_dot(b));
    return inner(s, t).real();
}

} // namespace tisim

#endif // TISIM_MEASUREMENT_HPP
