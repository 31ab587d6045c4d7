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

#ifndef TISIM_BASIS_HPP
#define TISIM_BASIS_HPP

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "tisim/statevector.hpp"

namespace tisim {

/// Unit 3-vector giving a spin measurement direction.
struct MeasurementAxis {
    double x = 0.0;
    double y = 0.0;
    double z = 1.0;

    MeasurementAxis() = default;

    MeasurementAxis(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {
        const double n = std::sqrt(x * x + y * y + z * z);
        if (!std::isfinite(n) || std::abs(n - 1.0) > kAlgebraTolerance) {
            throw std::invalid_argument("MeasurementAxis: vector must have unit norm");
        }
    }

    static MeasurementAxis z_axis() { return MeasurementAxis(0.0, 0.0, 1.0); }
    static MeasurementAxis x_axis() { return MeasurementAxis(1.0, 0.0, 0.0); }

    /// Axis in the x-z plane at `angle` radians from +z (so 0 is z, pi/2 is x).
    static MeasurementAxis in_xz_plane(double angle) {
        return MeasurementAxis(std::sin(angle), 0.0, std::cos(angle));
    }
};

/// Pauli vector contracted with an axis, in the |+>=up, |->=down z-eigenbasis:
///   sigma.n = [[nz, nx - i ny], [nx + i ny, -nz]]
inline std::vector<Amplitude> pauli_dot(const MeasurementAxis& n) {
    return {Amplitude{n.z, 0.0}, Amplitude{n.x, -n.y},
            Amplitude{n.x, n.y}, Amplitude{-n.z, 0.0}};
}

/// Orthonormal, complete family of outcome-labeled vectors on a subsystem
/// subset. Outcome order is significant: sampling walks the declared order
/// with a single uniform draw, and reports list outcomes in this order.
class MeasurementBasis {
public:
    MeasurementBasis(std::vector<SubsystemId> subsystems,
                     std::vector<std::pair<std::string, StateVector>> outcomes)
        : subsystems_(std::move(subsystems)), outcomes_(std::move(outcomes)) {
        const std::size_t dim = std::size_t{1} << subsystems_.size();
        if (outcomes_.size() != dim) {
            throw std::invalid_argument(
                "MeasurementBasis: need exactly 2^(subset size) outcomes to be complete");
        }
        for (auto& [label, vec] : outcomes_) {
            if (vec.subsystems() != subsystems_) {
                throw std::invalid_argument("MeasurementBasis: outcome '" + label +
                                            "' is not over the declared subsystem list");
            }
        }
        for (std::size_t i = 0; i < outcomes_.size(); ++i) {
            for (std::size_t j = i; j < outcomes_.size(); ++j) {
                const Amplitude g = inner(outcomes_[i].second, outcomes_[j].second);
                const double want = (i == j) ? 1.0 : 0.0;
                if (std::abs(g - Amplitude{want, 0.0}) > kAlgebraTolerance) {
                    throw std::invalid_argument("MeasurementBasis: outcomes '" +
                                                outcomes_[i].first + "' and '" +
                                                outcomes_[j].first + "' are not orthonormal");
                }
            }
        }
        // 2^k orthonormal vectors in a 2^k-dimensional space: the Gram check
        // above already forces the resolution of identity.
    }

    /// z-eigenbasis {|+>, |->} with custom outcome labels.
    static MeasurementBasis two_outcomes(const SubsystemId& id, const std::string& plus_label,
                                         const std::string& minus_label) {
        return MeasurementBasis({id}, {{plus_label, ket_plus(id)}, {minus_label, ket_minus(id)}});
    }

    static MeasurementBasis spin_z(const SubsystemId& id) { return two_outcomes(id, "+", "-"); }

    /// Eigenbasis of sigma.n, labels "+" and "-" for the +-1 eigenvalues.
    static MeasurementBasis along_axis(const SubsystemId& id, const MeasurementAxis& n) {
        const double theta = std::acos(std::clamp(n.z, -1.0, 1.0));
        const double phi = std::atan2(n.y, n.x);
        const double c = std::cos(theta / 2.0);
        const double s = std::sin(theta / 2.0);
        const Amplitude eip = std::polar(1.0, phi);
        StateVector up({id}, {Amplitude{c, 0.0}, s * eip});
        StateVector down({id}, {-s * std::conj(eip), Amplitude{c, 0.0}});
        return MeasurementBasis({id}, {{"+", std::move(up)}, {"-", std::move(down)}});
    }

    /// Bell basis over (i, j), declared in the order Phi+, Phi-, Psi+, Psi-.
    static MeasurementBasis bell(const SubsystemId& i, const SubsystemId& j) {
        std::vector<std::pair<std::string, StateVector>> outcomes;
        for (BellKind k : {BellKind::phi_plus, BellKind::phi_minus, BellKind::psi_plus,
                           BellKind::psi_minus}) {
            outcomes.emplace_back(to_string(k), bell_state(k, i, j));
        }
        return MeasurementBasis({i, j}, std::move(outcomes));
    }

    /// z product basis over (i, j): "++", "+-", "-+", "--".
    static MeasurementBasis product_z(const SubsystemId& i, const SubsystemId& j) {
        std::vector<std::pair<std::string, StateVector>> outcomes;
        for (const char* p : {"++", "+-", "-+", "--"}) {
            outcomes.emplace_back(p, StateVector::basis_ket({i, j}, p));
        }
        return MeasurementBasis({i, j}, std::move(outcomes));
    }

    const std::vector<SubsystemId>& subsystems() const { return subsystems_; }
    std::size_t size() const { return outcomes_.size(); }
    const std::string& label(std::size_t k) const { return outcomes_.at(k).first; }
    const StateVector& vector(std::size_t k) const { return outcomes_.at(k).second; }

    const StateVector& vector_for(const std::string& label) const {
        for (const auto& [l, v] : outcomes_) {
            if (l == label) return v;
        }
        throw std::invalid_argument("MeasurementBasis: unknown outcome '" + label + "'");
    }

    bool has_label(const std::string& label) const {
        for (const auto& [l, v] : outcomes_) {
            if (l == label) return true;
        }
        return false;
    }

private:
    std::vector<SubsystemId> subsystems_;
    std::vector<std::pair<std::string, StateVector>> outcomes_;
};

/// Tensor product of two bases on disjoint subsets; outcome labels are joined
/// with a comma, a-major order.
inline MeasurementBasis tensor(const MeasurementBasis& a, const MeasurementBasis& b) {
    std::vector<SubsystemId> subsystems(a.subsystems());
    subsystems.insert(subsystems.end(), b.subsystems().begin(), b.subsystems().end());
    std::vector<std::pair<std::string, StateVector>> outcomes;
    outcomes.reserve(a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            outcomes.emplace_back(a.label(i) + "," + b.label(j),
                                  tensor(a.vector(i), b.vector(j)));
        }
    }
    return MeasurementBasis(std::move(subsystems), std::move(outcomes));
}

} // namespace tisim

#endif // TISIM_BASIS_HPP
