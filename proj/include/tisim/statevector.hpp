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

#ifndef TISIM_STATEVECTOR_HPP
#define TISIM_STATEVECTOR_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace tisim {

using Amplitude = std::complex<double>;

/// Label of one two-level subsystem ("1".."4", "atom1", "path", ...).
/// Unique within any StateVector it appears in.
using SubsystemId = std::string;

/// Tolerance for exact-algebra checks (norms, orthogonality, reconstruction).
inline constexpr double kAlgebraTolerance = 1e-12;

/// Tolerance for checks that go through singular values.
inline constexpr double kSchmidtTolerance = 1e-9;

/// Dense amplitude storage caps out here; every built-in scenario needs <= 5.
inline constexpr std::size_t kMaxSubsystems = 12;

/// Complex state vector over an ordered list of labeled two-level subsystems.
///
/// Amplitudes are stored densely, indexed by bit strings: the subsystem at
/// position k (0-based) of n owns bit (n-1-k) of the index, with bit value
/// 0 for the |+> outcome and 1 for |->. With that big-endian convention the
/// amplitude array of a tensor product is exactly the Kronecker product.
///
/// A StateVector with zero subsystems is a scalar (one amplitude); it shows
/// up as the conditional state after measuring every subsystem.
///
/// Instances are immutable after construction; all operations return new
/// values and are safe to call concurrently.
class StateVector {
public:
    /// Scalar state with amplitude 1.
    StateVector() : amps_(1, Amplitude{1.0, 0.0}) {}

    StateVector(std::vector<SubsystemId> subsystems, std::vector<Amplitude> amplitudes)
        : subsystems_(std::move(subsystems)), amps_(std::move(amplitudes)) {
        if (subsystems_.size() > kMaxSubsystems) {
            throw std::invalid_argument("StateVector: more than " +
                                        std::to_string(kMaxSubsystems) + " subsystems");
        }
        if (amps_.size() != (std::size_t{1} << subsystems_.size())) {
            throw std::invalid_argument("StateVector: amplitude count must be 2^(subsystem count)");
        }
        for (std::size_t i = 0; i < subsystems_.size(); ++i) {
            for (std::size_t j = i + 1; j < subsystems_.size(); ++j) {
                if (subsystems_[i] == subsystems_[j]) {
                    throw std::invalid_argument("StateVector: duplicate subsystem id '" +
                                                subsystems_[i] + "'");
                }
            }
        }
        for (const Amplitude& a : amps_) {
            if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
                throw std::invalid_argument("StateVector: non-finite amplitude");
            }
        }
    }

    /// Basis ket from a pattern of '+'/'-' characters, one per subsystem.
    static StateVector basis_ket(std::vector<SubsystemId> subsystems, const std::string& pattern) {
        if (pattern.size() != subsystems.size()) {
            throw std::invalid_argument("basis_ket: pattern length must match subsystem count");
        }
        std::size_t index = 0;
        for (char c : pattern) {
            if (c != '+' && c != '-') {
                throw std::invalid_argument("basis_ket: pattern may contain only '+' and '-'");
            }
            index = (index << 1) | (c == '-' ? 1u : 0u);
        }
        std::vector<Amplitude> amps(std::size_t{1} << subsystems.size(), Amplitude{0.0, 0.0});
        amps[index] = Amplitude{1.0, 0.0};
        return StateVector(std::move(subsystems), std::move(amps));
    }

    const std::vector<SubsystemId>& subsystems() const { return subsystems_; }
    std::size_t subsystem_count() const { return subsystems_.size(); }
    std::size_t dimension() const { return amps_.size(); }
    std::span<const Amplitude> amplitudes() const { return amps_; }
    Amplitude amplitude(std::size_t index) const { return amps_.at(index); }

    bool has_subsystem(const SubsystemId& id) const {
        return std::find(subsystems_.begin(), subsystems_.end(), id) != subsystems_.end();
    }

    std::size_t position_of(const SubsystemId& id) const {
        auto it = std::find(subsystems_.begin(), subsystems_.end(), id);
        if (it == subsystems_.end()) {
            throw std::invalid_argument("StateVector: unknown subsystem '" + id + "'");
        }
        return static_cast<std::size_t>(it - subsystems_.begin());
    }

    /// The '+'/'-' pattern naming basis state `index`.
    std::string pattern_of(std::size_t index) const {
        std::string out(subsystems_.size(), '+');
        for (std::size_t k = 0; k < subsystems_.size(); ++k) {
            if ((index >> (subsystems_.size() - 1 - k)) & 1u) out[k] = '-';
        }
        return out;
    }

    double norm_squared() const {
        double s = 0.0;
        for (const Amplitude& a : amps_) s += std::norm(a);
        return s;
    }

    double norm() const { return std::sqrt(norm_squared()); }

    StateVector normalized() const {
        double n = norm();
        if (n < kAlgebraTolerance) {
            throw std::invalid_argument("StateVector: cannot normalize a (near-)zero vector");
        }
        std::vector<Amplitude> amps(amps_);
        for (Amplitude& a : amps) a /= n;
        return StateVector(subsystems_, std::move(amps));
    }

    friend StateVector operator+(const StateVector& a, const StateVector& b) {
        require_same_layout(a, b, "operator+");
        std::vector<Amplitude> amps(a.amps_);
        for (std::size_t i = 0; i < amps.size(); ++i) amps[i] += b.amps_[i];
        return StateVector(a.subsystems_, std::move(amps));
    }

    friend StateVector operator-(const StateVector& a, const StateVector& b) {
        require_same_layout(a, b, "operator-");
        std::vector<Amplitude> amps(a.amps_);
        for (std::size_t i = 0; i < amps.size(); ++i) amps[i] -= b.amps_[i];
        return StateVector(a.subsystems_, std::move(amps));
    }

    friend StateVector operator*(const Amplitude& c, const StateVector& s) {
        std::vector<Amplitude> amps(s.amps_);
        for (Amplitude& a : amps) a *= c;
        return StateVector(s.subsystems_, std::move(amps));
    }

private:
    static void require_same_layout(const StateVector& a, const StateVector& b, const char* op) {
        if (a.subsystems_ != b.subsystems_) {
            throw std::invalid_argument(std::string(op) +
                                        ": states must share the same subsystem list");
        }
    }

    std::vector<SubsystemId> subsystems_;
    std::vector<Amplitude> amps_;
};

inline StateVector ket_plus(const SubsystemId& id) { return StateVector::basis_ket({id}, "+"); }
inline StateVector ket_minus(const SubsystemId& id) { return StateVector::basis_ket({id}, "-"); }

/// Tensor product. Subsystem lists are concatenated (a first); amplitudes
/// are the Kronecker product, so norms multiply.
inline StateVector tensor(const StateVector& a, const StateVector& b) {
    for (const SubsystemId& id : b.subsystems()) {
        if (a.has_subsystem(id)) {
            throw std::invalid_argument("tensor: subsystem '" + id + "' appears on both sides");
        }
    }
    if (a.subsystem_count() + b.subsystem_count() > kMaxSubsystems) {
        throw std::invalid_argument("tensor: product exceeds the subsystem limit");
    }
    std::vector<SubsystemId> subsystems(a.subsystems().begin(), a.subsystems().end());
    subsystems.insert(subsystems.end(), b.subsystems().begin(), b.subsystems().end());
    std::vector<Amplitude> amps(a.dimension() * b.dimension());
    for (std::size_t i = 0; i < a.dimension(); ++i) {
        for (std::size_t j = 0; j < b.dimension(); ++j) {
            amps[i * b.dimension() + j] = a.amplitude(i) * b.amplitude(j);
        }
    }
    return StateVector(std::move(subsystems), std::move(amps));
}

/// Inner product <a|b>, conjugate-linear in `a`. Requires identical
/// subsystem lists (use reorder() first if the orders differ).
inline Amplitude inner(const StateVector& a, const StateVector& b) {
    if (a.subsystems() != b.subsystems()) {
        throw std::invalid_argument("inner: states must share the same subsystem list");
    }
    Amplitude s{0.0, 0.0};
    for (std::size_t i = 0; i < a.dimension(); ++i) {
        s += std::conj(a.amplitude(i)) * b.amplitude(i);
    }
    return s;
}

/// |<a|b>|^2. The state-equality test of choice: global phase drops out.
inline double fidelity(const StateVector& a, const StateVector& b) {
    return std::norm(inner(a, b));
}

/// Permute the subsystem order without changing the physical state.
inline StateVector reorder(const StateVector& s, const std::vector<SubsystemId>& new_order) {
    if (new_order.size() != s.subsystem_count()) {
        throw std::invalid_argument("reorder: new order must be a permutation of the subsystems");
    }
    const std::size_t n = s.subsystem_count();
    // old position -> new position
    std::vector<std::size_t> new_pos(n);
    std::vector<bool> seen(n, false);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = s.position_of(new_order[k]); // throws on unknown id
        if (seen[p]) {
            throw std::invalid_argument("reorder: duplicate subsystem '" + new_order[k] + "'");
        }
        seen[p] = true;
        new_pos[p] = k;
    }
    std::vector<Amplitude> amps(s.dimension());
    for (std::size_t i = 0; i < s.dimension(); ++i) {
        std::size_t j = 0;
        for (std::size_t p = 0; p < n; ++p) {
            std::size_t bit = (i >> (n - 1 - p)) & 1u;
            j |= bit << (n - 1 - new_pos[p]);
        }
        amps[j] = s.amplitude(i);
    }
    return StateVector(new_order, std::move(amps));
}

enum class BellKind { phi_plus, phi_minus, psi_plus, psi_minus };

inline const char* to_string(BellKind k) {
    switch (k) {
        case BellKind::phi_plus: return "Phi+";
        case BellKind::phi_minus: return "Phi-";
        case BellKind::psi_plus: return "Psi+";
        case BellKind::psi_minus: return "Psi-";
    }
    throw std::invalid_argument("to_string: bad BellKind");
}

/// The four maximally entangled two-qubit states over (i, j):
///   Phi+- = (|++> +- |-->)/sqrt2,  Psi+- = (|+-> +- |-+>)/sqrt2.
inline StateVector bell_state(BellKind kind, const SubsystemId& i, const SubsystemId& j) {
    if (i == j) {
        throw std::invalid_argument("bell_state: subsystems must differ");
    }
    const double r = 1.0 / std::sqrt(2.0);
    std::vector<Amplitude> amps(4, Amplitude{0.0, 0.0});
    switch (kind) {
        case BellKind::phi_plus:  amps[0b00] = r; amps[0b11] = r;  break;
        case BellKind::phi_minus: amps[0b00] = r; amps[0b11] = -r; break;
        case BellKind::psi_plus:  amps[0b01] = r; amps[0b10] = r;  break;
        case BellKind::psi_minus: amps[0b01] = r; amps[0b10] = -r; break;
    }
    return StateVector({i, j}, std::move(amps));
}

/// Apply a 2^k x 2^k operator (row-major) to the listed subsystems.
inline StateVector apply_operator(const StateVector& s,
                                  const std::vector<SubsystemId>& targets,
                                  std::span<const Amplitude> matrix) {
    const std::size_t k = targets.size();
    const std::size_t sub_dim = std::size_t{1} << k;
    if (matrix.size() != sub_dim * sub_dim) {
        throw std::invalid_argument("apply_operator: matrix size must be 4^k");
    }
    std::vector<std::size_t> pos(k);
    for (std::size_t t = 0; t < k; ++t) pos[t] = s.position_of(targets[t]);

    const std::size_t n = s.subsystem_count();
    std::vector<Amplitude> out(s.dimension(), Amplitude{0.0, 0.0});
    for (std::size_t i = 0; i < s.dimension(); ++i) {
        std::size_t col = 0;
        for (std::size_t t = 0; t < k; ++t) {
            col = (col << 1) | ((i >> (n - 1 - pos[t])) & 1u);
        }
        for (std::size_t row = 0; row < sub_dim; ++row) {
            const Amplitude m = matrix[row * sub_dim + col];
            if (m == Amplitude{0.0, 0.0}) continue;
            std::size_t j = i;
            for (std::size_t t = 0; t < k; ++t) {
                const std::size_t shift = n - 1 - pos[t];
                const std::size_t bit = (row >> (k - 1 - t)) & 1u;
                j = (j & ~(std::size_t{1} << shift)) | (bit << shift);
            }
            out[j] += m * s.amplitude(i);
        }
    }
    return StateVector(s.subsystems(), std::move(out));
}

} // namespace tisim

#endif // TISIM_STATEVECTOR_HPP
