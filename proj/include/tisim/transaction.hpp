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

#ifndef TISIM_TRANSACTION_HPP
#define TISIM_TRANSACTION_HPP

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tisim/rng.hpp"
#include "tisim/statevector.hpp"

namespace tisim {

enum class AbsorberRole { detector, source, atom };

inline const char* to_string(AbsorberRole r) {
    switch (r) {
        case AbsorberRole::detector: return "detector";
        case AbsorberRole::source: return "source";
        case AbsorberRole::atom: return "atom";
    }
    throw std::invalid_argument("to_string: bad AbsorberRole");
}

/// One absorber together with the offer-wave amplitude reaching it.
struct Absorber {
    std::string id;
    AbsorberRole role = AbsorberRole::detector;
    Amplitude offer_amplitude{0.0, 0.0};
};

/// The advanced wave an absorber returns. Its amplitude is the squared
/// modulus of the stimulating offer wave: real, nonnegative, and blind to
/// the offer wave's phase.
struct ConfirmationWave {
    std::string absorber_id;
    double amplitude = 0.0;
};

inline ConfirmationWave confirmation_wave(const Absorber& a) {
    return ConfirmationWave{a.id, std::norm(a.offer_amplitude)};
}

struct CompletenessReport {
    bool ok = false;
    /// 1 - sum of confirmation amplitudes; meaningful when !ok.
    double deficit = 0.0;
};

/// Raised when a transaction is requested on a configuration whose
/// confirmation amplitudes do not sum to one. Carries the deficit so the
/// caller can report how much offer wave escapes unabsorbed.
class CompletenessError : public std::runtime_error {
public:
    explicit CompletenessError(double deficit)
        : std::runtime_error("absorber configuration incomplete: confirmation amplitudes sum to " +
                             std::to_string(1.0 - deficit) + " (deficit " +
                             std::to_string(deficit) + ")"),
          deficit_(deficit) {}

    double deficit() const { return deficit_; }

private:
    double deficit_;
};

/// Everything an emission event can end on: the set of absorbers reachable
/// by the offer wave. Transaction probabilities are only well defined when
/// the configuration is complete, i.e. every part of the offer wave is
/// eventually absorbed.
class AbsorberConfiguration {
public:
    AbsorberConfiguration(std::string emitter_id, std::vector<Absorber> absorbers,
                          double completeness_tolerance = kSchmidtTolerance)
        : emitter_id_(std::move(emitter_id)),
          absorbers_(std::move(absorbers)),
          tolerance_(completeness_tolerance) {
        for (std::size_t i = 0; i < absorbers_.size(); ++i) {
            const double w = std::norm(absorbers_[i].offer_amplitude);
            if (!std::isfinite(w) || w > 1.0 + kAlgebraTolerance) {
                throw std::invalid_argument("AbsorberConfiguration: absorber '" +
                                            absorbers_[i].id +
                                            "' has offer weight outside [0, 1]");
            }
            for (std::size_t j = i + 1; j < absorbers_.size(); ++j) {
                if (absorbers_[i].id == absorbers_[j].id) {
                    throw std::invalid_argument("AbsorberConfiguration: duplicate absorber id '" +
                                                absorbers_[i].id + "'");
                }
            }
        }
    }

    const std::string& emitter_id() const { return emitter_id_; }
    const std::vector<Absorber>& absorbers() const { return absorbers_; }
    double completeness_tolerance() const { return tolerance_; }

private:
    std::string emitter_id_;
    std::vector<Absorber> absorbers_;
    double tolerance_;
};

/// Completeness is a reported state, not a crash: the deficit tells how far
/// the configuration is from absorbing the whole offer wave.
inline CompletenessReport validate_completeness(const AbsorberConfiguration& cfg) {
    double total = 0.0;
    for (const Absorber& a : cfg.absorbers()) total += confirmation_wave(a).amplitude;
    const double deficit = 1.0 - total;
    return CompletenessReport{std::abs(deficit) <= cfg.completeness_tolerance(), deficit};
}

/// The realized emitter-absorber pairing of one emission event.
struct Transaction {
    std::string emitter_id;
    std::string absorber_id;
    double probability = 0.0;
    std::uint64_t seed = 0; // seed of the stream that drew this transaction
};

/// Born sampling over a complete absorber configuration: absorber i is
/// selected with probability equal to its confirmation amplitude |psi_i|^2,
/// by inverse CDF over declaration order from a single uniform draw.
///
/// Incomplete configurations are rejected, never silently renormalized;
/// renormalizing would assign probability 1 to a branch whose confirmation
/// amplitude is less than 1.
inline Transaction form_transaction(const AbsorberConfiguration& cfg, RandomStream& rng) {
    const CompletenessReport report = validate_completeness(cfg);
    if (!report.ok) {
        throw CompletenessError(report.deficit);
    }
    const double u = rng.uniform01();
    double cum = 0.0;
    const Absorber* pick = nullptr;
    for (const Absorber& a : cfg.absorbers()) {
        cum += std::norm(a.offer_amplitude);
        if (u < cum) {
            pick = &a;
            break;
        }
    }
    if (pick == nullptr) {
        for (auto it = cfg.absorbers().rbegin(); it != cfg.absorbers().rend(); ++it) {
            if (std::norm(it->offer_amplitude) > 0.0) {
                pick = &*it;
                break;
            }
        }
    }
    return Transaction{cfg.emitter_id(), pick->id, std::norm(pick->offer_amplitude), rng.seed()};
}

} // namespace tisim

#endif // TISIM_TRANSACTION_HPP
