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

#ifndef TISIM_SCENARIOS_HPP
#define TISIM_SCENARIOS_HPP

#include <algorithm>
#include <cstdint>
#include <exception>
#include <map>
#include <string>
#include <thread>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "tisim/format.hpp"
#include "tisim/measurement.hpp"
#include "tisim/rng.hpp"
#include "tisim/transaction.hpp"
#include "tisim/wavegraph.hpp"

namespace tisim {

// ---------------------------------------------------------------------------
// Configurations
// ---------------------------------------------------------------------------

/// Negative-result experiment: a source inside two concentric detector
/// shells. `shell_fraction` is the emission weight landing on the inner
/// shell E1 (1/2 when E1 covers half the solid angle). The radii, speed and
/// emission time set the narrative timeline t1 = t0 + r1/v, t2 = t0 + r2/v;
/// with spatial wave packets out of scope they carry no dynamical weight and
/// are echoed into result records only.
struct RenningerConfig {
    double shell_fraction = 0.5;
    double inner_radius = 1.0;
    double outer_radius = 2.0;
    double speed = 1.0;
    double emission_time = 0.0;

    void validate() const {
        if (!(shell_fraction > 0.0) || !(shell_fraction < 1.0)) {
            throw std::invalid_argument("renninger: shell_fraction must lie in (0, 1)");
        }
        if (!(inner_radius < outer_radius)) {
            throw std::invalid_argument("renninger: inner_radius must be less than outer_radius");
        }
        if (!(speed > 0.0)) {
            throw std::invalid_argument("renninger: speed must be positive");
        }
    }

    std::string fingerprint() const {
        return "renninger|f=" + format_double(shell_fraction) + "|r1=" +
               format_double(inner_radius) + "|r2=" + format_double(outer_radius) + "|v=" +
               format_double(speed) + "|t0=" + format_double(emission_time);
    }
};

/// A slow particle emitted left or right with equal amplitude. Detectors A
/// and B sit on the right; B swings to the left in time to intercept when A
/// does not fire. Without a far-left absorber the left half of the offer
/// wave is never absorbed and transaction probabilities are undefined; the
/// far-left absorber C restores completeness, after which B still catches
/// every left-going particle because it intercepts first.
struct MaudlinConfig {
    bool far_left_absorber = false;

    void validate() const {}

    std::string fingerprint() const {
        return std::string("maudlin|far_left_absorber=") + (far_left_absorber ? "true" : "false");
    }
};

/// Interaction-free measurement with two absorbing atoms, one in each arm of
/// a balanced interferometer. Both atoms start in (|+> + |->)/sqrt2; an atom
/// intercepts the photon on its arm exactly when it is in `blocking_state`.
///
/// Beam splitters are symmetric 50/50 with transmission 1/sqrt2 and
/// reflection `reflection_phase`/sqrt2; unitarity forces the phase to +-i.
/// Detector D sits on the port that stays dark when neither arm can absorb,
/// so a D click certifies an interaction that never happened.
struct QuantumLiarConfig {
    Amplitude reflection_phase{0.0, 1.0};
    char blocking_state = '+';

    void validate() const {
        if (blocking_state != '+' && blocking_state != '-') {
            throw std::invalid_argument("quantum_liar: blocking_state must be '+' or '-'");
        }
        // 2x2 symmetric splitter [[1, r], [r, 1]]/sqrt2 is unitary iff
        // |r| = 1 and Re(r) = 0.
        if (std::abs(std::abs(reflection_phase) - 1.0) > kAlgebraTolerance ||
            std::abs(reflection_phase.real()) > kAlgebraTolerance) {
            throw std::invalid_argument(
                "quantum_liar: reflection_phase must make the beam splitter unitary (+i or -i)");
        }
    }

    std::vector<Amplitude> beam_splitter() const {
        const double r = 1.0 / std::sqrt(2.0);
        return {Amplitude{r, 0.0}, reflection_phase * r, reflection_phase * r, Amplitude{r, 0.0}};
    }

    std::string fingerprint() const {
        return "quantum_liar|reflection_phase=" + format_double(reflection_phase.real()) + "," +
               format_double(reflection_phase.imag()) + "|blocking=" + blocking_state;
    }
};

enum class EveBasis { bell, product };
enum class MeasurementOrdering { eve_first, edges_first };

inline const char* to_string(EveBasis b) { return b == EveBasis::bell ? "bell" : "product"; }
inline const char* to_string(MeasurementOrdering o) {
    return o == MeasurementOrdering::eve_first ? "eve_first" : "edges_first";
}

/// Entanglement swapping: two singlet pairs (1,2) and (3,4); Eve measures
/// (2,3) either in the Bell basis or in the z product basis, before or after
/// the outer particles 1 and 4 are measured along axis1/axis4.
struct SwapConfig {
    EveBasis eve_basis = EveBasis::bell;
    MeasurementOrdering ordering = MeasurementOrdering::eve_first;
    MeasurementAxis axis1 = MeasurementAxis::z_axis();
    MeasurementAxis axis4 = MeasurementAxis::z_axis();

    void validate() const {} // axes validate themselves on construction

    MeasurementBasis eve_measurement() const {
        return eve_basis == EveBasis::bell ? MeasurementBasis::bell("2", "3")
                                           : MeasurementBasis::product_z("2", "3");
    }

    std::string fingerprint() const {
        auto axis = [](const MeasurementAxis& a) {
            return format_double(a.x) + "," + format_double(a.y) + "," + format_double(a.z);
        };
        return std::string("swap|eve_basis=") + to_string(eve_basis) + "|ordering=" +
               to_string(ordering) + "|axis1=" + axis(axis1) + "|axis4=" + axis(axis4);
    }
};

/// The four-particle initial state of the swap scenario: singlets on (1,2)
/// and (3,4).
inline StateVector swap_initial_state() {
    return tensor(bell_state(BellKind::psi_minus, "1", "2"),
                  bell_state(BellKind::psi_minus, "3", "4"));
}

inline std::string swap_outcome_label(const std::string& eve, const std::string& o1,
                                      const std::string& o4) {
    return "eve=" + eve + ";p1=" + o1 + ";p4=" + o4;
}

// ---------------------------------------------------------------------------
// Results
// ---------------------------------------------------------------------------

/// One trial's realized outcome plus enough provenance to reproduce it.
struct ScenarioResult {
    std::string scenario;
    std::string config_fingerprint;
    std::uint64_t trial_seed = 0;
    std::string outcome;
    double analytic_probability = 0.0;
    /// Intermediate stage outcomes, e.g. {"eve", "Psi+"} for the swap.
    std::vector<std::pair<std::string, std::string>> stages;
    /// Tagged post-measurement states, e.g. the (1,4) pair after Eve's
    /// measurement. Only stages the scenario defines them for.
    std::vector<std::pair<std::string, StateVector>> conditional_states;
};

using OutcomeDistribution = std::vector<std::pair<std::string, double>>;

// ---------------------------------------------------------------------------
// Renninger
// ---------------------------------------------------------------------------

inline ScenarioResult run_renninger(const RenningerConfig& cfg, RandomStream& rng) {
    cfg.validate();
    const double alpha = std::sqrt(cfg.shell_fraction);
    const double beta = std::sqrt(1.0 - cfg.shell_fraction);
    const AbsorberConfiguration absorbers(
        "S", {Absorber{"E1", AbsorberRole::detector, Amplitude{alpha, 0.0}},
              Absorber{"E2", AbsorberRole::detector, Amplitude{beta, 0.0}}});
    const Transaction tx = form_transaction(absorbers, rng);
    ScenarioResult result;
    result.scenario = "renninger";
    result.config_fingerprint = cfg.fingerprint();
    result.trial_seed = rng.seed();
    result.outcome = tx.absorber_id;
    result.analytic_probability = tx.probability;
    return result;
}

inline OutcomeDistribution analytic_distribution(const RenningerConfig& cfg) {
    cfg.validate();
    return {{"E1", cfg.shell_fraction}, {"E2", 1.0 - cfg.shell_fraction}};
}

// ---------------------------------------------------------------------------
// Maudlin
// ---------------------------------------------------------------------------

/// Two-stage resolution: the Born-sampled transaction picks the emission
/// direction (each branch carries confirmation amplitude 1/2 once C makes
/// the configuration complete); within the left branch the swung-in
/// detector B sits closer than C, so B absorbs. Without C the configuration
/// is incomplete and this throws CompletenessError instead of renormalizing.
inline ScenarioResult run_maudlin(const MaudlinConfig& cfg, RandomStream& rng) {
    cfg.validate();
    const double r = 1.0 / std::sqrt(2.0);
    std::vector<Absorber> absorbers{Absorber{"A", AbsorberRole::detector, Amplitude{r, 0.0}}};
    if (cfg.far_left_absorber) {
        absorbers.push_back(Absorber{"C", AbsorberRole::detector, Amplitude{r, 0.0}});
    }
    const AbsorberConfiguration direction_cfg("S", std::move(absorbers));
    const Transaction tx = form_transaction(direction_cfg, rng); // throws without C

    ScenarioResult result;
    result.scenario = "maudlin";
    result.config_fingerprint = cfg.fingerprint();
    result.trial_seed = rng.seed();
    const bool went_right = tx.absorber_id == "A";
    result.stages.emplace_back("direction", went_right ? "right" : "left");
    // Left-going particles are slow enough for B to swing in ahead of C.
    result.outcome = went_right ? "A" : "B";
    result.analytic_probability = 0.5;
    return result;
}

inline OutcomeDistribution analytic_distribution(const MaudlinConfig& cfg) {
    cfg.validate();
    if (!cfg.far_left_absorber) {
        throw CompletenessError(0.5);
    }
    return {{"A", 0.5}, {"B", 0.5}, {"C", 0.0}};
}

// ---------------------------------------------------------------------------
// Quantum liar
// ---------------------------------------------------------------------------

namespace detail {

/// Subsystems: photon path ('+' = arm 1, '-' = arm 2), two atom spins, and
/// one absorption flag per atom ('+' = photon not absorbed there). The flags
/// keep absorbed branches orthogonal to the surviving ones so the final
/// sampling is a single projective measurement.
inline StateVector quantum_liar_final_state(const QuantumLiarConfig& cfg) {
    const double r = 1.0 / std::sqrt(2.0);
    StateVector state = tensor(ket_plus("path"), StateVector({"atom1"}, {r, r}));
    state = tensor(state, StateVector({"atom2"}, {r, r}));
    state = tensor(state, ket_plus("absorbed1"));
    state = tensor(state, ket_plus("absorbed2"));

    const std::vector<Amplitude> bs = cfg.beam_splitter();
    state = apply_operator(state, {"path"}, bs);

    // Interception: flip the flag when the photon shares an arm with an atom
    // in the blocking state. Sub-index order below is (path, atom, flag).
    const std::size_t block_bit = cfg.blocking_state == '-' ? 1 : 0;
    auto controlled_flip = [&](std::size_t path_bit) {
        std::vector<Amplitude> m(64, Amplitude{0.0, 0.0});
        for (std::size_t d = 0; d < 8; ++d) m[d * 8 + d] = Amplitude{1.0, 0.0};
        const std::size_t intact = (path_bit << 2) | (block_bit << 1) | 0u;
        const std::size_t absorbed = intact | 1u;
        m[intact * 8 + intact] = Amplitude{0.0, 0.0};
        m[absorbed * 8 + absorbed] = Amplitude{0.0, 0.0};
        m[intact * 8 + absorbed] = Amplitude{1.0, 0.0};
        m[absorbed * 8 + intact] = Amplitude{1.0, 0.0};
        return m;
    };
    state = apply_operator(state, {"path", "atom1", "absorbed1"}, controlled_flip(0));
    state = apply_operator(state, {"path", "atom2", "absorbed2"}, controlled_flip(1));

    // Recombination acts only on branches the atoms let through: the second
    // splitter mixes the path conditioned on both flags still intact.
    // Sub-index order is (path, absorbed1, absorbed2); intact means flag
    // bits 00, i.e. sub-indices 0 (arm 1) and 4 (arm 2).
    std::vector<Amplitude> bs2(64, Amplitude{0.0, 0.0});
    for (std::size_t d = 0; d < 8; ++d) bs2[d * 8 + d] = Amplitude{1.0, 0.0};
    bs2[0 * 8 + 0] = bs[0];
    bs2[0 * 8 + 4] = bs[1];
    bs2[4 * 8 + 0] = bs[2];
    bs2[4 * 8 + 4] = bs[3];
    state = apply_operator(state, {"path", "absorbed1", "absorbed2"}, bs2);
    return state;
}

inline MeasurementBasis quantum_liar_readout_basis() {
    std::vector<std::pair<std::string, StateVector>> outcomes;
    for (const char* p : {"+++", "++-", "+-+", "+--", "-++", "-+-", "--+", "---"}) {
        outcomes.emplace_back(p, StateVector::basis_ket({"path", "absorbed1", "absorbed2"}, p));
    }
    return MeasurementBasis({"path", "absorbed1", "absorbed2"}, std::move(outcomes));
}

/// Map a (path, absorbed1, absorbed2) readout pattern to the event name.
/// With both splitters applied, the port that is dark absent any blocking is
/// arm 1's output, so an intact photon on path '+' lands on D.
inline std::string quantum_liar_label(const std::string& pattern) {
    if (pattern[1] == '-') return "atom1";
    if (pattern[2] == '-') return "atom2";
    return pattern[0] == '+' ? "D" : "C";
}

} // namespace detail

inline ScenarioResult run_quantum_liar(const QuantumLiarConfig& cfg, RandomStream& rng) {
    cfg.validate();
    const StateVector final_state = detail::quantum_liar_final_state(cfg);
    const MeasurementBasis readout = detail::quantum_liar_readout_basis();
    const MeasurementDraw draw = measure(final_state, readout, rng);

    ScenarioResult result;
    result.scenario = "quantum_liar";
    result.config_fingerprint = cfg.fingerprint();
    result.trial_seed = rng.seed();
    result.outcome = detail::quantum_liar_label(draw.outcome);
    // Outcome patterns map one-to-one onto event names on the support of the
    // final state, so the pattern probability is the event probability.
    result.analytic_probability = draw.probability;
    result.stages.emplace_back("readout", draw.outcome);
    result.conditional_states.emplace_back("atoms", draw.conditional);
    return result;
}

inline OutcomeDistribution analytic_distribution(const QuantumLiarConfig& cfg) {
    cfg.validate();
    const StateVector final_state = detail::quantum_liar_final_state(cfg);
    const auto readout_dist = outcome_distribution(final_state, detail::quantum_liar_readout_basis());
    std::map<std::string, double> acc;
    for (const auto& [pattern, p] : readout_dist) acc[detail::quantum_liar_label(pattern)] += p;
    OutcomeDistribution out;
    for (const char* label : {"atom1", "atom2", "C", "D"}) out.emplace_back(label, acc[label]);
    return out;
}

/// The two-atom state left behind when the photon ends at `event`
/// ("C", "D", "atom1" or "atom2"), computed analytically.
inline StateVector quantum_liar_conditional_atoms(const QuantumLiarConfig& cfg,
                                                  const std::string& event) {
    cfg.validate();
    const StateVector final_state = detail::quantum_liar_final_state(cfg);
    const MeasurementBasis readout = detail::quantum_liar_readout_basis();
    for (std::size_t k = 0; k < readout.size(); ++k) {
        if (detail::quantum_liar_label(readout.label(k)) != event) continue;
        if (detail::partial_inner(readout.vector(k), final_state).norm_squared() >
            kAlgebraTolerance) {
            return conditional_state(final_state, readout, readout.label(k));
        }
    }
    throw std::invalid_argument("quantum_liar: event '" + event + "' has zero probability");
}

// ---------------------------------------------------------------------------
// Entanglement swapping
// ---------------------------------------------------------------------------

inline ScenarioResult run_swap(const SwapConfig& cfg, RandomStream& rng) {
    cfg.validate();
    const StateVector initial = swap_initial_state();
    const MeasurementBasis eve = cfg.eve_measurement();
    const MeasurementBasis basis1 = MeasurementBasis::along_axis("1", cfg.axis1);
    const MeasurementBasis basis4 = MeasurementBasis::along_axis("4", cfg.axis4);

    ScenarioResult result;
    result.scenario = "swap";
    result.config_fingerprint = cfg.fingerprint();
    result.trial_seed = rng.seed();

    std::string eve_outcome, o1, o4;
    double joint = 1.0;
    if (cfg.ordering == MeasurementOrdering::eve_first) {
        const MeasurementDraw eve_draw = measure(initial, eve, rng);
        eve_outcome = eve_draw.outcome;
        joint *= eve_draw.probability;
        result.conditional_states.emplace_back("pair14", eve_draw.conditional);
        const MeasurementDraw d1 = measure(eve_draw.conditional, basis1, rng);
        o1 = d1.outcome;
        joint *= d1.probability;
        const MeasurementDraw d4 = measure(d1.conditional, basis4, rng);
        o4 = d4.outcome;
        joint *= d4.probability;
    } else {
        const MeasurementDraw d1 = measure(initial, basis1, rng);
        o1 = d1.outcome;
        joint *= d1.probability;
        const MeasurementDraw d4 = measure(d1.conditional, basis4, rng);
        o4 = d4.outcome;
        joint *= d4.probability;
        const MeasurementDraw eve_draw = measure(d4.conditional, eve, rng);
        eve_outcome = eve_draw.outcome;
        joint *= eve_draw.probability;
    }
    result.outcome = swap_outcome_label(eve_outcome, o1, o4);
    result.analytic_probability = joint;
    result.stages = {{"eve", eve_outcome}, {"p1", o1}, {"p4", o4}};
    return result;
}

/// Exact joint distribution over (Eve outcome, particle-1 outcome,
/// particle-4 outcome), computed by conditioning in the configured
/// measurement order. Labels are always emitted Eve-major so distributions
/// from the two orderings line up term by term.
inline OutcomeDistribution analytic_distribution(const SwapConfig& cfg) {
    cfg.validate();
    const StateVector initial = swap_initial_state();
    const MeasurementBasis eve = cfg.eve_measurement();
    const MeasurementBasis basis1 = MeasurementBasis::along_axis("1", cfg.axis1);
    const MeasurementBasis basis4 = MeasurementBasis::along_axis("4", cfg.axis4);

    std::map<std::string, double> joint;
    if (cfg.ordering == MeasurementOrdering::eve_first) {
        for (const auto& [e, pe] : outcome_distribution(initial, eve)) {
            if (pe <= kAlgebraTolerance) {
                for (std::size_t i = 0; i < basis1.size(); ++i) {
                    for (std::size_t j = 0; j < basis4.size(); ++j) {
                        joint[swap_outcome_label(e, basis1.label(i), basis4.label(j))] = 0.0;
                    }
                }
                continue;
            }
            const StateVector pair14 = conditional_state(initial, eve, e);
            for (const auto& [l1, p1] : outcome_distribution(pair14, basis1)) {
                if (p1 <= kAlgebraTolerance) {
                    for (std::size_t j = 0; j < basis4.size(); ++j) {
                        joint[swap_outcome_label(e, l1, basis4.label(j))] = 0.0;
                    }
                    continue;
                }
                const StateVector rest = conditional_state(pair14, basis1, l1);
                for (const auto& [l4, p4] : outcome_distribution(rest, basis4)) {
                    joint[swap_outcome_label(e, l1, l4)] = pe * p1 * p4;
                }
            }
        }
    } else {
        for (const auto& [l1, p1] : outcome_distribution(initial, basis1)) {
            if (p1 <= kAlgebraTolerance) {
                for (std::size_t k = 0; k < eve.size(); ++k) {
                    for (std::size_t j = 0; j < basis4.size(); ++j) {
                        joint[swap_outcome_label(eve.label(k), l1, basis4.label(j))] = 0.0;
                    }
                }
                continue;
            }
            const StateVector after1 = conditional_state(initial, basis1, l1);
            for (const auto& [l4, p4] : outcome_distribution(after1, basis4)) {
                if (p4 <= kAlgebraTolerance) {
                    for (std::size_t k = 0; k < eve.size(); ++k) {
                        joint[swap_outcome_label(eve.label(k), l1, l4)] = 0.0;
                    }
                    continue;
                }
                const StateVector pair23 = conditional_state(after1, basis4, l4);
                for (const auto& [e, pe] : outcome_distribution(pair23, eve)) {
                    joint[swap_outcome_label(e, l1, l4)] = p1 * p4 * pe;
                }
            }
        }
    }

    OutcomeDistribution out;
    for (std::size_t k = 0; k < eve.size(); ++k) {
        for (std::size_t i = 0; i < basis1.size(); ++i) {
            for (std::size_t j = 0; j < basis4.size(); ++j) {
                const std::string label =
                    swap_outcome_label(eve.label(k), basis1.label(i), basis4.label(j));
                out.emplace_back(label, joint.at(label));
            }
        }
    }
    return out;
}

/// Detector wiring of the swap scenario. Source S12 emits particle lines 1
/// and 2, S34 emits 3 and 4; D1 and D4 watch the outer lines. A Bell-basis
/// Eve is a single detector D23 whose outcome vectors superpose lines 2 and
/// 3, so its confirmation waves run back along both; a product-basis Eve is
/// two independent detectors D2 and D3.
inline WaveLayout swap_wave_layout(EveBasis basis) {
    WaveLayout layout;
    layout.sources = {{"S12", {"1", "2"}}, {"S34", {"3", "4"}}};
    layout.detectors = {{"D1", {"1"}}, {"D4", {"4"}}};
    if (basis == EveBasis::bell) {
        layout.detectors.push_back({"D23", {"2", "3"}});
    } else {
        layout.detectors.push_back({"D2", {"2"}});
        layout.detectors.push_back({"D3", {"3"}});
    }
    return layout;
}

/// Eve's marginal outcome distribution and the conditional (1,4) state per
/// Eve outcome; the analytic core of the swap claims.
inline std::vector<std::pair<std::string, StateVector>> swap_conditional_pairs(
    const SwapConfig& cfg) {
    const StateVector initial = swap_initial_state();
    const MeasurementBasis eve = cfg.eve_measurement();
    std::vector<std::pair<std::string, StateVector>> out;
    for (std::size_t k = 0; k < eve.size(); ++k) {
        out.emplace_back(eve.label(k), conditional_state(initial, eve, eve.label(k)));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Dispatch and batch running
// ---------------------------------------------------------------------------

using ScenarioConfig =
    std::variant<RenningerConfig, MaudlinConfig, QuantumLiarConfig, SwapConfig>;

inline const char* scenario_name(const ScenarioConfig& cfg) {
    static constexpr const char* names[] = {"renninger", "maudlin", "quantum_liar", "swap"};
    return names[cfg.index()];
}

inline ScenarioResult run_scenario(const ScenarioConfig& cfg, RandomStream& rng) {
    return std::visit(
        [&rng](const auto& c) -> ScenarioResult {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, RenningerConfig>) {
                return run_renninger(c, rng);
            } else if constexpr (std::is_same_v<T, MaudlinConfig>) {
                return run_maudlin(c, rng);
            } else if constexpr (std::is_same_v<T, QuantumLiarConfig>) {
                return run_quantum_liar(c, rng);
            } else {
                return run_swap(c, rng);
            }
        },
        cfg);
}

inline OutcomeDistribution analytic_distribution(const ScenarioConfig& cfg) {
    return std::visit([](const auto& c) { return analytic_distribution(c); }, cfg);
}

/// Run `trials` independent trials. Trial i draws from a stream seeded by
/// derive_trial_seed(master_seed, i), so the result list is bit-identical
/// for any thread count; threads only partition the index range.
inline std::vector<ScenarioResult> run_batch(const ScenarioConfig& cfg, std::size_t trials,
                                             std::uint64_t master_seed, unsigned threads = 1) {
    if (trials == 0) {
        throw std::invalid_argument("run_batch: need at least one trial");
    }
    if (threads == 0) threads = 1;
    std::vector<ScenarioResult> results(trials);

    auto worker = [&](std::size_t lo, std::size_t hi, std::exception_ptr& error) {
        try {
            for (std::size_t i = lo; i < hi; ++i) {
                RandomStream rng(derive_trial_seed(master_seed, i));
                results[i] = run_scenario(cfg, rng);
            }
        } catch (...) {
            error = std::current_exception();
        }
    };

    if (threads == 1 || trials < 2 * threads) {
        std::exception_ptr error;
        worker(0, trials, error);
        if (error) std::rethrow_exception(error);
    } else {
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(threads);
        const std::size_t chunk = (trials + threads - 1) / threads;
        for (unsigned t = 0; t < threads; ++t) {
            const std::size_t lo = t * chunk;
            const std::size_t hi = std::min(trials, lo + chunk);
            if (lo >= hi) break;
            pool.emplace_back(worker, lo, hi, std::ref(errors[t]));
        }
        for (auto& th : pool) th.join();
        for (const auto& error : errors) {
            if (error) std::rethrow_exception(error);
        }
    }
    return results;
}

} // namespace tisim

#endif // TISIM_SCENARIOS_HPP
