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

#ifndef TISIM_STATS_HPP
#define TISIM_STATS_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "tisim/measurement.hpp"
#include "tisim/scenarios.hpp"

namespace tisim {

// ---------------------------------------------------------------------------
// Frequency tables
// ---------------------------------------------------------------------------

struct FrequencyRow {
    std::string label;
    std::size_t count = 0;
    double frequency = 0.0;
    double sigma = 0.0; // binomial standard error sqrt(f(1-f)/N)
};

struct FrequencyTable {
    std::size_t trials = 0;
    std::vector<FrequencyRow> rows;

    const FrequencyRow& row(const std::string& label) const {
        for (const auto& r : rows) {
            if (r.label == label) return r;
        }
        throw std::invalid_argument("FrequencyTable: unknown outcome '" + label + "'");
    }
};

/// Count outcomes of one scenario/config batch. `labels` fixes the row order
/// and supplies the outcomes that may legitimately have zero counts; results
/// from mixed scenarios or configs are rejected.
inline FrequencyTable tabulate(std::span<const ScenarioResult> results,
                               const std::vector<std::string>& labels = {}) {
    if (results.empty()) {
        throw std::invalid_argument("tabulate: no results");
    }
    for (const auto& r : results) {
        if (r.scenario != results.front().scenario ||
            r.config_fingerprint != results.front().config_fingerprint) {
            throw std::invalid_argument("tabulate: results mix scenarios or configurations");
        }
    }
    std::vector<std::string> order = labels;
    std::map<std::string, std::size_t> counts;
    for (const std::string& l : order) counts.emplace(l, 0);
    for (const auto& r : results) {
        auto it = counts.find(r.outcome);
        if (it == counts.end()) {
            if (!labels.empty()) {
                throw std::invalid_argument("tabulate: unexpected outcome '" + r.outcome + "'");
            }
            order.push_back(r.outcome);
            counts.emplace(r.outcome, 1);
        } else {
            ++it->second;
        }
    }
    FrequencyTable table;
    table.trials = results.size();
    const double n = static_cast<double>(results.size());
    for (const std::string& label : order) {
        const double f = static_cast<double>(counts.at(label)) / n;
        table.rows.push_back(
            FrequencyRow{label, counts.at(label), f, std::sqrt(f * (1.0 - f) / n)});
    }
    return table;
}

// ---------------------------------------------------------------------------
// Frequency-vs-analytic gate
// ---------------------------------------------------------------------------

namespace detail {

/// log of C(n, x) p^x (1-p)^(n-x)
inline double log_binomial_pmf(double n, double x, double p) {
    return std::lgamma(n + 1.0) - std::lgamma(x + 1.0) - std::lgamma(n - x + 1.0) +
           x * std::log(p) + (n - x) * std::log1p(-p);
}

inline double binomial_lower_tail(std::size_t n, std::size_t c, double p) {
    if (p <= 0.0) return 1.0;
    if (p >= 1.0) return c >= n ? 1.0 : 0.0;
    double sum = 0.0;
    for (std::size_t x = 0; x <= c; ++x) {
        sum += std::exp(log_binomial_pmf(static_cast<double>(n), static_cast<double>(x), p));
    }
    return std::min(sum, 1.0);
}

inline double binomial_upper_tail(std::size_t n, std::size_t c, double p) {
    if (p <= 0.0) return c == 0 ? 1.0 : 0.0;
    if (p >= 1.0) return 1.0;
    // Sum upward from c; beyond the mode the terms decay geometrically, so
    // stop once they stop mattering.
    double term =
        std::exp(log_binomial_pmf(static_cast<double>(n), static_cast<double>(c), p));
    double sum = 0.0;
    for (std::size_t x = c; x <= n; ++x) {
        sum += term;
        if (term < 1e-18 * sum && static_cast<double>(x) > static_cast<double>(n) * p) break;
        term *= (static_cast<double>(n - x) / static_cast<double>(x + 1)) * (p / (1.0 - p));
    }
    return std::min(sum, 1.0);
}

/// Upper-tail mass of the standard normal beyond k.
inline double normal_tail(double k) { return 0.5 * std::erfc(k / std::sqrt(2.0)); }

} // namespace detail

struct CompareRow {
    std::string label;
    std::size_t count = 0;
    double frequency = 0.0;
    double sigma = 0.0; // standard error of the observed frequency
    double analytic_p = 0.0;
    bool pass = false;
};

struct CompareReport {
    bool passed = false;
    std::size_t trials = 0;
    double k_sigma = 0.0;
    std::vector<CompareRow> rows;
};

/// Per-outcome acceptance band: |frequency - p| <= k_sigma * sqrt(p(1-p)/N)
/// with p from the analytic distribution. When the normal approximation has
/// no business being used (N*p < 10), fall back to the exact binomial
/// two-sided tail at the matching significance, so p = 0 demands a zero
/// count and rare outcomes are judged by their true distribution. Passing at
/// k implies passing at any k' > k.
inline CompareReport compare(const FrequencyTable& freqs, const OutcomeDistribution& analytic,
                             double k_sigma) {
    if (freqs.rows.size() != analytic.size()) {
        throw std::invalid_argument("compare: outcome label sets differ in size");
    }
    CompareReport report;
    report.trials = freqs.trials;
    report.k_sigma = k_sigma;
    report.passed = true;
    const double n = static_cast<double>(freqs.trials);
    for (const auto& [label, p] : analytic) {
        const FrequencyRow& row = freqs.row(label); // throws on mismatch
        bool pass;
        if (n * p < 10.0) {
            const double lower = detail::binomial_lower_tail(freqs.trials, row.count, p);
            const double upper = detail::binomial_upper_tail(freqs.trials, row.count, p);
            const double p_value = std::min(1.0, 2.0 * std::min(lower, upper));
            pass = p_value >= 2.0 * detail::normal_tail(k_sigma);
        } else {
            const double sigma_p = std::sqrt(p * (1.0 - p) / n);
            pass = std::abs(row.frequency - p) <= k_sigma * sigma_p;
        }
        report.rows.push_back(CompareRow{label, row.count, row.frequency, row.sigma, p, pass});
        report.passed = report.passed && pass;
    }
    return report;
}

// ---------------------------------------------------------------------------
// CHSH
// ---------------------------------------------------------------------------

/// Axis pairs (a, a') for the first particle and (b, b') for the second.
struct ChshSetting {
    MeasurementAxis a = MeasurementAxis::z_axis();
    MeasurementAxis a_prime = MeasurementAxis::x_axis();
    MeasurementAxis b = MeasurementAxis::in_xz_plane(-M_PI / 4.0);
    MeasurementAxis b_prime = MeasurementAxis::in_xz_plane(-3.0 * M_PI / 4.0);

    /// The default above: coplanar axes at angles 0, pi/2, -pi/4, -3pi/4
    /// from z, which saturate |S| = 2 sqrt 2 on the Psi+ pair.
    static ChshSetting optimal_for_psi_plus() { return ChshSetting{}; }
};

/// S = E(a,b) - E(a,b') + E(a',b) + E(a',b') from exact spin correlations.
/// |S| <= 2 on any product state and <= 2 sqrt 2 on any two-qubit state.
inline double chsh(const StateVector& state, const SubsystemId& i, const SubsystemId& j,
                   const ChshSetting& s) {
    return spin_correlation(state, i, s.a, j, s.b) -
           spin_correlation(state, i, s.a, j, s.b_prime) +
           spin_correlation(state, i, s.a_prime, j, s.b) +
           spin_correlation(state, i, s.a_prime, j, s.b_prime);
}

struct ChshEstimate {
    double value = 0.0;
    double sigma = 0.0;
    std::array<double, 4> correlations{};
    std::array<std::size_t, 4> accepted{};
};

/// Monte Carlo CHSH on the (1,4) pair of the swap scenario, conditioned on
/// one Eve outcome. Each of the four correlation terms runs `trials_per_term`
/// emissions: Eve's outcome is sampled first and the trial is discarded
/// unless it matches the conditioning outcome; the surviving pair is then
/// measured along the term's axes. The draw sequence per trial (Eve, then
/// particle 1, then particle 4, one uniform each, inverse CDF in declaration
/// order) is exactly the one the sequential measure() chain would consume.
/// sigma is propagated from the four per-term standard errors.
inline ChshEstimate chsh_sampled(const SwapConfig& cfg, const ChshSetting& setting,
                                 const std::string& conditioning, std::size_t trials_per_term,
                                 RandomStream& rng) {
    if (trials_per_term == 0) {
        throw std::invalid_argument("chsh_sampled: need at least one trial per term");
    }
    const StateVector initial = swap_initial_state();
    const MeasurementBasis eve = cfg.eve_measurement();
    const auto eve_dist = outcome_distribution(initial, eve);
    if (probability_of(eve_dist, conditioning) <= kAlgebraTolerance) {
        throw std::invalid_argument("chsh_sampled: conditioning outcome '" + conditioning +
                                    "' has zero probability");
    }
    const StateVector pair = conditional_state(initial, eve, conditioning);

    const std::array<std::pair<MeasurementAxis, MeasurementAxis>, 4> terms{
        {{setting.a, setting.b},
         {setting.a, setting.b_prime},
         {setting.a_prime, setting.b},
         {setting.a_prime, setting.b_prime}}};

    ChshEstimate est;
    double variance = 0.0;
    for (std::size_t t = 0; t < terms.size(); ++t) {
        const MeasurementBasis basis1 = MeasurementBasis::along_axis("1", terms[t].first);
        const MeasurementBasis basis4 = MeasurementBasis::along_axis("4", terms[t].second);
        // Chain-rule tables: P(1 = +) and P(4 = + | 1 = +-). A branch with
        // zero probability is never drawn, so its table entry is never read.
        const double p1_plus = outcome_distribution(pair, basis1).front().second;
        double p4_plus_given[2] = {0.0, 0.0};
        if (p1_plus > kAlgebraTolerance) {
            p4_plus_given[0] =
                outcome_distribution(conditional_state(pair, basis1, "+"), basis4).front().second;
        }
        if (1.0 - p1_plus > kAlgebraTolerance) {
            p4_plus_given[1] =
                outcome_distribution(conditional_state(pair, basis1, "-"), basis4).front().second;
        }

        long long sum = 0;
        std::size_t accepted = 0;
        for (std::size_t trial = 0; trial < trials_per_term; ++trial) {
            const double u_eve = rng.uniform01();
            double cum = 0.0;
            std::size_t pick = eve_dist.size() - 1;
            for (std::size_t k = 0; k < eve_dist.size(); ++k) {
                cum += eve_dist[k].second;
                if (u_eve < cum) {
                    pick = k;
                    break;
                }
            }
            if (eve_dist[pick].first != conditioning) continue;
            const int o1 = rng.uniform01() < p1_plus ? +1 : -1;
            const int o4 = rng.uniform01() < p4_plus_given[o1 > 0 ? 0 : 1] ? +1 : -1;
            sum += o1 * o4;
            ++accepted;
        }
        if (accepted == 0) {
            throw std::invalid_argument("chsh_sampled: empty conditional ensemble for term " +
                                        std::to_string(t));
        }
        const double e = static_cast<double>(sum) / static_cast<double>(accepted);
        est.correlations[t] = e;
        est.accepted[t] = accepted;
        variance += (1.0 - e * e) / static_cast<double>(accepted);
    }
    est.value = est.correlations[0] - est.correlations[1] + est.correlations[2] +
                est.correlations[3];
    est.sigma = std::sqrt(variance);
    return est;
}

} // namespace tisim

#endif // TISIM_STATS_HPP
