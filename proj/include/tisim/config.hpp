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

#ifndef TISIM_CONFIG_HPP
#define TISIM_CONFIG_HPP

#include <fstream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tisim/scenarios.hpp"
#include "tisim/stats.hpp"

namespace tisim {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// CHSH analysis parameters attached to the swap scenario. `conditioning`
/// names the Eve outcome the sampled estimate conditions on; when absent it
/// defaults to "Psi+" for the Bell basis and "+-" for the product basis.
struct SwapAnalysisOptions {
    ChshSetting chsh;
    std::optional<std::string> conditioning;

    std::string resolved_conditioning(EveBasis basis) const {
        if (conditioning) return *conditioning;
        return basis == EveBasis::bell ? "Psi+" : "+-";
    }
};

struct LoadedConfig {
    ScenarioConfig scenario;
    SwapAnalysisOptions swap_analysis;
};

namespace detail {

using json = nlohmann::json;

inline void require_known_keys(const json& obj, const std::set<std::string>& known,
                               const std::string& where) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        if (known.find(it.key()) == known.end()) {
            throw ConfigError("config: unknown key '" + it.key() + "' in " + where);
        }
    }
}

inline double number_at(const json& obj, const char* key, double fallback) {
    if (!obj.contains(key)) return fallback;
    if (!obj[key].is_number()) throw ConfigError(std::string("config: '") + key + "' must be a number");
    return obj[key].get<double>();
}

inline bool bool_at(const json& obj, const char* key, bool fallback) {
    if (!obj.contains(key)) return fallback;
    if (!obj[key].is_boolean()) throw ConfigError(std::string("config: '") + key + "' must be a boolean");
    return obj[key].get<bool>();
}

inline std::string string_at(const json& obj, const char* key, const std::string& fallback) {
    if (!obj.contains(key)) return fallback;
    if (!obj[key].is_string()) throw ConfigError(std::string("config: '") + key + "' must be a string");
    return obj[key].get<std::string>();
}

inline MeasurementAxis axis_at(const json& obj, const char* key, const MeasurementAxis& fallback) {
    if (!obj.contains(key)) return fallback;
    const json& v = obj[key];
    if (!v.is_array() || v.size() != 3 || !v[0].is_number() || !v[1].is_number() ||
        !v[2].is_number()) {
        throw ConfigError(std::string("config: '") + key + "' must be a unit 3-vector [x, y, z]");
    }
    try {
        return MeasurementAxis(v[0].get<double>(), v[1].get<double>(), v[2].get<double>());
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("config: '") + key + "': " + e.what());
    }
}

inline RenningerConfig parse_renninger(const json& section) {
    require_known_keys(section,
                       {"shell_fraction", "inner_radius", "outer_radius", "speed",
                        "emission_time"},
                       "[renninger]");
    RenningerConfig cfg;
    cfg.shell_fraction = number_at(section, "shell_fraction", cfg.shell_fraction);
    cfg.inner_radius = number_at(section, "inner_radius", cfg.inner_radius);
    cfg.outer_radius = number_at(section, "outer_radius", cfg.outer_radius);
    cfg.speed = number_at(section, "speed", cfg.speed);
    cfg.emission_time = number_at(section, "emission_time", cfg.emission_time);
    return cfg;
}

inline MaudlinConfig parse_maudlin(const json& section) {
    require_known_keys(section, {"far_left_absorber"}, "[maudlin]");
    MaudlinConfig cfg;
    cfg.far_left_absorber = bool_at(section, "far_left_absorber", cfg.far_left_absorber);
    return cfg;
}

inline QuantumLiarConfig parse_quantum_liar(const json& section) {
    require_known_keys(section, {"reflection_phase", "blocking_state"}, "[quantum_liar]");
    QuantumLiarConfig cfg;
    const std::string phase = string_at(section, "reflection_phase", "i");
    if (phase == "i" || phase == "+i") {
        cfg.reflection_phase = Amplitude{0.0, 1.0};
    } else if (phase == "-i") {
        cfg.reflection_phase = Amplitude{0.0, -1.0};
    } else {
        throw ConfigError("config: reflection_phase must be \"i\" or \"-i\"");
    }
    const std::string blocking = string_at(section, "blocking_state", "+");
    if (blocking != "+" && blocking != "-") {
        throw ConfigError("config: blocking_state must be \"+\" or \"-\"");
    }
    cfg.blocking_state = blocking[0];
    return cfg;
}

inline SwapConfig parse_swap(const json& section) {
    require_known_keys(section, {"eve_basis", "ordering", "axis1", "axis4", "chsh"}, "[swap]");
    SwapConfig cfg;
    const std::string basis = string_at(section, "eve_basis", "bell");
    if (basis == "bell") {
        cfg.eve_basis = EveBasis::bell;
    } else if (basis == "product") {
        cfg.eve_basis = EveBasis::product;
    } else {
        throw ConfigError("config: eve_basis must be \"bell\" or \"product\"");
    }
    const std::string ordering = string_at(section, "ordering", "eve_first");
    if (ordering == "eve_first") {
        cfg.ordering = MeasurementOrdering::eve_first;
    } else if (ordering == "edges_first") {
        cfg.ordering = MeasurementOrdering::edges_first;
    } else {
        throw ConfigError("config: ordering must be \"eve_first\" or \"edges_first\"");
    }
    cfg.axis1 = axis_at(section, "axis1", cfg.axis1);
    cfg.axis4 = axis_at(section, "axis4", cfg.axis4);
    return cfg;
}

inline SwapAnalysisOptions parse_swap_analysis(const json& section) {
    SwapAnalysisOptions opts;
    if (!section.contains("chsh")) return opts;
    const json& chsh = section["chsh"];
    if (!chsh.is_object()) throw ConfigError("config: 'chsh' must be an object");
    require_known_keys(chsh, {"a", "a_prime", "b", "b_prime", "conditioning"}, "[swap.chsh]");
    opts.chsh.a = axis_at(chsh, "a", opts.chsh.a);
    opts.chsh.a_prime = axis_at(chsh, "a_prime", opts.chsh.a_prime);
    opts.chsh.b = axis_at(chsh, "b", opts.chsh.b);
    opts.chsh.b_prime = axis_at(chsh, "b_prime", opts.chsh.b_prime);
    if (chsh.contains("conditioning")) {
        opts.conditioning = string_at(chsh, "conditioning", "");
    }
    return opts;
}

} // namespace detail

/// Parse one scenario's configuration from a JSON document with one section
/// per scenario. Every section present is schema-checked (unknown sections
/// and unknown keys are errors), then the requested one is materialized;
/// a missing section means defaults.
inline LoadedConfig parse_scenario_config(const std::string& scenario,
                                          const nlohmann::json& root) {
    using detail::json;
    if (!root.is_object()) {
        throw ConfigError("config: top level must be an object with per-scenario sections");
    }
    detail::require_known_keys(root, {"renninger", "maudlin", "quantum_liar", "swap"},
                               "the top-level config");
    for (auto it = root.begin(); it != root.end(); ++it) {
        if (!it.value().is_object()) {
            throw ConfigError("config: section '" + it.key() + "' must be an object");
        }
        // Validate every section, not only the requested one.
        if (it.key() == "renninger") detail::parse_renninger(it.value());
        if (it.key() == "maudlin") detail::parse_maudlin(it.value());
        if (it.key() == "quantum_liar") detail::parse_quantum_liar(it.value());
        if (it.key() == "swap") {
            detail::parse_swap(it.value());
            detail::parse_swap_analysis(it.value());
        }
    }

    const json empty = json::object();
    const json& section = root.contains(scenario) ? root[scenario] : empty;
    LoadedConfig loaded;
    if (scenario == "renninger") {
        loaded.scenario = detail::parse_renninger(section);
    } else if (scenario == "maudlin") {
        loaded.scenario = detail::parse_maudlin(section);
    } else if (scenario == "quantum_liar") {
        loaded.scenario = detail::parse_quantum_liar(section);
    } else if (scenario == "swap") {
        loaded.scenario = detail::parse_swap(section);
        loaded.swap_analysis = detail::parse_swap_analysis(section);
    } else {
        throw ConfigError("config: unknown scenario '" + scenario +
                          "' (expected renninger, maudlin, quantum_liar or swap)");
    }
    return loaded;
}

inline LoadedConfig load_scenario_config(const std::string& scenario,
                                         const std::string& config_path) {
    if (config_path.empty()) {
        return parse_scenario_config(scenario, nlohmann::json::object());
    }
    std::ifstream in(config_path);
    if (!in) {
        throw ConfigError("config: cannot open '" + config_path + "'");
    }
    nlohmann::json root;
    try {
        in >> root;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("config: '" + config_path + "' is not valid JSON: " + e.what());
    }
    return parse_scenario_config(scenario, root);
}

} // namespace tisim

#endif // TISIM_CONFIG_HPP
