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

#include <cstdlib>

#include "tisim/config.hpp"
#include "tisim/report.hpp"

using namespace tisim;
using nlohmann::json;

TEST_CASE("missing sections fall back to defaults", "[config]") {
    const LoadedConfig loaded = parse_scenario_config("swap", json::object());
    const auto& swap = std::get<SwapConfig>(loaded.scenario);
    REQUIRE(swap.eve_basis == EveBasis::bell);
    REQUIRE(swap.ordering == MeasurementOrdering::eve_first);
    REQUIRE(loaded.swap_analysis.resolved_conditioning(swap.eve_basis) == "Psi+");
    REQUIRE(loaded.swap_analysis.resolved_conditioning(EveBasis::product) == "+-");
}

TEST_CASE("full config round trip", "[config]") {
    const json root = json::parse(R"({
        "renninger": {"shell_fraction": 0.25, "inner_radius": 2.0, "outer_radius": 5.0},
        "maudlin": {"far_left_absorber": true},
        "quantum_liar": {"reflection_phase": "-i", "blocking_state": "-"},
        "swap": {
            "eve_basis": "product",
            "ordering": "edges_first",
            "axis1": [0.0, 0.0, 1.0],
            "axis4": [1.0, 0.0, 0.0],
            "chsh": {"a": [0.0, 0.0, 1.0], "conditioning": "++"}
        }
    })");

    const auto renninger =
        std::get<RenningerConfig>(parse_scenario_config("renninger", root).scenario);
    REQUIRE(renninger.shell_fraction == 0.25);
    REQUIRE(renninger.inner_radius == 2.0);

    const auto maudlin = std::get<MaudlinConfig>(parse_scenario_config("maudlin", root).scenario);
    REQUIRE(maudlin.far_left_absorber);

    const auto liar =
        std::get<QuantumLiarConfig>(parse_scenario_config("quantum_liar", root).scenario);
    REQUIRE(liar.reflection_phase == Amplitude{0.0, -1.0});
    REQUIRE(liar.blocking_state == '-');

    const LoadedConfig swap_loaded = parse_scenario_config("swap", root);
    const auto& swap = std::get<SwapConfig>(swap_loaded.scenario);
    REQUIRE(swap.eve_basis == EveBasis::product);
    REQUIRE(swap.ordering == MeasurementOrdering::edges_first);
    REQUIRE(swap.axis4.x == 1.0);
    REQUIRE(swap_loaded.swap_analysis.conditioning == "++");
}

TEST_CASE("unknown keys and malformed values are rejected", "[config]") {
    REQUIRE_THROWS_AS(parse_scenario_config("swap", json::parse(R"({"swaap": {}})")),
                      ConfigError);
    REQUIRE_THROWS_AS(
        parse_scenario_config("renninger", json::parse(R"({"renninger": {"shellfrac": 1}})")),
        ConfigError);
    REQUIRE_THROWS_AS(
        parse_scenario_config("swap", json::parse(R"({"swap": {"chsh": {"aa": [0,0,1]}}})")),
        ConfigError);
    REQUIRE_THROWS_AS(
        parse_scenario_config("swap", json::parse(R"({"swap": {"eve_basis": "diagonal"}})")),
        ConfigError);
    REQUIRE_THROWS_AS(
        parse_scenario_config("swap", json::parse(R"({"swap": {"axis1": [3, 0, 0]}})")),
        ConfigError);
    REQUIRE_THROWS_AS(
        parse_scenario_config("renninger",
                              json::parse(R"({"renninger": {"shell_fraction": "half"}})")),
        ConfigError);
    REQUIRE_THROWS_AS(
        parse_scenario_config("quantum_liar",
                              json::parse(R"({"quantum_liar": {"reflection_phase": "1"}})")),
        ConfigError);
    REQUIRE_THROWS_AS(parse_scenario_config("unknown", json::object()), ConfigError);
    // Sections are validated even when another scenario is requested.
    REQUIRE_THROWS_AS(
        parse_scenario_config("renninger", json::parse(R"({"maudlin": {"typo": 1}})")),
        ConfigError);
}

TEST_CASE("json writer produces stable, escaped output", "[report]") {
    JsonWriter w;
    w.begin_object();
    w.key("name").value("line\nbreak \"quoted\"");
    w.key("count").value(std::uint64_t{3});
    w.key("fraction").value(0.125);
    w.key("flag").value(true);
    w.key("items").begin_array().value(std::uint64_t{1}).value(std::uint64_t{2}).end_array();
    w.key("empty").begin_object().end_object();
    w.end_object();

    const std::string expected =
        "{\n"
        "  \"name\": \"line\\nbreak \\\"quoted\\\"\",\n"
        "  \"count\": 3,\n"
        "  \"fraction\": 0.125,\n"
        "  \"flag\": true,\n"
        "  \"items\": [\n"
        "    1,\n"
        "    2\n"
        "  ],\n"
        "  \"empty\": {}\n"
        "}\n";
    REQUIRE(w.str() == expected);

    // And it parses back as JSON with the values intact.
    const json parsed = json::parse(w.str());
    REQUIRE(parsed["count"] == 3);
    REQUIRE(parsed["fraction"] == 0.125);
}

TEST_CASE("doubles round-trip through 17 significant digits", "[report]") {
    for (double v : {1.0 / 3.0, 0.1, 2.8284271247461903, 1e-300, 12345.6789012345678}) {
        const std::string text = format_double(v);
        REQUIRE(std::strtod(text.c_str(), nullptr) == v);
    }
}

TEST_CASE("csv table mirrors the compare report", "[report]") {
    CompareReport report;
    report.trials = 4;
    report.k_sigma = 4.0;
    report.passed = true;
    report.rows = {CompareRow{"E1", 3, 0.75, 0.21650635094610965, 0.5, true},
                   CompareRow{"E2", 1, 0.25, 0.21650635094610965, 0.5, true}};
    const std::string csv = compare_report_csv(report);
    REQUIRE(csv ==
            "label,count,frequency,sigma,analytic_p,pass\n"
            "E1,3,0.75,0.21650635094610965,0.5,true\n"
            "E2,1,0.25,0.21650635094610965,0.5,true\n");
}

TEST_CASE("fingerprint hashing is stable", "[report]") {
    REQUIRE(fnv1a_hex("") == "cbf29ce484222325");
    REQUIRE(fnv1a_hex("abc") == fnv1a_hex("abc"));
    REQUIRE(fnv1a_hex("abc") != fnv1a_hex("abd"));
    REQUIRE(RenningerConfig{}.fingerprint() == RenningerConfig{}.fingerprint());
}
