/*
 * Copyright 2026 The bunchlab authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json_fwd.hpp>

#include "bunchlab/interference.hpp"

namespace bunchlab {

inline constexpr int kSchemaVersion = 1;

enum class Mode { enhance, scan, table, verify, amplifier };
enum class OutputFormat { json, csv };

Mode parse_mode(std::string_view text);
const char* mode_name(Mode mode);

struct ScanSpec {
    double start = 0.0;
    double stop = 0.0;
    std::size_t steps = 0;  ///< >= 2
};

struct TableSpec {
    unsigned n = 0;
    unsigned m = 0;
};

struct AmplifierSpec {
    double coupling = 0.05;   ///< |g|, <= 0.1
    unsigned n_matched = 0;   ///< photons in the amplifier's signal mode
    unsigned n_unmatched = 0;
};

struct ExperimentConfig {
    Mode mode = Mode::enhance;
    std::vector<WavePacket> packets_a;
    std::vector<WavePacket> packets_b;
    double transmissivity = 0.5;
    std::optional<ScanSpec> scan;
    std::optional<std::string> scenario_label;
    std::optional<TableSpec> table;
    std::optional<AmplifierSpec> amplifier;
    std::uint64_t seed = 0;
};

/// Parses and validates a JSON experiment configuration. Packet times are
/// divided by unit_scale and detunings multiplied by it, so configs stated
/// in seconds can be rescaled away from float underflow.
/// Throws std::invalid_argument listing every offending field.
ExperimentConfig parse_config(const nlohmann::json& doc, double unit_scale = 1.0);

struct RunOutcome {
    int exit_code = 0;
    std::string document;
};

/// Dispatches a validated configuration to the engine, scenario, or
/// amplifier modules and renders the result document. Deterministic:
/// identical config and seed produce byte-identical documents.
RunOutcome run(const ExperimentConfig& cfg, OutputFormat format);

}  // namespace bunchlab
