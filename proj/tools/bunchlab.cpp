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
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "bunchlab/experiment.hpp"

namespace {

struct CommonOptions {
    std::string config_path;
    std::string out_path;
    std::string format;
    std::uint64_t seed = 0;
    bool seed_given = false;
    double unit = 1.0;
};

void add_common(CLI::App* cmd, CommonOptions& opts, bool config_required) {
    auto* config = cmd->add_option("--config", opts.config_path, "JSON experiment configuration");
    if (config_required)
        config->required();
    cmd->add_option("--out", opts.out_path, "output file (stdout when omitted)");
    cmd->add_option("--format", opts.format, "output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--seed", opts.seed, "seed for randomized verification")
        ->each([&opts](const std::string&) { opts.seed_given = true; });
    cmd->add_option("--unit", opts.unit, "time unit scale applied to config inputs")
        ->check(CLI::PositiveNumber);
}

int emit(const bunchlab::RunOutcome& outcome, const CommonOptions& opts) {
    if (opts.out_path.empty()) {
        std::cout << outcome.document;
    } else {
        std::ofstream out(opts.out_path, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot open output file " << opts.out_path << "\n";
            return 2;
        }
        out << outcome.document;
    }
    return outcome.exit_code;
}

int run_mode(bunchlab::Mode mode, const CommonOptions& opts,
             const std::optional<bunchlab::TableSpec>& table_args) {
    nlohmann::json doc;
    if (!opts.config_path.empty()) {
        std::ifstream in(opts.config_path);
        if (!in) {
            std::cerr << "error: cannot open config file " << opts.config_path << "\n";
            return 2;
        }
        try {
            in >> doc;
        } catch (const nlohmann::json::parse_error& e) {
            std::cerr << "error: malformed JSON in " << opts.config_path << ": " << e.what()
                      << "\n";
            return 2;
        }
    } else {
        doc = nlohmann::json::object();
    }

    doc["mode"] = bunchlab::mode_name(mode);
    if (table_args)
        doc["table"] = {{"n", table_args->n}, {"m", table_args->m}};
    if (opts.seed_given)
        doc["seed"] = opts.seed;

    bunchlab::OutputFormat format = bunchlab::OutputFormat::json;
    if (opts.format.empty()) {
        if (mode == bunchlab::Mode::scan)
            format = bunchlab::OutputFormat::csv;
    } else if (opts.format == "csv") {
        format = bunchlab::OutputFormat::csv;
    }

    try {
        const auto cfg = bunchlab::parse_config(doc, opts.unit);
        return emit(bunchlab::run(cfg, format), opts);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Photon-bunching enhancement calculator for a lossless beam splitter"};
    app.require_subcommand(1);

    CommonOptions opts;
    std::optional<bunchlab::TableSpec> table_args;

    auto* enhance = app.add_subcommand("enhance", "bunching probability and enhancement factor");
    add_common(enhance, opts, true);

    auto* scan = app.add_subcommand("scan", "delay scan of the single-photon arrival time");
    add_common(scan, opts, true);

    auto* table = app.add_subcommand("table", "enumerate distinguishability scenarios");
    unsigned table_n = 0;
    unsigned table_m = 0;
    table->add_option("n", table_n, "a-side photon count");
    table->add_option("m", table_m, "b-side photon count");
    add_common(table, opts, false);

    auto* verify = app.add_subcommand("verify", "randomized oracle cross-checks");
    add_common(verify, opts, false);

    auto* amplifier = app.add_subcommand("amplifier", "stimulated-emission probabilities");
    add_common(amplifier, opts, true);

    CLI11_PARSE(app, argc, argv);

    bunchlab::Mode mode = bunchlab::Mode::enhance;
    if (scan->parsed())
        mode = bunchlab::Mode::scan;
    else if (table->parsed()) {
        mode = bunchlab::Mode::table;
        if (table->count("n") > 0)
            table_args = bunchlab::TableSpec{table_n, table_m};
    } else if (verify->parsed())
        mode = bunchlab::Mode::verify;
    else if (amplifier->parsed())
        mode = bunchlab::Mode::amplifier;

    return run_mode(mode, opts, table_args);
}
