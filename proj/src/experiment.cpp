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
#include "bunchlab/experiment.hpp"

#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

#include "bunchlab/amplifier.hpp"
#include "bunchlab/permanent.hpp"
#include "bunchlab/scenario.hpp"

namespace bunchlab {

namespace {

using nlohmann::json;

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::vector<WavePacket> parse_packets(const json& arr, double unit_scale,
                                      const std::string& field, std::vector<std::string>& bad) {
    std::vector<WavePacket> packets;
    if (!arr.is_array()) {
        bad.push_back(field + ": expected an array");
        return packets;
    }
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const json& rec = arr[i];
        WavePacket p;
        p.center_time = rec.value("center_time_s", 0.0) / unit_scale;
        p.width = rec.value("width_s", 0.0) / unit_scale;
        p.detuning = rec.value("detuning_rad_s", 0.0) * unit_scale;
        p.phase = rec.value("phase_rad", 0.0);
        if (!(p.width > 0.0))
            bad.push_back(field + "[" + std::to_string(i) + "].width_s: must be > 0");
        packets.push_back(p);
    }
    return packets;
}

RunOutcome run_enhance(const ExperimentConfig& cfg, OutputFormat format) {
    InputConfiguration input;
    if (cfg.scenario_label) {
        // Unit-agnostic realization: unit width, groups 20 widths apart.
        input = scenario_to_packets(parse_label(*cfg.scenario_label), 1.0, 20.0);
        input.transmissivity = cfg.transmissivity;
    } else {
        input = {cfg.packets_a, cfg.packets_b, cfg.transmissivity};
    }
    const CoincidenceResult res = coincidence_probability(input);

    json doc;
    doc["schema"] = kSchemaVersion;
    doc["mode"] = "enhance";
    doc["n"] = input.port_a.size();
    doc["m"] = input.port_b.size();
    doc["transmissivity"] = input.transmissivity;
    doc["p_quantum"] = res.p_quantum;
    doc["p_classical"] = res.p_classical;
    doc["enhancement"] = res.enhancement;
    doc["convention"] =
        "probabilities include the (N+M)! factor of the time-ordered multi-detector integral";
    if (format == OutputFormat::csv) {
        std::ostringstream out;
        out << "n,m,transmissivity,p_quantum,p_classical,enhancement\n";
        out << input.port_a.size() << ',' << input.port_b.size() << ','
            << num(input.transmissivity) << ',' << num(res.p_quantum) << ','
            << num(res.p_classical) << ',' << num(res.enhancement) << '\n';
        return {0, out.str()};
    }
    return {0, doc.dump(2) + "\n"};
}

RunOutcome run_scan(const ExperimentConfig& cfg, OutputFormat format) {
    if (!cfg.scan)
        throw std::invalid_argument("scan mode requires a scan specification");
    const ScanSpec& spec = *cfg.scan;
    std::vector<double> delays(spec.steps);
    for (std::size_t i = 0; i < spec.steps; ++i)
        delays[i] = spec.start
                    + (spec.stop - spec.start) * static_cast<double>(i)
                          / static_cast<double>(spec.steps - 1);

    const InputConfiguration input{cfg.packets_a, cfg.packets_b, cfg.transmissivity};
    const DelayScanResult scan = delay_scan(input, delays);

    if (format == OutputFormat::json) {
        json doc;
        doc["schema"] = kSchemaVersion;
        doc["mode"] = "scan";
        doc["baseline"] = scan.baseline;
        json points = json::array();
        for (const auto& pt : scan.points)
            points.push_back({{"delay_s", pt.delay},
                              {"p_quantum", pt.result.p_quantum},
                              {"p_classical", pt.result.p_classical},
                              {"enhancement", pt.result.enhancement},
                              {"normalized", pt.normalized}});
        doc["points"] = points;
        return {0, doc.dump(2) + "\n"};
    }

    std::ostringstream out;
    out << "delay_s,p_quantum,p_classical,enhancement,normalized\n";
    for (const auto& pt : scan.points)
        out << num(pt.delay) << ',' << num(pt.result.p_quantum) << ','
            << num(pt.result.p_classical) << ',' << num(pt.result.enhancement) << ','
            << num(pt.normalized) << '\n';
    return {0, out.str()};
}

RunOutcome run_table(const ExperimentConfig& cfg, OutputFormat format) {
    if (!cfg.table)
        throw std::invalid_argument("table mode requires photon counts n and m");
    const auto scenarios = enumerate_scenarios(cfg.table->n, cfg.table->m);

    // Published labels, keyed by canonical scenario.
    std::vector<std::pair<DistinguishabilityScenario, std::string>> published;
    for (const auto& entry : paper_table(cfg.table->n, cfg.table->m))
        published.emplace_back(parse_label(entry.label), entry.label);

    auto published_label = [&](const DistinguishabilityScenario& s) -> const std::string* {
        for (const auto& [scenario, label] : published)
            if (scenario == s)
                return &label;
        return nullptr;
    };

    if (format == OutputFormat::csv) {
        std::ostringstream out;
        out << "label,factor,in_paper_table\n";
        for (const auto& [scenario, factor] : scenarios)
            out << format_label(scenario) << ',' << factor << ','
                << (published_label(scenario) ? 1 : 0) << '\n';
        return {0, out.str()};
    }

    json doc;
    doc["schema"] = kSchemaVersion;
    doc["mode"] = "table";
    doc["n"] = cfg.table->n;
    doc["m"] = cfg.table->m;
    json rows = json::array();
    for (const auto& [scenario, factor] : scenarios) {
        json row;
        row["label"] = format_label(scenario);
        row["factor"] = factor;
        const std::string* label = published_label(scenario);
        row["in_paper_table"] = label != nullptr;
        if (label)
            row["paper_label"] = *label;
        rows.push_back(row);
    }
    doc["scenarios"] = rows;
    return {0, doc.dump(2) + "\n"};
}

RunOutcome run_amplifier(const ExperimentConfig& cfg, OutputFormat format) {
    if (!cfg.amplifier)
        throw std::invalid_argument("amplifier mode requires an amplifier specification");
    const AmplifierSpec& spec = *cfg.amplifier;
    const AmplifierGain gain = AmplifierGain::from_small_gain(spec.coupling);
    const double p = emission_probability(gain, spec.n_matched, spec.n_unmatched);
    const double p0 = emission_probability(gain, 0, spec.n_unmatched);

    json doc;
    doc["schema"] = kSchemaVersion;
    doc["mode"] = "amplifier";
    doc["coupling"] = spec.coupling;
    doc["n_matched"] = spec.n_matched;
    doc["n_unmatched"] = spec.n_unmatched;
    doc["emission_probability"] = p;
    doc["spontaneous_probability"] = p0;
    doc["enhancement"] = p / p0;
    json terms = json::array();
    for (const auto& amp : output_amplitudes(gain, spec.n_matched, spec.n_unmatched))
        terms.push_back({{"signal", amp.n_signal},
                         {"spectator", amp.n_spectator},
                         {"idler", amp.n_idler},
                         {"amplitude_re", amp.amplitude.real()},
                         {"amplitude_im", amp.amplitude.imag()}});
    doc["output_amplitudes"] = terms;
    if (format == OutputFormat::csv) {
        std::ostringstream out;
        out << "n_matched,n_unmatched,emission_probability,spontaneous_probability,enhancement\n"
            << spec.n_matched << ',' << spec.n_unmatched << ',' << num(p) << ',' << num(p0)
            << ',' << num(p / p0) << '\n';
        return {0, out.str()};
    }
    return {0, doc.dump(2) + "\n"};
}

// ---- verify mode -----------------------------------------------------------

WavePacket random_packet(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> center(-3.0, 3.0);
    std::uniform_real_distribution<double> width(0.5, 2.0);
    std::uniform_real_distribution<double> detuning(-2.0, 2.0);
    std::uniform_real_distribution<double> phase(-3.14159, 3.14159);
    return {center(rng), width(rng), detuning(rng), phase(rng)};
}

// Simpson quadrature of integral g_p*(t) g_q(t) dt over the packets' support.
cplx overlap_quadrature(const WavePacket& p, const WavePacket& q) {
    auto amplitude = [](const WavePacket& w, double t) {
        const double gauss = std::pow(3.14159265358979323846 * w.width * w.width, -0.25)
                             * std::exp(-(t - w.center_time) * (t - w.center_time)
                                        / (2.0 * w.width * w.width));
        return gauss * std::exp(cplx(0.0, -(w.detuning * t - w.phase)));
    };
    const double wmax = std::max(p.width, q.width);
    const double lo = std::min(p.center_time, q.center_time) - 12.0 * wmax;
    const double hi = std::max(p.center_time, q.center_time) + 12.0 * wmax;
    const std::size_t n = 40000;  // even
    const double h = (hi - lo) / static_cast<double>(n);
    cplx sum{0.0, 0.0};
    for (std::size_t i = 0; i <= n; ++i) {
        const double t = lo + h * static_cast<double>(i);
        const double w = (i == 0 || i == n) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
        sum += w * std::conj(amplitude(p, t)) * amplitude(q, t);
    }
    return sum * (h / 3.0);
}

RunOutcome run_verify(const ExperimentConfig& cfg) {
    std::mt19937_64 rng(cfg.seed);
    std::ostringstream out;
    int failures = 0;

    auto report = [&](const char* name, bool ok) {
        out << (ok ? "PASS" : "FAIL") << ' ' << name << '\n';
        if (!ok)
            ++failures;
    };

    {
        std::uniform_real_distribution<double> entry(-1.0, 1.0);
        std::uniform_int_distribution<std::size_t> dims(2, 7);
        double worst = 0.0;
        for (int c = 0; c < 100; ++c) {
            ComplexMatrix m(dims(rng));
            for (std::size_t i = 0; i < m.dim(); ++i)
                for (std::size_t j = 0; j < m.dim(); ++j)
                    m(i, j) = cplx(entry(rng), entry(rng));
            const cplx fast = permanent_fast(m);
            const cplx naive = permanent_naive(m);
            worst = std::max(worst, std::abs(fast - naive) / std::max(1.0, std::abs(naive)));
        }
        report("permanent fast kernel matches factorial oracle (rel err < 1e-10)",
               worst < 1e-10);
    }

    {
        double worst = 0.0;
        for (int c = 0; c < 50; ++c) {
            const WavePacket p = random_packet(rng);
            const WavePacket q = random_packet(rng);
            const cplx closed = overlap(p, q);
            const cplx quad = overlap_quadrature(p, q);
            worst = std::max(worst, std::abs(closed - quad) / std::max(1e-6, std::abs(quad)));
        }
        report("closed-form overlap matches quadrature (rel err < 1e-8)", worst < 1e-8);
    }

    {
        bool ok = true;
        std::uniform_int_distribution<std::size_t> count(1, 6);
        for (int c = 0; c < 200 && ok; ++c) {
            std::vector<WavePacket> packets(count(rng));
            for (auto& p : packets)
                p = random_packet(rng);
            try {
                gram(packets).validate();
            } catch (const std::exception&) {
                ok = false;
            }
        }
        report("Gram matrices are Hermitian, unit-diagonal, PSD", ok);
    }

    {
        double worst = 0.0;
        std::uniform_int_distribution<std::size_t> count(1, 4);
        std::uniform_real_distribution<double> trans(0.1, 0.9);
        for (int c = 0; c < 50; ++c) {
            InputConfiguration input;
            const std::size_t n = count(rng);
            const std::size_t m = std::min<std::size_t>(count(rng), 5 - n);
            if (m == 0)
                continue;
            for (std::size_t i = 0; i < n; ++i)
                input.port_a.push_back(random_packet(rng));
            for (std::size_t i = 0; i < m; ++i)
                input.port_b.push_back(random_packet(rng));
            input.transmissivity = trans(rng);
            const CoincidenceResult engine = coincidence_probability(input);
            const CoincidenceResult oracle = oracle_permutation_sum(input);
            worst = std::max(worst, std::abs(engine.p_quantum - oracle.p_quantum)
                                        / std::max(1e-12, oracle.p_quantum));
        }
        report("engine matches permutation-sum oracle (rel err < 1e-9)", worst < 1e-9);
    }

    {
        double worst = 0.0;
        for (int c = 0; c < 25; ++c) {
            InputConfiguration input;
            input.port_a = {random_packet(rng), random_packet(rng)};
            input.port_b = {random_packet(rng)};
            input.transmissivity = 0.3;
            const double e1 = coincidence_probability(input).enhancement;
            input.transmissivity = 0.7;
            const double e2 = coincidence_probability(input).enhancement;
            worst = std::max(worst, std::abs(e1 - e2));
        }
        report("enhancement independent of transmissivity (spread < 1e-10)", worst < 1e-10);
    }

    return {failures == 0 ? 0 : 1, out.str()};
}

}  // namespace

Mode parse_mode(std::string_view text) {
    if (text == "enhance")
        return Mode::enhance;
    if (text == "scan")
        return Mode::scan;
    if (text == "table")
        return Mode::table;
    if (text == "verify")
        return Mode::verify;
    if (text == "amplifier")
        return Mode::amplifier;
    throw std::invalid_argument("unknown mode: " + std::string(text));
}

const char* mode_name(Mode mode) {
    switch (mode) {
        case Mode::enhance: return "enhance";
        case Mode::scan: return "scan";
        case Mode::table: return "table";
        case Mode::verify: return "verify";
        case Mode::amplifier: return "amplifier";
    }
    return "?";
}

ExperimentConfig parse_config(const nlohmann::json& doc, double unit_scale) {
    if (!(unit_scale > 0.0))
        throw std::invalid_argument("unit scale must be > 0");
    std::vector<std::string> bad;
    ExperimentConfig cfg;

    if (doc.contains("schema") && doc["schema"] != kSchemaVersion)
        bad.push_back("schema: unsupported version");
    if (!doc.contains("mode"))
        bad.push_back("mode: required");
    else
        cfg.mode = parse_mode(doc["mode"].get<std::string>());

    if (doc.contains("packets_a"))
        cfg.packets_a = parse_packets(doc["packets_a"], unit_scale, "packets_a", bad);
    if (doc.contains("packets_b"))
        cfg.packets_b = parse_packets(doc["packets_b"], unit_scale, "packets_b", bad);

    cfg.transmissivity = doc.value("transmissivity", 0.5);
    if (!(cfg.transmissivity >= 0.0 && cfg.transmissivity <= 1.0))
        bad.push_back("transmissivity: must be in [0, 1]");

    if (doc.contains("scan")) {
        const json& s = doc["scan"];
        ScanSpec spec{s.value("start_s", 0.0) / unit_scale, s.value("stop_s", 0.0) / unit_scale,
                      s.value("steps", std::size_t{0})};
        if (spec.steps < 2)
            bad.push_back("scan.steps: must be >= 2");
        cfg.scan = spec;
    }
    if (doc.contains("scenario_label"))
        cfg.scenario_label = doc["scenario_label"].get<std::string>();
    if (doc.contains("table")) {
        const json& t = doc["table"];
        cfg.table = TableSpec{t.value("n", 0u), t.value("m", 0u)};
    }
    if (doc.contains("amplifier")) {
        const json& a = doc["amplifier"];
        AmplifierSpec spec{a.value("coupling", 0.05), a.value("n_matched", 0u),
                           a.value("n_unmatched", 0u)};
        if (!(spec.coupling > 0.0 && spec.coupling <= 0.1))
            bad.push_back("amplifier.coupling: must be in (0, 0.1]");
        cfg.amplifier = spec;
    }
    cfg.seed = doc.value("seed", std::uint64_t{0});

    switch (cfg.mode) {
        case Mode::enhance:
            if (!cfg.scenario_label && cfg.packets_a.empty() && cfg.packets_b.empty())
                bad.push_back("enhance: needs packets_a/packets_b or scenario_label");
            break;
        case Mode::scan:
            if (!cfg.scan)
                bad.push_back("scan: missing scan specification");
            if (cfg.packets_b.empty())
                bad.push_back("scan: packets_b must be non-empty");
            break;
        case Mode::table:
            if (!cfg.table)
                bad.push_back("table: missing photon counts");
            break;
        case Mode::amplifier:
            if (!cfg.amplifier)
                bad.push_back("amplifier: missing amplifier specification");
            break;
        case Mode::verify:
            break;
    }

    if (!bad.empty()) {
        std::string msg = "invalid configuration:";
        for (const auto& b : bad)
            msg += "\n  " + b;
        throw std::invalid_argument(msg);
    }
    return cfg;
}

RunOutcome run(const ExperimentConfig& cfg, OutputFormat format) {
    switch (cfg.mode) {
        case Mode::enhance: return run_enhance(cfg, format);
        case Mode::scan: return run_scan(cfg, format);
        case Mode::table: return run_table(cfg, format);
        case Mode::verify: return run_verify(cfg);
        case Mode::amplifier: return run_amplifier(cfg, format);
    }
    throw std::logic_error("unreachable mode");
}

}  // namespace bunchlab
