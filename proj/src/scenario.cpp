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
#include "bunchlab/scenario.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace bunchlab {

namespace {

// Canonical group order: descending by (n+m, n). Since n+m and n determine m,
// this is a total order on groups.
bool group_before(const ScenarioGroup& a, const ScenarioGroup& b) {
    return std::pair{a.n + a.m, a.n} > std::pair{b.n + b.m, b.n};
}

std::uint64_t binomial(unsigned n, unsigned k) {
    std::uint64_t result = 1;
    for (unsigned i = 1; i <= k; ++i)
        result = result * (n - k + i) / i;
    return result;
}

void enumerate_rec(unsigned rem_n, unsigned rem_m, ScenarioGroup max_group,
                   std::vector<ScenarioGroup>& stack,
                   std::vector<std::pair<DistinguishabilityScenario, std::uint64_t>>& out) {
    if (rem_n == 0 && rem_m == 0) {
        DistinguishabilityScenario s{stack};
        out.emplace_back(s, closed_form_enhancement(s));
        return;
    }
    // Candidate groups in descending canonical order, capped by the last
    // group placed so each scenario is generated exactly once.
    for (unsigned total = std::min(rem_n + rem_m, max_group.n + max_group.m); total >= 1;
         --total) {
        const unsigned n_hi = std::min({total, rem_n, total == max_group.n + max_group.m
                                                          ? max_group.n
                                                          : total});
        for (unsigned n = n_hi + 1; n-- > 0;) {
            const unsigned m = total - n;
            if (m > rem_m)
                continue;
            stack.push_back({n, m});
            enumerate_rec(rem_n - n, rem_m - m, {n, m}, stack, out);
            stack.pop_back();
        }
    }
}

constexpr PaperTableEntry kTable22[] = {
    {"2a2b", 6}, {"2a1b+1b", 3}, {"1ab+1ab", 4}, {"1ab+a+b", 2}};

constexpr PaperTableEntry kTable32[] = {
    {"3a2b", 10},   {"2a2b+a", 6},   {"3a1b+b", 4}, {"2a1b+ab", 6},
    {"1a2b+2a", 3}, {"2a1b+a+b", 3}, {"ab+a+ab", 4}, {"ab+a+a+b", 2}};

constexpr PaperTableEntry kTable33[] = {
    {"3a3b", 20},      {"3a2b+b", 10},     {"3a1b+2b", 4},    {"2a2b+ab", 12},
    {"2a2b+a+b", 6},   {"2a1b+1a2b", 9},   {"2a1b+1ab+b", 6}, {"2a1b+a+b+b", 3},
    {"ab+ab+ab", 8},   {"ab+ab+a+b", 4},   {"ab+b+a+a+b", 2}};

}  // namespace

DistinguishabilityScenario DistinguishabilityScenario::make(std::vector<ScenarioGroup> groups) {
    for (const auto& g : groups)
        if (g.n + g.m == 0)
            throw std::invalid_argument("scenario: groups must contain at least one photon");
    std::sort(groups.begin(), groups.end(), group_before);
    return DistinguishabilityScenario{std::move(groups)};
}

unsigned DistinguishabilityScenario::total_a() const {
    return std::accumulate(groups.begin(), groups.end(), 0u,
                           [](unsigned acc, const ScenarioGroup& g) { return acc + g.n; });
}

unsigned DistinguishabilityScenario::total_b() const {
    return std::accumulate(groups.begin(), groups.end(), 0u,
                           [](unsigned acc, const ScenarioGroup& g) { return acc + g.m; });
}

std::uint64_t closed_form_enhancement(const DistinguishabilityScenario& s) {
    std::uint64_t factor = 1;
    for (const auto& g : s.groups)
        factor *= binomial(g.n + g.m, g.n);
    return factor;
}

std::vector<std::pair<DistinguishabilityScenario, std::uint64_t>>
enumerate_scenarios(unsigned n, unsigned m) {
    if (n > kMaxScenarioPhotons || m > kMaxScenarioPhotons)
        throw std::length_error("enumerate_scenarios: photon counts capped at "
                                + std::to_string(kMaxScenarioPhotons));
    std::vector<std::pair<DistinguishabilityScenario, std::uint64_t>> out;
    std::vector<ScenarioGroup> stack;
    if (n + m == 0)
        return out;
    enumerate_rec(n, m, {n, m}, stack, out);
    return out;
}

DistinguishabilityScenario parse_label(std::string_view text) {
    std::vector<ScenarioGroup> groups;
    std::size_t pos = 0;

    auto fail = [&](const std::string& what) {
        std::ostringstream msg;
        msg << "label parse error at position " << pos << ": " << what;
        throw std::invalid_argument(msg.str());
    };

    auto read_count = [&](bool& present) -> unsigned {
        present = false;
        unsigned value = 0;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
            present = true;
            value = value * 10 + static_cast<unsigned>(text[pos] - '0');
            if (value > 1000)
                fail("count too large");
            ++pos;
        }
        return value;
    };

    while (true) {
        const std::size_t term_start = pos;
        unsigned n = 0;
        unsigned m = 0;

        bool have_count = false;
        unsigned count = read_count(have_count);
        if (pos < text.size() && text[pos] == 'a') {
            n = have_count ? count : 1;
            ++pos;
            count = read_count(have_count);
            if (pos < text.size() && text[pos] == 'b') {
                m = have_count ? count : 1;
                ++pos;
            } else if (have_count) {
                fail("expected 'b' after count");
            }
        } else if (pos < text.size() && text[pos] == 'b') {
            m = have_count ? count : 1;
            ++pos;
        } else {
            fail(pos == term_start && have_count ? "expected 'a' or 'b' after count"
                                                 : "expected a term");
        }

        if (n + m == 0) {
            pos = term_start;
            fail("term denotes an empty group");
        }
        groups.push_back({n, m});

        if (pos == text.size())
            break;
        if (text[pos] != '+')
            fail("expected '+' between terms");
        ++pos;
    }

    return DistinguishabilityScenario::make(std::move(groups));
}

std::string format_label(const DistinguishabilityScenario& s) {
    std::ostringstream out;
    bool first = true;
    for (const auto& g : s.groups) {
        if (!first)
            out << '+';
        first = false;
        const bool explicit_counts = g.n > 1 || g.m > 1;
        if (g.n >= 1) {
            if (explicit_counts)
                out << g.n;
            out << 'a';
        }
        if (g.m >= 1) {
            if (explicit_counts)
                out << g.m;
            out << 'b';
        }
    }
    return out.str();
}

InputConfiguration scenario_to_packets(const DistinguishabilityScenario& s, double width,
                                       double group_separation) {
    if (!(width > 0.0))
        throw std::invalid_argument("scenario_to_packets: width must be > 0");
    if (group_separation < 8.0 * width)
        throw std::invalid_argument(
            "scenario_to_packets: group separation below the 8-width orthogonality floor");

    InputConfiguration cfg;
    double center = 0.0;
    for (const auto& g : s.groups) {
        const WavePacket p{center, width, 0.0, 0.0};
        cfg.port_a.insert(cfg.port_a.end(), g.n, p);
        cfg.port_b.insert(cfg.port_b.end(), g.m, p);
        center += group_separation;
    }
    return cfg;
}

std::span<const PaperTableEntry> paper_table(unsigned n, unsigned m) {
    if (n == 2 && m == 2)
        return kTable22;
    if (n == 3 && m == 2)
        return kTable32;
    if (n == 3 && m == 3)
        return kTable33;
    return {};
}

}  // namespace bunchlab
