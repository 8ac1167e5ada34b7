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

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bunchlab/interference.hpp"

namespace bunchlab {

/// One temporal class: n_i a-photons indistinguishable from m_i b-photons,
/// distinguishable from every other group.
struct ScenarioGroup {
    unsigned n = 0;
    unsigned m = 0;
    friend auto operator<=>(const ScenarioGroup&, const ScenarioGroup&) = default;
};

/// A multiset of groups partitioning the N a-photons and M b-photons into
/// mutually orthogonal temporal classes. Canonical form: groups sorted
/// descending by (n+m, n), no empty groups.
struct DistinguishabilityScenario {
    std::vector<ScenarioGroup> groups;

    /// Canonicalizes and validates; throws std::invalid_argument on a (0,0) group.
    static DistinguishabilityScenario make(std::vector<ScenarioGroup> groups);

    unsigned total_a() const;
    unsigned total_b() const;

    friend auto operator<=>(const DistinguishabilityScenario&,
                            const DistinguishabilityScenario&) = default;
};

/// Enhancement factor of a scenario: product over groups of
/// binomial(n_i + m_i, n_i). One-sided groups contribute 1.
std::uint64_t closed_form_enhancement(const DistinguishabilityScenario& s);

inline constexpr unsigned kMaxScenarioPhotons = 8;

/// All canonical scenarios for N a-photons and M b-photons, each with its
/// closed-form factor, in a deterministic order (largest groups first).
/// Throws std::length_error when N or M exceeds kMaxScenarioPhotons.
std::vector<std::pair<DistinguishabilityScenario, std::uint64_t>>
enumerate_scenarios(unsigned n, unsigned m);

/// Parses labels like "2a1b+ab+b": terms joined by '+', each term
/// [count]a[count]b with an omitted count meaning 1 and an omitted letter
/// meaning 0. Throws std::invalid_argument with the offending position.
DistinguishabilityScenario parse_label(std::string_view text);

/// Canonical label: counts are written explicitly whenever any count in the
/// term exceeds 1 ("2a1b"), and omitted otherwise ("ab", "a").
std::string format_label(const DistinguishabilityScenario& s);

/// Realizes a scenario as identical packets per group, groups spaced by
/// group_separation (must be >= 8 * width for orthogonality).
InputConfiguration scenario_to_packets(const DistinguishabilityScenario& s, double width,
                                       double group_separation);

struct PaperTableEntry {
    const char* label;
    std::uint64_t factor;
};

/// Published enhancement-factor table for (n, m) photons per side;
/// empty span when no table exists for that pair.
std::span<const PaperTableEntry> paper_table(unsigned n, unsigned m);

}  // namespace bunchlab
