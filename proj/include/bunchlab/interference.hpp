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

#include <span>
#include <vector>

#include "bunchlab/wave_packet.hpp"

namespace bunchlab {

/// Photons entering the two sides of a lossless beam splitter.
/// Reflectivity is implicitly R = 1 - T.
struct InputConfiguration {
    std::vector<WavePacket> port_a;  ///< N packets
    std::vector<WavePacket> port_b;  ///< M packets
    double transmissivity = 0.5;     ///< intensity transmissivity T in [0, 1]
};

/// Throws std::invalid_argument on invalid packets, T outside [0,1],
/// or an empty configuration (N + M must be >= 1).
void validate(const InputConfiguration& cfg);

/// Bunching coincidence probability of finding all N+M photons in one
/// output port, with the classical (fully distinguishable) baseline.
///
/// Both probabilities carry the (N+M)! factor of the time-ordered
/// multi-detector coincidence integral, so the fully indistinguishable
/// N-and-1 case evaluates to T^N R (1+N) (N+1)! verbatim.
struct CoincidenceResult {
    double p_quantum = 0.0;
    double p_classical = 0.0;
    double enhancement = 1.0;  ///< p_quantum / p_classical; independent of T
};

/// Photon-count capacity of the exact permanent kernel.
inline constexpr std::size_t kMaxPhotons = 30;
/// Capacity of the factorial-cost permutation-sum oracle.
inline constexpr std::size_t kMaxOraclePhotons = 6;

/// Computes p_quantum = (N+M)! T^N R^M perm(G_all) / (perm(G_a) perm(G_b))
/// and p_classical = (N+M)! T^N R^M, where G_* are Gram matrices of the
/// combined and per-port packet lists. The enhancement is the permanent
/// ratio and stays defined even at T in {0, 1}.
CoincidenceResult coincidence_probability(const InputConfiguration& cfg);

/// Degree of distinguishability V = |overlap(single, group)|^2 in [0, 1]
/// between the port-b photon and an indistinguishable port-a group.
double v_overlap(const WavePacket& single, const WavePacket& group);

/// Closed-form enhancement 1 + N*V for N indistinguishable a-photons
/// partially overlapping the single b-photon. Throws std::domain_error
/// for v outside [0, 1].
double enhancement_partial(std::size_t n, double v);

struct DelayScanPoint {
    double delay = 0.0;
    CoincidenceResult result;
    double normalized = 0.0;  ///< p_quantum over the large-|delay| baseline
};

struct DelayScanResult {
    std::vector<DelayScanPoint> points;
    double baseline = 0.0;  ///< median p_quantum of the 10% outermost points
};

/// Shifts every port-b packet by each delay and evaluates the coincidence
/// probability. Scan points are evaluated in parallel.
/// Throws std::invalid_argument on an empty delay list.
DelayScanResult delay_scan(const InputConfiguration& cfg, std::span<const double> delays);

/// Argmax of T^N (1-T)^M over [0, 1]: T = N / (N + M).
/// Throws std::domain_error when N = M = 0.
double optimal_transmissivity(std::size_t n, std::size_t m);

/// Independent oracle: evaluates the coincidence integral as the literal
/// double sum over pairs of photon-to-detection-slot assignments, each term
/// a product of pairwise overlaps. Shares no code with the permanent kernel.
/// Throws std::length_error when N + M > kMaxOraclePhotons.
CoincidenceResult oracle_permutation_sum(const InputConfiguration& cfg);

}  // namespace bunchlab
