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
#include "bunchlab/interference.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "bunchlab/permanent.hpp"

namespace bunchlab {

namespace {

double factorial(std::size_t n) {
    double f = 1.0;
    for (std::size_t i = 2; i <= n; ++i)
        f *= static_cast<double>(i);
    return f;
}

double real_permanent(std::span<const WavePacket> packets) {
    if (packets.empty())
        return 1.0;
    return std::real(permanent_fast(gram(packets).matrix()));
}

// Literal sum over all permutations of a packet list's overlap products;
// deliberately does not touch the permanent module.
double permutation_norm(std::span<const WavePacket> packets) {
    const std::size_t n = packets.size();
    if (n == 0)
        return 1.0;
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    cplx sum{0.0, 0.0};
    do {
        cplx prod{1.0, 0.0};
        for (std::size_t i = 0; i < n; ++i)
            prod *= overlap(packets[i], packets[perm[i]]);
        sum += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::real(sum);
}

}  // namespace

void validate(const InputConfiguration& cfg) {
    if (cfg.port_a.empty() && cfg.port_b.empty())
        throw std::invalid_argument("configuration: N + M must be >= 1");
    if (!(cfg.transmissivity >= 0.0 && cfg.transmissivity <= 1.0))
        throw std::invalid_argument("configuration: transmissivity must be in [0, 1]");
    for (const auto& p : cfg.port_a)
        validate(p);
    for (const auto& p : cfg.port_b)
        validate(p);
}

CoincidenceResult coincidence_probability(const InputConfiguration& cfg) {
    validate(cfg);
    const std::size_t n = cfg.port_a.size();
    const std::size_t m = cfg.port_b.size();
    if (n + m > kMaxPhotons)
        throw std::length_error("coincidence_probability: N + M exceeds capacity "
                                + std::to_string(kMaxPhotons));

    double ratio = 1.0;
    if (n > 0 && m > 0) {
        std::vector<WavePacket> all(cfg.port_a);
        all.insert(all.end(), cfg.port_b.begin(), cfg.port_b.end());
        const double perm_all = real_permanent(all);
        const double perm_a = real_permanent(cfg.port_a);
        const double perm_b = real_permanent(cfg.port_b);
        if (perm_a * perm_b <= 1e-300)
            throw std::runtime_error(
                "coincidence_probability: degenerate normalization perm(G_a)*perm(G_b) <= 0");
        ratio = perm_all / (perm_a * perm_b);
    }

    const double t = cfg.transmissivity;
    const double r = 1.0 - t;
    const double weight = factorial(n + m) * std::pow(t, static_cast<double>(n))
                          * std::pow(r, static_cast<double>(m));

    CoincidenceResult res;
    res.p_classical = weight;
    res.p_quantum = weight * ratio;
    res.enhancement = ratio;
    return res;
}

double v_overlap(const WavePacket& single, const WavePacket& group) {
    const double mag = std::abs(overlap(single, group));
    return std::min(mag * mag, 1.0);
}

double enhancement_partial(std::size_t n, double v) {
    if (v < -1e-12 || v > 1.0 + 1e-12)
        throw std::domain_error("enhancement_partial: v must lie in [0, 1], got "
                                + std::to_string(v));
    v = std::clamp(v, 0.0, 1.0);
    return 1.0 + static_cast<double>(n) * v;
}

DelayScanResult delay_scan(const InputConfiguration& cfg, std::span<const double> delays) {
    validate(cfg);
    if (delays.empty())
        throw std::invalid_argument("delay_scan: delay list must be non-empty");

    DelayScanResult scan;
    scan.points.resize(delays.size());

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(delays.size()); ++i) {
        InputConfiguration shifted = cfg;
        for (auto& p : shifted.port_b)
            p.center_time += delays[static_cast<std::size_t>(i)];
        auto& point = scan.points[static_cast<std::size_t>(i)];
        point.delay = delays[static_cast<std::size_t>(i)];
        point.result = coincidence_probability(shifted);
    }

    // Baseline from the outermost 10% of scan points (5% from each end of
    // the delay axis), mirroring how a measured scan would be normalized.
    std::vector<std::size_t> order(scan.points.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return scan.points[a].delay < scan.points[b].delay;
    });
    const std::size_t edge = std::max<std::size_t>(1, (order.size() + 19) / 20);
    std::vector<double> tail;
    for (std::size_t i = 0; i < std::min(edge, order.size()); ++i) {
        tail.push_back(scan.points[order[i]].result.p_quantum);
        tail.push_back(scan.points[order[order.size() - 1 - i]].result.p_quantum);
    }
    std::sort(tail.begin(), tail.end());
    scan.baseline = tail.size() % 2 == 1
                        ? tail[tail.size() / 2]
                        : 0.5 * (tail[tail.size() / 2 - 1] + tail[tail.size() / 2]);

    for (auto& point : scan.points)
        point.normalized = scan.baseline > 0.0 ? point.result.p_quantum / scan.baseline : 0.0;
    return scan;
}

double optimal_transmissivity(std::size_t n, std::size_t m) {
    if (n + m == 0)
        throw std::domain_error("optimal_transmissivity: N + M must be >= 1");
    return static_cast<double>(n) / static_cast<double>(n + m);
}

CoincidenceResult oracle_permutation_sum(const InputConfiguration& cfg) {
    validate(cfg);
    const std::size_t n = cfg.port_a.size();
    const std::size_t m = cfg.port_b.size();
    const std::size_t k = n + m;
    if (k > kMaxOraclePhotons)
        throw std::length_error("oracle_permutation_sum: N + M exceeds capacity "
                                + std::to_string(kMaxOraclePhotons));

    std::vector<WavePacket> photons(cfg.port_a);
    photons.insert(photons.end(), cfg.port_b.begin(), cfg.port_b.end());

    ComplexMatrix g(k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            g(i, j) = overlap(photons[i], photons[j]);

    // Double sum over pairs of slot-to-photon assignments: each detection
    // slot contributes one overlap between the photons the two assignments
    // place there.
    std::vector<std::size_t> left(k), right(k);
    std::iota(left.begin(), left.end(), std::size_t{0});
    cplx total{0.0, 0.0};
    do {
        std::iota(right.begin(), right.end(), std::size_t{0});
        do {
            cplx prod{1.0, 0.0};
            for (std::size_t s = 0; s < k; ++s)
                prod *= g(left[s], right[s]);
            total += prod;
        } while (std::next_permutation(right.begin(), right.end()));
    } while (std::next_permutation(left.begin(), left.end()));

    const double norm = permutation_norm(cfg.port_a) * permutation_norm(cfg.port_b);
    const double t = cfg.transmissivity;
    const double r = 1.0 - t;
    const double split = std::pow(t, static_cast<double>(n)) * std::pow(r, static_cast<double>(m));

    CoincidenceResult res;
    res.p_quantum = split * std::real(total) / norm;
    res.p_classical = factorial(k) * split;
    res.enhancement = std::real(total) / (norm * factorial(k));
    return res;
}

}  // namespace bunchlab
