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
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "bunchlab/interference.hpp"
#include "test_util.hpp"

using namespace bunchlab;

namespace {

InputConfiguration identical_config(std::size_t n, std::size_t m, double t) {
    const WavePacket p{0.0, 1.0, 0.0, 0.0};
    return {std::vector<WavePacket>(n, p), std::vector<WavePacket>(m, p), t};
}

double factorial(std::size_t n) {
    double f = 1.0;
    for (std::size_t i = 2; i <= n; ++i)
        f *= static_cast<double>(i);
    return f;
}

}  // namespace

TEST_CASE("N=2, M=1 identical packets at T=2/3: T^N R (1+m)(N+1)!") {
    const auto res = coincidence_probability(identical_config(2, 1, 2.0 / 3.0));
    const double expected = std::pow(2.0 / 3.0, 2) * (1.0 / 3.0) * 3.0 * 6.0;  // 8/3
    CHECK(res.p_quantum == doctest::Approx(expected).epsilon(1e-12));
    CHECK(res.enhancement == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("N=2, M=2 identical packets: enhancement 6 at any T") {
    for (double t : {0.2, 0.5, 0.8}) {
        const auto res = coincidence_probability(identical_config(2, 2, t));
        CHECK(res.enhancement == doctest::Approx(6.0).epsilon(1e-12));
    }
}

TEST_CASE("N=3, M=1 with one far spectator: enhancement 1+m, m=2") {
    InputConfiguration cfg;
    const WavePacket group{0.0, 1.0, 0.0, 0.0};
    cfg.port_a = {group, group, WavePacket{12.0, 1.0, 0.0, 0.0}};
    cfg.port_b = {group};
    cfg.transmissivity = 0.4;
    const auto res = coincidence_probability(cfg);
    CHECK(std::abs(res.enhancement - 3.0) < 1e-6);
}

TEST_CASE("pairwise far-separated packets: no enhancement") {
    InputConfiguration cfg;
    for (int i = 0; i < 3; ++i)
        cfg.port_a.push_back({14.0 * i, 1.0, 0.0, 0.0});
    cfg.port_b = {WavePacket{-20.0, 1.0, 0.0, 0.0}, WavePacket{60.0, 1.0, 0.0, 0.0}};
    cfg.transmissivity = 0.5;
    CHECK(std::abs(coincidence_probability(cfg).enhancement - 1.0) < 1e-9);
}

TEST_CASE("empty ports are degenerate but valid") {
    InputConfiguration cfg = identical_config(3, 0, 0.5);
    CHECK(coincidence_probability(cfg).enhancement == doctest::Approx(1.0));
    cfg = identical_config(0, 2, 0.5);
    CHECK(coincidence_probability(cfg).enhancement == doctest::Approx(1.0));
    CHECK_THROWS_AS(coincidence_probability(identical_config(0, 0, 0.5)),
                    std::invalid_argument);
}

TEST_CASE("enhancement reported at T in {0, 1}") {
    const auto res = coincidence_probability(identical_config(2, 2, 1.0));
    CHECK(res.p_quantum == 0.0);
    CHECK(res.enhancement == doctest::Approx(6.0));
}

TEST_CASE("v_overlap examples") {
    const double tau = 1.0;
    const WavePacket p{0.0, tau, 0.0, 0.0};
    CHECK(v_overlap(p, p) == doctest::Approx(1.0));
    CHECK(v_overlap(p, {2.0 * tau, tau, 0.0, 0.0}) == doctest::Approx(std::exp(-2.0)));
    CHECK(v_overlap(p, {12.0 * tau, tau, 0.0, 0.0}) < 1e-30);
}

TEST_CASE("enhancement_partial") {
    CHECK(enhancement_partial(7, 1.0) == doctest::Approx(8.0));
    CHECK(enhancement_partial(7, 0.0) == doctest::Approx(1.0));
    CHECK(enhancement_partial(4, std::exp(-2.0)) == doctest::Approx(1.0 + 4.0 * std::exp(-2.0)));
    CHECK_THROWS_AS(enhancement_partial(3, 1.5), std::domain_error);
    CHECK_THROWS_AS(enhancement_partial(3, -0.1), std::domain_error);
}

TEST_CASE("partial-overlap law: engine equals 1 + N*V") {
    // 4 identical a-packets, b-packet offset by 2 widths
    InputConfiguration cfg = identical_config(4, 0, 0.5);
    cfg.port_b = {WavePacket{2.0, 1.0, 0.0, 0.0}};
    const double v = v_overlap(cfg.port_b[0], cfg.port_a[0]);
    CHECK(std::abs(coincidence_probability(cfg).enhancement - enhancement_partial(4, v))
          < 1e-9);

    // and across random offsets, detunings and phases of the b-packet
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> offset(-3.0, 3.0);
    for (int c = 0; c < 50; ++c) {
        cfg.port_b[0] = {offset(rng), 1.0, offset(rng), offset(rng)};
        const double vv = v_overlap(cfg.port_b[0], cfg.port_a[0]);
        CHECK(std::abs(coincidence_probability(cfg).enhancement - (1.0 + 4.0 * vv)) < 1e-10);
    }
}

TEST_CASE("optimal transmissivity") {
    CHECK(optimal_transmissivity(3, 1) == doctest::Approx(0.75));
    CHECK(optimal_transmissivity(5, 5) == doctest::Approx(0.5));
    CHECK(optimal_transmissivity(3, 2) == doctest::Approx(0.6));
    CHECK_THROWS_AS(optimal_transmissivity(0, 0), std::domain_error);
}

TEST_CASE("p_quantum peaks at N/(N+M) on a T grid") {
    const std::size_t n = 3;
    const std::size_t m = 2;
    double best_t = -1.0;
    double best_p = -1.0;
    for (int i = 0; i <= 1000; ++i) {
        const double t = i * 1e-3;
        const double p = coincidence_probability(identical_config(n, m, t)).p_quantum;
        if (p > best_p) {
            best_p = p;
            best_t = t;
        }
    }
    CHECK(std::abs(best_t - optimal_transmissivity(n, m)) <= 2e-3);
}

TEST_CASE("oracle: Hong-Ou-Mandel bunching gives 2") {
    const auto res = oracle_permutation_sum(identical_config(1, 1, 0.5));
    CHECK(res.enhancement == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("oracle: two separated ab pairs give 4") {
    InputConfiguration cfg;
    const WavePacket g1{0.0, 1.0, 0.0, 0.0};
    const WavePacket g2{15.0, 1.0, 0.0, 0.0};
    cfg.port_a = {g1, g2};
    cfg.port_b = {g1, g2};
    cfg.transmissivity = 0.5;
    CHECK(std::abs(oracle_permutation_sum(cfg).enhancement - 4.0) < 1e-9);
}

TEST_CASE("oracle capacity") {
    CHECK_THROWS_AS(oracle_permutation_sum(identical_config(4, 3, 0.5)), std::length_error);
}

TEST_CASE("engine matches oracle on 200 random configurations") {
    std::mt19937_64 rng(2718);
    std::uniform_int_distribution<std::size_t> na(1, 4);
    std::uniform_real_distribution<double> trans(0.05, 0.95);
    int done = 0;
    double worst = 0.0;
    while (done < 200) {
        const std::size_t n = na(rng);
        const std::size_t m = 1 + rng() % (5 - n);
        InputConfiguration cfg;
        for (std::size_t i = 0; i < n; ++i)
            cfg.port_a.push_back(testutil::random_packet(rng));
        for (std::size_t i = 0; i < m; ++i)
            cfg.port_b.push_back(testutil::random_packet(rng));
        cfg.transmissivity = trans(rng);
        const auto engine = coincidence_probability(cfg);
        const auto oracle = oracle_permutation_sum(cfg);
        worst = std::max(worst, std::abs(engine.p_quantum - oracle.p_quantum)
                                    / std::max(1e-12, oracle.p_quantum));
        worst = std::max(worst,
                         std::abs(engine.enhancement - oracle.enhancement)
                             / std::max(1e-12, oracle.enhancement));
        ++done;
    }
    CHECK(worst < 1e-9);
}

TEST_CASE("exchange symmetry: packet order within a port is irrelevant") {
    std::mt19937_64 rng(55);
    InputConfiguration cfg;
    for (int i = 0; i < 3; ++i)
        cfg.port_a.push_back(testutil::random_packet(rng));
    cfg.port_b = {testutil::random_packet(rng), testutil::random_packet(rng)};
    cfg.transmissivity = 0.37;
    const auto base = coincidence_probability(cfg);
    for (int c = 0; c < 10; ++c) {
        std::shuffle(cfg.port_a.begin(), cfg.port_a.end(), rng);
        std::shuffle(cfg.port_b.begin(), cfg.port_b.end(), rng);
        const auto res = coincidence_probability(cfg);
        CHECK(std::abs(res.p_quantum - base.p_quantum) < 1e-10 * base.p_quantum);
    }
}

TEST_CASE("global time translation is irrelevant") {
    std::mt19937_64 rng(66);
    InputConfiguration cfg;
    cfg.port_a = {testutil::random_packet(rng), testutil::random_packet(rng)};
    cfg.port_b = {testutil::random_packet(rng)};
    cfg.transmissivity = 0.5;
    const auto base = coincidence_probability(cfg);
    for (double shift : {-5.0, 1.7, 42.0}) {
        InputConfiguration moved = cfg;
        for (auto& p : moved.port_a)
            p.center_time += shift;
        for (auto& p : moved.port_b)
            p.center_time += shift;
        const auto res = coincidence_probability(moved);
        CHECK(std::abs(res.enhancement - base.enhancement) < 1e-9);
    }
}

TEST_CASE("enhancement bounded by binomial(N+M, N)") {
    std::mt19937_64 rng(11);
    for (int c = 0; c < 100; ++c) {
        InputConfiguration cfg;
        const std::size_t n = 1 + rng() % 3;
        const std::size_t m = 1 + rng() % 3;
        for (std::size_t i = 0; i < n; ++i)
            cfg.port_a.push_back(testutil::random_packet(rng));
        for (std::size_t i = 0; i < m; ++i)
            cfg.port_b.push_back(testutil::random_packet(rng));
        cfg.transmissivity = 0.5;
        const double e = coincidence_probability(cfg).enhancement;
        const double bound = factorial(n + m) / (factorial(n) * factorial(m));
        CHECK(e >= 1.0 - 1e-9);
        CHECK(e <= bound + 1e-9);
    }
}

TEST_CASE("delay scan: Fig.2-style groups of 1, 2, 3 photons") {
    InputConfiguration cfg;
    const double sep = 20.0;
    cfg.port_a.push_back({0.0, 1.0, 0.0, 0.0});
    for (int i = 0; i < 2; ++i)
        cfg.port_a.push_back({sep, 1.0, 0.0, 0.0});
    for (int i = 0; i < 3; ++i)
        cfg.port_a.push_back({2.0 * sep, 1.0, 0.0, 0.0});
    cfg.port_b = {WavePacket{0.0, 1.0, 0.0, 0.0}};
    cfg.transmissivity = 6.0 / 7.0;

    std::vector<double> delays;
    for (double d = -30.0; d <= 70.0001; d += 1.0)
        delays.push_back(d);
    const auto scan = delay_scan(cfg, delays);

    auto normalized_at = [&](double delay) {
        for (const auto& pt : scan.points)
            if (std::abs(pt.delay - delay) < 1e-9)
                return pt.normalized;
        FAIL("missing scan point");
        return 0.0;
    };
    CHECK(std::abs(normalized_at(0.0) - 2.0) < 1e-4);
    CHECK(std::abs(normalized_at(20.0) - 3.0) < 1e-4);
    CHECK(std::abs(normalized_at(40.0) - 4.0) < 1e-4);
    CHECK(std::abs(normalized_at(-30.0) - 1.0) < 1e-6);
    CHECK(std::abs(normalized_at(70.0) - 1.0) < 1e-6);
}

TEST_CASE("delay scan profile equals 1 + 3 exp(-tau^2 / 2 w^2) for a triple group") {
    InputConfiguration cfg = identical_config(3, 1, 0.5);
    std::vector<double> delays;
    for (double d = -40.0; d <= 40.0001; d += 0.5)
        delays.push_back(d);
    const auto scan = delay_scan(cfg, delays);
    for (const auto& pt : scan.points) {
        const double expected = 1.0 + 3.0 * std::exp(-pt.delay * pt.delay / 2.0);
        CHECK(std::abs(pt.result.enhancement - expected) < 1e-9);
    }
    // value at tau = 2 widths
    const double expect2 = 1.0 + 3.0 * std::exp(-2.0);
    for (const auto& pt : scan.points)
        if (std::abs(pt.delay - 2.0) < 1e-9)
            CHECK(std::abs(pt.result.enhancement - expect2) < 1e-9);
}

TEST_CASE("delay scan rejects an empty delay list") {
    CHECK_THROWS_AS(delay_scan(identical_config(1, 1, 0.5), std::vector<double>{}),
                    std::invalid_argument);
}

TEST_CASE("configuration validation") {
    InputConfiguration cfg = identical_config(1, 1, 1.5);
    CHECK_THROWS_AS(validate(cfg), std::invalid_argument);
    cfg.transmissivity = 0.5;
    cfg.port_a[0].width = 0.0;
    CHECK_THROWS_AS(validate(cfg), std::invalid_argument);
    CHECK_THROWS_AS(coincidence_probability(identical_config(20, 15, 0.5)), std::length_error);
}
