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
#include "bunchlab/permanent.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace bunchlab {

namespace {

struct Accumulator {
    cplx sum{0.0, 0.0};
    cplx comp{0.0, 0.0};  // Kahan carry
    bool compensated = false;

    void add(cplx v) {
        if (!compensated) {
            sum += v;
            return;
        }
        const cplx y = v - comp;
        const cplx t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
};

// Ryser over subset ranks [lo, hi) of the Gray-code sequence. Row sums are
// seeded from the Gray code of rank `lo` and updated incrementally afterwards.
cplx ryser_range(const ComplexMatrix& m, std::uint64_t lo, std::uint64_t hi, bool compensated) {
    const std::size_t n = m.dim();
    std::vector<cplx> rowsum(n, cplx{0.0, 0.0});

    std::uint64_t gray = lo ^ (lo >> 1);
    for (std::size_t j = 0; j < n; ++j) {
        if (gray & (std::uint64_t{1} << j))
            for (std::size_t i = 0; i < n; ++i)
                rowsum[i] += m(i, j);
    }

    Accumulator acc;
    acc.compensated = compensated;
    for (std::uint64_t k = lo; k < hi; ++k) {
        const std::uint64_t g = k ^ (k >> 1);
        if (k != lo) {
            const std::uint64_t diff = g ^ gray;
            const auto j = static_cast<std::size_t>(std::countr_zero(diff));
            if (g & diff)
                for (std::size_t i = 0; i < n; ++i)
                    rowsum[i] += m(i, j);
            else
                for (std::size_t i = 0; i < n; ++i)
                    rowsum[i] -= m(i, j);
            gray = g;
        }
        cplx prod{1.0, 0.0};
        for (std::size_t i = 0; i < n; ++i)
            prod *= rowsum[i];
        acc.add((std::popcount(g) & 1) ? -prod : prod);
    }
    return acc.sum;
}

void check_dim(const ComplexMatrix& m, std::size_t bound, const char* what) {
    if (m.dim() > bound)
        throw std::length_error(std::string(what) + ": dim " + std::to_string(m.dim())
                                + " exceeds bound " + std::to_string(bound));
}

}  // namespace

cplx permanent_serial(const ComplexMatrix& m, PermanentOptions opts) {
    check_dim(m, kMaxPermanentDim, "permanent_serial");
    const std::size_t n = m.dim();
    const cplx sum = ryser_range(m, 1, std::uint64_t{1} << n, opts.compensated);
    return (n & 1) ? -sum : sum;
}

cplx permanent_parallel(const ComplexMatrix& m, PermanentOptions opts) {
    check_dim(m, kMaxPermanentDim, "permanent_parallel");
    const std::size_t n = m.dim();
    const std::uint64_t total = std::uint64_t{1} << n;

#ifdef _OPENMP
    const int nthreads = omp_get_max_threads();
#else
    const int nthreads = 1;
#endif
    const int nchunks = std::max(1, nthreads);
    std::vector<cplx> partial(static_cast<std::size_t>(nchunks), cplx{0.0, 0.0});

#ifdef _OPENMP
#pragma omp parallel for schedule(static, 1)
#endif
    for (int c = 0; c < nchunks; ++c) {
        const std::uint64_t span = (total - 1) / static_cast<std::uint64_t>(nchunks) + 1;
        const std::uint64_t lo = 1 + static_cast<std::uint64_t>(c) * span;
        const std::uint64_t hi = std::min(total, lo + span);
        if (lo < hi)
            partial[static_cast<std::size_t>(c)] = ryser_range(m, lo, hi, opts.compensated);
    }

    // Combine in chunk order so the result does not depend on scheduling.
    cplx sum{0.0, 0.0};
    for (const cplx& p : partial)
        sum += p;
    return (n & 1) ? -sum : sum;
}

cplx permanent_fast(const ComplexMatrix& m, PermanentOptions opts) {
    check_dim(m, kMaxPermanentDim, "permanent_fast");
    return m.dim() >= 16 ? permanent_parallel(m, opts) : permanent_serial(m, opts);
}

cplx permanent_naive(const ComplexMatrix& m) {
    check_dim(m, kMaxNaiveDim, "permanent_naive");
    const std::size_t n = m.dim();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});

    cplx sum{0.0, 0.0};
    do {
        cplx prod{1.0, 0.0};
        for (std::size_t i = 0; i < n; ++i)
            prod *= m(i, perm[i]);
        sum += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return sum;
}

}  // namespace bunchlab
