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

#include "bunchlab/matrix.hpp"

namespace bunchlab {

/// Largest dimension accepted by the O(2^n n) permanent routines.
inline constexpr std::size_t kMaxPermanentDim = 30;
/// Largest dimension accepted by the factorial-time oracle.
inline constexpr std::size_t kMaxNaiveDim = 9;

struct PermanentOptions {
    /// Kahan-compensated accumulation of the 2^n-term alternating sum.
    bool compensated = false;
};

/// Serial Ryser inclusion-exclusion permanent with Gray-code row-sum updates.
/// Reference path kept alongside the OpenMP kernel for testing.
cplx permanent_serial(const ComplexMatrix& m, PermanentOptions opts = {});

/// OpenMP-parallel Ryser permanent; subset ranges are split across threads,
/// each chunk seeding its row sums from the Gray code of its first rank.
/// Deterministic within 1e-10 of the serial path for any thread count.
cplx permanent_parallel(const ComplexMatrix& m, PermanentOptions opts = {});

/// Dispatches to the serial or parallel kernel by problem size.
/// Throws std::length_error when dim > kMaxPermanentDim.
cplx permanent_fast(const ComplexMatrix& m, PermanentOptions opts = {});

/// Literal sum over all dim! permutations; the correctness oracle.
/// Throws std::length_error when dim > kMaxNaiveDim.
cplx permanent_naive(const ComplexMatrix& m);

}  // namespace bunchlab
