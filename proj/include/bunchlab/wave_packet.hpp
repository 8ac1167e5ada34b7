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

#include "bunchlab/matrix.hpp"

namespace bunchlab {

/// Normalized Gaussian single-photon temporal mode
///   g(t) = (pi tau^2)^(-1/4) exp(-(t-t0)^2 / (2 tau^2)) exp(-i(dw*t - phi))
/// with tau the 1/e half-width of the amplitude. Only differences of
/// detunings and phases between packets are observable; the common carrier
/// frequency is factored out.
struct WavePacket {
    double center_time = 0.0;  ///< t0, seconds
    double width = 1.0;        ///< tau, seconds, > 0
    double detuning = 0.0;     ///< dw, rad/s, offset from the common carrier
    double phase = 0.0;        ///< phi, rad
};

/// Throws std::invalid_argument if the packet is unphysical (width <= 0).
void validate(const WavePacket& p);

/// Pairwise overlap amplitude v = integral g_p*(t) g_q(t) dt, in closed form.
/// |v| <= 1, overlap(p, p) == 1, overlap(p, q) == conj(overlap(q, p)).
cplx overlap(const WavePacket& p, const WavePacket& q);

/// Two packets with |overlap| below this are treated as fully distinguishable.
inline constexpr double kOrthogonalityThreshold = 1e-9;

/// Hermitian matrix of pairwise packet overlaps with unit diagonal.
/// Carries all temporal distinguishability information of a packet list.
class GramMatrix {
public:
    explicit GramMatrix(ComplexMatrix m);

    std::size_t dim() const { return m_.dim(); }
    const cplx& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
    const ComplexMatrix& matrix() const { return m_; }

    /// Checks Hermiticity, unit diagonal, |entries| <= 1 and positive
    /// semidefiniteness; throws std::runtime_error on violation.
    void validate() const;

private:
    ComplexMatrix m_;
};

/// Assembles the Gram matrix of an ordered packet list.
/// Throws std::invalid_argument on an empty list.
GramMatrix gram(std::span<const WavePacket> packets);

}  // namespace bunchlab
