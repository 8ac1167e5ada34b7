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

#include <vector>

#include "bunchlab/matrix.hpp"

namespace bunchlab {

/// Phase-insensitive amplifier in the small-gain regime: signal gain G and
/// idler coupling g with |G|^2 - |g|^2 = 1 and |g| <= 0.1.
class AmplifierGain {
public:
    AmplifierGain(cplx signal_gain, cplx idler_coupling);

    /// Builds a gain with real G = sqrt(1 + |g|^2) from the coupling alone.
    static AmplifierGain from_small_gain(cplx idler_coupling);

    cplx signal_gain() const { return big_g_; }
    cplx idler_coupling() const { return small_g_; }

private:
    cplx big_g_;
    cplx small_g_;
};

/// Lowest-order emission probability (m+1)|g|^2 when m input photons share
/// the amplifier's signal mode; independent of the unmatched photon count.
double emission_probability(const AmplifierGain& gain, unsigned n_matched, unsigned n_unmatched);

/// One term of the first-order output expansion, labelled by the Fock
/// occupation of (signal, spectator, idler) modes.
struct OutputAmplitude {
    unsigned n_signal = 0;
    unsigned n_spectator = 0;
    unsigned n_idler = 0;
    cplx amplitude;
};

/// First-order expansion of the output state for input |m, N-m, 0>:
/// amplitude 1 on the unamplified term and g*sqrt(m+1) on the emitted term.
std::vector<OutputAmplitude> output_amplitudes(const AmplifierGain& gain, unsigned n_matched,
                                               unsigned n_unmatched);

}  // namespace bunchlab
