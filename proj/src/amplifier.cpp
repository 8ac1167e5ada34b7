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
#include "bunchlab/amplifier.hpp"

#include <cmath>

namespace bunchlab {

AmplifierGain::AmplifierGain(cplx signal_gain, cplx idler_coupling)
    : big_g_(signal_gain), small_g_(idler_coupling) {
    const double commutator = std::norm(big_g_) - std::norm(small_g_);
    if (std::abs(commutator - 1.0) > 1e-12)
        throw std::invalid_argument("AmplifierGain: |G|^2 - |g|^2 must equal 1");
    if (std::abs(small_g_) > 0.1)
        throw std::invalid_argument("AmplifierGain: |g| must be <= 0.1 (small-gain regime)");
}

AmplifierGain AmplifierGain::from_small_gain(cplx idler_coupling) {
    return AmplifierGain(std::sqrt(1.0 + std::norm(idler_coupling)), idler_coupling);
}

double emission_probability(const AmplifierGain& gain, unsigned n_matched,
                            unsigned /*n_unmatched*/) {
    return (n_matched + 1.0) * std::norm(gain.idler_coupling());
}

std::vector<OutputAmplitude> output_amplitudes(const AmplifierGain& gain, unsigned n_matched,
                                               unsigned n_unmatched) {
    const cplx emitted = gain.idler_coupling() * std::sqrt(n_matched + 1.0);
    return {
        {n_matched, n_unmatched, 0, cplx{1.0, 0.0}},
        {n_matched + 1, n_unmatched, 1, emitted},
    };
}

}  // namespace bunchlab
