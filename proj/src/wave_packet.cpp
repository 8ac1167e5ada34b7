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
#include "bunchlab/wave_packet.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <sstream>

namespace bunchlab {

void validate(const WavePacket& p) {
    if (!(p.width > 0.0)) {
        std::ostringstream msg;
        msg << "invalid packet: width must be > 0, got " << p.width;
        throw std::invalid_argument(msg.str());
    }
}

cplx overlap(const WavePacket& p, const WavePacket& q) {
    validate(p);
    validate(q);

    const double s1 = p.width * p.width;
    const double s2 = q.width * q.width;

    // Gaussian integral: integral exp(-a t^2 + b t + c) dt = sqrt(pi/a) exp(b^2/4a + c).
    // The packet-normalization prefactors fold into sqrt(2 tau_p tau_q / (tau_p^2 + tau_q^2)).
    const double a = (s1 + s2) / (2.0 * s1 * s2);
    const cplx b(p.center_time / s1 + q.center_time / s2, p.detuning - q.detuning);
    const cplx c(-p.center_time * p.center_time / (2.0 * s1)
                     - q.center_time * q.center_time / (2.0 * s2),
                 q.phase - p.phase);
    const double prefactor = std::sqrt(2.0 * p.width * q.width / (s1 + s2));

    return prefactor * std::exp(b * b / (4.0 * a) + c);
}

GramMatrix::GramMatrix(ComplexMatrix m) : m_(std::move(m)) {}

void GramMatrix::validate() const {
    const std::size_t n = m_.dim();
    for (std::size_t i = 0; i < n; ++i) {
        if (std::abs(m_(i, i) - 1.0) > 1e-12)
            throw std::runtime_error("GramMatrix: diagonal entry differs from 1");
        for (std::size_t j = 0; j < n; ++j) {
            if (std::abs(m_(i, j) - std::conj(m_(j, i))) > 1e-12)
                throw std::runtime_error("GramMatrix: matrix is not Hermitian");
            if (std::abs(m_(i, j)) > 1.0 + 1e-12)
                throw std::runtime_error("GramMatrix: off-diagonal magnitude exceeds 1");
        }
    }

    Eigen::MatrixXcd em(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            em(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m_(i, j);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(em, Eigen::EigenvaluesOnly);
    if (solver.eigenvalues().minCoeff() < -1e-10)
        throw std::runtime_error("GramMatrix: matrix is not positive semidefinite");
}

GramMatrix gram(std::span<const WavePacket> packets) {
    if (packets.empty())
        throw std::invalid_argument("gram: packet list must be non-empty");

    const std::size_t n = packets.size();
    ComplexMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1.0;
        for (std::size_t j = i + 1; j < n; ++j) {
            const cplx v = overlap(packets[i], packets[j]);
            m(i, j) = v;
            m(j, i) = std::conj(v);
        }
    }
    return GramMatrix(std::move(m));
}

}  // namespace bunchlab
