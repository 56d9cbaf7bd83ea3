// Copyright 2026 The bp-lab developers.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bplab/state_vector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "bplab/errors.hpp"

namespace bplab {

StateVector::StateVector(std::size_t n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw CapacityError("qubit count " + std::to_string(n_qubits) +
                            " outside supported range [1, " +
                            std::to_string(kMaxQubits) + "]");
    }
    amp_.assign(std::size_t{1} << n_qubits, {0.0, 0.0});
    amp_[0] = {1.0, 0.0};
}

void StateVector::reset() {
    std::fill(amp_.begin(), amp_.end(), std::complex<double>{0.0, 0.0});
    amp_[0] = {1.0, 0.0};
}

std::size_t StateVector::bit_mask(std::size_t qubit) const {
    return std::size_t{1} << (n_qubits_ - 1 - qubit);
}

void StateVector::check_qubit(std::size_t qubit) const {
    if (qubit >= n_qubits_) {
        throw ConfigError("qubit index " + std::to_string(qubit) +
                          " out of range for " + std::to_string(n_qubits_) +
                          " qubits");
    }
}

void StateVector::apply_rx(std::size_t qubit, double theta) {
    check_qubit(qubit);
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    const std::size_t stride = bit_mask(qubit);
    const std::size_t dim = amp_.size();
    // [a'; b'] = [c, -i s; -i s, c] [a; b], written out over re/im parts.
    for (std::size_t base = 0; base < dim; base += 2 * stride) {
        for (std::size_t i = base; i < base + stride; ++i) {
            const std::complex<double> a = amp_[i];
            const std::complex<double> b = amp_[i + stride];
            amp_[i] = {c * a.real() + s * b.imag(), c * a.imag() - s * b.real()};
            amp_[i + stride] = {s * a.imag() + c * b.real(),
                                -s * a.real() + c * b.imag()};
        }
    }
}

void StateVector::apply_ry(std::size_t qubit, double theta) {
    check_qubit(qubit);
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    const std::size_t stride = bit_mask(qubit);
    const std::size_t dim = amp_.size();
    // [a'; b'] = [c, -s; s, c] [a; b]; all-real coefficients.
    for (std::size_t base = 0; base < dim; base += 2 * stride) {
        for (std::size_t i = base; i < base + stride; ++i) {
            const std::complex<double> a = amp_[i];
            const std::complex<double> b = amp_[i + stride];
            amp_[i] = {c * a.real() - s * b.real(), c * a.imag() - s * b.imag()};
            amp_[i + stride] = {s * a.real() + c * b.real(),
                                s * a.imag() + c * b.imag()};
        }
    }
}

void StateVector::apply_rz(std::size_t qubit, double theta) {
    check_qubit(qubit);
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    const std::size_t stride = bit_mask(qubit);
    const std::size_t dim = amp_.size();
    // a' = (c - i s) a, b' = (c + i s) b.
    for (std::size_t base = 0; base < dim; base += 2 * stride) {
        for (std::size_t i = base; i < base + stride; ++i) {
            const std::complex<double> a = amp_[i];
            const std::complex<double> b = amp_[i + stride];
            amp_[i] = {c * a.real() + s * a.imag(), c * a.imag() - s * a.real()};
            amp_[i + stride] = {c * b.real() - s * b.imag(),
                                c * b.imag() + s * b.real()};
        }
    }
}

void StateVector::apply_cz(std::size_t control, std::size_t target) {
    check_qubit(control);
    check_qubit(target);
    if (control == target) {
        throw ConfigError("CZ control and target coincide at qubit " +
                          std::to_string(control));
    }
    const std::size_t both = bit_mask(control) | bit_mask(target);
    const std::size_t dim = amp_.size();
    for (std::size_t i = 0; i < dim; ++i) {
        if ((i & both) == both) {
            amp_[i] = -amp_[i];
        }
    }
}

double StateVector::expval_pauli_z(const std::vector<std::size_t>& qubits) const {
    if (qubits.empty()) {
        throw ConfigError("expval_pauli_z requires a non-empty qubit set");
    }
    std::size_t mask = 0;
    for (std::size_t q : qubits) {
        check_qubit(q);
        mask |= bit_mask(q);
    }
    double value = 0.0;
    const std::size_t dim = amp_.size();
    for (std::size_t i = 0; i < dim; ++i) {
        const double p = amp_[i].real() * amp_[i].real() +
                         amp_[i].imag() * amp_[i].imag();
        value += (std::popcount(i & mask) & 1U) ? -p : p;
    }
    return value;
}

std::vector<double> StateVector::probabilities() const {
    std::vector<double> probs(amp_.size());
    for (std::size_t i = 0; i < amp_.size(); ++i) {
        probs[i] = amp_[i].real() * amp_[i].real() +
                   amp_[i].imag() * amp_[i].imag();
    }
    return probs;
}

double StateVector::return_probability() const {
    return amp_[0].real() * amp_[0].real() + amp_[0].imag() * amp_[0].imag();
}

double StateVector::sample_expval_z(const std::vector<std::size_t>& qubits,
                                    std::uint64_t shots, Rng& rng) const {
    if (shots == 0) {
        throw ConfigError("sample_expval_z requires shots >= 1");
    }
    if (qubits.empty()) {
        throw ConfigError("sample_expval_z requires a non-empty qubit set");
    }
    std::size_t mask = 0;
    for (std::size_t q : qubits) {
        check_qubit(q);
        mask |= bit_mask(q);
    }
    // Inverse-CDF sampling over the cumulative probability array.
    std::vector<double> cdf(amp_.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < amp_.size(); ++i) {
        acc += amp_[i].real() * amp_[i].real() +
               amp_[i].imag() * amp_[i].imag();
        cdf[i] = acc;
    }
    std::int64_t parity_sum = 0;
    for (std::uint64_t s = 0; s < shots; ++s) {
        const double u = rng.uniform_double() * acc;
        const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        const std::size_t idx =
            (it == cdf.end()) ? amp_.size() - 1
                              : static_cast<std::size_t>(it - cdf.begin());
        parity_sum += (std::popcount(idx & mask) & 1U) ? -1 : 1;
    }
    return static_cast<double>(parity_sum) / static_cast<double>(shots);
}

double StateVector::norm() const {
    double sum = 0.0;
    for (const auto& a : amp_) {
        sum += a.real() * a.real() + a.imag() * a.imag();
    }
    return std::sqrt(sum);
}

} // namespace bplab
