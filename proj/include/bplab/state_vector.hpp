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

/**
 * @file state_vector.hpp
 * Dense n-qubit statevector with in-place gate application.
 *
 * Conventions:
 *  - Basis index i is read with qubit 0 as the most significant bit, i.e.
 *    the top wire of a circuit diagram; for qubit q of n the partner stride
 *    is 2^(n-1-q).
 *  - Rotation gates follow the e^{-i theta sigma/2} convention:
 *      RY(t) = [[cos(t/2), -sin(t/2)], [sin(t/2), cos(t/2)]]
 *      RX(t) = [[cos(t/2), -i sin(t/2)], [-i sin(t/2), cos(t/2)]]
 *      RZ(t) = diag(e^{-i t/2}, e^{+i t/2})
 *      CZ    = diag(1, 1, 1, -1)
 *
 * Gates act in place via stride-based pair iteration; no 2^n x 2^n matrix
 * is ever materialized outside the brute-force test oracles.
 */
#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "bplab/rng.hpp"

namespace bplab {

class StateVector {
  public:
    /// Memory guard: 2^26 amplitudes = 1 GiB of doubles.
    static constexpr std::size_t kMaxQubits = 26;

    /// Prepare |0...0> on `n_qubits` wires. Throws CapacityError outside
    /// [1, kMaxQubits].
    explicit StateVector(std::size_t n_qubits);

    std::size_t num_qubits() const { return n_qubits_; }
    std::size_t size() const { return amp_.size(); }
    const std::vector<std::complex<double>>& amplitudes() const { return amp_; }

    /// Reset to |0...0> without reallocating.
    void reset();

    void apply_rx(std::size_t qubit, double theta);
    void apply_ry(std::size_t qubit, double theta);
    void apply_rz(std::size_t qubit, double theta);
    void apply_cz(std::size_t control, std::size_t target);

    /**
     * Expectation of the tensor product of Pauli-Z over `qubits`:
     * sum_i |a_i|^2 * (-1)^(popcount of i restricted to those wires).
     * Throws ConfigError on an empty set or an out-of-range index.
     */
    double expval_pauli_z(const std::vector<std::size_t>& qubits) const;

    /// All 2^n basis-state probabilities |a_i|^2.
    std::vector<double> probabilities() const;

    /// Probability of returning to the initial state, |<0...0|psi>|^2.
    double return_probability() const;

    /**
     * Finite-shot estimate of expval_pauli_z: draws `shots` basis states by
     * inverse-CDF over the cumulative probability array and averages the
     * Z-parity eigenvalues. Deterministic given the generator state.
     * Throws ConfigError when shots == 0.
     */
    double sample_expval_z(const std::vector<std::size_t>& qubits,
                           std::uint64_t shots, Rng& rng) const;

    /// Euclidean norm; 1 up to rounding for any unitary gate sequence.
    double norm() const;

  private:
    /// Bit mask selecting qubit q (qubit 0 = most significant bit).
    std::size_t bit_mask(std::size_t qubit) const;
    void check_qubit(std::size_t qubit) const;

    std::size_t n_qubits_;
    std::vector<std::complex<double>> amp_;
};

} // namespace bplab
