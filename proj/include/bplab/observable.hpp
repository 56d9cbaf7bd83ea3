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
 * @file observable.hpp
 * Measured quantities that close a circuit evaluation into a scalar cost.
 *
 * Two observables cover both studies:
 *  - PauliZ: tensor product of Z over a wire set, eigenvalues +-1.
 *  - ReturnProbability: the projector |0...0><0...0|, i.e. the probability
 *    of measuring the all-zeros state. This is the quantity behind
 *    "flattened array representing the probabilities": the cost reads the
 *    first entry of that array.
 *
 * Both are diagonal in the computational basis, so the parameter-shift rule
 * (which only relies on the rotation-gate generators) applies to either.
 */
#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "bplab/circuit.hpp"
#include "bplab/state_vector.hpp"

namespace bplab {

class Observable {
  public:
    enum class Kind { kPauliZ, kReturnProbability };

    /// Tensor product of Pauli-Z over the given wires.
    static Observable pauli_z(std::vector<std::size_t> qubits) {
        Observable obs;
        obs.kind_ = Kind::kPauliZ;
        obs.qubits_ = std::move(qubits);
        return obs;
    }

    /// Z on every wire of an n-qubit register.
    static Observable pauli_z_all(std::size_t n_qubits) {
        std::vector<std::size_t> qubits(n_qubits);
        for (std::size_t q = 0; q < n_qubits; ++q) {
            qubits[q] = q;
        }
        return pauli_z(std::move(qubits));
    }

    /// Projector onto |0...0>: measures the return probability.
    static Observable return_probability() {
        Observable obs;
        obs.kind_ = Kind::kReturnProbability;
        return obs;
    }

    Kind kind() const { return kind_; }
    const std::vector<std::size_t>& qubits() const { return qubits_; }

    /// Expectation value in the given state.
    double measure(const StateVector& state) const {
        if (kind_ == Kind::kReturnProbability) {
            return state.return_probability();
        }
        return state.expval_pauli_z(qubits_);
    }

    /**
     * Finite-shot estimate of measure(): Pauli-Z strings average sampled
     * parity eigenvalues; the projector counts Bernoulli successes against
     * the return probability. Deterministic given the generator state.
     */
    double sample(const StateVector& state, std::uint64_t shots,
                  Rng& rng) const;

  private:
    Kind kind_ = Kind::kPauliZ;
    std::vector<std::size_t> qubits_;
};

/// Run the circuit from |0...0> and measure `observable`.
double evaluate_observable(const CircuitSpec& circuit,
                           std::span<const double> params,
                           const Observable& observable);

} // namespace bplab
