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
 * @file gradient.hpp
 * Exact gradients of circuit expectation values.
 *
 * The parameter-shift rule for gates generated by e^{-i theta sigma/2}:
 *
 *     dC/d(occurrence) = 1/2 [ C(occ + pi/2) - C(occ - pi/2) ]
 *
 * where each shift perturbs a single gate instance. A slot shared by
 * several gate occurrences accumulates the occurrence terms (product rule),
 * which is checked against whole-slot central finite differences in tests.
 *
 * Shift evaluations reuse a running prefix state: occurrences are visited
 * in gate order, the unshifted prefix up to each occurrence is advanced
 * incrementally, and only the suffix is recomputed per shift. This changes
 * nothing about the floating-point result (each evaluation applies the same
 * operations in the same order as a from-scratch run) and roughly halves
 * the work for gradients concentrated near the end of the circuit.
 */
#pragma once

#include <cstddef>
#include <vector>

#include "bplab/circuit.hpp"
#include "bplab/observable.hpp"

namespace bplab {

/// Analytic gradient for every parameter slot (occurrence-summed).
std::vector<double> parameter_shift_gradient(const CircuitSpec& circuit,
                                             const std::vector<double>& params,
                                             const Observable& observable);

/// Convenience overload measuring Pauli-Z over `observable_qubits`.
std::vector<double> parameter_shift_gradient(
    const CircuitSpec& circuit, const std::vector<double>& params,
    const std::vector<std::size_t>& observable_qubits);

/// Analytic gradient of a single slot (occurrence-summed).
double slot_gradient(const CircuitSpec& circuit,
                     const std::vector<double>& params,
                     const Observable& observable, std::size_t slot);

/// Gradient of the final parameter slot only (the variance study's probe).
double last_param_gradient(const CircuitSpec& circuit,
                           const std::vector<double>& params,
                           const Observable& observable);

/**
 * Parameter-shift gradient of the return probability |<0...0|U|0...0>|^2,
 * for every slot. Evaluates each shifted cost through the single overlap
 * amplitude <0...0|U(occ +- pi/2)|0...0> using one backward sweep of cached
 * suffix states plus one forward prefix sweep, so the whole gradient costs
 * O(gates) state passes instead of O(gates^2). Same shift rule and the same
 * values (up to rounding) as parameter_shift_gradient with the projector
 * observable; equality within 1e-12 is enforced in tests.
 */
std::vector<double> return_probability_shift_gradient(
    const CircuitSpec& circuit, const std::vector<double>& params);

/**
 * Parameter-shift gradient with every shifted expectation replaced by its
 * `shots`-sample estimate (exploration mode). State evolution stays exact;
 * only the measurements are noisy. Deterministic given the generator state.
 */
std::vector<double> sampled_shift_gradient(const CircuitSpec& circuit,
                                           const std::vector<double>& params,
                                           const Observable& observable,
                                           std::uint64_t shots, Rng& rng);

/**
 * Central-difference oracle: [C(theta + h e_k) - C(theta - h e_k)] / (2h)
 * with whole-slot shifts. Requires 0 < h <= 1e-3.
 */
std::vector<double> finite_difference_gradient(
    const CircuitSpec& circuit, const std::vector<double>& params,
    const Observable& observable, double h = 1e-5);

/// Convenience overload measuring Pauli-Z over `observable_qubits`.
std::vector<double> finite_difference_gradient(
    const CircuitSpec& circuit, const std::vector<double>& params,
    const std::vector<std::size_t>& observable_qubits, double h = 1e-5);

} // namespace bplab
