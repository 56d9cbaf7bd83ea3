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
 * @file circuit.hpp
 * The two parameterized circuit families under study, plus parameter
 * binding and evaluation.
 *
 * Family 1 (random circuit, variance study): per qubit one rotation gate
 * with a randomly drawn axis from {X, Y, Z}, followed by a CZ ladder on
 * neighbouring pairs; the block is repeated a configurable number of times.
 * Parameter slots can either be shared across repetitions (one slot per
 * qubit) or distinct per repetition (layered layout, one slot per rotation
 * gate); both layouts are first-class because they answer different
 * questions about depth.
 *
 * Family 2 (alternating ansatz, training study): an initial RY layer, then
 * per layer a CZ ladder from qubit 0, an RY layer, a CZ ladder offset to
 * start at qubit 1, and another RY layer. Every rotation has its own slot.
 */
#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bplab/rng.hpp"
#include "bplab/state_vector.hpp"

namespace bplab {

enum class GateKind { RX, RY, RZ, CZ };

/// Rotation generator drawn per qubit in the random-circuit family.
enum class RotationAxis { X, Y, Z };

struct GateOp {
    GateKind kind;
    std::size_t target = 0;
    /// Present iff kind == CZ.
    std::optional<std::size_t> control;
    /// Index into the parameter vector; rotations without a slot are fixed
    /// preparation gates and carry `fixed_angle` instead.
    std::optional<std::size_t> param_slot;
    /// Present iff kind is a rotation and param_slot is absent.
    std::optional<double> fixed_angle;
};

struct CircuitSpec {
    std::size_t n_qubits = 0;
    std::vector<GateOp> gates;
    /// Number of distinct parameter slots; slots may be referenced by more
    /// than one gate (shared parameters).
    std::size_t n_params = 0;
};

/// Uniform initialization interval for circuit parameters (radians).
struct ParamRange {
    std::string label;
    double low = 0.0;
    double high = 0.0;

    bool operator==(const ParamRange&) const = default;
};

/// The five ranges of the study: [0,1], [-1,1], [0,pi], [-pi,pi], [0,2pi].
const std::vector<ParamRange>& default_ranges();

/// How rotation parameters map onto repetitions of the random circuit.
enum class ParamSharing {
    /// One slot per qubit, reused by every repetition (n_params = n).
    kSharedAcrossRepetitions,
    /// One slot per rotation gate, laid out repetition-major
    /// (n_params = n * repetitions); slot r*n + q belongs to repetition r,
    /// qubit q.
    kPerRepetition,
};

/**
 * Build the random circuit of the variance study.
 *
 * Each repetition applies, in qubit order, one rotation gate per qubit with
 * the given axis, then a CZ ladder on pairs (0,1), (1,2), ..., (n-2,n-1).
 *
 * @param axes exactly n_qubits entries; drawn once per sample and fixed.
 * @param repetitions number of identical blocks (>= 1).
 * @param sharing parameter layout across repetitions.
 * @param tilted_preparation when true, a fixed (non-trainable) RY(pi/4)
 *        gate is prepended on every qubit, rotating the start state off the
 *        computational pole as in the standard barren-plateau demonstration
 *        circuit; these gates carry no parameter slot.
 */
CircuitSpec build_random_bp_circuit(
    std::size_t n_qubits, const std::vector<RotationAxis>& axes,
    std::size_t repetitions,
    ParamSharing sharing = ParamSharing::kSharedAcrossRepetitions,
    bool tilted_preparation = false);

/**
 * Build the alternating ansatz of the training study.
 *
 * Structure: RY layer; then per layer [CZ ladder (0,1)...(n-2,n-1),
 * RY layer, CZ ladder (1,2)...(n-2,n-1), RY layer]. Distinct slot per
 * rotation, so n_params = n_qubits * (2*layers + 1).
 *
 * Requires n_qubits >= 2 and layers >= 1.
 */
CircuitSpec build_alternating_ansatz(std::size_t n_qubits, std::size_t layers);

/// `count` independent uniform draws in [range.low, range.high).
std::vector<double> draw_params(const ParamRange& range, std::size_t count,
                                Rng& rng);

/// Uniformly random rotation axes, one per qubit.
std::vector<RotationAxis> draw_axes(std::size_t n_qubits, Rng& rng);

/**
 * Apply all gates of `circuit` to `state` with bound parameters.
 *
 * @param shift_occurrence if set, the gate at this index in the gate list
 *        has its angle shifted by `shift_delta` (used by the parameter-shift
 *        rule, which perturbs single occurrences rather than whole slots).
 */
void apply_circuit(const CircuitSpec& circuit, std::span<const double> params,
                   StateVector& state,
                   std::optional<std::size_t> shift_occurrence = std::nullopt,
                   double shift_delta = 0.0);

/**
 * Prepare |0...0>, run the circuit, and return the Pauli-Z expectation over
 * `observable_qubits`. Throws ConfigError on parameter-length mismatch.
 */
double evaluate(const CircuitSpec& circuit, const std::vector<double>& params,
                const std::vector<std::size_t>& observable_qubits);

} // namespace bplab
