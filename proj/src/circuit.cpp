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

#include "bplab/circuit.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "bplab/errors.hpp"

namespace bplab {

const std::vector<ParamRange>& default_ranges() {
    // R1..R5 follow the study's table order: [0,1], [-1,1], [0,pi],
    // [-pi,pi], [0,2pi]. Labels stay comma-free for plain CSV fields.
    static const std::vector<ParamRange> kRanges = {
        {"R1", 0.0, 1.0},
        {"R2", -1.0, 1.0},
        {"R3", 0.0, std::numbers::pi},
        {"R4", -std::numbers::pi, std::numbers::pi},
        {"R5", 0.0, 2.0 * std::numbers::pi},
    };
    return kRanges;
}

namespace {

GateKind axis_to_kind(RotationAxis axis) {
    switch (axis) {
        case RotationAxis::X:
            return GateKind::RX;
        case RotationAxis::Y:
            return GateKind::RY;
        case RotationAxis::Z:
            return GateKind::RZ;
    }
    throw ConfigError("invalid rotation axis");
}

} // namespace

CircuitSpec build_random_bp_circuit(std::size_t n_qubits,
                                    const std::vector<RotationAxis>& axes,
                                    std::size_t repetitions,
                                    ParamSharing sharing,
                                    bool tilted_preparation) {
    if (n_qubits < 1) {
        throw ConfigError("random circuit requires at least one qubit");
    }
    if (axes.size() != n_qubits) {
        throw ConfigError("axes list has " + std::to_string(axes.size()) +
                          " entries for " + std::to_string(n_qubits) +
                          " qubits");
    }
    if (repetitions < 1) {
        throw ConfigError("repetitions must be >= 1");
    }
    CircuitSpec circuit;
    circuit.n_qubits = n_qubits;
    const bool shared = sharing == ParamSharing::kSharedAcrossRepetitions;
    circuit.n_params = shared ? n_qubits : n_qubits * repetitions;
    if (tilted_preparation) {
        for (std::size_t q = 0; q < n_qubits; ++q) {
            GateOp gate;
            gate.kind = GateKind::RY;
            gate.target = q;
            gate.fixed_angle = std::numbers::pi / 4.0;
            circuit.gates.push_back(gate);
        }
    }
    for (std::size_t rep = 0; rep < repetitions; ++rep) {
        for (std::size_t q = 0; q < n_qubits; ++q) {
            GateOp gate;
            gate.kind = axis_to_kind(axes[q]);
            gate.target = q;
            gate.param_slot = shared ? q : rep * n_qubits + q;
            circuit.gates.push_back(gate);
        }
        for (std::size_t q = 0; q + 1 < n_qubits; ++q) {
            circuit.gates.push_back(
                {GateKind::CZ, q + 1, q, std::nullopt, std::nullopt});
        }
    }
    return circuit;
}

CircuitSpec build_alternating_ansatz(std::size_t n_qubits,
                                     std::size_t layers) {
    if (n_qubits < 2) {
        throw ConfigError("alternating ansatz requires n_qubits >= 2");
    }
    if (layers < 1) {
        throw ConfigError("alternating ansatz requires layers >= 1");
    }
    CircuitSpec circuit;
    circuit.n_qubits = n_qubits;
    circuit.n_params = n_qubits * (2 * layers + 1);
    std::size_t slot = 0;
    auto ry_layer = [&] {
        for (std::size_t q = 0; q < n_qubits; ++q) {
            GateOp gate;
            gate.kind = GateKind::RY;
            gate.target = q;
            gate.param_slot = slot++;
            circuit.gates.push_back(gate);
        }
    };
    auto cz_ladder = [&](std::size_t first) {
        for (std::size_t q = first; q + 1 < n_qubits; ++q) {
            circuit.gates.push_back(
                {GateKind::CZ, q + 1, q, std::nullopt, std::nullopt});
        }
    };
    ry_layer();
    for (std::size_t layer = 0; layer < layers; ++layer) {
        cz_ladder(0);
        ry_layer();
        cz_ladder(1);
        ry_layer();
    }
    return circuit;
}

std::vector<double> draw_params(const ParamRange& range, std::size_t count,
                                Rng& rng) {
    if (range.low >= range.high) {
        throw ConfigError("parameter range [" + std::to_string(range.low) +
                          ", " + std::to_string(range.high) +
                          ") is empty");
    }
    std::vector<double> params(count);
    for (double& p : params) {
        p = rng.uniform_in(range.low, range.high);
    }
    return params;
}

std::vector<RotationAxis> draw_axes(std::size_t n_qubits, Rng& rng) {
    static constexpr RotationAxis kAxes[3] = {RotationAxis::X, RotationAxis::Y,
                                              RotationAxis::Z};
    std::vector<RotationAxis> axes(n_qubits);
    for (auto& a : axes) {
        a = kAxes[rng.bounded_int(3)];
    }
    return axes;
}

void apply_circuit(const CircuitSpec& circuit, std::span<const double> params,
                   StateVector& state,
                   std::optional<std::size_t> shift_occurrence,
                   double shift_delta) {
    if (params.size() != circuit.n_params) {
        throw ConfigError("parameter vector has " +
                          std::to_string(params.size()) + " entries, circuit "
                          "expects " + std::to_string(circuit.n_params));
    }
    for (std::size_t g = 0; g < circuit.gates.size(); ++g) {
        const GateOp& gate = circuit.gates[g];
        if (gate.kind == GateKind::CZ) {
            state.apply_cz(*gate.control, gate.target);
            continue;
        }
        double theta = gate.param_slot ? params[*gate.param_slot]
                                       : *gate.fixed_angle;
        if (shift_occurrence && *shift_occurrence == g) {
            theta += shift_delta;
        }
        switch (gate.kind) {
            case GateKind::RX:
                state.apply_rx(gate.target, theta);
                break;
            case GateKind::RY:
                state.apply_ry(gate.target, theta);
                break;
            case GateKind::RZ:
                state.apply_rz(gate.target, theta);
                break;
            case GateKind::CZ:
                break;
        }
    }
}

double evaluate(const CircuitSpec& circuit, const std::vector<double>& params,
                const std::vector<std::size_t>& observable_qubits) {
    StateVector state(circuit.n_qubits);
    apply_circuit(circuit, params, state);
    return state.expval_pauli_z(observable_qubits);
}

} // namespace bplab
