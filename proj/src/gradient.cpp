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

#include "bplab/gradient.hpp"

#include <numbers>
#include <string>

#include "bplab/errors.hpp"

namespace bplab {

namespace {

constexpr double kShift = std::numbers::pi / 2.0;

void apply_gate_at(const CircuitSpec& circuit, std::span<const double> params,
                   StateVector& state, std::size_t gate_index, double delta) {
    const GateOp& gate = circuit.gates[gate_index];
    if (gate.kind == GateKind::CZ) {
        state.apply_cz(*gate.control, gate.target);
        return;
    }
    const double theta = (gate.param_slot ? params[*gate.param_slot]
                                          : *gate.fixed_angle) +
                         delta;
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

void check_params(const CircuitSpec& circuit, const std::vector<double>& params) {
    if (params.size() != circuit.n_params) {
        throw ConfigError("parameter vector has " +
                          std::to_string(params.size()) + " entries, circuit "
                          "expects " + std::to_string(circuit.n_params));
    }
}

/// One parameter-shift occurrence term at `gate_index`, continuing from the
/// unshifted prefix state covering gates [0, gate_index). `measure` maps a
/// final state to the (exact or sampled) expectation value.
template <typename Measure>
double occurrence_term(const CircuitSpec& circuit,
                       std::span<const double> params,
                       const StateVector& prefix, std::size_t gate_index,
                       Measure&& measure) {
    double values[2];
    const double deltas[2] = {+kShift, -kShift};
    for (int branch = 0; branch < 2; ++branch) {
        StateVector state = prefix;
        apply_gate_at(circuit, params, state, gate_index, deltas[branch]);
        for (std::size_t g = gate_index + 1; g < circuit.gates.size(); ++g) {
            apply_gate_at(circuit, params, state, g, 0.0);
        }
        values[branch] = measure(state);
    }
    return 0.5 * (values[0] - values[1]);
}

/// Accumulate occurrence terms for the slots selected by `wanted`
/// (nullptr = all slots), sharing one incrementally advanced prefix state.
template <typename Measure>
std::vector<double> shift_gradient_with(const CircuitSpec& circuit,
                                        const std::vector<double>& params,
                                        const std::vector<bool>* wanted,
                                        Measure&& measure) {
    std::vector<double> values(circuit.n_params, 0.0);
    StateVector prefix(circuit.n_qubits);
    for (std::size_t g = 0; g < circuit.gates.size(); ++g) {
        const GateOp& gate = circuit.gates[g];
        if (gate.param_slot && (!wanted || (*wanted)[*gate.param_slot])) {
            values[*gate.param_slot] +=
                occurrence_term(circuit, params, prefix, g, measure);
        }
        apply_gate_at(circuit, params, prefix, g, 0.0);
    }
    return values;
}

std::vector<double> shift_gradient(const CircuitSpec& circuit,
                                   const std::vector<double>& params,
                                   const Observable& observable,
                                   const std::vector<bool>* wanted) {
    return shift_gradient_with(
        circuit, params, wanted,
        [&observable](const StateVector& s) { return observable.measure(s); });
}

/// Adjoint of gate `gate_index`: rotations invert by negating the angle;
/// CZ is self-adjoint.
void apply_adjoint_gate_at(const CircuitSpec& circuit,
                           std::span<const double> params, StateVector& state,
                           std::size_t gate_index) {
    const GateOp& gate = circuit.gates[gate_index];
    if (gate.kind == GateKind::CZ) {
        state.apply_cz(*gate.control, gate.target);
        return;
    }
    const double theta =
        gate.param_slot ? params[*gate.param_slot] : *gate.fixed_angle;
    switch (gate.kind) {
        case GateKind::RX:
            state.apply_rx(gate.target, -theta);
            break;
        case GateKind::RY:
            state.apply_ry(gate.target, -theta);
            break;
        case GateKind::RZ:
            state.apply_rz(gate.target, -theta);
            break;
        case GateKind::CZ:
            break;
    }
}

/// <bra| G(phi) |ket> for the rotation gate `gate` with angle phi, computed
/// on stride pairs without materializing G|ket>.
std::complex<double> shifted_overlap(
    const std::vector<std::complex<double>>& bra,
    const std::vector<std::complex<double>>& ket, std::size_t n_qubits,
    const GateOp& gate, double phi) {
    const double c = std::cos(phi / 2.0);
    const double s = std::sin(phi / 2.0);
    const std::size_t mask = std::size_t{1} << (n_qubits - 1 - gate.target);
    double acc_re = 0.0;
    double acc_im = 0.0;
    for (std::size_t base = 0; base < bra.size(); base += 2 * mask) {
        for (std::size_t off = 0; off < mask; ++off) {
            const std::size_t i0 = base + off;
            const std::size_t i1 = i0 + mask;
            const std::complex<double> k0 = ket[i0];
            const std::complex<double> k1 = ket[i1];
            double v0_re, v0_im, v1_re, v1_im;
            switch (gate.kind) {
                case GateKind::RY:
                    v0_re = c * k0.real() - s * k1.real();
                    v0_im = c * k0.imag() - s * k1.imag();
                    v1_re = s * k0.real() + c * k1.real();
                    v1_im = s * k0.imag() + c * k1.imag();
                    break;
                case GateKind::RX:
                    v0_re = c * k0.real() + s * k1.imag();
                    v0_im = c * k0.imag() - s * k1.real();
                    v1_re = s * k0.imag() + c * k1.real();
                    v1_im = -s * k0.real() + c * k1.imag();
                    break;
                case GateKind::RZ:
                    v0_re = c * k0.real() + s * k0.imag();
                    v0_im = c * k0.imag() - s * k0.real();
                    v1_re = c * k1.real() - s * k1.imag();
                    v1_im = c * k1.imag() + s * k1.real();
                    break;
                default:
                    throw NumericError("overlap requires a rotation gate");
            }
            const std::complex<double> b0 = bra[i0];
            const std::complex<double> b1 = bra[i1];
            acc_re += b0.real() * v0_re + b0.imag() * v0_im +
                      b1.real() * v1_re + b1.imag() * v1_im;
            acc_im += b0.real() * v0_im - b0.imag() * v0_re +
                      b1.real() * v1_im - b1.imag() * v1_re;
        }
    }
    return {acc_re, acc_im};
}

} // namespace

std::vector<double> parameter_shift_gradient(const CircuitSpec& circuit,
                                             const std::vector<double>& params,
                                             const Observable& observable) {
    check_params(circuit, params);
    return shift_gradient(circuit, params, observable, nullptr);
}

std::vector<double> parameter_shift_gradient(
    const CircuitSpec& circuit, const std::vector<double>& params,
    const std::vector<std::size_t>& observable_qubits) {
    return parameter_shift_gradient(circuit, params,
                                    Observable::pauli_z(observable_qubits));
}

double slot_gradient(const CircuitSpec& circuit,
                     const std::vector<double>& params,
                     const Observable& observable, std::size_t slot) {
    check_params(circuit, params);
    if (slot >= circuit.n_params) {
        throw ConfigError("parameter slot " + std::to_string(slot) +
                          " out of range for " +
                          std::to_string(circuit.n_params) + " slots");
    }
    std::vector<bool> wanted(circuit.n_params, false);
    wanted[slot] = true;
    return shift_gradient(circuit, params, observable, &wanted)[slot];
}

double last_param_gradient(const CircuitSpec& circuit,
                           const std::vector<double>& params,
                           const Observable& observable) {
    return slot_gradient(circuit, params, observable, circuit.n_params - 1);
}

std::vector<double> finite_difference_gradient(const CircuitSpec& circuit,
                                               const std::vector<double>& params,
                                               const Observable& observable,
                                               double h) {
    check_params(circuit, params);
    if (!(h > 0.0) || h > 1e-3) {
        throw ConfigError("finite-difference step must lie in (0, 1e-3]");
    }
    std::vector<double> values(circuit.n_params, 0.0);
    std::vector<double> shifted = params;
    for (std::size_t k = 0; k < circuit.n_params; ++k) {
        shifted[k] = params[k] + h;
        const double plus = evaluate_observable(circuit, shifted, observable);
        shifted[k] = params[k] - h;
        const double minus = evaluate_observable(circuit, shifted, observable);
        shifted[k] = params[k];
        values[k] = (plus - minus) / (2.0 * h);
    }
    return values;
}

std::vector<double> finite_difference_gradient(
    const CircuitSpec& circuit, const std::vector<double>& params,
    const std::vector<std::size_t>& observable_qubits, double h) {
    return finite_difference_gradient(circuit, params,
                                      Observable::pauli_z(observable_qubits), h);
}

std::vector<double> return_probability_shift_gradient(
    const CircuitSpec& circuit, const std::vector<double>& params) {
    check_params(circuit, params);
    const std::size_t n_gates = circuit.gates.size();
    // Backward sweep: for each parameterized rotation g, store
    // (U_{g+1} ... U_N)^dagger |0...0>, i.e. the suffix bra as a ket.
    std::vector<std::vector<std::complex<double>>> bras;
    {
        StateVector bra(circuit.n_qubits);
        for (std::size_t g = n_gates; g-- > 0;) {
            if (circuit.gates[g].param_slot) {
                bras.push_back(bra.amplitudes());
            }
            apply_adjoint_gate_at(circuit, params, bra, g);
        }
    }
    // Forward sweep: advance the prefix state; at each rotation combine it
    // with the matching suffix bra (stored in reverse gate order) into the
    // two shifted overlap amplitudes.
    std::vector<double> values(circuit.n_params, 0.0);
    StateVector prefix(circuit.n_qubits);
    std::size_t next = bras.size();
    for (std::size_t g = 0; g < n_gates; ++g) {
        const GateOp& gate = circuit.gates[g];
        if (gate.param_slot) {
            --next;
            const double theta = params[*gate.param_slot];
            const auto& ket = prefix.amplitudes();
            const std::complex<double> plus = shifted_overlap(
                bras[next], ket, circuit.n_qubits, gate, theta + kShift);
            const std::complex<double> minus = shifted_overlap(
                bras[next], ket, circuit.n_qubits, gate, theta - kShift);
            values[*gate.param_slot] +=
                0.5 * (std::norm(plus) - std::norm(minus));
        }
        apply_gate_at(circuit, params, prefix, g, 0.0);
    }
    return values;
}

std::vector<double> sampled_shift_gradient(const CircuitSpec& circuit,
                                           const std::vector<double>& params,
                                           const Observable& observable,
                                           std::uint64_t shots, Rng& rng) {
    check_params(circuit, params);
    return shift_gradient_with(
        circuit, params, nullptr,
        [&](const StateVector& s) { return observable.sample(s, shots, rng); });
}

} // namespace bplab
