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

#include "bplab/observable.hpp"

#include "bplab/errors.hpp"

namespace bplab {

double Observable::sample(const StateVector& state, std::uint64_t shots,
                          Rng& rng) const {
    if (shots == 0) {
        throw ConfigError("sampling requires shots >= 1");
    }
    if (kind_ == Kind::kPauliZ) {
        return state.sample_expval_z(qubits_, shots, rng);
    }
    const double p = state.return_probability();
    std::uint64_t hits = 0;
    for (std::uint64_t s = 0; s < shots; ++s) {
        if (rng.uniform_double() < p) {
            ++hits;
        }
    }
    return static_cast<double>(hits) / static_cast<double>(shots);
}

double evaluate_observable(const CircuitSpec& circuit,
                           std::span<const double> params,
                           const Observable& observable) {
    StateVector state(circuit.n_qubits);
    apply_circuit(circuit, params, state);
    return observable.measure(state);
}

} // namespace bplab
