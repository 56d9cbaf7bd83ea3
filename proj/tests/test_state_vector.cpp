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

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "bplab/errors.hpp"
#include "bplab/rng.hpp"
#include "bplab/state_vector.hpp"
#include "dense_oracle.hpp"

using namespace bplab;
using bplab::testing::Cx;
using bplab::testing::Matrix;
using bplab::testing::matvec;

namespace {

constexpr double kPi = std::numbers::pi;

Matrix rx_matrix(double t) {
    const double c = std::cos(t / 2), s = std::sin(t / 2);
    return {{Cx{c, 0}, Cx{0, -s}}, {Cx{0, -s}, Cx{c, 0}}};
}

Matrix ry_matrix(double t) {
    const double c = std::cos(t / 2), s = std::sin(t / 2);
    return {{Cx{c, 0}, Cx{-s, 0}}, {Cx{s, 0}, Cx{c, 0}}};
}

Matrix rz_matrix(double t) {
    const double c = std::cos(t / 2), s = std::sin(t / 2);
    return {{Cx{c, -s}, Cx{0, 0}}, {Cx{0, 0}, Cx{c, s}}};
}

double max_abs_diff(const std::vector<Cx>& a, const std::vector<Cx>& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        m = std::max(m, std::abs(a[i] - b[i]));
    }
    return m;
}

} // namespace

TEST_CASE("new state is |0...0>") {
    SUBCASE("one qubit") {
        StateVector sv(1);
        CHECK(sv.size() == 2);
        CHECK(sv.amplitudes()[0] == Cx{1.0, 0.0});
        CHECK(sv.amplitudes()[1] == Cx{0.0, 0.0});
    }
    SUBCASE("three qubits") {
        StateVector sv(3);
        CHECK(sv.size() == 8);
        CHECK(sv.amplitudes()[0] == Cx{1.0, 0.0});
        for (std::size_t i = 1; i < 8; ++i) {
            CHECK(sv.amplitudes()[i] == Cx{0.0, 0.0});
        }
    }
    SUBCASE("capacity guard") {
        CHECK_THROWS_AS(StateVector(0), CapacityError);
        CHECK_THROWS_AS(StateVector(StateVector::kMaxQubits + 1), CapacityError);
    }
}

TEST_CASE("single-gate closed forms") {
    SUBCASE("RY(pi) maps |0> to |1>") {
        StateVector sv(1);
        sv.apply_ry(0, kPi);
        CHECK(std::abs(sv.amplitudes()[0]) < 1e-15);
        CHECK(std::abs(sv.amplitudes()[1] - Cx{1.0, 0.0}) < 1e-15);
    }
    SUBCASE("RX(pi/2) on |0> gives [1/sqrt2, -i/sqrt2]") {
        StateVector sv(1);
        sv.apply_rx(0, kPi / 2);
        const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
        CHECK(std::abs(sv.amplitudes()[0] - Cx{inv_sqrt2, 0.0}) < 1e-15);
        CHECK(std::abs(sv.amplitudes()[1] - Cx{0.0, -inv_sqrt2}) < 1e-15);
    }
    SUBCASE("CZ flips the sign of |11>") {
        StateVector sv(2);
        sv.apply_ry(0, kPi);
        sv.apply_ry(1, kPi); // now |11>
        sv.apply_cz(0, 1);
        CHECK(std::abs(sv.amplitudes()[3] - Cx{-1.0, 0.0}) < 1e-14);
    }
    SUBCASE("RZ leaves probabilities invariant") {
        StateVector sv(1);
        sv.apply_ry(0, 0.7);
        const auto before = sv.probabilities();
        sv.apply_rz(0, 1.3);
        const auto after = sv.probabilities();
        CHECK(std::abs(before[0] - after[0]) < 1e-15);
        CHECK(std::abs(before[1] - after[1]) < 1e-15);
    }
}

TEST_CASE("qubit 0 is the most significant bit") {
    // Flipping qubit 0 of three must populate index 4 (binary 100).
    StateVector sv(3);
    sv.apply_ry(0, kPi);
    CHECK(std::abs(sv.amplitudes()[4] - Cx{1.0, 0.0}) < 1e-15);
    // Flipping qubit 2 instead populates index 1 (binary 001).
    StateVector sv2(3);
    sv2.apply_ry(2, kPi);
    CHECK(std::abs(sv2.amplitudes()[1] - Cx{1.0, 0.0}) < 1e-15);
}

TEST_CASE("gate kernels match the dense Kronecker oracle") {
    // Random circuits on 4 qubits, applied both through the stride kernels
    // and through explicitly embedded 2^n x 2^n matrices.
    const std::size_t n = 4;
    Rng rng(2024);
    for (int trial = 0; trial < 10; ++trial) {
        StateVector sv(n);
        std::vector<Cx> dense(sv.size(), Cx{0.0, 0.0});
        dense[0] = Cx{1.0, 0.0};
        for (int g = 0; g < 12; ++g) {
            const auto kind = rng.bounded_int(4);
            const auto q = rng.bounded_int(n);
            const double theta = rng.uniform_in(-kPi, kPi);
            if (kind == 3) {
                const auto q2 = (q + 1 + rng.bounded_int(n - 1)) % n;
                sv.apply_cz(q, q2);
                dense = matvec(bplab::testing::embed_cz(q, q2, n), dense);
            } else if (kind == 0) {
                sv.apply_rx(q, theta);
                dense = matvec(
                    bplab::testing::embed_single(rx_matrix(theta), q, n), dense);
            } else if (kind == 1) {
                sv.apply_ry(q, theta);
                dense = matvec(
                    bplab::testing::embed_single(ry_matrix(theta), q, n), dense);
            } else {
                sv.apply_rz(q, theta);
                dense = matvec(
                    bplab::testing::embed_single(rz_matrix(theta), q, n), dense);
            }
        }
        CHECK(max_abs_diff(sv.amplitudes(), dense) < 1e-12);
    }
}

TEST_CASE("expval_pauli_z closed forms and oracle") {
    SUBCASE("Z on all qubits of |0...0> is 1") {
        StateVector sv(3);
        CHECK(sv.expval_pauli_z({0, 1, 2}) == doctest::Approx(1.0));
    }
    SUBCASE("<Z> after RY(theta) is cos(theta)") {
        for (double theta : {0.3, kPi / 2, 2.1}) {
            StateVector sv(1);
            sv.apply_ry(0, theta);
            CHECK(sv.expval_pauli_z({0}) ==
                  doctest::Approx(std::cos(theta)).epsilon(1e-12));
        }
    }
    SUBCASE("two-qubit RY(pi/2) pair with CZ gives <ZZ> = 0") {
        StateVector sv(2);
        sv.apply_ry(0, kPi / 2);
        sv.apply_ry(1, kPi / 2);
        sv.apply_cz(0, 1);
        CHECK(sv.expval_pauli_z({0, 1}) == doctest::Approx(0.0));
        const auto probs = sv.probabilities();
        for (double p : probs) {
            CHECK(p == doctest::Approx(0.25));
        }
    }
    SUBCASE("empty qubit set is rejected") {
        StateVector sv(2);
        CHECK_THROWS_AS(sv.expval_pauli_z({}), ConfigError);
    }
    SUBCASE("bit-parity sum equals dense diagonal observable for n <= 6") {
        for (std::size_t n = 2; n <= 6; ++n) {
            Rng rng(500 + n);
            StateVector sv(n);
            for (int g = 0; g < 30; ++g) {
                const auto q = rng.bounded_int(n);
                const double theta = rng.uniform_in(0.0, 2 * kPi);
                switch (rng.bounded_int(3)) {
                    case 0: sv.apply_rx(q, theta); break;
                    case 1: sv.apply_ry(q, theta); break;
                    default: sv.apply_rz(q, theta); break;
                }
                if (q + 1 < n) {
                    sv.apply_cz(q, q + 1);
                }
            }
            // Several observable supports, including all wires.
            std::vector<std::vector<std::size_t>> supports = {{0}, {n - 1}};
            std::vector<std::size_t> all;
            for (std::size_t q = 0; q < n; ++q) all.push_back(q);
            supports.push_back(all);
            for (const auto& qubits : supports) {
                const auto dense =
                    bplab::testing::dense_pauli_z(qubits, n);
                const double want = bplab::testing::dense_expectation(
                    dense, sv.amplitudes());
                CHECK(sv.expval_pauli_z(qubits) ==
                      doctest::Approx(want).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("return_probability reads |<0...0|psi>|^2") {
    StateVector sv(2);
    CHECK(sv.return_probability() == doctest::Approx(1.0));
    sv.apply_ry(0, 0.8);
    sv.apply_ry(1, 1.1);
    // Product state: p0 = cos^2(0.4) * cos^2(0.55).
    const double want = std::pow(std::cos(0.4) * std::cos(0.55), 2);
    CHECK(sv.return_probability() == doctest::Approx(want).epsilon(1e-12));
    CHECK(sv.return_probability() ==
          doctest::Approx(sv.probabilities()[0]).epsilon(1e-15));
}

TEST_CASE("unitarity and algebraic properties") {
    SUBCASE("RY(theta) then RY(-theta) restores the state") {
        Rng rng(11);
        StateVector sv(3);
        for (int g = 0; g < 10; ++g) {
            sv.apply_ry(rng.bounded_int(3), rng.uniform_in(-kPi, kPi));
        }
        const auto before = sv.amplitudes();
        sv.apply_ry(1, 0.917);
        sv.apply_ry(1, -0.917);
        CHECK(max_abs_diff(sv.amplitudes(), before) < 1e-12);
    }
    SUBCASE("diagonal gates commute") {
        Rng rng(12);
        StateVector a(4), b(4);
        // Prepare identical non-trivial states.
        for (int g = 0; g < 8; ++g) {
            const auto q = rng.bounded_int(4);
            const double t = rng.uniform_in(-kPi, kPi);
            a.apply_ry(q, t);
            b.apply_ry(q, t);
        }
        a.apply_rz(0, 0.4);
        a.apply_cz(0, 1);
        a.apply_rz(2, -1.2);
        a.apply_cz(2, 3);
        b.apply_cz(2, 3);
        b.apply_rz(2, -1.2);
        b.apply_cz(0, 1);
        b.apply_rz(0, 0.4);
        CHECK(max_abs_diff(a.amplitudes(), b.amplitudes()) < 1e-12);
    }
    SUBCASE("norm conserved on a random 200-gate 15-qubit circuit") {
        Rng rng(13);
        StateVector sv(15);
        for (int g = 0; g < 200; ++g) {
            const auto q = rng.bounded_int(15);
            const double t = rng.uniform_in(0.0, 2 * kPi);
            switch (rng.bounded_int(4)) {
                case 0: sv.apply_rx(q, t); break;
                case 1: sv.apply_ry(q, t); break;
                case 2: sv.apply_rz(q, t); break;
                default:
                    sv.apply_cz(q, (q + 1) % 15);
                    break;
            }
        }
        CHECK(std::abs(sv.norm() - 1.0) < 1e-10);
    }
}

TEST_CASE("sample_expval_z") {
    SUBCASE("degenerate distribution gives exactly 1") {
        StateVector sv(3);
        Rng rng(1);
        CHECK(sv.sample_expval_z({0, 1, 2}, 100, rng) == 1.0);
    }
    SUBCASE("zero shots rejected") {
        StateVector sv(1);
        Rng rng(1);
        CHECK_THROWS_AS(sv.sample_expval_z({0}, 0, rng), ConfigError);
    }
    SUBCASE("determinism for a fixed seed") {
        StateVector sv(2);
        sv.apply_ry(0, 1.0);
        sv.apply_ry(1, 0.5);
        Rng r1(77), r2(77);
        CHECK(sv.sample_expval_z({0, 1}, 5000, r1) ==
              sv.sample_expval_z({0, 1}, 5000, r2));
    }
    SUBCASE("balanced superposition converges near 0") {
        StateVector sv(1);
        sv.apply_ry(0, kPi / 2);
        Rng rng(42);
        const double est = sv.sample_expval_z({0}, 1000000, rng);
        CHECK(std::abs(est) < 0.005);
    }
    SUBCASE("error halves when shots quadruple (within factor 2)") {
        // Fixed superposition state; RMS error over repeated estimates
        // should scale like 1/sqrt(shots).
        StateVector sv(3);
        sv.apply_ry(0, 0.9);
        sv.apply_ry(1, 1.7);
        sv.apply_ry(2, 2.4);
        sv.apply_cz(0, 1);
        sv.apply_cz(1, 2);
        const double exact = sv.expval_pauli_z({0, 1, 2});
        auto rms_error = [&](std::uint64_t shots, std::uint64_t seed_base) {
            double acc = 0.0;
            const int reps = 30;
            for (int r = 0; r < reps; ++r) {
                Rng rng(seed_base + static_cast<std::uint64_t>(r));
                const double est = sv.sample_expval_z({0, 1, 2}, shots, rng);
                acc += (est - exact) * (est - exact);
            }
            return std::sqrt(acc / reps);
        };
        const double e1 = rms_error(100, 1000);
        const double e2 = rms_error(400, 2000);
        // Expect e1/e2 close to 2; allow [1, 4] (factor-2 band).
        CHECK(e1 / e2 > 1.0);
        CHECK(e1 / e2 < 4.0);
    }
}
