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
 * @file adam.hpp
 * Adam optimizer with bias correction (Kingma & Ba).
 *
 * Defaults mirror the common framework defaults: beta1 = 0.9, beta2 = 0.999,
 * epsilon = 1e-8; the learning rate of the study is 0.1.
 */
#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "bplab/errors.hpp"

namespace bplab {

class AdamOptimizer {
  public:
    explicit AdamOptimizer(std::size_t n_params, double learning_rate = 0.1,
                           double beta1 = 0.9, double beta2 = 0.999,
                           double epsilon = 1e-8)
        : learning_rate_(learning_rate), beta1_(beta1), beta2_(beta2),
          epsilon_(epsilon), first_moment_(n_params, 0.0),
          second_moment_(n_params, 0.0) {}

    std::size_t step_count() const { return step_count_; }
    const std::vector<double>& first_moment() const { return first_moment_; }
    const std::vector<double>& second_moment() const { return second_moment_; }

    /**
     * One in-place update:
     *   m <- b1 m + (1-b1) g;  v <- b2 v + (1-b2) g^2
     *   theta <- theta - lr * (m / (1-b1^t)) / (sqrt(v / (1-b2^t)) + eps)
     * Throws ConfigError on length mismatch, NumericError on non-finite
     * gradient entries.
     */
    void step(std::vector<double>& params, const std::vector<double>& gradient) {
        if (params.size() != first_moment_.size() ||
            gradient.size() != first_moment_.size()) {
            throw ConfigError("Adam buffers sized for " +
                              std::to_string(first_moment_.size()) +
                              " parameters, got params=" +
                              std::to_string(params.size()) + " gradient=" +
                              std::to_string(gradient.size()));
        }
        for (double g : gradient) {
            if (!std::isfinite(g)) {
                throw NumericError("non-finite gradient entry in Adam step");
            }
        }
        ++step_count_;
        const double bias1 = 1.0 - std::pow(beta1_, static_cast<double>(step_count_));
        const double bias2 = 1.0 - std::pow(beta2_, static_cast<double>(step_count_));
        for (std::size_t k = 0; k < params.size(); ++k) {
            const double g = gradient[k];
            first_moment_[k] = beta1_ * first_moment_[k] + (1.0 - beta1_) * g;
            second_moment_[k] = beta2_ * second_moment_[k] + (1.0 - beta2_) * g * g;
            const double m_hat = first_moment_[k] / bias1;
            const double v_hat = second_moment_[k] / bias2;
            params[k] -= learning_rate_ * m_hat / (std::sqrt(v_hat) + epsilon_);
        }
    }

  private:
    double learning_rate_;
    double beta1_;
    double beta2_;
    double epsilon_;
    std::size_t step_count_ = 0;
    std::vector<double> first_moment_;
    std::vector<double> second_moment_;
};

} // namespace bplab
