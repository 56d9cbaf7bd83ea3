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
 * @file linear_fit.hpp
 * Ordinary least-squares line fit, used on (n, log10 variance) points.
 */
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "bplab/errors.hpp"

namespace bplab {

struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
    /// Coefficient of determination, clamped to [0, 1].
    double r_squared = 0.0;
};

/**
 * Least-squares fit of y = slope*x + intercept. Requires >= 2 points; for
 * constant y the slope is 0 and r_squared is defined as 1 (perfect fit of a
 * horizontal line).
 */
inline LineFit fit_line(const std::vector<double>& x,
                        const std::vector<double>& y) {
    if (x.size() != y.size()) {
        throw ConfigError("fit_line inputs differ in length");
    }
    const std::size_t n = x.size();
    if (n < 2) {
        throw NumericError("line fit needs at least 2 points, got " +
                           std::to_string(n));
    }
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = x[i] - mx;
        const double dy = y[i] - my;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    if (sxx == 0.0) {
        throw NumericError("line fit is degenerate: all x values coincide");
    }
    LineFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    if (syy == 0.0) {
        fit.r_squared = 1.0;
    } else {
        double r2 = (sxy * sxy) / (sxx * syy);
        if (r2 < 0.0) {
            r2 = 0.0;
        } else if (r2 > 1.0) {
            r2 = 1.0;
        }
        fit.r_squared = r2;
    }
    return fit;
}

} // namespace bplab
