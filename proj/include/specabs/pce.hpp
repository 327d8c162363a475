// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "specabs/polybasis.hpp"

#include <map>
#include <vector>

namespace specabs {

/// Subset of {1..D} (1-based, ascending).
using ParamSubset = std::vector<int>;

struct SensitivityReport {
    double mean = 0.0;
    double variance = 0.0;
    std::map<ParamSubset, double> sobol;  // every nonempty subset
    std::vector<double> total;            // total-order index per parameter
    int truncation = 0;                   // P, the last linear index used
    bool degenerate = false;              // zero variance: indices reported as 0
};

// All three require a Legendre set; otherwise ConfigError (convert with cheb_to_leg).
[[nodiscard]] double pce_mean(const CoefficientSet& coeffs);
[[nodiscard]] double pce_variance(const CoefficientSet& coeffs);
[[nodiscard]] SensitivityReport sobol_indices(const CoefficientSet& coeffs);

}  // namespace specabs
