// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "specabs/polybasis.hpp"
#include "specabs/problems.hpp"

#include <vector>

namespace specabs {

/// Exact Legendre coefficients c_0..c_P of a 1-D closed-form benchmark.
struct OracleSeries {
    Benchmark problem;
    std::vector<double> coeffs;

    [[nodiscard]] CoefficientSet as_coefficients() const;
};

/// e^w. The inner-product recurrence loses roughly log2(2i+1) bits per step, so
/// it is carried out in MPFR with enough working precision for the requested P.
[[nodiscard]] OracleSeries oracle_sae(int degree);
/// max(0, w), from the Gamma-ratio closed form via running ratios.
[[nodiscard]] OracleSeries oracle_mssae(int degree);
/// sqrt(max(0, w)), same strategy.
[[nodiscard]] OracleSeries oracle_mnssae(int degree);

/// Dispatch on a 1-D benchmark; ConfigError for the oscillator variants.
[[nodiscard]] OracleSeries oracle_series(Benchmark problem, int degree);

}  // namespace specabs
