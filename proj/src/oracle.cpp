// SPDX-License-Identifier: Apache-2.0
#include "specabs/oracle.hpp"

#include "specabs/errors.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <cmath>

namespace specabs {

namespace mp = boost::multiprecision;

namespace {

class PrecisionGuard {
public:
    explicit PrecisionGuard(unsigned digits10) : saved_(mp::mpfr_float::default_precision()) {
        mp::mpfr_float::default_precision(digits10);
    }
    ~PrecisionGuard() { mp::mpfr_float::default_precision(saved_); }
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;

private:
    unsigned saved_;
};

void check_degree(int degree) {
    if (degree < 0) throw ConfigError("oracle: degree must be non-negative");
}

}  // namespace

CoefficientSet OracleSeries::as_coefficients() const {
    return CoefficientSet(
        GradedBasis(Family::Legendre, 1, DegreeNorm::Total, static_cast<int>(coeffs.size()) - 1),
        coeffs);
}

OracleSeries oracle_sae(int degree) {
    check_degree(degree);
    // Each step multiplies earlier rounding errors by about (2i+3) while the
    // coefficients themselves shrink at the same rate, so the working precision
    // covers both.
    double bits = 96.0;
    for (int i = 0; i <= degree; ++i) bits += 2.0 * std::log2(2.0 * i + 3.0);
    PrecisionGuard guard(static_cast<unsigned>(bits * 0.30103) + 10);

    const mp::mpfr_float e = mp::exp(mp::mpfr_float(1));
    const mp::mpfr_float inv_e = 1 / e;

    OracleSeries out{Benchmark::SAE1, std::vector<double>(degree + 1)};
    mp::mpfr_float c = (e - inv_e) / 2;  // <e^w, P_0>_rho / ||P_0||^2
    mp::mpfr_float parity_sum[2] = {0, 0};
    for (int i = 0; i <= degree; ++i) {
        out.coeffs[i] = static_cast<double>(c);
        parity_sum[i % 2] += c;
        // <e^w, P_{i+1}> = (e + (-1)^i / e - 2 (c_i + c_{i-2} + ...)) / 2
        const mp::mpfr_float inner = (e + ((i % 2) ? -inv_e : inv_e) - 2 * parity_sum[i % 2]) / 2;
        c = inner * (2 * (i + 1) + 1);
    }
    return out;
}

OracleSeries oracle_mssae(int degree) {
    check_degree(degree);
    OracleSeries out{Benchmark::MSSAE1, std::vector<double>(degree + 1, 0.0)};
    // even i = 2j: (-1)^j Gamma(j - 1/2) / (4 Gamma(-1/2) Gamma(j + 2)); j = 0 gives 1/4,
    // successive ratio -(j - 1/2) / (j + 2).
    double even = 0.25;
    for (int j = 0; 2 * j <= degree; ++j) {
        out.coeffs[2 * j] = even * (4.0 * j + 1.0);
        even *= -(j - 0.5) / (j + 2.0);
    }
    if (degree >= 1) out.coeffs[1] = (1.0 / 6.0) * 3.0;
    return out;
}

OracleSeries oracle_mnssae(int degree) {
    check_degree(degree);
    OracleSeries out{Benchmark::MNSSAE1, std::vector<double>(degree + 1, 0.0)};
    // i = 2j:   (-1)^j Gamma(j - 1/4) Gamma(3/4) / (4 Gamma(-1/4) Gamma(j + 7/4)), j = 0 -> 1/3
    // i = 2j+1: (-1)^j Gamma(j + 1/4) Gamma(5/4) / (4 Gamma(1/4) Gamma(j + 9/4)), j = 0 -> 1/5
    double even = 1.0 / 3.0;
    double odd = 0.2;
    for (int j = 0; 2 * j <= degree; ++j) {
        out.coeffs[2 * j] = even * (4.0 * j + 1.0);
        if (2 * j + 1 <= degree) out.coeffs[2 * j + 1] = odd * (4.0 * j + 3.0);
        even *= -(j - 0.25) / (j + 1.75);
        odd *= -(j + 0.25) / (j + 2.25);
    }
    return out;
}

OracleSeries oracle_series(Benchmark problem, int degree) {
    switch (problem) {
        case Benchmark::SAE1: return oracle_sae(degree);
        case Benchmark::MSSAE1: return oracle_mssae(degree);
        case Benchmark::MNSSAE1: return oracle_mnssae(degree);
        default: throw ConfigError("oracle_series: no analytic coefficients for the oscillator");
    }
}

}  // namespace specabs
