// SPDX-License-Identifier: Apache-2.0
#include "specabs/pce.hpp"

#include "specabs/errors.hpp"

namespace specabs {

namespace {

void require_legendre(const CoefficientSet& coeffs, const char* who) {
    if (coeffs.basis.family() != Family::Legendre) {
        throw ConfigError(std::string(who) +
                          ": statistics need Legendre coefficients (use cheb_to_leg first)");
    }
}

ParamSubset support_of(const MultiIndex& idx) {
    ParamSubset s;
    for (std::size_t d = 0; d < idx.size(); ++d) {
        if (idx[d] > 0) s.push_back(static_cast<int>(d) + 1);
    }
    return s;
}

}  // namespace

double pce_mean(const CoefficientSet& coeffs) {
    require_legendre(coeffs, "pce_mean");
    return coeffs.coeffs.at(0);
}

double pce_variance(const CoefficientSet& coeffs) {
    require_legendre(coeffs, "pce_variance");
    double v = 0.0;
    for (std::size_t i = 1; i < coeffs.size(); ++i) {
        const double c = coeffs.coeffs[i];
        v += c * c * legendre_norm_sq(coeffs.basis.index(i));
    }
    return v;
}

SensitivityReport sobol_indices(const CoefficientSet& coeffs) {
    require_legendre(coeffs, "sobol_indices");
    const std::size_t dim = coeffs.basis.dimension();
    SensitivityReport rep;
    rep.mean = pce_mean(coeffs);
    rep.truncation = static_cast<int>(coeffs.size()) - 1;
    rep.total.assign(dim, 0.0);

    // every nonempty subset of {1..D}, as bitmasks
    for (unsigned mask = 1; mask < (1u << dim); ++mask) {
        ParamSubset s;
        for (std::size_t d = 0; d < dim; ++d) {
            if (mask & (1u << d)) s.push_back(static_cast<int>(d) + 1);
        }
        rep.sobol.emplace(std::move(s), 0.0);
    }

    double var = 0.0;
    for (std::size_t i = 1; i < coeffs.size(); ++i) {
        const auto& idx = coeffs.basis.index(i);
        const double c = coeffs.coeffs[i];
        const double part = c * c * legendre_norm_sq(idx);
        var += part;
        rep.sobol[support_of(idx)] += part;
    }
    rep.variance = var;

    if (!(var > 0.0)) {
        rep.degenerate = true;
        for (auto& [s, v] : rep.sobol) v = 0.0;
        return rep;
    }
    for (auto& [subset, v] : rep.sobol) {
        v /= var;
        for (int d : subset) rep.total[d - 1] += v;
    }
    return rep;
}

}  // namespace specabs
