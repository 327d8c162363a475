// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "specabs/field.hpp"
#include "specabs/polybasis.hpp"
#include "specabs/quadrature.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace specabs {

/// Projection coefficients c_i = <f, p_i>_rho / <p_i, p_i>_rho with the inner
/// product evaluated by `rule` and rho = 2^-D. f is evaluated once per node.
[[nodiscard]] CoefficientSet galerkin_coeffs(const ScalarField& f, const GradedBasis& basis,
                                             const Rule& rule);

/// True when the rule is large enough for the basis: 1-D M >= P, and in 2-D the
/// rule's exactness norm and degree cover the basis (Padua m_p >= P_d for
/// Total, tensor m_c >= P_d for either grading).
[[nodiscard]] bool obeys_decoupling(const GradedBasis& basis, const Rule& rule);

/// Chebyshev interpolant at the P+1 points cos(j pi / P) (x = 0 for P = 0).
[[nodiscard]] CoefficientSet cheb_interp_1d(const ScalarField& f, int degree);
/// Total-degree Chebyshev interpolant on the Padua points of degree m_p.
[[nodiscard]] CoefficientSet padua_interp(const ScalarField& f, int m_p);
/// Maximal-degree Chebyshev interpolant on the (m_c+1)^2 tensor grid.
[[nodiscard]] CoefficientSet tensor_interp(const ScalarField& f, int m_c);

[[nodiscard]] double eval_approx(const CoefficientSet& coeffs, std::span<const double> point);

/// Equispaced grid with `per_dim` points per axis, endpoints included.
[[nodiscard]] std::vector<std::vector<double>> equispaced_grid(std::size_t dimension,
                                                               int per_dim);

/// max |f - approx| / max |f| over the equispaced grid.
[[nodiscard]] double linf_rel_error(const ScalarField& f, const CoefficientSet& coeffs,
                                    int grid_per_dim);

struct ErrorRecord {
    int degree = 0;
    std::size_t n_coeffs = 0;
    double rel_linf_error = 0.0;
    std::optional<double> coeff_error;
};

/// Least-squares slope of log(error) against log(degree) over records with
/// degree in [lo, hi] and a positive error. Needs at least four such records.
[[nodiscard]] double fit_rate(const std::vector<ErrorRecord>& records, int lo, int hi);
/// Same, over the upper half of the degree range.
[[nodiscard]] double fit_rate(const std::vector<ErrorRecord>& records);

/// sum_i |reference_i - test_i|; the two sets must share basis and grading.
[[nodiscard]] double coeff_error_sum(const CoefficientSet& reference, const CoefficientSet& test);

/// rho-norm of f - approx estimated with a Gauss rule of m+1 points per axis.
[[nodiscard]] double rho_norm_error(const ScalarField& f, const CoefficientSet& coeffs,
                                    int gauss_m = 200);

}  // namespace specabs

namespace specabs {

enum class Method { Galerkin, Collocation };

[[nodiscard]] Method parse_method(std::string_view name);
[[nodiscard]] std::string_view method_name(Method m) noexcept;

/// One approximation build. `rule` is used by Galerkin only; collocation picks its
/// nodes from the basis (Chebyshev points, Padua points for Total, tensor grid for
/// Maximal).
struct ApproxConfig {
    Method method = Method::Galerkin;
    GradedBasis basis{Family::Legendre, 1, DegreeNorm::Total, 0};
    std::optional<Rule> rule;
};

struct ApproxResult {
    CoefficientSet coeffs;
    bool decoupling_violated = false;  // Galerkin rule too small for the basis
};

[[nodiscard]] ApproxResult build_approx(const ScalarField& f, const ApproxConfig& config);

}  // namespace specabs
