// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "specabs/field.hpp"
#include "specabs/polybasis.hpp"

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace specabs {

/// Nodes and weights over [-1,1]^D with weight function 1.
///
/// `exactness` is the polynomial degree (measured in `exactness_norm` when D = 2)
/// up to which the rule is exact.
struct Rule {
    std::size_t dimension = 1;
    std::vector<double> nodes;  // node q occupies [q*D, (q+1)*D)
    std::vector<double> weights;
    int exactness = 0;
    DegreeNorm exactness_norm = DegreeNorm::Total;
    std::string label;

    [[nodiscard]] std::size_t size() const noexcept { return weights.size(); }
    [[nodiscard]] std::span<const double> node(std::size_t q) const {
        return {nodes.data() + q * dimension, dimension};
    }
};

[[nodiscard]] Rule trapezoid_rule(int m);
/// Throws ConfigError for odd m.
[[nodiscard]] Rule simpson_rule(int m);
/// Nodes cos(j pi / m), j = 0..m.
[[nodiscard]] Rule clenshaw_curtis(int m);
/// m+1 Gauss-Legendre nodes.
[[nodiscard]] Rule gauss_legendre(int m);

/// Cartesian square of clenshaw_curtis(m_c); exact to maximal degree m_c.
[[nodiscard]] Rule tensor_cc_cubature(int m_c);
/// Cartesian square of gauss_legendre(m).
[[nodiscard]] Rule tensor_gauss(int m);

/// Padua points of degree m: (cos(j pi/m), cos(k pi/(m+1))), j+k even.
[[nodiscard]] std::vector<std::array<double, 2>> padua_points(int m_p);
/// Integrates the Padua interpolant; exact to total degree m_p.
[[nodiscard]] Rule padua_cubature(int m_p);

/// sum_q w_q f(x_q). Throws ConfigError on a dimension mismatch.
[[nodiscard]] double integrate(const Rule& rule, const ScalarField& f);

}  // namespace specabs

namespace specabs {

enum class RuleKind { Trapezoid, Simpson, ClenshawCurtis, Gauss, Padua, TensorCC, TensorGauss };

[[nodiscard]] RuleKind parse_rule_kind(std::string_view name);
[[nodiscard]] std::string_view rule_kind_name(RuleKind kind) noexcept;
/// Dimension the rule family lives in (1 or 2).
[[nodiscard]] std::size_t rule_kind_dimension(RuleKind kind) noexcept;
[[nodiscard]] Rule make_rule(RuleKind kind, int size);

}  // namespace specabs
