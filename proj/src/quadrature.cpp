// SPDX-License-Identifier: Apache-2.0
#include "specabs/quadrature.hpp"

#include "specabs/errors.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace specabs {

namespace {

Rule make_1d(std::vector<double> nodes, std::vector<double> weights, int exactness,
             std::string label) {
    Rule r;
    r.dimension = 1;
    r.nodes = std::move(nodes);
    r.weights = std::move(weights);
    r.exactness = exactness;
    r.exactness_norm = DegreeNorm::Total;
    r.label = std::move(label);
    return r;
}

std::vector<double> equispaced_nodes(int m) {
    std::vector<double> x(m + 1);
    for (int j = 0; j <= m; ++j) x[j] = -1.0 + 2.0 * j / m;
    x[m] = 1.0;
    return x;
}

Rule tensor_square(const Rule& base, DegreeNorm norm, std::string label) {
    Rule r;
    r.dimension = 2;
    const std::size_t n = base.size();
    r.nodes.reserve(2 * n * n);
    r.weights.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            r.nodes.push_back(base.nodes[i]);
            r.nodes.push_back(base.nodes[j]);
            r.weights.push_back(base.weights[i] * base.weights[j]);
        }
    }
    r.exactness = base.exactness;
    r.exactness_norm = norm;
    r.label = std::move(label);
    return r;
}

}  // namespace

Rule trapezoid_rule(int m) {
    if (m < 1) throw ConfigError("trapezoid_rule: M must be at least 1");
    const double h = 2.0 / m;
    std::vector<double> w(m + 1, h);
    w.front() = w.back() = 0.5 * h;
    return make_1d(equispaced_nodes(m), std::move(w), 1, "trapezoid(" + std::to_string(m) + ")");
}

Rule simpson_rule(int m) {
    if (m < 2 || m % 2 != 0) {
        throw ConfigError("simpson_rule: M must be an even number >= 2 (got " +
                          std::to_string(m) + ")");
    }
    const double h = 2.0 / m;
    std::vector<double> w(m + 1);
    for (int j = 0; j <= m; ++j) {
        const double c = (j == 0 || j == m) ? 1.0 : (j % 2 ? 4.0 : 2.0);
        w[j] = c * h / 3.0;
    }
    return make_1d(equispaced_nodes(m), std::move(w), 3, "simpson(" + std::to_string(m) + ")");
}

Rule clenshaw_curtis(int m) {
    if (m < 1) throw ConfigError("clenshaw_curtis: M must be at least 1");
    std::vector<double> x(m + 1);
    std::vector<double> w(m + 1);
    for (int j = 0; j <= m; ++j) {
        x[j] = std::cos(j * std::numbers::pi / m);
        double s = 1.0;
        for (int k = 1; 2 * k <= m; ++k) {
            const double b = (2 * k == m) ? 1.0 : 2.0;
            s -= b / (4.0 * k * k - 1.0) * std::cos(2.0 * k * j * std::numbers::pi / m);
        }
        w[j] = ((j == 0 || j == m) ? 1.0 : 2.0) * s / m;
    }
    // cos(j pi / m) loses symmetry in the last bits; pin it.
    for (int j = 0; 2 * j <= m; ++j) {
        const double v = 0.5 * (x[j] - x[m - j]);
        x[j] = v;
        x[m - j] = -v;
    }
    if (m % 2 == 0) x[m / 2] = 0.0;
    return make_1d(std::move(x), std::move(w), m, "clenshaw_curtis(" + std::to_string(m) + ")");
}

Rule gauss_legendre(int m) {
    if (m < 0) throw ConfigError("gauss_legendre: M must be non-negative");
    const int n = m + 1;
    if (n == 1) return make_1d({0.0}, {2.0}, 1, "gauss_legendre(0)");

    // Golub-Welsch: eigenvalues of the symmetric Jacobi matrix ...
    Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
    Eigen::VectorXd sub(n - 1);
    for (int k = 1; k < n; ++k) sub(k - 1) = k / std::sqrt(4.0 * k * k - 1.0);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw NumericalError("gauss_legendre: Jacobi eigenvalue solver failed");
    }
    std::vector<double> x(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
    std::sort(x.begin(), x.end());

    // ... polished by Newton on P_n, with weights 2 / ((1 - x^2) P_n'(x)^2).
    auto legendre_pair = [n](double t, double& pn, double& dpn) {
        double prev = 1.0;
        double cur = t;
        for (int k = 1; k < n; ++k) {
            const double next = ((2.0 * k + 1.0) * t * cur - k * prev) / (k + 1.0);
            prev = cur;
            cur = next;
        }
        pn = cur;
        dpn = n * (t * cur - prev) / (t * t - 1.0);
    };
    std::vector<double> w(n);
    for (int i = 0; i < n; ++i) {
        double pn = 0.0;
        double dpn = 0.0;
        for (int it = 0; it < 3; ++it) {
            legendre_pair(x[i], pn, dpn);
            x[i] -= pn / dpn;
        }
        legendre_pair(x[i], pn, dpn);
        w[i] = 2.0 / ((1.0 - x[i] * x[i]) * dpn * dpn);
    }
    for (int i = 0; 2 * i < n; ++i) {
        const double v = 0.5 * (x[n - 1 - i] - x[i]);
        const double u = 0.5 * (w[i] + w[n - 1 - i]);
        x[i] = -v;
        x[n - 1 - i] = v;
        w[i] = w[n - 1 - i] = u;
    }
    if (n % 2 == 1) x[n / 2] = 0.0;
    return make_1d(std::move(x), std::move(w), 2 * m + 1,
                   "gauss_legendre(" + std::to_string(m) + ")");
}

Rule tensor_cc_cubature(int m_c) {
    return tensor_square(clenshaw_curtis(m_c), DegreeNorm::Maximal,
                         "tensor_cc(" + std::to_string(m_c) + ")");
}

Rule tensor_gauss(int m) {
    return tensor_square(gauss_legendre(m), DegreeNorm::Maximal,
                         "tensor_gauss(" + std::to_string(m) + ")");
}

std::vector<std::array<double, 2>> padua_points(int m_p) {
    if (m_p < 1) throw ConfigError("padua_points: degree must be at least 1");
    std::vector<std::array<double, 2>> pts;
    pts.reserve(static_cast<std::size_t>(m_p + 1) * (m_p + 2) / 2);
    for (int j = 0; j <= m_p; ++j) {
        const double x = std::cos(j * std::numbers::pi / m_p);
        for (int k = (j % 2); k <= m_p + 1; k += 2) {
            pts.push_back({x, std::cos(k * std::numbers::pi / (m_p + 1))});
        }
    }
    return pts;
}

namespace {

// 1/(n(n+1)) times 1/2 (vertex), 1 (edge) or 2 (interior).
double padua_base_weight(int j, int k, int n) {
    double mult = 2.0;
    if (j == 0 || j == n) mult *= 0.5;
    if (k == 0 || k == n + 1) mult *= 0.5;
    return mult / (static_cast<double>(n) * (n + 1));
}

// Integral over [-1,1] of the normalized Chebyshev polynomial (sqrt 2 T_j for j > 0).
double normalized_cheb_moment(int j) {
    if (j % 2) return 0.0;
    if (j == 0) return 2.0;
    return std::numbers::sqrt2 * 2.0 / (1.0 - static_cast<double>(j) * j);
}

}  // namespace

Rule padua_cubature(int m_p) {
    const auto pts = padua_points(m_p);
    const int n = m_p;
    Rule r;
    r.dimension = 2;
    r.exactness = m_p;
    r.exactness_norm = DegreeNorm::Total;
    r.label = "padua(" + std::to_string(m_p) + ")";
    r.nodes.reserve(2 * pts.size());
    r.weights.reserve(pts.size());

    std::vector<double> mom(n + 1);
    for (int j = 0; j <= n; ++j) mom[j] = normalized_cheb_moment(j);

    // weight = w_xi * sum_{j+k<=n} mom_j mom_k That_j(x) That_k(y), with the (n, 0)
    // term halved; inner k-sums are accumulated once per point.
    std::vector<double> tx(n + 1), ty(n + 1), partial(n + 1);
    std::size_t q = 0;
    for (int j = 0; j <= n; ++j) {
        for (int k = (j % 2); k <= n + 1; k += 2, ++q) {
            const auto [x, y] = pts[q];
            const double ax = j * std::numbers::pi / n;
            const double ay = k * std::numbers::pi / (n + 1);
            for (int i = 0; i <= n; ++i) {
                const double s = i == 0 ? 1.0 : std::numbers::sqrt2;
                tx[i] = s * std::cos(i * ax);
                ty[i] = s * std::cos(i * ay);
            }
            double acc = 0.0;
            for (int i = 0; i <= n; ++i) {
                acc += mom[i] * ty[i];
                partial[i] = acc;
            }
            double sum = 0.0;
            for (int i = 0; i <= n; ++i) sum += mom[i] * tx[i] * partial[n - i];
            sum -= 0.5 * mom[n] * tx[n] * mom[0] * ty[0];
            r.nodes.push_back(x);
            r.nodes.push_back(y);
            r.weights.push_back(padua_base_weight(j, k, n) * sum);
        }
    }
    return r;
}

double integrate(const Rule& rule, const ScalarField& f) {
    if (rule.dimension != f.dimension()) {
        throw ConfigError("integrate: rule and field dimensions differ");
    }
    double sum = 0.0;
    for (std::size_t q = 0; q < rule.size(); ++q) sum += rule.weights[q] * f(rule.node(q));
    return sum;
}

}  // namespace specabs

namespace specabs {

RuleKind parse_rule_kind(std::string_view name) {
    if (name == "trapezoid") return RuleKind::Trapezoid;
    if (name == "simpson") return RuleKind::Simpson;
    if (name == "cc" || name == "clenshaw_curtis") return RuleKind::ClenshawCurtis;
    if (name == "gauss") return RuleKind::Gauss;
    if (name == "padua") return RuleKind::Padua;
    if (name == "tensor" || name == "tensor_cc") return RuleKind::TensorCC;
    if (name == "tensor_gauss") return RuleKind::TensorGauss;
    throw ConfigError("unknown rule '" + std::string(name) + "'");
}

std::string_view rule_kind_name(RuleKind kind) noexcept {
    switch (kind) {
        case RuleKind::Trapezoid: return "trapezoid";
        case RuleKind::Simpson: return "simpson";
        case RuleKind::ClenshawCurtis: return "cc";
        case RuleKind::Gauss: return "gauss";
        case RuleKind::Padua: return "padua";
        case RuleKind::TensorCC: return "tensor";
        case RuleKind::TensorGauss: return "tensor_gauss";
    }
    return "?";
}

std::size_t rule_kind_dimension(RuleKind kind) noexcept {
    switch (kind) {
        case RuleKind::Padua:
        case RuleKind::TensorCC:
        case RuleKind::TensorGauss: return 2;
        default: return 1;
    }
}

Rule make_rule(RuleKind kind, int size) {
    switch (kind) {
        case RuleKind::Trapezoid: return trapezoid_rule(size);
        case RuleKind::Simpson: return simpson_rule(size);
        case RuleKind::ClenshawCurtis: return clenshaw_curtis(size);
        case RuleKind::Gauss: return gauss_legendre(size);
        case RuleKind::Padua: return padua_cubature(size);
        case RuleKind::TensorCC: return tensor_cc_cubature(size);
        case RuleKind::TensorGauss: return tensor_gauss(size);
    }
    throw ConfigError("make_rule: unknown rule kind");
}

}  // namespace specabs
