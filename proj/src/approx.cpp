// SPDX-License-Identifier: Apache-2.0
#include "specabs/approx.hpp"

#include "specabs/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace specabs {

namespace {

// Univariate family values at one point, laid out as table[d * (p+1) + i].
void fill_table(Family family, int p, std::span<const double> x, std::vector<double>& table) {
    table.resize(x.size() * static_cast<std::size_t>(p + 1));
    for (std::size_t d = 0; d < x.size(); ++d) {
        eval_family_upto(family, p, x[d], std::span<double>(table.data() + d * (p + 1), p + 1));
    }
}

std::vector<double> cheb_points(int m) {
    if (m == 0) return {0.0};
    std::vector<double> x(m + 1);
    for (int j = 0; j <= m; ++j) x[j] = std::cos(j * std::numbers::pi / m);
    for (int j = 0; 2 * j <= m; ++j) {
        const double v = 0.5 * (x[j] - x[m - j]);
        x[j] = v;
        x[m - j] = -v;
    }
    if (m % 2 == 0) x[m / 2] = 0.0;
    return x;
}

// Chebyshev coefficients of the interpolant through values at cos(j pi / m).
std::vector<double> cheb_transform(std::span<const double> values) {
    const int m = static_cast<int>(values.size()) - 1;
    if (m == 0) return {values[0]};
    std::vector<double> c(m + 1, 0.0);
    for (int k = 0; k <= m; ++k) {
        double s = 0.0;
        for (int j = 0; j <= m; ++j) {
            const double half = (j == 0 || j == m) ? 0.5 : 1.0;
            // reduce jk mod 2m to keep the cosine argument small
            const long r = (static_cast<long>(j) * k) % (2L * m);
            s += half * values[j] * std::cos(r * std::numbers::pi / m);
        }
        c[k] = s * 2.0 / m * ((k == 0 || k == m) ? 0.5 : 1.0);
    }
    return c;
}

}  // namespace

CoefficientSet galerkin_coeffs(const ScalarField& f, const GradedBasis& basis, const Rule& rule) {
    if (basis.family() != Family::Legendre) {
        throw ConfigError("galerkin_coeffs: the basis must be Legendre (orthogonal for uniform rho)");
    }
    if (rule.dimension != basis.dimension() || f.dimension() != basis.dimension()) {
        throw ConfigError("galerkin_coeffs: rule, field and basis dimensions must agree");
    }
    const int p = basis.degree_bound();
    const std::size_t dim = basis.dimension();
    const double rho = std::pow(0.5, static_cast<double>(dim));
    std::vector<double> acc(basis.size(), 0.0);
    std::vector<double> table;
    for (std::size_t q = 0; q < rule.size(); ++q) {
        const auto x = rule.node(q);
        const double wf = rule.weights[q] * rho * f(x);
        fill_table(Family::Legendre, p, x, table);
        for (std::size_t i = 0; i < acc.size(); ++i) {
            const auto& idx = basis.index(i);
            double v = wf;
            for (std::size_t d = 0; d < dim; ++d) v *= table[d * (p + 1) + idx[d]];
            acc[i] += v;
        }
    }
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] /= legendre_norm_sq(basis.index(i));
    return CoefficientSet(basis, std::move(acc));
}

bool obeys_decoupling(const GradedBasis& basis, const Rule& rule) {
    const int p = basis.degree_bound();
    if (basis.dimension() == 1) return static_cast<int>(rule.size()) - 1 >= p;
    if (rule.exactness_norm == DegreeNorm::Maximal) return rule.exactness >= p;
    // Total-degree exact rule (Padua): a maximal-degree basis needs twice the degree.
    return basis.norm() == DegreeNorm::Total ? rule.exactness >= p : rule.exactness >= 2 * p;
}

CoefficientSet cheb_interp_1d(const ScalarField& f, int degree) {
    if (degree < 0) throw ConfigError("cheb_interp_1d: negative degree");
    if (f.dimension() != 1) throw ConfigError("cheb_interp_1d: field must be one-dimensional");
    const auto x = cheb_points(degree);
    std::vector<double> values(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) values[j] = f(x[j]);
    return CoefficientSet(GradedBasis(Family::Chebyshev, 1, DegreeNorm::Total, degree),
                          cheb_transform(values));
}

CoefficientSet tensor_interp(const ScalarField& f, int m_c) {
    if (m_c < 1) throw ConfigError("tensor_interp: m_c must be at least 1");
    if (f.dimension() != 2) throw ConfigError("tensor_interp: field must be two-dimensional");
    const auto x = cheb_points(m_c);
    const int n = m_c + 1;
    // values[i][j] = f(x_i, x_j); transform along j, then along i
    std::vector<std::vector<double>> rows(n);
    for (int i = 0; i < n; ++i) {
        std::vector<double> v(n);
        for (int j = 0; j < n; ++j) v[j] = f(x[i], x[j]);
        rows[i] = cheb_transform(v);
    }
    std::vector<std::vector<double>> coef(n, std::vector<double>(n));
    for (int b = 0; b < n; ++b) {
        std::vector<double> col(n);
        for (int i = 0; i < n; ++i) col[i] = rows[i][b];
        const auto t = cheb_transform(col);
        for (int a = 0; a < n; ++a) coef[a][b] = t[a];
    }
    GradedBasis basis(Family::Chebyshev, 2, DegreeNorm::Maximal, m_c);
    std::vector<double> c(basis.size());
    for (std::size_t k = 0; k < c.size(); ++k) {
        const auto& idx = basis.index(k);
        c[k] = coef[idx[0]][idx[1]];
    }
    return CoefficientSet(std::move(basis), std::move(c));
}

CoefficientSet padua_interp(const ScalarField& f, int m_p) {
    if (f.dimension() != 2) throw ConfigError("padua_interp: field must be two-dimensional");
    const auto pts = padua_points(m_p);
    const int n = m_p;
    // C[a][b] = sum_xi w_xi f(xi) That_a(x) That_b(y), a + b <= n, then C[n][0] /= 2.
    std::vector<double> c2((n + 1) * (n + 1), 0.0);
    std::vector<double> tx(n + 1), ty(n + 1);
    std::size_t q = 0;
    for (int j = 0; j <= n; ++j) {
        for (int k = (j % 2); k <= n + 1; k += 2, ++q) {
            double mult = 2.0;
            if (j == 0 || j == n) mult *= 0.5;
            if (k == 0 || k == n + 1) mult *= 0.5;
            const double w = mult / (static_cast<double>(n) * (n + 1));
            const double wf = w * f(pts[q][0], pts[q][1]);
            for (int i = 0; i <= n; ++i) {
                const double s = i == 0 ? 1.0 : std::numbers::sqrt2;
                tx[i] = s * std::cos(((static_cast<long>(i) * j) % (2L * n)) * std::numbers::pi / n);
                ty[i] = s * std::cos(((static_cast<long>(i) * k) % (2L * (n + 1))) *
                                     std::numbers::pi / (n + 1));
            }
            for (int a = 0; a <= n; ++a) {
                for (int b = 0; a + b <= n; ++b) c2[a * (n + 1) + b] += wf * tx[a] * ty[b];
            }
        }
    }
    c2[n * (n + 1)] *= 0.5;

    GradedBasis basis(Family::Chebyshev, 2, DegreeNorm::Total, m_p);
    std::vector<double> c(basis.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        const auto& idx = basis.index(i);
        const double sa = idx[0] == 0 ? 1.0 : std::numbers::sqrt2;
        const double sb = idx[1] == 0 ? 1.0 : std::numbers::sqrt2;
        c[i] = c2[idx[0] * (n + 1) + idx[1]] * sa * sb;
    }
    return CoefficientSet(std::move(basis), std::move(c));
}

double eval_approx(const CoefficientSet& coeffs, std::span<const double> point) {
    return coeffs.evaluate(point);
}

std::vector<std::vector<double>> equispaced_grid(std::size_t dimension, int per_dim) {
    if (per_dim < 2) throw ConfigError("equispaced_grid: need at least 2 points per axis");
    if (dimension < 1 || dimension > 2) throw ConfigError("equispaced_grid: D must be 1 or 2");
    std::vector<double> axis(per_dim);
    for (int j = 0; j < per_dim; ++j) axis[j] = -1.0 + 2.0 * j / (per_dim - 1);
    axis.back() = 1.0;
    std::vector<std::vector<double>> grid;
    if (dimension == 1) {
        for (double v : axis) grid.push_back({v});
    } else {
        grid.reserve(static_cast<std::size_t>(per_dim) * per_dim);
        for (double u : axis) {
            for (double v : axis) grid.push_back({u, v});
        }
    }
    return grid;
}

double linf_rel_error(const ScalarField& f, const CoefficientSet& coeffs, int grid_per_dim) {
    if (f.dimension() != coeffs.basis.dimension()) {
        throw ConfigError("linf_rel_error: field and coefficient dimensions differ");
    }
    double max_err = 0.0;
    double max_f = 0.0;
    for (const auto& x : equispaced_grid(f.dimension(), grid_per_dim)) {
        const double fx = f(x);
        max_err = std::max(max_err, std::abs(fx - coeffs.evaluate(x)));
        max_f = std::max(max_f, std::abs(fx));
    }
    // identically zero field: report the absolute error
    return max_f > 0.0 ? max_err / max_f : max_err;
}

double fit_rate(const std::vector<ErrorRecord>& records, int lo, int hi) {
    std::vector<std::pair<double, double>> pts;
    for (const auto& r : records) {
        if (r.degree < lo || r.degree > hi || r.degree <= 0) continue;
        if (!(r.rel_linf_error > 0.0) || !std::isfinite(r.rel_linf_error)) continue;
        pts.emplace_back(std::log(static_cast<double>(r.degree)), std::log(r.rel_linf_error));
    }
    if (pts.size() < 4) {
        throw InsufficientDataError("fit_rate: need at least 4 positive errors in [" +
                                    std::to_string(lo) + ", " + std::to_string(hi) + "], have " +
                                    std::to_string(pts.size()));
    }
    double mx = 0.0;
    double my = 0.0;
    for (auto [x, y] : pts) {
        mx += x;
        my += y;
    }
    mx /= static_cast<double>(pts.size());
    my /= static_cast<double>(pts.size());
    double sxy = 0.0;
    double sxx = 0.0;
    for (auto [x, y] : pts) {
        sxy += (x - mx) * (y - my);
        sxx += (x - mx) * (x - mx);
    }
    if (sxx == 0.0) throw InsufficientDataError("fit_rate: all degrees coincide");
    return sxy / sxx;
}

double fit_rate(const std::vector<ErrorRecord>& records) {
    if (records.empty()) throw InsufficientDataError("fit_rate: no records");
    auto [lo_it, hi_it] = std::minmax_element(
        records.begin(), records.end(),
        [](const ErrorRecord& a, const ErrorRecord& b) { return a.degree < b.degree; });
    const int mid = (lo_it->degree + hi_it->degree) / 2;
    return fit_rate(records, mid, hi_it->degree);
}

double coeff_error_sum(const CoefficientSet& reference, const CoefficientSet& test) {
    if (reference.basis.family() != test.basis.family() ||
        !reference.basis.same_layout(test.basis)) {
        throw ConfigError("coeff_error_sum: coefficient sets use different bases");
    }
    double s = 0.0;
    for (std::size_t i = 0; i < reference.size(); ++i) s += std::abs(reference.coeffs[i] - test.coeffs[i]);
    return s;
}

double rho_norm_error(const ScalarField& f, const CoefficientSet& coeffs, int gauss_m) {
    const std::size_t dim = f.dimension();
    const Rule rule = dim == 1 ? gauss_legendre(gauss_m) : tensor_gauss(gauss_m);
    const double rho = std::pow(0.5, static_cast<double>(dim));
    double s = 0.0;
    for (std::size_t q = 0; q < rule.size(); ++q) {
        const auto x = rule.node(q);
        const double e = f(x) - coeffs.evaluate(x);
        s += rule.weights[q] * rho * e * e;
    }
    return std::sqrt(s);
}

Method parse_method(std::string_view name) {
    if (name == "galerkin") return Method::Galerkin;
    if (name == "collocation") return Method::Collocation;
    throw ConfigError("unknown method '" + std::string(name) + "'");
}

std::string_view method_name(Method m) noexcept {
    return m == Method::Galerkin ? "galerkin" : "collocation";
}

ApproxResult build_approx(const ScalarField& f, const ApproxConfig& config) {
    const auto& basis = config.basis;
    if (f.dimension() != basis.dimension()) {
        throw ConfigError("build_approx: field and basis dimensions differ");
    }
    if (config.method == Method::Galerkin) {
        if (!config.rule) throw ConfigError("build_approx: Galerkin needs a quadrature rule");
        return {galerkin_coeffs(f, basis.with_family(Family::Legendre), *config.rule),
                !obeys_decoupling(basis, *config.rule)};
    }
    const int p = basis.degree_bound();
    if (basis.dimension() == 1) return {cheb_interp_1d(f, p), false};
    if (basis.dimension() != 2) throw ConfigError("build_approx: collocation supports D <= 2");
    if (p < 1) throw ConfigError("build_approx: 2-D collocation needs degree >= 1");
    return {basis.norm() == DegreeNorm::Total ? padua_interp(f, p) : tensor_interp(f, p), false};
}

}  // namespace specabs
