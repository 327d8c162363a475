// SPDX-License-Identifier: Apache-2.0
#include "specabs/polybasis.hpp"

#include "specabs/errors.hpp"
#include "specabs/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace specabs {

std::string_view family_name(Family f) noexcept {
    return f == Family::Legendre ? "legendre" : "chebyshev";
}

std::string_view norm_name(DegreeNorm n) noexcept {
    return n == DegreeNorm::Total ? "total" : "maximal";
}

int MultiIndex::total_degree() const noexcept {
    return std::accumulate(entries.begin(), entries.end(), 0);
}

int MultiIndex::maximal_degree() const noexcept {
    return entries.empty() ? 0 : *std::max_element(entries.begin(), entries.end());
}

int MultiIndex::degree(DegreeNorm norm) const noexcept {
    return norm == DegreeNorm::Total ? total_degree() : maximal_degree();
}

double legendre_eval(int degree, double x) {
    if (degree < 0) throw ConfigError("legendre_eval: negative degree");
    if (degree == 0) return 1.0;
    double prev = 1.0;
    double cur = x;
    for (int k = 1; k < degree; ++k) {
        const double next = ((2.0 * k + 1.0) * x * cur - k * prev) / (k + 1.0);
        prev = cur;
        cur = next;
    }
    return cur;
}

double chebyshev_eval(int degree, double x) {
    if (degree < 0) throw ConfigError("chebyshev_eval: negative degree");
    if (degree == 0) return 1.0;
    double prev = 1.0;
    double cur = x;
    for (int k = 1; k < degree; ++k) {
        const double next = 2.0 * x * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

void eval_family_upto(Family family, int max_degree, double x, std::span<double> out) {
    if (max_degree < 0) return;
    out[0] = 1.0;
    if (max_degree == 0) return;
    out[1] = x;
    for (int k = 1; k < max_degree; ++k) {
        out[k + 1] = family == Family::Legendre
                         ? ((2.0 * k + 1.0) * x * out[k] - k * out[k - 1]) / (k + 1.0)
                         : 2.0 * x * out[k] - out[k - 1];
    }
}

double legendre_norm_sq(int degree) {
    if (degree < 0) throw ConfigError("legendre_norm_sq: negative degree");
    return 1.0 / (2.0 * degree + 1.0);
}

double legendre_norm_sq(const MultiIndex& idx) {
    double n = 1.0;
    for (int i : idx.entries) n *= legendre_norm_sq(i);
    return n;
}

std::uint64_t cantor_pair(std::uint64_t i1, std::uint64_t i2) {
    const std::uint64_t s = i1 + i2;
    return s * (s + 1) / 2 + i1;
}

namespace {

std::uint64_t isqrt(std::uint64_t v) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(v)));
    while (r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}

}  // namespace

std::pair<std::uint64_t, std::uint64_t> cantor_unpair(std::uint64_t k) {
    // largest s with s(s+1)/2 <= k
    std::uint64_t s = (isqrt(8 * k + 1) - 1) / 2;
    const std::uint64_t i1 = k - s * (s + 1) / 2;
    return {i1, s - i1};
}

std::uint64_t rosenberg_pair(std::uint64_t i1, std::uint64_t i2) {
    const std::uint64_t m = std::max(i1, i2);
    return m * m + m + i1 - i2;
}

std::pair<std::uint64_t, std::uint64_t> rosenberg_unpair(std::uint64_t k) {
    const std::uint64_t m = isqrt(k);
    const std::uint64_t base = m * m + m;  // pair(m, m)
    if (k >= base) return {m, m - (k - base)};
    return {m - (base - k), m};
}

std::size_t graded_size(std::size_t dimension, DegreeNorm norm, int degree_bound) {
    if (degree_bound < 0) return 0;
    const auto p = static_cast<std::size_t>(degree_bound);
    if (norm == DegreeNorm::Maximal) {
        std::size_t n = 1;
        for (std::size_t d = 0; d < dimension; ++d) n *= p + 1;
        return n;
    }
    // C(p + D, D)
    std::size_t n = 1;
    for (std::size_t d = 1; d <= dimension; ++d) n = n * (p + d) / d;
    return n;
}

std::vector<MultiIndex> graded_indices(std::size_t dimension, DegreeNorm norm, int degree_bound) {
    if (dimension == 0) throw ConfigError("graded_indices: dimension must be positive");
    if (degree_bound < 0) throw ConfigError("graded_indices: negative degree bound");
    const std::size_t count = graded_size(dimension, norm, degree_bound);
    std::vector<MultiIndex> out;
    out.reserve(count);

    if (dimension == 1) {
        for (int i = 0; i <= degree_bound; ++i) out.push_back(MultiIndex{{i}});
        return out;
    }
    if (dimension == 2) {
        for (std::uint64_t k = 0; k < count; ++k) {
            const auto [a, b] = norm == DegreeNorm::Total ? cantor_unpair(k) : rosenberg_unpair(k);
            out.push_back(MultiIndex{{static_cast<int>(a), static_cast<int>(b)}});
        }
        return out;
    }

    // Odometer over the (P+1)^D box, filtered by norm, then ordered by shell.
    std::vector<int> cur(dimension, 0);
    while (true) {
        MultiIndex idx{cur};
        if (idx.degree(norm) <= degree_bound) out.push_back(std::move(idx));
        auto d = static_cast<std::ptrdiff_t>(dimension) - 1;
        while (d >= 0 && ++cur[d] > degree_bound) cur[d--] = 0;
        if (d < 0) break;
    }
    std::stable_sort(out.begin(), out.end(), [norm](const MultiIndex& a, const MultiIndex& b) {
        return a.degree(norm) < b.degree(norm);
    });
    return out;
}

namespace {

std::uint64_t index_key(const MultiIndex& idx, int degree_bound) {
    std::uint64_t key = 0;
    for (int e : idx.entries) key = key * static_cast<std::uint64_t>(degree_bound + 1) + e;
    return key;
}

}  // namespace

GradedBasis::GradedBasis(Family family, std::size_t dimension, DegreeNorm norm, int degree_bound)
    : family_(family),
      dim_(dimension),
      norm_(norm),
      degree_bound_(degree_bound),
      indices_(graded_indices(dimension, norm, degree_bound)) {
    lookup_.reserve(indices_.size());
    for (std::size_t i = 0; i < indices_.size(); ++i) {
        lookup_.emplace(index_key(indices_[i], degree_bound_), i);
    }
}

std::ptrdiff_t GradedBasis::position(const MultiIndex& idx) const {
    if (idx.size() != dim_ || idx.degree(norm_) > degree_bound_) return -1;
    for (int e : idx.entries) {
        if (e < 0) return -1;
    }
    const auto it = lookup_.find(index_key(idx, degree_bound_));
    return it == lookup_.end() ? -1 : static_cast<std::ptrdiff_t>(it->second);
}

GradedBasis GradedBasis::with_family(Family f) const {
    GradedBasis copy = *this;
    copy.family_ = f;
    return copy;
}

bool GradedBasis::same_layout(const GradedBasis& other) const noexcept {
    return dim_ == other.dim_ && degree_bound_ == other.degree_bound_ &&
           (dim_ == 1 || norm_ == other.norm_);
}

double basis_eval(const GradedBasis& basis, const MultiIndex& idx, std::span<const double> point) {
    if (idx.size() != basis.dimension() || point.size() != basis.dimension()) {
        throw ConfigError("basis_eval: dimension mismatch");
    }
    double v = 1.0;
    for (std::size_t d = 0; d < idx.size(); ++d) {
        v *= basis.family() == Family::Legendre ? legendre_eval(idx[d], point[d])
                                                : chebyshev_eval(idx[d], point[d]);
    }
    return v;
}

CoefficientSet::CoefficientSet(GradedBasis b, std::vector<double> c)
    : basis(std::move(b)), coeffs(std::move(c)) {
    if (coeffs.size() != basis.size()) {
        throw ConfigError("CoefficientSet: coefficient count does not match the basis");
    }
}

namespace {

// Clenshaw summation of sum_k c_k phi_k(x) for phi_{k+1} = a_k phi_k + b_k phi_{k-1}.
double clenshaw_1d(Family family, std::span<const double> c, double x) {
    const int n = static_cast<int>(c.size()) - 1;
    if (n < 0) return 0.0;
    if (n == 0) return c[0];
    auto alpha = [&](int k) {
        return family == Family::Legendre ? (2.0 * k + 1.0) * x / (k + 1.0) : 2.0 * x;
    };
    auto beta = [&](int k) { return family == Family::Legendre ? -k / (k + 1.0) : -1.0; };
    double b1 = 0.0;  // b_{k+1}
    double b2 = 0.0;  // b_{k+2}
    for (int k = n; k >= 1; --k) {
        const double bk = c[k] + alpha(k) * b1 + beta(k + 1) * b2;
        b2 = b1;
        b1 = bk;
    }
    return c[0] + x * b1 + beta(1) * b2;
}

}  // namespace

double CoefficientSet::evaluate(std::span<const double> point) const {
    if (point.size() != basis.dimension()) {
        throw ConfigError("CoefficientSet::evaluate: point dimension mismatch");
    }
    if (basis.dimension() == 1) return clenshaw_1d(basis.family(), coeffs, point[0]);

    const int p = basis.degree_bound();
    const std::size_t dim = basis.dimension();
    std::vector<double> table(dim * static_cast<std::size_t>(p + 1));
    for (std::size_t d = 0; d < dim; ++d) {
        eval_family_upto(basis.family(), p, point[d],
                         std::span<double>(table.data() + d * (p + 1), p + 1));
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        const auto& idx = basis.index(i);
        double term = coeffs[i];
        for (std::size_t d = 0; d < dim; ++d) term *= table[d * (p + 1) + idx[d]];
        sum += term;
    }
    return sum;
}

double CoefficientSet::operator()(double x) const {
    const double p[1] = {x};
    return evaluate(std::span<const double>(p, 1));
}

CoefficientSet cheb_to_leg(const CoefficientSet& cheb) {
    if (cheb.basis.family() != Family::Chebyshev) {
        throw ConfigError("cheb_to_leg: input must be a Chebyshev coefficient set");
    }
    const auto& basis = cheb.basis;
    const int p = basis.degree_bound();
    const std::size_t dim = basis.dimension();
    Rule rule;
    if (dim == 1) {
        rule = gauss_legendre(p);
    } else if (dim == 2) {
        rule = tensor_gauss(p);
    } else {
        throw ConfigError("cheb_to_leg: only D <= 2 is supported");
    }

    GradedBasis leg = basis.with_family(Family::Legendre);
    std::vector<double> out(leg.size(), 0.0);
    std::vector<double> table(dim * static_cast<std::size_t>(p + 1));
    const double rho = std::pow(0.5, static_cast<double>(dim));
    for (std::size_t q = 0; q < rule.size(); ++q) {
        const auto x = rule.node(q);
        const double gq = cheb.evaluate(x) * rule.weights[q] * rho;
        for (std::size_t d = 0; d < dim; ++d) {
            eval_family_upto(Family::Legendre, p, x[d],
                             std::span<double>(table.data() + d * (p + 1), p + 1));
        }
        for (std::size_t i = 0; i < out.size(); ++i) {
            const auto& idx = leg.index(i);
            double v = gq;
            for (std::size_t d = 0; d < dim; ++d) v *= table[d * (p + 1) + idx[d]];
            out[i] += v;
        }
    }
    for (std::size_t i = 0; i < out.size(); ++i) out[i] /= legendre_norm_sq(leg.index(i));
    return CoefficientSet(std::move(leg), std::move(out));
}

}  // namespace specabs
