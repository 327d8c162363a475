// SPDX-License-Identifier: Apache-2.0
#include "specabs/problems.hpp"

#include "specabs/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

namespace specabs {

namespace {

void check_unit_interval(double omega, const char* who) {
    if (!(omega >= -1.0 && omega <= 1.0)) {
        throw DomainError(std::string(who) + ": omega must lie in [-1, 1]");
    }
}

}  // namespace

double sae_abscissa(double omega) {
    check_unit_interval(omega, "sae_abscissa");
    return std::exp(omega);
}

double mssae_abscissa(double omega) {
    check_unit_interval(omega, "mssae_abscissa");
    return omega > 0.0 ? omega : 0.0;
}

double mnssae_abscissa(double omega) {
    check_unit_interval(omega, "mnssae_abscissa");
    return omega > 0.0 ? std::sqrt(omega) : 0.0;
}

double matrix2x2_abscissa(double a11, double a12, double a21, double a22) {
    if (!std::isfinite(a11) || !std::isfinite(a12) || !std::isfinite(a21) ||
        !std::isfinite(a22)) {
        throw DomainError("matrix2x2_abscissa: non-finite entry");
    }
    // eigenvalues: (a11 + a22)/2 +- sqrt(((a11 - a22)/2)^2 + a12 a21)
    const double half_trace = 0.5 * (a11 + a22);
    const double half_gap = 0.5 * (a11 - a22);
    const double disc = half_gap * half_gap + a12 * a21;
    return disc >= 0.0 ? half_trace + std::sqrt(disc) : half_trace;
}

std::complex<double> oscillator_char(const DelayOscillator& osc, std::complex<double> lambda) {
    const double w1 = osc.omega1;
    const double w2 = osc.omega2;
    return lambda * lambda + 2.0 * w1 * w2 * lambda + w1 * w1 -
           (osc.k1 + osc.k2 * lambda) * std::exp(-lambda * osc.tau);
}

std::complex<double> oscillator_char_derivative(const DelayOscillator& osc,
                                                std::complex<double> lambda) {
    const auto decay = std::exp(-lambda * osc.tau);
    return 2.0 * lambda + 2.0 * osc.omega1 * osc.omega2 +
           osc.tau * (osc.k1 + osc.k2 * lambda) * decay - osc.k2 * decay;
}

Eigen::MatrixXd discretize_dde(const DelayOscillator& osc, int n) {
    if (n < 4) throw ConfigError("discretize_dde: N must be at least 4");
    if (!(osc.tau > 0.0)) throw ConfigError("discretize_dde: delay must be positive");

    const int pts = n + 1;
    Eigen::VectorXd x(pts);
    for (int j = 0; j < pts; ++j) x(j) = std::cos(j * std::numbers::pi / n);

    // Chebyshev differentiation matrix on x, then rescaled to theta = tau (x - 1) / 2.
    Eigen::MatrixXd diff = Eigen::MatrixXd::Zero(pts, pts);
    auto weight = [n](int j) { return ((j == 0 || j == n) ? 2.0 : 1.0) * (j % 2 ? -1.0 : 1.0); };
    for (int i = 0; i < pts; ++i) {
        double row_sum = 0.0;
        for (int j = 0; j < pts; ++j) {
            if (i == j) continue;
            diff(i, j) = weight(i) / weight(j) / (x(i) - x(j));
            row_sum += diff(i, j);
        }
        diff(i, i) = -row_sum;
    }
    diff *= 2.0 / osc.tau;

    const int size = 2 * pts;
    Eigen::MatrixXd gen = Eigen::MatrixXd::Zero(size, size);
    // theta_0 = 0 carries the right-hand side A0 x(t) + A1 x(t - tau).
    gen(0, 1) = 1.0;
    gen(1, 0) = -osc.omega1 * osc.omega1;
    gen(1, 1) = -2.0 * osc.omega1 * osc.omega2;
    gen(1, 2 * n) += osc.k1;
    gen(1, 2 * n + 1) += osc.k2;
    for (int i = 1; i < pts; ++i) {
        for (int j = 0; j < pts; ++j) {
            gen(2 * i, 2 * j) = diff(i, j);
            gen(2 * i + 1, 2 * j + 1) = diff(i, j);
        }
    }
    return gen;
}

namespace {

constexpr double kCandidateBand = 0.1;
constexpr double kNewtonTol = 1e-12;
constexpr int kNewtonMaxIter = 50;

std::vector<std::complex<double>> discrete_roots(const DelayOscillator& osc, int n) {
    Eigen::EigenSolver<Eigen::MatrixXd> solver(discretize_dde(osc, n), false);
    if (solver.info() != Eigen::Success) {
        throw NumericalError("spectral_abscissa_dde: eigenvalue solver failed");
    }
    const auto& ev = solver.eigenvalues();
    return {ev.data(), ev.data() + ev.size()};
}

std::complex<double> rightmost(const std::vector<std::complex<double>>& roots) {
    return *std::max_element(roots.begin(), roots.end(), [](auto a, auto b) {
        return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
    });
}

bool newton(const DelayOscillator& osc, std::complex<double>& lambda) {
    for (int it = 0; it <= kNewtonMaxIter; ++it) {
        const auto h = oscillator_char(osc, lambda);
        if (!std::isfinite(h.real()) || !std::isfinite(h.imag())) return false;
        if (std::abs(h) < kNewtonTol) return true;
        if (it == kNewtonMaxIter) break;
        const auto dh = oscillator_char_derivative(osc, lambda);
        if (dh == 0.0) return false;
        lambda -= h / dh;
    }
    return false;
}

std::complex<double> upper(std::complex<double> z) { return {z.real(), std::abs(z.imag())}; }

}  // namespace

AbscissaResult spectral_abscissa_dde(const DelayOscillator& osc, int n, bool refine) {
    AbscissaResult result;
    const auto roots = discrete_roots(osc, n);
    const auto raw = rightmost(roots);

    if (!refine) {
        const auto fine = rightmost(discrete_roots(osc, 2 * n));
        result.value = fine.real();
        result.root = upper(fine);
        result.residual = std::abs(oscillator_char(osc, result.root));
        result.reduced_accuracy = std::abs(fine.real() - raw.real()) > 1e-6;
        return result;
    }

    bool found = false;
    for (const auto& z : roots) {
        if (z.real() < raw.real() - kCandidateBand || z.imag() < 0.0) continue;
        auto lambda = z;
        if (!newton(osc, lambda)) continue;
        lambda = upper(lambda);
        if (!found || lambda.real() > result.root.real()) {
            result.root = lambda;
            found = true;
        }
    }

    if (found) {
        result.value = result.root.real();
        result.refined = true;
    } else {
        result.value = raw.real();
        result.root = upper(raw);
        result.reduced_accuracy = true;
    }
    result.residual = std::abs(oscillator_char(osc, result.root));
    return result;
}

Benchmark parse_benchmark(std::string_view name) {
    static constexpr std::array kAll = {Benchmark::SAE1,    Benchmark::MSSAE1,
                                        Benchmark::MNSSAE1, Benchmark::OSC_SAE,
                                        Benchmark::OSC_MSSAE, Benchmark::OSC_MNSSAE};
    for (auto b : kAll) {
        if (benchmark_name(b) == name) return b;
    }
    throw ConfigError("unknown benchmark '" + std::string(name) + "'");
}

std::string_view benchmark_name(Benchmark b) noexcept {
    switch (b) {
        case Benchmark::SAE1: return "SAE1";
        case Benchmark::MSSAE1: return "MSSAE1";
        case Benchmark::MNSSAE1: return "MNSSAE1";
        case Benchmark::OSC_SAE: return "OSC_SAE";
        case Benchmark::OSC_MSSAE: return "OSC_MSSAE";
        case Benchmark::OSC_MNSSAE: return "OSC_MNSSAE";
    }
    return "?";
}

std::size_t benchmark_dimension(Benchmark b) noexcept {
    switch (b) {
        case Benchmark::SAE1:
        case Benchmark::MSSAE1:
        case Benchmark::MNSSAE1: return 1;
        default: return 2;
    }
}

ParamDomain oscillator_domain() { return ParamDomain({0.9, 0.1}, {1.1, 0.2}); }

DelayOscillator oscillator_for(Benchmark b, double omega1, double omega2) {
    DelayOscillator osc{omega1, omega2, 0.0, 0.0, 1.0};
    switch (b) {
        case Benchmark::OSC_SAE: osc.k1 = 0.2; osc.k2 = 0.2; break;
        case Benchmark::OSC_MSSAE: osc.k1 = 0.5105; osc.k2 = -0.0918; break;
        case Benchmark::OSC_MNSSAE: osc.k1 = 0.6179; osc.k2 = -0.0072; break;
        default: throw ConfigError("oscillator_for: not an oscillator benchmark");
    }
    return osc;
}

ScalarField benchmark_field(Benchmark b, int dde_n) {
    switch (b) {
        case Benchmark::SAE1:
            return ScalarField(1, [](std::span<const double> p) { return sae_abscissa(p[0]); });
        case Benchmark::MSSAE1:
            return ScalarField(1, [](std::span<const double> p) { return mssae_abscissa(p[0]); });
        case Benchmark::MNSSAE1:
            return ScalarField(1, [](std::span<const double> p) { return mnssae_abscissa(p[0]); });
        default: break;
    }
    if (dde_n < 4) throw ConfigError("benchmark_field: DDE discretization N must be at least 4");
    const auto domain = oscillator_domain();
    return ScalarField(2, [b, dde_n, domain](std::span<const double> ref) {
        for (double r : ref) {
            if (!(r >= -1.0 && r <= 1.0)) {
                throw DomainError("benchmark_field: point outside the reference square");
            }
        }
        const auto w = domain.from_reference(ref);
        return spectral_abscissa_dde(oscillator_for(b, w[0], w[1]), dde_n, true).value;
    });
}

}  // namespace specabs
