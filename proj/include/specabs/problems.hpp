// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "specabs/field.hpp"

#include <Eigen/Dense>

#include <complex>
#include <string_view>

namespace specabs {

// Closed-form spectral abscissae of the three 2x2 one-parameter problems on [-1,1].
// All throw DomainError outside [-1,1].
[[nodiscard]] double sae_abscissa(double omega);    // e^omega
[[nodiscard]] double mssae_abscissa(double omega);  // max(0, omega)
[[nodiscard]] double mnssae_abscissa(double omega); // sqrt(max(0, omega))

/// Largest real part of the eigenvalues of [[a11, a12], [a21, a22]].
[[nodiscard]] double matrix2x2_abscissa(double a11, double a12, double a21, double a22);

/// x'' = -w1^2 x - 2 w1 w2 x' + K1 x(t - tau) + K2 x'(t - tau)
struct DelayOscillator {
    double omega1 = 1.0;  // angular frequency
    double omega2 = 0.0;  // damping ratio
    double k1 = 0.0;      // position gain
    double k2 = 0.0;      // velocity gain
    double tau = 1.0;
};

/// Characteristic function h(lambda) of the oscillator.
[[nodiscard]] std::complex<double> oscillator_char(const DelayOscillator& osc,
                                                   std::complex<double> lambda);
/// d h / d lambda.
[[nodiscard]] std::complex<double> oscillator_char_derivative(const DelayOscillator& osc,
                                                              std::complex<double> lambda);

/// Pseudospectral collocation of the infinitesimal generator of the first-order
/// form on N+1 Chebyshev points of the second kind in [-tau, 0].
/// Returns a 2(N+1) x 2(N+1) matrix. Throws ConfigError for N < 4.
[[nodiscard]] Eigen::MatrixXd discretize_dde(const DelayOscillator& osc, int n);

struct AbscissaResult {
    double value = 0.0;
    std::complex<double> root;      // rightmost root (upper half plane representative)
    double residual = 0.0;          // |h(root)|
    bool refined = false;
    bool reduced_accuracy = false;  // Newton failed everywhere, or self-check disagreed
};

/// Rightmost-root real part of the oscillator.
///
/// With refine, every discrete eigenvalue within 0.1 of the rightmost one seeds a
/// Newton iteration on h (|h| < 1e-12, at most 50 steps). Without refine the
/// discretization is repeated at 2N and the finer value is returned.
[[nodiscard]] AbscissaResult spectral_abscissa_dde(const DelayOscillator& osc, int n,
                                                   bool refine = true);

enum class Benchmark { SAE1, MSSAE1, MNSSAE1, OSC_SAE, OSC_MSSAE, OSC_MNSSAE };

[[nodiscard]] Benchmark parse_benchmark(std::string_view name);
[[nodiscard]] std::string_view benchmark_name(Benchmark b) noexcept;
[[nodiscard]] std::size_t benchmark_dimension(Benchmark b) noexcept;

/// Physical parameter box of the oscillator benchmarks: [0.9,1.1] x [0.1,0.2].
[[nodiscard]] ParamDomain oscillator_domain();
/// Oscillator with the control gains of the given benchmark at physical (w1, w2).
[[nodiscard]] DelayOscillator oscillator_for(Benchmark b, double omega1, double omega2);

inline constexpr int kDefaultDdeN = 20;

/// Field over the reference cube. For the oscillator variants the reference point
/// is mapped through oscillator_domain() and evaluated with refined DDE roots.
[[nodiscard]] ScalarField benchmark_field(Benchmark b, int dde_n = kDefaultDdeN);

}  // namespace specabs
