// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "specabs/approx.hpp"
#include "specabs/pce.hpp"
#include "specabs/problems.hpp"
#include "specabs/quadrature.hpp"

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace specabs {

enum class Study { Converge, QuadStudy, Stats, Eval, Approx };
enum class Parity { All, Odd, Even };
/// Galerkin and collocation as in approx; Oracle uses the exact 1-D series.
enum class StudyMethod { Galerkin, Collocation, Oracle };

[[nodiscard]] Study parse_study(std::string_view name);
[[nodiscard]] std::string_view study_name(Study s) noexcept;

struct StudySpec {
    std::optional<Study> study;
    std::optional<Benchmark> problem;
    StudyMethod method = StudyMethod::Galerkin;
    DegreeNorm basis_norm = DegreeNorm::Total;
    int degree_start = 1;
    int degree_stop = 20;
    int degree_step = 1;
    bool step_doubling = false;  // degree_step=x2
    Parity parity = Parity::All;
    std::optional<RuleKind> rule;
    std::optional<int> rule_size;  // unset: chosen per degree
    int grid = 0;                  // points per axis; 0 picks 10001 (1-D) or 201 (2-D)
    int dde_n = kDefaultDdeN;
    std::string out = "-";
};

inline constexpr int kReferencePadua = 199;
inline constexpr int kReferenceTensor = 141;
inline constexpr int kGalerkinFloor2d = 64;

/// Sets one key from its textual value. Throws ConfigError naming the key.
void set_key(StudySpec& spec, std::string_view key, std::string_view value);

/// key=value lines, '#' starts a comment. Errors carry the 1-based line number.
[[nodiscard]] StudySpec parse_config_text(std::string_view text);
[[nodiscard]] StudySpec parse_config(const std::filesystem::path& path);

/// Checks cross-key consistency; throws ConfigError.
void validate(const StudySpec& spec);

/// Degrees (or rule sizes for quad-study) in sweep order after the parity filter.
[[nodiscard]] std::vector<int> sweep_values(const StudySpec& spec);

[[nodiscard]] int grid_points(const StudySpec& spec);

/// Echo of every key with its resolved value, in a fixed order.
[[nodiscard]] std::vector<std::pair<std::string, std::string>> spec_echo(const StudySpec& spec);

/// The rule a Galerkin build at this degree uses: the explicit rule if given,
/// otherwise Gauss(4P) in 1-D and Padua/tensor of size max(P_d, 64) in 2-D.
[[nodiscard]] Rule galerkin_rule(const StudySpec& spec, int degree);

struct ConvergeRow {
    ErrorRecord record;
    double wall_ms = 0.0;
    bool decoupling_violated = false;
};

struct QuadRow {
    int size = 0;
    std::optional<double> abs_c0_error;
    std::string warning;
};

/// Field for the configured problem (memoized in 2-D).
[[nodiscard]] ScalarField study_field(const StudySpec& spec);

/// One approximation at the given degree.
[[nodiscard]] CoefficientSet study_build(const StudySpec& spec, const ScalarField& f, int degree,
                                         bool* decoupling_violated = nullptr);

[[nodiscard]] std::vector<ConvergeRow> run_converge(const StudySpec& spec);

/// c_0 of the benchmark: the oracle in 1-D, a capped high-order rule of the same
/// family in 2-D (Padua m_p = 199 or tensor m_c = 141).
[[nodiscard]] double c0_reference(Benchmark problem, RuleKind kind, const ScalarField& f);
[[nodiscard]] double c0_estimate(const ScalarField& f, const Rule& rule);
[[nodiscard]] std::vector<QuadRow> run_quad_study(const StudySpec& spec);

/// Legendre coefficients at degree_stop, then the PCE statistics.
[[nodiscard]] SensitivityReport run_stats(const StudySpec& spec);

[[nodiscard]] CoefficientSet run_approx(const StudySpec& spec);

/// Runs the study and writes the CSV (header comments, column row, data rows)
/// to `csv`. Human-readable notes go to `log`.
void write_study(const StudySpec& spec, std::ostream& csv, std::ostream& log);

/// printf("%.17g")
[[nodiscard]] std::string format_real(double v);

}  // namespace specabs
