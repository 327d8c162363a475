// SPDX-License-Identifier: Apache-2.0
#include "specabs/study.hpp"

#include "specabs/errors.hpp"
#include "specabs/oracle.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <set>
#include <sstream>

namespace specabs {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

int parse_int(std::string_view key, std::string_view value) {
    int out = 0;
    const auto* end = value.data() + value.size();
    const auto [ptr, ec] = std::from_chars(value.data(), end, out);
    if (ec != std::errc() || ptr != end) {
        throw ConfigError("key '" + std::string(key) + "': expected an integer, got '" +
                          std::string(value) + "'");
    }
    return out;
}

StudyMethod parse_study_method(std::string_view name) {
    if (name == "oracle") return StudyMethod::Oracle;
    return parse_method(name) == Method::Galerkin ? StudyMethod::Galerkin : StudyMethod::Collocation;
}

std::string_view study_method_name(StudyMethod m) {
    switch (m) {
        case StudyMethod::Galerkin: return "galerkin";
        case StudyMethod::Collocation: return "collocation";
        case StudyMethod::Oracle: return "oracle";
    }
    return "?";
}

DegreeNorm parse_norm(std::string_view name) {
    if (name == "total") return DegreeNorm::Total;
    if (name == "maximal") return DegreeNorm::Maximal;
    throw ConfigError("unknown basis_norm '" + std::string(name) + "' (expected total or maximal)");
}

Parity parse_parity(std::string_view name) {
    if (name == "all") return Parity::All;
    if (name == "odd") return Parity::Odd;
    if (name == "even") return Parity::Even;
    throw ConfigError("unknown parity '" + std::string(name) + "' (expected all, odd or even)");
}

std::string_view parity_name(Parity p) {
    switch (p) {
        case Parity::All: return "all";
        case Parity::Odd: return "odd";
        case Parity::Even: return "even";
    }
    return "?";
}

const std::vector<std::string_view>& known_keys() {
    static const std::vector<std::string_view> keys{
        "study", "problem", "method", "basis_norm", "degree_start", "degree_stop", "degree_step",
        "parity", "rule", "rule_size", "grid", "dde_n", "out"};
    return keys;
}

std::size_t spec_dimension(const StudySpec& spec) { return benchmark_dimension(*spec.problem); }

int default_rule_size(RuleKind kind, int degree) {
    if (rule_kind_dimension(kind) == 1) return std::max(4 * degree, 1);
    return std::max(degree, kGalerkinFloor2d);
}

std::string rule_description(const StudySpec& spec) {
    if (spec.rule) {
        std::string s(rule_kind_name(*spec.rule));
        s += spec.rule_size ? " size=" + std::to_string(*spec.rule_size)
                            : (rule_kind_dimension(*spec.rule) == 1 ? " size=4P" : " size=max(P_d,64)");
        return s;
    }
    if (spec_dimension(spec) == 1) return "gauss size=4P";
    return spec.basis_norm == DegreeNorm::Total ? "padua size=max(P_d,64)" : "tensor_cc size=max(P_d,64)";
}

double elapsed_ms(std::chrono::steady_clock::time_point since) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - since).count();
}

std::string format_ms(double ms) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", ms);
    return buf;
}

std::string subset_label(const ParamSubset& s) {
    std::string out;
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (k) out += ' ';
        out += std::to_string(s[k]);
    }
    return out;
}

}  // namespace

Study parse_study(std::string_view name) {
    if (name == "converge") return Study::Converge;
    if (name == "quad-study") return Study::QuadStudy;
    if (name == "stats") return Study::Stats;
    if (name == "eval") return Study::Eval;
    if (name == "approx") return Study::Approx;
    throw ConfigError("unknown study '" + std::string(name) +
                      "' (expected converge, quad-study, stats, eval or approx)");
}

std::string_view study_name(Study s) noexcept {
    switch (s) {
        case Study::Converge: return "converge";
        case Study::QuadStudy: return "quad-study";
        case Study::Stats: return "stats";
        case Study::Eval: return "eval";
        case Study::Approx: return "approx";
    }
    return "?";
}

std::string format_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void set_key(StudySpec& spec, std::string_view key, std::string_view value) {
    if (value.empty()) throw ConfigError("key '" + std::string(key) + "' has an empty value");
    if (key == "study") {
        spec.study = parse_study(value);
    } else if (key == "problem") {
        spec.problem = parse_benchmark(value);
    } else if (key == "method") {
        spec.method = parse_study_method(value);
    } else if (key == "basis_norm") {
        spec.basis_norm = parse_norm(value);
    } else if (key == "degree_start") {
        spec.degree_start = parse_int(key, value);
    } else if (key == "degree_stop") {
        spec.degree_stop = parse_int(key, value);
    } else if (key == "degree_step") {
        if (value == "x2") {
            spec.step_doubling = true;
            spec.degree_step = 2;
        } else {
            spec.step_doubling = false;
            spec.degree_step = parse_int(key, value);
        }
    } else if (key == "parity") {
        spec.parity = parse_parity(value);
    } else if (key == "rule") {
        if (value == "auto") {
            spec.rule.reset();
        } else {
            spec.rule = parse_rule_kind(value);
        }
    } else if (key == "rule_size") {
        if (value == "auto") {
            spec.rule_size.reset();
        } else {
            spec.rule_size = parse_int(key, value);
        }
    } else if (key == "grid") {
        spec.grid = parse_int(key, value);
    } else if (key == "dde_n") {
        spec.dde_n = parse_int(key, value);
    } else if (key == "out") {
        spec.out = std::string(value);
    } else {
        throw ConfigError("unknown key '" + std::string(key) + "'");
    }
}

StudySpec parse_config_text(std::string_view text) {
    StudySpec spec;
    std::set<std::string, std::less<>> seen;
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);

        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        const std::string where = "line " + std::to_string(line_no) + ": ";
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError(where + "expected key=value, got '" + std::string(line) + "'");
        }
        const auto key = trim(line.substr(0, eq));
        const auto value = trim(line.substr(eq + 1));
        if (std::find(known_keys().begin(), known_keys().end(), key) == known_keys().end()) {
            throw ConfigError(where + "unknown key '" + std::string(key) + "'");
        }
        if (!seen.emplace(key).second) {
            throw ConfigError(where + "duplicate key '" + std::string(key) + "'");
        }
        try {
            set_key(spec, key, value);
        } catch (const ConfigError& e) {
            throw ConfigError(where + e.what());
        }
    }
    return spec;
}

StudySpec parse_config(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open config file '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

void validate(const StudySpec& spec) {
    if (!spec.study) throw ConfigError("missing key 'study'");
    if (!spec.problem) throw ConfigError("missing key 'problem'");
    const std::size_t dim = spec_dimension(spec);
    if (spec.degree_start < 0) throw ConfigError("degree_start must be >= 0");
    if (spec.degree_stop < spec.degree_start) throw ConfigError("degree_stop must be >= degree_start");
    if (spec.degree_step < 1) throw ConfigError("degree_step must be >= 1 or x2");
    if (spec.step_doubling && spec.degree_start < 1) {
        throw ConfigError("degree_step=x2 needs degree_start >= 1");
    }
    if (spec.grid != 0 && spec.grid < 2) throw ConfigError("grid must be >= 2");
    if (spec.dde_n < 4) throw ConfigError("dde_n must be >= 4");
    if (spec.rule_size && *spec.rule_size < 0) throw ConfigError("rule_size must be >= 0");
    if (spec.rule && rule_kind_dimension(*spec.rule) != dim) {
        throw ConfigError("rule '" + std::string(rule_kind_name(*spec.rule)) + "' is " +
                          std::to_string(rule_kind_dimension(*spec.rule)) + "-D but problem " +
                          std::string(benchmark_name(*spec.problem)) + " is " + std::to_string(dim) + "-D");
    }
    if (spec.method == StudyMethod::Oracle && dim != 1) {
        throw ConfigError("method=oracle exists only for the 1-D benchmarks");
    }
    if (*spec.study == Study::QuadStudy) {
        if (!spec.rule) throw ConfigError("quad-study needs key 'rule'");
        if (spec.degree_start < 1 && *spec.rule != RuleKind::Gauss) {
            throw ConfigError("quad-study sizes must be >= 1 for this rule");
        }
    }
    if (spec.method == StudyMethod::Collocation && dim == 2 && spec.degree_start < 1 &&
        (*spec.study == Study::Converge)) {
        throw ConfigError("2-D collocation needs degree_start >= 1");
    }
    if (sweep_values(spec).empty()) throw ConfigError("degree sweep is empty after the parity filter");
}

std::vector<int> sweep_values(const StudySpec& spec) {
    std::vector<int> out;
    long long v = spec.degree_start;
    while (v <= spec.degree_stop) {
        const bool keep = spec.parity == Parity::All || (spec.parity == Parity::Odd && v % 2 == 1) ||
                          (spec.parity == Parity::Even && v % 2 == 0);
        if (keep) out.push_back(static_cast<int>(v));
        if (spec.step_doubling) {
            if (v == 0) break;
            v *= 2;
        } else {
            v += spec.degree_step;
        }
    }
    return out;
}

int grid_points(const StudySpec& spec) {
    if (spec.grid > 0) return spec.grid;
    return spec_dimension(spec) == 1 ? 10001 : 201;
}

std::vector<std::pair<std::string, std::string>> spec_echo(const StudySpec& spec) {
    std::vector<std::pair<std::string, std::string>> e;
    e.emplace_back("study", spec.study ? std::string(study_name(*spec.study)) : "");
    e.emplace_back("problem", spec.problem ? std::string(benchmark_name(*spec.problem)) : "");
    e.emplace_back("method", std::string(study_method_name(spec.method)));
    e.emplace_back("basis_norm", std::string(norm_name(spec.basis_norm)));
    e.emplace_back("degree_start", std::to_string(spec.degree_start));
    e.emplace_back("degree_stop", std::to_string(spec.degree_stop));
    e.emplace_back("degree_step", spec.step_doubling ? "x2" : std::to_string(spec.degree_step));
    e.emplace_back("parity", std::string(parity_name(spec.parity)));
    e.emplace_back("rule", spec.rule ? std::string(rule_kind_name(*spec.rule)) : "auto");
    e.emplace_back("rule_size", spec.rule_size ? std::to_string(*spec.rule_size) : "auto");
    e.emplace_back("grid", std::to_string(spec.problem ? grid_points(spec) : spec.grid));
    e.emplace_back("dde_n", std::to_string(spec.dde_n));
    return e;
}

Rule galerkin_rule(const StudySpec& spec, int degree) {
    if (spec.rule) return make_rule(*spec.rule, spec.rule_size.value_or(default_rule_size(*spec.rule, degree)));
    if (spec_dimension(spec) == 1) return gauss_legendre(spec.rule_size.value_or(4 * degree));
    const int m = spec.rule_size.value_or(std::max(degree, kGalerkinFloor2d));
    return spec.basis_norm == DegreeNorm::Total ? padua_cubature(m) : tensor_cc_cubature(m);
}

ScalarField study_field(const StudySpec& spec) {
    auto f = benchmark_field(*spec.problem, spec.dde_n);
    return spec_dimension(spec) == 1 ? f : memoize(std::move(f));
}

CoefficientSet study_build(const StudySpec& spec, const ScalarField& f, int degree,
                           bool* decoupling_violated) {
    if (decoupling_violated) *decoupling_violated = false;
    if (spec.method == StudyMethod::Oracle) return oracle_series(*spec.problem, degree).as_coefficients();
    ApproxConfig cfg;
    cfg.basis = GradedBasis(spec.method == StudyMethod::Galerkin ? Family::Legendre : Family::Chebyshev,
                            spec_dimension(spec), spec.basis_norm, degree);
    if (spec.method == StudyMethod::Galerkin) {
        cfg.method = Method::Galerkin;
        cfg.rule = galerkin_rule(spec, degree);
    } else {
        cfg.method = Method::Collocation;
    }
    auto result = build_approx(f, cfg);
    if (decoupling_violated) *decoupling_violated = result.decoupling_violated;
    return std::move(result.coeffs);
}

std::vector<ConvergeRow> run_converge(const StudySpec& spec) {
    validate(spec);
    const auto f = study_field(spec);
    const int grid = grid_points(spec);
    std::vector<ConvergeRow> rows;
    for (int degree : sweep_values(spec)) {
        const auto t0 = std::chrono::steady_clock::now();
        ConvergeRow row;
        const auto coeffs = study_build(spec, f, degree, &row.decoupling_violated);
        const double err = linf_rel_error(f, coeffs, grid);
        if (!std::isfinite(err)) {
            throw NumericalError("non-finite error at degree " + std::to_string(degree));
        }
        row.record = ErrorRecord{degree, coeffs.size(), err, std::nullopt};
        row.wall_ms = elapsed_ms(t0);
        rows.push_back(row);
    }
    return rows;
}

double c0_estimate(const ScalarField& f, const Rule& rule) {
    return integrate(rule, f) * std::ldexp(1.0, -static_cast<int>(rule.dimension));
}

double c0_reference(Benchmark problem, RuleKind kind, const ScalarField& f) {
    if (benchmark_dimension(problem) == 1) return oracle_series(problem, 0).coeffs[0];
    const Rule ref = kind == RuleKind::Padua ? padua_cubature(kReferencePadua)
                                             : tensor_cc_cubature(kReferenceTensor);
    return c0_estimate(f, ref);
}

std::vector<QuadRow> run_quad_study(const StudySpec& spec) {
    validate(spec);
    const auto f = study_field(spec);
    const double ref = c0_reference(*spec.problem, *spec.rule, f);
    std::vector<QuadRow> rows;
    for (int m : sweep_values(spec)) {
        QuadRow row;
        row.size = m;
        if (*spec.rule == RuleKind::Simpson && m % 2 != 0) {
            row.warning = "simpson needs an even M; M=" + std::to_string(m) + " skipped";
        } else {
            const double est = c0_estimate(f, make_rule(*spec.rule, m));
            if (!std::isfinite(est)) throw NumericalError("non-finite c0 estimate at M=" + std::to_string(m));
            row.abs_c0_error = std::abs(est - ref);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

SensitivityReport run_stats(const StudySpec& spec) {
    validate(spec);
    const auto f = study_field(spec);
    auto coeffs = study_build(spec, f, spec.degree_stop);
    if (coeffs.basis.family() == Family::Chebyshev) coeffs = cheb_to_leg(coeffs);
    return sobol_indices(coeffs);
}

CoefficientSet run_approx(const StudySpec& spec) {
    validate(spec);
    return study_build(spec, study_field(spec), spec.degree_stop);
}

namespace {

void write_header(const StudySpec& spec, std::ostream& csv, const std::vector<std::string>& extra) {
    csv << "# specabs\n# schema=1\n";
    for (const auto& [k, v] : spec_echo(spec)) csv << "# " << k << '=' << v << '\n';
    const int g = grid_points(spec);
    csv << "# error_grid=" << (spec_dimension(spec) == 1 ? std::to_string(g)
                                                          : std::to_string(g) + "x" + std::to_string(g))
        << '\n';
    if (benchmark_dimension(*spec.problem) == 2) csv << "# dde=pseudospectral N=" << spec.dde_n
                                                     << " newton_tol=1e-12\n";
    for (const auto& line : extra) csv << "# " << line << '\n';
}

void write_converge(const StudySpec& spec, std::ostream& csv) {
    const auto rows = run_converge(spec);
    std::vector<std::string> extra;
    if (spec.method == StudyMethod::Galerkin) extra.push_back("galerkin_rule=" + rule_description(spec));
    if (spec.method == StudyMethod::Collocation) {
        extra.push_back(std::string("nodes=") +
                        (spec_dimension(spec) == 1 ? "chebyshev"
                                                   : (spec.basis_norm == DegreeNorm::Total ? "padua" : "tensor")));
    }
    std::string flagged;
    for (const auto& r : rows) {
        if (r.decoupling_violated) flagged += (flagged.empty() ? "" : " ") + std::to_string(r.record.degree);
    }
    if (!flagged.empty()) extra.push_back("decoupling_violated=" + flagged);
    write_header(spec, csv, extra);
    csv << "degree,n_coeffs,rel_linf_error,wall_ms\n";
    for (const auto& r : rows) {
        csv << r.record.degree << ',' << r.record.n_coeffs << ',' << format_real(r.record.rel_linf_error) << ','
            << format_ms(r.wall_ms) << '\n';
    }
}

void write_quad(const StudySpec& spec, std::ostream& csv, std::ostream& log) {
    const auto rows = run_quad_study(spec);
    std::vector<std::string> extra;
    if (spec_dimension(spec) == 1) {
        extra.emplace_back("reference=oracle");
    } else {
        extra.push_back(*spec.rule == RuleKind::Padua ? "reference=padua m_p=" + std::to_string(kReferencePadua)
                                                      : "reference=tensor_cc m_c=" + std::to_string(kReferenceTensor));
    }
    write_header(spec, csv, extra);
    csv << "M,abs_c0_error\n";
    for (const auto& r : rows) {
        if (r.abs_c0_error) {
            csv << r.size << ',' << format_real(*r.abs_c0_error) << '\n';
        } else {
            csv << "# warning: " << r.warning << '\n';
            log << "warning: " << r.warning << '\n';
        }
    }
}

void write_stats(const StudySpec& spec, std::ostream& csv, std::ostream& log) {
    const auto rep = run_stats(spec);
    write_header(spec, csv, {});
    csv << "quantity,subset,value\n";
    csv << "mean,," << format_real(rep.mean) << '\n';
    csv << "variance,," << format_real(rep.variance) << '\n';
    csv << "truncation,," << rep.truncation << '\n';
    csv << "degenerate,," << (rep.degenerate ? 1 : 0) << '\n';
    for (const auto& [subset, v] : rep.sobol) csv << "sobol," << subset_label(subset) << ',' << format_real(v) << '\n';
    for (std::size_t d = 0; d < rep.total.size(); ++d) {
        csv << "total," << d + 1 << ',' << format_real(rep.total[d]) << '\n';
    }

    std::ostringstream txt;
    txt << std::setprecision(12);
    txt << std::left << std::setw(14) << "mean" << rep.mean << '\n';
    txt << std::left << std::setw(14) << "variance" << rep.variance << '\n';
    if (rep.degenerate) txt << "zero variance: sensitivity indices set to 0\n";
    for (const auto& [subset, v] : rep.sobol) {
        txt << std::left << std::setw(14) << ("S{" + subset_label(subset) + "}") << v << '\n';
    }
    for (std::size_t d = 0; d < rep.total.size(); ++d) {
        txt << std::left << std::setw(14) << ("T" + std::to_string(d + 1)) << rep.total[d] << '\n';
    }
    log << txt.str();
}

void write_eval(const StudySpec& spec, std::ostream& csv) {
    validate(spec);
    const auto f = benchmark_field(*spec.problem, spec.dde_n);
    const auto grid = equispaced_grid(spec_dimension(spec), grid_points(spec));
    write_header(spec, csv, {});
    if (spec_dimension(spec) == 1) {
        csv << "w,alpha\n";
        for (const auto& p : grid) csv << format_real(p[0]) << ',' << format_real(f(p)) << '\n';
        return;
    }
    const auto dom = oscillator_domain();
    csv << "u1,u2,w1,w2,alpha\n";
    for (const auto& p : grid) {
        const auto w = dom.from_reference(p);
        csv << format_real(p[0]) << ',' << format_real(p[1]) << ',' << format_real(w[0]) << ','
            << format_real(w[1]) << ',' << format_real(f(p)) << '\n';
    }
}

void write_approx(const StudySpec& spec, std::ostream& csv) {
    validate(spec);
    const auto f = study_field(spec);
    const auto coeffs = study_build(spec, f, spec.degree_stop);
    const double err = linf_rel_error(f, coeffs, grid_points(spec));
    std::vector<std::string> extra{"family=" + std::string(family_name(coeffs.basis.family())),
                                   "rel_linf_error=" + format_real(err)};
    if (spec.method == StudyMethod::Galerkin) extra.push_back("galerkin_rule=" + rule_description(spec));
    write_header(spec, csv, extra);
    const std::size_t dim = coeffs.basis.dimension();
    csv << "index";
    for (std::size_t d = 0; d < dim; ++d) csv << ",i" << d + 1;
    csv << ",coeff\n";
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        csv << i;
        for (int e : coeffs.basis.index(i).entries) csv << ',' << e;
        csv << ',' << format_real(coeffs.coeffs[i]) << '\n';
    }
}

}  // namespace

void write_study(const StudySpec& spec, std::ostream& csv, std::ostream& log) {
    validate(spec);
    switch (*spec.study) {
        case Study::Converge: write_converge(spec, csv); break;
        case Study::QuadStudy: write_quad(spec, csv, log); break;
        case Study::Stats: write_stats(spec, csv, log); break;
        case Study::Eval: write_eval(spec, csv); break;
        case Study::Approx: write_approx(spec, csv); break;
    }
}

}  // namespace specabs
