// SPDX-License-Identifier: Apache-2.0
// specabs <study> --config <path> [--key value ...] [--out path]

#include "specabs/errors.hpp"
#include "specabs/study.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNumeric = 3;

void write_metadata(const specabs::StudySpec& spec, const std::string& csv_path) {
    nlohmann::ordered_json meta;
    meta["schema"] = 1;
    meta["csv"] = csv_path;
    for (const auto& [k, v] : specabs::spec_echo(spec)) meta["spec"][k] = v;
    meta["error_grid_points_per_axis"] = specabs::grid_points(spec);
    std::ofstream(csv_path + ".json") << meta.dump(2) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spectral abscissa approximation studies"};
    std::string study;
    std::string config;
    app.add_option("study", study, "converge | quad-study | stats | eval | approx")->required();
    app.add_option("--config", config, "key=value configuration file");

    const std::vector<std::string> keys{"problem", "method", "basis_norm", "degree_start", "degree_stop",
                                        "degree_step", "parity", "rule", "rule_size", "grid", "dde_n", "out"};
    std::map<std::string, std::string> overrides;
    for (const auto& k : keys) app.add_option("--" + k, overrides[k], "overrides '" + k + "'");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitConfig;
    }

    try {
        specabs::StudySpec spec = config.empty() ? specabs::StudySpec{} : specabs::parse_config(config);
        specabs::set_key(spec, "study", study);
        for (const auto& [k, v] : overrides) {
            if (!v.empty()) specabs::set_key(spec, k, v);
        }
        specabs::validate(spec);

        if (spec.out == "-") {
            specabs::write_study(spec, std::cout, std::cerr);
            return 0;
        }
        // buffer so a failed run leaves no partial file behind
        std::ostringstream csv;
        specabs::write_study(spec, csv, std::cout);
        std::ofstream file(spec.out, std::ios::binary);
        if (!file) throw specabs::ConfigError("cannot write '" + spec.out + "'");
        file << csv.str();
        write_metadata(spec, spec.out);
        return 0;
    } catch (const specabs::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return kExitNumeric;
    }
}
