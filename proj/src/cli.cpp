// Copyright 2026 The qmul Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "qmul/cli.hpp"

#include <cstdio>
#include <fstream>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"
#include "qmul/error.hpp"
#include "qmul/report.hpp"
#include "qmul/sim.hpp"

namespace qmul {

namespace {

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::ModelInfeasible:
        case ErrorKind::AboveThreshold:
        case ErrorKind::InvalidCombination:
            return kExitModel;
        default:
            return kExitUsage;
    }
}

struct Common {
    std::string config_path;
    std::optional<double> budget;
    std::optional<uint32_t> threshold;
    std::string format = "csv";

    void add(CLI::App *cmd) {
        cmd->add_option("--config", config_path, "Key-value file overriding model constants");
        cmd->add_option("--budget", budget, "Total error budget");
        cmd->add_option("--threshold", threshold, "Karatsuba base-case width")
            ->check(CLI::Range(2u, 1u << 20));
        cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    }

    EstimatorConfig config() const {
        EstimatorConfig c = config_path.empty() ? EstimatorConfig{} : EstimatorConfig::load(config_path);
        if (budget) {
            c.budget.total = *budget;
            c.budget.validate();
        }
        if (threshold) {
            c.karatsuba_threshold = *threshold;
        }
        return c;
    }
};

std::string fmt_g(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

void write_rows(std::ostream &out, const std::string &format, const std::vector<ResultRow> &rows) {
    if (format == "json") {
        write_json(out, rows);
    } else {
        write_csv(out, rows);
    }
}

void write_presets(std::ostream &out, const std::string &format, const EstimatorConfig &config) {
    std::vector<std::pair<const PresetEntry *, QubitParams>> items;
    for (const auto &e : list_presets()) {
        items.emplace_back(&e, config.resolve_platform(e.params.name));
    }
    if (format == "json") {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto &[entry, p] : items) {
            nlohmann::ordered_json j;
            j["name"] = p.name;
            j["platform"] = entry->platform;
            j["family"] = family_name(p.family);
            j["t_one_qubit"] = p.t_one_qubit;
            j["t_two_qubit"] = p.t_two_qubit;
            j["t_meas"] = p.t_meas;
            j["e_one_qubit"] = p.e_one_qubit;
            j["e_two_qubit"] = p.e_two_qubit;
            j["e_meas"] = p.e_meas;
            j["t_inject_error"] = p.t_inject_error;
            j["schemes"] = entry->schemes;
            arr.push_back(std::move(j));
        }
        out << arr.dump(2) << '\n';
        return;
    }
    out << "name,platform,family,t_one_qubit,t_two_qubit,t_meas,e_one_qubit,e_two_qubit,e_meas,"
           "t_inject_error,schemes\n";
    for (const auto &[entry, p] : items) {
        std::string schemes;
        for (const auto &s : entry->schemes) {
            schemes += schemes.empty() ? s : ";" + s;
        }
        out << p.name << ',' << entry->platform << ',' << family_name(p.family) << ','
            << fmt_g(p.t_one_qubit) << ',' << fmt_g(p.t_two_qubit) << ',' << fmt_g(p.t_meas) << ','
            << fmt_g(p.e_one_qubit) << ',' << fmt_g(p.e_two_qubit) << ',' << fmt_g(p.e_meas) << ','
            << fmt_g(p.t_inject_error) << ',' << schemes << '\n';
    }
}

void write_verify(std::ostream &out, const std::string &format, const MultiplySpec &spec,
                  const VerifyReport &r) {
    if (format == "json") {
        nlohmann::ordered_json j;
        j["algorithm"] = algorithm_name(spec.algorithm);
        j["n"] = spec.n;
        j["mode"] = mode_name(spec.mode);
        j["cases"] = r.cases;
        j["failures"] = r.failure_count;
        j["ancilla_violations"] = r.ancilla_violations;
        j["gates"] = r.gates;
        j["status"] = r.ok() ? "pass" : "fail";
        auto &ce = j["counterexamples"] = nlohmann::ordered_json::array();
        for (const auto &f : r.failures) {
            ce.push_back({{"a0", to_string(f.a0)},
                          {"b", to_string(f.b)},
                          {"c", to_string(f.c)},
                          {"got", to_string(f.got)},
                          {"expected", to_string(f.expected)}});
        }
        out << j.dump(2) << '\n';
        return;
    }
    out << "algorithm,n,mode,cases,failures,ancilla_violations,gates,status\n";
    out << algorithm_name(spec.algorithm) << ',' << spec.n << ',' << mode_name(spec.mode) << ','
        << r.cases << ',' << r.failure_count << ',' << r.ancilla_violations << ',' << r.gates << ','
        << (r.ok() ? "pass" : "fail") << '\n';
    for (const auto &f : r.failures) {
        out << "# counterexample a0=" << to_string(f.a0) << " b=" << to_string(f.b)
            << " c=" << to_string(f.c) << " got=" << to_string(f.got)
            << " expected=" << to_string(f.expected) << '\n';
    }
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Resource estimates for quantum plus-equal multipliers", "qmul"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    const std::vector<std::string> algos = {"schoolbook", "karatsuba", "windowed"};
    const std::vector<std::string> modes = {"qc", "qq"};
    const std::vector<std::string> codes = {"surface", "floquet"};

    // estimate
    Common est_common;
    std::string est_algo, est_platform = "gate_ns_e3", est_mode = "qc", est_code, est_constant;
    uint32_t est_bits = 0;
    std::optional<uint32_t> est_window;
    CLI::App *est = app.add_subcommand("estimate", "Estimate one multiplier on one platform");
    est->add_option("--algo", est_algo, "Multiplier")->required()->check(CLI::IsMember(algos));
    est->add_option("--bits", est_bits, "Input width n")->required()->check(CLI::PositiveNumber);
    est->add_option("--platform", est_platform, "Preset name or parameter file");
    est->add_option("--code", est_code, "QEC scheme (default: floquet on Majorana, else surface)")
        ->check(CLI::IsMember(codes));
    est->add_option("--mode", est_mode, "Operand mode")->check(CLI::IsMember(modes));
    est->add_option("--window", est_window, "Window size for windowed")->check(CLI::Range(1u, 16u));
    est->add_option("--constant", est_constant, "Classical factor in decimal (QC mode)");
    est_common.add(est);

    // sweep
    Common sw_common;
    std::vector<std::string> sw_algos = algos, sw_platforms = {"gate_ns_e3"};
    std::vector<uint32_t> sw_bits;
    uint32_t sw_from = 8, sw_to = 8192, sw_factor = 2;
    std::string sw_mode = "qc", sw_code, sw_output;
    std::optional<uint32_t> sw_window;
    unsigned sw_threads = 0;
    CLI::App *sw = app.add_subcommand("sweep", "Estimate a grid of algorithms, sizes and platforms");
    sw->add_option("--algos", sw_algos, "Comma-separated multipliers")
        ->delimiter(',')
        ->check(CLI::IsMember(algos));
    auto *bits_opt = sw->add_option("--bits", sw_bits, "Comma-separated bit sizes")->delimiter(',');
    sw->add_option("--from", sw_from, "Geometric range start")->excludes(bits_opt);
    sw->add_option("--to", sw_to, "Geometric range end")->excludes(bits_opt);
    sw->add_option("--factor", sw_factor, "Geometric range ratio")->excludes(bits_opt);
    sw->add_option("--platforms", sw_platforms, "Comma-separated presets or parameter files")
        ->delimiter(',');
    sw->add_option("--code", sw_code, "QEC scheme for every platform")->check(CLI::IsMember(codes));
    sw->add_option("--mode", sw_mode, "Operand mode")->check(CLI::IsMember(modes));
    sw->add_option("--window", sw_window, "Window size for windowed")->check(CLI::Range(1u, 16u));
    sw->add_option("--threads", sw_threads, "Worker threads (0 = all cores)");
    sw->add_option("--output", sw_output, "Write to a file instead of standard output");
    sw_common.add(sw);

    // verify
    std::string v_algo, v_mode = "qc", v_format = "csv";
    uint32_t v_bits = 0, v_threshold = 16;
    std::optional<uint32_t> v_window;
    bool v_exhaustive = false;
    uint64_t v_samples = 1000, v_seed = 0;
    unsigned v_threads = 0;
    CLI::App *ver = app.add_subcommand("verify", "Simulate a multiplier against integer arithmetic");
    ver->add_option("--algo", v_algo, "Multiplier")->required()->check(CLI::IsMember(algos));
    ver->add_option("--bits", v_bits, "Input width n")->required()->check(CLI::PositiveNumber);
    ver->add_option("--mode", v_mode, "Operand mode")->check(CLI::IsMember(modes));
    ver->add_option("--threshold", v_threshold, "Karatsuba base-case width")
        ->check(CLI::Range(2u, 1u << 20));
    ver->add_option("--window", v_window, "Window size for windowed")->check(CLI::Range(1u, 16u));
    ver->add_flag("--exhaustive", v_exhaustive, "Enumerate every input");
    ver->add_option("--samples", v_samples, "Random cases when not exhaustive");
    ver->add_option("--seed", v_seed, "Seed for random cases");
    ver->add_option("--threads", v_threads, "Worker threads (0 = all cores)");
    ver->add_option("--format", v_format, "Output format")->check(CLI::IsMember({"csv", "json"}));

    // presets
    std::string p_format = "csv", p_config;
    CLI::App *pre = app.add_subcommand("presets", "List the built-in platform presets");
    pre->add_option("--format", p_format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    pre->add_option("--config", p_config, "Key-value file overriding preset fields");

    std::vector<std::string> argv_store = {"qmul"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char *> argv;
    for (const auto &a : argv_store) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    const char *stage = "arguments";
    try {
        if (*est) {
            EstimatorConfig config = est_common.config();
            MultiplySpec spec;
            spec.algorithm = parse_algorithm(est_algo);
            spec.n = est_bits;
            spec.mode = parse_mode(est_mode);
            spec.karatsuba_threshold = config.karatsuba_threshold;
            spec.window = est_window;
            spec.validate();
            std::optional<SchemeKind> code;
            if (!est_code.empty()) {
                code = parse_scheme(est_code);
            }
            stage = "platform";
            QubitParams params = config.resolve_platform(est_platform);
            stage = "circuit";
            std::optional<BigUint> c;
            if (!est_constant.empty()) {
                c = parse_biguint(est_constant);
            }
            CircuitTally tally = tally_multiplier(spec, c);
            stage = "estimate";
            SchemeKind kind = code.value_or(default_scheme(params));
            PhysicalEstimate e =
                estimate(tally, params, config.scheme(kind), config.budget, config.options);
            ResultRow row = estimate_row(spec, tally, est_platform, params, code, config);
            row.estimate = e;
            write_rows(out, est_common.format, {row});
            return kExitOk;
        }
        if (*sw) {
            EstimatorConfig config = sw_common.config();
            SweepSpec spec;
            for (const auto &a : sw_algos) {
                spec.algorithms.push_back(parse_algorithm(a));
            }
            spec.bit_sizes = sw_bits.empty() ? geometric_sizes(sw_from, sw_to, sw_factor) : sw_bits;
            spec.platforms = sw_platforms;
            if (!sw_code.empty()) {
                spec.code = parse_scheme(sw_code);
            }
            spec.mode = parse_mode(sw_mode);
            spec.window = sw_window;
            stage = "sweep";
            std::vector<ResultRow> rows = run_sweep(spec, config, sw_threads);
            if (sw_output.empty()) {
                write_rows(out, sw_common.format, rows);
            } else {
                std::ofstream file(sw_output, std::ios::binary);
                if (!file) {
                    err << "error: cannot write " << sw_output << '\n';
                    return kExitUsage;
                }
                write_rows(file, sw_common.format, rows);
            }
            bool any_ok = std::any_of(rows.begin(), rows.end(), [](const ResultRow &r) { return r.ok(); });
            for (const auto &r : rows) {
                if (!r.ok()) {
                    err << "warning: " << algorithm_name(r.algorithm) << " n=" << r.n << " on "
                        << r.platform << ": " << r.error << '\n';
                }
            }
            return any_ok ? kExitOk : kExitModel;
        }
        if (*ver) {
            MultiplySpec spec;
            spec.algorithm = parse_algorithm(v_algo);
            spec.n = v_bits;
            spec.mode = parse_mode(v_mode);
            spec.karatsuba_threshold = v_threshold;
            spec.window = v_window;
            spec.validate();
            if (v_exhaustive && !exhaustive_allowed(spec)) {
                err << "error: exhaustive verification of " << v_algo << " n=" << v_bits
                    << " exceeds the 2^20 case budget; use --samples\n";
                return kExitUsage;
            }
            stage = "verify";
            VerifyStrategy strategy = v_exhaustive ? VerifyStrategy::exhaustive_cases()
                                                   : VerifyStrategy::random(v_samples, v_seed);
            VerifyReport report = verify_multiplier(spec, strategy, v_threads);
            write_verify(out, v_format, spec, report);
            return report.ok() ? kExitOk : kExitModel;
        }
        if (*pre) {
            EstimatorConfig config = p_config.empty() ? EstimatorConfig{} : EstimatorConfig::load(p_config);
            write_presets(out, p_format, config);
            return kExitOk;
        }
    } catch (const Error &e) {
        err << "error (" << stage << "): " << e.what() << '\n';
        return exit_code_for(e.kind());
    }
    return kExitUsage;
}

}  // namespace qmul
