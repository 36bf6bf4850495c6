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


#include "qmul/report.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <filesystem>
#include <thread>

#include "json.hpp"

#include "qmul/error.hpp"

namespace qmul {

namespace {

void apply_scheme_key(QecScheme &s, const std::string &field, const KeyValueFile &f,
                      const std::string &key, bool &known) {
    known = true;
    if (field == "p_star") {
        s.p_star = f.number(key);
    } else if (field == "a_pre") {
        s.a_pre = f.number(key);
    } else if (field == "ppl_d2") {
        s.ppl_d2 = f.integer(key);
    } else if (field == "ppl_d1") {
        s.ppl_d1 = f.integer(key);
    } else if (field == "ppl_d0") {
        s.ppl_d0 = f.integer(key);
    } else if (field == "round_t_one") {
        s.round_t_one = f.number(key);
    } else if (field == "round_t_two") {
        s.round_t_two = f.number(key);
    } else if (field == "round_t_meas") {
        s.round_t_meas = f.number(key);
    } else {
        known = false;
    }
}

const std::vector<std::string> kPresetFields = {"t_one_qubit", "t_two_qubit",    "t_meas",
                                                "e_one_qubit", "e_two_qubit",    "e_meas",
                                                "t_inject_error", "family"};

uint32_t narrow(uint64_t v, const std::string &key) {
    if (v > UINT32_MAX) {
        fail(ErrorKind::RangeError, key + " is too large");
    }
    return static_cast<uint32_t>(v);
}

template <typename Fn>
void parallel_for(size_t count, unsigned threads, Fn &&fn) {
    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    threads = static_cast<unsigned>(std::min<size_t>(threads, count));
    if (threads <= 1) {
        for (size_t i = 0; i < count; ++i) {
            fn(i);
        }
        return;
    }
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            for (size_t i = next++; i < count; i = next++) {
                fn(i);
            }
        });
    }
    for (auto &th : pool) {
        th.join();
    }
}

std::string format_runtime(double seconds) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.5e", seconds);
    return buf;
}

}  // namespace

EstimatorConfig EstimatorConfig::from_file(const KeyValueFile &file) {
    EstimatorConfig c;
    for (const auto &[key, entry] : file.entries()) {
        const std::string where = file.source() + ":" + std::to_string(entry.line);
        size_t dot = key.find('.');
        std::string group = key.substr(0, dot);
        std::string field = dot == std::string::npos ? "" : key.substr(dot + 1);
        bool known = true;
        if (group == "surface") {
            apply_scheme_key(c.surface, field, file, key, known);
        } else if (group == "floquet") {
            apply_scheme_key(c.floquet, field, file, key, known);
        } else if (key == "budget.total") {
            c.budget.total = file.number(key);
        } else if (key == "budget.logical_share") {
            c.budget.logical_share = file.number(key);
        } else if (key == "budget.distillation_share") {
            c.budget.distillation_share = file.number(key);
        } else if (key == "cycles.per_toffoli") {
            c.options.cycles.per_toffoli = file.integer(key);
        } else if (key == "cycles.per_measurement") {
            c.options.cycles.per_measurement = file.integer(key);
        } else if (key == "factory.prefactor") {
            c.options.factory.prefactor = file.number(key);
        } else if (key == "factory.input_states") {
            c.options.factory.input_states = file.integer(key);
        } else if (key == "factory.duration_rounds") {
            c.options.factory.duration_rounds = file.integer(key);
        } else if (key == "factory.max_rounds") {
            c.options.factory.max_rounds = narrow(file.integer(key), key);
        } else if (key == "model.distance_cap") {
            c.options.distance_cap = narrow(file.integer(key), key);
        } else if (key == "model.t_per_toffoli") {
            c.options.t_per_toffoli = narrow(file.integer(key), key);
        } else if (key == "karatsuba.threshold") {
            c.karatsuba_threshold = narrow(file.integer(key), key);
        } else if (group == "preset") {
            size_t dot2 = field.find('.');
            std::string name = field.substr(0, dot2);
            std::string pfield = dot2 == std::string::npos ? "" : field.substr(dot2 + 1);
            if (!is_preset(name)) {
                fail(ErrorKind::UnknownPreset, where + ": '" + key + "' names an unknown preset");
            }
            known = std::find(kPresetFields.begin(), kPresetFields.end(), pfield) !=
                    kPresetFields.end();
        } else {
            known = false;
        }
        if (!known) {
            fail(ErrorKind::ParseError, where + ": unknown config key '" + key + "'");
        }
    }
    c.surface.validate();
    c.floquet.validate();
    c.budget.validate();
    if (c.options.distance_cap < 3) {
        fail(ErrorKind::RangeError, "model.distance_cap must be at least 3");
    }
    if (c.options.factory.max_rounds < 1 || c.options.factory.input_states < 1 ||
        c.options.factory.duration_rounds < 1 || !(c.options.factory.prefactor > 0)) {
        fail(ErrorKind::RangeError, "factory.* values must be positive");
    }
    for (const auto &name : preset_names()) {
        override_params(preset(name), file, "preset." + name + ".");
    }
    c.overrides = file;
    return c;
}

EstimatorConfig EstimatorConfig::load(const std::string &path) {
    return from_file(KeyValueFile::load(path));
}

QubitParams EstimatorConfig::resolve_platform(const std::string &name_or_path) const {
    if (is_preset(name_or_path)) {
        QubitParams p = preset(name_or_path);
        if (overrides) {
            p = override_params(p, *overrides, "preset." + name_or_path + ".");
        }
        return p;
    }
    if (std::filesystem::is_regular_file(name_or_path)) {
        return load_params(name_or_path);
    }
    return preset(name_or_path);
}

SchemeKind default_scheme(const QubitParams &params) {
    return params.family == Family::Majorana ? SchemeKind::Floquet : SchemeKind::Surface;
}

ResultRow estimate_row(const MultiplySpec &spec, const CircuitTally &tally, const std::string &platform,
                       const QubitParams &params, std::optional<SchemeKind> code,
                       const EstimatorConfig &config) {
    ResultRow row;
    row.algorithm = spec.algorithm;
    row.n = spec.n;
    row.mode = spec.mode;
    row.platform = platform;
    row.tally = tally;
    row.has_tally = true;
    row.t_states = t_states_of(tally, config.options.t_per_toffoli);
    SchemeKind kind = code.value_or(default_scheme(params));
    row.code = std::string(scheme_name(kind));
    try {
        row.estimate = estimate(tally, params, config.scheme(kind), config.budget, config.options);
    } catch (const Error &e) {
        row.error = e.what();
    }
    return row;
}

ResultRow run_estimate(const MultiplySpec &spec, const std::string &platform,
                       std::optional<SchemeKind> code, const EstimatorConfig &config) {
    const QubitParams params = config.resolve_platform(platform);
    return estimate_row(spec, tally_multiplier(spec), platform, params, code, config);
}

const char *const kCsvHeader =
    "algorithm,n,mode,platform,code,logical_qubits_alg,logical_qubits_total,toffoli,t_states,"
    "measurements,code_distance,phys_per_logical,tfactories,tfactory_qubits,physical_qubits,"
    "logical_cycles,runtime_seconds,error";

std::string csv_escape(const std::string &field) {
    if (field.find_first_of(",\"\n\r") == std::string::npos) {
        return field;
    }
    std::string out = "\"";
    for (char ch : field) {
        if (ch == '"') {
            out += '"';
        }
        out += ch;
    }
    out += '"';
    return out;
}

void write_csv(std::ostream &out, const std::vector<ResultRow> &rows) {
    out << kCsvHeader << '\n';
    for (const auto &r : rows) {
        out << algorithm_name(r.algorithm) << ',' << r.n << ',' << mode_name(r.mode) << ','
            << csv_escape(r.platform) << ',' << r.code << ',';
        const PhysicalEstimate *e = r.estimate ? &*r.estimate : nullptr;
        if (r.has_tally) {
            out << r.tally.qubit_highwater;
        }
        out << ',';
        if (e) {
            out << e->q_total;
        }
        out << ',';
        if (r.has_tally) {
            out << r.tally.toffoli << ',' << r.t_states << ','
                << r.tally.measurements;
        } else {
            out << ",,";
        }
        out << ',';
        if (e) {
            out << e->distance << ',' << e->phys_per_logical << ',' << e->factories << ','
                << e->factory_qubits << ',' << e->physical_qubits << ',' << e->logical_cycles << ','
                << format_runtime(e->runtime_seconds);
        } else {
            out << ",,,,,,";
        }
        out << ',' << csv_escape(r.error) << '\n';
    }
}

void write_json(std::ostream &out, const std::vector<ResultRow> &rows) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto &r : rows) {
        nlohmann::ordered_json j;
        j["algorithm"] = algorithm_name(r.algorithm);
        j["n"] = r.n;
        j["mode"] = mode_name(r.mode);
        j["platform"] = r.platform;
        j["code"] = r.code;
        const PhysicalEstimate *e = r.estimate ? &*r.estimate : nullptr;
        auto put = [&](const char *key, bool present, uint64_t v) {
            j[key] = present ? nlohmann::ordered_json(v) : nlohmann::ordered_json(nullptr);
        };
        put("logical_qubits_alg", r.has_tally, r.tally.qubit_highwater);
        put("logical_qubits_total", e, e ? e->q_total : 0);
        put("toffoli", r.has_tally, r.tally.toffoli);
        put("t_states", r.has_tally, r.t_states);
        put("measurements", r.has_tally, r.tally.measurements);
        put("code_distance", e, e ? e->distance : 0);
        put("phys_per_logical", e, e ? e->phys_per_logical : 0);
        put("tfactories", e, e ? e->factories : 0);
        put("tfactory_qubits", e, e ? e->factory_qubits : 0);
        put("physical_qubits", e, e ? e->physical_qubits : 0);
        put("logical_cycles", e, e ? e->logical_cycles : 0);
        j["runtime_seconds"] = e ? nlohmann::ordered_json(e->runtime_seconds) : nullptr;
        j["error"] = r.error;
        arr.push_back(std::move(j));
    }
    out << arr.dump(2) << '\n';
}

void SweepSpec::validate() const {
    if (algorithms.empty()) {
        fail(ErrorKind::InvalidArgument, "sweep needs at least one algorithm");
    }
    if (platforms.empty()) {
        fail(ErrorKind::InvalidArgument, "sweep needs at least one platform");
    }
    if (bit_sizes.empty()) {
        fail(ErrorKind::InvalidArgument, "sweep needs at least one bit size");
    }
    for (size_t i = 0; i < bit_sizes.size(); ++i) {
        if (bit_sizes[i] == 0 || (i > 0 && bit_sizes[i] <= bit_sizes[i - 1])) {
            fail(ErrorKind::InvalidArgument, "bit sizes must be positive and strictly increasing");
        }
    }
}

std::vector<uint32_t> geometric_sizes(uint32_t from, uint32_t to, uint32_t factor) {
    if (from == 0 || factor < 2 || to < from) {
        fail(ErrorKind::InvalidArgument, "geometric range needs 0 < from <= to and factor >= 2");
    }
    std::vector<uint32_t> out;
    for (uint64_t n = from; n <= to; n *= factor) {
        out.push_back(static_cast<uint32_t>(n));
    }
    return out;
}

std::vector<ResultRow> run_sweep(const SweepSpec &spec, const EstimatorConfig &config, unsigned threads) {
    spec.validate();
    std::vector<QubitParams> params;
    for (const auto &p : spec.platforms) {
        params.push_back(config.resolve_platform(p));
    }

    struct Cell {
        MultiplySpec spec;
        std::optional<CircuitTally> tally;
        std::string error;
    };
    std::vector<Cell> cells;
    for (Algorithm a : spec.algorithms) {
        for (uint32_t n : spec.bit_sizes) {
            MultiplySpec m;
            m.algorithm = a;
            m.n = n;
            m.mode = spec.mode;
            m.karatsuba_threshold = config.karatsuba_threshold;
            m.window = spec.window;
            cells.push_back(Cell{m, std::nullopt, ""});
        }
    }
    parallel_for(cells.size(), threads, [&](size_t i) {
        try {
            cells[i].tally = tally_multiplier(cells[i].spec);
        } catch (const Error &e) {
            cells[i].error = e.what();
        }
    });

    std::vector<ResultRow> rows;
    for (const auto &cell : cells) {
        for (size_t p = 0; p < params.size(); ++p) {
            if (cell.tally) {
                rows.push_back(estimate_row(cell.spec, *cell.tally, spec.platforms[p], params[p],
                                            spec.code, config));
                continue;
            }
            ResultRow row;
            row.algorithm = cell.spec.algorithm;
            row.n = cell.spec.n;
            row.mode = cell.spec.mode;
            row.platform = spec.platforms[p];
            row.code = std::string(scheme_name(spec.code.value_or(default_scheme(params[p]))));
            row.error = cell.error;
            rows.push_back(std::move(row));
        }
    }
    std::stable_sort(rows.begin(), rows.end(), [](const ResultRow &x, const ResultRow &y) {
        auto ax = algorithm_name(x.algorithm), ay = algorithm_name(y.algorithm);
        if (ax != ay) {
            return ax < ay;
        }
        if (x.n != y.n) {
            return x.n < y.n;
        }
        return x.platform < y.platform;
    });
    return rows;
}

}  // namespace qmul
