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


#include "qmul/presets.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "qmul/error.hpp"

namespace qmul {

namespace {

QubitParams make(const char *name, double t1, double t2, double tm, double e1, double e2,
                 double em, Family family) {
    QubitParams p;
    p.name = name;
    p.t_one_qubit = t1;
    p.t_two_qubit = t2;
    p.t_meas = tm;
    p.e_one_qubit = e1;
    p.e_two_qubit = e2;
    p.e_meas = em;
    p.t_inject_error = family == Family::Majorana ? em : e2;
    p.family = family;
    return p;
}

std::vector<PresetEntry> build_registry() {
    const std::vector<std::string> surface = {"surface"};
    const std::vector<std::string> both = {"surface", "floquet"};
    return {
        {make("gate_ns_e3", 50e-9, 50e-9, 100e-9, 1e-3, 1e-3, 1e-3, Family::GateBased),
         "superconducting", surface},
        {make("gate_ns_e4", 50e-9, 50e-9, 100e-9, 1e-4, 1e-4, 1e-4, Family::GateBased),
         "superconducting", surface},
        {make("gate_us_e3", 100e-6, 100e-6, 100e-6, 1e-3, 1e-3, 1e-3, Family::GateBased),
         "trapped-ion", surface},
        {make("gate_us_e4", 100e-6, 100e-6, 100e-6, 1e-4, 1e-4, 1e-4, Family::GateBased),
         "trapped-ion", surface},
        {make("maj_ns_e4", 100e-9, 100e-9, 100e-9, 1e-4, 1e-4, 1e-4, Family::Majorana),
         "Majorana", both},
        {make("maj_ns_e6", 100e-9, 100e-9, 100e-9, 1e-6, 1e-6, 1e-6, Family::Majorana),
         "Majorana", both},
    };
}

std::string join_names() {
    std::string out;
    for (const auto &name : preset_names()) {
        out += out.empty() ? name : ", " + name;
    }
    return out;
}

std::string_view trim(std::string_view s) {
    const char *ws = " \t\r";
    size_t b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) {
        return {};
    }
    size_t e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

void check_time(const std::string &field, double v) {
    if (!(v > 0) || !std::isfinite(v)) {
        fail(ErrorKind::RangeError, field + " must be a positive time in seconds, got " +
                                        std::to_string(v));
    }
}

void check_probability(const std::string &field, double v) {
    if (!(v > 0 && v < 1)) {
        fail(ErrorKind::RangeError, field + " must lie in (0, 1), got " + std::to_string(v));
    }
}

Family parse_family(const std::string &text, const std::string &where) {
    if (text == "gate_based" || text == "gate-based") {
        return Family::GateBased;
    }
    if (text == "majorana") {
        return Family::Majorana;
    }
    fail(ErrorKind::ParseError, where + ": family must be gate_based or majorana, got '" + text + "'");
}

const std::vector<std::string> kParamKeys = {"name",        "t_one_qubit", "t_two_qubit",
                                             "t_meas",      "e_one_qubit", "e_two_qubit",
                                             "e_meas",      "t_inject_error", "family"};

}  // namespace

std::string_view family_name(Family family) {
    return family == Family::Majorana ? "majorana" : "gate_based";
}

void QubitParams::validate() const {
    check_time("t_one_qubit", t_one_qubit);
    check_time("t_two_qubit", t_two_qubit);
    check_time("t_meas", t_meas);
    check_probability("e_one_qubit", e_one_qubit);
    check_probability("e_two_qubit", e_two_qubit);
    check_probability("e_meas", e_meas);
    check_probability("t_inject_error", t_inject_error);
}

const std::vector<PresetEntry> &list_presets() {
    static const std::vector<PresetEntry> registry = build_registry();
    return registry;
}

std::vector<std::string> preset_names() {
    std::vector<std::string> out;
    for (const auto &e : list_presets()) {
        out.push_back(e.params.name);
    }
    return out;
}

bool is_preset(std::string_view name) {
    const auto &r = list_presets();
    return std::any_of(r.begin(), r.end(), [&](const PresetEntry &e) { return e.params.name == name; });
}

QubitParams preset(std::string_view name) {
    for (const auto &e : list_presets()) {
        if (e.params.name == name) {
            return e.params;
        }
    }
    fail(ErrorKind::UnknownPreset,
         "unknown preset '" + std::string(name) + "'; valid presets: " + join_names());
}

KeyValueFile KeyValueFile::parse(std::string_view text, const std::string &source) {
    KeyValueFile file;
    file.source_ = source;
    int line_no = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        if (size_t hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const std::string where = source + ":" + std::to_string(line_no);
        size_t eq = line.find('=');
        if (eq == std::string_view::npos) {
            fail(ErrorKind::ParseError, where + ": expected 'key = value'");
        }
        std::string key(trim(line.substr(0, eq)));
        std::string value(trim(line.substr(eq + 1)));
        if (key.empty() || value.empty()) {
            fail(ErrorKind::ParseError, where + ": empty key or value");
        }
        if (file.entries_.count(key)) {
            fail(ErrorKind::ParseError, where + ": duplicate key '" + key + "' (first on line " +
                                            std::to_string(file.entries_[key].line) + ")");
        }
        file.entries_[key] = KeyValueEntry{value, line_no};
    }
    return file;
}

KeyValueFile KeyValueFile::load(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        fail(ErrorKind::ParseError, path + ": cannot open file");
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return parse(ss.str(), path);
}

const KeyValueEntry *KeyValueFile::find(const std::string &key) const {
    auto it = entries_.find(key);
    return it == entries_.end() ? nullptr : &it->second;
}

double KeyValueFile::number(const std::string &key) const {
    const KeyValueEntry *e = find(key);
    if (!e) {
        fail(ErrorKind::MissingField, source_ + ": missing field '" + key + "'");
    }
    double v = 0;
    const char *first = e->value.data();
    const char *last = first + e->value.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last) {
        fail(ErrorKind::ParseError, source_ + ":" + std::to_string(e->line) + ": '" + key +
                                        "' is not a number: '" + e->value + "'");
    }
    return v;
}

uint64_t KeyValueFile::integer(const std::string &key) const {
    const KeyValueEntry *e = find(key);
    if (!e) {
        fail(ErrorKind::MissingField, source_ + ": missing field '" + key + "'");
    }
    uint64_t v = 0;
    const char *first = e->value.data();
    const char *last = first + e->value.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last) {
        fail(ErrorKind::ParseError, source_ + ":" + std::to_string(e->line) + ": '" + key +
                                        "' is not a non-negative integer: '" + e->value + "'");
    }
    return v;
}

std::string KeyValueFile::text(const std::string &key) const {
    const KeyValueEntry *e = find(key);
    if (!e) {
        fail(ErrorKind::MissingField, source_ + ": missing field '" + key + "'");
    }
    return e->value;
}

QubitParams params_from_file(const KeyValueFile &file, const std::string &default_name) {
    for (const auto &[key, entry] : file.entries()) {
        if (std::find(kParamKeys.begin(), kParamKeys.end(), key) == kParamKeys.end()) {
            fail(ErrorKind::ParseError, file.source() + ":" + std::to_string(entry.line) +
                                            ": unknown key '" + key + "'");
        }
    }
    QubitParams p;
    p.name = file.has("name") ? file.text("name") : default_name;
    p.t_one_qubit = file.number("t_one_qubit");
    p.t_two_qubit = file.number("t_two_qubit");
    p.t_meas = file.number("t_meas");
    p.e_one_qubit = file.number("e_one_qubit");
    p.e_two_qubit = file.number("e_two_qubit");
    p.e_meas = file.number("e_meas");
    p.family = file.has("family") ? parse_family(file.text("family"), file.source())
                                  : Family::GateBased;
    if (file.has("t_inject_error")) {
        p.t_inject_error = file.number("t_inject_error");
    } else {
        p.t_inject_error = p.family == Family::Majorana ? p.e_meas : p.e_two_qubit;
    }
    p.validate();
    return p;
}

QubitParams load_params(const std::string &path) {
    return params_from_file(KeyValueFile::load(path), std::filesystem::path(path).stem().string());
}

QubitParams parse_params(std::string_view text, const std::string &name) {
    return params_from_file(KeyValueFile::parse(text, name), name);
}

QubitParams override_params(const QubitParams &base, const KeyValueFile &file,
                            const std::string &prefix) {
    QubitParams p = base;
    auto field = [&](const char *name, double &slot) {
        std::string key = prefix + name;
        if (file.has(key)) {
            slot = file.number(key);
        }
    };
    field("t_one_qubit", p.t_one_qubit);
    field("t_two_qubit", p.t_two_qubit);
    field("t_meas", p.t_meas);
    field("e_one_qubit", p.e_one_qubit);
    field("e_two_qubit", p.e_two_qubit);
    field("e_meas", p.e_meas);
    field("t_inject_error", p.t_inject_error);
    if (file.has(prefix + "family")) {
        p.family = parse_family(file.text(prefix + "family"), file.source());
    }
    p.validate();
    return p;
}

double physical_error_rate(const QubitParams &params) {
    return std::max({params.e_one_qubit, params.e_two_qubit, params.e_meas});
}

}  // namespace qmul
