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


#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace qmul {

enum class Family { GateBased, Majorana };

std::string_view family_name(Family family);

struct QubitParams {
    std::string name;
    double t_one_qubit = 0;  // seconds
    double t_two_qubit = 0;
    double t_meas = 0;
    double e_one_qubit = 0;
    double e_two_qubit = 0;
    double e_meas = 0;
    double t_inject_error = 0;
    Family family = Family::GateBased;

    /// Throws RangeError naming the first offending field.
    void validate() const;
    bool operator==(const QubitParams &) const = default;
};

struct PresetEntry {
    QubitParams params;
    std::string platform;  ///< "superconducting", "trapped-ion" or "Majorana"
    std::vector<std::string> schemes;
};

const std::vector<PresetEntry> &list_presets();
std::vector<std::string> preset_names();
bool is_preset(std::string_view name);
QubitParams preset(std::string_view name);

/// Flat `key = value` text. Blank lines and `#` comments are ignored.
struct KeyValueEntry {
    std::string value;
    int line = 0;
};

class KeyValueFile {
   public:
    static KeyValueFile parse(std::string_view text, const std::string &source = "<input>");
    static KeyValueFile load(const std::string &path);

    const std::string &source() const {
        return source_;
    }
    const std::map<std::string, KeyValueEntry> &entries() const {
        return entries_;
    }
    bool has(const std::string &key) const {
        return entries_.count(key) != 0;
    }
    const KeyValueEntry *find(const std::string &key) const;

    /// Numeric accessors raise ParseError (with the line) on malformed numbers.
    double number(const std::string &key) const;
    uint64_t integer(const std::string &key) const;
    std::string text(const std::string &key) const;

   private:
    std::string source_;
    std::map<std::string, KeyValueEntry> entries_;
};

/// Reads a full parameter set. Keys are the QubitParams field names; `name` defaults to the file
/// stem and `family` (gate_based or majorana) to gate_based.
QubitParams params_from_file(const KeyValueFile &file, const std::string &default_name);
QubitParams load_params(const std::string &path);
QubitParams parse_params(std::string_view text, const std::string &name = "custom");

/// Applies the fields present in `file` under `prefix` on top of `base`.
QubitParams override_params(const QubitParams &base, const KeyValueFile &file,
                            const std::string &prefix);

double physical_error_rate(const QubitParams &params);

}  // namespace qmul
