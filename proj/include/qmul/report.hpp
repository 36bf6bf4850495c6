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

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "qmul/arith.hpp"
#include "qmul/presets.hpp"
#include "qmul/qec.hpp"

namespace qmul {

/// Model constants after defaults and the optional config file are combined.
///
/// Recognized config keys:
///   surface.* / floquet.*   p_star a_pre ppl_d2 ppl_d1 ppl_d0 round_t_one round_t_two round_t_meas
///   budget.*                total logical_share distillation_share
///   cycles.*                per_toffoli per_measurement
///   factory.*               prefactor input_states duration_rounds max_rounds
///   model.*                 distance_cap t_per_toffoli
///   karatsuba.threshold
///   preset.<name>.<field>   any QubitParams field of a built-in preset
struct EstimatorConfig {
    QecScheme surface = QecScheme::surface();
    QecScheme floquet = QecScheme::floquet();
    ErrorBudget budget;
    ModelOptions options;
    uint32_t karatsuba_threshold = 16;
    std::optional<KeyValueFile> overrides;

    static EstimatorConfig from_file(const KeyValueFile &file);
    static EstimatorConfig load(const std::string &path);

    const QecScheme &scheme(SchemeKind kind) const {
        return kind == SchemeKind::Floquet ? floquet : surface;
    }
    /// A preset name (with any preset.* overrides applied) or a parameter file path.
    QubitParams resolve_platform(const std::string &name_or_path) const;
};

/// Floquet on Majorana platforms, surface otherwise.
SchemeKind default_scheme(const QubitParams &params);

struct ResultRow {
    Algorithm algorithm = Algorithm::Schoolbook;
    uint32_t n = 0;
    OperandMode mode = OperandMode::QC;
    std::string platform;
    std::string code;
    CircuitTally tally;
    bool has_tally = false;
    uint64_t t_states = 0;
    std::optional<PhysicalEstimate> estimate;
    std::string error;

    bool ok() const {
        return estimate.has_value();
    }
};

ResultRow estimate_row(const MultiplySpec &spec, const CircuitTally &tally, const std::string &platform,
                       const QubitParams &params, std::optional<SchemeKind> code,
                       const EstimatorConfig &config);

/// Builds the tally and estimates one cell. Model errors are captured in the row.
ResultRow run_estimate(const MultiplySpec &spec, const std::string &platform,
                       std::optional<SchemeKind> code, const EstimatorConfig &config);

extern const char *const kCsvHeader;

std::string csv_escape(const std::string &field);
void write_csv(std::ostream &out, const std::vector<ResultRow> &rows);
void write_json(std::ostream &out, const std::vector<ResultRow> &rows);

struct SweepSpec {
    std::vector<Algorithm> algorithms;
    std::vector<uint32_t> bit_sizes;
    std::vector<std::string> platforms;
    std::optional<SchemeKind> code;
    OperandMode mode = OperandMode::QC;
    std::optional<uint32_t> window;

    void validate() const;
};

/// from, from*factor, ... while <= to.
std::vector<uint32_t> geometric_sizes(uint32_t from, uint32_t to, uint32_t factor);

/// Rows sorted by (algorithm name, n, platform). Cells run on `threads` workers
/// (0 = hardware concurrency).
std::vector<ResultRow> run_sweep(const SweepSpec &spec, const EstimatorConfig &config,
                                 unsigned threads = 0);

}  // namespace qmul
