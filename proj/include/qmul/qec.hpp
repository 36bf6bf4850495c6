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
#include <string>
#include <string_view>

#include "qmul/circuit.hpp"
#include "qmul/presets.hpp"

namespace qmul {

enum class SchemeKind { Surface, Floquet };

std::string_view scheme_name(SchemeKind kind);
SchemeKind parse_scheme(std::string_view text);

/// Qubits per logical qubit: ppl_d2*d^2 + ppl_d1*d + ppl_d0.
/// Syndrome round: round_t_one*t1 + round_t_two*t2 + round_t_meas*tm.
struct QecScheme {
    SchemeKind kind = SchemeKind::Surface;
    double p_star = 1e-2;
    double a_pre = 0.03;
    uint64_t ppl_d2 = 2, ppl_d1 = 0, ppl_d0 = 0;
    double round_t_one = 0, round_t_two = 4, round_t_meas = 2;
    bool majorana_only = false;

    static QecScheme surface();
    static QecScheme floquet();

    std::string_view name() const {
        return scheme_name(kind);
    }
    uint64_t phys_per_logical(uint32_t d) const;
    double syndrome_round_time(const QubitParams &params) const;
    /// d syndrome rounds.
    double logical_cycle_time(const QubitParams &params, uint32_t d) const;
    void validate() const;
};

struct ErrorBudget {
    double total = 0.01;
    double logical_share = 0.5;
    double distillation_share = 0.5;

    double logical() const {
        return total * logical_share;
    }
    double distillation() const {
        return total * distillation_share;
    }
    void validate() const;
};

struct CycleModel {
    uint64_t per_toffoli = 3;
    uint64_t per_measurement = 1;
};

/// 15-to-1 distillation: each round consumes 15 states and outputs one with error
/// prefactor * p_in^3 after duration_rounds * d_f syndrome rounds.
struct FactoryModel {
    double prefactor = 35;
    uint64_t input_states = 15;
    uint64_t duration_rounds = 11;
    uint32_t max_rounds = 3;
};

struct ModelOptions {
    CycleModel cycles;
    FactoryModel factory;
    uint32_t distance_cap = 99;
    uint32_t t_per_toffoli = 4;
};

struct TFactory {
    uint64_t physical_qubits = 0;
    double duration = 0;  // seconds
    double output_error = 0;
    uint32_t rounds = 0;
    uint32_t distance = 0;
};

struct PhysicalEstimate {
    uint64_t q_alg = 0;
    uint64_t q_total = 0;
    uint32_t distance = 0;
    uint64_t phys_per_logical = 0;
    uint64_t logical_cycles = 0;
    uint64_t t_states = 0;
    uint64_t factories = 0;
    uint64_t factory_qubits = 0;  ///< all factories together
    uint64_t physical_qubits = 0;
    double runtime_seconds = 0;
    TFactory factory;
};

uint64_t layout_total_qubits(uint64_t q_alg);
double logical_error_rate(const QecScheme &scheme, double p, uint32_t d);
uint64_t logical_cycles(const CircuitTally &tally, const CycleModel &model = {});
uint32_t select_distance(const QecScheme &scheme, double p, uint64_t q_total, uint64_t cycles,
                         double budget_logical, uint32_t cap = 99);
TFactory build_t_factory(const QecScheme &scheme, const QubitParams &params, double required_error,
                         uint32_t algorithm_distance, const FactoryModel &model = {});

/// Throws InvalidCombination when the scheme cannot run on the platform.
void check_compatible(const QecScheme &scheme, const QubitParams &params);

PhysicalEstimate estimate(const CircuitTally &tally, const QubitParams &params,
                          const QecScheme &scheme, const ErrorBudget &budget = {},
                          const ModelOptions &options = {});

}  // namespace qmul
