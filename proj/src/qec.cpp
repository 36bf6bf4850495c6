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


#include "qmul/qec.hpp"

#include <cmath>

#include "qmul/error.hpp"

namespace qmul {

namespace {

uint64_t isqrt_ceil(uint64_t v) {
    uint64_t s = static_cast<uint64_t>(std::sqrt(static_cast<long double>(v)));
    while (static_cast<unsigned __int128>(s) * s > v) {
        --s;
    }
    while (static_cast<unsigned __int128>(s + 1) * (s + 1) <= v) {
        ++s;
    }
    return s * s == v ? s : s + 1;
}

/// Ceiling that ignores floating-point dust right above an integer.
uint64_t ceil_count(long double x) {
    long double r = std::nearbyint(x);
    if (std::fabs(x - r) <= 1e-9L * std::max(1.0L, std::fabs(x))) {
        return static_cast<uint64_t>(r);
    }
    return static_cast<uint64_t>(std::ceil(x));
}

void check_below_threshold(const QecScheme &scheme, double p) {
    if (!(p < scheme.p_star)) {
        fail(ErrorKind::AboveThreshold, "physical error rate " + std::to_string(p) +
                                            " is not below the " + std::string(scheme.name()) +
                                            " threshold " + std::to_string(scheme.p_star));
    }
}

}  // namespace

std::string_view scheme_name(SchemeKind kind) {
    return kind == SchemeKind::Floquet ? "floquet" : "surface";
}

SchemeKind parse_scheme(std::string_view text) {
    if (text == "surface") {
        return SchemeKind::Surface;
    }
    if (text == "floquet") {
        return SchemeKind::Floquet;
    }
    fail(ErrorKind::InvalidArgument,
         "unknown code '" + std::string(text) + "'; expected surface or floquet");
}

QecScheme QecScheme::surface() {
    return QecScheme{};
}

QecScheme QecScheme::floquet() {
    QecScheme s;
    s.kind = SchemeKind::Floquet;
    s.p_star = 1e-2;
    s.a_pre = 0.07;
    s.ppl_d2 = 4;
    s.ppl_d1 = 8;
    s.ppl_d0 = 0;
    s.round_t_one = 0;
    s.round_t_two = 0;
    s.round_t_meas = 3;
    s.majorana_only = true;
    return s;
}

uint64_t QecScheme::phys_per_logical(uint32_t d) const {
    uint64_t dd = d;
    return ppl_d2 * dd * dd + ppl_d1 * dd + ppl_d0;
}

double QecScheme::syndrome_round_time(const QubitParams &params) const {
    return round_t_one * params.t_one_qubit + round_t_two * params.t_two_qubit +
           round_t_meas * params.t_meas;
}

double QecScheme::logical_cycle_time(const QubitParams &params, uint32_t d) const {
    return d * syndrome_round_time(params);
}

void QecScheme::validate() const {
    if (!(p_star > 0 && p_star < 1)) {
        fail(ErrorKind::RangeError, std::string(name()) + ".p_star must lie in (0, 1)");
    }
    if (!(a_pre > 0)) {
        fail(ErrorKind::RangeError, std::string(name()) + ".a_pre must be positive");
    }
    if (ppl_d2 == 0 && ppl_d1 == 0) {
        fail(ErrorKind::RangeError,
             std::string(name()) + ": qubits per logical qubit must grow with the distance");
    }
    if (!(round_t_one >= 0 && round_t_two >= 0 && round_t_meas >= 0) ||
        round_t_one + round_t_two + round_t_meas <= 0) {
        fail(ErrorKind::RangeError,
             std::string(name()) + ": syndrome round coefficients must be non-negative, not all 0");
    }
}

void ErrorBudget::validate() const {
    if (!(total > 0 && total < 1)) {
        fail(ErrorKind::RangeError, "budget.total must lie in (0, 1)");
    }
    if (!(logical_share > 0 && distillation_share > 0) ||
        std::fabs(logical_share + distillation_share - 1.0) > 1e-9) {
        fail(ErrorKind::RangeError, "budget shares must be positive and sum to 1");
    }
}

uint64_t layout_total_qubits(uint64_t q_alg) {
    if (q_alg == 0) {
        fail(ErrorKind::InvalidArgument, "layout needs at least one algorithm qubit");
    }
    if (q_alg > (uint64_t{1} << 58)) {
        fail(ErrorKind::InvalidArgument, "algorithm qubit count too large");
    }
    return 2 * q_alg + isqrt_ceil(8 * q_alg) + 1;
}

double logical_error_rate(const QecScheme &scheme, double p, uint32_t d) {
    check_below_threshold(scheme, p);
    if (d < 3 || d % 2 == 0) {
        fail(ErrorKind::InvalidArgument, "code distance must be odd and at least 3");
    }
    return scheme.a_pre * std::pow(p / scheme.p_star, (d + 1) / 2);
}

uint64_t logical_cycles(const CircuitTally &tally, const CycleModel &model) {
    return model.per_toffoli * tally.toffoli + model.per_measurement * tally.measurements;
}

uint32_t select_distance(const QecScheme &scheme, double p, uint64_t q_total, uint64_t cycles,
                         double budget_logical, uint32_t cap) {
    check_below_threshold(scheme, p);
    if (q_total == 0 || cycles == 0) {
        fail(ErrorKind::InvalidArgument, "distance selection needs q_total, cycles >= 1");
    }
    if (!(budget_logical > 0)) {
        fail(ErrorKind::InvalidArgument, "logical error budget must be positive");
    }
    const long double volume = static_cast<long double>(q_total) * cycles;
    for (uint32_t d = 3; d <= cap; d += 2) {
        if (volume * logical_error_rate(scheme, p, d) <= budget_logical) {
            return d;
        }
    }
    fail(ErrorKind::ModelInfeasible,
         "no code distance up to " + std::to_string(cap) + " meets the logical error budget");
}

TFactory build_t_factory(const QecScheme &scheme, const QubitParams &params, double required_error,
                         uint32_t algorithm_distance, const FactoryModel &model) {
    if (!(required_error > 0)) {
        fail(ErrorKind::InvalidArgument, "required T-state error must be positive");
    }
    TFactory f;
    double err = params.t_inject_error;
    while (err > required_error) {
        if (f.rounds == model.max_rounds) {
            fail(ErrorKind::ModelInfeasible,
                 "distillation cannot reach T-state error " + std::to_string(required_error) +
                     " within " + std::to_string(model.max_rounds) + " rounds");
        }
        double next = model.prefactor * err * err * err;
        if (!(next < err)) {
            fail(ErrorKind::ModelInfeasible, "injection error " +
                                                 std::to_string(params.t_inject_error) +
                                                 " is too high for distillation to improve it");
        }
        err = next;
        ++f.rounds;
    }
    if (f.rounds == 0) {
        f.rounds = 1;
        err = model.prefactor * err * err * err;
    }
    uint32_t d_f = (algorithm_distance + 1) / 2;
    if (d_f % 2 == 0) {
        ++d_f;
    }
    d_f = std::max<uint32_t>(d_f, 3);
    f.distance = d_f;
    f.output_error = err;
    f.physical_qubits = model.input_states * scheme.phys_per_logical(d_f) * f.rounds;
    f.duration = static_cast<double>(model.duration_rounds) * d_f *
                 scheme.syndrome_round_time(params) * f.rounds;
    return f;
}

void check_compatible(const QecScheme &scheme, const QubitParams &params) {
    if (scheme.majorana_only && params.family != Family::Majorana) {
        fail(ErrorKind::InvalidCombination, std::string(scheme.name()) +
                                                " code requires a Majorana platform, '" +
                                                params.name + "' is gate-based");
    }
}

PhysicalEstimate estimate(const CircuitTally &tally, const QubitParams &params,
                          const QecScheme &scheme, const ErrorBudget &budget,
                          const ModelOptions &options) {
    check_compatible(scheme, params);
    scheme.validate();
    budget.validate();
    params.validate();
    const double p = physical_error_rate(params);
    check_below_threshold(scheme, p);

    PhysicalEstimate e;
    e.q_alg = tally.qubit_highwater;
    e.q_total = layout_total_qubits(e.q_alg);
    e.logical_cycles = logical_cycles(tally, options.cycles);
    e.distance = select_distance(scheme, p, e.q_total, std::max<uint64_t>(e.logical_cycles, 1),
                                 budget.logical(), options.distance_cap);
    e.phys_per_logical = scheme.phys_per_logical(e.distance);
    e.runtime_seconds =
        static_cast<double>(e.logical_cycles) * scheme.logical_cycle_time(params, e.distance);
    e.t_states = t_states_of(tally, options.t_per_toffoli);
    if (e.t_states > 0) {
        e.factory = build_t_factory(scheme, params,
                                    budget.distillation() / static_cast<double>(e.t_states),
                                    e.distance, options.factory);
        if (e.runtime_seconds > 0) {
            e.factories = ceil_count(static_cast<long double>(e.t_states) * e.factory.duration /
                                     e.runtime_seconds);
        } else {
            e.factories = 1;
        }
        e.factory_qubits = e.factories * e.factory.physical_qubits;
    }
    e.physical_qubits = e.q_total * e.phys_per_logical + e.factory_qubits;
    return e;
}

}  // namespace qmul
