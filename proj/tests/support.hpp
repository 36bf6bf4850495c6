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

#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

#include "qmul/circuit.hpp"
#include "qmul/sim.hpp"

namespace qmul::testing {

/// Simulates `gates` from the all-zero state after loading the given register values.
inline SimState run_gates(const std::vector<Gate> &gates, uint32_t qubits,
                          const std::vector<std::pair<Register, uint64_t>> &inputs) {
    SimState s = init_state(qubits);
    for (const auto &[reg, value] : inputs) {
        load_register(s, reg, BigUint(value));
    }
    apply_all(s, gates);
    return s;
}

inline uint64_t read_u64(const SimState &s, const Register &reg) {
    return static_cast<uint64_t>(read_register(s, reg));
}

/// Number of set qubits outside the listed registers.
inline uint32_t stray_ones(const SimState &s, const std::vector<Register> &keep) {
    uint32_t count = 0;
    for (uint32_t q = 0; q < s.qubit_count(); ++q) {
        bool kept = false;
        for (const auto &r : keep) {
            kept = kept || r.contains(QubitId{q});
        }
        if (!kept && s.get(QubitId{q})) {
            ++count;
        }
    }
    return count;
}

/// Least-squares slope of log2(y) against log2(x).
inline double loglog_slope(const std::vector<double> &x, const std::vector<double> &y) {
    const size_t k = x.size();
    double mx = 0, my = 0;
    for (size_t i = 0; i < k; ++i) {
        mx += std::log2(x[i]);
        my += std::log2(y[i]);
    }
    mx /= k;
    my /= k;
    double num = 0, den = 0;
    for (size_t i = 0; i < k; ++i) {
        double dx = std::log2(x[i]) - mx;
        num += dx * (std::log2(y[i]) - my);
        den += dx * dx;
    }
    return num / den;
}

}  // namespace qmul::testing
