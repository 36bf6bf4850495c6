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
#include <span>
#include <vector>

#include "qmul/arith.hpp"
#include "qmul/bigint.hpp"
#include "qmul/circuit.hpp"

namespace qmul {

/// Computational basis state. Every gate in the alphabet permutes basis states, so no amplitudes
/// are needed.
class SimState {
   public:
    explicit SimState(uint32_t qubit_count) : bits_(qubit_count, 0) {
    }

    uint32_t qubit_count() const {
        return static_cast<uint32_t>(bits_.size());
    }
    bool get(QubitId q) const;
    void set(QubitId q, bool value);
    void apply(const Gate &gate);

    bool operator==(const SimState &) const = default;

   private:
    void check(QubitId q) const;

    std::vector<uint8_t> bits_;
};

SimState init_state(uint32_t qubit_count);
/// Little-endian: bit i of value goes to reg[i].
void load_register(SimState &state, const Register &reg, const BigUint &value);
BigUint read_register(const SimState &state, const Register &reg);
/// RELEASE zeroes its register.
void apply(SimState &state, const Gate &gate);
void apply_all(SimState &state, std::span<const Gate> gates);

struct VerifyStrategy {
    bool exhaustive = true;
    uint64_t samples = 0;
    uint64_t seed = 0;

    static VerifyStrategy exhaustive_cases() {
        return VerifyStrategy{true, 0, 0};
    }
    static VerifyStrategy random(uint64_t samples, uint64_t seed) {
        return VerifyStrategy{false, samples, seed};
    }
};

struct VerifyFailure {
    BigUint a0, b, c, got, expected;
};

struct VerifyReport {
    uint64_t cases = 0;
    uint64_t failure_count = 0;
    std::vector<VerifyFailure> failures;  ///< first few counterexamples
    uint64_t ancilla_violations = 0;
    uint64_t gates = 0;

    bool ok() const {
        return failure_count == 0 && ancilla_violations == 0;
    }
    void merge(const VerifyReport &other);
};

/// A multiplier circuit materialized for simulation.
struct RecordedMultiplier {
    MultiplySpec spec;
    std::optional<BigUint> c_constant;
    MultiplierRegisters regs;
    std::vector<Gate> gates;
    uint32_t qubits = 0;
};

RecordedMultiplier record_multiplier(const MultiplySpec &spec, const std::optional<BigUint> &c_constant);

/// Runs one input through the circuit and appends any discrepancy to the report.
void check_case(const RecordedMultiplier &circuit, const BigUint &a0, const BigUint &b, const BigUint &c,
                VerifyReport &report);

/// True when exhaustive enumeration of (a0, b, c) stays within 2^20 cases.
bool exhaustive_allowed(const MultiplySpec &spec);

VerifyReport verify_multiplier(const MultiplySpec &spec, const VerifyStrategy &strategy, unsigned threads = 0);

}  // namespace qmul
