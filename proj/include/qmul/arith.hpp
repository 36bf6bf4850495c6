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
#include <string>
#include <string_view>
#include <vector>

#include "qmul/bigint.hpp"
#include "qmul/circuit.hpp"

namespace qmul {

enum class Algorithm {
    Schoolbook,
    Karatsuba,
    Windowed,
};

enum class OperandMode {
    QQ,  ///< both factors quantum
    QC,  ///< factor c is a compile-time constant
};

std::string_view algorithm_name(Algorithm algorithm);
Algorithm parse_algorithm(std::string_view text);
std::string_view mode_name(OperandMode mode);
OperandMode parse_mode(std::string_view text);

struct MultiplySpec {
    Algorithm algorithm = Algorithm::Schoolbook;
    uint32_t n = 1;
    OperandMode mode = OperandMode::QC;
    uint32_t karatsuba_threshold = 16;
    std::optional<uint32_t> window;  ///< nullopt selects the window with choose_window

    void validate() const;
};

struct MultiplierRegisters {
    Register a;  ///< 2n-bit accumulator
    Register b;  ///< n-bit quantum factor
    std::optional<Register> c;  ///< n-bit quantum factor in QQ mode
};

/// The second factor of a product: either qubits or a classical value of a declared width.
struct Factor {
    QubitList bits;
    BigUint value = 0;
    uint32_t width = 0;
    bool quantum = false;

    static Factor qubits(QubitSpan bits);
    static Factor constant(const BigUint &value, uint32_t width);
};

// ---------------------------------------------------------------------------------------------
// Adders.
//
// The in-place adder is a ripple-carry adder whose carries are computed with Toffolis into fresh
// ancillae and uncomputed by measurement (RELEASE). For a target of m bits it costs exactly
// m - 1 Toffolis, m - 1 measurements and m - 1 carry ancillae, independent of the addend width.

uint64_t adder_toffoli_count(uint64_t target_width);

/// target += addend mod 2^|target|. Requires |addend| <= |target| and disjoint operands.
void emit_inplace_add(CircuitBuilder &builder, QubitSpan target, QubitSpan addend);
/// target -= addend mod 2^|target|, as ~(~target + addend).
void emit_inplace_sub(CircuitBuilder &builder, QubitSpan target, QubitSpan addend);
/// target += control * addend. Costs |addend| extra Toffolis for the AND register.
void emit_controlled_add(CircuitBuilder &builder, QubitId control, QubitSpan target, QubitSpan addend);
/// target += control * constant, with the constant loaded into a `constant_width`-bit register.
void emit_controlled_add_constant(CircuitBuilder &builder, QubitId control, QubitSpan target,
                                  const BigUint &constant, uint32_t constant_width);

// ---------------------------------------------------------------------------------------------
// Table lookup.

struct LookupTable {
    uint32_t address_bits = 0;
    uint32_t entry_width = 0;
    std::vector<BigUint> entries;

    void validate() const;
    /// entries[v] = v * factor mod 2^entry_width.
    static LookupTable multiples(const BigUint &factor, uint32_t address_bits, uint32_t entry_width);
};

/// Unary iteration over k address bits: 2^k - 2 Toffolis for k >= 1, none for k = 0.
uint64_t lookup_toffoli_count(uint32_t address_bits);
/// Phase fixup of a measured-out lookup: (2^ceil(k/2) - 2) + (2^floor(k/2) - 2), floored at 0.
uint64_t unlookup_toffoli_count(uint32_t address_bits);

/// output ^= table[address]. Output must start at zero.
void build_lookup(CircuitBuilder &builder, const Register &address, const LookupTable &table,
                  const Register &output);
/// Measures the output register out and emits the phase-fixup skeleton.
void build_unlookup(CircuitBuilder &builder, const Register &output, const Register &address,
                    const LookupTable &table);

/// Closed-form Toffoli estimate used to pick the window size.
uint64_t window_cost_model(uint32_t n, uint32_t w);
/// argmin over w in [1, 16] of window_cost_model, ties toward the smaller window.
uint32_t choose_window(uint32_t n);

// ---------------------------------------------------------------------------------------------
// Multipliers. All compute a += b * c mod 2^(2n).

/// acc += x * y mod 2^|acc| by shift-and-add rows, one controlled addition per bit of x.
void emit_schoolbook(CircuitBuilder &builder, QubitSpan acc, QubitSpan x, const Factor &y);
void emit_karatsuba(CircuitBuilder &builder, QubitSpan acc, QubitSpan x, const Factor &y, uint32_t threshold);
void emit_windowed(CircuitBuilder &builder, const Register &acc, const Register &x, const BigUint &c,
                   uint32_t n, uint32_t window);

MultiplierRegisters build_multiplier(const MultiplySpec &spec, const std::optional<BigUint> &c_constant,
                                     CircuitBuilder &builder);
MultiplierRegisters build_schoolbook(const MultiplySpec &spec, const std::optional<BigUint> &c_constant,
                                     CircuitBuilder &builder);
MultiplierRegisters build_karatsuba(const MultiplySpec &spec, const std::optional<BigUint> &c_constant,
                                    CircuitBuilder &builder);
MultiplierRegisters build_windowed(const MultiplySpec &spec, const std::optional<BigUint> &c_constant,
                                   CircuitBuilder &builder);

/// Limb layout chosen by the Karatsuba builder for n above the threshold.
struct KaratsubaLayout {
    uint32_t limbs = 1;        ///< power of two
    uint32_t limb_width = 0;   ///< ceil(n / limbs) <= threshold
    uint32_t coeff_width = 0;  ///< 2 * limb_width + lg(limbs)
};
KaratsubaLayout karatsuba_layout(uint32_t n, uint32_t threshold);

/// Builds into a counting sink. The constant for QC mode defaults to a seeded random n-bit value.
CircuitTally tally_multiplier(const MultiplySpec &spec, const std::optional<BigUint> &c_constant = std::nullopt);
/// Deterministic pseudo-random n-bit constant used when none is supplied.
BigUint default_constant(uint32_t n, uint64_t seed = 0x5eed);

}  // namespace qmul
