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

#include <algorithm>
#include <random>

#include "qmul/arith.hpp"
#include "qmul/error.hpp"

namespace qmul {

std::string_view algorithm_name(Algorithm algorithm) {
    switch (algorithm) {
        case Algorithm::Schoolbook:
            return "schoolbook";
        case Algorithm::Karatsuba:
            return "karatsuba";
        case Algorithm::Windowed:
            return "windowed";
    }
    return "?";
}

Algorithm parse_algorithm(std::string_view text) {
    if (text == "schoolbook") {
        return Algorithm::Schoolbook;
    }
    if (text == "karatsuba") {
        return Algorithm::Karatsuba;
    }
    if (text == "windowed") {
        return Algorithm::Windowed;
    }
    fail(ErrorKind::InvalidArgument, "unknown algorithm '" + std::string(text) +
                                         "' (expected schoolbook, karatsuba or windowed)");
}

std::string_view mode_name(OperandMode mode) {
    return mode == OperandMode::QQ ? "qq" : "qc";
}

OperandMode parse_mode(std::string_view text) {
    if (text == "qq") {
        return OperandMode::QQ;
    }
    if (text == "qc") {
        return OperandMode::QC;
    }
    fail(ErrorKind::InvalidArgument, "unknown mode '" + std::string(text) + "' (expected qq or qc)");
}

void MultiplySpec::validate() const {
    if (n == 0) {
        fail(ErrorKind::InvalidArgument, "bit size must be at least 1");
    }
    if (n > (1u << 26)) {
        fail(ErrorKind::InvalidArgument, "bit size too large");
    }
    if (karatsuba_threshold < 2) {
        fail(ErrorKind::InvalidArgument, "karatsuba threshold must be at least 2");
    }
    if (window && (*window < 1 || *window > 16)) {
        fail(ErrorKind::InvalidArgument, "window must lie in [1, 16]");
    }
    if (algorithm == Algorithm::Windowed && mode == OperandMode::QQ) {
        fail(ErrorKind::UnsupportedMode, "windowed multiplication needs a classical factor (mode qc)");
    }
}

Factor Factor::qubits(QubitSpan bits) {
    Factor f;
    f.bits.assign(bits.begin(), bits.end());
    f.width = static_cast<uint32_t>(bits.size());
    f.quantum = true;
    return f;
}

Factor Factor::constant(const BigUint &value, uint32_t width) {
    Factor f;
    f.value = low_bits(value, width);
    f.width = width;
    f.quantum = false;
    return f;
}

void emit_schoolbook(CircuitBuilder &builder, QubitSpan acc, QubitSpan x, const Factor &y) {
    for (size_t i = 0; i < x.size() && i < acc.size(); ++i) {
        QubitSpan target = acc.subspan(i);
        if (y.quantum) {
            size_t width = std::min(y.bits.size(), target.size());
            emit_controlled_add(builder, x[i], target, QubitSpan(y.bits).first(width));
        } else {
            emit_controlled_add_constant(builder, x[i], target, y.value, y.width);
        }
    }
}

uint64_t window_cost_model(uint32_t n, uint32_t w) {
    uint64_t windows = (n + w - 1) / w;
    uint64_t per_window = (uint64_t{1} << w) + (uint64_t{1} << ((w + 1) / 2)) + adder_toffoli_count(2 * uint64_t{n});
    return windows * per_window;
}

uint32_t choose_window(uint32_t n) {
    if (n == 0) {
        fail(ErrorKind::InvalidArgument, "bit size must be at least 1");
    }
    uint32_t best = 1;
    uint64_t best_cost = window_cost_model(n, 1);
    for (uint32_t w = 2; w <= 16; ++w) {
        uint64_t cost = window_cost_model(n, w);
        if (cost < best_cost) {
            best = w;
            best_cost = cost;
        }
    }
    return best;
}

void emit_windowed(CircuitBuilder &builder, const Register &acc, const Register &x, const BigUint &c,
                   uint32_t n, uint32_t window) {
    for (uint32_t lo = 0; lo < n; lo += window) {
        uint32_t k = std::min(window, n - lo);
        Register address = x.slice(lo, k);
        Register target = acc.slice_from(lo);
        uint32_t entry_width = std::min(n + k, target.width);
        LookupTable table = LookupTable::multiples(c, k, entry_width);
        Ancilla out = builder.borrow(entry_width);
        build_lookup(builder, address, table, out.reg());
        QubitList target_bits = target.bits();
        QubitList out_bits = out.reg().bits();
        emit_inplace_add(builder, target_bits, out_bits);
        build_unlookup(builder, out.reg(), address, table);
    }
}

namespace {

struct Operands {
    MultiplierRegisters regs;
    Factor y;
};

Operands allocate_operands(const MultiplySpec &spec, const std::optional<BigUint> &c_constant,
                           CircuitBuilder &builder) {
    spec.validate();
    Operands ops;
    if (spec.mode == OperandMode::QQ) {
        if (c_constant) {
            fail(ErrorKind::InvalidArgument, "mode qq takes no classical constant");
        }
    } else {
        if (!c_constant) {
            fail(ErrorKind::InvalidArgument, "mode qc needs a classical constant");
        }
        if (*c_constant < 0 || *c_constant >= pow2(spec.n)) {
            fail(ErrorKind::InvalidArgument, "classical constant must be below 2^n");
        }
    }
    ops.regs.a = builder.allocate(2 * spec.n);
    ops.regs.b = builder.allocate(spec.n);
    if (spec.mode == OperandMode::QQ) {
        ops.regs.c = builder.allocate(spec.n);
        QubitList c_bits = ops.regs.c->bits();
        ops.y = Factor::qubits(c_bits);
    } else {
        ops.y = Factor::constant(*c_constant, spec.n);
    }
    return ops;
}

}  // namespace

MultiplierRegisters build_schoolbook(const MultiplySpec &spec, const std::optional<BigUint> &c_constant,
                                     CircuitBuilder &builder) {
    Operands ops = allocate_operands(spec, c_constant, builder);
    QubitList acc = ops.regs.a.bits();
    QubitList x = ops.regs.b.bits();
    emit_schoolbook(builder, acc, x, ops.y);
    return ops.regs;
}

MultiplierRegisters build_karatsuba(const MultiplySpec &spec, const std::optional<BigUint> &c_constant,
                                    CircuitBuilder &builder) {
    Operands ops = allocate_operands(spec, c_constant, builder);
    QubitList acc = ops.regs.a.bits();
    QubitList x = ops.regs.b.bits();
    emit_karatsuba(builder, acc, x, ops.y, spec.karatsuba_threshold);
    return ops.regs;
}

MultiplierRegisters build_windowed(const MultiplySpec &spec, const std::optional<BigUint> &c_constant,
                                   CircuitBuilder &builder) {
    if (spec.mode != OperandMode::QC) {
        fail(ErrorKind::UnsupportedMode, "windowed multiplication needs a classical factor (mode qc)");
    }
    Operands ops = allocate_operands(spec, c_constant, builder);
    uint32_t window = spec.window ? *spec.window : choose_window(spec.n);
    emit_windowed(builder, ops.regs.a, ops.regs.b, ops.y.value, spec.n, window);
    return ops.regs;
}

MultiplierRegisters build_multiplier(const MultiplySpec &spec, const std::optional<BigUint> &c_constant,
                                     CircuitBuilder &builder) {
    switch (spec.algorithm) {
        case Algorithm::Schoolbook:
            return build_schoolbook(spec, c_constant, builder);
        case Algorithm::Karatsuba:
            return build_karatsuba(spec, c_constant, builder);
        case Algorithm::Windowed:
            return build_windowed(spec, c_constant, builder);
    }
    fail(ErrorKind::InvalidArgument, "unknown algorithm");
}

BigUint default_constant(uint32_t n, uint64_t seed) {
    std::mt19937_64 rng(seed ^ (uint64_t{n} * 0x9e3779b97f4a7c15ULL));
    return random_bits(rng, n);
}

CircuitTally tally_multiplier(const MultiplySpec &spec, const std::optional<BigUint> &c_constant) {
    spec.validate();
    std::optional<BigUint> c = c_constant;
    if (spec.mode == OperandMode::QC && !c) {
        c = default_constant(spec.n);
    }
    CountingSink sink;
    CircuitBuilder builder(sink);
    build_multiplier(spec, c, builder);
    return sink.tally();
}

}  // namespace qmul
