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

#include "qmul/arith.hpp"
#include "qmul/error.hpp"

namespace qmul {

namespace {

void require_disjoint(QubitSpan a, QubitSpan b, const char *what) {
    if (!disjoint(a, b)) {
        fail(ErrorKind::InvalidArgument, std::string(what) + ": operand registers overlap");
    }
}

void require_outside(QubitId q, QubitSpan span, const char *what) {
    if (std::find(span.begin(), span.end(), q) != span.end()) {
        fail(ErrorKind::InvalidArgument, std::string(what) + ": control qubit is also an operand");
    }
}

/// Ripple-carry body for |addend| <= |target|. Above the addend's top bit the carry chain reduces
/// to an increment (carry_{i+1} = carry_i AND t_i), so no zero padding is needed.
void ripple_add(CircuitBuilder &b, QubitSpan t, QubitSpan a) {
    const size_t m = t.size();
    const size_t k = a.size();
    if (k == 0) {
        return;
    }
    if (m == 1) {
        b.cnot(a[0], t[0]);
        return;
    }
    Ancilla carry = b.borrow(static_cast<uint32_t>(m - 1));
    // carry[i - 1] holds the carry into bit i.
    auto c = [&](size_t i) { return carry[static_cast<uint32_t>(i - 1)]; };

    b.toffoli(a[0], t[0], c(1));
    for (size_t i = 1; i + 1 < m; ++i) {
        if (i < k) {
            b.cnot(c(i), a[i]);
            b.cnot(c(i), t[i]);
            b.toffoli(a[i], t[i], c(i + 1));
            b.cnot(c(i), c(i + 1));
        } else {
            b.toffoli(c(i), t[i], c(i + 1));
        }
    }
    b.cnot(c(m - 1), t[m - 1]);
    if (m - 1 < k) {
        b.cnot(a[m - 1], t[m - 1]);
    }
    for (size_t i = m - 2; i >= 1; --i) {
        if (i < k) {
            b.cnot(c(i), c(i + 1));
            b.release(Register{c(i + 1), 1});
            b.cnot(c(i), a[i]);
            b.cnot(a[i], t[i]);
        } else {
            b.release(Register{c(i + 1), 1});
            b.cnot(c(i), t[i]);
        }
    }
    b.release(Register{c(1), 1});
    b.cnot(a[0], t[0]);
}

}  // namespace

uint64_t adder_toffoli_count(uint64_t target_width) {
    return target_width == 0 ? 0 : target_width - 1;
}

void emit_inplace_add(CircuitBuilder &builder, QubitSpan target, QubitSpan addend) {
    if (addend.size() > target.size()) {
        fail(ErrorKind::InvalidArgument, "addend wider than target");
    }
    require_disjoint(target, addend, "in-place add");
    if (target.empty()) {
        return;
    }
    ripple_add(builder, target, addend);
}

void emit_inplace_sub(CircuitBuilder &builder, QubitSpan target, QubitSpan addend) {
    builder.x_all(target);
    emit_inplace_add(builder, target, addend);
    builder.x_all(target);
}

void emit_controlled_add(CircuitBuilder &builder, QubitId control, QubitSpan target, QubitSpan addend) {
    if (addend.size() > target.size()) {
        fail(ErrorKind::InvalidArgument, "addend wider than target");
    }
    require_disjoint(target, addend, "controlled add");
    require_outside(control, target, "controlled add");
    require_outside(control, addend, "controlled add");
    if (target.empty() || addend.empty()) {
        return;
    }
    Ancilla gated = builder.borrow(static_cast<uint32_t>(addend.size()));
    for (uint32_t j = 0; j < gated.width(); ++j) {
        builder.toffoli(control, addend[j], gated[j]);
    }
    QubitList gated_bits = gated.reg().bits();
    emit_inplace_add(builder, target, gated_bits);
    builder.release(gated.reg());
}

void emit_controlled_add_constant(CircuitBuilder &builder, QubitId control, QubitSpan target,
                                  const BigUint &constant, uint32_t constant_width) {
    require_outside(control, target, "controlled constant add");
    uint32_t width = std::min<uint32_t>(constant_width, static_cast<uint32_t>(target.size()));
    if (width == 0) {
        return;
    }
    Ancilla loaded = builder.borrow(width);
    auto words = to_words(constant, width);
    builder.masked_cnot(control, loaded.reg(), words);
    QubitList loaded_bits = loaded.reg().bits();
    emit_inplace_add(builder, target, loaded_bits);
    builder.masked_cnot(control, loaded.reg(), words);
}

}  // namespace qmul
