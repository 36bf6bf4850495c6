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

#include <functional>
#include <optional>

#include "qmul/arith.hpp"
#include "qmul/error.hpp"

namespace qmul {

namespace {

using Leaf = std::function<void(std::optional<QubitId> control, uint64_t value)>;

/// Unary iteration over address bits [0, level), most significant first. Each internal node below
/// the root computes one AND into a fresh ancilla and measures it out afterwards.
void iterate(CircuitBuilder &b, std::optional<QubitId> control, const Register &address, uint32_t level,
             uint64_t value, const Leaf &leaf) {
    if (level == 0) {
        leaf(control, value);
        return;
    }
    QubitId bit = address[level - 1];
    uint64_t weight = uint64_t{1} << (level - 1);
    if (!control) {
        b.x(bit);
        iterate(b, bit, address, level - 1, value, leaf);
        b.x(bit);
        iterate(b, bit, address, level - 1, value | weight, leaf);
        return;
    }
    Ancilla branch = b.borrow(1);
    b.x(bit);
    b.toffoli(*control, bit, branch[0]);
    b.x(bit);
    iterate(b, branch[0], address, level - 1, value, leaf);
    b.cnot(*control, branch[0]);
    iterate(b, branch[0], address, level - 1, value | weight, leaf);
    b.release(branch.reg());
}

}  // namespace

void LookupTable::validate() const {
    if (address_bits > 20) {
        fail(ErrorKind::InvalidArgument, "lookup table address too wide");
    }
    if (entries.size() != (size_t{1} << address_bits)) {
        fail(ErrorKind::InvalidArgument, "lookup table must have exactly 2^k entries");
    }
    for (const auto &e : entries) {
        if (e < 0 || (!e.is_zero() && boost::multiprecision::msb(e) >= entry_width)) {
            fail(ErrorKind::InvalidArgument, "lookup table entry exceeds entry width");
        }
    }
}

LookupTable LookupTable::multiples(const BigUint &factor, uint32_t address_bits, uint32_t entry_width) {
    LookupTable table;
    table.address_bits = address_bits;
    table.entry_width = entry_width;
    size_t count = size_t{1} << address_bits;
    table.entries.reserve(count);
    BigUint step = low_bits(factor, entry_width);
    BigUint modulus = pow2(entry_width);
    BigUint acc = 0;
    for (size_t v = 0; v < count; ++v) {
        table.entries.push_back(acc);
        acc += step;
        if (acc >= modulus) {
            acc -= modulus;
        }
    }
    return table;
}

uint64_t lookup_toffoli_count(uint32_t address_bits) {
    if (address_bits == 0) {
        return 0;
    }
    return (uint64_t{1} << address_bits) - 2;
}

uint64_t unlookup_toffoli_count(uint32_t address_bits) {
    uint32_t low = address_bits / 2;
    return lookup_toffoli_count(address_bits - low) + lookup_toffoli_count(low);
}

void build_lookup(CircuitBuilder &builder, const Register &address, const LookupTable &table,
                  const Register &output) {
    if (address.width != table.address_bits) {
        fail(ErrorKind::InvalidArgument, "address width does not match the table");
    }
    if (output.width != table.entry_width) {
        fail(ErrorKind::InvalidArgument, "output width does not match the table entry width");
    }
    if (table.entries.size() != (size_t{1} << table.address_bits)) {
        fail(ErrorKind::InvalidArgument, "lookup table must have exactly 2^k entries");
    }
    if (address.overlaps(output)) {
        fail(ErrorKind::InvalidArgument, "lookup address overlaps output");
    }
    Leaf write = [&](std::optional<QubitId> control, uint64_t value) {
        const BigUint &entry = table.entries[value];
        if (!control) {
            for (uint32_t i = 0; i < output.width; ++i) {
                if (bit_of(entry, i)) {
                    builder.x(output[i]);
                }
            }
            return;
        }
        auto words = to_words(entry, output.width);
        builder.masked_cnot(*control, output, words);
    };
    iterate(builder, std::nullopt, address, address.width, 0, write);
}

void build_unlookup(CircuitBuilder &builder, const Register &output, const Register &address,
                    const LookupTable &table) {
    if (address.width != table.address_bits || output.width != table.entry_width) {
        fail(ErrorKind::InvalidArgument, "unlookup registers do not match the table");
    }
    builder.release(output);

    // Phase fixup: one-hot encode the low half of the address, then iterate over the high half.
    // The fixup's phase gates are Clifford and not part of the gate alphabet.
    uint32_t low = address.width / 2;
    uint32_t high = address.width - low;
    Leaf nothing = [](std::optional<QubitId>, uint64_t) {};
    Register high_bits = address.slice(low, high);
    if (low == 0) {
        iterate(builder, std::nullopt, high_bits, high, 0, nothing);
        return;
    }
    Ancilla one_hot = builder.borrow(1u << low);
    LookupTable unary;
    unary.address_bits = low;
    unary.entry_width = one_hot.width();
    for (uint64_t v = 0; v < (uint64_t{1} << low); ++v) {
        unary.entries.push_back(pow2(static_cast<uint32_t>(v)));
    }
    build_lookup(builder, address.slice(0, low), unary, one_hot.reg());
    iterate(builder, std::nullopt, high_bits, high, 0, nothing);
    builder.release(one_hot.reg());
}

}  // namespace qmul
