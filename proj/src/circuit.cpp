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

#include "qmul/circuit.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "qmul/error.hpp"

namespace qmul {

bool Register::overlaps(const Register &other) const {
    if (width == 0 || other.width == 0) {
        return false;
    }
    return start.index < other.end() && other.start.index < end();
}

Register Register::slice(uint32_t offset, uint32_t count) const {
    if (offset > width || count > width - offset) {
        fail(ErrorKind::InvalidArgument, "register slice out of bounds");
    }
    return Register{QubitId{start.index + offset}, count};
}

QubitList Register::bits() const {
    QubitList out(width);
    for (uint32_t i = 0; i < width; ++i) {
        out[i] = (*this)[i];
    }
    return out;
}

Gate Gate::x(QubitId target) {
    return Gate{GateKind::X, {target, {}, {}}, 0};
}

Gate Gate::cnot(QubitId control, QubitId target) {
    return Gate{GateKind::CNOT, {control, target, {}}, 0};
}

Gate Gate::toffoli(QubitId control1, QubitId control2, QubitId target) {
    return Gate{GateKind::TOFFOLI, {control1, control2, target}, 0};
}

Gate Gate::release(Register reg) {
    return Gate{GateKind::RELEASE, {reg.start, {}, {}}, reg.width};
}

unsigned Gate::arity() const {
    switch (kind) {
        case GateKind::X:
            return 1;
        case GateKind::CNOT:
            return 2;
        case GateKind::TOFFOLI:
            return 3;
        case GateKind::RELEASE:
            return 0;
    }
    return 0;
}

QubitId Gate::target() const {
    return q[arity() == 0 ? 0 : arity() - 1];
}

Register Gate::released() const {
    return Register{q[0], width};
}

uint32_t Gate::qubit_extent() const {
    if (kind == GateKind::RELEASE) {
        return q[0].index + width;
    }
    uint32_t m = 0;
    for (unsigned i = 0; i < arity(); ++i) {
        m = std::max(m, q[i].index);
    }
    return m + 1;
}

std::string Gate::str() const {
    std::ostringstream out;
    switch (kind) {
        case GateKind::X:
            out << "X " << q[0].index;
            break;
        case GateKind::CNOT:
            out << "CNOT " << q[0].index << " " << q[1].index;
            break;
        case GateKind::TOFFOLI:
            out << "TOFFOLI " << q[0].index << " " << q[1].index << " " << q[2].index;
            break;
        case GateKind::RELEASE:
            out << "RELEASE " << q[0].index << ":" << width;
            break;
    }
    return out.str();
}

void validate_gate(const Gate &gate) {
    switch (gate.kind) {
        case GateKind::X:
            return;
        case GateKind::CNOT:
            if (gate.q[0] == gate.q[1]) {
                fail(ErrorKind::InvalidGate, "duplicate operand in " + gate.str());
            }
            return;
        case GateKind::TOFFOLI:
            if (gate.q[0] == gate.q[1] || gate.q[0] == gate.q[2] || gate.q[1] == gate.q[2]) {
                fail(ErrorKind::InvalidGate, "duplicate operand in " + gate.str());
            }
            return;
        case GateKind::RELEASE:
            if (gate.width == 0) {
                fail(ErrorKind::InvalidGate, "RELEASE of an empty register");
            }
            return;
    }
}

void CircuitTally::add(const Gate &gate) {
    validate_gate(gate);
    switch (gate.kind) {
        case GateKind::X:
            ++x;
            break;
        case GateKind::CNOT:
            ++cnot;
            break;
        case GateKind::TOFFOLI:
            ++toffoli;
            break;
        case GateKind::RELEASE:
            measurements += gate.width;
            break;
    }
    qubit_highwater = std::max<uint64_t>(qubit_highwater, gate.qubit_extent());
}

CircuitTally record_gate(CircuitTally tally, const Gate &gate) {
    tally.add(gate);
    return tally;
}

CircuitTally merge_tally(const CircuitTally &a, const CircuitTally &b) {
    return CircuitTally{
        std::max(a.qubit_highwater, b.qubit_highwater),
        a.toffoli + b.toffoli,
        a.cnot + b.cnot,
        a.x + b.x,
        a.measurements + b.measurements,
    };
}

CircuitTally tally_gates(std::span<const Gate> gates) {
    CircuitTally tally;
    for (const auto &g : gates) {
        tally.add(g);
    }
    return tally;
}

uint64_t t_states_of(const CircuitTally &tally, uint64_t t_per_toffoli) {
    return t_per_toffoli * tally.toffoli;
}

void GateSink::on_masked_cnot(QubitId control, Register targets, std::span<const uint64_t> mask) {
    for (size_t w = 0; w < mask.size(); ++w) {
        uint64_t bits = mask[w];
        while (bits) {
            uint32_t i = static_cast<uint32_t>(w * 64 + std::countr_zero(bits));
            bits &= bits - 1;
            if (i >= targets.width) {
                return;
            }
            on_gate(Gate::cnot(control, targets[i]));
        }
    }
}

void CountingSink::on_gate(const Gate &gate) {
    tally_.add(gate);
}

void CountingSink::on_masked_cnot(QubitId control, Register targets, std::span<const uint64_t> mask) {
    size_t words = std::min<size_t>(mask.size(), (targets.width + 63) / 64);
    uint64_t count = 0;
    int64_t top = -1;
    for (size_t w = 0; w < words; ++w) {
        uint64_t bits = mask[w];
        uint64_t remaining = targets.width - w * 64;
        if (remaining < 64) {
            bits &= (uint64_t{1} << remaining) - 1;
        }
        if (bits) {
            count += static_cast<uint64_t>(std::popcount(bits));
            top = static_cast<int64_t>(w * 64 + 63 - std::countl_zero(bits));
        }
    }
    if (count == 0) {
        return;
    }
    if (targets.contains(control)) {
        fail(ErrorKind::InvalidGate, "masked CNOT control inside its target register");
    }
    tally_.cnot += count;
    uint64_t extent = std::max<uint64_t>(control.index, targets.start.index + static_cast<uint64_t>(top)) + 1;
    tally_.qubit_highwater = std::max(tally_.qubit_highwater, extent);
}

void RecordingSink::on_gate(const Gate &gate) {
    validate_gate(gate);
    gates_.push_back(gate);
}

Register QubitAllocator::allocate(uint32_t width) {
    if (width == 0) {
        fail(ErrorKind::InvalidArgument, "register width must be at least 1");
    }
    Register reg{QubitId{next_}, width};
    next_ += width;
    highwater_ = std::max(highwater_, next_);
    return reg;
}

void QubitAllocator::release(const Register &reg) {
    if (reg.width == 0) {
        return;
    }
    if (reg.end() != next_) {
        fail(ErrorKind::InvalidArgument, "registers must be released in reverse allocation order");
    }
    next_ = reg.start.index;
}

Register allocate_register(QubitAllocator &allocator, uint32_t width) {
    return allocator.allocate(width);
}

Ancilla::Ancilla(Ancilla &&other) noexcept : owner_(other.owner_), reg_(other.reg_) {
    other.owner_ = nullptr;
}

Ancilla &Ancilla::operator=(Ancilla &&other) noexcept {
    if (this != &other) {
        this->~Ancilla();
        owner_ = other.owner_;
        reg_ = other.reg_;
        other.owner_ = nullptr;
    }
    return *this;
}

Ancilla::~Ancilla() {
    if (owner_ == nullptr || reg_.width == 0) {
        return;
    }
    try {
        owner_->free(reg_);
    } catch (const Error &e) {
        std::fprintf(stderr, "ancilla freed out of order: %s\n", e.what());
        std::abort();
    }
}

Ancilla CircuitBuilder::borrow(uint32_t width) {
    if (width == 0) {
        return Ancilla(this, Register{QubitId{allocator_.next()}, 0});
    }
    return Ancilla(this, allocator_.allocate(width));
}

void CircuitBuilder::x_all(QubitSpan targets) {
    for (auto q : targets) {
        x(q);
    }
}

QubitList concat(QubitSpan a, QubitSpan b) {
    QubitList out;
    out.reserve(a.size() + b.size());
    out.insert(out.end(), a.begin(), a.end());
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

bool disjoint(QubitSpan a, QubitSpan b) {
    if (a.empty() || b.empty()) {
        return true;
    }
    auto [amin, amax] = std::minmax_element(a.begin(), a.end());
    auto [bmin, bmax] = std::minmax_element(b.begin(), b.end());
    if (*amax < *bmin || *bmax < *amin) {
        return true;
    }
    QubitList sa(a.begin(), a.end());
    QubitList sb(b.begin(), b.end());
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    size_t i = 0, j = 0;
    while (i < sa.size() && j < sb.size()) {
        if (sa[i] == sb[j]) {
            return false;
        }
        if (sa[i] < sb[j]) {
            ++i;
        } else {
            ++j;
        }
    }
    return true;
}

}  // namespace qmul
