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

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace qmul {

struct QubitId {
    uint32_t index = 0;

    auto operator<=>(const QubitId &) const = default;
};

using QubitSpan = std::span<const QubitId>;
using QubitList = std::vector<QubitId>;

/// A contiguous block of qubits. Bit i of the register holds weight 2^i (little-endian).
struct Register {
    QubitId start{};
    uint32_t width = 0;

    QubitId operator[](uint32_t i) const {
        return QubitId{start.index + i};
    }
    uint32_t end() const {
        return start.index + width;
    }
    bool contains(QubitId q) const {
        return q.index >= start.index && q.index < end();
    }
    bool overlaps(const Register &other) const;
    Register slice(uint32_t offset, uint32_t count) const;
    Register slice_from(uint32_t offset) const {
        return slice(offset, width - offset);
    }
    QubitList bits() const;

    bool operator==(const Register &) const = default;
};

enum class GateKind : uint8_t {
    X,
    CNOT,
    TOFFOLI,
    RELEASE,
};

/// One primitive reversible operation.
///
/// X, CNOT and TOFFOLI use `q[0..arity)` with the target last. RELEASE models measurement-based
/// uncomputation of the register `[q[0], q[0] + width)`, which must hold garbage that is a
/// function of the rest of the state.
struct Gate {
    GateKind kind = GateKind::X;
    std::array<QubitId, 3> q{};
    uint32_t width = 0;

    static Gate x(QubitId target);
    static Gate cnot(QubitId control, QubitId target);
    static Gate toffoli(QubitId control1, QubitId control2, QubitId target);
    static Gate release(Register reg);

    unsigned arity() const;
    QubitId target() const;
    Register released() const;
    /// 1 + the largest qubit index this gate touches.
    uint32_t qubit_extent() const;
    std::string str() const;

    bool operator==(const Gate &) const = default;
};

/// Throws InvalidGate when a multi-qubit gate repeats an operand or a RELEASE is empty.
void validate_gate(const Gate &gate);

struct CircuitTally {
    uint64_t qubit_highwater = 0;
    uint64_t toffoli = 0;
    uint64_t cnot = 0;
    uint64_t x = 0;
    uint64_t measurements = 0;

    void add(const Gate &gate);

    bool operator==(const CircuitTally &) const = default;
};

CircuitTally record_gate(CircuitTally tally, const Gate &gate);
CircuitTally merge_tally(const CircuitTally &a, const CircuitTally &b);
CircuitTally tally_gates(std::span<const Gate> gates);

/// T states consumed. The circuits contain no bare T gates or rotations, so only Toffolis count.
uint64_t t_states_of(const CircuitTally &tally, uint64_t t_per_toffoli = 4);

class GateSink {
   public:
    virtual ~GateSink() = default;
    virtual void on_gate(const Gate &gate) = 0;

    /// CNOT from `control` onto `targets[i]` for every set bit i of `mask` below targets.width.
    virtual void on_masked_cnot(QubitId control, Register targets, std::span<const uint64_t> mask);
};

/// Tallies gates without storing them.
class CountingSink final : public GateSink {
   public:
    void on_gate(const Gate &gate) override;
    void on_masked_cnot(QubitId control, Register targets, std::span<const uint64_t> mask) override;

    const CircuitTally &tally() const {
        return tally_;
    }

   private:
    CircuitTally tally_;
};

/// Materializes the gate list. Only used on the verification path.
class RecordingSink final : public GateSink {
   public:
    void on_gate(const Gate &gate) override;

    const std::vector<Gate> &gates() const {
        return gates_;
    }
    std::vector<Gate> take() {
        return std::move(gates_);
    }

   private:
    std::vector<Gate> gates_;
};

/// Hands out contiguous qubit blocks. Blocks are returned in LIFO order so workspace freed by one
/// step (already restored to zero) is handed to the next.
class QubitAllocator {
   public:
    Register allocate(uint32_t width);
    void release(const Register &reg);

    uint32_t next() const {
        return next_;
    }
    uint32_t highwater() const {
        return highwater_;
    }

   private:
    uint32_t next_ = 0;
    uint32_t highwater_ = 0;
};

Register allocate_register(QubitAllocator &allocator, uint32_t width);

class CircuitBuilder;

/// Scoped workspace. Must be zero again when it goes out of scope.
class Ancilla {
   public:
    Ancilla() = default;
    Ancilla(CircuitBuilder *owner, Register reg) : owner_(owner), reg_(reg) {
    }
    Ancilla(const Ancilla &) = delete;
    Ancilla &operator=(const Ancilla &) = delete;
    Ancilla(Ancilla &&other) noexcept;
    Ancilla &operator=(Ancilla &&other) noexcept;
    ~Ancilla();

    const Register &reg() const {
        return reg_;
    }
    QubitId operator[](uint32_t i) const {
        return reg_[i];
    }
    uint32_t width() const {
        return reg_.width;
    }

   private:
    CircuitBuilder *owner_ = nullptr;
    Register reg_{};
};

/// Allocation plus gate emission into a sink. One builder per circuit.
class CircuitBuilder {
   public:
    explicit CircuitBuilder(GateSink &sink) : sink_(&sink) {
    }

    /// Long-lived register (operands, outputs).
    Register allocate(uint32_t width) {
        return allocator_.allocate(width);
    }
    /// Zeroed workspace block; width 0 yields an empty block.
    Ancilla borrow(uint32_t width);
    void free(const Register &reg) {
        allocator_.release(reg);
    }

    void x(QubitId target) {
        sink_->on_gate(Gate::x(target));
    }
    void cnot(QubitId control, QubitId target) {
        sink_->on_gate(Gate::cnot(control, target));
    }
    void toffoli(QubitId c1, QubitId c2, QubitId target) {
        sink_->on_gate(Gate::toffoli(c1, c2, target));
    }
    void release(const Register &reg) {
        sink_->on_gate(Gate::release(reg));
    }
    void masked_cnot(QubitId control, Register targets, std::span<const uint64_t> mask) {
        sink_->on_masked_cnot(control, targets, mask);
    }
    void x_all(QubitSpan targets);

    const QubitAllocator &allocator() const {
        return allocator_;
    }
    GateSink &sink() {
        return *sink_;
    }

   private:
    GateSink *sink_;
    QubitAllocator allocator_;
};

QubitList concat(QubitSpan a, QubitSpan b);
bool disjoint(QubitSpan a, QubitSpan b);

}  // namespace qmul
