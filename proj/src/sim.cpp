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

#include "qmul/sim.hpp"

#include <algorithm>
#include <random>
#include <thread>

#include "qmul/error.hpp"

namespace qmul {

void SimState::check(QubitId q) const {
    if (q.index >= bits_.size()) {
        fail(ErrorKind::OutOfRange, "qubit " + std::to_string(q.index) + " outside a " +
                                        std::to_string(bits_.size()) + "-qubit state");
    }
}

bool SimState::get(QubitId q) const {
    check(q);
    return bits_[q.index] != 0;
}

void SimState::set(QubitId q, bool value) {
    check(q);
    bits_[q.index] = value ? 1 : 0;
}

void SimState::apply(const Gate &gate) {
    validate_gate(gate);
    if (gate.qubit_extent() > bits_.size()) {
        fail(ErrorKind::OutOfRange, "gate " + gate.str() + " outside a " + std::to_string(bits_.size()) +
                                        "-qubit state");
    }
    const auto &q = gate.q;
    switch (gate.kind) {
        case GateKind::X:
            bits_[q[0].index] ^= 1;
            break;
        case GateKind::CNOT:
            bits_[q[1].index] ^= bits_[q[0].index];
            break;
        case GateKind::TOFFOLI:
            bits_[q[2].index] ^= bits_[q[0].index] & bits_[q[1].index];
            break;
        case GateKind::RELEASE:
            std::fill_n(bits_.begin() + q[0].index, gate.width, 0);
            break;
    }
}

SimState init_state(uint32_t qubit_count) {
    return SimState(qubit_count);
}

void load_register(SimState &state, const Register &reg, const BigUint &value) {
    if (value < 0 || (!value.is_zero() && boost::multiprecision::msb(value) >= reg.width)) {
        fail(ErrorKind::InvalidArgument, "value does not fit in a " + std::to_string(reg.width) + "-bit register");
    }
    for (uint32_t i = 0; i < reg.width; ++i) {
        state.set(reg[i], bit_of(value, i));
    }
}

BigUint read_register(const SimState &state, const Register &reg) {
    BigUint value = 0;
    for (uint32_t i = reg.width; i-- > 0;) {
        value <<= 1;
        if (state.get(reg[i])) {
            value |= 1;
        }
    }
    return value;
}

void apply(SimState &state, const Gate &gate) {
    state.apply(gate);
}

void apply_all(SimState &state, std::span<const Gate> gates) {
    for (const auto &g : gates) {
        state.apply(g);
    }
}

void VerifyReport::merge(const VerifyReport &other) {
    cases += other.cases;
    failure_count += other.failure_count;
    ancilla_violations += other.ancilla_violations;
    gates = std::max(gates, other.gates);
    for (const auto &f : other.failures) {
        if (failures.size() < 16) {
            failures.push_back(f);
        }
    }
}

RecordedMultiplier record_multiplier(const MultiplySpec &spec, const std::optional<BigUint> &c_constant) {
    RecordingSink sink;
    CircuitBuilder builder(sink);
    RecordedMultiplier out;
    out.spec = spec;
    out.c_constant = c_constant;
    out.regs = build_multiplier(spec, c_constant, builder);
    out.gates = sink.take();
    out.qubits = builder.allocator().highwater();
    return out;
}

void check_case(const RecordedMultiplier &circuit, const BigUint &a0, const BigUint &b, const BigUint &c,
                VerifyReport &report) {
    const auto &regs = circuit.regs;
    SimState state(circuit.qubits);
    load_register(state, regs.a, a0);
    load_register(state, regs.b, b);
    if (regs.c) {
        load_register(state, *regs.c, c);
    }
    apply_all(state, circuit.gates);
    report.cases += 1;
    report.gates = std::max<uint64_t>(report.gates, circuit.gates.size());

    BigUint expected = low_bits(a0 + b * c, regs.a.width);
    BigUint got = read_register(state, regs.a);
    bool inputs_kept = read_register(state, regs.b) == b && (!regs.c || read_register(state, *regs.c) == c);
    if (got != expected || !inputs_kept) {
        report.failure_count += 1;
        if (report.failures.size() < 16) {
            report.failures.push_back(VerifyFailure{a0, b, c, got, expected});
        }
    }
    for (uint32_t i = 0; i < circuit.qubits; ++i) {
        QubitId q{i};
        if (regs.a.contains(q) || regs.b.contains(q) || (regs.c && regs.c->contains(q))) {
            continue;
        }
        if (state.get(q)) {
            report.ancilla_violations += 1;
            break;
        }
    }
}

bool exhaustive_allowed(const MultiplySpec &spec) {
    // a0 has 2n bits, b and c n bits each: 2^(4n) cases in either mode.
    return spec.n <= 5;
}

namespace {

unsigned worker_count(unsigned requested, uint64_t work) {
    unsigned threads = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
    return static_cast<unsigned>(std::min<uint64_t>(threads, std::max<uint64_t>(work, 1)));
}

/// Runs `body(begin, end, report)` over [0, total) split into contiguous chunks.
template <typename Body>
VerifyReport parallel_cases(uint64_t total, unsigned threads, Body body) {
    unsigned workers = worker_count(threads, total);
    std::vector<VerifyReport> partial(workers);
    std::vector<std::thread> pool;
    uint64_t chunk = (total + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        uint64_t begin = std::min(total, w * chunk);
        uint64_t end = std::min(total, begin + chunk);
        if (workers == 1) {
            body(begin, end, partial[w]);
        } else {
            pool.emplace_back([&, w, begin, end] { body(begin, end, partial[w]); });
        }
    }
    for (auto &t : pool) {
        t.join();
    }
    VerifyReport report;
    for (const auto &p : partial) {
        report.merge(p);
    }
    return report;
}

}  // namespace

VerifyReport verify_multiplier(const MultiplySpec &spec, const VerifyStrategy &strategy, unsigned threads) {
    spec.validate();
    const uint32_t n = spec.n;
    const bool qq = spec.mode == OperandMode::QQ;

    if (strategy.exhaustive) {
        if (!exhaustive_allowed(spec)) {
            fail(ErrorKind::InvalidArgument, "exhaustive verification of n=" + std::to_string(n) +
                                                 " needs 2^" + std::to_string(4 * n) +
                                                 " cases, above the 2^20 budget");
        }
        const uint64_t a_count = uint64_t{1} << (2 * n);
        const uint64_t b_count = uint64_t{1} << n;
        const uint64_t c_count = uint64_t{1} << n;
        if (qq) {
            RecordedMultiplier circuit = record_multiplier(spec, std::nullopt);
            return parallel_cases(a_count * b_count * c_count, threads, [&](uint64_t lo, uint64_t hi, VerifyReport &r) {
                for (uint64_t i = lo; i < hi; ++i) {
                    uint64_t a0 = i % a_count, b = (i / a_count) % b_count, c = i / (a_count * b_count);
                    check_case(circuit, a0, b, c, r);
                }
            });
        }
        VerifyReport report;
        for (uint64_t c = 0; c < c_count; ++c) {
            RecordedMultiplier circuit = record_multiplier(spec, BigUint(c));
            report.merge(parallel_cases(a_count * b_count, threads, [&](uint64_t lo, uint64_t hi, VerifyReport &r) {
                for (uint64_t i = lo; i < hi; ++i) {
                    check_case(circuit, i % a_count, i / a_count, c, r);
                }
            }));
        }
        return report;
    }

    // Random sampling: the case list depends only on the seed.
    std::mt19937_64 rng(strategy.seed);
    struct Case {
        BigUint a0, b, c;
    };
    std::vector<Case> cases;
    cases.reserve(strategy.samples);
    for (uint64_t s = 0; s < strategy.samples; ++s) {
        Case k;
        k.a0 = random_bits(rng, 2 * n);
        k.b = random_bits(rng, n);
        k.c = random_bits(rng, n);
        cases.push_back(std::move(k));
    }
    std::optional<RecordedMultiplier> shared;
    if (qq) {
        shared = record_multiplier(spec, std::nullopt);
    }
    return parallel_cases(cases.size(), threads, [&](uint64_t lo, uint64_t hi, VerifyReport &r) {
        for (uint64_t i = lo; i < hi; ++i) {
            if (shared) {
                check_case(*shared, cases[i].a0, cases[i].b, cases[i].c, r);
            } else {
                RecordedMultiplier circuit = record_multiplier(spec, cases[i].c);
                check_case(circuit, cases[i].a0, cases[i].b, cases[i].c, r);
            }
        }
    });
}

}  // namespace qmul
