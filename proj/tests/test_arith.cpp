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


#include <random>

#include "doctest.h"
#include "qmul/arith.hpp"
#include "qmul/error.hpp"
#include "support.hpp"

using namespace qmul;
using namespace qmul::testing;

namespace {

struct Bench {
    RecordingSink sink;
    CircuitBuilder b{sink};

    uint32_t qubits() const {
        return b.allocator().highwater();
    }
    CircuitTally tally() const {
        return tally_gates(sink.gates());
    }
};

/// Adder cost recurrence, counted independently of the builder: bit 0 and each middle bit
/// produce one carry Toffoli, the top bit produces none.
uint64_t adder_recurrence(uint64_t m) {
    return m <= 1 ? 0 : adder_recurrence(m - 1) + 1;
}

}  // namespace

TEST_SUITE("adders") {

TEST_CASE("in-place add examples") {
    for (auto [t0, a0, want] : {std::tuple{0u, 5u, 5u}, std::tuple{15u, 1u, 0u}}) {
        Bench w;
        Register t = w.b.allocate(4);
        Register a = w.b.allocate(4);
        emit_inplace_add(w.b, t.bits(), a.bits());
        SimState s = run_gates(w.sink.gates(), w.qubits(), {{t, t0}, {a, a0}});
        CHECK(read_u64(s, t) == want);
        CHECK(read_u64(s, a) == a0);
        CHECK(stray_ones(s, {t, a}) == 0);
    }
}

TEST_CASE("in-place add exhaustive for every target and addend width up to 5") {
    for (uint32_t m = 1; m <= 5; ++m) {
        for (uint32_t k = 0; k <= m; ++k) {
            Bench w;
            Register t = w.b.allocate(m);
            Register a = k ? w.b.allocate(k) : Register{QubitId{m}, 0};
            emit_inplace_add(w.b, t.bits(), a.bits());
            for (uint64_t tv = 0; tv < (1u << m); ++tv) {
                for (uint64_t av = 0; av < (1u << k); ++av) {
                    std::vector<std::pair<Register, uint64_t>> in = {{t, tv}};
                    if (k) {
                        in.push_back({a, av});
                    }
                    SimState s = run_gates(w.sink.gates(), w.qubits(), in);
                    REQUIRE(read_u64(s, t) == ((tv + av) & ((1u << m) - 1)));
                    if (k) {
                        REQUIRE(read_u64(s, a) == av);
                    }
                    REQUIRE(stray_ones(s, {t, a}) == 0);
                }
            }
            if (k > 0) {
                CHECK(w.tally().toffoli == adder_recurrence(m));
                CHECK(w.tally().measurements == adder_recurrence(m));
            }
        }
    }
}

TEST_CASE("adder Toffoli golden value") {
    CHECK(adder_toffoli_count(8) == 7);
    for (uint32_t m : {1u, 2u, 8u, 33u, 100u}) {
        Bench w;
        Register t = w.b.allocate(m);
        Register a = w.b.allocate(m);
        emit_inplace_add(w.b, t.bits(), a.bits());
        CHECK(w.tally().toffoli == adder_toffoli_count(m));
        CHECK(w.tally().toffoli == adder_recurrence(m));
        CHECK(w.qubits() == 2 * m + (m - 1));
    }
}

TEST_CASE("in-place subtract exhaustive") {
    for (uint32_t m = 1; m <= 4; ++m) {
        Bench w;
        Register t = w.b.allocate(m);
        Register a = w.b.allocate(m);
        emit_inplace_sub(w.b, t.bits(), a.bits());
        for (uint64_t tv = 0; tv < (1u << m); ++tv) {
            for (uint64_t av = 0; av < (1u << m); ++av) {
                SimState s = run_gates(w.sink.gates(), w.qubits(), {{t, tv}, {a, av}});
                REQUIRE(read_u64(s, t) == ((tv - av) & ((1u << m) - 1)));
                REQUIRE(stray_ones(s, {t, a}) == 0);
            }
        }
    }
}

TEST_CASE("overlapping operands are rejected") {
    Bench w;
    Register t = w.b.allocate(4);
    QubitList tb = t.bits();
    CHECK_THROWS_AS(emit_inplace_add(w.b, tb, QubitSpan(tb).subspan(1, 2)), Error);
    CHECK_THROWS_AS(emit_inplace_add(w.b, QubitSpan(tb).subspan(0, 2), tb), Error);
    CHECK_THROWS_AS(emit_controlled_add(w.b, t[0], tb, QubitSpan(tb).subspan(0, 1)), Error);
}

TEST_CASE("controlled add with a quantum addend") {
    Bench w;
    Register ctl = w.b.allocate(1);
    Register t = w.b.allocate(4);
    Register a = w.b.allocate(4);
    emit_controlled_add(w.b, ctl[0], t.bits(), a.bits());
    SimState on = run_gates(w.sink.gates(), w.qubits(), {{ctl, 1}, {t, 2}, {a, 3}});
    CHECK(read_u64(on, t) == 5);
    for (uint64_t tv = 0; tv < 16; ++tv) {
        for (uint64_t av = 0; av < 16; ++av) {
            for (uint64_t c = 0; c < 2; ++c) {
                SimState s = run_gates(w.sink.gates(), w.qubits(), {{ctl, c}, {t, tv}, {a, av}});
                REQUIRE(read_u64(s, t) == ((tv + c * av) & 15));
                REQUIRE(read_u64(s, a) == av);
                REQUIRE(stray_ones(s, {ctl, t, a}) == 0);
            }
        }
    }
    Bench plain;
    Register t2 = plain.b.allocate(4);
    Register a2 = plain.b.allocate(4);
    emit_inplace_add(plain.b, t2.bits(), a2.bits());
    CHECK(w.tally().toffoli > plain.tally().toffoli);
}

TEST_CASE("controlled add of a constant") {
    for (uint64_t k = 0; k < 8; ++k) {
        Bench w;
        Register ctl = w.b.allocate(1);
        Register t = w.b.allocate(5);
        emit_controlled_add_constant(w.b, ctl[0], t.bits(), BigUint(k), 3);
        for (uint64_t tv = 0; tv < 32; ++tv) {
            for (uint64_t c = 0; c < 2; ++c) {
                SimState s = run_gates(w.sink.gates(), w.qubits(), {{ctl, c}, {t, tv}});
                REQUIRE(read_u64(s, t) == ((tv + c * k) & 31));
                REQUIRE(stray_ones(s, {ctl, t}) == 0);
            }
        }
        CHECK(w.tally().toffoli == adder_toffoli_count(5));
    }
}

}

TEST_SUITE("lookup") {

TEST_CASE("k=1 table") {
    Bench w;
    Register addr = w.b.allocate(1);
    Register out = w.b.allocate(4);
    LookupTable table{1, 4, {BigUint(5), BigUint(9)}};
    build_lookup(w.b, addr, table, out);
    CHECK(read_u64(run_gates(w.sink.gates(), w.qubits(), {{addr, 1}}), out) == 9);
    CHECK(read_u64(run_gates(w.sink.gates(), w.qubits(), {{addr, 0}}), out) == 5);
}

TEST_CASE("lookup then unlookup over every address") {
    for (uint32_t k = 0; k <= 6; ++k) {
        std::vector<BigUint> entries;
        for (uint64_t v = 0; v < (1u << k); ++v) {
            entries.push_back(BigUint((v * 37 + 11) % 64));
        }
        LookupTable table{k, 6, entries};
        Bench w;
        Register addr = k ? w.b.allocate(k) : Register{};
        Register out = w.b.allocate(6);
        build_lookup(w.b, addr, table, out);
        const size_t lookup_end = w.sink.gates().size();
        build_unlookup(w.b, out, addr, table);
        CircuitTally lookup_tally =
            tally_gates(std::span<const Gate>(w.sink.gates()).subspan(0, lookup_end));
        CHECK(lookup_tally.toffoli == lookup_toffoli_count(k));
        CHECK(lookup_tally.toffoli <= 2 * (1u << k));
        CircuitTally unlookup_tally =
            tally_gates(std::span<const Gate>(w.sink.gates()).subspan(lookup_end));
        CHECK(unlookup_tally.toffoli == unlookup_toffoli_count(k));
        CHECK(unlookup_tally.measurements >= 6);

        std::vector<Gate> lookup_only(w.sink.gates().begin(), w.sink.gates().begin() + lookup_end);
        for (uint64_t v = 0; v < (1u << k); ++v) {
            std::vector<std::pair<Register, uint64_t>> in;
            if (k) {
                in.push_back({addr, v});
            }
            SimState s = run_gates(lookup_only, w.qubits(), in);
            REQUIRE(read_register(s, out) == entries[v]);
            REQUIRE(stray_ones(s, {addr, out}) == 0);
            SimState full = run_gates(w.sink.gates(), w.qubits(), in);
            REQUIRE(read_u64(full, out) == 0);
            if (k) {
                REQUIRE(read_u64(full, addr) == v);
            }
            REQUIRE(stray_ones(full, {addr}) == 0);
        }
    }
}

TEST_CASE("lookup Toffoli golden values") {
    CHECK(lookup_toffoli_count(0) == 0);
    CHECK(lookup_toffoli_count(1) == 0);
    CHECK(lookup_toffoli_count(3) == 6);
    CHECK(lookup_toffoli_count(3) <= 16);
    CHECK(unlookup_toffoli_count(8) == (16 - 2) + (16 - 2));
    CHECK(unlookup_toffoli_count(8) < lookup_toffoli_count(8));
    for (uint32_t k = 0; k <= 16; ++k) {
        uint64_t hi = uint64_t{1} << ((k + 1) / 2);
        uint64_t lo = uint64_t{1} << (k / 2);
        CHECK(unlookup_toffoli_count(k) <= hi + lo);
    }
}

TEST_CASE("multiples table") {
    LookupTable t = LookupTable::multiples(BigUint(3), 2, 4);
    REQUIRE(t.entries.size() == 4);
    CHECK(t.entries[0] == 0);
    CHECK(t.entries[1] == 3);
    CHECK(t.entries[2] == 6);
    CHECK(t.entries[3] == 9);
    LookupTable wrap = LookupTable::multiples(BigUint(7), 2, 3);
    CHECK(wrap.entries[3] == 5);
}

TEST_CASE("malformed tables are rejected") {
    CHECK_THROWS_AS((LookupTable{2, 4, {BigUint(1)}}.validate()), Error);
    CHECK_THROWS_AS((LookupTable{1, 2, {BigUint(1), BigUint(4)}}.validate()), Error);
    Bench w;
    Register addr = w.b.allocate(2);
    Register out = w.b.allocate(3);
    CHECK_THROWS_AS(build_lookup(w.b, addr, LookupTable::multiples(BigUint(1), 2, 4), out), Error);
}

}

TEST_SUITE("windows") {

TEST_CASE("cost model matches its closed form") {
    for (uint32_t n : {1u, 7u, 64u, 2048u}) {
        for (uint32_t w = 1; w <= 16; ++w) {
            uint64_t windows = (n + w - 1) / w;
            uint64_t per = (uint64_t{1} << w) + (uint64_t{1} << ((w + 1) / 2)) + adder_toffoli_count(2 * n);
            CHECK(window_cost_model(n, w) == windows * per);
        }
    }
}

TEST_CASE("choose_window is the first minimizer") {
    for (uint32_t n = 1; n <= 4096; n += (n < 64 ? 1 : 37)) {
        uint32_t best = 1;
        for (uint32_t w = 2; w <= 16; ++w) {
            if (window_cost_model(n, w) < window_cost_model(n, best)) {
                best = w;
            }
        }
        REQUIRE(choose_window(n) == best);
    }
    CHECK(choose_window(1) == 1);
    CHECK(choose_window(2048) >= 9);
    CHECK(choose_window(2048) <= 13);
}

TEST_CASE("choose_window is non-decreasing over the power-of-two grid") {
    uint32_t prev = 0;
    for (uint32_t n = 1; n <= (1u << 20); n *= 2) {
        uint32_t w = choose_window(n);
        CHECK(w >= prev);
        prev = w;
    }
}

}

TEST_SUITE("multipliers") {

namespace {

BigUint simulate_product(const MultiplySpec &spec, uint64_t a0, uint64_t b, uint64_t c) {
    std::optional<BigUint> constant;
    if (spec.mode == OperandMode::QC) {
        constant = BigUint(c);
    }
    RecordedMultiplier m = record_multiplier(spec, constant);
    SimState s = init_state(m.qubits);
    load_register(s, m.regs.a, BigUint(a0));
    load_register(s, m.regs.b, BigUint(b));
    if (m.regs.c) {
        load_register(s, *m.regs.c, BigUint(c));
    }
    apply_all(s, m.gates);
    return read_register(s, m.regs.a);
}

MultiplySpec make(Algorithm a, uint32_t n, OperandMode mode, uint32_t threshold = 16,
                  std::optional<uint32_t> window = std::nullopt) {
    MultiplySpec s;
    s.algorithm = a;
    s.n = n;
    s.mode = mode;
    s.karatsuba_threshold = threshold;
    s.window = window;
    return s;
}

uint64_t toffoli_of(const MultiplySpec &spec) {
    return tally_multiplier(spec).toffoli;
}

}  // namespace

TEST_CASE("worked examples") {
    CHECK(simulate_product(make(Algorithm::Schoolbook, 2, OperandMode::QQ), 0, 3, 3) == 9);
    CHECK(simulate_product(make(Algorithm::Karatsuba, 4, OperandMode::QQ, 2), 1, 13, 11) == 144);
    CHECK(simulate_product(make(Algorithm::Windowed, 4, OperandMode::QC, 16, 2), 0, 13, 11) == 143);
}

TEST_CASE("MultiplySpec validation") {
    CHECK_THROWS_AS(make(Algorithm::Windowed, 4, OperandMode::QQ).validate(), Error);
    CHECK_THROWS_AS(make(Algorithm::Schoolbook, 0, OperandMode::QC).validate(), Error);
    CHECK_THROWS_AS(make(Algorithm::Karatsuba, 4, OperandMode::QC, 1).validate(), Error);
    CHECK_THROWS_AS(make(Algorithm::Windowed, 4, OperandMode::QC, 16, 17).validate(), Error);
    try {
        tally_multiplier(make(Algorithm::Windowed, 4, OperandMode::QQ));
        FAIL("expected unsupported-mode");
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::UnsupportedMode);
    }
    CHECK_THROWS_AS(tally_multiplier(make(Algorithm::Schoolbook, 4, OperandMode::QC), BigUint(16)), Error);
    CHECK_NOTHROW(tally_multiplier(make(Algorithm::Schoolbook, 4, OperandMode::QC), BigUint(15)));
}

TEST_CASE("n=1 QQ schoolbook is a single AND into a 2-bit accumulator") {
    RecordedMultiplier m = record_multiplier(make(Algorithm::Schoolbook, 1, OperandMode::QQ), std::nullopt);
    CHECK(m.regs.a.width == 2);
    CHECK(tally_gates(m.gates).toffoli == 1 + adder_toffoli_count(2));
    for (uint64_t a0 = 0; a0 < 4; ++a0) {
        for (uint64_t bc = 0; bc < 4; ++bc) {
            uint64_t b = bc & 1, c = bc >> 1;
            CHECK(simulate_product(make(Algorithm::Schoolbook, 1, OperandMode::QQ), a0, b, c) ==
                  ((a0 + b * c) & 3));
        }
    }
}

TEST_CASE("schoolbook is quadratic") {
    for (OperandMode mode : {OperandMode::QC, OperandMode::QQ}) {
        double r = double(toffoli_of(make(Algorithm::Schoolbook, 64, mode))) /
                   double(toffoli_of(make(Algorithm::Schoolbook, 32, mode)));
        CHECK(r >= 3.6);
        CHECK(r <= 4.4);
    }
}

TEST_CASE("karatsuba at or below the threshold emits the schoolbook circuit") {
    for (OperandMode mode : {OperandMode::QC, OperandMode::QQ}) {
        for (uint32_t n : {1u, 5u, 16u}) {
            RecordedMultiplier k = record_multiplier(make(Algorithm::Karatsuba, n, mode),
                                                     mode == OperandMode::QC ? std::optional(default_constant(n)) : std::nullopt);
            RecordedMultiplier s = record_multiplier(make(Algorithm::Schoolbook, n, mode),
                                                     mode == OperandMode::QC ? std::optional(default_constant(n)) : std::nullopt);
            CHECK(k.gates == s.gates);
        }
    }
}

TEST_CASE("karatsuba layout") {
    KaratsubaLayout l = karatsuba_layout(100, 16);
    CHECK(l.limbs == 8);
    CHECK(l.limb_width == 13);
    CHECK(l.coeff_width == 2 * 13 + 3);
    CHECK(karatsuba_layout(16, 16).limbs == 1);
}

TEST_CASE("karatsuba random cases at widths that force uneven limbs") {
    std::mt19937_64 rng(99);
    for (uint32_t n : {6u, 7u, 9u, 13u}) {
        for (OperandMode mode : {OperandMode::QQ, OperandMode::QC}) {
            MultiplySpec spec = make(Algorithm::Karatsuba, n, mode, 2);
            VerifyReport r = verify_multiplier(spec, VerifyStrategy::random(40, n * 7 + 1), 1);
            CHECK(r.ok());
        }
    }
}

TEST_CASE("karatsuba slope") {
    std::vector<double> xs, ys;
    for (uint32_t n = 1024; n <= 16384; n *= 2) {
        xs.push_back(n);
        ys.push_back(double(toffoli_of(make(Algorithm::Karatsuba, n, OperandMode::QC))));
    }
    double slope = loglog_slope(xs, ys);
    MESSAGE("karatsuba slope " << slope);
    CHECK(slope >= 1.55);
    CHECK(slope <= 1.70);
}

TEST_CASE("windowed Toffoli bound and advantage") {
    for (uint32_t n : {8u, 64u, 256u}) {
        uint32_t w = choose_window(n);
        uint64_t windows = (n + w - 1) / w;
        uint64_t bound = windows * (2 * (uint64_t{1} << w) + (uint64_t{1} << ((w + 1) / 2)) +
                                    (uint64_t{1} << (w / 2)) + adder_toffoli_count(2 * n));
        CHECK(toffoli_of(make(Algorithm::Windowed, n, OperandMode::QC)) <= bound);
    }
    CHECK(toffoli_of(make(Algorithm::Windowed, 256, OperandMode::QC)) <
          toffoli_of(make(Algorithm::Schoolbook, 256, OperandMode::QC)));
}

TEST_CASE("windowed with a window wider than n") {
    MultiplySpec spec = make(Algorithm::Windowed, 3, OperandMode::QC, 16, 5);
    CHECK(verify_multiplier(spec, VerifyStrategy::exhaustive_cases(), 1).ok());
}

TEST_CASE("default constant is deterministic and in range") {
    CHECK(default_constant(64) == default_constant(64));
    CHECK(default_constant(64) < pow2(64));
    CHECK(default_constant(2048) != default_constant(2048, 1));
}

}
