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


#include <boost/multiprecision/cpp_bin_float.hpp>

#include "doctest.h"
#include "qmul/error.hpp"
#include "qmul/qec.hpp"

using namespace qmul;

namespace {

/// Layout formula evaluated with 100-digit floating point.
uint64_t layout_oracle(uint64_t q) {
    using boost::multiprecision::cpp_bin_float_100;
    cpp_bin_float_100 root = boost::multiprecision::sqrt(cpp_bin_float_100(8) * q);
    return 2 * q + static_cast<uint64_t>(boost::multiprecision::ceil(root)) + 1;
}

ErrorKind kind_of(auto &&fn) {
    try {
        fn();
    } catch (const Error &e) {
        return e.kind();
    }
    FAIL("expected an error");
    return ErrorKind::InvalidArgument;
}

CircuitTally tally(uint64_t q, uint64_t tof, uint64_t meas) {
    CircuitTally t;
    t.qubit_highwater = q;
    t.toffoli = tof;
    t.measurements = meas;
    return t;
}

}  // namespace

TEST_SUITE("qec") {

TEST_CASE("layout examples") {
    CHECK(layout_total_qubits(1) == 6);
    CHECK(layout_total_qubits(50) == 121);
    CHECK(layout_total_qubits(100) == 230);
    CHECK(kind_of([] { layout_total_qubits(0); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("layout agrees with a high-precision evaluation") {
    for (uint64_t q = 1; q <= 5000; ++q) {
        REQUIRE(layout_total_qubits(q) == layout_oracle(q));
    }
    for (uint64_t q : {uint64_t{1} << 32, (uint64_t{1} << 40) + 7, uint64_t{999999999999}}) {
        CHECK(layout_total_qubits(q) == layout_oracle(q));
    }
    // Perfect squares 8q = s^2 sit exactly on the ceiling boundary.
    for (uint64_t s = 4; s < 4000; s += 4) {
        uint64_t q = s * s / 8;
        CHECK(layout_total_qubits(q) == 2 * q + s + 1);
    }
}

TEST_CASE("layout is strictly increasing and above 2q") {
    uint64_t prev = 0;
    for (uint64_t q = 1; q < 20000; ++q) {
        uint64_t v = layout_total_qubits(q);
        REQUIRE(v > 2 * q);
        REQUIRE(v > prev);
        prev = v;
    }
}

TEST_CASE("logical error rate") {
    QecScheme s = QecScheme::surface();
    CHECK(logical_error_rate(s, 1e-3, 5) == doctest::Approx(3.0e-5).epsilon(1e-12));
    CHECK(logical_error_rate(s, 1e-3, 7) == doctest::Approx(3.0e-6).epsilon(1e-12));
    for (uint32_t d = 3; d < 41; d += 2) {
        CHECK(logical_error_rate(s, 1e-3, d + 2) < logical_error_rate(s, 1e-3, d));
    }
    CHECK(kind_of([&] { logical_error_rate(s, 2e-2, 5); }) == ErrorKind::AboveThreshold);
    CHECK(kind_of([&] { logical_error_rate(s, 1e-3, 4); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("logical cycles") {
    CHECK(logical_cycles(tally(0, 100, 0)) == 300);
    CHECK(logical_cycles(tally(0, 0, 50)) == 50);
    CHECK(logical_cycles(CircuitTally{}) == 0);
    CHECK(logical_cycles(tally(0, 10, 10), CycleModel{5, 2}) == 70);
}

TEST_CASE("distance selection") {
    QecScheme s = QecScheme::surface();
    CHECK(select_distance(s, 1e-3, 30, 300, 0.005) == 9);
    CHECK(kind_of([&] { select_distance(s, 1e-2, 30, 300, 0.005); }) == ErrorKind::AboveThreshold);
    CHECK(kind_of([&] { select_distance(s, 9e-3, 1000000, 1000000000, 1e-9, 99); }) ==
          ErrorKind::ModelInfeasible);
    for (uint64_t q : {6u, 100u, 5000u}) {
        for (uint64_t c = 1; c < (1u << 30); c *= 4) {
            uint32_t d = select_distance(s, 1e-3, q, c, 0.005);
            CHECK(d % 2 == 1);
            CHECK(q * double(c) * logical_error_rate(s, 1e-3, d) <= 0.005);
            if (d > 3) {
                CHECK(q * double(c) * logical_error_rate(s, 1e-3, d - 2) > 0.005);
            }
            CHECK(select_distance(s, 1e-3, q, 2 * c, 0.005) >= d);
            CHECK(select_distance(s, 1e-3, 2 * q, c, 0.005) >= d);
            CHECK(select_distance(s, 2e-3, q, c, 0.005) >= d);
        }
    }
}

TEST_CASE("t factory examples") {
    QecScheme s = QecScheme::surface();
    QubitParams p = preset("gate_ns_e3");
    TFactory one = build_t_factory(s, p, 1e-5, 9);
    CHECK(one.rounds == 1);
    CHECK(one.output_error == doctest::Approx(3.5e-8).epsilon(1e-9));
    CHECK(one.distance == 5);
    CHECK(one.physical_qubits == 750);
    CHECK(one.duration == doctest::Approx(22e-6).epsilon(1e-9));

    QubitParams noisy = p;
    noisy.t_inject_error = 1e-2;
    TFactory two = build_t_factory(s, noisy, 1e-10, 9);
    CHECK(two.rounds == 2);
    double r1 = 35 * 1e-6;
    CHECK(two.output_error == doctest::Approx(35 * r1 * r1 * r1).epsilon(1e-9));
    CHECK(two.physical_qubits == 2 * 750);
    CHECK(two.duration == doctest::Approx(2 * 22e-6).epsilon(1e-9));
    CHECK(two.output_error < noisy.t_inject_error);

    CHECK(kind_of([&] { build_t_factory(s, noisy, 1e-300, 9); }) == ErrorKind::ModelInfeasible);
    CHECK(kind_of([&] { build_t_factory(s, p, 0, 9); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("factory distance is the smallest odd value at or above half the code distance") {
    QecScheme s = QecScheme::surface();
    QubitParams p = preset("gate_ns_e3");
    for (uint32_t d = 3; d < 60; d += 2) {
        uint32_t half = (d + 1) / 2;
        uint32_t want = half % 2 ? half : half + 1;
        CHECK(build_t_factory(s, p, 1e-5, d).distance == want);
    }
}

TEST_CASE("pipeline worked example") {
    PhysicalEstimate e = estimate(tally(10, 100, 0), preset("gate_ns_e3"), QecScheme::surface());
    CHECK(e.q_total == 30);
    CHECK(e.logical_cycles == 300);
    CHECK(e.distance == 9);
    CHECK(e.runtime_seconds == doctest::Approx(1.08e-3).epsilon(1e-9));
    CHECK(e.t_states == 400);
    CHECK(e.factories == 9);
    CHECK(e.physical_qubits == 11610);
    CHECK(e.physical_qubits == e.q_total * e.phys_per_logical + e.factory_qubits);
}

TEST_CASE("empty circuit") {
    PhysicalEstimate e = estimate(tally(1, 0, 0), preset("gate_ns_e3"), QecScheme::surface());
    CHECK(e.factories == 0);
    CHECK(e.runtime_seconds == 0);
    CHECK(e.distance == 3);
    CHECK(e.physical_qubits == 6 * QecScheme::surface().phys_per_logical(3));
}

TEST_CASE("floquet needs a Majorana platform") {
    CHECK(kind_of([] { estimate(tally(10, 100, 0), preset("gate_ns_e3"), QecScheme::floquet()); }) ==
          ErrorKind::InvalidCombination);
    CHECK_NOTHROW(estimate(tally(10, 100, 0), preset("maj_ns_e4"), QecScheme::floquet()));
    CHECK_NOTHROW(estimate(tally(10, 100, 0), preset("maj_ns_e4"), QecScheme::surface()));
}

TEST_CASE("scheme constants") {
    QecScheme s = QecScheme::surface();
    QecScheme f = QecScheme::floquet();
    CHECK(s.phys_per_logical(9) == 162);
    CHECK(f.phys_per_logical(5) == 140);
    QubitParams p = preset("gate_ns_e3");
    CHECK(s.syndrome_round_time(p) == doctest::Approx(400e-9));
    CHECK(f.syndrome_round_time(preset("maj_ns_e6")) == doctest::Approx(300e-9));
    CHECK(f.majorana_only);
    CHECK_FALSE(s.majorana_only);
    for (uint32_t d = 3; d < 99; d += 2) {
        CHECK(s.phys_per_logical(d + 2) > s.phys_per_logical(d));
        CHECK(f.phys_per_logical(d + 2) > f.phys_per_logical(d));
    }
    CHECK(parse_scheme("floquet") == SchemeKind::Floquet);
    CHECK_THROWS_AS(parse_scheme("color"), Error);
}

TEST_CASE("budget validation") {
    ErrorBudget b;
    CHECK_NOTHROW(b.validate());
    b.logical_share = 0.7;
    CHECK_THROWS_AS(b.validate(), Error);
    b = ErrorBudget{};
    b.total = 1.5;
    CHECK_THROWS_AS(b.validate(), Error);
}

}
