#include <doctest.h>

#include <set>

#include "planecycles/generate.hpp"
#include "planecycles/model.hpp"
#include "planecycles/nested.hpp"
#include "planecycles/oracle.hpp"

using namespace planecycles;

namespace {

ColoredPointSet square_nest() {
    // Blues on the outer square, reds on an inner quadrilateral kept off the
    // diagonals.
    return parse_instance_text(
        "0 0 1\n20 0 1\n20 20 1\n0 20 1\n"
        "8 9 0\n13 8 0\n12 13 0\n7 12 0\n");
}

std::vector<int> blues_of(const ColoredPointSet& ps) { return ps.class_of(kBlueColor); }

// Re-derives triangle membership by direct orientation tests.
int zone_count_oracle(const ColoredPointSet& ps, const NestedDecomposition& dec, int i) {
    const int k = dec.k();
    const Point a = ps.point(dec.ring[(i - 2 + k) % k]);
    const Point b = ps.point(dec.ring[(i - 1 + k) % k]);
    const Point c = ps.point(dec.ring[i]);
    const Point d = ps.point(dec.ring[(i + 1) % k]);
    int count = 0;
    for (int r : dec.reds) {
        if (point_in_triangle_strict(b, c, d, ps.point(r)) &&
            point_in_triangle_strict(a, b, c, ps.point(r)))
            ++count;
    }
    return count;
}

} // namespace

TEST_SUITE("nested") {

TEST_CASE("square ring validates with k = 4") {
    auto ps = square_nest();
    auto dec = validate_nested(ps, blues_of(ps));
    CHECK(dec.k() == 4);
    CHECK(dec.reds.size() == 4);
}

TEST_CASE("stray blue inside and red outside are both reported") {
    auto ps = parse_instance_text(
        "0 0 1\n20 0 1\n20 20 1\n0 20 1\n10 11 1\n"
        "8 8 0\n12 8 0\n12 13 0\n8 12 0\n30 30 0\n");
    try {
        validate_nested(ps, blues_of(ps));
        CHECK(false);
    } catch (const NestedPreconditionError& e) {
        const std::string msg = e.what();
        CHECK(msg.find("red vertex 9") != std::string::npos);
        CHECK(msg.find("blue vertex 4") != std::string::npos);
    }
}

TEST_CASE("too small a ring is rejected") {
    auto ps = square_nest();
    CHECK_THROWS_AS(validate_nested(ps, std::vector<int>{0, 1}), NestedPreconditionError);
}

TEST_CASE("one red per edge-zone in the ring drawing") {
    GenSpec spec;
    spec.kind = GenKind::ZoneRing;
    spec.n = 8;
    spec.seed = 3;
    auto ps = generate(spec);
    auto dec = validate_nested(ps, blues_of(ps));
    REQUIRE(dec.k() == 8);
    for (int i = 0; i < 8; ++i) {
        CHECK(dec.zone_reds[i].size() == 1);
        CHECK(zone_count_oracle(ps, dec, i) == 1);
    }
}

TEST_CASE("square nest: a plane 4-cycle and a full 8-cycle") {
    auto ps = square_nest();
    auto c2 = cycle_of_length(ps, blues_of(ps), 2);
    CHECK(c2.length() == 4);
    CHECK(validate_cycle(ps, c2.vertices).ok());
    auto c4 = cycle_of_length(ps, blues_of(ps), 4);
    CHECK(c4.length() == 8);
    CHECK(validate_cycle(ps, c4.vertices).ok());
    CHECK(brute_hamiltonian(ps).has_value());
}

TEST_CASE("ring drawing: every even length is constructible") {
    GenSpec spec;
    spec.kind = GenKind::ZoneRing;
    spec.n = 8;
    spec.seed = 7;
    auto ps = generate(spec);
    for (int t = 2; t <= 8; ++t) {
        auto cycle = cycle_of_length(ps, blues_of(ps), t);
        CHECK(cycle.length() == 2 * t);
        auto check = validate_cycle(ps, cycle.vertices);
        CHECK(check.ok());
        // exactly t of each color
        int reds = 0;
        for (int v : cycle.vertices) reds += ps.color(v) == kRedColor ? 1 : 0;
        CHECK(reds == t);
    }
}

TEST_CASE("alternating-zones drawing: every even length is constructible") {
    GenSpec spec;
    spec.kind = GenKind::ZoneRingPaired;
    spec.n = 8;
    spec.seed = 11;
    auto ps = generate(spec);
    auto dec = validate_nested(ps, blues_of(ps));
    int occupied = 0, empty = 0;
    for (int i = 0; i < dec.k(); ++i) {
        if (dec.zone_reds[i].size() == 2) ++occupied;
        if (dec.zone_reds[i].empty()) ++empty;
    }
    CHECK(occupied == 4);
    CHECK(empty == 4);
    for (int t = 2; t <= 8; ++t) {
        auto cycle = cycle_of_length(ps, blues_of(ps), t);
        CHECK(cycle.length() == 2 * t);
        CHECK(validate_cycle(ps, cycle.vertices).ok());
    }
}

TEST_CASE("random nested instances over all lengths, against the oracle cap") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        const int n = 3 + static_cast<int>(seed % 4);
        GenSpec spec;
        spec.kind = GenKind::Nested;
        spec.n = n;
        spec.seed = seed * 13 + 1;
        auto ps = generate(spec);
        for (int t = 2; t <= n; ++t) {
            auto cycle = cycle_of_length(ps, blues_of(ps), t);
            CHECK(cycle.length() == 2 * t);
            CHECK(validate_cycle(ps, cycle.vertices).ok());
        }
        // The oracle agrees a Hamiltonian cycle exists.
        if (2 * n <= kOracleMaxVertices) CHECK(brute_hamiltonian(ps).has_value());
    }
}

TEST_CASE("t outside range is rejected") {
    auto ps = square_nest();
    CHECK_THROWS_AS(cycle_of_length(ps, blues_of(ps), 1), PreconditionError);
    CHECK_THROWS_AS(cycle_of_length(ps, blues_of(ps), 5), PreconditionError);
}

TEST_CASE("explicit sub-ring with stray blues outside still works") {
    // A valid ring of 4 blues, plus one blue far outside and one extra red
    // inside, keeps the construction available for every t.
    auto ps = parse_instance_text(
        "0 0 1\n40 0 1\n40 40 1\n0 40 1\n90 21 1\n"
        "15 15 0\n25 16 0\n25 25 0\n15 24 0\n20 19 0\n");
    const std::vector<int> ring = {0, 1, 2, 3};
    for (int t = 2; t <= 5; ++t) {
        auto cycle = cycle_of_length(ps, ring, t);
        CHECK(cycle.length() == 2 * t);
        CHECK(validate_cycle(ps, cycle.vertices).ok());
    }
}

} // TEST_SUITE
