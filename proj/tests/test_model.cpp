#include <doctest.h>

#include <sstream>

#include "planecycles/model.hpp"

using namespace planecycles;

namespace {

ColoredPointSet square_rbrb() {
    return parse_instance_text("0 0 0\n1 0 1\n1 1 0\n0 1 1\n");
}

} // namespace

TEST_SUITE("model") {

TEST_CASE("parse a small bipartite instance") {
    auto ps = parse_instance_text("0 0 0\n1 0 1\n0 1 0\n1 1 1");
    CHECK(ps.size() == 4);
    CHECK(ps.color_count() == 2);
    CHECK(ps.class_size(0) == 2);
    CHECK(ps.is_host_edge(0, 1));
    CHECK_FALSE(ps.is_host_edge(0, 2));
}

TEST_CASE("parse rejects duplicates, single colors and bad lines") {
    CHECK_THROWS_AS(parse_instance_text("0 0 0\n1 1 1\n2 2 0\n2 2 0\n"), InvalidInstanceError);
    CHECK_THROWS_AS(parse_instance_text("0 0 0\n1 0 0\n0 1 0\n"), InvalidInstanceError);
    CHECK_THROWS_AS(parse_instance_text("0 0\n"), ParseError);
    CHECK_THROWS_AS(parse_instance_text("0 0 0 junk\n"), ParseError);
    try {
        parse_instance_text("0 0 0\n1 1 1\nx y z\n");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
}

TEST_CASE("instance text round-trips bit-exactly") {
    const std::string canonical = "0 0 0\n1 0 1\n0 1 0\n1 1 1\n";
    auto ps = parse_instance_text("# comment\n\n0 0 0\n1 0 1\n0 1 0\n1 1 1\n");
    CHECK(instance_text(ps) == canonical);
    auto again = parse_instance_text(instance_text(ps));
    CHECK(instance_text(again) == canonical);
}

TEST_CASE("cycle canonical form is rotation and reversal invariant") {
    const std::vector<int> base = {2, 5, 3, 7};
    CHECK(canonical_cycle(base) == canonical_cycle(std::vector<int>{5, 3, 7, 2}));
    CHECK(canonical_cycle(base) == canonical_cycle(std::vector<int>{7, 3, 5, 2}));
    CHECK(canonical_cycle(base).front() == 2);
}

TEST_CASE("validate alternating quadrilateral") {
    auto ps = square_rbrb();
    auto check = validate_cycle(ps, std::vector<int>{0, 1, 2, 3});
    REQUIRE(check.ok());
    const auto profile = color_profile(ps, *check.cycle);
    CHECK_FALSE(profile.rainbow);
    CHECK(profile.repeated_colors.size() == 2);
}

TEST_CASE("bowtie reports the monochromatic edge before the crossing") {
    auto ps = square_rbrb();
    auto check = validate_cycle(ps, std::vector<int>{0, 2, 1, 3});
    REQUIRE_FALSE(check.ok());
    CHECK(check.violation->kind == CycleViolationKind::MonochromaticEdge);
    CHECK(check.violation->witness == std::vector<int>{0, 2});
}

TEST_CASE("crossing is reported when colors allow the bowtie") {
    auto ps = parse_instance_text("0 0 0\n4 0 1\n4 4 2\n0 4 3\n");
    auto check = validate_cycle(ps, std::vector<int>{0, 2, 1, 3});
    REQUIRE_FALSE(check.ok());
    CHECK(check.violation->kind == CycleViolationKind::CrossingEdges);
}

TEST_CASE("rainbow triangle validates") {
    auto ps = parse_instance_text("0 0 0\n4 0 1\n2 3 2\n");
    auto check = validate_cycle(ps, std::vector<int>{0, 1, 2});
    REQUIRE(check.ok());
    CHECK(color_profile(ps, *check.cycle).rainbow);
}

TEST_CASE("validation order: repeated vertex, then length") {
    auto ps = square_rbrb();
    auto repeated = validate_cycle(ps, std::vector<int>{0, 1, 0, 3});
    REQUIRE_FALSE(repeated.ok());
    CHECK(repeated.violation->kind == CycleViolationKind::RepeatedVertex);
    auto tiny = validate_cycle(ps, std::vector<int>{0, 1});
    REQUIRE_FALSE(tiny.ok());
    CHECK(tiny.violation->kind == CycleViolationKind::TooShort);
    auto range = validate_cycle(ps, std::vector<int>{0, 1, 9});
    REQUIRE_FALSE(range.ok());
    CHECK(range.violation->kind == CycleViolationKind::IndexOutOfRange);
}

TEST_CASE("bipartite cycles have even length and are non-rainbow") {
    auto ps = parse_instance_text("0 0 0\n3 0 1\n6 1 0\n7 4 1\n3 6 0\n-1 3 1\n");
    auto check = validate_cycle(ps, std::vector<int>{0, 1, 2, 3, 4, 5});
    REQUIRE(check.ok());
    CHECK(check.cycle->length() % 2 == 0);
    CHECK_FALSE(color_profile(ps, *check.cycle).rainbow);
}

TEST_CASE("cycle files parse and write") {
    std::istringstream in("0 1 2 3\n# comment\n4 5 6\n");
    auto cycles = parse_cycles(in);
    REQUIRE(cycles.size() == 2);
    CHECK(cycles[0] == std::vector<int>{0, 1, 2, 3});
    std::ostringstream out;
    write_cycles(out, std::vector<PlaneCycle>{PlaneCycle{{0, 1, 2, 3}}});
    CHECK(out.str() == "0 1 2 3\n");
}

TEST_CASE("restriction preserves geometry and renames colors compactly") {
    auto ps = parse_instance_text("0 0 0\n1 0 2\n0 1 0\n1 1 2\n5 6 1\n");
    std::vector<int> mapping;
    auto sub = ps.restricted_to(std::vector<int>{0, 1, 3}, &mapping);
    CHECK(mapping == std::vector<int>{0, 1, 3});
    CHECK(sub.size() == 3);
    CHECK(sub.color_count() == 2);
    CHECK(sub.color(0) == 0);
    CHECK(sub.color(1) == 1);
    CHECK(sub.point(2) == Point{1, 1});
}

} // TEST_SUITE
