#include <doctest.h>

#include <algorithm>
#include <set>

#include "planecycles/generate.hpp"
#include "planecycles/geometry.hpp"

using namespace planecycles;

namespace {

// Independent hull oracle: a point is a hull vertex iff it is not strictly
// inside any triangle of three other points.
std::set<int> hull_oracle(const std::vector<Point>& pts) {
    const int n = static_cast<int>(pts.size());
    std::set<int> hull;
    for (int p = 0; p < n; ++p) {
        bool inside = false;
        for (int i = 0; i < n && !inside; ++i)
            for (int j = i + 1; j < n && !inside; ++j)
                for (int k = j + 1; k < n && !inside; ++k) {
                    if (i == p || j == p || k == p) continue;
                    if (point_in_triangle_strict(pts[i], pts[j], pts[k], pts[p])) inside = true;
                }
        if (!inside) hull.insert(p);
    }
    return hull;
}

std::vector<Point> random_points(std::uint64_t seed, int n, Coord range) {
    SplitMix64 rng(seed);
    std::vector<Point> pts;
    while (static_cast<int>(pts.size()) < n) {
        Point cand{rng.coord(-range, range), rng.coord(-range, range)};
        bool bad = false;
        for (size_t i = 0; i < pts.size() && !bad; ++i) {
            if (pts[i] == cand) bad = true;
            for (size_t j = i + 1; j < pts.size() && !bad; ++j)
                if (orient_sign(pts[i], pts[j], cand) == 0) bad = true;
        }
        if (!bad) pts.push_back(cand);
    }
    return pts;
}

} // namespace

TEST_SUITE("geometry") {

TEST_CASE("orientation basics") {
    CHECK(orient({0, 0}, {1, 0}, {0, 1}) == Orientation::CounterClockwise);
    CHECK(orient({0, 0}, {1, 1}, {2, 2}) == Orientation::Collinear);
    CHECK(orient({0, 0}, {0, 1}, {1, 0}) == Orientation::Clockwise);
}

TEST_CASE("orientation antisymmetry and even permutations") {
    SplitMix64 rng(7);
    for (int iter = 0; iter < 200; ++iter) {
        const Point a{rng.coord(-100, 100), rng.coord(-100, 100)};
        const Point b{rng.coord(-100, 100), rng.coord(-100, 100)};
        const Point c{rng.coord(-100, 100), rng.coord(-100, 100)};
        CHECK(orient_sign(a, b, c) == -orient_sign(b, a, c));
        CHECK(orient_sign(a, b, c) == orient_sign(b, c, a));
        CHECK(orient_sign(a, b, c) == orient_sign(c, a, b));
    }
}

TEST_CASE("coordinate range enforced") {
    CHECK_THROWS_AS(orient({kCoordLimit + 1, 0}, {0, 0}, {1, 1}), CoordinateRangeError);
    CHECK_NOTHROW(orient({kCoordLimit, -kCoordLimit}, {0, 0}, {1, 1}));
}

TEST_CASE("segment crossing basics") {
    CHECK(segments_cross({0, 0}, {2, 2}, {0, 2}, {2, 0}));
    CHECK_FALSE(segments_cross({0, 0}, {1, 0}, {0, 1}, {1, 1}));
    CHECK_FALSE(segments_cross({0, 0}, {1, 0}, {1, 0}, {1, 1}));
}

TEST_CASE("segment crossing symmetry") {
    SplitMix64 rng(13);
    for (int iter = 0; iter < 300; ++iter) {
        const Point p{rng.coord(-40, 40), rng.coord(-40, 40)};
        const Point q{rng.coord(-40, 40), rng.coord(-40, 40)};
        const Point r{rng.coord(-40, 40), rng.coord(-40, 40)};
        const Point s{rng.coord(-40, 40), rng.coord(-40, 40)};
        const bool base = segments_cross(p, q, r, s);
        CHECK(base == segments_cross(r, s, p, q));
        CHECK(base == segments_cross(q, p, r, s));
        CHECK(base == segments_cross(p, q, s, r));
    }
}

TEST_CASE("convex hull examples") {
    const std::vector<Point> square = {{0, 0}, {10, 0}, {10, 10}, {0, 10}, {5, 5}};
    CHECK(convex_hull(square) == std::vector<int>{0, 1, 2, 3});
    const std::vector<Point> triangle = {{0, 0}, {4, 1}, {1, 4}};
    CHECK(convex_hull(triangle) == std::vector<int>{0, 1, 2});
}

TEST_CASE("convex hull matches the all-triples oracle") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const auto pts = random_points(seed, 10, 60);
        const auto hull = convex_hull(pts);
        const auto expect = hull_oracle(pts);
        CHECK(std::set<int>(hull.begin(), hull.end()) == expect);
        // ccw orientation and strict turns
        const int h = static_cast<int>(hull.size());
        for (int i = 0; i < h; ++i) {
            CHECK(orient_sign(pts[hull[i]], pts[hull[(i + 1) % h]], pts[hull[(i + 2) % h]]) > 0);
        }
        // hull of hull equals hull
        std::vector<Point> hull_pts;
        for (int v : hull) hull_pts.push_back(pts[v]);
        CHECK(convex_hull(hull_pts).size() == hull.size());
    }
}

TEST_CASE("general position validation") {
    CHECK(validate_general_position(std::vector<Point>{{0, 0}, {1, 0}, {0, 1}}).ok);
    const auto collinear =
        validate_general_position(std::vector<Point>{{0, 0}, {1, 1}, {2, 2}, {5, 0}});
    CHECK_FALSE(collinear.ok);
    CHECK_FALSE(collinear.duplicate);
    CHECK(collinear.witness[0] == 0);
    CHECK(collinear.witness[1] == 1);
    CHECK(collinear.witness[2] == 2);
    const auto dup = validate_general_position(std::vector<Point>{{0, 0}, {0, 0}, {1, 1}});
    CHECK_FALSE(dup.ok);
    CHECK(dup.duplicate);
}

TEST_CASE("predicates are translation invariant") {
    SplitMix64 rng(99);
    for (int iter = 0; iter < 500; ++iter) {
        const Point a{rng.coord(-50, 50), rng.coord(-50, 50)};
        const Point b{rng.coord(-50, 50), rng.coord(-50, 50)};
        const Point c{rng.coord(-50, 50), rng.coord(-50, 50)};
        const Point d{rng.coord(-50, 50), rng.coord(-50, 50)};
        const Coord tx = rng.coord(-1000, 1000), ty = rng.coord(-1000, 1000);
        auto shift = [&](Point p) { return Point{p.x + tx, p.y + ty}; };
        CHECK(orient_sign(a, b, c) == orient_sign(shift(a), shift(b), shift(c)));
        CHECK(segments_cross(a, b, c, d) ==
              segments_cross(shift(a), shift(b), shift(c), shift(d)));
    }
}

TEST_CASE("point in simple polygon via doubled coordinates") {
    const std::vector<Point> square = {{0, 0}, {4, 0}, {4, 4}, {0, 4}};
    CHECK(midpoint_in_simple_polygon(square, {1, 1}, {3, 3}));
    CHECK_FALSE(midpoint_in_simple_polygon(square, {4, 4}, {6, 6}));
    // Nonconvex: dart with a bite taken out.
    const std::vector<Point> dart = {{0, 0}, {8, 0}, {4, 3}, {4, 8}};
    CHECK(midpoint_in_simple_polygon(dart, {1, 1}, {2, 1}));
    CHECK_FALSE(midpoint_in_simple_polygon(dart, {0, 8}, {2, 8}));
}

TEST_CASE("incircle sign") {
    CHECK(incircle_sign({0, 0}, {4, 0}, {0, 4}, {1, 1}) > 0);
    CHECK(incircle_sign({0, 0}, {4, 0}, {0, 4}, {100, 100}) < 0);
    CHECK(incircle_sign({0, 0}, {4, 0}, {4, 4}, {0, 4}) == 0);
}

} // TEST_SUITE
