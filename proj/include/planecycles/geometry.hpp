#ifndef PLANECYCLES_GEOMETRY_HPP
#define PLANECYCLES_GEOMETRY_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace planecycles {

using Coord = std::int64_t;

// All coordinates must satisfy |x|, |y| <= kCoordLimit.  With this bound the
// orientation determinant fits in int64 and the degree-4 incircle determinant
// fits in __int128, so every predicate is evaluated exactly.
inline constexpr Coord kCoordLimit = 10'000'000;

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class CoordinateRangeError : public Error {
public:
    explicit CoordinateRangeError(const std::string& msg) : Error(msg) {}
};

class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& msg) : Error(msg) {}
};

// Internal invariant violations (indicate a geometry bug, not bad input).
class StructureError : public Error {
public:
    explicit StructureError(const std::string& msg) : Error(msg) {}
};

struct Point {
    Coord x = 0;
    Coord y = 0;

    friend bool operator==(const Point& a, const Point& b) = default;
    friend auto operator<=>(const Point& a, const Point& b) = default;
};

enum class Orientation : int {
    Clockwise = -1,
    Collinear = 0,
    CounterClockwise = 1,
};

void check_coord_range(Point p);

// Sign of the signed area of triangle (a,b,c); exact.
Orientation orient(Point a, Point b, Point c);
int orient_sign(Point a, Point b, Point c);

// True iff the open segments pq and rs share a point.  Segments that meet
// only at a common endpoint do not cross.
bool segments_cross(Point p, Point q, Point r, Point s);

// Indices of the convex hull in counterclockwise order, rotated so the
// smallest index comes first.  Requires general position for >= 3 points.
std::vector<int> convex_hull(std::span<const Point> pts);

struct GeneralPositionReport {
    bool ok = true;
    // For a duplicate pair, witness = {i, j, -1}; for a collinear triple,
    // witness = {i, j, k}.
    int witness[3] = {-1, -1, -1};
    bool duplicate = false;

    std::string describe() const;
};

GeneralPositionReport validate_general_position(std::span<const Point> pts);

// Strictly inside the open triangle (a,b,c)?
bool point_in_triangle_strict(Point a, Point b, Point c, Point p);

// Strictly inside the convex polygon given by ccw vertices?
bool point_in_convex_polygon_strict(std::span<const Point> poly, Point p);

// Crossing-number test with all coordinates doubled, so segment midpoints
// can be tested without leaving the integers.  (qx2, qy2) is the query point
// times two; the polygon vertices are doubled internally.  The query must
// not lie on the boundary.
bool point_in_simple_polygon_doubled(std::span<const Point> poly, Coord qx2, Coord qy2);

// Midpoint of segment (a,b) strictly inside the polygon?
bool midpoint_in_simple_polygon(std::span<const Point> poly, Point a, Point b);

// Sign of the incircle determinant: +1 if d lies strictly inside the circle
// through a, b, c (oriented ccw), -1 if strictly outside, 0 if cocircular.
int incircle_sign(Point a, Point b, Point c, Point d);

} // namespace planecycles

#endif
