#include "planecycles/geometry.hpp"

#include <algorithm>
#include <numeric>

namespace planecycles {

namespace {

using int128 = __int128;

int sign_of(Coord v) { return (v > 0) - (v < 0); }
int sign_of128(int128 v) { return (v > 0) - (v < 0); }

} // namespace

void check_coord_range(Point p) {
    if (p.x > kCoordLimit || p.x < -kCoordLimit || p.y > kCoordLimit || p.y < -kCoordLimit) {
        throw CoordinateRangeError("coordinate (" + std::to_string(p.x) + ", " + std::to_string(p.y) +
                                   ") outside the supported range [-" + std::to_string(kCoordLimit) +
                                   ", " + std::to_string(kCoordLimit) + "]");
    }
}

int orient_sign(Point a, Point b, Point c) {
    check_coord_range(a);
    check_coord_range(b);
    check_coord_range(c);
    const Coord det = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    return sign_of(det);
}

Orientation orient(Point a, Point b, Point c) {
    return static_cast<Orientation>(orient_sign(a, b, c));
}

bool segments_cross(Point p, Point q, Point r, Point s) {
    const int o1 = orient_sign(p, q, r);
    const int o2 = orient_sign(p, q, s);
    const int o3 = orient_sign(r, s, p);
    const int o4 = orient_sign(r, s, q);
    return o1 * o2 < 0 && o3 * o4 < 0;
}

std::vector<int> convex_hull(std::span<const Point> pts) {
    const int n = static_cast<int>(pts.size());
    for (const Point& p : pts) check_coord_range(p);
    if (n == 0) return {};
    if (n == 1) return {0};
    if (n == 2) return {0, 1};

    std::vector<int> idx(pts.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return pts[a] < pts[b]; });

    // Monotone chain; strict turns only (general position).
    std::vector<int> hull(2 * pts.size());
    int h = 0;
    for (int i = 0; i < n; ++i) {
        while (h >= 2 && orient_sign(pts[hull[h - 2]], pts[hull[h - 1]], pts[idx[i]]) <= 0) --h;
        hull[h++] = idx[i];
    }
    for (int i = n - 2, lower = h + 1; i >= 0; --i) {
        while (h >= lower && orient_sign(pts[hull[h - 2]], pts[hull[h - 1]], pts[idx[i]]) <= 0) --h;
        hull[h++] = idx[i];
    }
    hull.resize(h - 1);

    auto lowest = std::min_element(hull.begin(), hull.end());
    std::rotate(hull.begin(), lowest, hull.end());
    return hull;
}

std::string GeneralPositionReport::describe() const {
    if (ok) return "ok";
    if (duplicate) {
        return "duplicate points at indices " + std::to_string(witness[0]) + " and " +
               std::to_string(witness[1]);
    }
    return "collinear triple at indices " + std::to_string(witness[0]) + ", " +
           std::to_string(witness[1]) + ", " + std::to_string(witness[2]);
}

GeneralPositionReport validate_general_position(std::span<const Point> pts) {
    const int n = static_cast<int>(pts.size());
    for (const Point& p : pts) check_coord_range(p);

    GeneralPositionReport report;
    {
        std::vector<int> idx(pts.size());
        std::iota(idx.begin(), idx.end(), 0);
        std::sort(idx.begin(), idx.end(), [&](int a, int b) { return pts[a] < pts[b]; });
        for (int i = 0; i + 1 < n; ++i) {
            if (pts[idx[i]] == pts[idx[i + 1]]) {
                report.ok = false;
                report.duplicate = true;
                report.witness[0] = std::min(idx[i], idx[i + 1]);
                report.witness[1] = std::max(idx[i], idx[i + 1]);
                return report;
            }
        }
    }
    // A collinear triple through pivot i shows up as two other points with
    // the same direction from i, once directions are normalized to a
    // half-plane.  Scanning pivots in ascending order keeps the witness
    // deterministic.
    std::vector<std::pair<Point, int>> dirs;
    for (int i = 0; i < n; ++i) {
        dirs.clear();
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            Coord dx = pts[j].x - pts[i].x, dy = pts[j].y - pts[i].y;
            const Coord g = std::gcd(dx < 0 ? -dx : dx, dy < 0 ? -dy : dy);
            dx /= g;
            dy /= g;
            if (dx < 0 || (dx == 0 && dy < 0)) {
                dx = -dx;
                dy = -dy;
            }
            dirs.emplace_back(Point{dx, dy}, j);
        }
        std::sort(dirs.begin(), dirs.end());
        for (size_t t = 0; t + 1 < dirs.size(); ++t) {
            if (dirs[t].first == dirs[t + 1].first) {
                report.ok = false;
                report.witness[0] = i;
                report.witness[1] = dirs[t].second;
                report.witness[2] = dirs[t + 1].second;
                std::sort(report.witness, report.witness + 3);
                return report;
            }
        }
    }
    return report;
}

bool point_in_triangle_strict(Point a, Point b, Point c, Point p) {
    const int o = orient_sign(a, b, c);
    if (o == 0) throw PreconditionError("degenerate triangle in point_in_triangle_strict");
    return orient_sign(a, b, p) == o && orient_sign(b, c, p) == o && orient_sign(c, a, p) == o;
}

bool point_in_convex_polygon_strict(std::span<const Point> poly, Point p) {
    const int n = static_cast<int>(poly.size());
    if (n < 3) return false;
    for (int i = 0; i < n; ++i) {
        if (orient_sign(poly[i], poly[(i + 1) % n], p) <= 0) return false;
    }
    return true;
}

bool point_in_simple_polygon_doubled(std::span<const Point> poly, Coord qx2, Coord qy2) {
    const int n = static_cast<int>(poly.size());
    bool inside = false;
    for (int i = 0; i < n; ++i) {
        const Coord ax = 2 * poly[i].x, ay = 2 * poly[i].y;
        const Coord bx = 2 * poly[(i + 1) % n].x, by = 2 * poly[(i + 1) % n].y;
        if ((ay > qy2) == (by > qy2)) continue;
        // Edge straddles the horizontal ray through q; side test is exact.
        const Coord det = (bx - ax) * (qy2 - ay) - (by - ay) * (qx2 - ax);
        if (det == 0) throw StructureError("query point on polygon boundary in point-in-polygon test");
        const bool left = (det > 0) == (by > ay);
        if (left) inside = !inside;
    }
    return inside;
}

bool midpoint_in_simple_polygon(std::span<const Point> poly, Point a, Point b) {
    return point_in_simple_polygon_doubled(poly, a.x + b.x, a.y + b.y);
}

int incircle_sign(Point a, Point b, Point c, Point d) {
    check_coord_range(a);
    check_coord_range(b);
    check_coord_range(c);
    check_coord_range(d);
    const int o = orient_sign(a, b, c);
    if (o == 0) throw PreconditionError("collinear triangle in incircle_sign");
    if (o < 0) std::swap(b, c);

    const int128 adx = a.x - d.x, ady = a.y - d.y;
    const int128 bdx = b.x - d.x, bdy = b.y - d.y;
    const int128 cdx = c.x - d.x, cdy = c.y - d.y;
    const int128 alift = adx * adx + ady * ady;
    const int128 blift = bdx * bdx + bdy * bdy;
    const int128 clift = cdx * cdx + cdy * cdy;
    const int128 det = alift * (bdx * cdy - bdy * cdx) - blift * (adx * cdy - ady * cdx) +
                       clift * (adx * bdy - ady * bdx);
    return sign_of128(det);
}

} // namespace planecycles
