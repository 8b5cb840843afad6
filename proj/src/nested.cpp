#include "planecycles/nested.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "planecycles/oracle.hpp"

namespace planecycles {

namespace {

std::vector<Point> points_of(const ColoredPointSet& ps, std::span<const int> idx) {
    std::vector<Point> pts;
    pts.reserve(idx.size());
    for (int v : idx) pts.push_back(ps.point(v));
    return pts;
}

// Ring order of a blue set already known to be in convex position.
std::vector<int> ring_order(const ColoredPointSet& ps, const std::vector<int>& blues) {
    const auto pts = points_of(ps, blues);
    const auto hull = convex_hull(pts);
    if (hull.size() != blues.size())
        throw NestedStructureError("enclosing blues left convex position");
    std::vector<int> ring;
    ring.reserve(hull.size());
    for (int h : hull) ring.push_back(blues[h]);
    return ring;
}

struct Memberships {
    std::vector<std::vector<int>> triangle_reds;
    std::vector<std::vector<int>> zone_reds;
};

Memberships memberships(const ColoredPointSet& ps, const std::vector<int>& ring,
                        const std::vector<int>& reds) {
    const int k = static_cast<int>(ring.size());
    Memberships m;
    m.triangle_reds.assign(k, {});
    std::vector<std::set<int>> in_triangle(reds.size());
    for (int i = 0; i < k; ++i) {
        const Point a = ps.point(ring[(i - 1 + k) % k]);
        const Point b = ps.point(ring[i]);
        const Point c = ps.point(ring[(i + 1) % k]);
        for (size_t r = 0; r < reds.size(); ++r) {
            if (point_in_triangle_strict(a, b, c, ps.point(reds[r]))) {
                m.triangle_reds[i].push_back(reds[r]);
                in_triangle[r].insert(i);
            }
        }
    }
    m.zone_reds.assign(k, {});
    for (size_t r = 0; r < reds.size(); ++r) {
        for (int i : in_triangle[r]) {
            if (in_triangle[r].count((i - 1 + k) % k)) m.zone_reds[i].push_back(reds[r]);
        }
    }
    return m;
}

// Exhaustive plane-Hamiltonian search that fixes the hull traversal order:
// every plane Hamiltonian cycle visits the boundary vertices in their cyclic
// hull order, so the search interleaves interior vertices into boundary
// slots.  Complete for any instance; used for the terminal 2t-point sets.
struct HullOrderSearch {
    const ColoredPointSet& ps;
    std::vector<int> actives;
    std::vector<int> boundary;
    std::vector<int> interior;
    std::vector<int> seq;
    std::vector<bool> used;

    HullOrderSearch(const ColoredPointSet& ps_, std::vector<int> actives_)
        : ps(ps_), actives(std::move(actives_)) {
        const auto pts = points_of(ps, actives);
        const auto hull = convex_hull(pts);
        std::set<int> on_hull(hull.begin(), hull.end());
        for (int h : hull) boundary.push_back(actives[h]);
        for (size_t i = 0; i < actives.size(); ++i)
            if (!on_hull.count(static_cast<int>(i))) interior.push_back(actives[i]);
        used.assign(ps.size(), false);
    }

    bool edge_ok(int a, int b, bool closing) const {
        if (!ps.is_host_edge(a, b)) return false;
        const int len = static_cast<int>(seq.size());
        for (int i = 0; i < len - 1; ++i) {
            if (closing && i == 0) continue;
            if (segments_cross(ps.point(a), ps.point(b), ps.point(seq[i]), ps.point(seq[i + 1])))
                return false;
        }
        return true;
    }

    bool extend(size_t next_boundary, std::optional<std::vector<int>>& out) {
        if (seq.size() == actives.size()) {
            if (next_boundary == boundary.size() && edge_ok(seq.back(), seq.front(), true)) {
                out = seq;
                return true;
            }
            return false;
        }
        // Next boundary vertex.
        if (next_boundary < boundary.size()) {
            const int v = boundary[next_boundary];
            if (seq.empty() || edge_ok(seq.back(), v, false)) {
                seq.push_back(v);
                if (extend(next_boundary + 1, out)) return true;
                seq.pop_back();
            }
        }
        // Or any unused interior vertex (never first: the cycle starts on the
        // boundary without loss of generality).
        if (!seq.empty()) {
            for (int v : interior) {
                if (used[v]) continue;
                if (!edge_ok(seq.back(), v, false)) continue;
                used[v] = true;
                seq.push_back(v);
                if (extend(next_boundary, out)) return true;
                seq.pop_back();
                used[v] = false;
            }
        }
        return false;
    }

    std::optional<std::vector<int>> run() {
        std::optional<std::vector<int>> out;
        extend(0, out);
        return out;
    }
};

PlaneCycle require_valid(const ColoredPointSet& ps, std::span<const int> vertices,
                         const std::string& context) {
    auto check = validate_cycle(ps, vertices);
    if (!check.ok()) throw NestedStructureError(context + ": " + check.violation->message);
    return *check.cycle;
}

PlaneCycle base_hamiltonian(const ColoredPointSet& ps, const std::vector<int>& actives) {
    if (actives.size() <= static_cast<size_t>(kOracleMaxVertices)) {
        std::vector<int> mapping;
        ColoredPointSet sub = ps.restricted_to(actives, &mapping);
        auto ham = brute_hamiltonian(sub);
        if (!ham) throw NestedStructureError("terminal instance has no plane Hamiltonian cycle");
        std::vector<int> back;
        for (int v : ham->vertices) back.push_back(mapping[v]);
        return require_valid(ps, back, "terminal Hamiltonian cycle");
    }
    HullOrderSearch search(ps, actives);
    auto seq = search.run();
    if (!seq) throw NestedStructureError("terminal instance has no plane Hamiltonian cycle");
    return require_valid(ps, *seq, "terminal Hamiltonian cycle");
}

// Plane 4-cycle red-blue-red-blue through the first red pair; the ring
// always has blues on both sides of a line through two enclosed reds.
PlaneCycle four_cycle(const ColoredPointSet& ps, const std::vector<int>& ring,
                      const std::vector<int>& reds) {
    for (size_t i = 0; i < reds.size(); ++i) {
        for (size_t j = i + 1; j < reds.size(); ++j) {
            const int r1 = reds[i], r2 = reds[j];
            int left = -1, right = -1;
            for (int b : ring) {
                const int s = orient_sign(ps.point(r1), ps.point(r2), ps.point(b));
                if (s > 0 && left < 0) left = b;
                if (s < 0 && right < 0) right = b;
            }
            if (left >= 0 && right >= 0) {
                return require_valid(ps, std::array<int, 4>{r1, left, r2, right}, "plane 4-cycle");
            }
        }
    }
    throw NestedStructureError("no separated blue pair for any red pair");
}

struct RingState {
    std::vector<int> ring;  // ccw order
    std::vector<int> reds;  // sorted
};

void check_reds_inside(const ColoredPointSet& ps, const RingState& s) {
    const auto poly = points_of(ps, s.ring);
    for (int r : s.reds) {
        if (!point_in_convex_polygon_strict(poly, ps.point(r)))
            throw NestedStructureError("a red vertex left the ring interior after a removal");
    }
}

} // namespace

NestedDecomposition validate_nested(const ColoredPointSet& ps, std::span<const int> blue_subset) {
    if (ps.color_count() != 2)
        throw NestedPreconditionError("nested construction needs a two-colored instance");
    if (ps.class_size(kRedColor) != ps.class_size(kBlueColor))
        throw NestedPreconditionError("nested construction needs equal color classes");
    std::vector<int> subset(blue_subset.begin(), blue_subset.end());
    std::sort(subset.begin(), subset.end());
    subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
    if (subset.size() < 3) throw NestedPreconditionError("the blue subset needs at least 3 vertices");
    for (int b : subset) {
        if (b < 0 || b >= ps.size())
            throw NestedPreconditionError("blue subset index out of range");
        if (ps.color(b) != kBlueColor)
            throw NestedPreconditionError("vertex " + std::to_string(b) + " in the subset is not blue");
    }

    const auto subset_pts = points_of(ps, subset);
    const auto hull = convex_hull(subset_pts);
    std::vector<int> ring;
    for (int h : hull) ring.push_back(subset[h]);
    const auto poly = points_of(ps, ring);

    std::string problems;
    for (int i = 0; i < ps.size(); ++i) {
        const bool inside = poly.size() >= 3 && point_in_convex_polygon_strict(poly, ps.point(i));
        if (ps.color(i) == kRedColor && !inside)
            problems += "red vertex " + std::to_string(i) + " is not strictly inside the ring; ";
        if (ps.color(i) == kBlueColor && inside)
            problems += "blue vertex " + std::to_string(i) + " is strictly inside the ring; ";
    }
    if (!problems.empty()) throw NestedPreconditionError(problems);

    NestedDecomposition dec;
    dec.ring = ring;
    dec.reds = ps.class_of(kRedColor);
    auto m = memberships(ps, dec.ring, dec.reds);
    dec.triangle_reds = std::move(m.triangle_reds);
    dec.zone_reds = std::move(m.zone_reds);
    return dec;
}

std::vector<int> suggest_blue_ring(const ColoredPointSet& ps) {
    if (ps.color_count() != 2) throw NestedPreconditionError("two-colored instance required");
    return ps.class_of(kBlueColor);
}

namespace {

// C2 terminal drawing: one red per edge-zone; the full cycle alternates ring
// and zone vertices, and any window of 2t consecutive vertices closes into a
// plane cycle.
PlaneCycle second_kind_cycle(const ColoredPointSet& ps, const RingState& s, const Memberships& m,
                             int t) {
    const int k = static_cast<int>(s.ring.size());
    std::vector<int> full;
    for (int i = 0; i < k; ++i) {
        full.push_back(s.ring[i]);
        full.push_back(m.zone_reds[(i + 1) % k].front());
    }
    const int len = 2 * t;
    for (int offset = 0; offset < 2 * k; ++offset) {
        std::vector<int> window;
        for (int j = 0; j < len; ++j) window.push_back(full[(offset + j) % (2 * k)]);
        auto check = validate_cycle(ps, window);
        if (check.ok()) return *check.cycle;
    }
    throw NestedStructureError("no window of the one-red-per-zone drawing closes into a plane cycle");
}

struct FirstKindLayout {
    std::vector<int> occupied; // zone indices, each holding two reds
};

std::optional<FirstKindLayout> first_kind_layout(const RingState& s, const Memberships& m) {
    const int k = static_cast<int>(s.ring.size());
    if (k % 2 != 0) return std::nullopt;
    FirstKindLayout layout;
    for (int parity : {0, 1}) {
        bool ok = true;
        layout.occupied.clear();
        for (int i = 0; i < k; ++i) {
            const size_t count = m.zone_reds[i].size();
            if (i % 2 == parity) {
                if (count != 2) { ok = false; break; }
                layout.occupied.push_back(i);
            } else if (count != 0) { ok = false; break; }
        }
        if (ok) return layout;
    }
    return std::nullopt;
}

bool is_second_kind(const Memberships& m) {
    return std::all_of(m.zone_reds.begin(), m.zone_reds.end(),
                       [](const std::vector<int>& z) { return z.size() == 1; });
}

// Orders the two reds of an occupied zone z_i as seen ccw from b_{i-1}
// starting at the ray toward b_i.
std::pair<int, int> zone_pair_ordered(const ColoredPointSet& ps, const RingState& s,
                                      const Memberships& m, int zone) {
    const int k = static_cast<int>(s.ring.size());
    const int apex = s.ring[(zone - 1 + k) % k];
    int p1 = m.zone_reds[zone][0], p2 = m.zone_reds[zone][1];
    if (orient_sign(ps.point(apex), ps.point(p1), ps.point(p2)) < 0) std::swap(p1, p2);
    return {p1, p2};
}

// The alternating-zones drawing: fragments b_i, p1(z_i), b_{i-1}, p2(z_i)
// chained over occupied zones (descending ring index).
PlaneCycle first_kind_cycle(const ColoredPointSet& ps, const RingState& s, const Memberships& m,
                            const FirstKindLayout& layout, bool skip_one, int t) {
    const int k = static_cast<int>(s.ring.size());
    auto build = [&](int skip_zone, bool drop_first_red) -> std::vector<int> {
        std::vector<int> seq;
        int cur = layout.occupied.front();
        do {
            const auto [p1, p2] = zone_pair_ordered(ps, s, m, cur);
            seq.push_back(s.ring[cur]);
            if (cur == skip_zone) {
                seq.push_back(drop_first_red ? p2 : p1);
            } else {
                seq.push_back(p1);
                seq.push_back(s.ring[(cur - 1 + k) % k]);
                seq.push_back(p2);
            }
            cur = (cur - 2 + k) % k;
        } while (cur != layout.occupied.front());
        return seq;
    };

    if (!skip_one) {
        auto seq = build(-1, false);
        if (static_cast<int>(seq.size()) != 2 * t)
            throw NestedStructureError("alternating-zones drawing has unexpected size");
        return require_valid(ps, seq, "alternating-zones full cycle");
    }
    for (int zone : layout.occupied) {
        for (bool drop_first : {false, true}) {
            auto seq = build(zone, drop_first);
            if (static_cast<int>(seq.size()) != 2 * t) continue;
            auto check = validate_cycle(ps, seq);
            if (check.ok()) return *check.cycle;
        }
    }
    throw NestedStructureError("no skip variant of the alternating-zones drawing validates");
}

} // namespace

PlaneCycle cycle_of_length(const ColoredPointSet& ps, std::span<const int> blue_subset, int t) {
    NestedDecomposition dec = validate_nested(ps, blue_subset);
    const int n = static_cast<int>(dec.reds.size());
    if (t < 2 || t > n)
        throw PreconditionError("cycle length parameter t=" + std::to_string(t) +
                                " outside {2,...," + std::to_string(n) + "}");
    if (t == 2) return four_cycle(ps, dec.ring, dec.reds);

    std::set<int> in_ring(dec.ring.begin(), dec.ring.end());
    std::vector<int> stray_blues; // blues outside the ring, ascending
    for (int b : ps.class_of(kBlueColor))
        if (!in_ring.count(b)) stray_blues.push_back(b);

    RingState state{dec.ring, dec.reds};

    // Discard (stray blue, red) pairs while more than t reds remain.
    size_t stray_used = 0;
    while (stray_used < stray_blues.size() && static_cast<int>(state.reds.size()) > t) {
        ++stray_used;
        state.reds.erase(state.reds.begin());
    }
    if (static_cast<int>(state.reds.size()) == t && stray_used < stray_blues.size()) {
        // Exactly t reds remain alongside leftover stray blues: solve the
        // remaining 2t points directly.
        std::vector<int> actives(state.ring.begin(), state.ring.end());
        actives.insert(actives.end(), stray_blues.begin() + stray_used, stray_blues.end());
        actives.insert(actives.end(), state.reds.begin(), state.reds.end());
        std::sort(actives.begin(), actives.end());
        return base_hamiltonian(ps, actives);
    }

    // All remaining blues form the ring; shrink it by the boundary-triangle
    // analysis until the target size is reached.
    while (true) {
        const int k = static_cast<int>(state.ring.size());
        if (static_cast<int>(state.reds.size()) != k)
            throw NestedStructureError("ring and red counts diverged");
        if (k == t) {
            std::vector<int> actives(state.ring.begin(), state.ring.end());
            actives.insert(actives.end(), state.reds.begin(), state.reds.end());
            std::sort(actives.begin(), actives.end());
            return base_hamiltonian(ps, actives);
        }

        const Memberships m = memberships(ps, state.ring, state.reds);

        int sparse = -1;
        for (int i = 0; i < k; ++i)
            if (m.triangle_reds[i].size() <= 1) { sparse = i; break; }

        if (sparse >= 0) {
            // Remove one ring blue and one red; the triangle is empty of the
            // remaining reds, so they stay strictly inside the shrunk ring.
            const int removed_red = m.triangle_reds[sparse].empty() ? state.reds.front()
                                                                    : m.triangle_reds[sparse].front();
            state.ring.erase(state.ring.begin() + sparse);
            state.reds.erase(std::find(state.reds.begin(), state.reds.end(), removed_red));
            state.ring = ring_order(ps, state.ring);
            check_reds_inside(ps, state);
            continue;
        }

        // Every boundary triangle holds two or more reds: exactly two each,
        // and every red sits in exactly one edge-zone.
        for (int i = 0; i < k; ++i)
            if (m.triangle_reds[i].size() != 2)
                throw NestedStructureError("a boundary triangle holds " +
                                           std::to_string(m.triangle_reds[i].size()) +
                                           " reds where exactly two are required");
        {
            size_t zoned = 0;
            for (const auto& z : m.zone_reds) zoned += z.size();
            if (zoned != state.reds.size())
                throw NestedStructureError("an enclosed red lies in no edge-zone");
        }

        if (is_second_kind(m)) return second_kind_cycle(ps, state, m, t);

        const auto layout = first_kind_layout(state, m);
        if (!layout)
            throw NestedStructureError(
                "boundary triangles all hold two reds, yet the edge-zones neither alternate 0/2 "
                "nor hold one red each");

        if (k == t + 1) return first_kind_cycle(ps, state, m, *layout, /*skip_one=*/true, t);
        // k >= t + 2: drop one occupied zone with its flanking blues.
        const int zone = layout->occupied.front();
        const auto removed = m.zone_reds[zone];
        const int b_hi = state.ring[zone];
        const int b_lo = state.ring[(zone - 1 + k) % k];
        std::erase_if(state.ring, [&](int b) { return b == b_hi || b == b_lo; });
        std::erase_if(state.reds, [&](int r) {
            return std::find(removed.begin(), removed.end(), r) != removed.end();
        });
        state.ring = ring_order(ps, state.ring);
        check_reds_inside(ps, state);
    }
}

} // namespace planecycles
