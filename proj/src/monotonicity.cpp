#include "planecycles/monotonicity.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace planecycles {

namespace {

std::vector<Point> cycle_polygon(const ColoredPointSet& ps, const PlaneCycle& cycle) {
    std::vector<Point> poly;
    poly.reserve(cycle.length());
    for (int v : cycle.vertices) poly.push_back(ps.point(v));
    return poly;
}

bool segment_crosses_cycle(const ColoredPointSet& ps, const PlaneCycle& cycle, int a, int b) {
    const int t = cycle.length();
    for (int i = 0; i < t; ++i) {
        const int c = cycle.vertices[i], d = cycle.vertices[(i + 1) % t];
        if (segments_cross(ps.point(a), ps.point(b), ps.point(c), ps.point(d))) return true;
    }
    return false;
}

bool remains_nonrainbow_without(const ColoredPointSet& ps, const PlaneCycle& cycle, int removed) {
    std::vector<int> counts(ps.color_count(), 0);
    for (int v : cycle.vertices)
        if (v != removed) ++counts[ps.color(v)];
    return std::any_of(counts.begin(), counts.end(), [](int c) { return c >= 2; });
}

PlaneCycle require_valid(const ColoredPointSet& ps, std::span<const int> vertices,
                         const std::string& context) {
    auto check = validate_cycle(ps, vertices);
    if (!check.ok()) throw StructureError(context + ": " + check.violation->message);
    return *check.cycle;
}

void require_nonrainbow(const ColoredPointSet& ps, const PlaneCycle& cycle,
                        const std::string& context) {
    if (color_profile(ps, cycle).rainbow) throw StructureError(context + ": result is rainbow");
}

// ----- the three shortening cases, on an instance restricted to V(c) -----

std::optional<PlaneCycle> shorten_by_good_principal(const ColoredPointSet& ps,
                                                    const PlaneCycle& cycle) {
    auto pps = principal_points(ps, cycle);
    const PrincipalPoint* best = nullptr;
    for (const auto& pp : pps) {
        if (pp.good && (!best || pp.vertex < best->vertex)) best = &pp;
    }
    if (!best) return std::nullopt;
    std::vector<int> rest;
    for (int v : cycle.vertices)
        if (v != best->vertex) rest.push_back(v);
    PlaneCycle out = require_valid(ps, rest, "good principal point removal");
    require_nonrainbow(ps, out, "good principal point removal");
    return out;
}

std::optional<PlaneCycle> shorten_by_chord(const ColoredPointSet& ps, const PlaneCycle& cycle) {
    const int t = cycle.length();
    const auto poly = cycle_polygon(ps, cycle);
    std::vector<int> pos_of(ps.size(), -1);
    for (int i = 0; i < t; ++i) pos_of[cycle.vertices[i]] = i;

    std::optional<Edge> chord;
    for (int pass = 0; pass < 2 && !chord; ++pass) {
        const bool want_interior = (pass == 0);
        for (int u = 0; u < ps.size() && !chord; ++u) {
            for (int v = u + 1; v < ps.size(); ++v) {
                const int pu = pos_of[u], pv = pos_of[v];
                const int gap = std::abs(pu - pv);
                if (gap == 1 || gap == t - 1) continue; // cycle edge
                if (!ps.is_host_edge(u, v)) continue;
                if (segment_crosses_cycle(ps, cycle, u, v)) continue;
                if (midpoint_in_simple_polygon(poly, ps.point(u), ps.point(v)) != want_interior)
                    continue;
                chord = Edge{u, v};
                break;
            }
        }
    }
    if (!chord) return std::nullopt;

    int pu = pos_of[chord->first], pv = pos_of[chord->second];
    if (pu > pv) std::swap(pu, pv);
    // Forward path pu..pv has pv-pu edges; the other one has t-(pv-pu).
    std::vector<int> forward, backward;
    for (int i = pu; i <= pv; ++i) forward.push_back(cycle.vertices[i]);
    for (int i = pv; i != pu + t; ++i) backward.push_back(cycle.vertices[i % t]);
    backward.push_back(cycle.vertices[pu]);

    const int n_forward = pv - pu;
    const int n_backward = t - n_forward;
    std::optional<PlaneCycle> out;
    if (n_forward >= n_backward) out = require_valid(ps, forward, "chord shortening");
    if (n_backward >= n_forward) {
        PlaneCycle other = require_valid(ps, backward, "chord shortening");
        if (!out || other.vertices < out->vertices) out = other;
    }
    require_nonrainbow(ps, *out, "chord shortening");
    return out;
}

PlaneCycle shorten_by_flip(const ColoredPointSet& ps, const PlaneCycle& cycle) {
    const int t = cycle.length();
    std::set<Edge> cycle_edges;
    for (int i = 0; i < t; ++i)
        cycle_edges.insert(make_edge(cycle.vertices[i], cycle.vertices[(i + 1) % t]));

    std::optional<Edge> chord;
    for (int u = 0; u < ps.size() && !chord; ++u)
        for (int v = u + 1; v < ps.size(); ++v)
            if (ps.is_host_edge(u, v) && !cycle_edges.count({u, v})) {
                chord = Edge{u, v};
                break;
            }
    if (!chord) throw StructureError("no host chord available for the flip case");

    std::vector<Edge> required(cycle_edges.begin(), cycle_edges.end());
    Triangulation from = triangulate_containing(ps.points(), cycle.vertices, required);
    Triangulation to = triangulate_containing(ps.points(), cycle.vertices,
                                              std::vector<Edge>{*chord});
    const auto flips = flip_path(ps.points(), from, to);

    Triangulation cur = from;
    for (const Flip& flip : flips) {
        if (!cycle_edges.count(flip.removed)) {
            cur = apply_flip(ps.points(), cur, flip);
            continue;
        }
        int a = flip.removed.first, b = flip.removed.second;
        int c = flip.inserted.first, d = flip.inserted.second;
        const bool ac = cycle_edges.count(make_edge(a, c)) != 0;
        const bool bc = cycle_edges.count(make_edge(b, c)) != 0;
        const bool ad = cycle_edges.count(make_edge(a, d)) != 0;
        const bool bd = cycle_edges.count(make_edge(b, d)) != 0;
        if (ac == bc || ad == bd)
            throw StructureError("stopping flip is not incident to the cycle as expected");
        if (!ac) std::swap(a, b); // now c-a and b-d are the cycle edges
        if (!cycle_edges.count(make_edge(a, c)) || !cycle_edges.count(make_edge(b, d)))
            throw StructureError("stopping flip neighbors inconsistent");
        if (ps.color(c) == ps.color(d))
            throw StructureError("stopping flip endpoints are monochromatic");

        // Replace the path c-a-b-d by the edge c-d.
        std::vector<int> out;
        const int tt = cycle.length();
        int start = -1;
        for (int i = 0; i < tt; ++i)
            if (cycle.vertices[i] == c) start = i;
        const int fwd = cycle.vertices[(start + 1) % tt];
        const int dir = (fwd == a) ? 1 : -1;
        if (dir == -1 && cycle.vertices[(start - 1 + tt) % tt] != a)
            throw StructureError("stopping flip path not found on cycle");
        out.push_back(c);
        for (int step = 3;; ++step) {
            const int v = cycle.vertices[((start + dir * step) % tt + tt) % tt];
            if (v == c) break;
            out.push_back(v);
        }
        // `out` now runs c, d, ... around the cycle skipping a and b.
        if (out[1] != d) throw StructureError("stopping flip skip failed");
        PlaneCycle shorter = require_valid(ps, out, "flip shortening");
        require_nonrainbow(ps, shorter, "flip shortening");
        return shorter;
    }
    throw StructureError("flip path never removed a cycle edge");
}

} // namespace

std::vector<PrincipalPoint> principal_points(const ColoredPointSet& ps, const PlaneCycle& cycle) {
    const int t = cycle.length();
    const auto poly = cycle_polygon(ps, cycle);
    std::vector<PrincipalPoint> result;
    for (int i = 0; i < t; ++i) {
        const int p1 = cycle.vertices[i];
        const int p2 = cycle.vertices[(i - 1 + t) % t];
        const int p3 = cycle.vertices[(i + 1) % t];
        bool principal, ear;
        if (t == 3) {
            principal = true;
            ear = true;
        } else {
            principal = !segment_crosses_cycle(ps, cycle, p2, p3);
            ear = principal && midpoint_in_simple_polygon(poly, ps.point(p2), ps.point(p3));
        }
        if (!principal) continue;
        const bool good = t >= 4 && ps.is_host_edge(p2, p3) &&
                          remains_nonrainbow_without(ps, cycle, p1);
        result.push_back(PrincipalPoint{i, p1, p2, p3, ear, good});
    }
    return result;
}

PlaneCycle shorten_cycle(const ColoredPointSet& ps, const PlaneCycle& cycle) {
    const int t = cycle.length();
    if (t < 6) throw PreconditionError("shorten_cycle needs a cycle of length at least 6");
    auto check = validate_cycle(ps, cycle.vertices);
    if (!check.ok()) throw PreconditionError("shorten_cycle input invalid: " +
                                             check.violation->message);
    if (color_profile(ps, cycle).rainbow)
        throw PreconditionError("shorten_cycle input cycle is rainbow");

    // Work on the instance restricted to the cycle's vertices.
    std::vector<int> mapping;
    ColoredPointSet sub = ps.restricted_to(cycle.vertices, &mapping);
    std::vector<int> to_sub(ps.size(), -1);
    for (int i = 0; i < static_cast<int>(mapping.size()); ++i) to_sub[mapping[i]] = i;
    std::vector<int> sub_cycle;
    for (int v : cycle.vertices) sub_cycle.push_back(to_sub[v]);
    const PlaneCycle local = require_valid(sub, sub_cycle, "restricted cycle");

    std::optional<PlaneCycle> result = shorten_by_good_principal(sub, local);
    if (!result) result = shorten_by_chord(sub, local);
    if (!result) result = shorten_by_flip(sub, local);

    const int len = result->length();
    const int lower = (t + 1) / 2 + 1;
    if (len < lower || len > t - 1)
        throw StructureError("shortened length " + std::to_string(len) + " outside [" +
                             std::to_string(lower) + ", " + std::to_string(t - 1) + "]");

    std::vector<int> back;
    for (int v : result->vertices) back.push_back(mapping[v]);
    return require_valid(ps, back, "shortened cycle in original instance");
}

bool check_three_principal_path(const ColoredPointSet& ps, const PlaneCycle& cycle) {
    const auto pps = principal_points(ps, cycle);
    if (pps.size() != 3) return false;
    const int t = cycle.length();
    std::vector<int> positions = {pps[0].position, pps[1].position, pps[2].position};
    std::sort(positions.begin(), positions.end());
    const int a = positions[0], b = positions[1], c = positions[2];
    return (b == a + 1 && c == b + 1) || (a == 0 && b == t - 2 && c == t - 1) ||
           (a == 0 && b == 1 && c == t - 1);
}

} // namespace planecycles
