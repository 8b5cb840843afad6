#include "planecycles/triangulation.hpp"

#include <algorithm>
#include <string>

namespace planecycles {

namespace {

std::string edge_name(Edge e) {
    return std::to_string(e.first) + "-" + std::to_string(e.second);
}

void insert_sorted(std::vector<Edge>& edges, Edge e) {
    edges.insert(std::lower_bound(edges.begin(), edges.end(), e), e);
}

void erase_sorted(std::vector<Edge>& edges, Edge e) {
    auto it = std::lower_bound(edges.begin(), edges.end(), e);
    if (it == edges.end() || *it != e) throw StructureError("edge " + edge_name(e) + " not present");
    edges.erase(it);
}

bool crosses_any(std::span<const Point> pts, Edge e, const std::vector<Edge>& edges) {
    for (const Edge& f : edges) {
        if (segments_cross(pts[e.first], pts[e.second], pts[f.first], pts[f.second])) return true;
    }
    return false;
}

} // namespace

bool Triangulation::has_edge(Edge e) const {
    return std::binary_search(edges.begin(), edges.end(), e);
}

Triangulation triangulate_containing(std::span<const Point> pts, std::span<const int> subset,
                                     std::span<const Edge> required) {
    Triangulation t;
    t.vertices.assign(subset.begin(), subset.end());
    std::sort(t.vertices.begin(), t.vertices.end());
    t.vertices.erase(std::unique(t.vertices.begin(), t.vertices.end()), t.vertices.end());

    std::vector<Edge> req;
    for (Edge e : required) {
        if (e.first == e.second) throw PreconditionError("degenerate required edge");
        req.push_back(make_edge(e.first, e.second));
    }
    std::sort(req.begin(), req.end());
    req.erase(std::unique(req.begin(), req.end()), req.end());
    for (Edge e : req) {
        if (!std::binary_search(t.vertices.begin(), t.vertices.end(), e.first) ||
            !std::binary_search(t.vertices.begin(), t.vertices.end(), e.second))
            throw PreconditionError("required edge " + edge_name(e) + " leaves the point subset");
    }
    for (size_t i = 0; i < req.size(); ++i)
        for (size_t j = i + 1; j < req.size(); ++j)
            if (segments_cross(pts[req[i].first], pts[req[i].second], pts[req[j].first],
                               pts[req[j].second]))
                throw PreconditionError("required edges " + edge_name(req[i]) + " and " +
                                        edge_name(req[j]) + " cross");

    t.edges = req;
    for (size_t i = 0; i < t.vertices.size(); ++i) {
        for (size_t j = i + 1; j < t.vertices.size(); ++j) {
            const Edge e = make_edge(t.vertices[i], t.vertices[j]);
            if (t.has_edge(e)) continue;
            if (!crosses_any(pts, e, t.edges)) insert_sorted(t.edges, e);
        }
    }
    return t;
}

EdgeApexes edge_apexes(std::span<const Point> pts, const Triangulation& t, Edge e) {
    const Point a = pts[e.first], b = pts[e.second];
    std::vector<int> left, right;
    for (int v : t.vertices) {
        if (v == e.first || v == e.second) continue;
        if (!t.has_edge(make_edge(e.first, v)) || !t.has_edge(make_edge(e.second, v))) continue;
        const int s = orient_sign(a, b, pts[v]);
        (s > 0 ? left : right).push_back(v);
    }
    auto face_apex = [&](std::vector<int>& side) -> std::optional<int> {
        std::optional<int> apex;
        for (int c : side) {
            bool empty = true;
            for (int v : t.vertices) {
                if (v == e.first || v == e.second || v == c) continue;
                if (point_in_triangle_strict(a, b, pts[c], pts[v])) {
                    empty = false;
                    break;
                }
            }
            if (empty) {
                if (apex) throw StructureError("two face apexes for edge " + edge_name(e));
                apex = c;
            }
        }
        return apex;
    };
    return EdgeApexes{face_apex(left), face_apex(right)};
}

std::optional<Flip> flip_of(std::span<const Point> pts, const Triangulation& t, Edge e) {
    const auto apexes = edge_apexes(pts, t, e);
    if (!apexes.left || !apexes.right) return std::nullopt;
    const int c = *apexes.left, d = *apexes.right;
    // Flippable iff acbd is a convex quadrilateral, i.e. the diagonals cross.
    if (!segments_cross(pts[e.first], pts[e.second], pts[c], pts[d])) return std::nullopt;
    return Flip{e, make_edge(c, d)};
}

Triangulation apply_flip(std::span<const Point> pts, const Triangulation& t, const Flip& flip) {
    const auto expected = flip_of(pts, t, flip.removed);
    if (!expected || expected->inserted != flip.inserted) {
        throw PreconditionError("flip " + edge_name(flip.removed) + " -> " +
                                edge_name(flip.inserted) + " does not apply");
    }
    Triangulation result = t;
    erase_sorted(result.edges, flip.removed);
    insert_sorted(result.edges, flip.inserted);
    return result;
}

Triangulation apply_flips(std::span<const Point> pts, Triangulation t, std::span<const Flip> flips) {
    for (const Flip& f : flips) t = apply_flip(pts, t, f);
    return t;
}

namespace {

// An edge is illegal if its quadrilateral is convex and the opposite apex
// lies strictly inside the circumcircle, or exactly on it while the other
// diagonal is lexicographically smaller.
std::optional<Flip> first_illegal(std::span<const Point> pts, const Triangulation& t) {
    for (const Edge& e : t.edges) {
        const auto f = flip_of(pts, t, e);
        if (!f) continue;
        const int c = f->inserted.first, d = f->inserted.second;
        const int s = incircle_sign(pts[e.first], pts[e.second], pts[c], pts[d]);
        if (s > 0 || (s == 0 && f->inserted < e)) return f;
    }
    return std::nullopt;
}

} // namespace

std::vector<Flip> canonical_flips(std::span<const Point> pts, const Triangulation& t) {
    std::vector<Flip> flips;
    Triangulation cur = t;
    const long cap = 64L * static_cast<long>(t.edges.size() + 1) * static_cast<long>(t.edges.size() + 1);
    for (long iter = 0; iter <= cap; ++iter) {
        const auto f = first_illegal(pts, cur);
        if (!f) return flips;
        cur = apply_flip(pts, cur, *f);
        flips.push_back(*f);
    }
    throw StructureError("canonical flipping did not converge");
}

namespace {

std::vector<Flip> insert_edge_by_flips(std::span<const Point> pts, Triangulation& t, Edge goal) {
    std::vector<Flip> flips;
    const long cap = 256L * static_cast<long>(t.edges.size() + 1) * static_cast<long>(t.edges.size() + 1);
    for (long iter = 0; iter <= cap; ++iter) {
        if (t.has_edge(goal)) return flips;
        bool progressed = false;
        for (const Edge& e : t.edges) {
            if (!segments_cross(pts[goal.first], pts[goal.second], pts[e.first], pts[e.second]))
                continue;
            const auto f = flip_of(pts, t, e);
            if (!f) continue;
            t = apply_flip(pts, t, *f);
            flips.push_back(*f);
            progressed = true;
            break;
        }
        if (!progressed) throw StructureError("no flippable edge crosses " + edge_name(goal));
    }
    throw StructureError("edge insertion by flips did not converge");
}

std::vector<Flip> reversed_flips(std::span<const Flip> flips) {
    std::vector<Flip> rev;
    rev.reserve(flips.size());
    for (auto it = flips.rbegin(); it != flips.rend(); ++it)
        rev.push_back(Flip{it->inserted, it->removed});
    return rev;
}

} // namespace

std::vector<Flip> flip_path(std::span<const Point> pts, const Triangulation& from,
                            const Triangulation& to) {
    if (from.vertices != to.vertices)
        throw PreconditionError("flip_path endpoints use different point sets");
    std::vector<Flip> path = canonical_flips(pts, from);
    Triangulation canon_from = apply_flips(pts, from, path);
    const std::vector<Flip> to_canon = canonical_flips(pts, to);
    Triangulation canon_to = apply_flips(pts, to, to_canon);
    if (canon_from != canon_to) {
        // Pathological cocircularity can make the canonical form ambiguous;
        // bridge by inserting the target's edges one by one.
        for (const Edge& e : canon_to.edges) {
            auto bridge = insert_edge_by_flips(pts, canon_from, e);
            path.insert(path.end(), bridge.begin(), bridge.end());
        }
        if (canon_from != canon_to) throw StructureError("flip_path bridge failed");
    }
    const auto back = reversed_flips(to_canon);
    path.insert(path.end(), back.begin(), back.end());
    return path;
}

bool is_valid_triangulation(std::span<const Point> pts, const Triangulation& t) {
    for (size_t i = 0; i < t.edges.size(); ++i)
        for (size_t j = i + 1; j < t.edges.size(); ++j)
            if (segments_cross(pts[t.edges[i].first], pts[t.edges[i].second], pts[t.edges[j].first],
                               pts[t.edges[j].second]))
                return false;
    for (size_t i = 0; i < t.vertices.size(); ++i)
        for (size_t j = i + 1; j < t.vertices.size(); ++j) {
            const Edge e = make_edge(t.vertices[i], t.vertices[j]);
            if (!t.has_edge(e) && !crosses_any(pts, e, t.edges)) return false;
        }
    return true;
}

} // namespace planecycles
