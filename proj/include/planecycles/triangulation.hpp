#ifndef PLANECYCLES_TRIANGULATION_HPP
#define PLANECYCLES_TRIANGULATION_HPP

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "planecycles/geometry.hpp"

namespace planecycles {

using Edge = std::pair<int, int>; // normalized: first < second

inline Edge make_edge(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

// A maximal noncrossing edge set on a point subset (triangulates the convex
// hull of the subset).  Vertices and edges use indices into the full point
// span; edges are normalized and sorted.
struct Triangulation {
    std::vector<int> vertices;
    std::vector<Edge> edges;

    bool has_edge(Edge e) const;
    friend bool operator==(const Triangulation&, const Triangulation&) = default;
};

// Replaces `removed` (with incident triangles forming a convex quadrilateral)
// by `inserted`, the other diagonal.
struct Flip {
    Edge removed;
    Edge inserted;

    friend bool operator==(const Flip&, const Flip&) = default;
};

// Deterministic greedy triangulation of `subset` containing every edge in
// `required`.  Throws if the required edges cross each other.
Triangulation triangulate_containing(std::span<const Point> pts, std::span<const int> subset,
                                     std::span<const Edge> required);

// Apexes of the triangles left and right of edge (a,b); absent on hull side.
struct EdgeApexes {
    std::optional<int> left;
    std::optional<int> right;
};
EdgeApexes edge_apexes(std::span<const Point> pts, const Triangulation& t, Edge e);

// The flip replacing e, if e is flippable (interior edge whose incident
// triangles form a convex quadrilateral).
std::optional<Flip> flip_of(std::span<const Point> pts, const Triangulation& t, Edge e);

Triangulation apply_flip(std::span<const Point> pts, const Triangulation& t, const Flip& flip);
Triangulation apply_flips(std::span<const Point> pts, Triangulation t, std::span<const Flip> flips);

// Flips `t` to the canonical form: the locally-Delaunay triangulation under
// the exact incircle test, cocircular ties broken toward the
// lexicographically smaller diagonal.
std::vector<Flip> canonical_flips(std::span<const Point> pts, const Triangulation& t);

// A flip sequence transforming `from` into `to` (same vertex set), routed
// through the canonical form.  No optimality is claimed.
std::vector<Flip> flip_path(std::span<const Point> pts, const Triangulation& from,
                            const Triangulation& to);

// Test support: noncrossing + maximal.
bool is_valid_triangulation(std::span<const Point> pts, const Triangulation& t);

} // namespace planecycles

#endif
