#ifndef PLANECYCLES_NESTED_HPP
#define PLANECYCLES_NESTED_HPP

#include <vector>

#include "planecycles/model.hpp"

namespace planecycles {

inline constexpr int kRedColor = 0;
inline constexpr int kBlueColor = 1;

class NestedPreconditionError : public Error {
public:
    explicit NestedPreconditionError(const std::string& msg) : Error(msg) {}
};

// Raised when the geometry contradicts the structure that must hold once
// every boundary triangle holds two or more enclosed points.
class NestedStructureError : public Error {
public:
    explicit NestedStructureError(const std::string& msg) : Error(msg) {}
};

// Boundary structure of a valid nested instance: the enclosing blue ring in
// ccw hull order, the enclosed reds, and for each ring position i the reds
// inside the open boundary triangle t_i = (b_{i-1}, b_i, b_{i+1}) and inside
// the edge-zone z_i = t_i intersect t_{i-1}.
struct NestedDecomposition {
    std::vector<int> ring;
    std::vector<int> reds;
    std::vector<std::vector<int>> triangle_reds;
    std::vector<std::vector<int>> zone_reds;

    int k() const { return static_cast<int>(ring.size()); }
};

// Checks that the blue subset's convex hull strictly encloses every red and
// no blue, and returns the decomposition.  Throws NestedPreconditionError
// otherwise.
NestedDecomposition validate_nested(const ColoredPointSet& ps, std::span<const int> blue_subset);

// A plane cycle of length 2t, for 2 <= t <= n, built by pair discarding,
// boundary-triangle reduction, and the two terminal ring drawings.
PlaneCycle cycle_of_length(const ColoredPointSet& ps, std::span<const int> blue_subset, int t);

// Candidate ring for the `auto` mode: all blue vertices.
std::vector<int> suggest_blue_ring(const ColoredPointSet& ps);

} // namespace planecycles

#endif
