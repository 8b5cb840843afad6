#ifndef PLANECYCLES_MONOTONICITY_HPP
#define PLANECYCLES_MONOTONICITY_HPP

#include <vector>

#include "planecycles/model.hpp"
#include "planecycles/triangulation.hpp"

namespace planecycles {

// A cycle vertex whose neighbors' connecting segment crosses no cycle edge.
// It is an ear when that segment lies inside the cycle, a mouth otherwise.
// It is good when the segment is a host edge and the cycle with the vertex
// removed is still non-rainbow (and long enough to be a cycle).
struct PrincipalPoint {
    int position; // index into the cycle sequence
    int vertex;
    int prev;
    int next;
    bool is_ear;
    bool good;
};

std::vector<PrincipalPoint> principal_points(const ColoredPointSet& ps, const PlaneCycle& cycle);

// One shortening step: good principal point, then noncrossing host chord
// (interior preferred), then the flip procedure.  Requires a valid
// non-rainbow plane cycle with t >= 6; the output has length in
// [ceil(t/2)+1, t-1] and is again a valid non-rainbow plane cycle.
PlaneCycle shorten_cycle(const ColoredPointSet& ps, const PlaneCycle& cycle);

// True iff the cycle has exactly three principal points forming a
// three-vertex path along the cycle.
bool check_three_principal_path(const ColoredPointSet& ps, const PlaneCycle& cycle);

} // namespace planecycles

#endif
