#ifndef PLANECYCLES_FPT_HPP
#define PLANECYCLES_FPT_HPP

#include <functional>
#include <optional>
#include <vector>

#include "planecycles/model.hpp"

namespace planecycles {

struct CriticalVertex {
    int pos; // boundary position
    bool first_kind;
    bool second_kind;
};

struct CriticalArc {
    int start_pos;
    int length;
};

// Boundary split of a bipartite instance: the hull order, interior vertices,
// critical vertices (same color as predecessor, or separated from it by a
// line through two interior vertices), and the critical arcs they open.
struct ArcDecomposition {
    std::vector<int> boundary; // ccw, smallest index first
    std::vector<int> interior; // ascending
    std::vector<CriticalVertex> criticals;
    std::vector<CriticalArc> arcs;
    std::vector<int> arc_of_pos;

    int k() const { return static_cast<int>(interior.size()); }
    int m() const { return static_cast<int>(boundary.size()); }
    int arc_count() const { return static_cast<int>(arcs.size()); }
    int first_kind_count() const;
    int arc_vertex(int arc, int offset) const; // vertex id of the offset-th arc member
    int arc_first(int arc) const { return arc_vertex(arc, 0); }
    int arc_last(int arc) const { return arc_vertex(arc, arcs[arc].length - 1); }
    bool arc_start_is_first_kind(int arc) const;
};

// Requires a two-colored balanced instance with k >= 2.
ArcDecomposition compute_arcs(const ColoredPointSet& ps);

// Decision for k <= 1: the hull cycle, possibly with the single interior
// vertex spliced into the unique monochromatic boundary gap.
std::optional<PlaneCycle> near_convex_decision(const ColoredPointSet& ps);

// A directed spanning cycle of the interior vertices with every edge marked
// fixed or gap; vertices incident to two gaps are duplicated around a
// zero-length dummy edge, so each gap endpoint touches exactly one gap.
struct InitialCycle {
    enum class EdgeKind { Fixed, Gap, Dummy };

    std::vector<int> node_vertex;    // node -> interior vertex id (copies share)
    std::vector<EdgeKind> edge_kind; // edge j joins node j and node j+1 (mod size)
    std::vector<int> gap_nodes;      // nodes incident to a gap, in cycle order

    int node_count() const { return static_cast<int>(node_vertex.size()); }
    int gap_count() const { return static_cast<int>(gap_nodes.size()); }
};

// Streams every (directed spanning cycle, nonempty gap set) pair whose fixed
// non-dummy edges are host edges and mutually noncrossing, in deterministic
// order.  The visitor returns false to stop.
void enumerate_initial_cycles(const ColoredPointSet& ps, const ArcDecomposition& dec,
                              const std::function<bool(const InitialCycle&)>& visit);
std::vector<InitialCycle> all_initial_cycles(const ColoredPointSet& ps, const ArcDecomposition& dec);

// Arc choice per gap vertex, parallel to InitialCycle::gap_nodes.
struct ArcSelection {
    std::vector<int> arcs;
};

struct FeasibilityReport {
    bool feasible = false;
    int first_failed = 0; // 1..7 when infeasible, 0 otherwise
    int rotation = -1;    // witnessing labeling rotation when feasible
    std::string detail;
};

// The seven feasibility conditions, checked for some rotation of the gap
// labeling along the initial cycle.
FeasibilityReport check_feasible(const ColoredPointSet& ps, const ArcDecomposition& dec,
                                 const InitialCycle& f, const ArcSelection& sel);

// Unchecked constructive attempt following the arc-assignment strategy; used
// by the feasibility/constructibility sweeps.  Returns a validated
// Hamiltonian cycle consistent with (f, sel) or nothing.
std::optional<PlaneCycle> try_build_from_selection(const ColoredPointSet& ps,
                                                   const ArcDecomposition& dec,
                                                   const InitialCycle& f, const ArcSelection& sel);

// Requires a feasible selection; returns the constructed Hamiltonian cycle.
PlaneCycle construct_from_selection(const ColoredPointSet& ps, const ArcDecomposition& dec,
                                    const InitialCycle& f, const ArcSelection& sel);

struct HamiltonianDecision {
    bool yes = false;
    std::optional<PlaneCycle> cycle;
};

// Full decision: the first-kind guard, the near-convex cases, and otherwise
// the search over initial cycles and ccw-ordered arc selections.  The search
// may be partitioned over `workers` threads; the reported witness is the
// first one in enumeration order regardless of the worker count.
HamiltonianDecision decide_hamiltonian(const ColoredPointSet& ps, bool construct, int workers = 1);

} // namespace planecycles

#endif
