#include "planecycles/fpt.hpp"

#include <algorithm>
#include <atomic>
#include <iostream>
#include <numeric>
#include <thread>

#include "planecycles/oracle.hpp"

namespace planecycles {

int ArcDecomposition::first_kind_count() const {
    int count = 0;
    for (const auto& c : criticals) count += c.first_kind ? 1 : 0;
    return count;
}

int ArcDecomposition::arc_vertex(int arc, int offset) const {
    return boundary[(arcs[arc].start_pos + offset) % m()];
}

bool ArcDecomposition::arc_start_is_first_kind(int arc) const {
    const int pos = arcs[arc].start_pos;
    auto it = std::lower_bound(criticals.begin(), criticals.end(), pos,
                               [](const CriticalVertex& c, int p) { return c.pos < p; });
    return it != criticals.end() && it->pos == pos && it->first_kind;
}

namespace {

struct HullSplit {
    std::vector<int> boundary;
    std::vector<int> interior;
};

HullSplit hull_split(const ColoredPointSet& ps) {
    HullSplit split;
    split.boundary = convex_hull(ps.points());
    std::vector<bool> on_hull(ps.size(), false);
    for (int v : split.boundary) on_hull[v] = true;
    for (int v = 0; v < ps.size(); ++v)
        if (!on_hull[v]) split.interior.push_back(v);
    return split;
}

void require_balanced_bipartite(const ColoredPointSet& ps) {
    if (ps.color_count() != 2)
        throw PreconditionError("a two-colored instance is required");
    if (ps.class_size(0) != ps.class_size(1))
        throw PreconditionError("unbalanced colors: " + std::to_string(ps.class_size(0)) + " vs " +
                                std::to_string(ps.class_size(1)));
}

} // namespace

ArcDecomposition compute_arcs(const ColoredPointSet& ps) {
    require_balanced_bipartite(ps);
    ArcDecomposition dec;
    auto split = hull_split(ps);
    dec.boundary = std::move(split.boundary);
    dec.interior = std::move(split.interior);
    const int m = dec.m();
    const int k = dec.k();
    if (k < 2) throw PreconditionError("the arc decomposition needs at least two interior vertices");

    for (int i = 0; i < m; ++i) {
        const int cur = dec.boundary[i];
        const int prev = dec.boundary[(i - 1 + m) % m];
        const bool first = ps.color(cur) == ps.color(prev);
        bool second = false;
        for (int a = 0; a < k && !second; ++a) {
            for (int b = a + 1; b < k; ++b) {
                const int s1 = orient_sign(ps.point(dec.interior[a]), ps.point(dec.interior[b]),
                                           ps.point(prev));
                const int s2 = orient_sign(ps.point(dec.interior[a]), ps.point(dec.interior[b]),
                                           ps.point(cur));
                if (s1 == 0 || s2 == 0)
                    throw StructureError("boundary vertex on an interior line despite general position");
                if (s1 * s2 < 0) {
                    second = true;
                    break;
                }
            }
        }
        if (first || second) dec.criticals.push_back(CriticalVertex{i, first, second});
    }

    if (dec.criticals.empty()) {
        // Cannot happen for k >= 2 (any interior line splits the hull), but
        // the decomposition stays usable: one arc spanning all of B.
        dec.arcs.push_back(CriticalArc{0, m});
    } else {
        const int s = static_cast<int>(dec.criticals.size());
        for (int i = 0; i < s; ++i) {
            const int start = dec.criticals[i].pos;
            const int next = dec.criticals[(i + 1) % s].pos;
            const int len = (next - start + m - 1) % m + 1;
            dec.arcs.push_back(CriticalArc{start, len});
        }
    }
    dec.arc_of_pos.assign(m, -1);
    for (int a = 0; a < dec.arc_count(); ++a)
        for (int off = 0; off < dec.arcs[a].length; ++off)
            dec.arc_of_pos[(dec.arcs[a].start_pos + off) % m] = a;
    return dec;
}

std::optional<PlaneCycle> near_convex_decision(const ColoredPointSet& ps) {
    require_balanced_bipartite(ps);
    const auto split = hull_split(ps);
    const int k = static_cast<int>(split.interior.size());
    if (k > 1) throw PreconditionError("near_convex_decision handles at most one interior vertex");
    const int m = static_cast<int>(split.boundary.size());

    std::vector<int> mono; // positions i where boundary i and i+1 share a color
    for (int i = 0; i < m; ++i) {
        if (ps.color(split.boundary[i]) == ps.color(split.boundary[(i + 1) % m]))
            mono.push_back(i);
    }

    std::vector<int> cycle;
    if (k == 0) {
        if (!mono.empty()) return std::nullopt;
        cycle = split.boundary;
    } else {
        if (mono.size() != 1) return std::nullopt;
        const int x = split.interior.front();
        // Color counts force the interior vertex to be the opposite color of
        // the monochromatic boundary pair.
        if (ps.color(x) == ps.color(split.boundary[mono.front()]))
            throw StructureError("interior vertex color matches the monochromatic boundary pair");
        for (int i = 0; i < m; ++i) {
            cycle.push_back(split.boundary[i]);
            if (i == mono.front()) cycle.push_back(x);
        }
    }
    auto check = validate_cycle(ps, cycle);
    if (!check.ok())
        throw StructureError("near-convex cycle failed validation: " + check.violation->message);
    return *check.cycle;
}

// ---------------------------------------------------------------------------
// Initial cycles
// ---------------------------------------------------------------------------

namespace {

bool fixed_edges_valid(const ColoredPointSet& ps, const std::vector<int>& order, unsigned gap_mask) {
    const int k = static_cast<int>(order.size());
    std::vector<std::pair<int, int>> fixed;
    for (int i = 0; i < k; ++i) {
        if (gap_mask & (1u << i)) continue;
        const int a = order[i], b = order[(i + 1) % k];
        if (!ps.is_host_edge(a, b)) return false;
        fixed.emplace_back(a, b);
    }
    for (size_t i = 0; i < fixed.size(); ++i)
        for (size_t j = i + 1; j < fixed.size(); ++j)
            if (segments_cross(ps.point(fixed[i].first), ps.point(fixed[i].second),
                               ps.point(fixed[j].first), ps.point(fixed[j].second)))
                return false;
    return true;
}

InitialCycle make_initial_cycle(const std::vector<int>& order, unsigned gap_mask) {
    const int k = static_cast<int>(order.size());
    InitialCycle f;
    auto gap = [&](int edge) { return (gap_mask & (1u << ((edge % k + k) % k))) != 0; };
    for (int i = 0; i < k; ++i) {
        f.node_vertex.push_back(order[i]);
        if (gap(i - 1) && gap(i)) {
            f.edge_kind.push_back(InitialCycle::EdgeKind::Dummy);
            f.node_vertex.push_back(order[i]);
        }
        f.edge_kind.push_back(gap(i) ? InitialCycle::EdgeKind::Gap : InitialCycle::EdgeKind::Fixed);
    }
    const int L = f.node_count();
    for (int j = 0; j < L; ++j) {
        const auto in = f.edge_kind[(j - 1 + L) % L];
        const auto out = f.edge_kind[j];
        if (in == InitialCycle::EdgeKind::Gap || out == InitialCycle::EdgeKind::Gap)
            f.gap_nodes.push_back(j);
    }
    return f;
}

} // namespace

void enumerate_initial_cycles(const ColoredPointSet& ps, const ArcDecomposition& dec,
                              const std::function<bool(const InitialCycle&)>& visit) {
    const int k = dec.k();
    std::vector<int> order(dec.interior);
    std::vector<int> rest(order.begin() + 1, order.end());
    std::sort(rest.begin(), rest.end());

    std::vector<unsigned> masks;
    for (unsigned mask = 1; mask < (1u << k); ++mask) masks.push_back(mask);
    std::stable_sort(masks.begin(), masks.end(), [](unsigned a, unsigned b) {
        const int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
        return pa != pb ? pa < pb : a < b;
    });

    do {
        order.resize(1);
        order.insert(order.end(), rest.begin(), rest.end());
        for (unsigned mask : masks) {
            if (!fixed_edges_valid(ps, order, mask)) continue;
            if (!visit(make_initial_cycle(order, mask))) return;
        }
    } while (std::next_permutation(rest.begin(), rest.end()));
}

std::vector<InitialCycle> all_initial_cycles(const ColoredPointSet& ps,
                                             const ArcDecomposition& dec) {
    std::vector<InitialCycle> out;
    enumerate_initial_cycles(ps, dec, [&](const InitialCycle& f) {
        out.push_back(f);
        return true;
    });
    return out;
}

// ---------------------------------------------------------------------------
// Feasibility
// ---------------------------------------------------------------------------

namespace {

enum class PairKind { Gap, Dummy, FixedPath };

struct SelectionContext {
    const ColoredPointSet& ps;
    const ArcDecomposition& dec;
    const InitialCycle& f;
    const ArcSelection& sel;
    int g;
    int A;
    std::vector<Point> gap_pt;
    std::vector<int> gap_color;
    std::vector<PairKind> pair_kind; // pair j joins gap vertex j and j+1 (mod g)
    std::vector<std::pair<int, int>> fixed_edges; // real fixed edges, as vertex ids

    SelectionContext(const ColoredPointSet& ps_, const ArcDecomposition& dec_,
                     const InitialCycle& f_, const ArcSelection& sel_)
        : ps(ps_), dec(dec_), f(f_), sel(sel_), g(f_.gap_count()), A(dec_.arc_count()) {
        if (static_cast<int>(sel.arcs.size()) != g)
            throw PreconditionError("selection size does not match the gap vertex count");
        for (int a : sel.arcs)
            if (a < 0 || a >= A) throw PreconditionError("selection references an unknown arc");
        const int L = f.node_count();
        for (int j = 0; j < g; ++j) {
            const int node = f.gap_nodes[j];
            gap_pt.push_back(ps.point(f.node_vertex[node]));
            gap_color.push_back(ps.color(f.node_vertex[node]));
            switch (f.edge_kind[node]) {
                case InitialCycle::EdgeKind::Gap: pair_kind.push_back(PairKind::Gap); break;
                case InitialCycle::EdgeKind::Dummy: pair_kind.push_back(PairKind::Dummy); break;
                case InitialCycle::EdgeKind::Fixed: pair_kind.push_back(PairKind::FixedPath); break;
            }
        }
        for (int j = 0; j < L; ++j) {
            if (f.edge_kind[j] == InitialCycle::EdgeKind::Fixed)
                fixed_edges.emplace_back(f.node_vertex[j], f.node_vertex[(j + 1) % L]);
        }
    }

    Point arc_first_pt(int arc) const { return ps.point(dec.arc_first(arc)); }
    int arc_len(int arc) const { return dec.arcs[arc].length; }
    int arc_of(int j) const { return sel.arcs[j]; }

    // No first-kind critical from the arc after `from` up to and including `to`.
    bool junctions_clear(int from, int to) const {
        int x = (from + 1) % A;
        while (true) {
            if (dec.arc_start_is_first_kind(x)) return false;
            if (x == to) return true;
            x = (x + 1) % A;
        }
    }
};

struct ConditionResult {
    bool ok = true;
    std::string detail;

    void fail(std::string why) {
        if (!ok) return;
        ok = false;
        detail = std::move(why);
    }
};

// Conditions 2, 3, 5, 6 and the distinct-arc part of 4 do not depend on the
// labeling rotation; they are evaluated once per selection.
struct FixedConditions {
    ConditionResult c2, c3, c4_distinct, c5, c6;
};

FixedConditions check_fixed_conditions(const SelectionContext& ctx) {
    FixedConditions out;
    // Condition 2: segments into the selected arc avoid fixed edges.
    for (int j = 0; j < ctx.g && out.c2.ok; ++j) {
        const Point w = ctx.arc_first_pt(ctx.arc_of(j));
        for (const auto& [ea, eb] : ctx.fixed_edges) {
            if (segments_cross(ctx.gap_pt[j], w, ctx.ps.point(ea), ctx.ps.point(eb))) {
                out.c2.fail("segment from gap vertex " + std::to_string(j) +
                            " crosses fixed edge " + std::to_string(ea) + "-" + std::to_string(eb));
                break;
            }
        }
    }
    // Condition 3: segments into distinct arcs avoid each other.
    for (int i = 0; i < ctx.g && out.c3.ok; ++i)
        for (int j = i + 1; j < ctx.g; ++j) {
            if (ctx.arc_of(i) == ctx.arc_of(j)) continue;
            if (segments_cross(ctx.gap_pt[i], ctx.arc_first_pt(ctx.arc_of(i)), ctx.gap_pt[j],
                               ctx.arc_first_pt(ctx.arc_of(j)))) {
                out.c3.fail("arc segments of gap vertices " + std::to_string(i) + " and " +
                            std::to_string(j) + " cross");
                break;
            }
        }
    for (int j = 0; j < ctx.g; ++j) {
        const int jn = (j + 1) % ctx.g;
        if (ctx.pair_kind[j] == PairKind::Gap) {
            // Condition 4 for gaps whose endpoints select distinct arcs.
            if (ctx.arc_of(j) != ctx.arc_of(jn) &&
                !ctx.junctions_clear(ctx.arc_of(j), ctx.arc_of(jn))) {
                out.c4_distinct.fail("first-kind critical vertex inside the boundary stretch of gap " +
                                     std::to_string(j));
            }
            continue;
        }
        // Condition 5: a monochromatic non-gap pair needs distinct arcs.
        if (ctx.gap_color[j] == ctx.gap_color[jn] && ctx.arc_of(j) == ctx.arc_of(jn)) {
            out.c5.fail("monochromatic non-gap pair " + std::to_string(j) +
                        " selects a single arc");
        }
        // Condition 6: distinct arcs across a non-gap pair must be adjacent
        // with matching endpoint colors.
        if (ctx.arc_of(j) != ctx.arc_of(jn)) {
            const bool adjacent = (ctx.arc_of(j) + 1) % ctx.A == ctx.arc_of(jn);
            const bool colors_ok =
                ctx.ps.color(ctx.dec.arc_last(ctx.arc_of(j))) != ctx.gap_color[j] &&
                ctx.ps.color(ctx.dec.arc_first(ctx.arc_of(jn))) != ctx.gap_color[jn];
            if (!adjacent || !colors_ok) {
                out.c6.fail("non-gap pair " + std::to_string(j) +
                            " spans non-adjacent arcs or endpoint colors clash");
            }
        }
    }
    return out;
}

// Condition 1 under a labeling that starts at gap vertex `r`: arcs appear
// ccw with repeated arcs contiguous, same-arc neighbors keep the arc on the
// right of their connecting line, and the wrap pair can close the circle.
ConditionResult check_condition1(const SelectionContext& ctx, int r) {
    ConditionResult out;
    const int g = ctx.g, A = ctx.A;
    int prev_offset = 0;
    for (int i = 1; i < g; ++i) {
        const int offset = (ctx.arc_of((r + i) % g) - ctx.arc_of(r) + A) % A;
        if (offset < prev_offset) {
            out.fail("selected arcs leave counterclockwise order");
            return out;
        }
        prev_offset = offset;
    }
    for (int i = 0; i + 1 < g; ++i) {
        const int ja = (r + i) % g, jb = (r + i + 1) % g;
        if (ctx.arc_of(ja) != ctx.arc_of(jb)) continue;
        if (ctx.pair_kind[ja] == PairKind::Dummy) continue;
        if (orient_sign(ctx.gap_pt[ja], ctx.gap_pt[jb], ctx.arc_first_pt(ctx.arc_of(ja))) >= 0) {
            out.fail("arc is not right of the line through same-arc pair " + std::to_string(ja));
            return out;
        }
    }
    // The wrap pair closes the circle: its boundary path runs the long way
    // around, so the side test reverses; a fixed wrap pair cannot close the
    // circle while staying inside one proper arc.
    const int jw = (r + g - 1) % g, jn = r;
    if (ctx.arc_of(jw) == ctx.arc_of(jn) && ctx.pair_kind[jw] != PairKind::Dummy) {
        if (ctx.pair_kind[jw] == PairKind::FixedPath) {
            out.fail("fixed wrap pair cannot stay within a single arc");
            return out;
        }
        if (orient_sign(ctx.gap_pt[jn], ctx.gap_pt[jw], ctx.arc_first_pt(ctx.arc_of(jw))) >= 0) {
            out.fail("arc is not right of the reversed wrap-pair line");
            return out;
        }
    }
    return out;
}

// Condition 4's wrap case: a gap closing the labeling inside a single arc
// routes around the whole boundary.
ConditionResult check_condition4_wrap(const SelectionContext& ctx, int r) {
    ConditionResult out;
    const int jw = (r + ctx.g - 1) % ctx.g;
    if (ctx.pair_kind[jw] == PairKind::Gap && ctx.arc_of(jw) == ctx.arc_of((jw + 1) % ctx.g)) {
        if (!ctx.junctions_clear(ctx.arc_of(jw), ctx.arc_of(jw)))
            out.fail("wrap-around gap needs the whole boundary alternately colored");
    }
    return out;
}

// Condition 7 with the labeling-dependent color adjustment.
ConditionResult check_condition7(const SelectionContext& ctx, int r) {
    ConditionResult out;
    const int g = ctx.g, A = ctx.A;
    std::vector<int> count(A, 0), mono(A, 0), eps(A, 0);
    std::vector<bool> seen(A, false);
    for (int i = 0; i < g; ++i) {
        const int j = (r + i) % g;
        const int a = ctx.arc_of(j);
        ++count[a];
        if (!seen[a]) {
            seen[a] = true;
            if (ctx.ps.color(ctx.dec.arc_first(a)) == ctx.gap_color[j]) eps[a] = 1;
        }
    }
    for (int j = 0; j < g; ++j) {
        const int jn = (j + 1) % g;
        if (ctx.pair_kind[j] == PairKind::Gap && ctx.arc_of(j) == ctx.arc_of(jn) &&
            ctx.gap_color[j] == ctx.gap_color[jn])
            ++mono[ctx.arc_of(j)];
    }
    for (int a = 0; a < A; ++a) {
        if (!seen[a]) continue;
        if (ctx.arc_len(a) < count[a] - mono[a] + eps[a]) {
            out.fail("arc " + std::to_string(a) + " is too short: |A|=" +
                     std::to_string(ctx.arc_len(a)) + " < " +
                     std::to_string(count[a] - mono[a] + eps[a]));
            return out;
        }
    }
    return out;
}

} // namespace

FeasibilityReport check_feasible(const ColoredPointSet& ps, const ArcDecomposition& dec,
                                 const InitialCycle& f, const ArcSelection& sel) {
    SelectionContext ctx(ps, dec, f, sel);
    const FixedConditions fixed = check_fixed_conditions(ctx);

    FeasibilityReport report;
    int best_fail = 0, best_rotation = -1;
    std::string best_detail;
    for (int r = 0; r < ctx.g; ++r) {
        int fail = 0;
        std::string detail;
        const auto c1 = check_condition1(ctx, r);
        const auto c4_wrap = check_condition4_wrap(ctx, r);
        auto consider = [&](int number, const ConditionResult& res) {
            if (fail == 0 && !res.ok) {
                fail = number;
                detail = res.detail;
            }
        };
        consider(1, c1);
        consider(2, fixed.c2);
        consider(3, fixed.c3);
        consider(4, fixed.c4_distinct);
        consider(4, c4_wrap);
        consider(5, fixed.c5);
        consider(6, fixed.c6);
        consider(7, check_condition7(ctx, r));
        if (fail == 0) {
            report.feasible = true;
            report.rotation = r;
            return report;
        }
        if (fail > best_fail) {
            best_fail = fail;
            best_rotation = r;
            best_detail = std::move(detail);
        }
    }
    report.first_failed = best_fail;
    report.rotation = best_rotation;
    report.detail = best_detail;
    return report;
}

// ---------------------------------------------------------------------------
// Construction
// ---------------------------------------------------------------------------

namespace {

std::optional<std::vector<int>> build_with_rotation(const SelectionContext& ctx, int r) {
    const int g = ctx.g;
    const auto& dec = ctx.dec;
    const auto& ps = ctx.ps;
    const int m = dec.m();

    // Boundary position chosen for each gap vertex (original gap index).
    std::vector<int> chosen(g, -1);
    auto arc_pos = [&](int arc, int off) { return (dec.arcs[arc].start_pos + off) % m; };
    auto pos_color = [&](int pos) { return ps.color(dec.boundary[pos]); };

    int i = 0;
    while (i < g) {
        const int j0 = (r + i) % g;
        const int arc = ctx.arc_of(j0);
        int run = 1;
        while (i + run < g && ctx.arc_of((r + i + run) % g) == arc) ++run;
        const int L = ctx.arc_len(arc);

        for (int s = 0; s < run; ++s) {
            const int lab = i + s;
            const int j = (r + lab) % g;
            const int behind = (j - 1 + g) % g; // pair between the previous gap vertex and j
            const bool behind_gap = ctx.pair_kind[behind] == PairKind::Gap;
            int off = -1;
            if (s == 0) {
                if (!behind_gap) {
                    off = 0;
                } else if (run == 1) {
                    off = L - 1;
                } else {
                    if (pos_color(arc_pos(arc, 0)) != ctx.gap_color[j]) off = 0;
                    else if (L >= 2 && pos_color(arc_pos(arc, 1)) != ctx.gap_color[j]) off = 1;
                    else return std::nullopt;
                }
            } else {
                const int prev_off =
                    (chosen[(r + lab - 1) % g] - dec.arcs[arc].start_pos + m) % m;
                if (!behind_gap) {
                    off = prev_off + 1;
                } else if (s == run - 1) {
                    off = L - 1;
                    if (off < prev_off) return std::nullopt;
                } else {
                    if (pos_color(arc_pos(arc, prev_off)) != ctx.gap_color[j]) off = prev_off;
                    else off = prev_off + 1;
                }
            }
            if (off < 0 || off >= L) return std::nullopt;
            if (pos_color(arc_pos(arc, off)) == ctx.gap_color[j]) return std::nullopt;
            chosen[j] = arc_pos(arc, off);
        }
        i += run;
    }

    // Assemble the cycle: walk the initial cycle, splice the boundary path of
    // each gap, and merge dummy copies.
    std::vector<int> node_to_gap(ctx.f.node_count(), -1);
    for (int j = 0; j < g; ++j) node_to_gap[ctx.f.gap_nodes[j]] = j;

    std::vector<int> seq;
    const int L = ctx.f.node_count();
    for (int nd = 0; nd < L; ++nd) {
        const auto in_kind = ctx.f.edge_kind[(nd - 1 + L) % L];
        if (in_kind != InitialCycle::EdgeKind::Dummy) seq.push_back(ctx.f.node_vertex[nd]);
        if (ctx.f.edge_kind[nd] == InitialCycle::EdgeKind::Gap) {
            const int from = chosen[node_to_gap[nd]];
            const int to = chosen[node_to_gap[(nd + 1) % L]];
            int p = from;
            seq.push_back(dec.boundary[p]);
            while (p != to) {
                p = (p + 1) % m;
                seq.push_back(dec.boundary[p]);
            }
        }
    }
    if (static_cast<int>(seq.size()) != ps.size()) return std::nullopt;
    return seq;
}

std::optional<PlaneCycle> validated(const ColoredPointSet& ps,
                                    const std::optional<std::vector<int>>& seq) {
    if (!seq) return std::nullopt;
    auto check = validate_cycle(ps, *seq);
    if (!check.ok()) return std::nullopt;
    return check.cycle;
}

} // namespace

std::optional<PlaneCycle> try_build_from_selection(const ColoredPointSet& ps,
                                                   const ArcDecomposition& dec,
                                                   const InitialCycle& f, const ArcSelection& sel) {
    SelectionContext ctx(ps, dec, f, sel);
    for (int r = 0; r < ctx.g; ++r) {
        if (auto cycle = validated(ps, build_with_rotation(ctx, r))) return cycle;
    }
    return std::nullopt;
}

PlaneCycle construct_from_selection(const ColoredPointSet& ps, const ArcDecomposition& dec,
                                    const InitialCycle& f, const ArcSelection& sel) {
    const auto report = check_feasible(ps, dec, f, sel);
    if (!report.feasible)
        throw PreconditionError("selection is infeasible (condition " +
                                std::to_string(report.first_failed) + ": " + report.detail + ")");
    SelectionContext ctx(ps, dec, f, sel);
    auto cycle = validated(ps, build_with_rotation(ctx, report.rotation));
    if (!cycle)
        throw StructureError("feasible selection did not yield a valid Hamiltonian cycle");
    return *cycle;
}

// ---------------------------------------------------------------------------
// Decision
// ---------------------------------------------------------------------------

namespace {

// Arc assignments that satisfy the counterclockwise-interval ordering, each
// exactly once: anchored at descent position d, offsets are nondecreasing;
// the all-equal assignment is emitted for d = 0 only.
void enumerate_selections(int g, int A, const std::function<void(const std::vector<int>&)>& emit) {
    std::vector<int> offsets(g, 0);
    std::vector<int> assignment(g, 0);
    for (int d = 0; d < g; ++d) {
        for (int anchor = 0; anchor < A; ++anchor) {
            auto rec = [&](auto&& self, int i) -> void {
                if (i == g) {
                    if (d != 0 && offsets[g - 1] == 0) return;
                    for (int t = 0; t < g; ++t)
                        assignment[(d + t) % g] = (anchor + offsets[t]) % A;
                    emit(assignment);
                    return;
                }
                for (int o = offsets[i - 1]; o < A; ++o) {
                    offsets[i] = o;
                    self(self, i + 1);
                }
            };
            if (g == 1) {
                if (d == 0) {
                    assignment[0] = anchor;
                    emit(assignment);
                }
            } else {
                rec(rec, 1);
            }
        }
    }
}

struct SearchHit {
    long cycle_index;
    size_t selection_rank;
    InitialCycle f;
    ArcSelection sel;
};

} // namespace

HamiltonianDecision decide_hamiltonian(const ColoredPointSet& ps, bool construct, int workers) {
    require_balanced_bipartite(ps);
    HamiltonianDecision decision;
    if (ps.size() < 4) return decision;

    const auto split = hull_split(ps);
    const int k = static_cast<int>(split.interior.size());
    if (k <= 1) {
        auto cycle = near_convex_decision(ps);
        if (cycle) {
            decision.yes = true;
            if (construct) decision.cycle = cycle;
        }
        return decision;
    }

    const ArcDecomposition dec = compute_arcs(ps);
    if (dec.first_kind_count() > k) return decision;
    if (dec.arc_count() < 2) {
        std::cerr << "planecycles: fewer than two critical arcs (k=" << k
                  << "); falling back to exhaustive search\n";
        if (ps.size() > kOracleMaxVertices)
            throw StructureError("arc decomposition degenerate and the instance is too large "
                                 "for the exhaustive fallback");
        auto ham = brute_hamiltonian(ps);
        decision.yes = ham.has_value();
        if (construct && ham) decision.cycle = ham;
        return decision;
    }

    // Candidate selections per gap count, sorted so the reported witness is
    // the lexicographically first feasible one.
    std::vector<std::vector<std::vector<int>>> selections_by_g(2 * k + 1);
    auto selections_for = [&](int g) -> const std::vector<std::vector<int>>& {
        auto& cache = selections_by_g[g];
        if (cache.empty()) {
            enumerate_selections(g, dec.arc_count(),
                                 [&](const std::vector<int>& a) { cache.push_back(a); });
            std::sort(cache.begin(), cache.end());
            cache.erase(std::unique(cache.begin(), cache.end()), cache.end());
        }
        return cache;
    };

    auto scan_initial_cycle = [&](const InitialCycle& f) -> std::optional<SearchHit> {
        const auto& candidates = selections_for(f.gap_count());
        for (size_t rank = 0; rank < candidates.size(); ++rank) {
            ArcSelection sel{candidates[rank]};
            if (check_feasible(ps, dec, f, sel).feasible)
                return SearchHit{0, rank, f, std::move(sel)};
        }
        return std::nullopt;
    };

    std::optional<SearchHit> hit;
    if (workers <= 1) {
        long index = 0;
        enumerate_initial_cycles(ps, dec, [&](const InitialCycle& f) {
            auto h = scan_initial_cycle(f);
            ++index;
            if (h) {
                h->cycle_index = index;
                hit = std::move(h);
                return false;
            }
            return true;
        });
    } else {
        std::vector<InitialCycle> all = all_initial_cycles(ps, dec);
        // Warm the selection cache before sharing it read-only.
        for (const auto& f : all) selections_for(f.gap_count());
        std::atomic<long> best_index{static_cast<long>(all.size())};
        std::vector<std::optional<SearchHit>> hits(workers);
        std::vector<std::thread> threads;
        for (int w = 0; w < workers; ++w) {
            threads.emplace_back([&, w]() {
                for (long i = w; i < static_cast<long>(all.size()); i += workers) {
                    if (i > best_index.load()) continue;
                    auto h = scan_initial_cycle(all[i]);
                    if (h) {
                        h->cycle_index = i;
                        hits[w] = std::move(h);
                        long cur = best_index.load();
                        while (i < cur && !best_index.compare_exchange_weak(cur, i)) {}
                        break;
                    }
                }
            });
        }
        for (auto& t : threads) t.join();
        for (auto& h : hits) {
            if (h && (!hit || h->cycle_index < hit->cycle_index)) hit = std::move(h);
        }
    }

    if (!hit) return decision;
    decision.yes = true;
    if (construct) decision.cycle = construct_from_selection(ps, dec, hit->f, hit->sel);
    return decision;
}

} // namespace planecycles
