#include "planecycles/rainbow.hpp"

#include <algorithm>
#include <array>

namespace planecycles {

namespace {

bool separated_by_line(const ColoredPointSet& ps, int u, int u2, int v, int v2) {
    const int s1 = orient_sign(ps.point(u), ps.point(u2), ps.point(v));
    const int s2 = orient_sign(ps.point(u), ps.point(u2), ps.point(v2));
    return s1 * s2 < 0;
}

std::optional<ConfigurationWitness> find_c1(const ColoredPointSet& ps) {
    const int n = ps.size();
    for (int u = 0; u < n; ++u)
        for (int u2 = u + 1; u2 < n; ++u2) {
            if (ps.color(u) != ps.color(u2)) continue;
            for (int v = 0; v < n; ++v) {
                if (ps.color(v) == ps.color(u)) continue;
                for (int v2 = v + 1; v2 < n; ++v2) {
                    if (ps.color(v2) != ps.color(v)) continue;
                    if (separated_by_line(ps, u, u2, v, v2))
                        return ConfigurationWitness{ConfigKind::C1, u, u2, v, v2};
                }
            }
        }
    return std::nullopt;
}

std::optional<ConfigurationWitness> find_c2(const ColoredPointSet& ps) {
    const int n = ps.size();
    for (int u = 0; u < n; ++u)
        for (int u2 = u + 1; u2 < n; ++u2) {
            if (ps.color(u) != ps.color(u2)) continue;
            for (int v = 0; v < n; ++v) {
                if (ps.color(v) == ps.color(u)) continue;
                for (int v2 = v + 1; v2 < n; ++v2) {
                    if (ps.color(v2) == ps.color(u) || ps.color(v2) == ps.color(v)) continue;
                    if (separated_by_line(ps, u, u2, v, v2))
                        return ConfigurationWitness{ConfigKind::C2, u, u2, v, v2};
                }
            }
        }
    return std::nullopt;
}

std::optional<ConfigurationWitness> find_c3(const ColoredPointSet& ps) {
    const int n = ps.size();
    for (int u = 0; u < n; ++u)
        for (int u2 = u + 1; u2 < n; ++u2) {
            if (ps.color(u) == ps.color(u2)) continue;
            for (int v = 0; v < n; ++v) {
                if (ps.color(v) == ps.color(u) || ps.color(v) == ps.color(u2)) continue;
                for (int v2 = v + 1; v2 < n; ++v2) {
                    if (ps.color(v2) != ps.color(v)) continue;
                    if (separated_by_line(ps, u, u2, v, v2))
                        return ConfigurationWitness{ConfigKind::C3, u, u2, v, v2};
                }
            }
        }
    return std::nullopt;
}

bool convex_quad_with_interior(const ColoredPointSet& ps, int a, int b, int c, int d, int w) {
    const std::array<int, 4> quad = {a, b, c, d};
    std::array<Point, 4> pts;
    for (int i = 0; i < 4; ++i) pts[i] = ps.point(quad[i]);
    const auto hull = convex_hull(pts);
    if (hull.size() != 4) return false;
    std::array<Point, 4> poly;
    for (int i = 0; i < 4; ++i) poly[i] = pts[hull[i]];
    return point_in_convex_polygon_strict(poly, ps.point(w));
}

std::optional<ConfigurationWitness> find_c4(const ColoredPointSet& ps) {
    if (ps.color_count() < 4) return std::nullopt;
    const int n = ps.size();
    for (int u = 0; u < n; ++u)
        for (int u2 = u + 1; u2 < n; ++u2) {
            if (ps.color(u) != ps.color(u2)) continue;
            for (int v = 0; v < n; ++v) {
                if (ps.color(v) == ps.color(u)) continue;
                for (int v2 = v + 1; v2 < n; ++v2) {
                    if (ps.color(v2) == ps.color(u) || ps.color(v2) == ps.color(v)) continue;
                    for (int w = 0; w < n; ++w) {
                        if (ps.color(w) == ps.color(u) || ps.color(w) == ps.color(v) ||
                            ps.color(w) == ps.color(v2))
                            continue;
                        if (convex_quad_with_interior(ps, u, u2, v, v2, w))
                            return ConfigurationWitness{ConfigKind::C4, u, u2, v, v2, w};
                    }
                }
            }
        }
    return std::nullopt;
}

} // namespace

std::string to_string(ConfigKind kind) {
    switch (kind) {
        case ConfigKind::C1: return "C1";
        case ConfigKind::C2: return "C2";
        case ConfigKind::C3: return "C3";
        case ConfigKind::C4: return "C4";
    }
    return "?";
}

std::optional<ConfigurationWitness> find_configuration(const ColoredPointSet& ps) {
    if (auto w = find_c1(ps)) return w;
    if (auto w = find_c2(ps)) return w;
    if (auto w = find_c3(ps)) return w;
    if (auto w = find_c4(ps)) return w;
    return std::nullopt;
}

PlaneCycle witness_cycle(const ColoredPointSet& ps, const ConfigurationWitness& witness) {
    const int u = witness.u, u2 = witness.u_prime, v = witness.v, v2 = witness.v_prime;
    auto invalid = [&](const std::string& why) {
        return PreconditionError("invalid " + to_string(witness.kind) + " witness: " + why);
    };

    if (witness.kind != ConfigKind::C4) {
        const bool same_u = ps.color(u) == ps.color(u2);
        const bool same_v = ps.color(v) == ps.color(v2);
        switch (witness.kind) {
            case ConfigKind::C1:
                if (!same_u || !same_v || ps.color(u) == ps.color(v)) throw invalid("colors");
                break;
            case ConfigKind::C2:
                if (!same_u || same_v || ps.color(v) == ps.color(u) || ps.color(v2) == ps.color(u))
                    throw invalid("colors");
                break;
            case ConfigKind::C3:
                if (same_u || !same_v || ps.color(v) == ps.color(u) || ps.color(v) == ps.color(u2))
                    throw invalid("colors");
                break;
            default: break;
        }
        if (!separated_by_line(ps, u, u2, v, v2)) throw invalid("v and v' not separated");
        // With v and v' on opposite sides of line uu', the 4-cycle u-v-u'-v'
        // is always plane.
        auto check = validate_cycle(ps, std::array<int, 4>{u, v, u2, v2});
        if (!check.ok()) throw StructureError("witness 4-cycle failed validation: " +
                                              check.violation->message);
        return *check.cycle;
    }

    const int w = witness.w;
    if (ps.color(u) != ps.color(u2)) throw invalid("u and u' colors differ");
    if (!convex_quad_with_interior(ps, u, u2, v, v2, w)) throw invalid("not a convex quad with w inside");
    const std::array<int, 4> quad = {u, u2, v, v2};
    std::array<Point, 4> pts;
    for (int i = 0; i < 4; ++i) pts[i] = ps.point(quad[i]);
    const auto hull = convex_hull(pts);
    std::array<int, 4> order;
    for (int i = 0; i < 4; ++i) order[i] = quad[hull[i]];
    int pos_u = -1;
    for (int i = 0; i < 4; ++i)
        if (order[i] == u) pos_u = i;
    std::vector<int> cycle;
    if (order[(pos_u + 2) % 4] == u2) {
        // u and u' opposite: the hull 4-cycle alternates away from the
        // monochromatic pair.
        cycle.assign(order.begin(), order.end());
    } else {
        // u and u' adjacent: splice w between them along the hull.
        for (int i = 0; i < 4; ++i) {
            cycle.push_back(order[i]);
            if ((order[i] == u && order[(i + 1) % 4] == u2) ||
                (order[i] == u2 && order[(i + 1) % 4] == u))
                cycle.push_back(w);
        }
    }
    auto check = validate_cycle(ps, cycle);
    if (!check.ok()) throw StructureError("C4 witness cycle failed validation: " +
                                          check.violation->message);
    return *check.cycle;
}

bool has_nonrainbow_plane_cycle(const ColoredPointSet& ps) {
    return find_configuration(ps).has_value();
}

} // namespace planecycles
