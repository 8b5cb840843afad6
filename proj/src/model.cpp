#include "planecycles/model.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace planecycles {

ColoredPointSet::ColoredPointSet(std::vector<Point> points, std::vector<int> colors)
    : points_(std::move(points)), colors_(std::move(colors)) {
    if (points_.size() != colors_.size()) {
        throw InvalidInstanceError("points and colors differ in length");
    }
    if (points_.size() < 2) {
        throw InvalidInstanceError("an instance needs at least two points");
    }
    const auto gp = validate_general_position(points_);
    if (!gp.ok) {
        throw InvalidInstanceError("general position violated: " + gp.describe());
    }
    int max_color = -1;
    for (int c : colors_) {
        if (c < 0) throw InvalidInstanceError("negative color id");
        max_color = std::max(max_color, c);
    }
    color_count_ = max_color + 1;
    if (color_count_ < 2) throw InvalidInstanceError("at least two colors are required");
    class_sizes_.assign(color_count_, 0);
    classes_.assign(color_count_, {});
    for (int i = 0; i < size(); ++i) {
        ++class_sizes_[colors_[i]];
        classes_[colors_[i]].push_back(i);
    }
    for (int c = 0; c < color_count_; ++c) {
        if (class_sizes_[c] == 0) {
            throw InvalidInstanceError("color " + std::to_string(c) + " has no points");
        }
    }
}

ColoredPointSet ColoredPointSet::restricted_to(std::span<const int> vertices,
                                               std::vector<int>* mapping) const {
    std::vector<int> verts(vertices.begin(), vertices.end());
    std::sort(verts.begin(), verts.end());
    std::vector<Point> pts;
    std::vector<int> cols;
    std::map<int, int> remap; // old color -> new color, order-preserving
    for (int v : verts) remap.emplace(colors_[v], 0);
    int next = 0;
    for (auto& [color, newc] : remap) newc = next++;
    for (int v : verts) {
        pts.push_back(points_[v]);
        cols.push_back(remap.at(colors_[v]));
    }
    if (mapping) *mapping = verts;
    return ColoredPointSet(std::move(pts), std::move(cols));
}

std::vector<int> canonical_cycle(std::span<const int> vertices) {
    const int t = static_cast<int>(vertices.size());
    std::vector<int> best;
    std::vector<int> cur(t);
    const int start = static_cast<int>(std::min_element(vertices.begin(), vertices.end()) -
                                       vertices.begin());
    for (int dir : {1, -1}) {
        for (int i = 0; i < t; ++i) cur[i] = vertices[((start + dir * i) % t + t) % t];
        if (best.empty() || cur < best) best = cur;
    }
    return best;
}

CycleCheck validate_cycle(const ColoredPointSet& ps, std::span<const int> cycle) {
    CycleCheck result;
    const int t = static_cast<int>(cycle.size());

    for (int v : cycle) {
        if (v < 0 || v >= ps.size()) {
            result.violation = {CycleViolationKind::IndexOutOfRange,
                                {v},
                                "vertex index " + std::to_string(v) + " out of range"};
            return result;
        }
    }
    {
        std::vector<int> sorted(cycle.begin(), cycle.end());
        std::sort(sorted.begin(), sorted.end());
        for (int i = 0; i + 1 < t; ++i) {
            if (sorted[i] == sorted[i + 1]) {
                result.violation = {CycleViolationKind::RepeatedVertex,
                                    {sorted[i]},
                                    "vertex " + std::to_string(sorted[i]) + " repeated"};
                return result;
            }
        }
    }
    if (t < 3) {
        result.violation = {CycleViolationKind::TooShort, {},
                            "cycle has " + std::to_string(t) + " vertices, need at least 3"};
        return result;
    }
    for (int i = 0; i < t; ++i) {
        const int a = cycle[i], b = cycle[(i + 1) % t];
        if (!ps.is_host_edge(a, b)) {
            result.violation = {CycleViolationKind::MonochromaticEdge,
                                {a, b},
                                "edge " + std::to_string(a) + "-" + std::to_string(b) +
                                    " is monochromatic"};
            return result;
        }
    }
    for (int i = 0; i < t; ++i) {
        for (int j = i + 1; j < t; ++j) {
            // Adjacent edges share an endpoint and cannot properly cross.
            if (j == i + 1 || (i == 0 && j == t - 1)) continue;
            const int a = cycle[i], b = cycle[(i + 1) % t];
            const int c = cycle[j], d = cycle[(j + 1) % t];
            if (segments_cross(ps.point(a), ps.point(b), ps.point(c), ps.point(d))) {
                result.violation = {CycleViolationKind::CrossingEdges,
                                    {a, b, c, d},
                                    "edges " + std::to_string(a) + "-" + std::to_string(b) + " and " +
                                        std::to_string(c) + "-" + std::to_string(d) + " cross"};
                return result;
            }
        }
    }
    result.cycle = PlaneCycle{canonical_cycle(cycle)};
    return result;
}

CycleColorProfile color_profile(const ColoredPointSet& ps, const PlaneCycle& cycle) {
    std::map<int, int> counts;
    for (int v : cycle.vertices) ++counts[ps.color(v)];
    CycleColorProfile profile;
    for (auto [color, count] : counts) {
        if (count >= 2) {
            profile.rainbow = false;
            profile.repeated_colors.emplace_back(color, count);
        }
    }
    return profile;
}

ColoredPointSet parse_instance(std::istream& in) {
    std::vector<Point> pts;
    std::vector<int> cols;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        long long x, y;
        int c;
        if (!(ls >> x >> y >> c)) {
            throw ParseError(lineno, "expected `x y color`, got \"" + line + "\"");
        }
        std::string rest;
        if (ls >> rest) {
            throw ParseError(lineno, "trailing content \"" + rest + "\"");
        }
        Point p{x, y};
        try {
            check_coord_range(p);
        } catch (const CoordinateRangeError& e) {
            throw ParseError(lineno, e.what());
        }
        if (c < 0) throw ParseError(lineno, "negative color id");
        pts.push_back(p);
        cols.push_back(c);
    }
    return ColoredPointSet(std::move(pts), std::move(cols));
}

ColoredPointSet parse_instance_text(const std::string& text) {
    std::istringstream in(text);
    return parse_instance(in);
}

void write_instance(std::ostream& out, const ColoredPointSet& ps) {
    for (int i = 0; i < ps.size(); ++i) {
        out << ps.point(i).x << ' ' << ps.point(i).y << ' ' << ps.color(i) << '\n';
    }
}

std::string instance_text(const ColoredPointSet& ps) {
    std::ostringstream out;
    write_instance(out, ps);
    return out.str();
}

std::vector<std::vector<int>> parse_cycles(std::istream& in) {
    std::vector<std::vector<int>> cycles;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::vector<int> cycle;
        int v;
        while (ls >> v) cycle.push_back(v);
        if (!ls.eof()) throw ParseError(lineno, "expected space-separated vertex indices");
        if (!cycle.empty()) cycles.push_back(std::move(cycle));
    }
    return cycles;
}

void write_cycles(std::ostream& out, std::span<const PlaneCycle> cycles) {
    for (const PlaneCycle& c : cycles) {
        for (int i = 0; i < c.length(); ++i) {
            if (i) out << ' ';
            out << c.vertices[i];
        }
        out << '\n';
    }
}

} // namespace planecycles
