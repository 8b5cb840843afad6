#ifndef PLANECYCLES_MODEL_HPP
#define PLANECYCLES_MODEL_HPP

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "planecycles/geometry.hpp"

namespace planecycles {

class ParseError : public Error {
public:
    ParseError(int line, const std::string& msg)
        : Error("line " + std::to_string(line) + ": " + msg), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

class InvalidInstanceError : public Error {
public:
    explicit InvalidInstanceError(const std::string& msg) : Error(msg) {}
};

// Colored points in general position.  The host graph is the complete
// multipartite graph on the colors: uv is an edge iff colors differ.  It is
// never materialized.
class ColoredPointSet {
public:
    ColoredPointSet(std::vector<Point> points, std::vector<int> colors);

    int size() const { return static_cast<int>(points_.size()); }
    const std::vector<Point>& points() const { return points_; }
    const Point& point(int i) const { return points_[i]; }
    int color(int i) const { return colors_[i]; }
    const std::vector<int>& colors() const { return colors_; }
    int color_count() const { return color_count_; }
    int class_size(int color) const { return class_sizes_[color]; }
    const std::vector<int>& class_of(int color) const { return classes_[color]; }

    bool is_host_edge(int i, int j) const { return colors_[i] != colors_[j]; }

    // New instance restricted to the given vertices; mapping maps new
    // indices back to the original ones.
    ColoredPointSet restricted_to(std::span<const int> vertices, std::vector<int>* mapping) const;

private:
    std::vector<Point> points_;
    std::vector<int> colors_;
    int color_count_ = 0;
    std::vector<int> class_sizes_;
    std::vector<std::vector<int>> classes_;
};

// A validated plane cycle, stored in canonical form: smallest vertex first,
// lexicographically smaller direction.
struct PlaneCycle {
    std::vector<int> vertices;

    int length() const { return static_cast<int>(vertices.size()); }
    friend bool operator==(const PlaneCycle&, const PlaneCycle&) = default;
    friend auto operator<=>(const PlaneCycle&, const PlaneCycle&) = default;
};

std::vector<int> canonical_cycle(std::span<const int> vertices);

struct CycleColorProfile {
    bool rainbow = true;
    // color -> multiplicity, for colors occurring at least twice.
    std::vector<std::pair<int, int>> repeated_colors;
};

enum class CycleViolationKind {
    IndexOutOfRange,
    RepeatedVertex,
    TooShort,
    MonochromaticEdge,
    CrossingEdges,
};

struct CycleViolation {
    CycleViolationKind kind;
    std::vector<int> witness;
    std::string message;
};

struct CycleCheck {
    std::optional<PlaneCycle> cycle;
    std::optional<CycleViolation> violation;

    bool ok() const { return cycle.has_value(); }
};

// Checks, in order: indices in range, distinctness, length >= 3, bicolored
// consecutive pairs, no crossing among non-adjacent edges.
CycleCheck validate_cycle(const ColoredPointSet& ps, std::span<const int> cycle);

CycleColorProfile color_profile(const ColoredPointSet& ps, const PlaneCycle& cycle);

// Instance file: one `x y color` line per point, `#` comments allowed.
ColoredPointSet parse_instance(std::istream& in);
ColoredPointSet parse_instance_text(const std::string& text);
void write_instance(std::ostream& out, const ColoredPointSet& ps);
std::string instance_text(const ColoredPointSet& ps);

// Cycle file: one cycle per line, space-separated canonical vertex indices.
std::vector<std::vector<int>> parse_cycles(std::istream& in);
void write_cycles(std::ostream& out, std::span<const PlaneCycle> cycles);

} // namespace planecycles

#endif
