#ifndef PLANECYCLES_GENERATE_HPP
#define PLANECYCLES_GENERATE_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "planecycles/model.hpp"

namespace planecycles {

enum class GenKind {
    Random,
    ConvexAlternating,
    Nested,
    ZoneRing,
    ZoneRingPaired,
    RingWithInterior,
    Fig1LeftLike,
    Fig1MiddleLike,
    Fig1RightLike,
};

std::string kind_name(GenKind kind);
std::optional<GenKind> kind_from_name(const std::string& name);

// A fixed GenSpec always produces the same instance.  The meaning of `n`
// depends on the kind: total point count for `random`, per-color (or
// per-cluster) count otherwise.
struct GenSpec {
    GenKind kind = GenKind::Random;
    int n = 0;
    int color_count = 2;
    std::uint64_t seed = 0;
    Coord range = 1000;
    int interior = 0; // ring_with_interior only

    std::string describe() const;
};

class GenerationError : public Error {
public:
    explicit GenerationError(const std::string& msg) : Error(msg) {}
};

ColoredPointSet generate(const GenSpec& spec);

// Test-support generator: a random simple polygon on t points in general
// position, returned as an instance plus the polygon cycle.  `colors = 0`
// colors the cycle with the minimal valid pattern (alternating, plus one
// extra color when t is odd); `colors >= 2` draws a random valid
// non-rainbow coloring with that many colors.
struct PolygonInstance {
    ColoredPointSet ps;
    PlaneCycle cycle;
};
PolygonInstance generate_simple_polygon(std::uint64_t seed, int t, int colors = 0);

// Deterministic generator internals shared with the test suites.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next();
    std::uint64_t below(std::uint64_t bound); // uniform in [0, bound)
    Coord coord(Coord lo, Coord hi);          // uniform in [lo, hi]
};

} // namespace planecycles

#endif
