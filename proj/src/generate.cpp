#include "planecycles/generate.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "planecycles/oracle.hpp"
#include "planecycles/rainbow.hpp"
#include "planecycles/nested.hpp"

namespace planecycles {

std::uint64_t SplitMix64::next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
    // Rejection keeps the draw unbiased and the stream platform-independent.
    const std::uint64_t limit = bound * ((~0ULL) / bound);
    std::uint64_t v;
    do {
        v = next();
    } while (v >= limit);
    return v % bound;
}

Coord SplitMix64::coord(Coord lo, Coord hi) {
    return lo + static_cast<Coord>(below(static_cast<std::uint64_t>(hi - lo + 1)));
}

std::string kind_name(GenKind kind) {
    switch (kind) {
        case GenKind::Random: return "random";
        case GenKind::ConvexAlternating: return "convex_alternating";
        case GenKind::Nested: return "nested";
        case GenKind::ZoneRing: return "zone_ring";
        case GenKind::ZoneRingPaired: return "zone_ring_paired";
        case GenKind::RingWithInterior: return "ring_with_interior";
        case GenKind::Fig1LeftLike: return "fig1_left_like";
        case GenKind::Fig1MiddleLike: return "fig1_middle_like";
        case GenKind::Fig1RightLike: return "fig1_right_like";
    }
    return "?";
}

std::optional<GenKind> kind_from_name(const std::string& name) {
    for (GenKind kind : {GenKind::Random, GenKind::ConvexAlternating, GenKind::Nested,
                         GenKind::ZoneRing, GenKind::ZoneRingPaired, GenKind::RingWithInterior,
                         GenKind::Fig1LeftLike, GenKind::Fig1MiddleLike, GenKind::Fig1RightLike}) {
        if (kind_name(kind) == name) return kind;
    }
    return std::nullopt;
}

std::string GenSpec::describe() const {
    std::string s = kind_name(kind) + " n=" + std::to_string(n) + " colors=" +
                    std::to_string(color_count) + " seed=" + std::to_string(seed) +
                    " range=" + std::to_string(range);
    if (kind == GenKind::RingWithInterior) s += " interior=" + std::to_string(interior);
    return s;
}

namespace {

bool collinear_with_any_pair(const std::vector<Point>& pts, Point cand) {
    for (size_t i = 0; i < pts.size(); ++i) {
        if (pts[i] == cand) return true;
        for (size_t j = i + 1; j < pts.size(); ++j)
            if (orient_sign(pts[i], pts[j], cand) == 0) return true;
    }
    return false;
}

constexpr int kBudget = 4096;

ColoredPointSet gen_random(const GenSpec& spec) {
    if (spec.n < spec.color_count || spec.color_count < 2)
        throw GenerationError("random generation needs n >= colors >= 2");
    if (spec.range < 4) throw GenerationError("coordinate range too small");
    SplitMix64 rng(spec.seed ^ 0x522fe5cd69377e95ULL);
    std::vector<Point> pts;
    int attempts = 0;
    while (static_cast<int>(pts.size()) < spec.n) {
        if (++attempts > kBudget * spec.n)
            throw GenerationError("rejection-sampling budget exhausted");
        Point cand{rng.coord(-spec.range, spec.range), rng.coord(-spec.range, spec.range)};
        if (collinear_with_any_pair(pts, cand)) continue;
        pts.push_back(cand);
    }
    std::vector<int> colors(spec.n);
    for (int i = 0; i < spec.n; ++i)
        colors[i] = i < spec.color_count ? i : static_cast<int>(rng.below(spec.color_count));
    return ColoredPointSet(std::move(pts), std::move(colors));
}

// Integer points on a circle, verified to be in strictly convex position.
std::vector<Point> circle_ring(int count, Coord radius, std::uint64_t phase_seed) {
    if (count < 3) throw GenerationError("a ring needs at least 3 points");
    const long double tau = 2.0L * 3.14159265358979323846264338327950288L;
    const long double phase = tau * static_cast<long double>(phase_seed % 8192) / 8192.0L;
    for (int attempt = 0; attempt < 24; ++attempt) {
        std::vector<Point> ring;
        for (int i = 0; i < count; ++i) {
            const long double a = phase + tau * i / count;
            ring.push_back(Point{static_cast<Coord>(llroundl(radius * cosl(a))),
                                 static_cast<Coord>(llroundl(radius * sinl(a)))});
        }
        const auto hull = convex_hull(ring);
        if (static_cast<int>(hull.size()) == count && validate_general_position(ring).ok)
            return ring;
        radius = radius * 2;
        if (radius > kCoordLimit / 2) break;
    }
    throw GenerationError("could not place " + std::to_string(count) + " points on a convex ring");
}

ColoredPointSet gen_convex_alternating(const GenSpec& spec) {
    if (spec.n < 2 || spec.color_count < 2)
        throw GenerationError("convex_alternating needs n >= 2 per color and >= 2 colors");
    const int total = spec.n * spec.color_count;
    const Coord radius = std::max<Coord>(spec.range, 64L * total);
    auto ring = circle_ring(total, radius, spec.seed);
    std::vector<int> colors(total);
    for (int i = 0; i < total; ++i) colors[i] = i % spec.color_count;
    return ColoredPointSet(std::move(ring), std::move(colors));
}

ColoredPointSet gen_nested(const GenSpec& spec) {
    if (spec.n < 3) throw GenerationError("nested needs n >= 3 per color");
    const Coord radius = std::max<Coord>(spec.range, 64L * spec.n);
    for (int attempt = 0; attempt < kBudget; ++attempt) {
        SplitMix64 rng(spec.seed + 0x9e00000000ULL * attempt);
        auto ring = circle_ring(spec.n, radius, spec.seed ^ attempt);
        std::vector<Point> pts = ring;
        const Coord inner = radius / 2;
        bool ok = true;
        for (int r = 0; r < spec.n && ok; ++r) {
            bool placed = false;
            for (int tries = 0; tries < kBudget; ++tries) {
                Point cand{rng.coord(-inner, inner), rng.coord(-inner, inner)};
                if (cand.x * cand.x + cand.y * cand.y >= inner * inner) continue;
                if (collinear_with_any_pair(pts, cand)) continue;
                if (!point_in_convex_polygon_strict(ring, cand)) continue;
                pts.push_back(cand);
                placed = true;
                break;
            }
            ok = placed;
        }
        if (!ok) continue;
        std::vector<int> colors(2 * spec.n, kRedColor);
        for (int i = 0; i < spec.n; ++i) colors[i] = kBlueColor;
        ColoredPointSet ps(std::move(pts), std::move(colors));
        validate_nested(ps, ps.class_of(kBlueColor)); // asserts the family postcondition
        return ps;
    }
    throw GenerationError("rejection-sampling budget exhausted for nested instance");
}

bool in_zone(const std::vector<Point>& ring, int i, Point cand) {
    const int k = static_cast<int>(ring.size());
    const Point a = ring[(i - 2 + k) % k], b = ring[(i - 1 + k) % k], c = ring[i],
                d = ring[(i + 1) % k];
    // zone z_i: inside both (b, c, d) = t_i and (a, b, c) = t_{i-1}.
    return point_in_triangle_strict(b, c, d, cand) && point_in_triangle_strict(a, b, c, cand);
}

// One or two reds tucked inside edge (b_{i-1}, b_i), inside the edge-zone.
std::vector<Point> zone_candidates(const std::vector<Point>& ring, int i, int want,
                                   std::uint64_t seed) {
    const int k = static_cast<int>(ring.size());
    const Point a = ring[(i - 1 + k) % k], b = ring[i];
    const Point mid{(a.x + b.x) / 2, (a.y + b.y) / 2};
    const Point edge{b.x - a.x, b.y - a.y};
    SplitMix64 rng(seed);
    for (int attempt = 0; attempt < kBudget; ++attempt) {
        const Coord pull = 1 + static_cast<Coord>(rng.below(24));
        const Coord spread = 2 + static_cast<Coord>(rng.below(12));
        std::vector<Point> cands;
        for (int s = 0; s < want; ++s) {
            const Coord dir = want == 1 ? 0 : (s == 0 ? -1 : 1);
            Point cand{mid.x - mid.x * pull / 256 + dir * edge.x / (spread * 8),
                       mid.y - mid.y * pull / 256 + dir * edge.y / (spread * 8)};
            cands.push_back(cand);
        }
        bool ok = true;
        for (const Point& cand : cands)
            if (!in_zone(ring, i, cand)) ok = false;
        if (want == 2 && cands[0] == cands[1]) ok = false;
        if (ok) return cands;
    }
    throw GenerationError("could not place reds inside an edge-zone");
}

ColoredPointSet gen_zone_ring(const GenSpec& spec, bool paired) {
    const int k = spec.n;
    if (k < 3 || (paired && (k < 4 || k % 2 != 0)))
        throw GenerationError(paired ? "zone_ring_paired needs an even n >= 4"
                                     : "zone_ring needs n >= 3");
    const Coord radius = std::max<Coord>(spec.range, 256L * k);
    for (int attempt = 0; attempt < 64; ++attempt) {
        auto ring = circle_ring(k, radius, spec.seed + attempt);
        std::vector<Point> pts = ring;
        bool ok = true;
        for (int i = 0; i < k && ok; ++i) {
            const bool occupied = paired ? (i % 2 == 0) : true;
            if (!occupied) continue;
            try {
                auto cands = zone_candidates(ring, i, paired ? 2 : 1,
                                             spec.seed * 1315423911ULL + i + attempt);
                for (const Point& cand : cands) {
                    if (collinear_with_any_pair(pts, cand)) ok = false;
                    pts.push_back(cand);
                }
            } catch (const GenerationError&) {
                ok = false;
            }
        }
        if (!ok) continue;
        std::vector<int> colors(pts.size(), kRedColor);
        for (int i = 0; i < k; ++i) colors[i] = kBlueColor;
        try {
            ColoredPointSet ps(std::move(pts), std::move(colors));
            validate_nested(ps, ps.class_of(kBlueColor));
            return ps;
        } catch (const Error&) {
            continue;
        }
    }
    throw GenerationError("rejection-sampling budget exhausted for zone ring");
}

ColoredPointSet gen_ring_with_interior(const GenSpec& spec) {
    const int k = spec.interior;
    const int boundary = 2 * spec.n - k;
    if (spec.n < 2 || k < 0 || boundary < 3)
        throw GenerationError("ring_with_interior needs n >= 2 and 2n - interior >= 3");
    const Coord radius = std::max<Coord>(spec.range, 64L * boundary);
    for (int attempt = 0; attempt < kBudget; ++attempt) {
        SplitMix64 rng(spec.seed + 0x51a2b3c400ULL * attempt);
        auto ring = circle_ring(boundary, radius, spec.seed ^ (attempt * 17));
        std::vector<Point> pts = ring;
        const Coord inner = radius / 3;
        bool ok = true;
        for (int r = 0; r < k && ok; ++r) {
            bool placed = false;
            for (int tries = 0; tries < kBudget; ++tries) {
                Point cand{rng.coord(-inner, inner), rng.coord(-inner, inner)};
                if (collinear_with_any_pair(pts, cand)) continue;
                if (!point_in_convex_polygon_strict(ring, cand)) continue;
                pts.push_back(cand);
                placed = true;
                break;
            }
            ok = placed;
        }
        if (!ok) continue;
        std::vector<int> colors(pts.size());
        for (int i = 0; i < boundary; ++i) colors[i] = i % 2;
        // The boundary alternation fixes ceil(B/2) zeros; the interior colors
        // restore the balance, in seeded order.
        std::vector<int> interior_colors;
        const int zeros_needed = spec.n - (boundary + 1) / 2;
        for (int i = 0; i < k; ++i) interior_colors.push_back(i < zeros_needed ? 0 : 1);
        for (int i = k - 1; i > 0; --i)
            std::swap(interior_colors[i], interior_colors[rng.below(i + 1)]);
        for (int i = 0; i < k; ++i) colors[boundary + i] = interior_colors[i];
        return ColoredPointSet(std::move(pts), std::move(colors));
    }
    throw GenerationError("rejection-sampling budget exhausted for ring_with_interior");
}

ColoredPointSet gen_fig1_left(const GenSpec& spec) {
    if (spec.n < 3) throw GenerationError("fig1_left_like needs n >= 3 per color");
    const int n = spec.n;
    for (int attempt = 0; attempt < kBudget; ++attempt) {
        SplitMix64 rng(spec.seed + 0xf1e00000ULL * attempt);
        std::vector<Coord> xs_r, xs_b;
        Coord x = 0;
        for (int i = 0; i < n; ++i) {
            x += 4 + static_cast<Coord>(rng.below(5));
            xs_r.push_back(x);
        }
        x = 1;
        for (int i = 0; i < n; ++i) {
            x += 4 + static_cast<Coord>(rng.below(5));
            xs_b.push_back(x);
        }
        const Coord w_r = xs_r.front() + xs_r.back();
        const Coord w_b = xs_b.front() + xs_b.back();
        Coord spread = 0;
        for (Coord v : xs_r) spread = std::max(spread, std::abs(2 * v - w_r));
        for (Coord v : xs_b) spread = std::max(spread, std::abs(2 * v - w_b));
        const Coord height = 8 * spread * spread + 64;
        std::vector<Point> pts;
        std::vector<int> colors;
        // Reds on a concave-down arc, blues on a convex-up arc far above: no
        // two same-colored vertices have a line separating an opposite pair.
        for (Coord v : xs_r) {
            pts.push_back(Point{v, -(2 * v - w_r) * (2 * v - w_r)});
            colors.push_back(kRedColor);
        }
        for (Coord v : xs_b) {
            pts.push_back(Point{v, height + (2 * v - w_b) * (2 * v - w_b)});
            colors.push_back(kBlueColor);
        }
        if (!validate_general_position(pts).ok) continue;
        ColoredPointSet ps(std::move(pts), std::move(colors));
        if (find_configuration(ps)) continue;
        return ps;
    }
    throw GenerationError("budget exhausted for fig1_left_like");
}

ColoredPointSet gen_fig1_middle(const GenSpec& spec) {
    if (spec.n != 5 && spec.n != 0)
        throw GenerationError("fig1_middle_like is a fixed 5+5 family (use n=5)");
    // Convex decagon with two monochromatic boundary adjacencies: no plane
    // 10-cycle, while even lengths up to 8 survive.
    const std::vector<int> pattern = {0, 0, 1, 1, 0, 1, 0, 1, 0, 1};
    const Coord radius = std::max<Coord>(spec.range, 640);
    for (int attempt = 0; attempt < 64; ++attempt) {
        auto ring = circle_ring(10, radius, spec.seed + attempt);
        ColoredPointSet ps(std::move(ring), pattern);
        const auto inv = enumerate_plane_cycles(ps, 10);
        if (inv.has_length(4) && inv.has_length(6) && inv.has_length(8) && !inv.has_length(10))
            return ps;
    }
    throw GenerationError("budget exhausted for fig1_middle_like");
}

ColoredPointSet gen_fig1_right(const GenSpec& spec) {
    if (spec.color_count < 3 || spec.n < 1)
        throw GenerationError("fig1_right_like needs >= 3 colors");
    const int c = spec.color_count, per = spec.n;
    const long double tau = 2.0L * 3.14159265358979323846264338327950288L;
    Coord radius = std::max<Coord>(spec.range, 4096L * c * per);
    for (int attempt = 0; attempt < 24; ++attempt) {
        std::vector<Point> pts;
        std::vector<int> colors;
        // Tight same-colored clusters of consecutive circle points: every
        // line through a monochromatic pair leaves the rest on one side, and
        // convex position rules out interior points.
        for (int j = 0; j < c; ++j) {
            const long double base = tau * j / c + tau * (spec.seed % 512) / 4096.0L;
            for (int i = 0; i < per; ++i) {
                const long double a = base + tau * i / (64.0L * per * c);
                pts.push_back(Point{static_cast<Coord>(llroundl(radius * cosl(a))),
                                    static_cast<Coord>(llroundl(radius * sinl(a)))});
                colors.push_back(j);
            }
        }
        if (!validate_general_position(pts).ok ||
            convex_hull(pts).size() != pts.size()) {
            radius *= 2;
            if (radius > kCoordLimit / 2) break;
            continue;
        }
        ColoredPointSet ps(std::move(pts), std::move(colors));
        if (find_configuration(ps)) { radius *= 2; continue; }
        return ps;
    }
    throw GenerationError("budget exhausted for fig1_right_like");
}

} // namespace

ColoredPointSet generate(const GenSpec& spec) {
    switch (spec.kind) {
        case GenKind::Random: return gen_random(spec);
        case GenKind::ConvexAlternating: return gen_convex_alternating(spec);
        case GenKind::Nested: return gen_nested(spec);
        case GenKind::ZoneRing: return gen_zone_ring(spec, false);
        case GenKind::ZoneRingPaired: return gen_zone_ring(spec, true);
        case GenKind::RingWithInterior: return gen_ring_with_interior(spec);
        case GenKind::Fig1LeftLike: return gen_fig1_left(spec);
        case GenKind::Fig1MiddleLike: return gen_fig1_middle(spec);
        case GenKind::Fig1RightLike: return gen_fig1_right(spec);
    }
    throw GenerationError("unknown generator kind");
}

namespace {

std::vector<int> polygon_colors(SplitMix64& rng, int t, int colors) {
    std::vector<int> pattern(t);
    if (colors <= 0) {
        for (int i = 0; i < t; ++i) pattern[i] = i % 2;
        if (t % 2 == 1) pattern[t - 1] = 2;
        return pattern;
    }
    if (colors < 2) throw GenerationError("polygon coloring needs >= 2 colors");
    for (int attempt = 0; attempt < kBudget; ++attempt) {
        bool ok = true;
        std::map<int, int> counts;
        for (int i = 0; i < t; ++i) {
            pattern[i] = static_cast<int>(rng.below(colors));
            if (i > 0 && pattern[i] == pattern[i - 1]) ok = false;
            ++counts[pattern[i]];
        }
        if (pattern[0] == pattern[t - 1]) ok = false;
        bool repeated = false;
        for (auto [c, cnt] : counts) repeated |= cnt >= 2;
        if (ok && repeated) return pattern;
    }
    throw GenerationError("could not draw a valid non-rainbow coloring");
}

} // namespace

PolygonInstance generate_simple_polygon(std::uint64_t seed, int t, int colors) {
    if (t < 3) throw GenerationError("a polygon needs at least 3 vertices");
    SplitMix64 rng(seed ^ 0xb0147a2ad34cf0b1ULL);
    const Coord range = 40 * t;
    for (int attempt = 0; attempt < kBudget; ++attempt) {
        std::vector<Point> pts;
        bool filled = true;
        for (int i = 0; i < t && filled; ++i) {
            bool placed = false;
            for (int tries = 0; tries < kBudget; ++tries) {
                Point cand{rng.coord(-range, range), rng.coord(-range, range)};
                if (collinear_with_any_pair(pts, cand)) continue;
                pts.push_back(cand);
                placed = true;
                break;
            }
            filled = placed;
        }
        if (!filled) continue;

        std::vector<int> order(t);
        std::iota(order.begin(), order.end(), 0);
        if (rng.below(2) == 0) {
            // Fan order around the lexicographically smallest point.
            int pivot = 0;
            for (int i = 1; i < t; ++i)
                if (pts[i] < pts[pivot]) pivot = i;
            order.erase(std::find(order.begin(), order.end(), pivot));
            const Point p = pts[pivot];
            std::sort(order.begin(), order.end(), [&](int a, int b) {
                return orient_sign(p, pts[a], pts[b]) > 0;
            });
            order.insert(order.begin(), pivot);
        } else {
            // Seeded tour uncrossed by 2-opt swaps.
            for (int i = t - 1; i > 0; --i) std::swap(order[i], order[rng.below(i + 1)]);
            bool changed = true;
            long guard = 0;
            while (changed) {
                if (++guard > 64L * t * t * t) { changed = false; break; }
                changed = false;
                for (int i = 0; i < t && !changed; ++i) {
                    for (int j = i + 1; j < t && !changed; ++j) {
                        if (j == i + 1 || (i == 0 && j == t - 1)) continue;
                        if (segments_cross(pts[order[i]], pts[order[(i + 1) % t]], pts[order[j]],
                                           pts[order[(j + 1) % t]])) {
                            std::reverse(order.begin() + i + 1, order.begin() + j + 1);
                            changed = true;
                        }
                    }
                }
            }
        }

        SplitMix64 crng(seed ^ 0x1c69b3f74ac4ab4dULL);
        std::vector<int> vertex_colors(t);
        std::vector<int> pattern;
        try {
            pattern = polygon_colors(crng, t, colors);
        } catch (const GenerationError&) {
            continue;
        }
        for (int i = 0; i < t; ++i) vertex_colors[order[i]] = pattern[i];
        try {
            ColoredPointSet ps(pts, vertex_colors);
            auto check = validate_cycle(ps, order);
            if (!check.ok()) continue;
            return PolygonInstance{std::move(ps), *check.cycle};
        } catch (const Error&) {
            continue;
        }
    }
    throw GenerationError("budget exhausted generating a simple polygon");
}

} // namespace planecycles
