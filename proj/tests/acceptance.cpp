// Acceptance suite: one criterion per subcommand, each printing a single
// PASS/FAIL line.  `acceptance all` runs everything.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <vector>

#include "planecycles/fpt.hpp"
#include "planecycles/generate.hpp"
#include "planecycles/model.hpp"
#include "planecycles/monotonicity.hpp"
#include "planecycles/nested.hpp"
#include "planecycles/oracle.hpp"
#include "planecycles/rainbow.hpp"

using namespace planecycles;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

ColoredPointSet gen_random(std::uint64_t seed, int n, int colors, Coord range = 60) {
    GenSpec spec;
    spec.kind = GenKind::Random;
    spec.n = n;
    spec.color_count = colors;
    spec.seed = seed;
    spec.range = range;
    return generate(spec);
}

ColoredPointSet gen_balanced_bipartite(std::uint64_t seed, int per_color) {
    for (int attempt = 0;; ++attempt) {
        auto ps = gen_random(seed + 7919ULL * attempt, 2 * per_color, 2);
        if (ps.class_size(0) == per_color) return ps;
    }
}

int interior_count(const ColoredPointSet& ps) {
    return ps.size() - static_cast<int>(convex_hull(ps.points()).size());
}

bool visits_boundary_in_hull_order(const ColoredPointSet& ps, const PlaneCycle& cycle) {
    const auto hull = convex_hull(ps.points());
    std::vector<int> order;
    for (int v : cycle.vertices) {
        if (std::find(hull.begin(), hull.end(), v) != hull.end()) order.push_back(v);
    }
    if (order.size() != hull.size()) return false;
    const int m = static_cast<int>(hull.size());
    for (int dir : {1, -1}) {
        for (int shift = 0; shift < m; ++shift) {
            bool match = true;
            for (int i = 0; i < m && match; ++i)
                if (order[i] != hull[((shift + dir * i) % m + m) % m]) match = false;
            if (match) return true;
        }
    }
    return false;
}

// ---------------------------------------------------------------------------

bool theorem1_equivalence(std::string& detail) {
    int positives = 0, total = 0;
    for (std::uint64_t seed = 0; total < 2000; ++seed) {
        const int n = 5 + static_cast<int>(seed % 6);
        const int colors = 2 + static_cast<int>(seed % 4);
        if (n < colors) continue;
        auto ps = gen_random(seed * 1009 + 17, n, colors);
        ++total;
        const auto inv = enumerate_plane_cycles(ps, n);
        const auto witness = find_configuration(ps);
        if (witness.has_value() != (inv.non_rainbow > 0)) {
            detail = "disagreement at seed " + std::to_string(seed);
            return false;
        }
        if (witness) {
            ++positives;
            const auto cycle = witness_cycle(ps, *witness);
            if (cycle.length() != 4 && cycle.length() != 5) {
                detail = "witness cycle of length " + std::to_string(cycle.length());
                return false;
            }
            if (!validate_cycle(ps, cycle.vertices).ok() || color_profile(ps, cycle).rainbow) {
                detail = "invalid witness cycle at seed " + std::to_string(seed);
                return false;
            }
        }
    }
    detail = std::to_string(total) + " instances, " + std::to_string(positives) + " positives";
    return true;
}

bool bipartite_corollary(std::string& detail) {
    int total = 0, cyclic = 0;
    for (std::uint64_t seed = 0; total < 1000; ++seed) {
        const int n = 5 + static_cast<int>(seed % 6);
        auto ps = gen_random(seed * 2003 + 5, n, 2);
        ++total;
        const auto inv = enumerate_plane_cycles(ps, n);
        const bool any = inv.any();
        const bool four = inv.has_length(4);
        const auto witness = find_configuration(ps);
        const bool c1 = witness.has_value() && witness->kind == ConfigKind::C1;
        if (any != four || four != c1 || (witness.has_value() && !c1)) {
            detail = "corollary chain broken at seed " + std::to_string(seed);
            return false;
        }
        cyclic += any ? 1 : 0;
    }
    detail = std::to_string(total) + " instances, " + std::to_string(cyclic) + " with cycles";
    return true;
}

bool theorem2_contract(std::string& detail) {
    int total = 0, iterated = 0;
    for (std::uint64_t seed = 0; total < 1000; ++seed) {
        const int t = 6 + static_cast<int>(seed % 7);
        const int colors = (seed % 4 == 0) ? 3 + static_cast<int>(seed % 2) : 0;
        PolygonInstance poly = [&] {
            try {
                return generate_simple_polygon(seed * 509 + 3, t, colors);
            } catch (const GenerationError&) {
                return generate_simple_polygon(seed * 509 + 3, t, 0);
            }
        }();
        if (color_profile(poly.ps, poly.cycle).rainbow) continue;
        ++total;
        const auto shorter = shorten_cycle(poly.ps, poly.cycle);
        const int lower = (t + 1) / 2 + 1;
        if (!validate_cycle(poly.ps, shorter.vertices).ok() ||
            color_profile(poly.ps, shorter).rainbow || shorter.length() < lower ||
            shorter.length() > t - 1) {
            detail = "contract violated at seed " + std::to_string(seed);
            return false;
        }
        // Iterate to the floor.
        PlaneCycle cur = poly.cycle;
        while (cur.length() >= 6) cur = shorten_cycle(poly.ps, cur);
        if (cur.length() != 4 && cur.length() != 5) {
            detail = "iteration ended at length " + std::to_string(cur.length());
            return false;
        }
        ++iterated;
    }
    detail = std::to_string(total) + " cycles shortened and iterated";
    return true;
}

bool theorem3_contract(std::string& detail) {
    int total = 0;
    std::vector<GenSpec> specs;
    for (std::uint64_t seed = 0; seed < 120; ++seed) {
        GenSpec spec;
        spec.kind = GenKind::Nested;
        spec.n = 3 + static_cast<int>(seed % 8);
        spec.seed = seed * 47 + 1;
        specs.push_back(spec);
    }
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        GenSpec spec;
        spec.kind = GenKind::ZoneRing;
        spec.n = 3 + static_cast<int>(seed % 8);
        spec.seed = seed * 31 + 2;
        specs.push_back(spec);
    }
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        GenSpec spec;
        spec.kind = GenKind::ZoneRingPaired;
        spec.n = 4 + 2 * static_cast<int>(seed % 4);
        spec.seed = seed * 17 + 3;
        specs.push_back(spec);
    }
    for (const auto& spec : specs) {
        ColoredPointSet ps = generate(spec);
        ++total;
        const auto blues = ps.class_of(kBlueColor);
        for (int t = 2; t <= spec.n; ++t) {
            try {
                const auto cycle = cycle_of_length(ps, blues, t);
                auto check = validate_cycle(ps, cycle.vertices);
                int reds = 0;
                for (int v : cycle.vertices) reds += ps.color(v) == kRedColor ? 1 : 0;
                if (!check.ok() || cycle.length() != 2 * t || reds != t) {
                    detail = "bad cycle for " + spec.describe() + " t=" + std::to_string(t);
                    return false;
                }
            } catch (const NestedStructureError& e) {
                detail = "structure assertion fired for " + spec.describe() + ": " + e.what();
                return false;
            }
        }
    }
    detail = std::to_string(total) + " nested instances, all lengths constructed";
    return true;
}

bool theorem4_equivalence(std::string& detail) {
    int total = 0, yes = 0;
    for (std::uint64_t seed = 0; total < 2000; ++seed) {
        const int per_color = 2 + static_cast<int>(seed % 5);
        auto ps = gen_balanced_bipartite(seed * 307 + 13, per_color);
        if (interior_count(ps) > 4) continue;
        ++total;
        const auto oracle = brute_hamiltonian(ps);
        const auto decision = decide_hamiltonian(ps, true);
        if (decision.yes != oracle.has_value()) {
            detail = "oracle disagreement at seed " + std::to_string(seed);
            return false;
        }
        if (decision.yes) {
            ++yes;
            if (!decision.cycle || decision.cycle->length() != ps.size() ||
                !validate_cycle(ps, decision.cycle->vertices).ok() ||
                !visits_boundary_in_hull_order(ps, *decision.cycle)) {
                detail = "constructed cycle invalid at seed " + std::to_string(seed);
                return false;
            }
        }
    }
    detail = std::to_string(total) + " instances, " + std::to_string(yes) + " Hamiltonian";
    return true;
}

bool feasibility_equivalence(std::string& detail) {
    int instances = 0;
    long selections = 0, feasible_count = 0;
    for (std::uint64_t seed = 0; instances < 50; ++seed) {
        auto ps = gen_balanced_bipartite(seed * 401 + 29, 3 + static_cast<int>(seed % 2));
        const int k = interior_count(ps);
        if (k < 2 || k > 3) continue;
        auto dec = compute_arcs(ps);
        if (dec.first_kind_count() > k) continue;
        ++instances;
        for (const auto& f : all_initial_cycles(ps, dec)) {
            const int g = f.gap_count();
            std::vector<int> arcs(g, 0);
            while (true) {
                ++selections;
                ArcSelection sel{arcs};
                const bool feasible = check_feasible(ps, dec, f, sel).feasible;
                const auto built = try_build_from_selection(ps, dec, f, sel);
                if (feasible != built.has_value()) {
                    detail = "feasibility/constructibility split at seed " + std::to_string(seed);
                    return false;
                }
                if (feasible) {
                    ++feasible_count;
                    const auto cycle = construct_from_selection(ps, dec, f, sel);
                    if (!validate_cycle(ps, cycle.vertices).ok() || cycle.length() != ps.size()) {
                        detail = "feasible selection built a bad cycle at seed " +
                                 std::to_string(seed);
                        return false;
                    }
                }
                int i = g - 1;
                while (i >= 0 && arcs[i] == dec.arc_count() - 1) arcs[i--] = 0;
                if (i < 0) break;
                ++arcs[i];
            }
        }
    }
    detail = std::to_string(instances) + " instances, " + std::to_string(selections) +
             " selections, " + std::to_string(feasible_count) + " feasible";
    return true;
}

bool scaling_sanity(std::string& detail) {
    auto instance_for = [](int n, int k, std::uint64_t seed) {
        GenSpec spec;
        spec.kind = GenKind::RingWithInterior;
        spec.n = n;
        spec.interior = k;
        spec.seed = seed;
        spec.range = 200000;
        return generate(spec);
    };

    // k = 3 fixed, n growing: each decision under 60 s, fitted exponent <= 3.
    std::vector<double> times;
    for (int n : {50, 100, 200}) {
        double elapsed = 0;
        int reps = 0;
        // Repeat until the measurement is meaningful.
        while (elapsed < 0.2 && reps < 64) {
            for (int r = 0; r < 4; ++r) {
                auto ps = instance_for(n, 3, 1000 + n + r);
                const auto start = Clock::now();
                (void)decide_hamiltonian(ps, false);
                elapsed += seconds_since(start);
                ++reps;
            }
        }
        const double per_call = elapsed / reps;
        if (per_call > 60.0) {
            detail = "n=" + std::to_string(n) + " took " + std::to_string(per_call) + "s";
            return false;
        }
        times.push_back(per_call);
    }
    // Least-squares slope of log t against log n over {50,100,200}.
    const std::vector<double> ns = {50, 100, 200};
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (int i = 0; i < 3; ++i) {
        const double x = std::log(ns[i]);
        const double y = std::log(std::max(times[i], 1e-7));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double slope = (3 * sxy - sx * sy) / (3 * sxx - sx * sx);
    const bool negligible = times[2] < 0.02; // too fast to exhibit growth
    if (!negligible && slope > 3.0) {
        detail = "fitted exponent " + std::to_string(slope);
        return false;
    }

    // n = 50 fixed, k in {2,3,4}: each decision under 10 minutes.
    std::ostringstream ks;
    for (int k : {2, 3, 4}) {
        auto ps = instance_for(50, k, 2000 + k);
        const auto start = Clock::now();
        (void)decide_hamiltonian(ps, false);
        const double t = seconds_since(start);
        if (t > 600.0) {
            detail = "k=" + std::to_string(k) + " took " + std::to_string(t) + "s";
            return false;
        }
        ks << " k" << k << "=" << t << "s";
    }
    std::ostringstream out;
    out << "times(s) n50=" << times[0] << " n100=" << times[1] << " n200=" << times[2]
        << " slope=" << slope << ks.str();
    detail = out.str();
    return true;
}

bool lemma1_property(std::string& detail) {
    int total = 0;
    for (std::uint64_t seed = 0; total < 5000; ++seed) {
        const int t = 6 + static_cast<int>(seed % 7);
        auto poly = generate_simple_polygon(seed * 97 + 7, t);
        ++total;
        if (check_three_principal_path(poly.ps, poly.cycle)) {
            detail = "three-principal path on " + std::to_string(t) + " vertices at seed " +
                     std::to_string(seed);
            return false;
        }
        const auto pps = principal_points(poly.ps, poly.cycle);
        int ears = 0, mouths = 0;
        for (const auto& pp : pps) (pp.is_ear ? ears : mouths) += 1;
        const bool convex =
            static_cast<int>(convex_hull(poly.ps.points()).size()) == poly.ps.size();
        if (ears < 2 || (convex && mouths != 0) || (!convex && mouths < 1)) {
            detail = "ear/mouth counts wrong at seed " + std::to_string(seed);
            return false;
        }
    }
    detail = std::to_string(total) + " polygons checked";
    return true;
}

bool exactness_translation(std::string& detail) {
    SplitMix64 rng(0x5eedULL);
    int checks = 0;
    while (checks < 10000) {
        // Predicates under translation.
        const Point a{rng.coord(-900, 900), rng.coord(-900, 900)};
        const Point b{rng.coord(-900, 900), rng.coord(-900, 900)};
        const Point c{rng.coord(-900, 900), rng.coord(-900, 900)};
        const Point d{rng.coord(-900, 900), rng.coord(-900, 900)};
        const Coord tx = rng.coord(-500000, 500000), ty = rng.coord(-500000, 500000);
        auto shift = [&](Point p) { return Point{p.x + tx, p.y + ty}; };
        if (orient_sign(a, b, c) != orient_sign(shift(a), shift(b), shift(c))) {
            detail = "orientation not translation invariant";
            return false;
        }
        if (segments_cross(a, b, c, d) !=
            segments_cross(shift(a), shift(b), shift(c), shift(d))) {
            detail = "crossing not translation invariant";
            return false;
        }
        checks += 2;
        if (checks % 500 == 0) {
            auto ps = gen_random(checks, 9, 2, 800);
            std::vector<Point> moved;
            for (const Point& p : ps.points()) moved.push_back(shift(p));
            if (convex_hull(ps.points()) != convex_hull(moved)) {
                detail = "hull not translation invariant";
                return false;
            }
            ++checks;
        }
    }
    detail = std::to_string(checks) + " randomized checks";
    return true;
}

} // namespace

int main(int argc, char** argv) {
    const std::string which = argc > 1 ? argv[1] : "all";
    const std::vector<std::pair<std::string, std::function<bool(std::string&)>>> criteria = {
        {"theorem1_equivalence", theorem1_equivalence},
        {"bipartite_corollary", bipartite_corollary},
        {"theorem2_contract", theorem2_contract},
        {"theorem3_contract", theorem3_contract},
        {"theorem4_equivalence", theorem4_equivalence},
        {"feasibility_equivalence", feasibility_equivalence},
        {"scaling_sanity", scaling_sanity},
        {"lemma1_property", lemma1_property},
        {"exactness_translation", exactness_translation},
    };

    bool ran = false, ok = true;
    for (const auto& [name, run] : criteria) {
        if (which != "all" && which != name) continue;
        ran = true;
        std::string criterion_detail;
        const auto start = Clock::now();
        bool passed = false;
        try {
            passed = run(criterion_detail);
        } catch (const std::exception& e) {
            criterion_detail = std::string("exception: ") + e.what();
        }
        std::ostringstream line;
        line << (passed ? "PASS" : "FAIL") << ": " << name << " [" << criterion_detail << "] ("
             << seconds_since(start) << "s)";
        std::cout << line.str() << std::endl;
        ok = ok && passed;
    }
    if (!ran) {
        std::cerr << "unknown criterion: " << which << '\n';
        return 2;
    }
    return ok ? 0 : 1;
}
