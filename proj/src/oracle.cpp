#include "planecycles/oracle.hpp"

#include <algorithm>

namespace planecycles {

namespace {

// Backtracking over vertex sequences in canonical form: the first vertex is
// the smallest on the cycle and the second vertex is smaller than the last,
// so each cycle is produced exactly once.  Pruning order: color check first,
// then crossings, then recursion.
struct CycleSearch {
    const ColoredPointSet& ps;
    int max_len;
    bool hamiltonian_only;
    std::vector<int> seq;
    std::vector<bool> used;
    bool stop_at_first = false;
    std::vector<PlaneCycle> found;

    CycleSearch(const ColoredPointSet& s, int m, bool ham)
        : ps(s), max_len(m), hamiltonian_only(ham), used(s.size(), false) {}

    bool edge_crosses_path(int a, int b, bool closing) const {
        const int len = static_cast<int>(seq.size());
        // Skip edges adjacent to the new one; they share an endpoint.
        for (int i = 0; i < len - 2; ++i) {
            if (closing && i == 0) continue;
            if (segments_cross(ps.point(a), ps.point(b), ps.point(seq[i]), ps.point(seq[i + 1])))
                return true;
        }
        return false;
    }

    bool emit() {
        const int t = static_cast<int>(seq.size());
        if (hamiltonian_only && t != ps.size()) return false;
        found.push_back(PlaneCycle{canonical_cycle(seq)});
        return stop_at_first;
    }

    // Returns true when the search should stop.
    bool extend() {
        const int len = static_cast<int>(seq.size());
        const int head = seq.front();
        const int tail = seq.back();
        if (len >= 3 && !(hamiltonian_only && len < ps.size())) {
            if (ps.is_host_edge(tail, head) && seq[1] < tail &&
                !edge_crosses_path(tail, head, true)) {
                if (emit()) return true;
            }
        }
        if (len == max_len) return false;
        for (int v = head + 1; v < ps.size(); ++v) {
            if (used[v]) continue;
            if (!ps.is_host_edge(tail, v)) continue;
            if (edge_crosses_path(tail, v, false)) continue;
            used[v] = true;
            seq.push_back(v);
            if (extend()) return true;
            seq.pop_back();
            used[v] = false;
        }
        return false;
    }

    void run() {
        const int n = ps.size();
        for (int start = 0; start + 2 < n; ++start) {
            if (hamiltonian_only && start > 0) break;
            seq.assign(1, start);
            std::fill(used.begin(), used.end(), false);
            used[start] = true;
            if (extend()) return;
        }
    }
};

} // namespace

CycleInventory enumerate_plane_cycles(const ColoredPointSet& ps, int max_len) {
    if (ps.size() > kOracleMaxVertices) {
        throw PreconditionError("oracle instance too large (" + std::to_string(ps.size()) +
                                " > " + std::to_string(kOracleMaxVertices) + " vertices)");
    }
    max_len = std::min(max_len, ps.size());
    if (max_len < 3) return {};
    CycleSearch search(ps, max_len, /*ham=*/false);
    search.run();
    CycleInventory inv;
    std::sort(search.found.begin(), search.found.end());
    for (PlaneCycle& c : search.found) {
        const auto profile = color_profile(ps, c);
        ++inv.total;
        if (profile.rainbow)
            ++inv.rainbow;
        else
            ++inv.non_rainbow;
        inv.by_length[c.length()].push_back(std::move(c));
    }
    return inv;
}

std::optional<PlaneCycle> brute_hamiltonian(const ColoredPointSet& ps) {
    if (ps.size() > kOracleMaxVertices) {
        throw PreconditionError("oracle instance too large (" + std::to_string(ps.size()) +
                                " > " + std::to_string(kOracleMaxVertices) + " vertices)");
    }
    if (ps.size() < 3) return std::nullopt;
    CycleSearch search(ps, ps.size(), /*ham=*/true);
    search.stop_at_first = true;
    search.run();
    if (search.found.empty()) return std::nullopt;
    return search.found.front();
}

} // namespace planecycles
