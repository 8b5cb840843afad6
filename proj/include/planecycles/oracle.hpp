#ifndef PLANECYCLES_ORACLE_HPP
#define PLANECYCLES_ORACLE_HPP

#include <map>
#include <optional>

#include "planecycles/model.hpp"

namespace planecycles {

inline constexpr int kOracleMaxVertices = 12;

struct CycleInventory {
    // Canonical cycles, sorted, grouped by length.
    std::map<int, std::vector<PlaneCycle>> by_length;
    int total = 0;
    int rainbow = 0;
    int non_rainbow = 0;

    bool has_length(int t) const { return by_length.count(t) != 0; }
    bool any() const { return total > 0; }
};

// Every plane cycle of length 3..max_len, by exhaustive backtracking.
// Instances are capped at kOracleMaxVertices vertices.
CycleInventory enumerate_plane_cycles(const ColoredPointSet& ps, int max_len);

// First plane Hamiltonian cycle in canonical enumeration order, if any.
std::optional<PlaneCycle> brute_hamiltonian(const ColoredPointSet& ps);

} // namespace planecycles

#endif
