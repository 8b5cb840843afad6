#ifndef PLANECYCLES_RAINBOW_HPP
#define PLANECYCLES_RAINBOW_HPP

#include <optional>
#include <string>

#include "planecycles/model.hpp"

namespace planecycles {

enum class ConfigKind { C1, C2, C3, C4 };

std::string to_string(ConfigKind kind);

// A witness for the existence of a non-rainbow plane cycle.
//   C1: phi(u)=phi(u'), phi(v)=phi(v'), two colors, v/v' separated by line uu'.
//   C2: phi(u)=phi(u'), phi(v)!=phi(v'), three colors, same separation.
//   C3: phi(u)!=phi(u'), phi(v)=phi(v'), three colors, same separation.
//   C4: phi(u)=phi(u'), four colors on {u,v,v',w}, u,u',v,v' in convex
//       position with w strictly inside their quadrilateral.
struct ConfigurationWitness {
    ConfigKind kind;
    int u;
    int u_prime;
    int v;
    int v_prime;
    int w = -1; // C4 only

    friend bool operator==(const ConfigurationWitness&, const ConfigurationWitness&) = default;
};

// Deterministic search: kinds in order C1, C2, C3, C4; within a kind the
// lexicographically first index tuple.  C4 is scanned only when the first
// three kinds fail and at least four colors exist.
std::optional<ConfigurationWitness> find_configuration(const ColoredPointSet& ps);

// A valid non-rainbow plane cycle on the witness vertices: length 4 for
// C1-C3; for C4 length 4 when u and u' are opposite corners of the
// quadrilateral, length 5 (splicing w between them) when they are adjacent.
PlaneCycle witness_cycle(const ColoredPointSet& ps, const ConfigurationWitness& witness);

bool has_nonrainbow_plane_cycle(const ColoredPointSet& ps);

} // namespace planecycles

#endif
