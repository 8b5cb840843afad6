"""Plane cycles in geometric complete multipartite graphs."""

from ._core import (
    GeometryError,
    PointSet,
    brute_hamiltonian,
    detect,
    enumerate_cycles,
    generate,
    hamiltonian,
    has_nonrainbow_plane_cycle,
    nested_cycle,
    principal_points,
    render_svg,
    shorten,
    suggest_blue_ring,
    validate_cycle,
)

__all__ = [
    "GeometryError",
    "PointSet",
    "brute_hamiltonian",
    "detect",
    "enumerate_cycles",
    "generate",
    "hamiltonian",
    "has_nonrainbow_plane_cycle",
    "nested_cycle",
    "principal_points",
    "render_svg",
    "shorten",
    "suggest_blue_ring",
    "validate_cycle",
]
