"""Per-vertex classification: activation numbers and null differences.

A vertex is half-activated when some null pattern pushes it; it is then
pushed by exactly half of the solutions of any solvable configuration. Every
other vertex is fixed: the all-ones solutions either all push it
(always-activated) or none do (never-activated).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum

from . import gf2
from .errors import ContractViolation, InvariantViolation
from .gf2 import BitVec
from .graph import Graph, closed_neighborhood_matrix, delete_vertex, format_edge_list
from .logging_config import get_logger
from .solver import is_solvable, null_patterns, nullity, solve_all_ones

logger = get_logger("classify")


class ActivationClass(IntEnum):
    """Activation number A(v)."""

    HALF = -1  # half-activated
    NEVER = 0  # never-activated
    ALWAYS = 1  # always-activated


# A(v) -> nd(v)
NULL_DIFFERENCE_OF = {
    ActivationClass.ALWAYS: 0,
    ActivationClass.NEVER: 1,
    ActivationClass.HALF: -1,
}


@dataclass(frozen=True)
class VertexProfile:
    vertex: int
    activation: ActivationClass
    null_difference: int
    fixed: bool

    def to_dict(self) -> dict:
        return {
            "vertex": self.vertex,
            "activation": int(self.activation),
            "nd": self.null_difference,
            "fixed": self.fixed,
        }


def characteristic(n: int, v: int) -> BitVec:
    """c_v: only vertex v is lit."""
    return BitVec.unit(n, v)


def inverse(c: BitVec) -> BitVec:
    """The inverse configuration c + 1."""
    return c + BitVec.ones(len(c))


def _check_vertex(G: Graph, v: int) -> None:
    if not 0 <= v < G.n:
        raise ContractViolation(f"vertex {v} out of range for {G.n} vertices")


def is_half_activated(G: Graph, v: int) -> bool:
    _check_vertex(G, v)
    return any(ell[v] for ell in null_patterns(G))


def activation_number(G: Graph, v: int) -> ActivationClass:
    _check_vertex(G, v)
    if is_half_activated(G, v):
        return ActivationClass.HALF
    return ActivationClass(solve_all_ones(G).particular[v])


def activation_vector(G: Graph) -> list[ActivationClass]:
    """A(v) for every vertex from one elimination of [N(G) | 1]."""
    if G.n == 0:
        return []
    solution = solve_all_ones(G)
    s = solution.particular
    half = BitVec.zeros(G.n)
    for ell in solution.kernel_basis:
        half = BitVec(G.n, half.words | ell.words)
    return [
        ActivationClass.HALF if half[v] else ActivationClass(s[v]) for v in range(G.n)
    ]


def half_activated_vertices(G: Graph) -> list[int]:
    return [v for v, a in enumerate(activation_vector(G)) if a is ActivationClass.HALF]


def always_activated_vertices(G: Graph) -> list[int]:
    return [v for v, a in enumerate(activation_vector(G)) if a is ActivationClass.ALWAYS]


def null_difference(G: Graph, v: int) -> int:
    """nd(v) = nullity(G - v) - nullity(G)."""
    _check_vertex(G, v)
    return nullity(delete_vertex(G, v)[0]) - nullity(G)


def is_fixed(G: Graph, v: int) -> bool:
    """A vertex is fixed iff its characteristic configuration c_v is solvable."""
    _check_vertex(G, v)
    return is_solvable(G, characteristic(G.n, v))


def profile(G: Graph) -> list[VertexProfile]:
    """Activation, null difference and fixedness for every vertex.

    Raises:
        InvariantViolation: if A(v) and nd(v) do not correspond, or if the
            solvability of c_v disagrees with the activation class
    """
    activations = activation_vector(G)
    base = nullity(G)
    N = closed_neighborhood_matrix(G)
    profiles = []
    for v, a in enumerate(activations):
        nd = nullity(delete_vertex(G, v)[0]) - base
        fixed = gf2.solve(N, characteristic(G.n, v)) is not None
        if NULL_DIFFERENCE_OF[a] != nd or fixed != (a is not ActivationClass.HALF):
            dump = format_edge_list(G)
            logger.error(
                "vertex %d: activation %d, nd %d, fixed %s\n%s", v, a, nd, fixed, dump
            )
            raise InvariantViolation(
                f"vertex {v}: activation {int(a)} inconsistent with nd {nd} / fixed {fixed}",
                dump,
            )
        profiles.append(VertexProfile(v, a, nd, fixed))
    return profiles
