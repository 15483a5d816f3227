"""Game semantics: which configurations can be switched off, and how.

Pushing vertex v toggles v and all of its neighbors, so a pattern p turns a
configuration c into c + N(G) p. Solving c means finding p with N(G) p = c.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import gf2
from .errors import ContractViolation, InvariantViolation, UnsupportedSize
from .gf2 import BitMatrix, BitVec
from .graph import Edge, Graph, closed_neighborhood_matrix, format_edge_list
from .logging_config import get_logger

logger = get_logger("solver")

# Largest kernel dimension for which solutions are listed one by one
EXPLICIT_SOLUTION_LIMIT = 20


@dataclass(frozen=True)
class SolutionSet:
    """All solving patterns of one configuration: particular + Ker(N)."""

    particular: BitVec
    kernel_basis: tuple[BitVec, ...]

    @property
    def nullity(self) -> int:
        return len(self.kernel_basis)

    @property
    def count(self) -> int:
        return 2 ** len(self.kernel_basis)

    def contains(self, p: BitVec) -> bool:
        """Whether p is one of the solving patterns."""
        if len(p) != len(self.particular):
            return False
        offset = p + self.particular
        if not self.kernel_basis:
            return not offset.any()
        span = BitMatrix.from_rows(list(self.kernel_basis)).transpose()
        return gf2.solve(span, offset) is not None

    def solutions(self) -> list[BitVec]:
        """Every solving pattern, ascending by integer encoding (vertex 0 = LSB)."""
        if self.nullity > EXPLICIT_SOLUTION_LIMIT:
            raise UnsupportedSize(
                f"refusing to list 2^{self.nullity} solutions "
                f"(limit 2^{EXPLICIT_SOLUTION_LIMIT})"
            )
        found = []
        for mask in range(self.count):
            p = self.particular
            for k, basis_vector in enumerate(self.kernel_basis):
                if mask >> k & 1:
                    p = p + basis_vector
            found.append(p)
        return sorted(found, key=BitVec.to_int)


def _check_length(G: Graph, v: BitVec, what: str) -> None:
    if len(v) != G.n:
        raise ContractViolation(f"{what} has length {len(v)}, graph has {G.n} vertices")


def parse_config(G: Graph, text: str) -> BitVec:
    """Parse a bitstring configuration for G (first character = vertex 0)."""
    c = BitVec.from_string(text)
    _check_length(G, c, "configuration")
    return c


def rank(G: Graph) -> int:
    return gf2.rank(closed_neighborhood_matrix(G))


def nullity(G: Graph) -> int:
    """dim Ker N(G); the empty graph has nullity 0."""
    return G.n - rank(G)


def is_always_solvable(G: Graph) -> bool:
    return nullity(G) == 0


def null_patterns(G: Graph) -> list[BitVec]:
    """Canonical basis of Ker N(G): patterns that change no configuration."""
    return gf2.nullspace_basis(closed_neighborhood_matrix(G))


def is_solvable(G: Graph, c: BitVec) -> bool:
    """c is solvable iff it is orthogonal to every null pattern (N is symmetric)."""
    _check_length(G, c, "configuration")
    return all(c.dot(ell) == 0 for ell in null_patterns(G))


def solve_config(G: Graph, c: BitVec) -> SolutionSet | None:
    _check_length(G, c, "configuration")
    particular, basis = gf2.solve_with_kernel(closed_neighborhood_matrix(G), c)
    if particular is None:
        logger.debug("configuration %s unsolvable on n=%d", c.to_string(), G.n)
        return None
    return SolutionSet(particular, tuple(basis))


def solve_all_ones(G: Graph) -> SolutionSet:
    """Solve the all-ones configuration, which is solvable on every graph."""
    if G.n == 0:
        raise ContractViolation("the all-ones problem needs at least one vertex")
    solution = solve_config(G, BitVec.ones(G.n))
    if solution is None:
        dump = format_edge_list(G)
        logger.error("all-ones configuration reported unsolvable:\n%s", dump)
        raise InvariantViolation("all-ones configuration reported unsolvable", dump)
    return solution


def apply_pattern(G: Graph, c: BitVec, p: BitVec) -> BitVec:
    """Configuration after pushing every vertex of p once: c + N(G) p."""
    _check_length(G, c, "configuration")
    _check_length(G, p, "pattern")
    return c + closed_neighborhood_matrix(G).matvec(p)


def transported_config(G: Graph, e, p: BitVec) -> BitVec:
    """N(G - e) p, obtained from N(G) p by undoing the two toggles across e."""
    e = e if isinstance(e, Edge) else Edge.of(*e)
    if e not in G.edges:
        raise ContractViolation(f"edge ({e.u}, {e.w}) is not in the graph")
    _check_length(G, p, "pattern")
    result = closed_neighborhood_matrix(G).matvec(p)
    if p[e.w]:
        result = result + BitVec.unit(G.n, e.u)
    if p[e.u]:
        result = result + BitVec.unit(G.n, e.w)
    return result
