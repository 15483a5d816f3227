"""Brute-force ground truth by exhaustive enumeration.

Nothing here uses Gaussian elimination: every answer comes from pushing all
2^n patterns (or trying every set partition) and looking at the result, so
the oracle can be used to check the linear-algebra layer.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .classify import ActivationClass
from .errors import ContractViolation, InvariantViolation, UnsupportedSize
from .gf2 import BitVec
from .graph import (
    Graph,
    closed_neighborhood_matrix,
    format_edge_list,
    induced_subgraph,
    join,
)
from .logging_config import get_logger
from .structure import PassCertificate

logger = get_logger("oracle")

ENUMERATION_LIMIT = 20
PARTITION_LIMIT = 10


def _guard(G: Graph, limit: int, what: str) -> None:
    if G.n > limit:
        raise UnsupportedSize(f"{what} supports n <= {limit}, got n = {G.n}")


def _closed_masks(G: Graph) -> list[int]:
    """Closed neighborhood of each vertex as an integer bitmask."""
    masks = [1 << v for v in range(G.n)]
    for u, w in G.edges:
        masks[u] |= 1 << w
        masks[w] |= 1 << u
    return masks


def _images(G: Graph) -> np.ndarray:
    """N(G) p for every pattern p = 0 .. 2^n - 1, as integer encodings."""
    patterns = np.arange(1 << G.n, dtype=np.uint64)
    images = np.zeros_like(patterns)
    for v, mask in enumerate(_closed_masks(G)):
        pushed = ((patterns >> np.uint64(v)) & np.uint64(1)).astype(bool)
        images[pushed] ^= np.uint64(mask)
    return images


def _solution_codes(G: Graph, c: BitVec) -> np.ndarray:
    _guard(G, ENUMERATION_LIMIT, "enumeration")
    if len(c) != G.n:
        raise ContractViolation(f"configuration length {len(c)} != {G.n}")
    return np.flatnonzero(_images(G) == np.uint64(c.to_int())).astype(np.uint64)


def enumerate_solutions(G: Graph, c: BitVec) -> list[BitVec]:
    """Every p with N(G) p = c, ascending by integer encoding (vertex 0 = LSB)."""
    return [BitVec.from_int(int(code), G.n) for code in _solution_codes(G, c)]


def brute_force_nullity(G: Graph) -> int:
    """log2 of the number of null patterns."""
    _guard(G, ENUMERATION_LIMIT, "enumeration")
    kernel_size = int(np.count_nonzero(_images(G) == 0))
    return kernel_size.bit_length() - 1


@dataclass(frozen=True)
class ActivationStats:
    """How many all-ones solutions push each vertex."""

    activated: tuple[int, ...]
    total: int

    def classes(self) -> list[ActivationClass]:
        """Activation numbers read off the counts (all / none / exactly half)."""
        result = []
        for v, count in enumerate(self.activated):
            if count == self.total:
                result.append(ActivationClass.ALWAYS)
            elif count == 0:
                result.append(ActivationClass.NEVER)
            elif 2 * count == self.total:
                result.append(ActivationClass.HALF)
            else:
                raise InvariantViolation(
                    f"vertex {v} pushed in {count} of {self.total} solutions"
                )
        return result

    def to_dict(self) -> dict:
        return {
            "total_solutions": self.total,
            "activated": list(self.activated),
            "activation": [int(a) for a in self.classes()],
        }


def activation_stats(G: Graph) -> ActivationStats:
    codes = _solution_codes(G, BitVec.ones(G.n))
    activated = tuple(
        int(np.count_nonzero((codes >> np.uint64(v)) & np.uint64(1))) for v in range(G.n)
    )
    return ActivationStats(activated, int(codes.size))


def activation_classes(stats: ActivationStats) -> list[ActivationClass]:
    return stats.classes()


def pi_partition_oracle(G: Graph) -> tuple[int, PassCertificate]:
    """Smallest partition of V(G) into blocks inducing always-solvable subgraphs.

    Set partitions are generated as restricted growth strings in
    lexicographic order; the witness is the first minimizer met.

    Returns:
        (count, PassCertificate)
    """
    _guard(G, PARTITION_LIMIT, "partition search")
    n = G.n
    if n == 0:
        return 0, PassCertificate(())

    solvable: dict[int, bool] = {}

    def block_ok(block_mask: int) -> bool:
        if block_mask not in solvable:
            members = [v for v in range(n) if block_mask >> v & 1]
            sub, _ = induced_subgraph(G, members)
            solvable[block_mask] = brute_force_nullity(sub) == 0
        return solvable[block_mask]

    assignment = [0] * n
    best_count = n + 1
    best: list[int] = []

    def extend(i: int, used: int) -> None:
        nonlocal best_count, best
        if used >= best_count:
            return
        if i == n:
            masks = [0] * used
            for v, b in enumerate(assignment):
                masks[b] |= 1 << v
            if all(block_ok(m) for m in masks):
                best_count, best = used, list(assignment)
            return
        for b in range(used + 1):
            assignment[i] = b
            extend(i + 1, max(used, b + 1))

    extend(1, 1)
    blocks = tuple(
        tuple(v for v in range(n) if best[v] == b) for b in range(best_count)
    )
    logger.debug("pi(G) = %d for n=%d (%d blocks tested)", best_count, n, len(solvable))
    return best_count, PassCertificate(blocks)


# -- join case analysis ------------------------------------------------------


@dataclass(frozen=True)
class JoinCase:
    """One solution class of the all-ones problem on a join H = G1 u-w G2."""

    s_u: int
    s_w: int
    left: str  # N(G1) s1: "ones", "inverse" (= c_u + 1) or "other"
    right: str  # N(G2) s2: "ones", "inverse" (= c_w + 1) or "other"


def _classify_rhs(image: BitVec, pivot: int) -> str:
    ones = BitVec.ones(len(image))
    if image == ones:
        return "ones"
    if image == ones.with_bit(pivot, 0):
        return "inverse"
    return "other"


def join_cases(G1: Graph, u: int, G2: Graph, w: int) -> dict[JoinCase, Fraction]:
    """Split every all-ones solution s of the join into its two halves.

    Returns:
        fraction of solutions falling into each (s(u), s(w), N(G1)s1,
        N(G2)s2) case
    """
    H, u_h, w_h = join(G1, u, G2, w)
    solutions = enumerate_solutions(H, BitVec.ones(H.n))
    if not solutions:
        dump = format_edge_list(H)
        raise InvariantViolation("all-ones configuration has no solution", dump)
    N1 = closed_neighborhood_matrix(G1)
    N2 = closed_neighborhood_matrix(G2)
    tally: dict[JoinCase, int] = {}
    for s in solutions:
        bits = s.to_array()
        s1 = BitVec.from_array(bits[: G1.n])
        s2 = BitVec.from_array(bits[G1.n :])
        case = JoinCase(
            s[u_h],
            s[w_h],
            _classify_rhs(N1.matvec(s1), u),
            _classify_rhs(N2.matvec(s2), w),
        )
        tally[case] = tally.get(case, 0) + 1
    return {case: Fraction(count, len(solutions)) for case, count in tally.items()}


# Solution cases of the join table for A_G1(u) = a, A_G2(w) = b
_JOIN_CASES = {
    (0, 0): {JoinCase(0, 0, "ones", "ones"): Fraction(1)},
    (0, 1): {JoinCase(0, 1, "inverse", "ones"): Fraction(1)},
    (0, -1): {
        JoinCase(0, 0, "ones", "ones"): Fraction(1, 2),
        JoinCase(0, 1, "inverse", "ones"): Fraction(1, 2),
    },
    (1, 1): {
        JoinCase(0, 1, "inverse", "ones"): Fraction(1, 2),
        JoinCase(1, 0, "ones", "inverse"): Fraction(1, 2),
    },
    (1, -1): {JoinCase(0, 1, "inverse", "ones"): Fraction(1)},
    (-1, -1): {JoinCase(0, 0, "ones", "ones"): Fraction(1)},
}


def expected_join_cases(a: int, b: int) -> dict[JoinCase, Fraction]:
    """Predicted case split for a Type-(a, b) join (other orders by symmetry)."""
    if (a, b) in _JOIN_CASES:
        return dict(_JOIN_CASES[(a, b)])
    mirrored = _JOIN_CASES[(b, a)]
    return {
        JoinCase(c.s_w, c.s_u, c.right, c.left): share for c, share in mirrored.items()
    }
