"""Constructive structure results with independently checkable certificates.

- Chains: delete vertices one at a time so that the nullity drops by one per
  step until it reaches zero, and then stays zero down to the empty graph.
- Joins: how activation numbers and nullity change when two graphs are
  connected by a single edge (the join table).
- PASS: partition of a tree into the fewest always-solvable subtrees,
  which is always nullity + 1 blocks.
- Decomposition: every always-solvable tree other than K1 is a Type-(0,1)
  or a Type-(1,1,1) connection of smaller always-solvable trees.

Builders break every tie by the lowest vertex label (or lowest edge in
lexicographic order), so certificates are reproducible. Verifiers recompute
everything from the graph and never reuse builder bookkeeping.
"""

from __future__ import annotations

import functools
import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Union

import numpy as np

from .classify import ActivationClass, activation_number, activation_vector
from .errors import CertificateError, ContractViolation, InvariantViolation, UnsupportedSize
from .graph import (
    Edge,
    Graph,
    component_of,
    components,
    delete_edge,
    delete_vertex,
    format_edge_list,
    induced_subgraph,
    is_tree,
    join,
    join3,
    random_graph,
    random_tree,
)
from .logging_config import get_logger
from .solver import is_always_solvable, nullity

logger = get_logger("structure")

# Largest graph handed to the exact partition search
PI_EXACT_LIMIT = 10


@dataclass(frozen=True)
class Verdict:
    """Outcome of a certificate check; falsy when the check failed."""

    ok: bool
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.ok

    @classmethod
    def passed(cls) -> "Verdict":
        return cls(True)

    @classmethod
    def failed(cls, reason: str) -> "Verdict":
        logger.info("verification failed: %s", reason)
        return cls(False, reason)

    def to_dict(self) -> dict:
        return {"ok": self.ok, "reason": self.reason}


def _violation(message: str, G: Graph) -> InvariantViolation:
    dump = format_edge_list(G)
    logger.error("%s\n%s", message, dump)
    return InvariantViolation(message, dump)


def _int_list(data, key: str) -> list:
    value = data.get(key) if isinstance(data, dict) else None
    if not isinstance(value, list):
        raise CertificateError(f"expected a list under {key!r}")
    return value


def _label(value, what: str) -> int:
    if not isinstance(value, int) or isinstance(value, bool) or value < 0:
        raise CertificateError(f"{what} must be a non-negative integer, got {value!r}")
    return value


# -- chains ------------------------------------------------------------------


@dataclass(frozen=True)
class ChainCertificate:
    """Vertex removal order and the nullity after each removal.

    expected_nullities[k] is the nullity once the first k vertices of
    removal_order are gone, so it has one more entry than the order.
    """

    removal_order: tuple[int, ...]
    expected_nullities: tuple[int, ...]

    def to_dict(self) -> dict:
        return {"order": list(self.removal_order), "nullities": list(self.expected_nullities)}

    @classmethod
    def from_dict(cls, data: dict) -> "ChainCertificate":
        order = [_label(v, "vertex") for v in _int_list(data, "order")]
        nullities = [_label(v, "nullity") for v in _int_list(data, "nullities")]
        return cls(tuple(order), tuple(nullities))


def chain_schedule(nu: int, n: int) -> list[int]:
    """Nullities nu, nu - 1, ..., 0, 0, ... for G_0 .. G_n."""
    return [max(nu - k, 0) for k in range(n + 1)]


def build_chain(G: Graph) -> ChainCertificate:
    """Delete half-activated vertices while the nullity is positive, then always-activated ones.

    Removing a half-activated vertex lowers the nullity by one; removing an
    always-activated vertex keeps it unchanged.
    """
    if G.n == 0:
        raise ContractViolation("a chain needs at least one vertex")
    current, labels = G, list(range(G.n))
    nu = nullity(G)
    order: list[int] = []
    nullities = [nu]
    while current.n > 0:
        wanted = ActivationClass.HALF if nullities[-1] > 0 else ActivationClass.ALWAYS
        candidates = [v for v, a in enumerate(activation_vector(current)) if a is wanted]
        if not candidates:
            raise _violation(f"no {wanted.name.lower()}-activated vertex to remove", current)
        v = candidates[0]
        order.append(labels.pop(v))
        current, _ = delete_vertex(current, v)
        nullities.append(nullity(current))
        logger.debug("chain: removed %d (%s), nullity now %d", order[-1], wanted.name, nullities[-1])
    if nullities != chain_schedule(nu, G.n):
        raise _violation(f"chain nullities {nullities} off schedule", G)
    return ChainCertificate(tuple(order), tuple(nullities))


def verify_chain(G: Graph, cert: ChainCertificate) -> Verdict:
    """Replay the removals and recompute every nullity from scratch."""
    order = list(cert.removal_order)
    if sorted(order) != list(range(G.n)):
        return Verdict.failed("removal order is not a permutation of the vertices")
    expected = list(cert.expected_nullities)
    if len(expected) != G.n + 1:
        return Verdict.failed(f"expected {G.n + 1} nullities, got {len(expected)}")
    schedule = chain_schedule(nullity(G), G.n)
    if expected != schedule:
        return Verdict.failed(f"nullities {expected} differ from schedule {schedule}")

    current, labels = G, list(range(G.n))
    for k, vertex in enumerate(order, start=1):
        index = labels.index(vertex)
        labels.pop(index)
        current, _ = delete_vertex(current, index)
        observed = nullity(current)
        if observed != expected[k]:
            return Verdict.failed(
                f"after removing {order[:k]} nullity is {observed}, expected {expected[k]}"
            )
    return Verdict.passed()


# -- joins -------------------------------------------------------------------

# (A_G1(u), A_G2(w)) -> (A_H(u), A_H(w), change in nullity), one row per
# unordered pair
_ROWS: dict[tuple[int, int], tuple[int, int, int]] = {
    (0, 0): (0, 0, 0),
    (0, 1): (0, 1, 0),
    (0, -1): (0, -1, 0),
    (1, 1): (-1, -1, 1),
    (1, -1): (0, 1, -1),
    (-1, -1): (0, 0, -2),
}

# every ordered pair; swapping the operands swaps the two post-join numbers
JOIN_TABLE: dict[tuple[int, int], tuple[int, int, int]] = {
    **{(b, a): (post_w, post_u, delta) for (a, b), (post_u, post_w, delta) in _ROWS.items()},
    **_ROWS,
}


def table_row(a: int, b: int) -> tuple[int, int]:
    """The table row covering a Type-(a, b) join."""
    if (a, b) in _ROWS:
        return (a, b)
    if (b, a) in _ROWS:
        return (b, a)
    raise ContractViolation(f"({a}, {b}) is not a pair of activation numbers")


def expected_join(a: int, b: int) -> tuple[int, int, int]:
    """(A_H(u), A_H(w), delta nu) for a Type-(a, b) join."""
    table_row(a, b)
    return JOIN_TABLE[(a, b)]


def _mod3(value: int) -> int:
    """Residue mod 3 as one of -1, 0, 1."""
    return {0: 0, 1: 1, 2: -1}[value % 3]


def predicted_delta_nu(a: int, b: int) -> int:
    return -2 if a == b == -1 else a * b


def predicted_post_activation(a: int, b: int) -> tuple[int, int]:
    return _mod3(a * (1 + b)), _mod3(b * (1 + a))


@dataclass(frozen=True)
class JoinReport:
    """What happened when u of G1 was joined to w of G2."""

    type_pair: tuple[int, int]
    delta_nu: int
    post_activation: tuple[int, int]
    table_row_ok: bool

    def to_dict(self) -> dict:
        return {
            "type": list(self.type_pair),
            "delta_nu": self.delta_nu,
            "post_activation": list(self.post_activation),
            "table_row_ok": self.table_row_ok,
        }


def join_report(G1: Graph, u: int, G2: Graph, w: int) -> JoinReport:
    a = int(activation_number(G1, u))
    b = int(activation_number(G2, w))
    H, u_h, w_h = join(G1, u, G2, w)
    delta = nullity(H) - nullity(G1) - nullity(G2)
    after = activation_vector(H)
    post = (int(after[u_h]), int(after[w_h]))

    observed = (*post, delta)
    ok = (
        observed == expected_join(a, b)
        and delta == predicted_delta_nu(a, b)
        and post == predicted_post_activation(a, b)
    )
    if not ok:
        logger.warning(
            "join Type-(%d,%d) observed (A_H(u), A_H(w), dnu) = %s, table says %s",
            a, b, observed, expected_join(a, b),
        )
    return JoinReport((a, b), delta, post, ok)


@dataclass(frozen=True)
class StarJoinResult:
    graph: Graph
    predicted: bool
    observed: bool

    @property
    def agrees(self) -> bool:
        return self.predicted == self.observed


def star_join_check(
    F: Graph, u: int, attachments: list[tuple[Graph, int]]
) -> StarJoinResult:
    """Join v_i of every always-solvable G_i to u of an always-solvable F.

    If A_F(u) = 0 the result is always solvable; if A_F(u) = 1 it is always
    solvable iff an even number of the attachment vertices have A = 1.
    """
    if not is_always_solvable(F):
        raise ContractViolation("the center graph F must be always solvable")
    for index, (G_i, _) in enumerate(attachments):
        if not is_always_solvable(G_i):
            raise ContractViolation(f"attachment {index} is not always solvable")

    a_center = activation_number(F, u)
    ones = sum(activation_number(G_i, v_i) is ActivationClass.ALWAYS for G_i, v_i in attachments)
    H = F
    for G_i, v_i in attachments:
        H, _, _ = join(H, u, G_i, v_i)

    predicted = a_center is ActivationClass.NEVER or ones % 2 == 0
    return StarJoinResult(H, predicted, is_always_solvable(H))


@dataclass(frozen=True)
class Type111Composition:
    """A Type-(1,1,1) connection built as a (1,1) join followed by a (1,-1) join."""

    graph: Graph
    inner: JoinReport
    outer: JoinReport


def compose_type_111(
    G1: Graph, x: int, G2: Graph, y: int, G3: Graph, z: int
) -> Type111Composition:
    """Join z of G3 to y of G2, then x of G1 to y; equals join3(G1, x, G2, y, G3, z)."""
    for graph, vertex, name in ((G1, x, "x"), (G2, y, "y"), (G3, z, "z")):
        if not is_always_solvable(graph):
            raise ContractViolation(f"the graph holding {name} is not always solvable")
        if activation_number(graph, vertex) is not ActivationClass.ALWAYS:
            raise ContractViolation(f"{name} is not always-activated")

    inner = join_report(G2, y, G3, z)
    middle, _, _ = join(G2, y, G3, z)
    outer = join_report(G1, x, middle, y)
    graph, _, _ = join(G1, x, middle, y)
    expected, _, _, _ = join3(G1, x, G2, y, G3, z)
    if graph != expected:
        raise _violation("two-step join differs from the three-way join", graph)
    return Type111Composition(graph, inner, outer)


# -- partitions into always-solvable subgraphs ------------------------------


@dataclass(frozen=True)
class PassCertificate:
    """Blocks of a partition of V(G), each listed in ascending order."""

    blocks: tuple[tuple[int, ...], ...]

    def to_dict(self) -> dict:
        return {"blocks": [list(b) for b in self.blocks]}

    @classmethod
    def from_dict(cls, data: dict) -> "PassCertificate":
        blocks = []
        for block in _int_list(data, "blocks"):
            if not isinstance(block, list):
                raise CertificateError("every block must be a list of vertices")
            blocks.append(tuple(_label(v, "vertex") for v in block))
        return cls(tuple(blocks))


def min_pass_tree(T: Graph) -> PassCertificate:
    """Cut edges between adjacent half-activated vertices until none are left.

    Each cut is a Type-(1,1) join taken apart, so it lowers the total nullity
    by one and adds one component; the final forest has nullity(T) + 1
    always-solvable components.
    """
    if not is_tree(T):
        raise ContractViolation("min_pass_tree needs a tree")
    forest = T
    while True:
        # activation numbers of a forest are those of its components
        acts = activation_vector(forest)
        cut = next(
            (
                e
                for e in forest.sorted_edges()
                if acts[e.u] is ActivationClass.HALF and acts[e.w] is ActivationClass.HALF
            ),
            None,
        )
        if cut is None:
            break
        logger.debug("pass: cutting (%d, %d)", cut.u, cut.w)
        forest = delete_edge(forest, cut)

    blocks = tuple(tuple(sorted(label_map)) for _, label_map in components(forest))
    if len(blocks) != nullity(T) + 1:
        raise _violation(f"{len(blocks)} blocks for nullity {nullity(T)}", T)
    return PassCertificate(blocks)


def pi_exact(G: Graph) -> int:
    """Fewest blocks in a partition of V(G) into always-solvable induced subgraphs."""
    if G.n > PI_EXACT_LIMIT:
        raise UnsupportedSize(f"pi_exact supports n <= {PI_EXACT_LIMIT}, got n = {G.n}")

    @functools.cache
    def solvable(mask: int) -> bool:
        sub, _ = induced_subgraph(G, (v for v in range(G.n) if mask >> v & 1))
        return is_always_solvable(sub)

    @functools.cache
    def fewest(mask: int) -> int:
        if mask == 0:
            return 0
        low = mask & -mask
        rest = mask ^ low
        best = G.n + 1
        sub = rest
        while True:
            block = sub | low
            if solvable(block):
                best = min(best, 1 + fewest(mask ^ block))
            if sub == 0:
                break
            sub = (sub - 1) & rest
        return best

    return fewest((1 << G.n) - 1)


def verify_pass(G: Graph, cert: PassCertificate, claim_minimal: bool = False) -> Verdict:
    """Check that the blocks partition V(G) into always-solvable induced subgraphs.

    With claim_minimal, also check the block count: nullity + 1 for trees,
    the exact minimum (n <= 10 only) otherwise.
    """
    seen: set[int] = set()
    for block in cert.blocks:
        if not block:
            return Verdict.failed("empty block")
        for v in block:
            if not 0 <= v < G.n:
                return Verdict.failed(f"vertex {v} out of range")
            if v in seen:
                return Verdict.failed(f"vertex {v} appears in two blocks")
            seen.add(v)
    if len(seen) != G.n:
        missing = sorted(set(range(G.n)) - seen)
        return Verdict.failed(f"vertices {missing} are in no block")

    for block in cert.blocks:
        sub, _ = induced_subgraph(G, block)
        if not is_always_solvable(sub):
            return Verdict.failed(f"block {list(block)} has nullity {nullity(sub)}")

    if claim_minimal:
        if is_tree(G):
            target = nullity(G) + 1
        elif G.n > PI_EXACT_LIMIT:
            raise UnsupportedSize(
                f"minimality of a non-tree PASS is only checked for n <= {PI_EXACT_LIMIT}"
            )
        else:
            target = pi_exact(G)
        if len(cert.blocks) != target:
            return Verdict.failed(f"{len(cert.blocks)} blocks, minimum is {target}")
    return Verdict.passed()


# -- always-solvable tree decomposition -------------------------------------


@dataclass(frozen=True)
class Leaf:
    vertex: int

    def to_dict(self) -> dict:
        return {"kind": "leaf", "vertex": self.vertex}


@dataclass(frozen=True)
class Join01:
    """Type-(0,1) connection: A_left(u) = 0, A_right(w) = 1."""

    left: "DecompositionCertificate"
    u: int
    w: int
    right: "DecompositionCertificate"

    def to_dict(self) -> dict:
        return {
            "kind": "join01",
            "left": self.left.to_dict(),
            "u": self.u,
            "w": self.w,
            "right": self.right.to_dict(),
        }


@dataclass(frozen=True)
class Join111:
    """Type-(1,1,1) connection: x and z both joined to y, all always-activated."""

    first: "DecompositionCertificate"
    x: int
    middle: "DecompositionCertificate"
    y: int
    last: "DecompositionCertificate"
    z: int

    def to_dict(self) -> dict:
        return {
            "kind": "join111",
            "first": self.first.to_dict(),
            "x": self.x,
            "middle": self.middle.to_dict(),
            "y": self.y,
            "last": self.last.to_dict(),
            "z": self.z,
        }


DecompositionCertificate = Union[Leaf, Join01, Join111]


def decomposition_from_dict(data) -> DecompositionCertificate:
    if not isinstance(data, dict):
        raise CertificateError("decomposition node must be an object")
    kind = data.get("kind")
    if kind == "leaf":
        return Leaf(_label(data.get("vertex"), "vertex"))
    if kind == "join01":
        return Join01(
            decomposition_from_dict(data.get("left")),
            _label(data.get("u"), "u"),
            _label(data.get("w"), "w"),
            decomposition_from_dict(data.get("right")),
        )
    if kind == "join111":
        return Join111(
            decomposition_from_dict(data.get("first")),
            _label(data.get("x"), "x"),
            decomposition_from_dict(data.get("middle")),
            _label(data.get("y"), "y"),
            decomposition_from_dict(data.get("last")),
            _label(data.get("z"), "z"),
        )
    raise CertificateError(f"unknown decomposition node kind {kind!r}")


def _split(piece: Graph, a: int, b: int) -> tuple[tuple[Graph, tuple[int, ...]], tuple[Graph, tuple[int, ...]]]:
    """Cut edge (a, b) of a tree; return the induced sides containing a and b."""
    cut = delete_edge(piece, (a, b))
    side_a = induced_subgraph(piece, component_of(cut, a))
    side_b = induced_subgraph(piece, component_of(cut, b))
    return side_a, side_b


def _decompose(piece: Graph, labels: tuple[int, ...]) -> DecompositionCertificate:
    if piece.n == 1:
        return Leaf(labels[0])

    acts = activation_vector(piece)
    pair = next(
        (
            (u, w)
            for u in range(piece.n)
            if acts[u] is ActivationClass.NEVER
            for w in piece.neighbors(u)
            if acts[w] is ActivationClass.ALWAYS
        ),
        None,
    )
    if pair is None:
        raise _violation("always-solvable tree without a (0, 1) adjacent pair", piece)
    u, w = pair
    (U, U_local), (S, S_local) = _split(piece, u, w)
    U_labels = tuple(labels[i] for i in U_local)
    S_labels = tuple(labels[i] for i in S_local)

    if is_always_solvable(U) and is_always_solvable(S):
        logger.debug("decompose: Type-(0,1) at (%d, %d)", labels[u], labels[w])
        return Join01(_decompose(U, U_labels), labels[u], labels[w], _decompose(S, S_labels))

    # Type-(1,-1): U is always solvable with A_U(u) = 1 and S has nullity 1
    w_s = S_local.index(w)
    s_acts = activation_vector(S)
    if s_acts[w_s] is not ActivationClass.HALF or nullity(S) != 1:
        raise _violation("cut is neither Type-(0,1) nor Type-(1,-1)", piece)
    z_s = next((z for z in S.neighbors(w_s) if s_acts[z] is ActivationClass.HALF), None)
    if z_s is None:
        raise _violation("half-activated vertex without a half-activated neighbor", S)
    (W, W_local), (Z, Z_local) = _split(S, w_s, z_s)
    if not (is_always_solvable(U) and is_always_solvable(W) and is_always_solvable(Z)):
        raise _violation("Type-(1,1,1) pieces are not all always solvable", piece)
    W_labels = tuple(S_labels[i] for i in W_local)
    Z_labels = tuple(S_labels[i] for i in Z_local)
    logger.debug(
        "decompose: Type-(1,1,1) at x=%d y=%d z=%d", labels[u], labels[w], S_labels[z_s]
    )
    return Join111(
        _decompose(U, U_labels),
        labels[u],
        _decompose(W, W_labels),
        labels[w],
        _decompose(Z, Z_labels),
        S_labels[z_s],
    )


def decompose_tree(T: Graph) -> DecompositionCertificate:
    """Split an always-solvable tree into Type-(0,1) and Type-(1,1,1) connections."""
    if not is_tree(T):
        raise ContractViolation("decompose_tree needs a tree")
    if not is_always_solvable(T):
        raise ContractViolation(f"tree has nullity {nullity(T)}, expected 0")
    return _decompose(T, tuple(range(T.n)))


class _Rejected(Exception):
    pass


def _piece(vertices: frozenset[int], edges: frozenset[Edge]) -> tuple[Graph, dict[int, int]]:
    index = {v: k for k, v in enumerate(sorted(vertices))}
    graph = Graph(len(index), frozenset(Edge(index[a], index[b]) for a, b in edges))
    return graph, index


def _always_solvable_with(
    vertices: frozenset[int], edges: frozenset[Edge], vertex: int, wanted: ActivationClass, name: str
) -> None:
    graph, index = _piece(vertices, edges)
    if not is_always_solvable(graph):
        raise _Rejected(f"subtree holding {name}={vertex} has nullity {nullity(graph)}")
    found = activation_number(graph, index[vertex])
    if found is not wanted:
        raise _Rejected(f"A({name}={vertex}) is {int(found)}, expected {int(wanted)}")


def _recombine(node, check: bool) -> tuple[frozenset[int], frozenset[Edge]]:
    if isinstance(node, Leaf):
        return frozenset({node.vertex}), frozenset()

    if isinstance(node, Join01):
        parts = [(node.left, node.u, "u", ActivationClass.NEVER), (node.right, node.w, "w", ActivationClass.ALWAYS)]
        links = [(node.u, node.w)]
    elif isinstance(node, Join111):
        parts = [
            (node.first, node.x, "x", ActivationClass.ALWAYS),
            (node.middle, node.y, "y", ActivationClass.ALWAYS),
            (node.last, node.z, "z", ActivationClass.ALWAYS),
        ]
        links = [(node.x, node.y), (node.y, node.z)]
    else:
        raise _Rejected(f"unknown node {node!r}")

    vertices: frozenset[int] = frozenset()
    edges: frozenset[Edge] = frozenset()
    for child, vertex, name, wanted in parts:
        child_vertices, child_edges = _recombine(child, check)
        if vertices & child_vertices:
            raise _Rejected(f"children share vertices {sorted(vertices & child_vertices)}")
        if vertex not in child_vertices:
            raise _Rejected(f"{name}={vertex} is not in its subtree")
        if check:
            _always_solvable_with(child_vertices, child_edges, vertex, wanted, name)
        vertices |= child_vertices
        edges |= child_edges
    for a, b in links:
        edges |= {Edge.of(a, b)}
    return vertices, edges


def rebuild_decomposition(cert: DecompositionCertificate) -> Graph:
    """Recombine a certificate into the graph it describes (original labels)."""
    try:
        vertices, edges = _recombine(cert, check=False)
    except _Rejected as e:
        raise CertificateError(str(e)) from e
    if vertices != frozenset(range(len(vertices))):
        raise CertificateError("certificate vertices are not 0..n-1")
    return Graph(len(vertices), edges)


def verify_decomposition(T: Graph, cert: DecompositionCertificate) -> Verdict:
    """Recombine bottom-up, rechecking every join's activation constraints."""
    try:
        vertices, edges = _recombine(cert, check=True)
    except _Rejected as e:
        return Verdict.failed(str(e))
    if vertices != frozenset(range(T.n)):
        return Verdict.failed("certificate vertices differ from the tree's")
    if edges != T.edges:
        return Verdict.failed("recombined edges differ from the tree's")
    return Verdict.passed()


# -- certificate documents ---------------------------------------------------


Certificate = Union[ChainCertificate, PassCertificate, Leaf, Join01, Join111]


def certificate_from_dict(data) -> Certificate:
    """Decode any certificate document, recognizing it by its keys."""
    if not isinstance(data, dict):
        raise CertificateError("certificate must be a JSON object")
    if "kind" in data:
        return decomposition_from_dict(data)
    if "blocks" in data:
        return PassCertificate.from_dict(data)
    if "order" in data or "nullities" in data:
        return ChainCertificate.from_dict(data)
    raise CertificateError("unrecognized certificate document")


def verify_certificate(G: Graph, cert: Certificate, claim_minimal: bool = False) -> Verdict:
    if isinstance(cert, ChainCertificate):
        return verify_chain(G, cert)
    if isinstance(cert, PassCertificate):
        return verify_pass(G, cert, claim_minimal)
    return verify_decomposition(G, cert)


# -- randomized join-table experiment ----------------------------------------


def _random_operand(rng: np.random.Generator, max_size: int) -> Graph:
    n = int(rng.integers(1, max_size + 1))
    seed = int(rng.integers(2**32))
    if rng.random() < 0.5:
        return random_tree(n, seed)
    return random_graph(n, float(rng.uniform(0.15, 0.85)), seed)


def _join_trial(seed: int, max_size: int) -> tuple[JoinReport, str, int, str, int]:
    rng = np.random.default_rng(seed)
    G1 = _random_operand(rng, max_size)
    G2 = _random_operand(rng, max_size)
    u = int(rng.integers(G1.n))
    w = int(rng.integers(G2.n))
    return join_report(G1, u, G2, w), format_edge_list(G1), u, format_edge_list(G2), w


def _row_name(row: tuple[int, int]) -> str:
    return f"({row[0]},{row[1]})"


@dataclass
class TableSummary:
    trials: int
    max_size: int
    seed: int
    row_hits: dict[str, int] = field(
        default_factory=lambda: {_row_name(row): 0 for row in _ROWS}
    )
    # row -> distinct (A_H(u), A_H(w), delta nu) seen, in the row's orientation
    observed: dict[str, set] = field(
        default_factory=lambda: {_row_name(row): set() for row in _ROWS}
    )
    violations: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "trials": self.trials,
            "max_size": self.max_size,
            "seed": self.seed,
            "ok": self.ok,
            "row_hits": dict(self.row_hits),
            "observed": {row: sorted(list(c) for c in combos) for row, combos in self.observed.items()},
            "violations": list(self.violations),
        }


def table_check(trials: int, max_size: int, seed: int = 0, jobs: int = 1) -> TableSummary:
    """Join random graph pairs and compare every outcome with the join table.

    Each trial draws from its own child seed, so the summary is the same for
    any number of worker processes.
    """
    if trials < 1:
        raise ContractViolation("trials must be at least 1")
    if max_size < 1:
        raise ContractViolation("max_size must be at least 1")
    seeds = [int(s) for s in np.random.SeedSequence(seed).generate_state(trials)]
    sizes = itertools.repeat(max_size)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_join_trial, seeds, sizes, chunksize=max(1, trials // (4 * jobs))))
    else:
        results = list(map(_join_trial, seeds, sizes))

    summary = TableSummary(trials, max_size, seed)
    for index, (report, g1, u, g2, w) in enumerate(results):
        a, b = report.type_pair
        row = table_row(a, b)
        name = _row_name(row)
        summary.row_hits[name] += 1
        post_u, post_w = report.post_activation
        if row != (a, b):
            post_u, post_w = post_w, post_u
        summary.observed[name].add((post_u, post_w, report.delta_nu))
        if not report.table_row_ok:
            summary.violations.append(
                {
                    "trial": index,
                    "graph1": g1,
                    "u": u,
                    "graph2": g2,
                    "w": w,
                    "report": report.to_dict(),
                    "expected": list(expected_join(a, b)),
                }
            )
    logger.info(
        "table check: %d trials, %d violations, hits %s",
        trials, len(summary.violations), summary.row_hits,
    )
    return summary
