"""Simple undirected graphs on vertices 0..n-1.

Graphs are immutable values: every edit returns a new graph, and edits that
renumber vertices also return the old -> new label map.
"""

from __future__ import annotations

import itertools
import sys
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import Iterable, Iterator, NamedTuple

import networkx as nx
import numpy as np

from .errors import ContractViolation, GraphFormatError
from .gf2 import BitMatrix
from .logging_config import get_logger

logger = get_logger("graph")


class Edge(NamedTuple):
    """Undirected edge stored with u < w."""

    u: int
    w: int

    @classmethod
    def of(cls, a: int, b: int) -> "Edge":
        if a == b:
            raise ContractViolation(f"self-loop at vertex {a}")
        return cls(min(a, b), max(a, b))


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; no loops, no multi-edges, endpoints < n."""

    n: int
    edges: frozenset[Edge]

    def __post_init__(self):
        if self.n < 0:
            raise ContractViolation(f"negative vertex count {self.n}")
        for e in self.edges:
            if not (isinstance(e, Edge) and 0 <= e.u < e.w < self.n):
                raise ContractViolation(f"invalid edge {e!r} for {self.n} vertices")

    @classmethod
    def from_edges(cls, n: int, pairs: Iterable[tuple[int, int]] = ()) -> "Graph":
        """Build a graph, rejecting loops, repeated edges and bad endpoints."""
        edges: set[Edge] = set()
        for a, b in pairs:
            a, b = int(a), int(b)
            if not (0 <= a < n and 0 <= b < n):
                raise ContractViolation(f"edge ({a}, {b}) has an endpoint outside 0..{n - 1}")
            e = Edge.of(a, b)
            if e in edges:
                raise ContractViolation(f"duplicate edge ({e.u}, {e.w})")
            edges.add(e)
        return cls(n, frozenset(edges))

    @cached_property
    def _adjacency(self) -> tuple[frozenset[int], ...]:
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for u, w in self.edges:
            adj[u].add(w)
            adj[w].add(u)
        return tuple(frozenset(s) for s in adj)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def vertices(self) -> range:
        return range(self.n)

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise ContractViolation(f"vertex {v} out of range for {self.n} vertices")

    def neighbors(self, v: int) -> list[int]:
        self._check_vertex(v)
        return sorted(self._adjacency[v])

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self._adjacency[v])

    def has_edge(self, a: int, b: int) -> bool:
        return a != b and Edge.of(a, b) in self.edges

    def __repr__(self) -> str:
        body = ", ".join(f"({u},{w})" for u, w in self.sorted_edges())
        return f"Graph(n={self.n}, edges=[{body}])"


def _as_edge(e) -> Edge:
    return e if isinstance(e, Edge) else Edge.of(*e)


# -- named families ----------------------------------------------------------


def empty_graph(n: int) -> Graph:
    return Graph.from_edges(n)


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ContractViolation("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, itertools.combinations(range(n), 2))


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with the center at vertex 0."""
    return Graph.from_edges(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


# -- matrices ----------------------------------------------------------------


def closed_neighborhood_matrix(G: Graph) -> BitMatrix:
    """N(G) = A(G) + I; column i is the characteristic vector of N[i]."""
    dense = np.eye(G.n, dtype=np.uint8)
    for u, w in G.edges:
        dense[u, w] = dense[w, u] = 1
    return BitMatrix.from_dense(dense)


# -- edits -------------------------------------------------------------------


def delete_vertex(G: Graph, v: int) -> tuple[Graph, dict[int, int]]:
    """Remove v and its edges; vertices above v shift down by one."""
    G._check_vertex(v)
    label_map = {old: (old if old < v else old - 1) for old in range(G.n) if old != v}
    edges = frozenset(
        Edge(label_map[u], label_map[w]) for u, w in G.edges if v not in (u, w)
    )
    return Graph(G.n - 1, edges), label_map


def delete_edge(G: Graph, e) -> Graph:
    e = _as_edge(e)
    if e not in G.edges:
        raise ContractViolation(f"edge ({e.u}, {e.w}) is not in the graph")
    return Graph(G.n, G.edges - {e})


def disjoint_union(G1: Graph, G2: Graph) -> Graph:
    """G1 keeps its labels; G2 is offset by G1.n."""
    shifted = (Edge(u + G1.n, w + G1.n) for u, w in G2.edges)
    return Graph(G1.n + G2.n, G1.edges | frozenset(shifted))


def join(G1: Graph, u: int, G2: Graph, w: int) -> tuple[Graph, int, int]:
    """Join u of G1 to w of G2 by a new edge.

    Returns:
        (H, u', w') with u' = u and w' = w + G1.n
    """
    if G1.n == 0 or G2.n == 0:
        raise ContractViolation("cannot join an empty graph")
    G1._check_vertex(u)
    G2._check_vertex(w)
    union = disjoint_union(G1, G2)
    w_new = w + G1.n
    return Graph(union.n, union.edges | {Edge(u, w_new)}), u, w_new


def join3(
    G1: Graph, x: int, G2: Graph, y: int, G3: Graph, z: int
) -> tuple[Graph, int, int, int]:
    """Join both x (of G1) and z (of G3) to y (of G2)."""
    if G1.n == 0 or G2.n == 0 or G3.n == 0:
        raise ContractViolation("cannot join an empty graph")
    G1._check_vertex(x)
    G2._check_vertex(y)
    G3._check_vertex(z)
    union = disjoint_union(disjoint_union(G1, G2), G3)
    y_new = y + G1.n
    z_new = z + G1.n + G2.n
    edges = union.edges | {Edge(x, y_new), Edge(y_new, z_new)}
    return Graph(union.n, edges), x, y_new, z_new


def induced_subgraph(G: Graph, vertices: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced by vertices, relabeled 0..k-1 in ascending order.

    Returns:
        (subgraph, labels) where labels[i] is the original label of vertex i
    """
    labels = tuple(sorted(set(vertices)))
    for v in labels:
        G._check_vertex(v)
    index = {old: new for new, old in enumerate(labels)}
    edges = frozenset(
        Edge(index[u], index[w]) for u, w in G.edges if u in index and w in index
    )
    return Graph(len(labels), edges), labels


# -- connectivity ------------------------------------------------------------


def to_networkx(G: Graph) -> nx.Graph:
    nxg = nx.Graph()
    nxg.add_nodes_from(range(G.n))
    nxg.add_edges_from(G.edges)
    return nxg


def from_networkx(nxg: nx.Graph) -> Graph:
    """Convert a networkx graph whose nodes are exactly 0..n-1."""
    n = nxg.number_of_nodes()
    if set(nxg.nodes) != set(range(n)):
        raise ContractViolation("networkx graph nodes must be 0..n-1")
    return Graph.from_edges(n, nxg.edges)


def components(G: Graph) -> list[tuple[Graph, dict[int, int]]]:
    """Connected components ordered by smallest vertex, with old -> new maps."""
    parts = sorted(
        (sorted(c) for c in nx.connected_components(to_networkx(G))), key=lambda c: c[0]
    )
    result = []
    for part in parts:
        sub, labels = induced_subgraph(G, part)
        result.append((sub, {old: new for new, old in enumerate(labels)}))
    return result


def component_of(G: Graph, v: int) -> frozenset[int]:
    G._check_vertex(v)
    return frozenset(nx.node_connected_component(to_networkx(G), v))


def is_connected(G: Graph) -> bool:
    return G.n > 0 and nx.is_connected(to_networkx(G))


def is_tree(G: Graph) -> bool:
    """Connected with n - 1 edges; K1 is a tree, K0 is not."""
    return G.n > 0 and G.edge_count == G.n - 1 and is_connected(G)


def bridges(G: Graph) -> frozenset[Edge]:
    return frozenset(Edge.of(a, b) for a, b in nx.bridges(to_networkx(G)))


def is_cut_edge(G: Graph, e) -> bool:
    """True iff deleting e increases the number of connected components."""
    e = _as_edge(e)
    return e in G.edges and e in bridges(G)


# -- generators --------------------------------------------------------------


def _tree_from_prufer(n: int, sequence: Iterable[int]) -> Graph:
    if n == 1:
        return empty_graph(1)
    if n == 2:
        return path_graph(2)
    return from_networkx(nx.from_prufer_sequence(list(sequence)))


def random_tree(n: int, seed: int | None = None) -> Graph:
    """Uniform random labeled tree via a random Prüfer sequence."""
    if n < 1:
        raise ContractViolation("a tree needs at least one vertex")
    rng = np.random.default_rng(seed)
    sequence = rng.integers(0, n, size=max(n - 2, 0)).tolist()
    return _tree_from_prufer(n, sequence)


def random_graph(n: int, p: float, seed: int | None = None) -> Graph:
    """G(n, p): each of the n(n-1)/2 edges is kept independently with probability p."""
    if n < 0:
        raise ContractViolation(f"negative vertex count {n}")
    if not 0.0 <= p <= 1.0:
        raise ContractViolation(f"edge probability {p} outside [0, 1]")
    rng = np.random.default_rng(seed)
    pairs = list(itertools.combinations(range(n), 2))
    keep = rng.random(len(pairs)) < p
    return Graph(n, frozenset(Edge(u, w) for (u, w), k in zip(pairs, keep) if k))


def prufer_trees(n: int) -> Iterator[Graph]:
    """Every labeled tree on n vertices, one per Prüfer sequence (n^(n-2) trees)."""
    if n < 1:
        return
    if n <= 2:
        yield _tree_from_prufer(n, ())
        return
    for sequence in itertools.product(range(n), repeat=n - 2):
        yield _tree_from_prufer(n, sequence)


def nonisomorphic_trees(n: int) -> Iterator[Graph]:
    """One tree per isomorphism class on n vertices."""
    if n < 1:
        return
    if n == 1:
        yield empty_graph(1)
        return
    for t in nx.nonisomorphic_trees(n):
        yield from_networkx(nx.convert_node_labels_to_integers(t))


def all_graphs(n: int) -> Iterator[Graph]:
    """Every graph on vertex set 0..n-1 (2^(n(n-1)/2) of them)."""
    pairs = [Edge(u, w) for u, w in itertools.combinations(range(n), 2)]
    for mask in range(1 << len(pairs)):
        yield Graph(n, frozenset(e for k, e in enumerate(pairs) if mask >> k & 1))


# -- edge-list text format ---------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse 'n' followed by one 'u w' pair per line; '#' starts a comment."""
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            lines.append((lineno, body.split()))
    if not lines:
        raise GraphFormatError("empty edge list: expected a vertex count")

    lineno, header = lines[0]
    if len(header) != 1:
        raise GraphFormatError(f"line {lineno}: expected the vertex count alone")
    try:
        n = int(header[0])
    except ValueError as e:
        raise GraphFormatError(f"line {lineno}: bad vertex count {header[0]!r}") from e
    if n < 0:
        raise GraphFormatError(f"line {lineno}: negative vertex count")

    pairs = []
    for lineno, fields in lines[1:]:
        if len(fields) != 2:
            raise GraphFormatError(f"line {lineno}: expected 'u w', got {' '.join(fields)!r}")
        try:
            pairs.append((int(fields[0]), int(fields[1])))
        except ValueError as e:
            raise GraphFormatError(f"line {lineno}: non-integer vertex") from e
    try:
        return Graph.from_edges(n, pairs)
    except ContractViolation as e:
        raise GraphFormatError(str(e)) from e


def format_edge_list(G: Graph) -> str:
    lines = [str(G.n)] + [f"{u} {w}" for u, w in G.sorted_edges()]
    return "\n".join(lines) + "\n"


def read_graph(path: str | Path) -> Graph:
    """Read an edge-list file; '-' reads standard input."""
    try:
        text = sys.stdin.read() if str(path) == "-" else Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as e:
        raise GraphFormatError(f"cannot read {path}: {e}") from e
    graph = parse_edge_list(text)
    logger.debug("read %s: n=%d m=%d", path, graph.n, graph.edge_count)
    return graph
