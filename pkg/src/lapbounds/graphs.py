"""Immutable simple-graph core: construction, degrees, recognizers, edge-list IO.

Vertices are 0..n-1. Graphs are simple and undirected; edges are stored as a
canonical sorted tuple of (u, v) pairs with u < v, so equal graphs compare
equal and all iteration orders are deterministic.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional, Sequence

from .errors import ParseError, SelfLoopError, VertexRangeError


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with a canonical edge tuple."""

    n: int
    edges: tuple[tuple[int, int], ...]

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        nbrs: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Validate, dedupe and canonicalize an edge list into a Graph.

    Self-loops and endpoints outside 0..n-1 are rejected; parallel edges
    collapse to one.
    """
    if n < 1:
        raise ValueError(f"graph needs at least one vertex, got n={n}")
    canon: set[tuple[int, int]] = set()
    for u, v in edges:
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        if not (0 <= u < n) or not (0 <= v < n):
            raise VertexRangeError(f"edge ({u}, {v}) outside 0..{n - 1}")
        canon.add((u, v) if u < v else (v, u))
    return Graph(n=n, edges=tuple(sorted(canon)))


def complement(g: Graph) -> Graph:
    """Complement graph on the same vertex set."""
    edges = [(u, v) for u in range(g.n) for v in range(u + 1, g.n)
             if not g.has_edge(u, v)]
    return Graph(n=g.n, edges=tuple(edges))


def connected_components(g: Graph) -> list[list[int]]:
    """Components as sorted vertex lists, ordered by smallest member."""
    seen = [False] * g.n
    comps: list[list[int]] = []
    for start in range(g.n):
        if seen[start]:
            continue
        seen[start] = True
        comp = [start]
        stack = [start]
        while stack:
            x = stack.pop()
            for y in g.adjacency[x]:
                if not seen[y]:
                    seen[y] = True
                    comp.append(y)
                    stack.append(y)
        comps.append(sorted(comp))
    return comps


def degree_sequence(g: Graph) -> tuple[int, ...]:
    """Degrees sorted non-increasing."""
    return tuple(sorted((len(s) for s in g.adjacency), reverse=True))


def conjugate_sequence(d: Sequence[int]) -> tuple[int, ...]:
    """Conjugate of a non-increasing integer sequence, padded to the same length.

    Entry i (1-based) counts how many d_j are >= i. Accepts entries up to
    len(d) so that conjugation composes with itself (it is an involution on
    such sequences).
    """
    n = len(d)
    if n == 0:
        raise ValueError("empty sequence")
    prev = None
    for x in d:
        if not isinstance(x, int):
            raise ValueError(f"non-integer entry {x!r}")
        if x < 0 or x > n:
            raise ValueError(f"entry {x} outside 0..{n}")
        if prev is not None and x > prev:
            raise ValueError("sequence must be non-increasing")
        prev = x
    return tuple(sum(1 for x in d if x >= i) for i in range(1, n + 1))


def first_zagreb(g: Graph) -> int:
    """Sum of squared vertex degrees."""
    return sum(len(s) ** 2 for s in g.adjacency)


def _two_color(g: Graph) -> Optional[list[int]]:
    """Traversal 2-coloring; None when an odd cycle exists."""
    color = [-1] * g.n
    for start in range(g.n):
        if color[start] != -1:
            continue
        color[start] = 0
        queue = [start]
        while queue:
            x = queue.pop()
            for y in g.adjacency[x]:
                if color[y] == -1:
                    color[y] = 1 - color[x]
                    queue.append(y)
                elif color[y] == color[x]:
                    return None
    return color


@dataclass(frozen=True)
class GraphClass:
    """Structural flags used by the bound catalog's equality predictions."""

    component_count: int
    is_connected: bool
    is_tree: bool
    is_star: bool
    is_complete: bool
    is_complete_minus_edge: bool
    is_clique_union: bool
    is_bipartite: bool
    is_balanced_complete_bipartite: bool
    bipartition: Optional[tuple[tuple[int, ...], tuple[int, ...]]]


def classify(g: Graph) -> GraphClass:
    """Recognize the named families by degrees and traversal (no isomorphism).

    K_1 counts as a degenerate star, complete graph and clique union all at
    once; K_2 is both a star and complete.
    """
    n, m = g.n, g.m
    comps = connected_components(g)
    cc = len(comps)
    degs = degree_sequence(g)

    is_connected = cc == 1
    is_tree = is_connected and m == n - 1
    if n == 1:
        is_star = is_complete = True
    else:
        is_star = degs[0] == n - 1 and all(x == 1 for x in degs[1:])
        is_complete = degs[-1] == n - 1
    # degree multiset (n-1)^(n-2), (n-2)^2 forces K_n minus one edge: the n-2
    # full-degree vertices dominate, leaving the two others non-adjacent.
    is_cme = (n >= 3
              and degs == (n - 1,) * (n - 2) + (n - 2,) * 2)
    is_clique_union = all(
        all(g.degree(v) == len(comp) - 1 for v in comp) for comp in comps)

    color = _two_color(g)
    if color is None:
        is_bip = False
        bipartition = None
    else:
        is_bip = True
        side0 = tuple(v for v in range(n) if color[v] == 0)
        side1 = tuple(v for v in range(n) if color[v] == 1)
        bipartition = (side0, side1)
    is_bcb = (is_bip
              and n % 2 == 0
              and bipartition is not None
              and len(bipartition[0]) == n // 2
              and m == n * n // 4)

    return GraphClass(
        component_count=cc,
        is_connected=is_connected,
        is_tree=is_tree,
        is_star=is_star,
        is_complete=is_complete,
        is_complete_minus_edge=is_cme,
        is_clique_union=is_clique_union,
        is_bipartite=is_bip,
        is_balanced_complete_bipartite=is_bcb,
        bipartition=bipartition,
    )


def parse_edge_list(text: str) -> Graph:
    """Parse the plain edge-list format.

    First non-comment line is "n m"; each of the next m non-comment lines is
    "u v". Lines starting with '#' and blank lines are ignored.
    """
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        rows.append((lineno, line))
    if not rows:
        raise ParseError("empty edge-list document")
    lineno, header = rows[0]
    parts = header.split()
    if len(parts) != 2:
        raise ParseError("header must be 'n m'", position=lineno)
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise ParseError("header must hold two integers", position=lineno) from None
    if n < 1 or m < 0:
        raise ParseError(f"bad sizes n={n} m={m}", position=lineno)
    if len(rows) - 1 != m:
        raise ParseError(f"expected {m} edge lines, found {len(rows) - 1}",
                         position=lineno)
    edges = []
    for lineno, line in rows[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise ParseError("edge line must be 'u v'", position=lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError("edge endpoints must be integers",
                             position=lineno) from None
        edges.append((u, v))
    try:
        g = build_graph(n, edges)
    except (SelfLoopError, VertexRangeError) as exc:
        raise ParseError(str(exc)) from exc
    if g.m != m:
        raise ParseError(f"{m} edges declared but {g.m} distinct edges given")
    return g


def format_edge_list(g: Graph) -> str:
    """Canonical edge-list text: header then sorted edges, one per line."""
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"
