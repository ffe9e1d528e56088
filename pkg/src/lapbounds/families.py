"""Named graph families, seeded random generators, and the family DSL.

DSL grammar (one spec per string):

    K:n          complete            S:n          star
    Kme:n        complete minus one edge          (n >= 2)
    Kab:a:b      complete bipartite
    P:n          path                C:n          cycle (n >= 3)
    TREE:n:seed  uniform random labeled tree (Prufer decode)
    GNP:n:p:seed Erdos-Renyi conditioned on connectivity, p in (0, 1]
    CLIQUES:a,b,c  disjoint union of cliques of the listed sizes

For sweeps the single-n kinds accept a range in the n slot, e.g. "S:3..10",
which expands to one spec per n.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import ParseError, RetryExhaustedError
from .graphs import Graph, build_graph, connected_components
from .rng import SplitMix64

GNP_RETRY_CAP = 1000

_KINDS = ("complete", "star", "complete_minus_edge", "complete_bipartite",
          "path", "cycle", "random_tree", "gnp_connected", "clique_union")


@dataclass(frozen=True)
class FamilySpec:
    """Parameters for one generated graph."""

    kind: str
    n: Optional[int] = None
    a: Optional[int] = None
    b: Optional[int] = None
    p: Optional[float] = None
    seed: Optional[int] = None
    sizes: Optional[tuple[int, ...]] = None

    def label(self) -> str:
        """Short deterministic display string, DSL-shaped."""
        if self.kind == "complete":
            return f"K:{self.n}"
        if self.kind == "star":
            return f"S:{self.n}"
        if self.kind == "complete_minus_edge":
            return f"Kme:{self.n}"
        if self.kind == "complete_bipartite":
            return f"Kab:{self.a}:{self.b}"
        if self.kind == "path":
            return f"P:{self.n}"
        if self.kind == "cycle":
            return f"C:{self.n}"
        if self.kind == "random_tree":
            return f"TREE:{self.n}:{self.seed}"
        if self.kind == "gnp_connected":
            return f"GNP:{self.n}:{self.p}:{self.seed}"
        if self.kind == "clique_union":
            return "CLIQUES:" + ",".join(str(s) for s in self.sizes)
        raise ValueError(f"unknown kind {self.kind!r}")


def _complete_edges(vertices: list[int]) -> list[tuple[int, int]]:
    return [(vertices[i], vertices[j])
            for i in range(len(vertices)) for j in range(i + 1, len(vertices))]


def _prufer_decode(seq: list[int], n: int) -> list[tuple[int, int]]:
    """Edges of the labeled tree whose Prufer sequence is seq (len n-2)."""
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    # pointer scan keeps the smallest current leaf without a heap
    ptr = 0
    leaf = -1
    for v in seq:
        if leaf == -1:
            while degree[ptr] != 1:
                ptr += 1
            leaf = ptr
        edges.append((leaf, v))
        degree[leaf] -= 1
        degree[v] -= 1
        if degree[v] == 1 and v < ptr:
            leaf = v
        else:
            leaf = -1
    last = [v for v in range(n) if degree[v] == 1]
    edges.append((last[0], last[1]))
    return edges


def random_tree(n: int, seed: int) -> Graph:
    """Uniform random labeled tree on n vertices."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return build_graph(1, [])
    if n == 2:
        return build_graph(2, [(0, 1)])
    rng = SplitMix64(seed)
    seq = [rng.below(n) for _ in range(n - 2)]
    return build_graph(n, _prufer_decode(seq, n))


def gnp_connected(n: int, p: float, seed: int) -> Graph:
    """G(n, p) conditioned on connectivity by rejection sampling.

    Raises RetryExhaustedError after GNP_RETRY_CAP rejected draws.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if not (0.0 < p <= 1.0):
        raise ValueError(f"p must lie in (0, 1], got {p}")
    rng = SplitMix64(seed)
    for _ in range(GNP_RETRY_CAP):
        edges = [(u, v) for u in range(n) for v in range(u + 1, n)
                 if rng.uniform() < p]
        g = build_graph(n, edges)
        if len(connected_components(g)) == 1:
            return g
    raise RetryExhaustedError(
        f"no connected G({n}, {p}) draw within {GNP_RETRY_CAP} attempts")


def generate(spec: FamilySpec) -> Graph:
    """Construct the graph a FamilySpec describes."""
    kind = spec.kind
    if kind not in _KINDS:
        raise ValueError(f"unknown family kind {kind!r}")
    if kind == "complete":
        _need_n(spec, 1)
        return build_graph(spec.n, _complete_edges(list(range(spec.n))))
    if kind == "star":
        _need_n(spec, 1)
        return build_graph(spec.n, [(0, v) for v in range(1, spec.n)])
    if kind == "complete_minus_edge":
        _need_n(spec, 2)
        edges = _complete_edges(list(range(spec.n)))
        return build_graph(spec.n, edges[:-1])
    if kind == "complete_bipartite":
        if spec.a is None or spec.b is None or spec.a < 1 or spec.b < 1:
            raise ValueError("complete_bipartite needs sides a, b >= 1")
        left = list(range(spec.a))
        right = list(range(spec.a, spec.a + spec.b))
        return build_graph(spec.a + spec.b,
                           [(u, v) for u in left for v in right])
    if kind == "path":
        _need_n(spec, 1)
        return build_graph(spec.n, [(v, v + 1) for v in range(spec.n - 1)])
    if kind == "cycle":
        _need_n(spec, 3)
        edges = [(v, v + 1) for v in range(spec.n - 1)] + [(0, spec.n - 1)]
        return build_graph(spec.n, edges)
    if kind == "random_tree":
        _need_n(spec, 1)
        return random_tree(spec.n, _seed_of(spec))
    if kind == "gnp_connected":
        _need_n(spec, 1)
        if spec.p is None:
            raise ValueError("gnp_connected needs p")
        return gnp_connected(spec.n, spec.p, _seed_of(spec))
    # clique_union
    if not spec.sizes or any(s < 1 for s in spec.sizes):
        raise ValueError("clique_union needs sizes >= 1")
    edges: list[tuple[int, int]] = []
    offset = 0
    for s in spec.sizes:
        edges.extend(_complete_edges(list(range(offset, offset + s))))
        offset += s
    return build_graph(offset, edges)


def _need_n(spec: FamilySpec, minimum: int) -> None:
    if spec.n is None or spec.n < minimum:
        raise ValueError(f"{spec.kind} needs n >= {minimum}, got {spec.n}")


def _seed_of(spec: FamilySpec) -> int:
    if spec.seed is None:
        raise ValueError(f"{spec.kind} needs a seed")
    return spec.seed


def _parse_int(token: str, text: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"expected an integer, got {token!r} in {text!r}",
                         position=text.find(token)) from None


def _parse_n_token(token: str, text: str) -> list[int]:
    """Single integer or inclusive range 'a..b'."""
    if ".." in token:
        lo_s, _, hi_s = token.partition("..")
        lo = _parse_int(lo_s, text)
        hi = _parse_int(hi_s, text)
        if hi < lo:
            raise ParseError(f"empty range {token!r} in {text!r}",
                             position=text.find(token))
        return list(range(lo, hi + 1))
    return [_parse_int(token, text)]


def parse_family(text: str, allow_range: bool = False) -> list[FamilySpec]:
    """Parse one DSL string into specs (singleton unless a range expands).

    With allow_range=False a range token is rejected, which is what the
    single-graph commands use.
    """
    parts = text.strip().split(":")
    head = parts[0]
    args = parts[1:]

    def fail(msg: str, token: str = "") -> ParseError:
        pos = text.find(token) if token else 0
        return ParseError(f"{msg} in {text!r}", position=pos)

    def n_values(token: str) -> list[int]:
        values = _parse_n_token(token, text)
        if len(values) > 1 and not allow_range:
            raise fail("range not allowed here", token)
        return values

    if head in ("K", "S", "Kme", "P", "C"):
        if len(args) != 1:
            raise fail(f"{head} takes exactly one parameter")
        kind = {"K": "complete", "S": "star", "Kme": "complete_minus_edge",
                "P": "path", "C": "cycle"}[head]
        minimum = {"complete": 1, "star": 1, "complete_minus_edge": 2,
                   "path": 1, "cycle": 3}[kind]
        specs = []
        for n in n_values(args[0]):
            if n < minimum:
                raise fail(f"{head} needs n >= {minimum}", args[0])
            specs.append(FamilySpec(kind=kind, n=n))
        return specs
    if head == "Kab":
        if len(args) != 2:
            raise fail("Kab takes two parameters a:b")
        a = _parse_int(args[0], text)
        b = _parse_int(args[1], text)
        if a < 1 or b < 1:
            raise fail("Kab needs a, b >= 1", args[0])
        return [FamilySpec(kind="complete_bipartite", a=a, b=b)]
    if head == "TREE":
        if len(args) != 2:
            raise fail("TREE takes n:seed")
        seed = _parse_int(args[1], text)
        return [FamilySpec(kind="random_tree", n=n, seed=seed)
                for n in n_values(args[0])]
    if head == "GNP":
        if len(args) != 3:
            raise fail("GNP takes n:p:seed")
        try:
            p = float(args[1])
        except ValueError:
            raise fail("GNP probability must be a float", args[1]) from None
        if not (0.0 < p <= 1.0):
            raise fail("GNP probability must lie in (0, 1]", args[1])
        seed = _parse_int(args[2], text)
        return [FamilySpec(kind="gnp_connected", n=n, p=p, seed=seed)
                for n in n_values(args[0])]
    if head == "CLIQUES":
        if len(args) != 1:
            raise fail("CLIQUES takes a comma-separated size list")
        sizes = tuple(_parse_int(tok, text) for tok in args[0].split(","))
        if any(s < 1 for s in sizes):
            raise fail("clique sizes must be >= 1", args[0])
        return [FamilySpec(kind="clique_union", sizes=sizes)]
    raise fail(f"unknown family prefix {head!r}")
