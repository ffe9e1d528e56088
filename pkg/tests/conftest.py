"""Shared corpora and strategies for the test suite.

Random corpora are seeded through the package's own splitmix64 stream so
every run sees exactly the same graphs.
"""
from __future__ import annotations

from functools import lru_cache

from hypothesis import strategies as st

import lapbounds as lb


def graph_strategy(max_n: int = 9):
    """Arbitrary simple graphs up to max_n vertices."""

    @st.composite
    def build(draw):
        n = draw(st.integers(min_value=1, max_value=max_n))
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        keep = draw(st.lists(st.booleans(), min_size=len(pairs),
                             max_size=len(pairs)))
        return lb.build_graph(n, [e for e, k in zip(pairs, keep) if k])

    return build()


@lru_cache(maxsize=None)
def named_corpus() -> tuple[tuple[str, lb.Graph], ...]:
    """Every named family at small sizes, including disconnected ones."""
    labels = []
    for n in range(1, 13):
        labels.append(f"K:{n}")
        labels.append(f"S:{n}")
    for n in range(2, 13):
        labels.append(f"Kme:{n}")
    for n in range(3, 13):
        labels.append(f"P:{n}")
        labels.append(f"C:{n}")
    for a in range(1, 7):
        for b in range(a, 7):
            labels.append(f"Kab:{a}:{b}")
    labels.extend(["CLIQUES:3,2", "CLIQUES:4,4,1", "CLIQUES:5,3,2,1",
                   "CLIQUES:1,1,1", "CLIQUES:2,2,2,2"])
    return tuple((lab, lb.generate(lb.parse_family(lab)[0]))
                 for lab in labels)


@lru_cache(maxsize=None)
def gnp_corpus(count: int = 200, seed: int = 2026, n_min: int = 4,
               n_max: int = 12, p: float = 0.5) -> tuple[tuple[str, lb.Graph], ...]:
    """Seeded connected G(n, p) instances."""
    out = []
    for i in range(count):
        rng = lb.SplitMix64(lb.splitmix64(seed, i))
        n = rng.randrange(n_min, n_max)
        out.append((f"gnp-{i}", lb.gnp_connected(n, p, rng.next_u64())))
    return tuple(out)


@lru_cache(maxsize=None)
def tree_corpus(count: int = 100, seed: int = 515,
                n_min: int = 2, n_max: int = 16) -> tuple[tuple[str, lb.Graph], ...]:
    """Seeded uniform random labeled trees."""
    out = []
    for i in range(count):
        rng = lb.SplitMix64(lb.splitmix64(seed, i))
        n = rng.randrange(n_min, n_max)
        out.append((f"tree-{i}", lb.random_tree(n, rng.next_u64())))
    return tuple(out)


@lru_cache(maxsize=None)
def clique_union_corpus(count: int = 50, seed: int = 77,
                        n_min: int = 4, n_max: int = 12) -> tuple[tuple[str, lb.Graph], ...]:
    """Seeded disjoint unions of cliques with blocks of size at most 5."""
    out = []
    for i in range(count):
        rng = lb.SplitMix64(lb.splitmix64(seed, i))
        n = rng.randrange(n_min, n_max)
        sizes = []
        remaining = n
        while remaining > 0:
            s = 1 + rng.below(min(remaining, 5))
            sizes.append(s)
            remaining -= s
        spec = lb.FamilySpec(kind="clique_union", sizes=tuple(sizes))
        out.append((spec.label(), lb.generate(spec)))
    return tuple(out)
