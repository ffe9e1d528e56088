"""Majorization checks and the degree-sequence comparisons built on them.

Conventions: sequences are non-increasing reals; x is majorized by y when
every prefix sum of x is at most the matching prefix sum of y and the totals
agree. Prefix comparisons use an absolute tolerance, the total comparison a
relative one, so integer degree sequences and floating spectra mix safely.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import (BadPinchError, DisconnectedGraphError,
                     DomainViolationError, LengthMismatchError,
                     NotSortedError, SequenceTooShortError)
from .graphs import Graph, conjugate_sequence, degree_sequence
from .spectra import spectrum

PREFIX_TOL = 1e-9
SUM_REL_TOL = 1e-9


@dataclass(frozen=True)
class MajorizationVerdict:
    """Outcome of one majorization comparison.

    first_failing_prefix is the 1-based index of the first prefix where the
    left side exceeds the right, or None when every prefix passes.
    """

    holds: bool
    first_failing_prefix: Optional[int]
    prefix_sums_x: tuple[float, ...]
    prefix_sums_y: tuple[float, ...]
    sums_equal: bool


def _require_sorted(x: Sequence[float], name: str) -> None:
    for i in range(len(x) - 1):
        if x[i] < x[i + 1]:
            raise NotSortedError(
                f"{name} must be non-increasing, ascends at index {i}")


def majorizes(x: Sequence[float], y: Sequence[float]) -> MajorizationVerdict:
    """Is x majorized by y? Both inputs must already be non-increasing."""
    if len(x) != len(y):
        raise LengthMismatchError(f"lengths differ: {len(x)} vs {len(y)}")
    if len(x) == 0:
        raise SequenceTooShortError("empty sequences cannot be compared")
    _require_sorted(x, "x")
    _require_sorted(y, "y")
    px: list[float] = []
    py: list[float] = []
    run_x = run_y = 0.0
    first_fail: Optional[int] = None
    for i, (a, b) in enumerate(zip(x, y)):
        run_x += a
        run_y += b
        px.append(run_x)
        py.append(run_y)
        if first_fail is None and i < len(x) - 1 and run_x > run_y + PREFIX_TOL:
            first_fail = i + 1
    total = max(1.0, abs(px[-1]))
    sums_equal = abs(px[-1] - py[-1]) <= SUM_REL_TOL * total
    holds = first_fail is None and sums_equal
    return MajorizationVerdict(
        holds=holds,
        first_failing_prefix=first_fail,
        prefix_sums_x=tuple(px),
        prefix_sums_y=tuple(py),
        sums_equal=sums_equal,
    )


def majorizes_sorted(x: Sequence[float], y: Sequence[float]) -> MajorizationVerdict:
    """majorizes() after sorting both inputs non-increasing."""
    return majorizes(tuple(sorted(x, reverse=True)),
                     tuple(sorted(y, reverse=True)))


def grone_sequence(d: Sequence[int]) -> tuple[tuple[int, ...], bool]:
    """(d_1+1, d_2, ..., d_{n-1}, d_n - 1) plus a non-increasing flag."""
    if len(d) < 2:
        raise SequenceTooShortError("need at least two degrees")
    _require_sorted(d, "degree sequence")
    seq = (d[0] + 1,) + tuple(d[1:-1]) + (d[-1] - 1,)
    mono = all(seq[i] >= seq[i + 1] for i in range(len(seq) - 1))
    return seq, mono


def merged_grone_sequence(d: Sequence[int]) -> tuple[tuple[int, ...], bool]:
    """Length n-1 variant merging the two smallest degrees.

    (d_1+1, d_2, ..., d_{n-2}, d_{n-1}+d_n-1). The trailing merged entry can
    exceed its neighbour, so the flag matters: the sequence is only usable as
    a majorization left side when it is non-increasing.
    """
    if len(d) < 3:
        raise SequenceTooShortError("need at least three degrees")
    _require_sorted(d, "degree sequence")
    seq = (d[0] + 1,) + tuple(d[1:-2]) + (d[-2] + d[-1] - 1,)
    mono = all(seq[i] >= seq[i + 1] for i in range(len(seq) - 1))
    return seq, mono


def check_grone(g: Graph) -> MajorizationVerdict:
    """Grone sequence of degrees against the spectrum (connected, n >= 2)."""
    if g.n < 2:
        raise SequenceTooShortError("need at least two vertices")
    spec = spectrum(g)
    if spec.component_count != 1:
        raise DisconnectedGraphError("comparison needs a connected graph")
    seq, _ = grone_sequence(degree_sequence(g))
    left = tuple(sorted((float(v) for v in seq), reverse=True))
    return majorizes(left, spec.mu)


def check_grone_merris(g: Graph) -> MajorizationVerdict:
    """Spectrum against the conjugate degree sequence (any graph)."""
    spec = spectrum(g)
    conj = conjugate_sequence(degree_sequence(g))
    return majorizes(spec.mu, tuple(float(v) for v in conj))


def power_sum(x: Sequence[float], alpha: float) -> float:
    """Sum of x_i^alpha; entries must be >= 0, strictly positive if alpha < 0."""
    for v in x:
        if v < 0:
            raise DomainViolationError(f"negative entry {v}")
        if v == 0 and alpha < 0:
            raise DomainViolationError("zero entry with negative exponent")
    return float(sum(v ** alpha for v in x))


def pinch(x: Sequence[float], i: int, j: int, eps: float) -> tuple[float, ...]:
    """Move eps from entry i to entry j (i < j), restoring sort order.

    Requires 0 < eps < (x_i - x_j) / 2, so the result is a strictly different
    sequence majorized by x with the same total.
    """
    _require_sorted(x, "x")
    if not (0 <= i < j < len(x)):
        raise BadPinchError(f"need 0 <= i < j < len(x), got i={i} j={j}")
    gap = x[i] - x[j]
    if not (0.0 < eps < gap / 2.0):
        raise BadPinchError(
            f"eps must lie strictly between 0 and (x_i - x_j)/2 = {gap / 2.0}")
    out = list(x)
    out[i] -= eps
    out[j] += eps
    return tuple(sorted(out, reverse=True))
