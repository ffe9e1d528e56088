"""Catalog of degree-sequence bounds on spectral invariants, with verdicts.

Every catalog entry is evaluated at face value, exactly as stated: validity is
a measured outcome, not an assumption, and a VIOLATED verdict is a result, not
an error. Two entries (P2_LOWER and the Kf bound derived from it, KF_NEW) are
genuinely violated on some dense graphs whose merged degree sequence is not
non-increasing; --strict-applicability narrows them to the monotone case.
The tree bound R1_TREE_HIGH is likewise violated at negative exponents on
non-star trees. The harness reports all of this as-is.

Bound ids are stable strings used by the CLI and in reports:

    id            direction  parameter      applies to
    P1_LOWER      lower      alpha > 1      connected, n >= 2
    P1_UPPER      upper      0 < alpha < 1  connected, n >= 2
    P2_LOWER      lower      alpha < 0      connected, n >= 3
    KF_NEW        lower      -              connected, n >= 3
    KF_ZT         lower      -              connected, n >= 2
    KF_COMPARE    compare    -              connected, n >= 3
    R1_TREE_HIGH  upper      alpha > 1 or alpha < 0   tree, n >= 2
    R1_TREE_LOW   lower      0 < alpha < 1  tree, n >= 2
    RP_MOMENT     lower      integer k >= 1 any graph
    LEE_DEGREE    lower      -              connected, n >= 2
    LEE_TREE      upper      -              tree, n >= 2
    LEE_CLIQUE    lower      -              any graph, n >= 2
    LEE_R2A_M     lower      -              connected, n >= 3
    LEE_R2A_T     lower      -              connected, n >= 3
    LEE_R2B       strict lower (G plus complement)     any graph, n >= 2
    LEE_R2C_M1    lower      -              connected bipartite, n >= 3
    LEE_R2C_T     lower      -              connected bipartite, n >= 3

KF_COMPARE is a comparison record, not a bound: lhs is the KF_NEW right-hand
side and rhs the KF_ZT right-hand side, so its margin reports which of the two
Kf lower bounds is larger on this graph. It is never VIOLATED.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Optional, Union

from .errors import (BadParameterError, DisconnectedGraphError,
                     SequenceTooShortError, UnknownBoundError)
from .graphs import (Graph, GraphClass, classify, complement, degree_sequence,
                     conjugate_sequence, first_zagreb)
from .majorization import merged_grone_sequence
from .spectra import lee, s_alpha, spanning_trees_exact, spectrum

EQUALITY_REL_TOL = 1e-7

HOLDS = "HOLDS"
EQUALITY = "EQUALITY"
VIOLATED = "VIOLATED"
NOT_APPLICABLE = "NOT_APPLICABLE"

Param = Union[float, int, None]


class GraphContext:
    """Per-graph cache shared by the evaluators of all catalog entries."""

    def __init__(self, g: Graph):
        self.graph = g

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return degree_sequence(self.graph)

    @cached_property
    def conjugate(self) -> tuple[int, ...]:
        return conjugate_sequence(self.degrees)

    @cached_property
    def gclass(self) -> GraphClass:
        return classify(self.graph)

    @cached_property
    def spec(self):
        return spectrum(self.graph)

    @cached_property
    def lee_value(self) -> float:
        return lee(self.spec)

    @cached_property
    def complement_lee(self) -> float:
        return lee(spectrum(complement(self.graph)))

    @cached_property
    def complement_class(self) -> GraphClass:
        return classify(complement(self.graph))

    @cached_property
    def tree_count(self) -> int:
        return spanning_trees_exact(self.graph)

    @cached_property
    def zagreb(self) -> int:
        return first_zagreb(self.graph)

    @cached_property
    def merged_monotone(self) -> bool:
        return merged_grone_sequence(self.degrees)[1]


def _alpha_above_1(a: float) -> bool:
    return a > 1.0


def _alpha_unit(a: float) -> bool:
    return 0.0 < a < 1.0


def _alpha_negative(a: float) -> bool:
    return a < 0.0


def _alpha_tree_high(a: float) -> bool:
    return a > 1.0 or a < 0.0


def _connected_n(minimum: int) -> Callable[[GraphContext], bool]:
    return lambda ctx: ctx.gclass.is_connected and ctx.graph.n >= minimum


def _tree(ctx: GraphContext) -> bool:
    return ctx.gclass.is_tree and ctx.graph.n >= 2


def _any_n2(ctx: GraphContext) -> bool:
    return ctx.graph.n >= 2


def _always(ctx: GraphContext) -> bool:
    return True


def _bip_n3(ctx: GraphContext) -> bool:
    return (ctx.gclass.is_connected and ctx.gclass.is_bipartite
            and ctx.graph.n >= 3)


def _p1_rhs(ctx: GraphContext, a: float) -> float:
    d = ctx.degrees
    mid = sum(x ** a for x in d[1:-1])
    return (d[0] + 1) ** a + mid + float(d[-1] - 1) ** a


def _p2_rhs(ctx: GraphContext, a: float) -> float:
    d = ctx.degrees
    mid = sum(x ** a for x in d[1:-2])
    return (d[0] + 1) ** a + mid + float(d[-2] + d[-1] - 1) ** a


def _kf_actual(ctx: GraphContext) -> float:
    if ctx.graph.n == 1:
        return 0.0
    return ctx.graph.n * s_alpha(ctx.spec, -1.0)


def _kf_new_rhs(ctx: GraphContext) -> float:
    return ctx.graph.n * _p2_rhs(ctx, -1.0)


def _kf_zt_rhs(ctx: GraphContext) -> float:
    return -1.0 + (ctx.graph.n - 1) * sum(1.0 / x for x in ctx.degrees)


def _r1_rhs(ctx: GraphContext, a: float) -> float:
    # only the strictly positive conjugate entries enter, by the summation
    # limit d_1; safe for negative exponents
    d1 = ctx.degrees[0]
    return float(sum(x ** a for x in ctx.conjugate[:d1]))


def _rp_rhs(ctx: GraphContext, k: int) -> float:
    return float(sum(x * (1 + x) ** (k - 1) for x in ctx.degrees))


def _lee_degree_rhs(ctx: GraphContext) -> float:
    d = ctx.degrees
    mid = sum(math.exp(x) for x in d[1:-1])
    return math.exp(d[0] + 1) + mid + math.exp(d[-1] - 1)


def _lee_tree_rhs(ctx: GraphContext) -> float:
    d1 = ctx.degrees[0]
    return (ctx.graph.n - d1) + sum(math.exp(x) for x in ctx.conjugate[:d1])


def _lee_clique_rhs(ctx: GraphContext) -> float:
    acc = 0.0
    for x in ctx.degrees:
        acc += x / (1.0 + x) * (math.exp(1.0 + x) - 1.0)
    return ctx.graph.n + acc


def _lee_r2a_m_rhs(ctx: GraphContext) -> float:
    n, m = ctx.graph.n, ctx.graph.m
    d1 = ctx.degrees[0]
    return 1.0 + math.exp(1 + d1) + (n - 2) * math.exp((2 * m - 1 - d1) / (n - 2))


def _lee_r2a_t_rhs(ctx: GraphContext) -> float:
    n = ctx.graph.n
    d1 = ctx.degrees[0]
    t = ctx.tree_count
    expo = (t * n / (1.0 + d1)) ** (1.0 / (n - 2))
    return 1.0 + math.exp(1 + d1) + (n - 2) * math.exp(expo)


def _lee_r2b_lhs(ctx: GraphContext) -> float:
    return ctx.lee_value + ctx.complement_lee


def _lee_r2b_rhs(ctx: GraphContext) -> float:
    n = ctx.graph.n
    return 2.0 + 2.0 * (n - 1) * math.exp(n / 2.0)


def _lee_r2c_m1_rhs(ctx: GraphContext) -> float:
    n, m = ctx.graph.n, ctx.graph.m
    root = math.sqrt(ctx.zagreb / n)
    return (1.0 + math.exp(2.0 * root)
            + (n - 2) * math.exp((2 * m - 2.0 * root) / (n - 2)))


def _lee_r2c_t_rhs(ctx: GraphContext) -> float:
    n = ctx.graph.n
    t = ctx.tree_count
    root = math.sqrt(ctx.zagreb / n)
    expo = (t * n * math.sqrt(n) / (2.0 * math.sqrt(ctx.zagreb))) ** (1.0 / (n - 2))
    return 1.0 + math.exp(2.0 * root) + (n - 2) * math.exp(expo)


def _eq_star(ctx: GraphContext, param: Param) -> bool:
    return ctx.gclass.is_star


def _eq_star_or_k3(ctx: GraphContext, param: Param) -> bool:
    return ctx.gclass.is_star or (ctx.gclass.is_complete and ctx.graph.n == 3)


def _eq_complete_or_star(ctx: GraphContext, param: Param) -> bool:
    return ctx.gclass.is_complete or ctx.gclass.is_star


def _eq_clique_union(ctx: GraphContext, param: Param) -> bool:
    return ctx.gclass.is_clique_union


def _eq_rp(ctx: GraphContext, param: Param) -> bool:
    if param in (1, 2):
        return True
    return ctx.gclass.is_clique_union


def _eq_balanced_bipartite(ctx: GraphContext, param: Param) -> bool:
    return ctx.gclass.is_balanced_complete_bipartite


def _eq_complete_multipartite(ctx: GraphContext, param: Param) -> bool:
    # measured equality family: complement is a union of cliques
    return ctx.complement_class.is_clique_union


def _eq_never(ctx: GraphContext, param: Param) -> bool:
    return False


@dataclass(frozen=True)
class BoundSpec:
    """One catalog entry: predicates plus lhs/rhs evaluators."""

    bound_id: str
    direction: str  # "lower" | "upper" | "strict_lower" | "compare"
    param_kind: Optional[str]  # "alpha" | "k" | None
    param_ok: Optional[Callable[[float], bool]]
    applies: Callable[[GraphContext], bool]
    lhs: Callable[[GraphContext, Param], float]
    rhs: Callable[[GraphContext, Param], float]
    predicts_equality: Callable[[GraphContext, Param], bool]
    strict_toggle: bool = False  # --strict-applicability adds the monotone gate


def _lhs_s_alpha(ctx: GraphContext, a: Param) -> float:
    return s_alpha(ctx.spec, float(a))


def _lhs_lee(ctx: GraphContext, param: Param) -> float:
    return ctx.lee_value


CATALOG: tuple[BoundSpec, ...] = (
    BoundSpec("P1_LOWER", "lower", "alpha", _alpha_above_1, _connected_n(2),
              _lhs_s_alpha, lambda ctx, a: _p1_rhs(ctx, a), _eq_star),
    BoundSpec("P1_UPPER", "upper", "alpha", _alpha_unit, _connected_n(2),
              _lhs_s_alpha, lambda ctx, a: _p1_rhs(ctx, a), _eq_star),
    BoundSpec("P2_LOWER", "lower", "alpha", _alpha_negative, _connected_n(3),
              _lhs_s_alpha, lambda ctx, a: _p2_rhs(ctx, a), _eq_star_or_k3,
              strict_toggle=True),
    BoundSpec("KF_NEW", "lower", None, None, _connected_n(3),
              lambda ctx, p: _kf_actual(ctx), lambda ctx, p: _kf_new_rhs(ctx),
              _eq_star_or_k3, strict_toggle=True),
    BoundSpec("KF_ZT", "lower", None, None, _connected_n(2),
              lambda ctx, p: _kf_actual(ctx), lambda ctx, p: _kf_zt_rhs(ctx),
              _eq_complete_multipartite),
    BoundSpec("KF_COMPARE", "compare", None, None, _connected_n(3),
              lambda ctx, p: _kf_new_rhs(ctx), lambda ctx, p: _kf_zt_rhs(ctx),
              _eq_star_or_k3),
    BoundSpec("R1_TREE_HIGH", "upper", "alpha", _alpha_tree_high, _tree,
              _lhs_s_alpha, lambda ctx, a: _r1_rhs(ctx, a), _eq_star),
    BoundSpec("R1_TREE_LOW", "lower", "alpha", _alpha_unit, _tree,
              _lhs_s_alpha, lambda ctx, a: _r1_rhs(ctx, a), _eq_star),
    BoundSpec("RP_MOMENT", "lower", "k", lambda k: k >= 1, _always,
              _lhs_s_alpha, lambda ctx, k: _rp_rhs(ctx, k), _eq_rp),
    BoundSpec("LEE_DEGREE", "lower", None, None, _connected_n(2),
              _lhs_lee, lambda ctx, p: _lee_degree_rhs(ctx), _eq_star),
    BoundSpec("LEE_TREE", "upper", None, None, _tree,
              _lhs_lee, lambda ctx, p: _lee_tree_rhs(ctx), _eq_star),
    BoundSpec("LEE_CLIQUE", "lower", None, None, _any_n2,
              _lhs_lee, lambda ctx, p: _lee_clique_rhs(ctx), _eq_clique_union),
    BoundSpec("LEE_R2A_M", "lower", None, None, _connected_n(3),
              _lhs_lee, lambda ctx, p: _lee_r2a_m_rhs(ctx),
              _eq_complete_or_star),
    BoundSpec("LEE_R2A_T", "lower", None, None, _connected_n(3),
              _lhs_lee, lambda ctx, p: _lee_r2a_t_rhs(ctx),
              _eq_complete_or_star),
    BoundSpec("LEE_R2B", "strict_lower", None, None, _any_n2,
              lambda ctx, p: _lee_r2b_lhs(ctx), lambda ctx, p: _lee_r2b_rhs(ctx),
              _eq_never),
    BoundSpec("LEE_R2C_M1", "lower", None, None, _bip_n3,
              _lhs_lee, lambda ctx, p: _lee_r2c_m1_rhs(ctx),
              _eq_balanced_bipartite),
    BoundSpec("LEE_R2C_T", "lower", None, None, _bip_n3,
              _lhs_lee, lambda ctx, p: _lee_r2c_t_rhs(ctx),
              _eq_balanced_bipartite),
)

BOUND_IDS: tuple[str, ...] = tuple(spec.bound_id for spec in CATALOG)
_BY_ID = {spec.bound_id: spec for spec in CATALOG}


@dataclass(frozen=True)
class BoundResult:
    """Verdict for one (bound, parameter) pair on one graph."""

    bound_id: str
    param: Param
    applicable: bool
    lhs: Optional[float]
    rhs: Optional[float]
    margin: Optional[float]
    verdict: str
    predicted_equality: bool
    agreement: bool


def _check_param(spec: BoundSpec, param: Param) -> Param:
    if spec.param_kind is None:
        if param is not None:
            raise BadParameterError(f"{spec.bound_id} takes no parameter")
        return None
    if param is None:
        raise BadParameterError(f"{spec.bound_id} needs a {spec.param_kind}")
    if spec.param_kind == "k":
        if not isinstance(param, int) or isinstance(param, bool):
            raise BadParameterError(f"{spec.bound_id} needs an integer k")
    else:
        param = float(param)
        if not math.isfinite(param):
            raise BadParameterError("alpha must be finite")
    if not spec.param_ok(param):
        raise BadParameterError(
            f"parameter {param} outside the legal range of {spec.bound_id}")
    return param


def _not_applicable(spec: BoundSpec, param: Param) -> BoundResult:
    return BoundResult(bound_id=spec.bound_id, param=param, applicable=False,
                       lhs=None, rhs=None, margin=None,
                       verdict=NOT_APPLICABLE, predicted_equality=False,
                       agreement=True)


def evaluate_bound(bound_id: str, g: Graph, param: Param = None, *,
                   strict_applicability: bool = False,
                   ctx: Optional[GraphContext] = None) -> BoundResult:
    """Evaluate one catalog entry on a graph.

    Inapplicable graphs yield NOT_APPLICABLE with empty numeric fields; a
    wrong parameter raises BadParameterError; an unknown id raises
    UnknownBoundError.
    """
    spec = _BY_ID.get(bound_id)
    if spec is None:
        raise UnknownBoundError(f"no bound with id {bound_id!r}")
    param = _check_param(spec, param)
    if ctx is None:
        ctx = GraphContext(g)
    elif ctx.graph is not g and ctx.graph != g:
        raise ValueError("context belongs to a different graph")
    if not spec.applies(ctx):
        return _not_applicable(spec, param)
    if strict_applicability and spec.strict_toggle and not ctx.merged_monotone:
        return _not_applicable(spec, param)

    lhs = spec.lhs(ctx, param)
    rhs = spec.rhs(ctx, param)
    scale = max(1.0, abs(lhs), abs(rhs))
    if spec.direction in ("lower", "strict_lower", "compare"):
        margin = lhs - rhs
    else:
        margin = rhs - lhs
    if abs(lhs - rhs) <= EQUALITY_REL_TOL * scale:
        verdict = EQUALITY
    elif margin < -EQUALITY_REL_TOL * scale and spec.direction != "compare":
        verdict = VIOLATED
    else:
        verdict = HOLDS
    predicted = spec.predicts_equality(ctx, param)
    agreement = (verdict == EQUALITY) == predicted
    return BoundResult(bound_id=bound_id, param=param, applicable=True,
                       lhs=lhs, rhs=rhs, margin=margin, verdict=verdict,
                       predicted_equality=predicted, agreement=agreement)


def evaluate_catalog(g: Graph, alphas: tuple[float, ...],
                     ks: tuple[int, ...], *,
                     strict_applicability: bool = False,
                     bound_ids: Optional[tuple[str, ...]] = None,
                     ctx: Optional[GraphContext] = None) -> list[BoundResult]:
    """Evaluate the whole catalog over the parameter grids.

    One BoundResult per (bound, legal parameter) pair, in catalog order with
    parameters ascending. Grids must avoid the trivial exponents 0 and 1.
    """
    for a in alphas:
        if a in (0.0, 1.0):
            raise BadParameterError("alpha grid must avoid 0 and 1")
    for k in ks:
        if not isinstance(k, int) or k < 1:
            raise BadParameterError("k grid must hold integers >= 1")
    if ctx is None:
        ctx = GraphContext(g)
    wanted = set(bound_ids) if bound_ids is not None else None
    if wanted is not None:
        unknown = wanted - set(BOUND_IDS)
        if unknown:
            raise UnknownBoundError(f"no bound with id {sorted(unknown)!r}")
    results = []
    for spec in CATALOG:
        if wanted is not None and spec.bound_id not in wanted:
            continue
        if spec.param_kind == "alpha":
            params: list[Param] = sorted(a for a in alphas if spec.param_ok(a))
        elif spec.param_kind == "k":
            params = sorted(k for k in ks if spec.param_ok(k))
        else:
            params = [None]
        for p in params:
            results.append(evaluate_bound(spec.bound_id, g, p,
                                          strict_applicability=strict_applicability,
                                          ctx=ctx))
    return results


@dataclass(frozen=True)
class KfComparison:
    """Side-by-side record of the two Kf lower bounds on one graph.

    larger is "new", "zt" or "equal" (at the shared equality tolerance);
    the validity flags report whether each bound actually holds here.
    """

    kf_actual: float
    kf_new_rhs: float
    kf_zt_rhs: float
    larger: str
    new_valid: bool
    zt_valid: bool


def kf_compare(g: Graph) -> KfComparison:
    """Compare the two Kf lower bounds (connected, n >= 3)."""
    if g.n < 3:
        raise SequenceTooShortError("comparison needs n >= 3")
    ctx = GraphContext(g)
    if not ctx.gclass.is_connected:
        raise DisconnectedGraphError("comparison needs a connected graph")
    actual = _kf_actual(ctx)
    new_rhs = _kf_new_rhs(ctx)
    zt_rhs = _kf_zt_rhs(ctx)
    scale = max(1.0, abs(new_rhs), abs(zt_rhs))
    if abs(new_rhs - zt_rhs) <= EQUALITY_REL_TOL * scale:
        larger = "equal"
    elif new_rhs > zt_rhs:
        larger = "new"
    else:
        larger = "zt"
    tol = EQUALITY_REL_TOL * max(1.0, abs(actual))
    return KfComparison(
        kf_actual=actual,
        kf_new_rhs=new_rhs,
        kf_zt_rhs=zt_rhs,
        larger=larger,
        new_valid=actual >= new_rhs - tol,
        zt_valid=actual >= zt_rhs - tol,
    )
