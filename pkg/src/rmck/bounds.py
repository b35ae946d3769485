"""Closed-form bounds on rmc_k, exact-value classes and the feasible k range."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .graph import (
    Graph,
    GraphError,
    common_neighbor_min,
    complement,
    cut_vertices,
    diameter,
    edge_connectivity,
    is_triangle_free,
    vertex_connectivity,
)
from .packing import stp_number, tau_at_least

BASELINE = "tree-packing baseline"
COMMON_NEIGHBOR = "common-neighbor bound"
CONNECTIVITY = "connectivity bound"
ROUGH = "rough bound"

TRIANGLE_FREE = "triangle-free"
DIAM3 = "diameter>=3"
CUT_VERTEX = "cut-vertex"
NOT_EDGE_CONNECTED = "not-(k+1)-edge-connected"
COMPLEMENT_4 = "complement-4-connected"
DEGREE_CONDITION = "degree-condition"


@dataclass
class Bound:
    value: int
    source: str

    def to_dict(self) -> dict:
        return {"value": self.value, "source": self.source}


@dataclass
class BoundsReport:
    k: int
    feasible: bool
    lower: Optional[Bound] = None
    uppers: list[Bound] = field(default_factory=list)
    exact: Optional[Bound] = None

    @property
    def min_upper(self) -> Optional[int]:
        return min((b.value for b in self.uppers), default=None)

    @property
    def predicate(self) -> Optional[str]:
        if self.exact is not None and self.exact.source != "solver":
            return self.exact.source
        return None

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "feasible": self.feasible,
            "exact": None if self.exact is None else self.exact.value,
            "lower": None if self.lower is None else self.lower.to_dict(),
            "uppers": [b.to_dict() for b in self.uppers],
            "predicate": self.predicate,
        }


def _require_simple_connected(g: Graph) -> None:
    if not g.is_simple():
        raise GraphError("bounds are stated for simple graphs")
    if not g.is_connected():
        raise GraphError("graph is not connected")
    if g.n < 2:
        raise GraphError("need at least two vertices")


def k_range(g: Graph) -> tuple[int, int]:
    """Feasible k interval ``(1, T(G))``; on simple graphs ``T(G) <= n // 2``."""
    _require_simple_connected(g)
    t = stp_number(g)
    assert t <= g.n // 2, f"packing number {t} exceeds n//2 on a simple graph"
    return 1, t


def _degree_condition(g: Graph) -> bool:
    n, m = g.n, g.m
    if n <= 3:
        return False
    return max(g.degrees()) < n - Fraction(2 * m - 3 * (n - 1), n - 3)


def _complement_4_connected(g: Graph) -> bool:
    h = complement(g)
    return h.n >= 5 and vertex_connectivity(h) >= 4


def exact_class_predicates(g: Graph, k: int) -> list[str]:
    """Names of every exact-class condition ``g`` satisfies for this ``k``."""
    out = []
    if k == 1:
        if g.n < 3:
            return out
        checks = [
            (TRIANGLE_FREE, is_triangle_free),
            (DIAM3, lambda h: diameter(h) >= 3),
            (CUT_VERTEX, lambda h: bool(cut_vertices(h))),
            (COMPLEMENT_4, _complement_4_connected),
            (DEGREE_CONDITION, _degree_condition),
        ]
    else:
        checks = [
            (TRIANGLE_FREE, is_triangle_free),
            (DIAM3, lambda h: diameter(h) >= 3),
            (CUT_VERTEX, lambda h: bool(cut_vertices(h))),
            (NOT_EDGE_CONNECTED, lambda h: edge_connectivity(h) < k + 1),
        ]
    for name, test in checks:
        if test(g):
            out.append(name)
    return out


def classify_exact(g: Graph, k: int) -> Optional[Bound]:
    """``m - k(n-2)`` with the first matching predicate name, else ``None``.

    Requires ``tau(G) >= k``; k = 1 uses its own five conditions (n >= 3).
    """
    _require_simple_connected(g)
    if not tau_at_least(g, k):
        raise GraphError(f"no {k} edge-disjoint spanning trees; nothing to classify")
    hits = exact_class_predicates(g, k)
    if not hits:
        return None
    return Bound(g.m - k * (g.n - 2), hits[0])


def bounds(g: Graph, k: int) -> BoundsReport:
    _require_simple_connected(g)
    if not tau_at_least(g, k):
        return BoundsReport(k, False)
    n, m = g.n, g.m
    base = m - k * (n - 2)
    report = BoundsReport(k, True, Bound(base, BASELINE))
    report.uppers = [
        Bound(base + common_neighbor_min(g), COMMON_NEIGHBOR),
        Bound(base + vertex_connectivity(g), CONNECTIVITY),
        Bound(m - (k - 1) * (n - 2), ROUGH),
    ]
    report.exact = classify_exact(g, k)
    return report
