"""Minimal bridge/central-node counts required for k-integration.

Under the equal-size islands model (r communities of n nodes each,
every community completely connected, n >= r) the minimum counts a
k-integrated network must reach are known exactly for k in {1, 2, 3}
and for k >= r+1:

    k = 1:      B = n^2 r(r-1)/2      C = r n
    k = 2:      B = (r-1) n           C = (r-1) n + 1
    k = 3:      B = r(r-1)/2          C = r
    3 < k < r+1:  B in [r-1, r(r-1)/2] (exact value open)   C = r
    k >= r+1:   B = r-1               C = r

These are necessary conditions: a network below either count is
provably k-segregated, but meeting both proves nothing, so integration
still has to be confirmed by measurement. Counts grow quadratically
(B_1 is ~28 million already at r=8, n=1000).
"""

from __future__ import annotations

from dataclasses import dataclass

from . import graph as graphmod
from .errors import InvalidParamsError, ModelViolationError
from .graph import CommunityGraph


@dataclass(frozen=True)
class Bound:
    """An integer threshold, exact when ``lower == upper``."""

    lower: int
    upper: int

    def __post_init__(self) -> None:
        if self.lower > self.upper:
            raise InvalidParamsError(f"bound lower {self.lower} exceeds upper {self.upper}")

    @property
    def exact(self) -> bool:
        return self.lower == self.upper

    @property
    def value(self) -> int:
        if not self.exact:
            raise InvalidParamsError(f"bound [{self.lower}, {self.upper}] has no single value")
        return self.lower


@dataclass(frozen=True)
class SegregationVerdict:
    """Either provably segregated (with the failed count as reason) or undetermined."""

    provably_segregated: bool
    reason: str | None = None


def _validate(r: int, n: int, k: int) -> None:
    if not (isinstance(r, int) and isinstance(n, int) and isinstance(k, int)):
        raise InvalidParamsError("r, n and k must be integers")
    if r < 1 or n < 1:
        raise InvalidParamsError(f"need r >= 1 and n >= 1, got r={r}, n={n}")
    if k < 1:
        raise InvalidParamsError(f"integration bound must be >= 1, got k={k}")
    if n < r:
        raise ModelViolationError(f"the model requires n >= r, got n={n} < r={r}")


def bridge_threshold(r: int, n: int, k: int) -> Bound:
    """Minimum bridge count B_k, exact or as an interval for 3 < k < r+1."""
    _validate(r, n, k)
    if r == 1:
        return Bound(0, 0)
    if k == 1:
        b = n * n * r * (r - 1) // 2
        return Bound(b, b)
    if k == 2:
        b = (r - 1) * n
        return Bound(b, b)
    if k == 3:
        b = r * (r - 1) // 2
        return Bound(b, b)
    if k >= r + 1:
        return Bound(r - 1, r - 1)
    # 3 < k < r+1: only the bracket is known; the lower end comes from
    # connectivity (and the k >= r+1 row), the upper end from the k=3 row
    return Bound(r - 1, r * (r - 1) // 2)


def central_threshold(r: int, n: int, k: int) -> int:
    """Minimum central-node count C_k (always exact)."""
    _validate(r, n, k)
    if r == 1:
        return 0
    if k == 1:
        return r * n
    if k == 2:
        return (r - 1) * n + 1
    return r


@dataclass(frozen=True)
class ThresholdRow:
    k: int
    bridges: Bound
    centrals: int


def threshold_rows(r: int, n: int, kmax: int) -> list[ThresholdRow]:
    """The table of (B_k, C_k) for k = 1..kmax."""
    _validate(r, n, kmax)
    return [ThresholdRow(k, bridge_threshold(r, n, k), central_threshold(r, n, k)) for k in range(1, kmax + 1)]


def pair_bridge_minimum(n1: int, n2: int) -> int:
    """Minimum bridges that 2-integrate two disjoint complete graphs: min(n1, n2)."""
    if not (isinstance(n1, int) and isinstance(n2, int)) or n1 < 1 or n2 < 1:
        raise InvalidParamsError(f"community sizes must be integers >= 1, got {n1}, {n2}")
    return min(n1, n2)


def segregation_verdict(g: CommunityGraph, k: int) -> SegregationVerdict:
    """Counting verdict for a strict-model graph.

    ProvablySegregated when the bridge count falls below the k
    threshold's lower end or the central count falls below C_k;
    NotDetermined otherwise (the conditions are necessary, never
    sufficient, so a NotDetermined graph still needs measuring).
    """
    sizes = set(g.community_sizes)
    if len(sizes) != 1:
        raise ModelViolationError(
            f"the model requires equal community sizes, got {sorted(g.community_sizes)}"
        )
    r = g.community_count
    n = g.community_sizes[0]
    b_bound = bridge_threshold(r, n, k)
    c_required = central_threshold(r, n, k)
    b = len(graphmod.bridges(g))
    c = len(graphmod.central_nodes(g))
    if b < b_bound.lower:
        return SegregationVerdict(
            True, f"bridge count {b} is below the k={k} requirement {b_bound.lower}"
        )
    if c < c_required:
        return SegregationVerdict(
            True, f"central-node count {c} is below the k={k} requirement {c_required}"
        )
    return SegregationVerdict(False)
