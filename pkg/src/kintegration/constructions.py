"""Generators for minimal k-integrated community networks.

Three families, each meeting the corresponding threshold row exactly:

* complete join (k=1): every cross-community pair bridged.
* two-star (k=2): one hub node bridged to every node outside its own
  community.
* extended star (k >= 3): one central node per community, bridged
  according to a connected quotient graph on the communities; the
  result is (d+2)-integrated where d is the quotient's diameter
  (or d-integrated in the degenerate n=1 case, where the network is
  the quotient itself).

Every construction is locally complete. Hubs and central nodes are
always the lowest node id of their community, so outputs are
deterministic.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

from collections import deque

from .errors import (
    DisconnectedQuotientError,
    InvalidParamsError,
    UnsupportedCommunityCountError,
)
from .graph import CommunityGraph, Edge


@dataclass(frozen=True)
class QuotientGraph:
    """Simple graph on community ids, used as an extended-star bridge plan."""

    r: int
    edges: tuple[Edge, ...]

    def __post_init__(self) -> None:
        if self.r < 1:
            raise InvalidParamsError(f"quotient needs r >= 1, got {self.r}")
        seen: set[Edge] = set()
        for u, v in self.edges:
            if u == v:
                raise InvalidParamsError(f"quotient self-loop at {u}")
            if not (0 <= u < self.r and 0 <= v < self.r):
                raise InvalidParamsError(f"quotient edge ({u}, {v}) out of range for r={self.r}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise InvalidParamsError(f"duplicate quotient edge ({u}, {v})")
            seen.add(key)
        object.__setattr__(self, "edges", tuple(sorted(seen)))

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        nbs: list[set[int]] = [set() for _ in range(self.r)]
        for u, v in self.edges:
            nbs[u].add(v)
            nbs[v].add(u)
        return tuple(tuple(sorted(s)) for s in nbs)

    @cached_property
    def diameter(self) -> int | None:
        """Exact diameter, or None when disconnected."""
        worst = 0
        for source in range(self.r):
            dist = [-1] * self.r
            dist[source] = 0
            queue = deque([source])
            while queue:
                u = queue.popleft()
                for v in self.adjacency[u]:
                    if dist[v] == -1:
                        dist[v] = dist[u] + 1
                        queue.append(v)
            if -1 in dist:
                return None
            worst = max(worst, max(dist))
        return worst

    @property
    def is_connected(self) -> bool:
        return self.diameter is not None


def complete_quotient(r: int) -> QuotientGraph:
    _check_r(r)
    return QuotientGraph(r, tuple(itertools.combinations(range(r), 2)))


def star_quotient(r: int) -> QuotientGraph:
    """Community 0 as the quotient hub."""
    _check_r(r)
    return QuotientGraph(r, tuple((0, c) for c in range(1, r)))


def path_quotient(r: int) -> QuotientGraph:
    _check_r(r)
    return QuotientGraph(r, tuple((c, c + 1) for c in range(r - 1)))


def cycle_quotient(r: int) -> QuotientGraph:
    _check_r(r)
    if r < 3:
        raise InvalidParamsError(f"a simple cycle needs r >= 3, got {r}")
    return QuotientGraph(r, tuple((c, c + 1) for c in range(r - 1)) + ((0, r - 1),))


# Fixed eight-community layouts giving small bridge counts at
# intermediate integration levels, keyed by the level they target
# (quotient diameter = level - 2). Reference patterns shipped as data:
# known constructions, not certified minima.
_FIGURE1_EDGES: dict[int, tuple[Edge, ...]] = {
    4: ((0, 1), (6, 7), (2, 4), (3, 5), (0, 2), (5, 6), (1, 3), (4, 7), (0, 6), (1, 7), (3, 4), (2, 5)),
    5: ((0, 1), (6, 7), (2, 4), (3, 5), (0, 2), (5, 6), (1, 3), (4, 7), (0, 6), (3, 4)),
    6: ((0, 1), (6, 7), (2, 4), (3, 5), (0, 2), (5, 6), (1, 3), (4, 7)),
    7: ((0, 1), (6, 7), (2, 4), (3, 5), (0, 2), (5, 6), (1, 3), (4, 7)),
    8: ((0, 1), (6, 7), (2, 4), (3, 5), (0, 2), (5, 6), (1, 3), (4, 7)),
    9: ((0, 1), (6, 7), (2, 4), (3, 5), (0, 2), (5, 6), (1, 3)),
}


def figure1_quotient(k: int, r: int = 8) -> QuotientGraph:
    """The bundled eight-community quotient targeting integration level k.

    Available from the CLI as ``--quotient figure1:K`` for K in 4..9.
    """
    if r != 8:
        raise UnsupportedCommunityCountError(f"the figure1 family is defined for r=8 only, got r={r}")
    if k not in _FIGURE1_EDGES:
        raise InvalidParamsError(f"the figure1 family covers k in 4..9, got k={k}")
    return QuotientGraph(8, _FIGURE1_EDGES[k])


@dataclass(frozen=True)
class Construction:
    """A generated network plus its claimed certificate.

    The claims (k-integration at ``claimed_k``, bridge and central
    counts) hold by construction and are re-measured in tests and by
    the CLI.
    """

    graph: CommunityGraph
    family: str
    claimed_k: int
    claimed_b: int
    claimed_c: int
    quotient: QuotientGraph | None = None


def _check_r(r: int) -> None:
    if not isinstance(r, int) or r < 1:
        raise InvalidParamsError(f"community count must be an integer >= 1, got {r}")


def _check_rn(r: int, n: int) -> None:
    _check_r(r)
    if not isinstance(n, int) or n < 1:
        raise InvalidParamsError(f"community size must be an integer >= 1, got {n}")


def _assemble(r: int, n: int, bridge_edges: list[Edge]) -> CommunityGraph:
    """Locally complete graph on r communities of n nodes plus the given bridges.

    Node id = community*n + slot; tokens are zero-padded so token order
    equals id order and canonical files stay in layout order.
    """
    node_count = r * n
    width = len(str(node_count - 1)) if node_count > 1 else 1
    cwidth = len(str(r - 1)) if r > 1 else 1
    neighbor_sets: list[set[int]] = [set() for _ in range(node_count)]
    for c in range(r):
        base = c * n
        for i in range(n):
            for j in range(i + 1, n):
                neighbor_sets[base + i].add(base + j)
                neighbor_sets[base + j].add(base + i)
    for u, v in bridge_edges:
        neighbor_sets[u].add(v)
        neighbor_sets[v].add(u)
    return CommunityGraph(
        adjacency=tuple(tuple(sorted(nb)) for nb in neighbor_sets),
        community_of=tuple(u // n for u in range(node_count)),
        tokens=tuple(str(u).zfill(width) for u in range(node_count)),
        community_tokens=tuple(str(c).zfill(cwidth) for c in range(r)),
    )


def complete_join(r: int, n: int) -> Construction:
    """Every cross-community pair bridged; 1-integrated."""
    _check_rn(r, n)
    bridge_edges = [
        (ci * n + i, cj * n + j)
        for ci, cj in itertools.combinations(range(r), 2)
        for i in range(n)
        for j in range(n)
    ]
    return Construction(
        graph=_assemble(r, n, bridge_edges),
        family="complete-join",
        claimed_k=1,
        claimed_b=n * n * r * (r - 1) // 2,
        claimed_c=r * n if r > 1 else 0,
    )


def two_star(r: int, n: int) -> Construction:
    """One hub (lowest id of community 0) bridged to every outside node; 2-integrated."""
    _check_rn(r, n)
    bridge_edges = [(0, v) for v in range(n, r * n)]
    return Construction(
        graph=_assemble(r, n, bridge_edges),
        family="two-star",
        claimed_k=2,
        claimed_b=(r - 1) * n,
        claimed_c=(r - 1) * n + 1 if r > 1 else 0,
    )


def extended_star(r: int, n: int, quotient: QuotientGraph) -> Construction:
    """One central node per community, bridged along the quotient edges.

    (d+2)-integrated for quotient diameter d when n >= 2; with n = 1
    the network degenerates to the quotient itself and is d-integrated.
    """
    _check_rn(r, n)
    if quotient.r != r:
        raise InvalidParamsError(f"quotient has {quotient.r} vertices, expected {r}")
    d = quotient.diameter
    if d is None:
        raise DisconnectedQuotientError("extended star needs a connected quotient")
    bridge_edges = [(i * n, j * n) for i, j in quotient.edges]
    return Construction(
        graph=_assemble(r, n, bridge_edges),
        family="extended-star",
        claimed_k=d + 2 if n >= 2 else d,
        claimed_b=len(quotient.edges),
        claimed_c=r if r > 1 else 0,
        quotient=quotient,
    )
