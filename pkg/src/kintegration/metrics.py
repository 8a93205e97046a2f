"""Exact distance computations and the k-integration predicate.

A graph is k-integrated when every pair of nodes is joined by a path of
length at most k, i.e. its diameter is at most k; the integration level
k* is the diameter itself. All computations are exact BFS; internally,
nodes with identical closed neighborhoods ("true twins", e.g. the
interchangeable members of a complete community with the same bridge
endpoints) are collapsed first, which keeps dense community graphs
cheap without changing any distance.

All operations are pure functions of an immutable graph, so per-source
scans may run concurrently; results combine associatively (max for
eccentricities, AND for verdicts) and the reported witness is always
the one from the lowest-numbered violating source.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from . import graph as graphmod
from .errors import InvalidNodeError, InvalidParamsError
from .graph import CommunityGraph, Edge

UNREACHED = -1


@dataclass(frozen=True)
class KVerdict:
    """Outcome of an is-k-integrated check.

    ``witness`` is present iff ``integrated`` is false: a concrete pair
    at distance > k, or an unreachable pair (``witness_distance`` None).
    """

    k: int
    integrated: bool
    witness: Edge | None = None
    witness_distance: int | None = None


@dataclass(frozen=True)
class IntegrationReport:
    """Per-graph summary: counts, integration level, per-k verdicts."""

    r: int
    node_count: int
    bridge_count: int
    central_count: int
    k_star: int | None
    per_k: tuple[KVerdict, ...]
    reach_profile: dict[int, tuple[int, ...]]


def _check_source(g: CommunityGraph, source: int) -> None:
    if not isinstance(source, int) or not 0 <= source < g.node_count:
        raise InvalidNodeError(source)


def _bfs(adjacency: Sequence[Sequence[int]], source: int, depth_cap: int | None = None) -> list[int]:
    """Single-source BFS distances; UNREACHED marks nodes beyond reach or cap."""
    dist = [UNREACHED] * len(adjacency)
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        if depth_cap is not None and dist[u] == depth_cap:
            continue
        for v in adjacency[u]:
            if dist[v] == UNREACHED:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def bounded_bfs(g: CommunityGraph, source: int, k: int) -> dict[int, int]:
    """Distances of exactly the nodes within k hops of ``source``."""
    _check_source(g, source)
    if k < 0:
        raise InvalidParamsError(f"depth bound must be >= 0, got {k}")
    dist = _bfs(g.adjacency, source, depth_cap=k)
    return {v: d for v, d in enumerate(dist) if d != UNREACHED}


def eccentricity(g: CommunityGraph, source: int) -> int | None:
    """Max distance from ``source``; None when some node is unreachable."""
    _check_source(g, source)
    dist = _bfs(g.adjacency, source)
    if UNREACHED in dist:
        return None
    return max(dist)


class _TwinQuotient:
    """Nodes grouped by closed neighborhood, plus the class-level graph.

    Two nodes with the same closed neighborhood are adjacent and sit at
    the same distance from everything else, so distances in the class
    graph are exactly the original distances between members of
    distinct classes; members of one class sit at distance 1 (classes
    are cliques). Classes are ordered by their smallest node id.
    """

    def __init__(self, g: CommunityGraph):
        groups: dict[frozenset[int], list[int]] = {}
        for u in range(g.node_count):
            key = frozenset(g.adjacency[u]) | {u}
            groups.setdefault(key, []).append(u)
        classes = sorted(groups.values(), key=lambda members: members[0])
        class_of = [0] * g.node_count
        for ci, members in enumerate(classes):
            for u in members:
                class_of[u] = ci
        adjacency: list[tuple[int, ...]] = []
        for ci, members in enumerate(classes):
            rep = members[0]
            nbs = {class_of[v] for v in g.adjacency[rep]}
            nbs.discard(ci)
            adjacency.append(tuple(sorted(nbs)))
        self.classes: list[list[int]] = classes
        self.class_of: list[int] = class_of
        self.adjacency: list[tuple[int, ...]] = adjacency

    @cached_property
    def distance_rows(self) -> list[list[int]]:
        return [_bfs(self.adjacency, ci) for ci in range(len(self.classes))]


def integration_level(g: CommunityGraph) -> int | None:
    """The graph diameter (minimal k with the graph k-integrated); None if disconnected."""
    q = _TwinQuotient(g)
    diam = 0
    for ci, row in enumerate(q.distance_rows):
        if UNREACHED in row:
            return None
        diam = max(diam, max(row))
        if len(q.classes[ci]) > 1:
            diam = max(diam, 1)
    return diam


def _class_violation(
    q: _TwinQuotient, ci: int, k: int
) -> tuple[int, int | None] | None:
    """Lowest-id witness target for a violating source class, or None.

    Returns (target_node, distance) with distance None for unreachable.
    """
    row = q.distance_rows[ci]
    unreached = [cj for cj, d in enumerate(row) if d == UNREACHED]
    if unreached:
        return min(q.classes[cj][0] for cj in unreached), None
    candidates: list[tuple[int, int]] = []
    for cj, d in enumerate(row):
        if cj != ci and d > k:
            candidates.append((q.classes[cj][0], d))
    if k < 1 and len(q.classes[ci]) > 1:
        candidates.append((q.classes[ci][1], 1))
    if not candidates:
        return None
    return min(candidates)


def _verdict_for(q: _TwinQuotient, k: int) -> KVerdict:
    # classes are ordered by min node id, so the first violating class
    # yields the lowest violating source overall
    for ci in range(len(q.classes)):
        hit = _class_violation(q, ci, k)
        if hit is not None:
            target, distance = hit
            source = q.classes[ci][0]
            return KVerdict(k=k, integrated=False, witness=(source, target), witness_distance=distance)
    return KVerdict(k=k, integrated=True)


def is_k_integrated(g: CommunityGraph, k: int) -> KVerdict:
    """Exact check of "every pair within distance k", with a witness on failure.

    Sources are scanned in ascending node id and the scan stops at the
    first violation; the witness is the lowest-id unreachable node if
    any, else the lowest-id node at distance > k.
    """
    if k < 0:
        raise InvalidParamsError(f"integration bound must be >= 0, got {k}")
    return _verdict_for(_TwinQuotient(g), k)


def _reach_counts(q: _TwinQuotient, node_count: int, k: int) -> tuple[int, ...]:
    counts = [0] * node_count
    sizes = [len(members) for members in q.classes]
    for ci, row in enumerate(q.distance_rows):
        within = 1  # self
        if k >= 1:
            within += sizes[ci] - 1
        for cj, d in enumerate(row):
            if cj != ci and d != UNREACHED and d <= k:
                within += sizes[cj]
        for u in q.classes[ci]:
            counts[u] = within
    return tuple(counts)


def build_report(g: CommunityGraph, ks: Iterable[int]) -> IntegrationReport:
    """Aggregate B, C, k*, per-k verdicts and reach profile in one pass."""
    ks = list(ks)
    for k in ks:
        if k < 0:
            raise InvalidParamsError(f"integration bound must be >= 0, got {k}")
    q = _TwinQuotient(g)
    k_star: int | None = 0
    for ci, row in enumerate(q.distance_rows):
        if UNREACHED in row:
            k_star = None
            break
        assert k_star is not None
        k_star = max(k_star, max(row))
        if len(q.classes[ci]) > 1:
            k_star = max(k_star, 1)
    return IntegrationReport(
        r=g.community_count,
        node_count=g.node_count,
        bridge_count=len(graphmod.bridges(g)),
        central_count=len(graphmod.central_nodes(g)),
        k_star=k_star,
        per_k=tuple(_verdict_for(q, k) for k in ks),
        reach_profile={k: _reach_counts(q, g.node_count, k) for k in ks},
    )
