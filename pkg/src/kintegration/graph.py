"""Community-structured undirected graphs and structural queries.

The model is an "islands" network: nodes partitioned into communities,
edges split into local edges (both endpoints in one community) and
bridges (endpoints in different communities). A node is central when it
is an endpoint of at least one bridge.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Hashable, Iterable, Mapping

from .errors import EmptyCommunityMapError, SelfLoopError, UnknownNodeError

log = logging.getLogger(__name__)

Edge = tuple[int, int]


@dataclass(frozen=True)
class CommunityGraph:
    """Simple undirected graph whose nodes carry community labels.

    Nodes are dense ids ``0..node_count-1`` and communities dense ids
    ``0..community_count-1``; ``tokens`` and ``community_tokens`` map
    them back to the names used in the input. Instances are immutable
    after construction and safe to share across concurrent readers.
    """

    adjacency: tuple[tuple[int, ...], ...]
    community_of: tuple[int, ...]
    tokens: tuple[str, ...]
    community_tokens: tuple[str, ...]

    @property
    def node_count(self) -> int:
        return len(self.adjacency)

    @property
    def community_count(self) -> int:
        return len(self.community_tokens)

    @cached_property
    def community_sizes(self) -> tuple[int, ...]:
        sizes = [0] * self.community_count
        for c in self.community_of:
            sizes[c] += 1
        return tuple(sizes)

    @cached_property
    def community_members(self) -> tuple[tuple[int, ...], ...]:
        members: list[list[int]] = [[] for _ in range(self.community_count)]
        for u, c in enumerate(self.community_of):
            members[c].append(u)
        return tuple(tuple(m) for m in members)

    @cached_property
    def edges(self) -> tuple[Edge, ...]:
        """All edges as (u, v) with u < v, sorted by node id."""
        return tuple(
            (u, v) for u in range(self.node_count) for v in self.adjacency[u] if u < v
        )

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def _adjacency_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(nb) for nb in self.adjacency)

    def neighbors(self, u: int) -> tuple[int, ...]:
        return self.adjacency[u]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adjacency_sets[u]

    def degree(self, u: int) -> int:
        return len(self.adjacency[u])

    def is_bridge(self, u: int, v: int) -> bool:
        return self.community_of[u] != self.community_of[v]


def build_graph(
    edges: Iterable[tuple[Hashable, Hashable]],
    communities: Mapping[Hashable, Hashable],
) -> CommunityGraph:
    """Validate and intern a graph given by raw edge pairs and a community map.

    Node and community keys may be any mutually comparable values
    (ints from code, strings from files); they are interned to dense
    ids in sorted-key order and kept as string tokens. Duplicate edge
    listings collapse to one edge.
    """
    if not communities:
        raise EmptyCommunityMapError()

    node_keys = sorted(communities)
    node_index = {key: i for i, key in enumerate(node_keys)}
    community_keys = sorted(set(communities.values()))
    community_index = {key: i for i, key in enumerate(community_keys)}

    seen: set[Edge] = set()
    duplicates = 0
    for a, b in edges:
        if a == b:
            raise SelfLoopError(a)
        if a not in node_index:
            raise UnknownNodeError(a)
        if b not in node_index:
            raise UnknownNodeError(b)
        u, v = node_index[a], node_index[b]
        key = (u, v) if u < v else (v, u)
        if key in seen:
            duplicates += 1
        else:
            seen.add(key)
    if duplicates:
        log.debug("collapsed %d duplicate edge listings", duplicates)

    neighbor_sets: list[set[int]] = [set() for _ in node_keys]
    for u, v in seen:
        neighbor_sets[u].add(v)
        neighbor_sets[v].add(u)

    return CommunityGraph(
        adjacency=tuple(tuple(sorted(nb)) for nb in neighbor_sets),
        community_of=tuple(community_index[communities[key]] for key in node_keys),
        tokens=tuple(str(key) for key in node_keys),
        community_tokens=tuple(str(key) for key in community_keys),
    )


def bridges(g: CommunityGraph) -> list[Edge]:
    """Edges whose endpoints lie in different communities."""
    return [(u, v) for u, v in g.edges if g.community_of[u] != g.community_of[v]]


def local_edges(g: CommunityGraph) -> list[Edge]:
    """Edges whose endpoints share a community."""
    return [(u, v) for u, v in g.edges if g.community_of[u] == g.community_of[v]]


def central_nodes(g: CommunityGraph) -> set[int]:
    """Endpoints of bridges."""
    out: set[int] = set()
    for u, v in bridges(g):
        out.add(u)
        out.add(v)
    return out


def is_locally_complete(
    g: CommunityGraph, max_witnesses: int = 10
) -> tuple[bool, list[Edge]]:
    """Whether every community's induced subgraph is complete.

    Returns (ok, missing) where missing lists up to ``max_witnesses``
    absent local pairs as witnesses.
    """
    missing: list[Edge] = []
    for members in g.community_members:
        for i, u in enumerate(members):
            for v in members[i + 1 :]:
                if not g.has_edge(u, v):
                    missing.append((u, v))
                    if len(missing) >= max_witnesses:
                        return False, missing
    return not missing, missing


def localize_complete(g: CommunityGraph) -> CommunityGraph:
    """Copy of ``g`` with every missing local edge added.

    Bridges and central nodes are unchanged; idempotent.
    """
    neighbor_sets = [set(nb) for nb in g.adjacency]
    for members in g.community_members:
        for i, u in enumerate(members):
            for v in members[i + 1 :]:
                neighbor_sets[u].add(v)
                neighbor_sets[v].add(u)
    return CommunityGraph(
        adjacency=tuple(tuple(sorted(nb)) for nb in neighbor_sets),
        community_of=g.community_of,
        tokens=g.tokens,
        community_tokens=g.community_tokens,
    )
