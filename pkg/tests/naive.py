"""Independent reference implementations used to cross-check the package.

Everything here is deliberately dumb and slow: distances come from
Bellman-Ford style iterative relaxation (no BFS), and minimum bridge
counts come from full subset enumeration with no symmetry reduction.
Expected values frozen in the test files were produced by these
routines; the package must agree with them by construction, never the
other way around.
"""

from __future__ import annotations

import itertools

INF = float("inf")


def relaxation_distances(node_count, edges):
    """All-pairs shortest paths by iterated edge relaxation.

    Returns a node_count x node_count matrix; unreachable entries are None.
    """
    dist = [[INF] * node_count for _ in range(node_count)]
    for u in range(node_count):
        dist[u][u] = 0
    changed = True
    while changed:
        changed = False
        for s in range(node_count):
            row = dist[s]
            for u, v in edges:
                if row[u] + 1 < row[v]:
                    row[v] = row[u] + 1
                    changed = True
                if row[v] + 1 < row[u]:
                    row[u] = row[v] + 1
                    changed = True
    return [[d if d != INF else None for d in row] for row in dist]


def diameter(node_count, edges):
    """Exact diameter, or None when the graph is disconnected."""
    if node_count == 0:
        return None
    dist = relaxation_distances(node_count, edges)
    worst = 0
    for row in dist:
        for d in row:
            if d is None:
                return None
            worst = max(worst, d)
    return worst


def eccentricity(node_count, edges, source):
    dist = relaxation_distances(node_count, edges)[source]
    if any(d is None for d in dist):
        return None
    return max(dist)


def is_k_integrated(node_count, edges, k):
    d = diameter(node_count, edges)
    return d is not None and d <= k


def violation_witness(node_count, edges, k):
    """First violating pair under the ascending-source rule.

    Scans sources in ascending id; for the first source with any
    violation, picks the lowest unreachable node, else the lowest node
    at distance > k. Returns (u, v, distance-or-None) or None when the
    graph is k-integrated.
    """
    dist = relaxation_distances(node_count, edges)
    for u in range(node_count):
        row = dist[u]
        unreached = [v for v in range(node_count) if row[v] is None]
        if unreached:
            return (u, min(unreached), None)
        far = [v for v in range(node_count) if row[v] > k]
        if far:
            v = min(far)
            return (u, v, row[v])
    return None


def island_nodes(sizes):
    """Node ids grouped by community for disjoint complete communities."""
    groups = []
    start = 0
    for size in sizes:
        groups.append(list(range(start, start + size)))
        start += size
    return groups


def local_edges(sizes):
    out = []
    for group in island_nodes(sizes):
        out.extend(itertools.combinations(group, 2))
    return out


def cross_pairs(sizes):
    groups = island_nodes(sizes)
    out = []
    for i, j in itertools.combinations(range(len(groups)), 2):
        for u in groups[i]:
            for v in groups[j]:
                out.append((u, v))
    return sorted(out)


def min_bridges(sizes, k, max_size=None):
    """Minimum bridge count for k-integration over complete communities.

    Plain subset enumeration, size ascending, lexicographic within a
    size; no symmetry reduction. Only usable on tiny instances.
    Returns (count, witness_set) or None if no bridge set up to
    max_size works.
    """
    node_count = sum(sizes)
    base = local_edges(sizes)
    universe = cross_pairs(sizes)
    if max_size is None:
        max_size = len(universe)
    for size in range(0, max_size + 1):
        for combo in itertools.combinations(universe, size):
            if is_k_integrated(node_count, base + list(combo), k):
                return size, combo
    return None
