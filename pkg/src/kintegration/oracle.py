"""Exhaustive and randomized search for minimum bridge sets.

Answers the question: given r complete communities of fixed sizes and a
target level k, how many bridges must be added before every pair of
nodes is within distance k?  The exhaustive search enumerates candidate
bridge sets in ascending size, so the first feasible set certifies the
true minimum.

Symmetry reduction skips candidate sets that are relabelings of an
earlier one (nodes within a community are interchangeable, as are whole
communities of equal size).  Candidates are generated in lexicographic
order under constraints that every orbit's lex-least member satisfies,
so the reduced search still visits the lex-least feasible set first and
reports the same witness a full enumeration would.

Candidate counts grow combinatorially, so the search takes a leaf
budget.  Exceeding it returns a partial verdict (min_bridges is None)
rather than raising: the caller learns which sizes were fully ruled
out.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .errors import InvalidParamsError
from .graph import Edge
from .thresholds import Bound, bridge_threshold, central_threshold

DEFAULT_BUDGET = 2_000_000


@dataclass(frozen=True)
class OracleVerdict:
    """Outcome of an exhaustive minimum-bridge search.

    ``min_bridges`` is None when the budget ran out first; then
    ``exhausted_size`` is the largest candidate-set size fully proven
    infeasible.  ``certified`` is True only when the minimum is exact.
    """

    sizes: tuple[int, ...]
    k: int
    min_bridges: int | None
    witness: tuple[Edge, ...] | None
    sets_examined: int
    certified: bool
    exhausted_size: int | None
    symmetry_reduced: bool

    @property
    def r(self) -> int:
        return len(self.sizes)

    @property
    def n(self) -> int | None:
        """Common community size, or None when sizes are mixed."""
        return self.sizes[0] if len(set(self.sizes)) == 1 else None


@dataclass(frozen=True)
class RandomizedBound:
    """Feasible (hence upper-bounding) bridge set found by local search."""

    sizes: tuple[int, ...]
    k: int
    upper_bound: int
    witness: tuple[Edge, ...]
    trials: int
    seed: int


@dataclass(frozen=True)
class RowCheck:
    """Certified search outcome compared against one threshold row."""

    r: int
    n: int
    k: int
    bound: Bound
    centrals_required: int
    verdict: OracleVerdict
    witness_centrals: int | None
    agrees: bool | None


class _Instance:
    """Bitmask machinery for one community-size profile.

    Node ids are consecutive per community; community c occupies
    [offsets[c], offsets[c] + sizes[c]).  Sizes must come in ascending
    order so that equal sizes form contiguous blocks.
    """

    def __init__(self, sizes: tuple[int, ...]) -> None:
        self.sizes = sizes
        self.r = len(sizes)
        self.node_count = sum(sizes)
        offsets: list[int] = []
        total = 0
        for s in sizes:
            offsets.append(total)
            total += s
        self.offsets = tuple(offsets)
        community_of: list[int] = []
        for c, s in enumerate(sizes):
            community_of.extend([c] * s)
        self.community_of = tuple(community_of)
        self.full_mask = (1 << self.node_count) - 1
        # static local adjacency: each community is complete
        self.local_mask: list[int] = []
        for u in range(self.node_count):
            c = community_of[u]
            cmask = ((1 << sizes[c]) - 1) << offsets[c]
            self.local_mask.append(cmask & ~(1 << u))
        # first community of each run of equal sizes
        block_start: list[int] = []
        for c, s in enumerate(sizes):
            block_start.append(block_start[c - 1] if c > 0 and sizes[c - 1] == s else c)
        self.block_start = tuple(block_start)
        self.universe: tuple[Edge, ...] = tuple(
            (u, v)
            for u in range(self.node_count)
            for v in range(u + 1, self.node_count)
            if community_of[u] != community_of[v]
        )

    def bridge_adjacency(self, edges) -> list[int]:
        badj = [0] * self.node_count
        for u, v in edges:
            badj[u] |= 1 << v
            badj[v] |= 1 << u
        return badj

    def is_k_integrated(self, bridge_adj: list[int], k: int) -> bool:
        """True iff every pair of nodes is within distance k."""
        if self.r >= 2:
            # a community with no bridge endpoint is cut off
            touched = 0
            for u in range(self.node_count):
                if bridge_adj[u]:
                    touched |= 1 << self.community_of[u]
            if touched != (1 << self.r) - 1:
                return False
        full = self.full_mask
        for source in range(self.node_count):
            reach = 1 << source
            frontier = reach
            for _ in range(k):
                acc = 0
                pending = frontier
                while pending:
                    low = pending & -pending
                    u = low.bit_length() - 1
                    acc |= self.local_mask[u] | bridge_adj[u]
                    pending ^= low
                grown = reach | acc
                frontier = grown & ~reach
                reach = grown
                if reach == full or not frontier:
                    break
            if reach != full:
                return False
        return True


def _validate_sizes_k(sizes, k: int) -> None:
    if not sizes:
        raise InvalidParamsError("need at least one community")
    for s in sizes:
        if not isinstance(s, int) or s < 1:
            raise InvalidParamsError(f"community sizes must be integers >= 1, got {s!r}")
    if not isinstance(k, int) or k < 1:
        raise InvalidParamsError(f"integration level must be an integer >= 1, got {k!r}")


def min_bridges_for_sizes(
    sizes,
    k: int,
    budget: int = DEFAULT_BUDGET,
    symmetry_reduction: bool = True,
) -> OracleVerdict:
    """Exact minimum bridge count for communities of the given sizes.

    Sizes are sorted ascending internally and the verdict reports the
    sorted profile; witness node ids refer to that layout.
    """
    _validate_sizes_k(sizes, k)
    if not isinstance(budget, int) or budget < 1:
        raise InvalidParamsError(f"budget must be an integer >= 1, got {budget!r}")
    ordered = tuple(sorted(sizes))
    inst = _Instance(ordered)
    if inst.r == 1:
        # one complete community has diameter at most 1 already
        return OracleVerdict(ordered, k, 0, (), 0, True, None, symmetry_reduction)
    if k == 1:
        # diameter <= 1 means complete, so every cross pair must be
        # bridged; the full cross set is the unique minimum
        witness = inst.universe
        if not inst.is_k_integrated(inst.bridge_adjacency(witness), 1):
            raise AssertionError("internal: complete join failed its own check")
        return OracleVerdict(ordered, k, len(witness), witness, 1, True, None, symmetry_reduction)

    universe = inst.universe
    start = inst.r - 1  # fewer bridges cannot connect r communities
    examined = 0
    badj = [0] * inst.node_count
    for m in range(start, len(universe) + 1):
        found: tuple[Edge, ...] | None = None
        budget_hit = False
        if symmetry_reduction:
            used = [0] * inst.r  # used slots form a prefix per community
            chosen: list[Edge] = []

            def extend(start_idx: int) -> bool:
                """Returns True to stop the whole size-m pass."""
                nonlocal examined, found, budget_hit
                if len(chosen) == m:
                    if examined >= budget:
                        budget_hit = True
                        return True
                    examined += 1
                    if inst.is_k_integrated(badj, k):
                        found = tuple(chosen)
                        return True
                    return False
                remaining = m - len(chosen)
                for idx in range(start_idx, len(universe) - remaining + 1):
                    u, v = universe[idx]
                    cu = inst.community_of[u]
                    su = u - inst.offsets[cu]
                    if su > used[cu]:
                        continue
                    if used[cu] == 0 and cu != inst.block_start[cu] and used[cu - 1] == 0:
                        continue
                    bumped_u = su == used[cu]
                    if bumped_u:
                        used[cu] += 1
                    cv = inst.community_of[v]
                    sv = v - inst.offsets[cv]
                    if sv <= used[cv] and not (
                        used[cv] == 0 and cv != inst.block_start[cv] and used[cv - 1] == 0
                    ):
                        if bumped_v := sv == used[cv]:
                            used[cv] += 1
                        badj[u] |= 1 << v
                        badj[v] |= 1 << u
                        chosen.append((u, v))
                        if extend(idx + 1):
                            return True
                        chosen.pop()
                        badj[u] &= ~(1 << v)
                        badj[v] &= ~(1 << u)
                        if bumped_v:
                            used[cv] -= 1
                    if bumped_u:
                        used[cu] -= 1
                return False

            extend(0)
        else:
            for combo in itertools.combinations(universe, m):
                if examined >= budget:
                    budget_hit = True
                    break
                examined += 1
                if inst.is_k_integrated(inst.bridge_adjacency(combo), k):
                    found = combo
                    break
        if found is not None:
            return OracleVerdict(ordered, k, m, found, examined, True, m - 1, symmetry_reduction)
        if budget_hit:
            return OracleVerdict(ordered, k, None, None, examined, False, m - 1, symmetry_reduction)
    # unreachable for k >= 1: the full cross set is always feasible
    return OracleVerdict(ordered, k, None, None, examined, False, len(universe), symmetry_reduction)


def min_bridges_exhaustive(
    r: int,
    n: int,
    k: int,
    budget: int = DEFAULT_BUDGET,
    symmetry_reduction: bool = True,
) -> OracleVerdict:
    """Exact minimum bridge count for r communities of n nodes each."""
    if not isinstance(r, int) or r < 1:
        raise InvalidParamsError(f"community count must be an integer >= 1, got {r!r}")
    if not isinstance(n, int) or n < 1:
        raise InvalidParamsError(f"community size must be an integer >= 1, got {n!r}")
    return min_bridges_for_sizes((n,) * r, k, budget=budget, symmetry_reduction=symmetry_reduction)


def _seed_bridges(r: int, n: int, k: int) -> tuple[Edge, ...]:
    """A bridge set known to be k-integrated, used to start local search."""
    if k == 2:
        # hub node 0 bridged to every node outside its community
        return tuple((0, v) for v in range(n, r * n))
    if k == 3:
        # one central per community, every pair of centrals bridged
        return tuple((i * n, j * n) for i, j in itertools.combinations(range(r), 2))
    # k >= 4: centrals in a star around community 0 reach anything in
    # at most 4 hops
    return tuple((0, j * n) for j in range(1, r))


def min_bridges_randomized(
    r: int,
    n: int,
    k: int,
    trials: int = 20,
    seed: int = 0,
) -> RandomizedBound:
    """Upper bound on the minimum bridge count via shuffle-and-prune.

    Each trial starts from a known feasible set, removes edges in random
    order (keeping the set feasible), then tries random edge swaps to
    escape local minima.  The returned witness is always verified
    feasible, so the bound is sound even though it may not be tight.
    """
    if not isinstance(r, int) or r < 1:
        raise InvalidParamsError(f"community count must be an integer >= 1, got {r!r}")
    if not isinstance(n, int) or n < 1:
        raise InvalidParamsError(f"community size must be an integer >= 1, got {n!r}")
    if not isinstance(k, int) or k < 1:
        raise InvalidParamsError(f"integration level must be an integer >= 1, got {k!r}")
    if not isinstance(trials, int) or trials < 1:
        raise InvalidParamsError(f"trials must be an integer >= 1, got {trials!r}")
    sizes = (n,) * r
    inst = _Instance(sizes)
    if r == 1:
        return RandomizedBound(sizes, k, 0, (), trials, seed)
    if k == 1:
        # forced: every cross pair must be present
        return RandomizedBound(sizes, k, len(inst.universe), inst.universe, trials, seed)
    initial = _seed_bridges(r, n, k)
    if not inst.is_k_integrated(inst.bridge_adjacency(initial), k):
        raise AssertionError("internal: seed bridge set failed its own check")
    rng = random.Random(seed)
    universe = inst.universe
    floor = r - 1  # connectivity needs at least r-1 bridges

    def prune(edges) -> set[Edge]:
        keep = set(edges)
        order = sorted(keep)
        rng.shuffle(order)
        for e in order:
            if len(keep) <= floor:
                break
            keep.discard(e)
            if not inst.is_k_integrated(inst.bridge_adjacency(keep), k):
                keep.add(e)
        return keep

    best = tuple(sorted(initial))
    for _ in range(trials):
        current = prune(initial)
        for _ in range(max(10, 2 * len(current))):
            if len(current) <= floor:
                break
            e_out = rng.choice(sorted(current))
            pool = [e for e in universe if e not in current]
            if not pool:
                break
            e_in = rng.choice(pool)
            candidate = (current - {e_out}) | {e_in}
            if not inst.is_k_integrated(inst.bridge_adjacency(candidate), k):
                continue
            pruned = prune(candidate)
            if len(pruned) <= len(current):
                current = pruned
        if len(current) < len(best):
            best = tuple(sorted(current))
    return RandomizedBound(sizes, k, len(best), best, trials, seed)


def check_threshold_row(r: int, n: int, k: int, budget: int = DEFAULT_BUDGET) -> RowCheck:
    """Compare the certified minimum against the threshold row for (r, n, k).

    ``agrees`` is None when the search exhausted its budget, True when
    the measured minimum lands inside the predicted bridge bound and
    the witness uses at least the required number of central nodes,
    False otherwise.  A False here means a verified counterexample.
    """
    bound = bridge_threshold(r, n, k)
    centrals_required = central_threshold(r, n, k)
    verdict = min_bridges_exhaustive(r, n, k, budget=budget)
    if verdict.min_bridges is None:
        return RowCheck(r, n, k, bound, centrals_required, verdict, None, None)
    witness_centrals = len({node for edge in verdict.witness for node in edge})
    agrees = (
        bound.lower <= verdict.min_bridges <= bound.upper
        and witness_centrals >= centrals_required
    )
    return RowCheck(r, n, k, bound, centrals_required, verdict, witness_centrals, agrees)
