"""Exhaustive exact solvers used as ground truth at desk scale.

Everything here enumerates; size limits keep runs short and are plain
configuration, not contracts.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .graph import MultiGraph, is_forest
from .matchings import Edge, has_alternating_cycle, normalize, saturated
from .weighted import WeightedInstance

DEFAULT_VERTEX_LIMIT = 14
MATCHING_KINDS = ("acyclic", "induced", "ur", "any")


class OracleLimitError(ValueError):
    """Instance exceeds the configured enumeration limit."""


@dataclass(frozen=True)
class OracleReport:
    problem: str
    value: int
    witness: object = None


def _check_limit(g: MultiGraph, limit: int) -> None:
    if g.num_vertices > limit:
        raise OracleLimitError(
            f"{g.num_vertices} vertices exceeds the oracle limit of {limit}"
        )


def _extension_ok(g: MultiGraph, pairs: list[Edge], new: Edge, kind: str) -> bool:
    """Whether ``pairs + [new]`` still satisfies ``kind``.

    All three classes are hereditary under edge removal, so incremental
    checking is a sound pruning rule.
    """
    if kind == "any":
        return True
    candidate = pairs + [new]
    if kind == "acyclic":
        return is_forest(g, saturated(candidate))
    if kind == "induced":
        verts = saturated(candidate)
        count = sum(1 for a, b in g.edge_pairs() if a in verts and b in verts)
        return count == len(candidate)
    if kind == "ur":
        return not has_alternating_cycle(g, candidate, through=new)
    raise ValueError(f"unknown matching kind {kind!r}")


def _enumerate_best(
    g: MultiGraph, kind: str, all_optimal: bool
) -> tuple[int, list[frozenset[Edge]]]:
    edges = sorted(set(p for p in g.edge_pairs() if p[0] != p[1]))
    n_free = g.num_vertices
    best = 0
    best_sets: list[frozenset[Edge]] = [frozenset()]

    def recurse(idx: int, pairs: list[Edge], used: set[int], free: int) -> None:
        nonlocal best, best_sets
        if pairs:
            size = len(pairs)
            if size > best:
                best = size
                best_sets = [frozenset(pairs)]
            elif size == best and all_optimal:
                best_sets.append(frozenset(pairs))
        bound = len(pairs) + free // 2
        if bound < best or (bound == best and not all_optimal):
            return
        for i in range(idx, len(edges)):
            u, v = edges[i]
            if u in used or v in used:
                continue
            if not _extension_ok(g, pairs, (u, v), kind):
                continue
            pairs.append((u, v))
            used.add(u)
            used.add(v)
            recurse(i + 1, pairs, used, free - 2)
            pairs.pop()
            used.discard(u)
            used.discard(v)

    recurse(0, [], set(), n_free)
    if all_optimal and best == 0:
        best_sets = [frozenset()]
    return best, best_sets


_TAGS = {"acyclic": "AM", "induced": "IM", "ur": "URM", "any": "MM"}


def max_restricted_matching(
    g: MultiGraph, kind: str, limit: int = DEFAULT_VERTEX_LIMIT
) -> OracleReport:
    """Exact maximum matching of the given class by pruned enumeration."""
    if kind not in MATCHING_KINDS:
        raise ValueError(f"unknown matching kind {kind!r}")
    _check_limit(g, limit)
    best, sets = _enumerate_best(g, kind, all_optimal=False)
    return OracleReport(_TAGS[kind], best, sets[0])


def all_maximum_matchings(
    g: MultiGraph, kind: str, limit: int = DEFAULT_VERTEX_LIMIT
) -> list[frozenset[Edge]]:
    """Every optimum matching of the given class."""
    if kind not in MATCHING_KINDS:
        raise ValueError(f"unknown matching kind {kind!r}")
    _check_limit(g, limit)
    _, sets = _enumerate_best(g, kind, all_optimal=True)
    return sets


def max_matching(g: MultiGraph, limit: int = DEFAULT_VERTEX_LIMIT) -> OracleReport:
    return max_restricted_matching(g, "any", limit)


def max_independent_set(g: MultiGraph, limit: int = DEFAULT_VERTEX_LIMIT) -> OracleReport:
    _check_limit(g, limit)
    verts = sorted(g.vertices)
    best: set[int] = set()

    def recurse(idx: int, current: set[int]) -> None:
        nonlocal best
        if len(current) + len(verts) - idx <= len(best):
            return
        if idx == len(verts):
            if len(current) > len(best):
                best = set(current)
            return
        v = verts[idx]
        if not any(g.has_edge(v, w) for w in current) and not g.has_self_loop(v):
            current.add(v)
            recurse(idx + 1, current)
            current.discard(v)
        recurse(idx + 1, current)

    recurse(0, set())
    return OracleReport("IS", len(best), frozenset(best))


def enumerate_independent_sets(g: MultiGraph) -> Iterator[frozenset[int]]:
    """All independent sets (including the empty one); desk scale only."""
    verts = sorted(g.vertices)
    for r in range(len(verts) + 1):
        for combo in itertools.combinations(verts, r):
            sset = set(combo)
            if all(
                not g.has_edge(u, v)
                for u, v in itertools.combinations(combo, 2)
            ) and not any(g.has_self_loop(v) for v in sset):
                yield frozenset(combo)


def min_fvs(g: MultiGraph, limit: int = DEFAULT_VERTEX_LIMIT) -> OracleReport:
    _check_limit(g, limit)
    verts = sorted(g.vertices)
    for size in range(len(verts) + 1):
        for combo in itertools.combinations(verts, size):
            if is_forest(g, g.vertices - set(combo)):
                return OracleReport("FVS", size, frozenset(combo))
    raise AssertionError("unreachable: the full vertex set is always an FVS")


def all_fvs(
    g: MultiGraph, size_cap: int | None = None, limit: int = DEFAULT_VERTEX_LIMIT
) -> list[frozenset[int]]:
    """Every feedback vertex set up to ``size_cap`` (default: no cap)."""
    _check_limit(g, limit)
    verts = sorted(g.vertices)
    cap = len(verts) if size_cap is None else size_cap
    out = []
    for size in range(cap + 1):
        for combo in itertools.combinations(verts, size):
            if is_forest(g, g.vertices - set(combo)):
                out.append(frozenset(combo))
    return out


def solve_x3c(
    universe_size: int, triples: list[frozenset[int]]
) -> list[frozenset[int]] | None:
    """Exact cover of [1..n] by disjoint 3-element subsets, or None."""
    if universe_size % 3 != 0:
        raise ValueError("universe size must be divisible by 3")
    triples = [frozenset(t) for t in triples]
    for t in triples:
        if len(t) != 3 or not t <= set(range(1, universe_size + 1)):
            raise ValueError(f"invalid triple {sorted(t)}")

    chosen: list[frozenset[int]] = []

    def recurse(uncovered: set[int]) -> bool:
        if not uncovered:
            return True
        pivot = min(uncovered)
        for t in triples:
            if pivot in t and t <= uncovered:
                chosen.append(t)
                if recurse(uncovered - t):
                    return True
                chosen.pop()
        return False

    if recurse(set(range(1, universe_size + 1))):
        return chosen
    return None


def brute_force_mwm(
    inst: WeightedInstance, limit: int = DEFAULT_VERTEX_LIMIT
) -> OracleReport:
    """Maximum-weight matching by full enumeration of all matchings."""
    inst.validate()
    g = inst.graph
    _check_limit(g, limit)
    edges = sorted(set(g.edge_pairs()))
    best_total = 0
    best: frozenset[Edge] = frozenset()

    def recurse(idx: int, pairs: list[Edge], used: set[int], total: int) -> None:
        nonlocal best_total, best
        if total > best_total:
            best_total = total
            best = frozenset(pairs)
        for i in range(idx, len(edges)):
            u, v = edges[i]
            if u in used or v in used:
                continue
            pairs.append((u, v))
            used.add(u)
            used.add(v)
            recurse(i + 1, pairs, used, total + inst.edge_weight(u, v))
            pairs.pop()
            used.discard(u)
            used.discard(v)

    recurse(0, [], set(), 0)
    return OracleReport("MWM", best_total, best)


def matching_count_of_induced_perfect(g: MultiGraph, matching) -> int:
    """Number of perfect matchings of the subgraph induced by the
    saturated vertices -- the independent oracle behind the alternating
    cycle test."""
    pairs = normalize(matching)
    verts = sorted(saturated(pairs))
    adj = {
        v: {w for w in g.neighbors(v) if w in set(verts) and w != v}
        for v in verts
    }

    def count(remaining: frozenset[int]) -> int:
        if not remaining:
            return 1
        v = min(remaining)
        total = 0
        for w in sorted(adj[v] & remaining):
            total += count(remaining - {v, w})
        return total

    return count(frozenset(verts))
