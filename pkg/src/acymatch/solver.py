"""Randomized below-triviality solver for acyclic matchings.

The pipeline: repeatedly prune degree-<=1 vertices and contract maximal
degree-2 paths into virtual vertices (keeping a replacement log), then
delete a cycle-hitting vertex chosen at random until the graph is empty
or the deletion budget runs out.  A successful sample is reconstructed
into a witness via one exact maximum-weight matching call on the
original graph augmented with one heavy vertex per virtual pick.

Randomness is one-sided: a "no" on a yes-instance is possible (hence the
repetition driver), a "yes" is always certified by the verifier.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .graph import (
    MultiGraph,
    find_maximal_deg2_path,
    has_cycle,
    path_replace,
)
from .matchings import Edge, is_acyclic_matching
from .weighted import WeightedInstance, meets_target

DEFAULT_TRIAL_CAP = 1_000_000


class SolverInternalError(RuntimeError):
    """A certified reconstruction failed its defensive check (engine bug)."""


@dataclass(frozen=True)
class ReplacementLog:
    """Ordered record of path contractions: virtual id -> replaced vertices.

    Paths may reference earlier virtual ids; the replacement order forms
    a DAG, so expansion always terminates.
    """

    records: tuple[tuple[int, tuple[int, ...]], ...] = ()

    def as_dict(self) -> dict[int, tuple[int, ...]]:
        return dict(self.records)

    def __contains__(self, vp: int) -> bool:
        return any(key == vp for key, _ in self.records)


@dataclass(frozen=True)
class VfvsOutcome:
    """Result of one virtual-FVS sampling pass."""

    verdict: str  # "found" | "no"
    picked: frozenset[int] = frozenset()  # original and virtual vertex ids
    pruned: frozenset[int] = frozenset()
    log: ReplacementLog = ReplacementLog()

    @property
    def virtual_picked(self) -> frozenset[int]:
        keys = {key for key, _ in self.log.records}
        return frozenset(v for v in self.picked if v in keys)


@dataclass(frozen=True)
class AmbtAnswer:
    verdict: str  # "yes" | "no"
    witness: frozenset[Edge] | None = None
    trials_used: int = 0
    trials_capped: bool = False


def sample_virtual_fvs(g: MultiGraph, budget: int, rng: random.Random) -> VfvsOutcome:
    """One randomized sampling pass over a private copy of g.

    Deterministic steps (pruning, contraction, self-loop picks) use
    lowest-id tie-breaking; only the cycle-hitting edge/endpoint pick
    consumes randomness: an edge uniform over the live edge multiset,
    then one of its two endpoint slots uniformly.
    """
    work = g.copy()
    pruned: set[int] = set()
    picked: set[int] = set()
    records: list[tuple[int, tuple[int, ...]]] = []
    remaining = budget
    while work.num_vertices > 0:
        # prune everything of degree <= 1
        changed = True
        while changed:
            changed = False
            for v in sorted(work.vertices):
                if work.degree(v) <= 1:
                    work.remove_vertex(v)
                    pruned.add(v)
                    changed = True
        # contract every maximal degree-2 path
        while True:
            path = find_maximal_deg2_path(work)
            if path is None:
                break
            _, vp = path_replace(work, path, in_place=True)
            records.append((vp, path.vertices))
        if work.num_vertices == 0:
            break
        if not has_cycle(work):
            continue
        if remaining <= 0:
            return VfvsOutcome("no")
        loops = sorted(v for v in work.vertices if work.has_self_loop(v))
        if loops:
            v = loops[0]
        else:
            eids = sorted(work.edge_ids)
            eid = eids[rng.randrange(len(eids))]
            v = work.endpoints(eid)[rng.randrange(2)]
        picked.add(v)
        work.remove_vertex(v)
        remaining -= 1
    return VfvsOutcome(
        "found",
        picked=frozenset(picked),
        pruned=frozenset(pruned),
        log=ReplacementLog(tuple(records)),
    )


def safe_set(vp: int, log: ReplacementLog) -> frozenset[int]:
    """Original vertices obtained by recursively expanding a virtual vertex."""
    table = log.as_dict()
    if vp not in table:
        raise ValueError(f"{vp} is not a logged virtual vertex")
    out: set[int] = set()
    stack = [vp]
    while stack:
        v = stack.pop()
        if v in table:
            stack.extend(table[v])
        else:
            out.add(v)
    return frozenset(out)


def build_weighted_instance(
    g: MultiGraph, outcome: VfvsOutcome, target_size: int
) -> WeightedInstance:
    """Reconstruction instance on the ORIGINAL graph.

    One fresh vertex per virtual pick, adjacent to that pick's safe set;
    its edges get weight |E(g)|+1 so any target-reaching matching must
    saturate every fresh vertex.  Non-virtual picks are deleted.
    Target: ``target_size`` plus the forced heavy contribution.
    """
    if outcome.verdict != "found":
        raise ValueError("cannot build an instance from a failed sampling pass")
    heavy = g.num_edges + 1
    work = g.copy()
    weights = {eid: 1 for eid in work.edge_ids}
    virtual = sorted(outcome.virtual_picked)
    for vp in virtual:
        fresh = work.add_vertex()
        for v in sorted(safe_set(vp, outcome.log)):
            weights[work.add_edge(fresh, v)] = heavy
    for v in sorted(outcome.picked - outcome.virtual_picked):
        for eid in work.incident_edges(v):
            weights.pop(eid, None)
        work.remove_vertex(v)
    return WeightedInstance(work, weights, target_size + len(virtual) * heavy)


def solve_once(
    g: MultiGraph,
    target_size: int,
    rng: random.Random,
    cache: dict | None = None,
) -> AmbtAnswer:
    """One randomized attempt; a "yes" always carries a verified witness.

    ``cache`` (optional, shared across trials) memoizes the exact
    reconstruction step per distinct sampling outcome.
    """
    if target_size < 0:
        raise ValueError("target size must be nonnegative")
    if target_size == 0:
        return AmbtAnswer("yes", frozenset(), trials_used=1)
    budget = g.num_vertices - 2 * target_size
    if budget < 0:
        return AmbtAnswer("no", trials_used=1)
    outcome = sample_virtual_fvs(g, budget, rng)
    if outcome.verdict == "no":
        return AmbtAnswer("no", trials_used=1)
    key = (
        frozenset(outcome.picked - outcome.virtual_picked),
        frozenset(safe_set(vp, outcome.log) for vp in outcome.virtual_picked),
    )
    if cache is not None and key in cache:
        matching = cache[key]
    else:
        inst = build_weighted_instance(g, outcome, target_size)
        matching = meets_target(inst)
        if matching is not None:
            matching = frozenset(
                (u, v) for u, v in matching if inst.edge_weight(u, v) == 1
            )
        if cache is not None:
            cache[key] = matching
    if matching is None:
        return AmbtAnswer("no", trials_used=1)
    if len(matching) < target_size or not is_acyclic_matching(g, matching):
        raise SolverInternalError(
            "reconstructed matching failed verification; weighted engine bug"
        )
    return AmbtAnswer("yes", matching, trials_used=1)


def default_trials(g: MultiGraph, target_size: int, cap: int = DEFAULT_TRIAL_CAP) -> tuple[int, bool]:
    """The repetition count 10**budget, capped; returns (trials, was_capped)."""
    budget = max(g.num_vertices - 2 * target_size, 0)
    want = 10**budget
    return (min(want, cap), want > cap)


def solve(
    g: MultiGraph,
    target_size: int,
    seed: int = 0,
    trials: int | None = None,
    cap: int = DEFAULT_TRIAL_CAP,
) -> AmbtAnswer:
    """Repetition driver: first "yes" wins; "no" only after every trial fails.

    Trial i draws from an independent stream derived from (seed, i), so
    runs are reproducible and trials are replayable in isolation.
    """
    if cap < 1:
        raise ValueError("trial cap must be positive")
    capped = False
    if trials is None:
        trials, capped = default_trials(g, target_size, cap)
    if trials <= 0:
        raise ValueError("trials must be positive")
    cache: dict = {}
    for i in range(trials):
        rng = trial_rng(seed, i)
        answer = solve_once(g, target_size, rng, cache=cache)
        if answer.verdict == "yes":
            return AmbtAnswer("yes", answer.witness, trials_used=i + 1, trials_capped=capped)
    return AmbtAnswer("no", None, trials_used=trials, trials_capped=capped)


def trial_rng(seed: int, trial: int) -> random.Random:
    """Deterministic per-trial stream; string seeding avoids hash salting."""
    return random.Random(f"{seed}:{trial}")
