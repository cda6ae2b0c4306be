"""Verifiers for restricted matching classes and independent-set extractors.

A matching is given as an iterable of vertex pairs.  The three classes
checked here form a chain: induced implies acyclic implies uniquely
restricted (no alternating cycle).
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import MultiGraph, bipartition_forest, bridges, connected_components, is_forest

Edge = tuple[int, int]


class MatchingError(ValueError):
    """Raised when a precondition on the supplied matching fails."""


@dataclass(frozen=True)
class IndependentSetCert:
    """An independent set extracted from a matching, with its provenance."""

    vertices: frozenset[int]
    source: str  # "from-acyclic" | "from-ur"


def normalize(matching) -> frozenset[Edge]:
    out = set()
    for u, v in matching:
        out.add((u, v) if u <= v else (v, u))
    return frozenset(out)


def saturated(matching) -> set[int]:
    verts: set[int] = set()
    for u, v in matching:
        verts.add(u)
        verts.add(v)
    return verts


def is_matching(g: MultiGraph, matching) -> bool:
    pairs = normalize(matching)
    verts: set[int] = set()
    for u, v in pairs:
        if u == v or not (u in g and v in g) or not g.has_edge(u, v):
            return False
        if u in verts or v in verts:
            return False
        verts.add(u)
        verts.add(v)
    return True


def _require_matching(g: MultiGraph, matching) -> frozenset[Edge]:
    pairs = normalize(matching)
    if not is_matching(g, pairs):
        raise MatchingError("not a matching of the host graph")
    return pairs


def is_acyclic_matching(g: MultiGraph, matching) -> bool:
    pairs = _require_matching(g, matching)
    return is_forest(g, saturated(pairs))


def is_induced_matching(g: MultiGraph, matching) -> bool:
    pairs = _require_matching(g, matching)
    verts = saturated(pairs)
    induced = sum(1 for a, b in g.edge_pairs() if a in verts and b in verts)
    return induced == len(pairs)


def has_alternating_cycle(g: MultiGraph, matching, through: Edge | None = None) -> bool:
    """True iff g has an even cycle whose every second edge is matched.

    With ``through`` set, only cycles using that matched edge are sought
    (used by incremental enumeration: a new alternating cycle created by
    adding an edge must pass through it).
    """
    pairs = _require_matching(g, matching)
    verts = saturated(pairs)
    mate = {}
    for u, v in pairs:
        mate[u] = v
        mate[v] = u

    def nonmatched_neighbors(v: int) -> list[int]:
        out = []
        for w in g.neighbors(v):
            if w in verts and w != v and mate[v] != w:
                out.append(w)
        return sorted(out)

    def search_from(a: int, b: int) -> bool:
        # cycle pattern: a-b matched, then alternating, closing into a
        # with a non-matched edge
        visited = {a, b}

        def step(cur: int) -> bool:
            # arrived at cur via a matched edge; next edge is non-matched
            for w in nonmatched_neighbors(cur):
                if w == a:
                    return True
                if w in visited:
                    continue
                nxt = mate[w]
                if nxt in visited:
                    continue
                visited.add(w)
                visited.add(nxt)
                if step(nxt):
                    return True
                visited.discard(w)
                visited.discard(nxt)
            return False

        return step(b)

    if through is not None:
        u, v = through if through[0] <= through[1] else (through[1], through[0])
        if (u, v) not in pairs:
            raise MatchingError("'through' edge is not in the matching")
        starts = [(u, v)]
    else:
        starts = sorted(pairs)
    return any(search_from(a, b) for a, b in starts)


def is_ur_matching(g: MultiGraph, matching) -> bool:
    return not has_alternating_cycle(g, matching)


def acyclic_to_independent(g: MultiGraph, matching) -> IndependentSetCert:
    """One bipartition side per forest component; yields exactly |M| vertices.

    Per component, the side containing the component's lowest vertex id
    is taken (both sides have equal size because the component carries a
    perfect matching).
    """
    pairs = _require_matching(g, matching)
    verts = saturated(pairs)
    if not is_forest(g, verts):
        raise MatchingError("matching is not acyclic")
    side_a, side_b = bipartition_forest(g, verts)
    chosen: set[int] = set()
    seen: set[int] = set()
    for start in sorted(verts):
        if start in seen:
            continue
        comp = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for w in g.neighbors(v):
                if w in verts and w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        side = side_a if start in side_a else side_b
        chosen |= comp & side
    return IndependentSetCert(frozenset(chosen), "from-acyclic")


def ur_to_independent(g: MultiGraph, matching) -> IndependentSetCert:
    """Constructive extractor for uniquely restricted matchings.

    Repeatedly locates a matched bridge in the saturated induced
    subgraph (ties: lowest endpoint pair); a pendant matched bridge
    donates its pendant endpoint to the output.  Guarantees at least
    ceil((|M|+1)/2) independent vertices.
    """
    pairs = _require_matching(g, matching)
    if has_alternating_cycle(g, pairs):
        raise MatchingError("matching is not uniquely restricted")
    verts = saturated(pairs)
    # working copy of the induced subgraph
    h = MultiGraph()
    for v in sorted(verts):
        h.add_vertex(v)
    for a, b in sorted(set(g.edge_pairs())):
        if a in verts and b in verts and a != b:
            h.add_edge(a, b)
    chosen: set[int] = set()
    while True:
        big = [c for c in connected_components(h) if len(c) >= 4]
        if not big:
            break
        comp = big[0]
        bridge_eids = bridges(h)
        matched_bridges = sorted(
            eid
            for eid in bridge_eids
            if frozenset(h.endpoints(eid)) in {frozenset(p) for p in pairs}
            and h.endpoints(eid)[0] in comp
        )
        if not matched_bridges:
            raise RuntimeError(
                "no matched bridge in a large component; matching was not "
                "uniquely restricted"
            )
        eid = min(
            matched_bridges, key=lambda e: tuple(sorted(h.endpoints(e)))
        )
        a, b = h.endpoints(eid)
        pendant = [v for v in (a, b) if h.degree(v) == 1]
        if pendant:
            chosen.add(min(pendant))
        h.remove_vertex(a)
        h.remove_vertex(b)
    for comp in connected_components(h):
        chosen.add(min(comp))
    return IndependentSetCert(frozenset(chosen), "from-ur")


def check_distance_property(g: MultiGraph, matching, distance: int) -> bool:
    """True iff every vertex of g is within ``distance`` of a saturated vertex."""
    pairs = _require_matching(g, matching)
    frontier = saturated(pairs)
    reached = set(frontier)
    for _ in range(distance):
        nxt = set()
        for v in frontier:
            nxt |= g.neighbors(v)
        frontier = nxt - reached
        reached |= frontier
    return reached >= g.vertices
