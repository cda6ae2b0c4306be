"""Certified instance generators and the kernel preprocessing pass.

Three constructions are provided: graph doubling with a vertical
perfect matching, the pairing construction that equates independence
number with acyclic matching number, and the multi-instance exact-cover
composition with its selector star (optionally a selector clique).
Vertex id layouts are fixed so emitted files are stable.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .graph import MultiGraph
from .matchings import Edge, normalize


@dataclass(frozen=True)
class X3CFamily:
    """t exact-3-cover instances over the common universe [1..n]."""

    universe_size: int
    instances: tuple[tuple[frozenset[int], ...], ...]

    def __post_init__(self) -> None:
        n = self.universe_size
        if n <= 0 or n % 3 != 0:
            raise ValueError("universe size must be a positive multiple of 3")
        seen = set()
        for inst in self.instances:
            for t in inst:
                if len(t) != 3 or not t <= set(range(1, n + 1)):
                    raise ValueError(f"invalid triple {sorted(t)}")
            key = frozenset(inst)
            if key in seen:
                raise ValueError("instances must be pairwise distinct collections")
            seen.add(key)

    @property
    def union_collection(self) -> list[frozenset[int]]:
        """All distinct triples, in sorted order (the gadget order)."""
        triples = {t for inst in self.instances for t in inst}
        return sorted(triples, key=lambda t: tuple(sorted(t)))


@dataclass(frozen=True)
class SetGadget:
    """Vertex ids of one 3-set gadget."""

    interface: tuple[tuple[int, int], ...]  # (element, vertex id), sorted
    hub_u: int
    hub_w: int
    pendant_u: int
    pendant_w: int

    def interface_ids(self) -> set[int]:
        return {vid for _, vid in self.interface}

    def all_ids(self) -> set[int]:
        return self.interface_ids() | {
            self.hub_u,
            self.hub_w,
            self.pendant_u,
            self.pendant_w,
        }


@dataclass(frozen=True)
class GadgetIndex:
    """Full id/edge-class map of a composed exact-cover instance."""

    family: X3CFamily
    element_ids: dict[int, int] = field(compare=False)  # universe element -> vertex
    gadgets: tuple[SetGadget, ...] = ()
    selector_center: int = 0
    selector_leaves: tuple[int, ...] = ()
    edge_classes: dict[Edge, str] = field(compare=False, default_factory=dict)
    target_size: int = 0
    clique_variant: bool = False

    def gadget_for(self, triple: frozenset[int]) -> SetGadget:
        pos = self.family.union_collection.index(triple)
        return self.gadgets[pos]


def double_with_vertical(
    g: MultiGraph,
) -> tuple[MultiGraph, list[Edge], dict[int, tuple[int, int]]]:
    """Two copies of g linked by a perfect matching of vertical edges.

    Layout: original vertices in sorted order map to 1..n (first copy)
    and n+1..2n (second copy).  Returns (H, vertical edges, id map).
    """
    order = sorted(g.vertices)
    n = len(order)
    pos = {v: i + 1 for i, v in enumerate(order)}
    h = MultiGraph()
    for i in range(1, 2 * n + 1):
        h.add_vertex(i)
    for a, b in sorted(set(g.edge_pairs())):
        if a == b:
            raise ValueError("doubling is defined for simple graphs")
        h.add_edge(pos[a], pos[b])
        h.add_edge(pos[a] + n, pos[b] + n)
    verticals = []
    for v in order:
        h.add_edge(pos[v], pos[v] + n)
        verticals.append((pos[v], pos[v] + n))
    mapping = {v: (pos[v], pos[v] + n) for v in order}
    return h, verticals, mapping


def panda_construct(
    g: MultiGraph,
) -> tuple[MultiGraph, dict[Edge, str], dict[int, tuple[int, int]]]:
    """Pair every vertex with a shadow copy and mirror all adjacencies.

    Edge classes: "pair" (vertex to its own shadow), "base" (original
    edges), "cross" (vertex to a neighbor's shadow), "twin" (shadows of
    neighbors).  Layout: originals 1..n, shadows n+1..2n.
    """
    order = sorted(g.vertices)
    n = len(order)
    pos = {v: i + 1 for i, v in enumerate(order)}
    h = MultiGraph()
    for i in range(1, 2 * n + 1):
        h.add_vertex(i)
    classes: dict[Edge, str] = {}

    def add(u: int, v: int, cls: str) -> None:
        key = (u, v) if u <= v else (v, u)
        if key not in classes:
            h.add_edge(*key)
            classes[key] = cls

    for v in order:
        add(pos[v], pos[v] + n, "pair")
    for a, b in sorted(set(g.edge_pairs())):
        if a == b:
            raise ValueError("pairing construction is defined for simple graphs")
        add(pos[a], pos[b], "base")
        add(pos[a], pos[b] + n, "cross")
        add(pos[b], pos[a] + n, "cross")
        add(pos[a] + n, pos[b] + n, "twin")
    mapping = {v: (pos[v], pos[v] + n) for v in order}
    return h, classes, mapping


def x3c_compose(
    family: X3CFamily, clique_variant: bool = False
) -> tuple[MultiGraph, int, GadgetIndex]:
    """Compose a family of exact-cover instances into one matching instance.

    Layout: element vertices 1..n; then 7 vertices per gadget in union
    collection order (interface a<b<c, hub_u, hub_w, pendant_u,
    pendant_w); then the selector center; then one selector leaf per
    instance.  The target size is 2|C| + 2n/3 + 1.
    """
    n = family.universe_size
    triples = family.union_collection
    t = len(family.instances)
    g = MultiGraph()
    element_ids = {a: g.add_vertex(a) for a in range(1, n + 1)}
    classes: dict[Edge, str] = {}

    def add(u: int, v: int, cls: str) -> None:
        key = (u, v) if u <= v else (v, u)
        g.add_edge(*key)
        classes[key] = cls

    gadgets: list[SetGadget] = []
    nxt = n + 1
    for triple in triples:
        elems = sorted(triple)
        iface = []
        for a in elems:
            iface.append((a, nxt))
            g.add_vertex(nxt)
            nxt += 1
        hub_u, hub_w, pend_u, pend_w = nxt, nxt + 1, nxt + 2, nxt + 3
        for vid in (hub_u, hub_w, pend_u, pend_w):
            g.add_vertex(vid)
        nxt += 4
        for _, vid in iface:
            add(vid, hub_u, "gadget")
            add(vid, hub_w, "gadget")
        add(hub_u, hub_w, "gadget")
        add(hub_u, pend_u, "gadget")
        add(hub_w, pend_w, "gadget")
        for a, vid in iface:
            add(vid, element_ids[a], "cross")
        gadgets.append(SetGadget(tuple(iface), hub_u, hub_w, pend_u, pend_w))
    center = g.add_vertex(nxt)
    nxt += 1
    leaves = []
    for _ in range(t):
        leaves.append(g.add_vertex(nxt))
        nxt += 1
    for leaf in leaves:
        add(center, leaf, "selector")
    for i, inst in enumerate(family.instances):
        inst_set = set(inst)
        for pos_j, triple in enumerate(triples):
            if triple not in inst_set:
                for _, vid in gadgets[pos_j].interface:
                    add(leaves[i], vid, "upper")
    if clique_variant:
        for a, b in itertools.combinations(leaves, 2):
            add(a, b, "selector")
    target = 2 * len(triples) + (2 * n) // 3 + 1
    index = GadgetIndex(
        family=family,
        element_ids=element_ids,
        gadgets=tuple(gadgets),
        selector_center=center,
        selector_leaves=tuple(leaves),
        edge_classes=classes,
        target_size=target,
        clique_variant=clique_variant,
    )
    return g, target, index


def x3c_solution_to_matching(
    index: GadgetIndex,
    solution: list[frozenset[int]],
    instance_pos: int,
) -> frozenset[Edge]:
    """The constructive witness for a solved instance of the family.

    Selected gadgets contribute their three cross edges plus one hub
    pendant; unselected gadgets contribute both hub pendants; the
    selector edge of the solved instance completes the matching.
    """
    family = index.family
    n = family.universe_size
    solution = [frozenset(t) for t in solution]
    inst = set(family.instances[instance_pos])
    if any(t not in inst for t in solution):
        raise ValueError("solution uses triples outside the chosen instance")
    covered: set[int] = set()
    for t in solution:
        if covered & t:
            raise ValueError("solution triples are not disjoint")
        covered |= t
    if covered != set(range(1, n + 1)):
        raise ValueError("solution does not cover the universe")
    chosen = set(solution)
    pairs: set[Edge] = set()
    for pos, triple in enumerate(family.union_collection):
        gadget = index.gadgets[pos]
        if triple in chosen:
            for a, vid in gadget.interface:
                pairs.add((vid, index.element_ids[a]))
            pairs.add((gadget.hub_u, gadget.pendant_u))
        else:
            pairs.add((gadget.hub_u, gadget.pendant_u))
            pairs.add((gadget.hub_w, gadget.pendant_w))
    pairs.add((index.selector_center, index.selector_leaves[instance_pos]))
    return normalize(pairs)


def classify_gadgets(index: GadgetIndex, matching) -> dict[int, str]:
    """Per-gadget status: "happy" (interface saturated via a cross edge),
    "touched" (via an upper edge), else "neither".  A gadget that is both
    reports "happy"."""
    pairs = normalize(matching)
    by_class: dict[Edge, str] = index.edge_classes
    out: dict[int, str] = {}
    for pos, gadget in enumerate(index.gadgets):
        iface = gadget.interface_ids()
        happy = False
        touched = False
        for e in pairs:
            cls = by_class.get(e)
            if cls == "cross" and iface & set(e):
                happy = True
            elif cls == "upper" and iface & set(e):
                touched = True
        out[pos] = "happy" if happy else ("touched" if touched else "neither")
    return out


def apply_kernel_rules(g: MultiGraph) -> MultiGraph:
    """Exhaustive pass of the three degree-local deletion rules.

    R0 drops isolated vertices; R1 drops one of two degree-1 vertices
    sharing a neighbor; R2 drops one of two degree-2 vertices sharing
    both neighbors.  Lowest-id candidate first, rules tried in order,
    repeated to a fixpoint.  Optima of all three matching classes are
    preserved.
    """
    if not g.is_simple():
        raise ValueError("kernel rules are defined for simple graphs")
    work = g.copy()
    while True:
        victim = _rule_victim(work)
        if victim is None:
            return work
        work.remove_vertex(victim)


def _rule_victim(g: MultiGraph) -> int | None:
    for v in sorted(g.vertices):
        if g.degree(v) == 0:
            return v
    # R1: two degree-1 vertices with the same neighbor
    leaves_by_anchor: dict[int, list[int]] = {}
    for v in sorted(g.vertices):
        if g.degree(v) == 1:
            (anchor,) = g.neighbors(v)
            leaves_by_anchor.setdefault(anchor, []).append(v)
    r1 = [vs[0] for vs in leaves_by_anchor.values() if len(vs) >= 2]
    if r1:
        return min(r1)
    # R2: two degree-2 vertices with identical neighbor pairs
    twins: dict[frozenset[int], list[int]] = {}
    for v in sorted(g.vertices):
        if g.degree(v) == 2:
            key = frozenset(g.neighbors(v))
            if len(key) == 2:
                twins.setdefault(key, []).append(v)
    r2 = [vs[0] for vs in twins.values() if len(vs) >= 2]
    if r2:
        return min(r2)
    return None
