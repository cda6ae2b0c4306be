"""Multigraph data model and structural primitives.

Self-loops and parallel edges are first-class citizens: a self-loop
contributes 2 to the degree of its vertex, and both self-loops and
parallel edge pairs count as cycles.  Vertex and edge ids are stable --
they are never reused after a deletion, so external logs can reference
removed vertices unambiguously.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


class GraphError(ValueError):
    """Raised on malformed graph operations (unknown ids, invalid paths)."""


class MultiGraph:
    """Undirected multigraph with integer vertex ids and integer edge ids."""

    def __init__(self) -> None:
        self._endpoints: dict[int, tuple[int, int]] = {}
        self._incidence: dict[int, set[int]] = {}
        self._virtual: set[int] = set()
        self._next_vertex = 0
        self._next_edge = 0

    # -- construction ---------------------------------------------------

    @classmethod
    def from_edges(
        cls,
        edges: Iterable[tuple[int, int]],
        vertices: Iterable[int] = (),
    ) -> "MultiGraph":
        g = cls()
        for v in vertices:
            g.add_vertex(v)
        for u, v in edges:
            if u not in g._incidence:
                g.add_vertex(u)
            if v not in g._incidence:
                g.add_vertex(v)
            g.add_edge(u, v)
        return g

    def copy(self) -> "MultiGraph":
        g = MultiGraph()
        g._endpoints = dict(self._endpoints)
        g._incidence = {v: set(s) for v, s in self._incidence.items()}
        g._virtual = set(self._virtual)
        g._next_vertex = self._next_vertex
        g._next_edge = self._next_edge
        return g

    def add_vertex(self, v: int | None = None, virtual: bool = False) -> int:
        if v is None:
            v = self._next_vertex
        if v in self._incidence:
            raise GraphError(f"vertex {v} already present")
        self._incidence[v] = set()
        self._next_vertex = max(self._next_vertex, v + 1)
        if virtual:
            self._virtual.add(v)
        return v

    def add_edge(self, u: int, v: int) -> int:
        if u not in self._incidence or v not in self._incidence:
            raise GraphError(f"edge ({u},{v}) references unknown vertex")
        eid = self._next_edge
        self._next_edge += 1
        self._endpoints[eid] = (u, v)
        self._incidence[u].add(eid)
        self._incidence[v].add(eid)
        return eid

    def remove_edge(self, eid: int) -> None:
        u, v = self._endpoints.pop(eid)
        self._incidence[u].discard(eid)
        self._incidence[v].discard(eid)

    def remove_vertex(self, v: int) -> None:
        if v not in self._incidence:
            raise GraphError(f"unknown vertex {v}")
        for eid in list(self._incidence[v]):
            self.remove_edge(eid)
        del self._incidence[v]
        self._virtual.discard(v)

    # -- queries --------------------------------------------------------

    @property
    def vertices(self) -> set[int]:
        return set(self._incidence)

    @property
    def edge_ids(self) -> set[int]:
        return set(self._endpoints)

    @property
    def num_vertices(self) -> int:
        return len(self._incidence)

    @property
    def num_edges(self) -> int:
        return len(self._endpoints)

    def __contains__(self, v: int) -> bool:
        return v in self._incidence

    def endpoints(self, eid: int) -> tuple[int, int]:
        return self._endpoints[eid]

    def is_virtual(self, v: int) -> bool:
        return v in self._virtual

    def incident_edges(self, v: int) -> set[int]:
        if v not in self._incidence:
            raise GraphError(f"unknown vertex {v}")
        return set(self._incidence[v])

    def degree(self, v: int) -> int:
        """Incidence count at v; a self-loop contributes 2."""
        if v not in self._incidence:
            raise GraphError(f"unknown vertex {v}")
        d = 0
        for eid in self._incidence[v]:
            a, b = self._endpoints[eid]
            d += 2 if a == b else 1
        return d

    def neighbors(self, v: int) -> set[int]:
        """Distinct neighbors of v (v itself when a self-loop is present)."""
        out = set()
        for eid in self.incident_edges(v):
            a, b = self._endpoints[eid]
            out.add(b if a == v else a)
        return out

    def has_self_loop(self, v: int) -> bool:
        return any(a == b for a, b in (self._endpoints[e] for e in self._incidence[v]))

    def edges_between(self, u: int, v: int) -> list[int]:
        return [
            eid
            for eid in self.incident_edges(u)
            if frozenset(self._endpoints[eid]) == frozenset((u, v))
        ]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.edges_between(u, v))

    def is_simple(self) -> bool:
        seen = set()
        for a, b in self._endpoints.values():
            if a == b:
                return False
            key = frozenset((a, b))
            if key in seen:
                return False
            seen.add(key)
        return True

    def edge_pairs(self) -> Iterator[tuple[int, int]]:
        """Endpoint pairs of all edges, normalized (u <= v)."""
        for a, b in self._endpoints.values():
            yield (a, b) if a <= b else (b, a)


@dataclass(frozen=True)
class VertexPath:
    """A maximal degree-2 path: ordered vertices, all of degree exactly 2.

    ``is_cycle`` is set when the vertices form a degree-2 cycle (every
    incident edge stays inside the sequence).
    """

    vertices: tuple[int, ...]
    is_cycle: bool = False

    def __len__(self) -> int:
        return len(self.vertices)


def connected_components(g: MultiGraph) -> list[set[int]]:
    """Vertex sets of the maximal connected subgraphs, sorted by minimum id."""
    seen: set[int] = set()
    comps = []
    for start in sorted(g.vertices):
        if start in seen:
            continue
        comp = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for w in g.neighbors(v):
                if w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        comps.append(comp)
    return comps


def has_cycle(g: MultiGraph) -> bool:
    """True iff g contains a simple cycle, a parallel edge pair, or a self-loop."""
    if any(a == b for a, b in g._endpoints.values()):
        return True
    return g.num_edges > g.num_vertices - len(connected_components(g))


def is_forest(g: MultiGraph, subset: set[int] | None = None) -> bool:
    """True iff the subgraph induced by ``subset`` (default: all of g) is acyclic."""
    if subset is None:
        return not has_cycle(g)
    subset = set(subset)
    missing = subset - g.vertices
    if missing:
        raise GraphError(f"vertices not in graph: {sorted(missing)}")
    n = len(subset)
    m = 0
    for a, b in g._endpoints.values():
        if a in subset and b in subset:
            if a == b:
                return False
            m += 1
    # count components of the induced subgraph
    seen: set[int] = set()
    comps = 0
    for start in subset:
        if start in seen:
            continue
        comps += 1
        stack = [start]
        seen.add(start)
        while stack:
            v = stack.pop()
            for w in g.neighbors(v):
                if w in subset and w not in seen:
                    seen.add(w)
                    stack.append(w)
    return m <= n - comps


def bridges(g: MultiGraph) -> set[int]:
    """Edge ids whose deletion increases the component count.

    Parallel edges and self-loops are never bridges.
    """
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    out: set[int] = set()
    counter = 0
    for root in sorted(g.vertices):
        if root in disc:
            continue
        # iterative DFS; each stack frame tracks the edge used to enter
        stack: list[tuple[int, int | None, Iterator[int]]] = []
        disc[root] = low[root] = counter
        counter += 1
        stack.append((root, None, iter(sorted(g.incident_edges(root)))))
        while stack:
            v, in_edge, it = stack[-1]
            advanced = False
            for eid in it:
                a, b = g.endpoints(eid)
                if a == b:
                    continue  # self-loop
                if eid == in_edge:
                    continue  # the tree edge we came through; parallels still count
                w = b if a == v else a
                if w not in disc:
                    disc[w] = low[w] = counter
                    counter += 1
                    stack.append((w, eid, iter(sorted(g.incident_edges(w)))))
                    advanced = True
                    break
                low[v] = min(low[v], disc[w])
            if not advanced:
                stack.pop()
                if stack:
                    parent = stack[-1][0]
                    low[parent] = min(low[parent], low[v])
                    if low[v] > disc[parent] and len(g.edges_between(parent, v)) == 1:
                        out.add(in_edge)  # type: ignore[arg-type]
    return out


def bipartition_forest(g: MultiGraph, subset: set[int]) -> tuple[set[int], set[int]]:
    """2-color the forest induced by ``subset``; the lowest id of each
    component lands on the first side.

    Raises GraphError when the induced subgraph has a cycle.
    """
    subset = set(subset)
    if not is_forest(g, subset):
        raise GraphError("induced subgraph is not a forest")
    color: dict[int, int] = {}
    for start in sorted(subset):
        if start in color:
            continue
        color[start] = 0
        stack = [start]
        while stack:
            v = stack.pop()
            for w in g.neighbors(v):
                if w in subset and w not in color:
                    color[w] = 1 - color[v]
                    stack.append(w)
    side_a = {v for v, c in color.items() if c == 0}
    return side_a, subset - side_a


def _deg2_eligible(g: MultiGraph) -> set[int]:
    return {
        v
        for v in g.vertices
        if g.degree(v) == 2 and not g.has_self_loop(v)
    }


def _trace_component(g: MultiGraph, start: int, eligible: set[int]) -> VertexPath | None:
    """Order the degree-2 component containing ``start`` into a path or cycle."""
    # internal incidence slots: edges to other eligible vertices
    comp = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in g.neighbors(v):
            if w in eligible and w not in comp:
                comp.add(w)
                stack.append(w)

    def internal_slots(v: int) -> int:
        return sum(
            1
            for eid in g.incident_edges(v)
            if (g.endpoints(eid)[0] if g.endpoints(eid)[1] == v else g.endpoints(eid)[1]) in comp
        )

    ends = sorted(v for v in comp if internal_slots(v) < 2)
    if not ends:
        # degree-2 cycle: start at the minimum id, walk toward its lower neighbor
        first = min(comp)
        order = [first]
        cur: int = first
        prev_edge: int | None = None
        while True:
            candidates = [
                eid for eid in sorted(g.incident_edges(cur)) if eid != prev_edge
            ]
            # pick the edge leading to the lowest-id next vertex
            candidates.sort(key=lambda e: (_other(g, e, cur), e))
            eid = candidates[0]
            nxt = _other(g, eid, cur)
            if nxt == first and len(order) == len(comp):
                break
            order.append(nxt)
            cur, prev_edge = nxt, eid
        return VertexPath(tuple(order), is_cycle=True)
    if len(comp) < 2:
        return None
    head = ends[0]
    order = [head]
    prev: int | None = None
    cur = head
    while True:
        nxt = [w for w in g.neighbors(cur) if w in comp and w != prev]
        inner = [w for w in nxt if w not in order]
        if not inner:
            break
        step = min(inner)
        order.append(step)
        prev, cur = cur, step
    return VertexPath(tuple(order), is_cycle=False)


def _other(g: MultiGraph, eid: int, v: int) -> int:
    a, b = g.endpoints(eid)
    return b if a == v else a


def find_maximal_deg2_path(g: MultiGraph) -> VertexPath | None:
    """Some maximal path (or cycle) of >= 2 vertices, each of host degree
    exactly 2, choosing the candidate with the lowest minimal vertex id.

    Vertices carrying a self-loop are excluded.  Returns None when no
    such path exists.
    """
    eligible = _deg2_eligible(g)
    seen: set[int] = set()
    for v in sorted(eligible):
        if v in seen:
            continue
        path = _trace_component(g, v, eligible)
        if path is not None and len(path) >= 2:
            return path
        # single-vertex component: mark and keep scanning
        if path is not None:
            seen |= set(path.vertices)
        else:
            seen.add(v)
    return None


def _validate_path(g: MultiGraph, path: VertexPath) -> None:
    verts = path.vertices
    if len(verts) < 2 or len(set(verts)) != len(verts):
        raise GraphError("degree-2 path needs >= 2 distinct vertices")
    for v in verts:
        if v not in g:
            raise GraphError(f"path vertex {v} not in graph")
        if g.degree(v) != 2 or g.has_self_loop(v):
            raise GraphError(f"path vertex {v} is not a plain degree-2 vertex")
    for a, b in zip(verts, verts[1:]):
        if not g.has_edge(a, b):
            raise GraphError(f"path vertices {a},{b} not adjacent")
    if path.is_cycle and not g.has_edge(verts[-1], verts[0]):
        raise GraphError("cycle path does not close")


def path_replace(
    g: MultiGraph, path: VertexPath, in_place: bool = False
) -> tuple[MultiGraph, int]:
    """Contract a maximal degree-2 path into a fresh virtual vertex.

    The virtual vertex keeps degree exactly 2: it inherits the outside
    neighbors of the path's endpoints (a parallel pair when both attach
    to the same anchor), or carries a self-loop when the path was a
    degree-2 cycle.
    """
    _validate_path(g, path)
    out = g if in_place else g.copy()
    verts = set(path.vertices)
    if path.is_cycle:
        anchors: list[int] = []
    else:
        anchors = []
        for endpoint in (path.vertices[0], path.vertices[-1]):
            outside = [
                _other(out, eid, endpoint)
                for eid in sorted(out.incident_edges(endpoint))
                if _other(out, eid, endpoint) not in verts
            ]
            if len(outside) != 1:
                raise GraphError("path is not maximal: endpoint lacks a unique anchor")
            anchors.append(outside[0])
    for v in path.vertices:
        out.remove_vertex(v)
    vp = out.add_vertex(virtual=True)
    if path.is_cycle:
        out.add_edge(vp, vp)
    else:
        for a in anchors:
            out.add_edge(vp, a)
    return out, vp
