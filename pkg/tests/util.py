"""Shared helpers for the test suite: small-graph builders, exhaustive
graph enumeration, and randomized matching samplers."""

from __future__ import annotations

import itertools
import random

import networkx as nx

from acymatch.graph import MultiGraph, connected_components, is_forest
from acymatch.matchings import saturated
from acymatch.oracles import _extension_ok


def path_graph(n: int) -> MultiGraph:
    return MultiGraph.from_edges(
        [(i, i + 1) for i in range(1, n)], vertices=range(1, n + 1)
    )


def cycle_graph(n: int) -> MultiGraph:
    return MultiGraph.from_edges([(i, i % n + 1) for i in range(1, n + 1)])


def complete_graph(n: int) -> MultiGraph:
    return MultiGraph.from_edges(
        itertools.combinations(range(1, n + 1), 2), vertices=range(1, n + 1)
    )


def star_graph(leaves: int) -> MultiGraph:
    return MultiGraph.from_edges([(1, i) for i in range(2, leaves + 2)])


def from_nx(g: nx.Graph) -> MultiGraph:
    """Convert a networkx graph, relabeling nodes to 1..n in sorted order."""
    order = sorted(g.nodes)
    pos = {v: i + 1 for i, v in enumerate(order)}
    out = MultiGraph()
    for v in order:
        out.add_vertex(pos[v])
    for u, v in g.edges:
        out.add_edge(pos[u], pos[v])
    return out


def to_nx(g: MultiGraph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(g.vertices)
    h.add_edges_from(set(g.edge_pairs()))
    return h


_ATLAS_CACHE: list[nx.Graph] | None = None


def atlas_graphs(min_n: int = 1, max_n: int = 7, connected: bool | None = None):
    """All isomorphism classes of simple graphs with min_n..max_n vertices.

    Sourced from the networkx graph atlas (complete through 7 vertices).
    """
    global _ATLAS_CACHE
    if _ATLAS_CACHE is None:
        _ATLAS_CACHE = nx.graph_atlas_g()
    assert max_n <= 7
    for g in _ATLAS_CACHE[1:]:  # entry 0 is the empty placeholder
        n = g.number_of_nodes()
        if n < min_n or n > max_n:
            continue
        if connected is not None and nx.is_connected(g) != connected:
            continue
        yield from_nx(g)


def random_simple_graph(n: int, p: float, rng: random.Random) -> MultiGraph:
    g = MultiGraph()
    for v in range(1, n + 1):
        g.add_vertex(v)
    for u in range(1, n + 1):
        for v in range(u + 1, n + 1):
            if rng.random() < p:
                g.add_edge(u, v)
    return g


def has_property_r(g: MultiGraph) -> bool:
    """Minimum degree >= 2 and no two adjacent degree-2 vertices."""
    if any(g.degree(v) < 2 for v in g.vertices):
        return False
    for a, b in g.edge_pairs():
        if a != b and g.degree(a) == 2 and g.degree(b) == 2:
            return False
    return True


def _labeled_graphs(n: int):
    """Every labeled simple graph on vertices 1..n (2^(n choose 2) of them)."""
    slots = list(itertools.combinations(range(1, n + 1), 2))
    for bits in range(1 << len(slots)):
        edges = [slots[i] for i in range(len(slots)) if bits >> i & 1]
        yield MultiGraph.from_edges(edges, vertices=range(1, n + 1))


def connected_property_r_graphs(n: int) -> list[MultiGraph]:
    """One representative per isomorphism class of connected graphs on n
    vertices with minimum degree >= 2 and no adjacent degree-2 pair.

    For n <= 7 this filters the atlas.  For n = 8 every candidate is an
    atlas graph on 7 vertices augmented with an eighth vertex attached to
    some neighborhood, deduplicated up to isomorphism; deleting any one
    vertex of an 8-vertex graph leaves a 7-vertex graph, so the sweep is
    exhaustive.
    """
    if n <= 7:
        return [
            g
            for g in atlas_graphs(min_n=n, max_n=n, connected=True)
            if has_property_r(g)
        ]
    assert n == 8
    found: dict[str, list[nx.Graph]] = {}
    out: list[MultiGraph] = []
    for base in atlas_graphs(min_n=7, max_n=7):
        base_nx = to_nx(base)
        base_deg = dict(base_nx.degree)
        base_edges = list(base_nx.edges)
        for bits in range(1, 1 << 7):
            nbrs = [v for v in range(1, 8) if bits >> (v - 1) & 1]
            if len(nbrs) < 2:
                continue  # the new vertex needs degree >= 2
            nbr_set = set(nbrs)
            deg = {v: base_deg[v] + (v in nbr_set) for v in range(1, 8)}
            deg[8] = len(nbrs)
            if min(deg.values()) < 2:
                continue
            if any(deg[u] == 2 and deg[v] == 2 for u, v in base_edges):
                continue
            if deg[8] == 2 and any(deg[v] == 2 for v in nbrs):
                continue
            cand = base_nx.copy()
            cand.add_node(8)
            cand.add_edges_from((8, v) for v in nbrs)
            if not nx.is_connected(cand):
                continue
            key = nx.weisfeiler_lehman_graph_hash(cand, iterations=2)
            bucket = found.setdefault(key, [])
            if any(nx.is_isomorphic(cand, seen) for seen in bucket):
                continue
            bucket.append(cand)
            out.append(from_nx(cand))
    return out


def all_matchings(g: MultiGraph):
    """Every matching of g (the empty one included)."""
    edges = sorted(set(p for p in g.edge_pairs() if p[0] != p[1]))

    def recurse(idx: int, pairs: list, used: set):
        yield frozenset(pairs)
        for i in range(idx, len(edges)):
            u, v = edges[i]
            if u in used or v in used:
                continue
            pairs.append((u, v))
            used |= {u, v}
            yield from recurse(i + 1, pairs, used)
            pairs.pop()
            used -= {u, v}

    seen = set()
    for m in recurse(0, [], set()):
        if m not in seen:
            seen.add(m)
            yield m


def sample_maximal_matching(g: MultiGraph, kind: str, rng: random.Random):
    """A random maximal matching of the given class (greedy over a shuffle)."""
    edges = sorted(set(p for p in g.edge_pairs() if p[0] != p[1]))
    rng.shuffle(edges)
    pairs: list = []
    used: set = set()
    for u, v in edges:
        if u in used or v in used:
            continue
        if _extension_ok(g, pairs, (u, v), kind):
            pairs.append((u, v))
            used |= {u, v}
    return frozenset(pairs)


def independent_in(g: MultiGraph, vertices) -> bool:
    vs = set(vertices)
    return not any(
        a in vs and b in vs for a, b in g.edge_pairs()
    )


def planted_yes_instance(n: int, k: int, rng: random.Random) -> tuple[MultiGraph, int]:
    """A graph on n vertices with a planted acyclic matching of size (n-k)/2.

    A random tree with a perfect matching on n-k vertices is built by
    growing matched pairs; the remaining k vertices attach arbitrarily.
    Extra noise edges between tree vertices at even distance are avoided
    so the planted matching is kept acyclic by construction witnesses.
    """
    assert (n - k) % 2 == 0 and n - k >= 2
    g = MultiGraph()
    for v in range(1, n + 1):
        g.add_vertex(v)
    core = n - k
    # grow a tree of matched pairs: vertices 2i-1 -- 2i matched, each new
    # pair hangs off a uniformly chosen earlier vertex
    g.add_edge(1, 2)
    for i in range(2, core // 2 + 1):
        a, b = 2 * i - 1, 2 * i
        g.add_edge(a, b)
        g.add_edge(rng.randrange(1, a), a)
    for v in range(core + 1, n + 1):
        for _ in range(rng.randrange(1, 4)):
            w = rng.randrange(1, v)
            if not g.has_edge(v, w):
                g.add_edge(v, w)
    ell = core // 2
    return g, ell


def planted_matching(n: int, k: int):
    return frozenset((2 * i - 1, 2 * i) for i in range(1, (n - k) // 2 + 1))
