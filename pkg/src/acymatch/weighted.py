"""Exact maximum-weight matching on simple graphs with nonnegative
integer weights.

The solver is delegated to networkx's blossom implementation, which is
exact for integer weights; the brute-force oracle in
:mod:`acymatch.oracles` provides the independent cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import networkx as nx

from .graph import MultiGraph
from .matchings import Edge, normalize


@dataclass(frozen=True)
class WeightedInstance:
    """A simple graph, nonnegative integer edge weights, and a target weight."""

    graph: MultiGraph
    weights: dict[int, int] = field(compare=False)
    target: int = 0

    def validate(self) -> None:
        if not self.graph.is_simple():
            raise ValueError("weighted instances must be simple (no loops/parallels)")
        for eid in self.graph.edge_ids:
            if eid not in self.weights:
                raise ValueError(f"edge {eid} has no weight")
            w = self.weights[eid]
            if not isinstance(w, int) or w < 0:
                raise ValueError(f"edge {eid} weight {w!r} is not a nonnegative integer")
        if self.target < 0:
            raise ValueError("target must be nonnegative")

    def edge_weight(self, u: int, v: int) -> int:
        eids = self.graph.edges_between(u, v)
        return self.weights[eids[0]]


def max_weight_matching(inst: WeightedInstance) -> tuple[frozenset[Edge], int]:
    """A matching of maximum total weight and that total."""
    inst.validate()
    h = nx.Graph()
    h.add_nodes_from(inst.graph.vertices)
    for eid in inst.graph.edge_ids:
        u, v = inst.graph.endpoints(eid)
        h.add_edge(u, v, weight=inst.weights[eid])
    raw = nx.max_weight_matching(h, maxcardinality=False, weight="weight")
    pairs = normalize(raw)
    total = sum(inst.edge_weight(u, v) for u, v in pairs)
    return pairs, total


def meets_target(inst: WeightedInstance) -> frozenset[Edge] | None:
    """The maximum-weight matching when its total reaches the target, else None."""
    pairs, total = max_weight_matching(inst)
    return pairs if total >= inst.target else None
