"""DIMACS-adjacent text formats.

Graphs: comment lines start "c ", header "p edge n m" (unweighted) or
"p wedge n m" (weighted), then one "e u v [w]" line per edge with
1-based vertex ids.  Matchings: "m u v" lines.  Exact-cover families:
"x3c n t", then per instance an "i" line followed by "s a b c" lines.
Writers emit normalized, sorted output so round-trips are bit-stable.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import MultiGraph
from .matchings import Edge, normalize
from .reductions import X3CFamily


class FormatError(ValueError):
    """Malformed input file; the message carries the 1-based line number."""

    def __init__(self, lineno: int, message: str) -> None:
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


@dataclass(frozen=True)
class ParsedGraph:
    graph: MultiGraph
    weights: dict[int, int] | None  # edge id -> weight, for "p wedge" files


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        yield lineno, line.split()


def parse_graph(text: str) -> ParsedGraph:
    g = MultiGraph()
    weights: dict[int, int] | None = None
    n = None
    declared_m = 0
    seen_m = 0
    for lineno, parts in _content_lines(text):
        if parts[0] == "p":
            if n is not None:
                raise FormatError(lineno, "duplicate header")
            if len(parts) != 4 or parts[1] not in ("edge", "wedge"):
                raise FormatError(lineno, "expected 'p edge n m' or 'p wedge n m'")
            try:
                n, declared_m = int(parts[2]), int(parts[3])
            except ValueError:
                raise FormatError(lineno, "header counts must be integers") from None
            if n < 0 or declared_m < 0:
                raise FormatError(lineno, "header counts must be nonnegative")
            weights = {} if parts[1] == "wedge" else None
            for v in range(1, n + 1):
                g.add_vertex(v)
        elif parts[0] == "e":
            if n is None:
                raise FormatError(lineno, "edge before header")
            want = 4 if weights is not None else 3
            if len(parts) != want:
                raise FormatError(lineno, f"expected {want - 1} fields after 'e'")
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise FormatError(lineno, "endpoints must be integers") from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise FormatError(lineno, f"endpoint out of range 1..{n}")
            eid = g.add_edge(u, v)
            if weights is not None:
                try:
                    w = int(parts[3])
                except ValueError:
                    raise FormatError(lineno, "weight must be an integer") from None
                if w < 0:
                    raise FormatError(lineno, "weight must be nonnegative")
                weights[eid] = w
            seen_m += 1
        else:
            raise FormatError(lineno, f"unknown record {parts[0]!r}")
    if n is None:
        raise FormatError(1, "missing header")
    if seen_m != declared_m:
        raise FormatError(1, f"header declares {declared_m} edges, found {seen_m}")
    return ParsedGraph(g, weights)


def write_graph(
    g: MultiGraph,
    weights: dict[int, int] | None = None,
    comments: list[str] | None = None,
) -> str:
    """Normalized text form; vertices are renumbered 1..n in sorted order."""
    order = sorted(g.vertices)
    pos = {v: i + 1 for i, v in enumerate(order)}
    rows = []
    for eid in g.edge_ids:
        a, b = g.endpoints(eid)
        u, v = sorted((pos[a], pos[b]))
        if weights is not None:
            rows.append((u, v, weights[eid]))
        else:
            rows.append((u, v))
    rows.sort()
    lines = [f"c {c}" for c in comments or []]
    kind = "wedge" if weights is not None else "edge"
    lines.append(f"p {kind} {len(order)} {len(rows)}")
    for row in rows:
        lines.append("e " + " ".join(str(x) for x in row))
    return "\n".join(lines) + "\n"


def parse_matching(text: str) -> frozenset[Edge]:
    pairs = set()
    for lineno, parts in _content_lines(text):
        if parts[0] != "m" or len(parts) != 3:
            raise FormatError(lineno, "expected 'm u v'")
        try:
            u, v = int(parts[1]), int(parts[2])
        except ValueError:
            raise FormatError(lineno, "endpoints must be integers") from None
        pairs.add((u, v))
    return normalize(pairs)


def write_matching(matching, comments: list[str] | None = None) -> str:
    lines = [f"c {c}" for c in comments or []]
    for u, v in sorted(normalize(matching)):
        lines.append(f"m {u} {v}")
    return "\n".join(lines) + "\n" if lines else ""


def parse_x3c(text: str) -> X3CFamily:
    n = None
    t = 0
    instances: list[list[frozenset[int]]] = []
    for lineno, parts in _content_lines(text):
        if parts[0] == "x3c":
            if n is not None:
                raise FormatError(lineno, "duplicate header")
            if len(parts) != 3:
                raise FormatError(lineno, "expected 'x3c n t'")
            try:
                n, t = int(parts[1]), int(parts[2])
            except ValueError:
                raise FormatError(lineno, "header counts must be integers") from None
        elif parts[0] == "i":
            if n is None:
                raise FormatError(lineno, "instance before header")
            instances.append([])
        elif parts[0] == "s":
            if not instances:
                raise FormatError(lineno, "triple before any instance line")
            if len(parts) != 4:
                raise FormatError(lineno, "expected 's a b c'")
            try:
                triple = frozenset(int(x) for x in parts[1:])
            except ValueError:
                raise FormatError(lineno, "triple elements must be integers") from None
            if len(triple) != 3 or not triple <= set(range(1, n + 1)):
                raise FormatError(lineno, "triple must be 3 distinct elements in range")
            instances[-1].append(triple)
        else:
            raise FormatError(lineno, f"unknown record {parts[0]!r}")
    if n is None:
        raise FormatError(1, "missing header")
    if len(instances) != t:
        raise FormatError(1, f"header declares {t} instances, found {len(instances)}")
    try:
        return X3CFamily(n, tuple(tuple(inst) for inst in instances))
    except ValueError as exc:
        raise FormatError(1, str(exc)) from None


def write_x3c(family: X3CFamily, comments: list[str] | None = None) -> str:
    lines = [f"c {c}" for c in comments or []]
    lines.append(f"x3c {family.universe_size} {len(family.instances)}")
    for inst in family.instances:
        lines.append("i")
        for triple in inst:
            lines.append("s " + " ".join(str(x) for x in sorted(triple)))
    return "\n".join(lines) + "\n"
