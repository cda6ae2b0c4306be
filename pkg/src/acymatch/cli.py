"""Command-line interface.

Exit codes for decision commands: 0 = yes, 1 = no, 2 = error.  All
randomness flows from --seed (default 0, never wall-clock entropy), so
identical invocations produce byte-identical output.
"""

from __future__ import annotations

import random
import sys

import click

from . import fileio, matchings, oracles, reductions, solver
from .graph import MultiGraph

EXIT_YES = 0
EXIT_NO = 1
EXIT_ERROR = 2


def _fail(message: str) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(EXIT_ERROR)


def _load_graph(path: str) -> fileio.ParsedGraph:
    try:
        with open(path) as fh:
            return fileio.parse_graph(fh.read())
    except OSError as exc:
        _fail(str(exc))
    except fileio.FormatError as exc:
        _fail(f"{path}: {exc}")
    raise AssertionError("unreachable")


@click.group()
def main() -> None:
    """Acyclic matching toolkit: solver, oracles, verifiers, generators."""


@main.command()
@click.argument("graph_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--ell", type=int, required=True, help="Required matching size.")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--trials", type=int, default=None, help="Override the trial count.")
@click.option("--cap", type=int, default=solver.DEFAULT_TRIAL_CAP, show_default=True,
              help="Ceiling on the automatic trial count.")
def solve(graph_file: str, ell: int, seed: int, trials: int | None, cap: int) -> None:
    """Decide whether the graph has an acyclic matching of size >= ELL."""
    if ell < 0:
        _fail("--ell must be nonnegative")
    if cap < 1:
        _fail("--cap must be positive")
    if trials is not None and trials <= 0:
        _fail("--trials must be positive")
    g = _load_graph(graph_file).graph
    answer = solver.solve(g, ell, seed=seed, trials=trials, cap=cap)
    click.echo(f"verdict {answer.verdict}")
    if answer.verdict == "yes":
        for u, v in sorted(answer.witness or ()):
            click.echo(f"m {u} {v}")
    click.echo(f"trials {answer.trials_used}")
    click.echo(f"seed {seed}")
    click.echo(f"capped {'yes' if answer.trials_capped else 'no'}")
    if answer.trials_capped:
        click.echo(
            "warning: automatic trial count exceeded the cap; the success "
            "guarantee is weakened",
            err=True,
        )
    sys.exit(EXIT_YES if answer.verdict == "yes" else EXIT_NO)


_ORACLE_KINDS = {
    "am": ("acyclic", "matching"),
    "im": ("induced", "matching"),
    "urm": ("ur", "matching"),
    "mm": ("any", "matching"),
    "is": (None, "independent-set"),
    "fvs": (None, "fvs"),
}


@main.command()
@click.argument("graph_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--kind", type=click.Choice(sorted(_ORACLE_KINDS)), required=True)
@click.option("--limit", type=int, default=oracles.DEFAULT_VERTEX_LIMIT,
              show_default=True, help="Vertex limit for exhaustive search.")
def oracle(graph_file: str, kind: str, limit: int) -> None:
    """Exact optimum (with witness) by brute force; desk scale only."""
    g = _load_graph(graph_file).graph
    sub, shape = _ORACLE_KINDS[kind]
    try:
        if shape == "matching":
            report = oracles.max_restricted_matching(g, sub, limit=limit)
        elif shape == "independent-set":
            report = oracles.max_independent_set(g, limit=limit)
        else:
            report = oracles.min_fvs(g, limit=limit)
    except oracles.OracleLimitError as exc:
        _fail(str(exc))
    click.echo(f"{report.problem} {report.value}")
    if shape == "matching":
        for u, v in sorted(report.witness):
            click.echo(f"m {u} {v}")
    else:
        for v in sorted(report.witness):
            click.echo(f"v {v}")


@main.command()
@click.argument("graph_file", type=click.Path(exists=True, dir_okay=False))
@click.argument("matching_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--kind", type=click.Choice(["am", "im", "urm"]), required=True)
@click.option("--extract-is", is_flag=True,
              help="Also print the certified independent set.")
def verify(graph_file: str, matching_file: str, kind: str, extract_is: bool) -> None:
    """Check a matching file against the graph for the given class."""
    g = _load_graph(graph_file).graph
    try:
        with open(matching_file) as fh:
            pairs = fileio.parse_matching(fh.read())
    except (OSError, fileio.FormatError) as exc:
        _fail(f"{matching_file}: {exc}")
    unknown = matchings.saturated(pairs) - g.vertices
    if unknown:
        _fail(f"matching references unknown vertices {sorted(unknown)}")
    if not matchings.is_matching(g, pairs):
        click.echo("invalid (not a matching)")
        sys.exit(EXIT_NO)
    checker = {
        "am": matchings.is_acyclic_matching,
        "im": matchings.is_induced_matching,
        "urm": matchings.is_ur_matching,
    }[kind]
    ok = checker(g, pairs)
    click.echo("valid" if ok else "invalid")
    if ok and extract_is:
        if kind in ("am", "im"):
            cert = matchings.acyclic_to_independent(g, pairs)
            bound = len(pairs)
        else:
            cert = matchings.ur_to_independent(g, pairs)
            bound = (len(pairs) + 2) // 2  # ceil((|M|+1)/2)
        click.echo(f"independent-set {len(cert.vertices)} (bound {bound})")
        for v in sorted(cert.vertices):
            click.echo(f"v {v}")
    sys.exit(EXIT_YES if ok else EXIT_NO)


@main.group()
def gen() -> None:
    """Instance generators with certificates."""


def _emit(path: str | None, text: str) -> None:
    if path is None:
        click.echo(text, nl=False)
    else:
        with open(path, "w") as fh:
            fh.write(text)


@gen.command()
@click.argument("graph_file", type=click.Path(exists=True, dir_okay=False))
@click.option("-o", "--output", type=click.Path(dir_okay=False), default=None)
def double(graph_file: str, output: str | None) -> None:
    """Two copies of the graph joined by a vertical perfect matching."""
    g = _load_graph(graph_file).graph
    try:
        h, verticals, _ = reductions.double_with_vertical(g)
    except ValueError as exc:
        _fail(str(exc))
    comments = [
        "doubled graph: copy one is 1..n, copy two is n+1..2n",
        "vertical edges: " + " ".join(f"{u}-{v}" for u, v in verticals),
    ]
    _emit(output, fileio.write_graph(h, comments=comments))


@gen.command()
@click.argument("graph_file", type=click.Path(exists=True, dir_okay=False))
@click.option("-o", "--output", type=click.Path(dir_okay=False), default=None)
def panda(graph_file: str, output: str | None) -> None:
    """Shadow-pairing construction; its acyclic matching number equals
    the independence number of the input."""
    g = _load_graph(graph_file).graph
    try:
        h, _, _ = reductions.panda_construct(g)
    except ValueError as exc:
        _fail(str(exc))
    comments = ["paired graph: originals are 1..n, shadows are n+1..2n"]
    _emit(output, fileio.write_graph(h, comments=comments))


@gen.command()
@click.argument("family_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--clique", is_flag=True, help="Make the selector leaves a clique.")
@click.option("-o", "--output", type=click.Path(dir_okay=False), default=None)
@click.option("--cert", "cert_output", type=click.Path(dir_okay=False), default=None,
              help="Write the certificate (target size, planted witness) here.")
def x3c(family_file: str, clique: bool, output: str | None, cert_output: str | None) -> None:
    """Compose an exact-cover family into one acyclic matching instance."""
    try:
        with open(family_file) as fh:
            family = fileio.parse_x3c(fh.read())
    except (OSError, fileio.FormatError) as exc:
        _fail(f"{family_file}: {exc}")
    g, target, index = reductions.x3c_compose(family, clique_variant=clique)
    modulator = "clique-modulator" if clique else "vertex-cover"
    comments = [
        f"composed exact-cover instance: target {target}",
        f"universe {family.universe_size}, instances {len(family.instances)}, "
        f"distinct triples {len(family.union_collection)}",
        f"certified bound: {modulator} of size "
        f"{7 * len(family.union_collection) + (family.universe_size if clique else 1)}",
        f"selector center {index.selector_center}, "
        "leaves " + " ".join(str(v) for v in index.selector_leaves),
    ]
    _emit(output, fileio.write_graph(g, comments=comments))
    cert_lines = [f"c target {target}"]
    witness = None
    for pos in range(len(family.instances)):
        solution = oracles.solve_x3c(
            family.universe_size, list(family.instances[pos])
        )
        if solution is not None:
            witness = reductions.x3c_solution_to_matching(index, solution, pos)
            cert_lines.append(f"c solved-instance {pos + 1}")
            break
    if witness is None:
        cert_lines.append("c no instance admits an exact cover")
        cert_text = "\n".join(cert_lines) + "\n"
    else:
        cert_text = "\n".join(cert_lines) + "\n" + fileio.write_matching(witness)
    if cert_output is not None:
        _emit(cert_output, cert_text)
    elif output is None:
        click.echo(cert_text, nl=False)


@gen.command("random")
@click.option("--n", "num_vertices", type=int, required=True)
@click.option("--p", "edge_prob", type=float, required=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("-o", "--output", type=click.Path(dir_okay=False), default=None)
def random_graph(num_vertices: int, edge_prob: float, seed: int, output: str | None) -> None:
    """A reproducible Erdos-Renyi graph."""
    if num_vertices < 0 or not 0.0 <= edge_prob <= 1.0:
        _fail("--n must be nonnegative and --p within [0, 1]")
    rng = random.Random(f"gen-random:{seed}")
    g = MultiGraph()
    for v in range(1, num_vertices + 1):
        g.add_vertex(v)
    for u in range(1, num_vertices + 1):
        for v in range(u + 1, num_vertices + 1):
            if rng.random() < edge_prob:
                g.add_edge(u, v)
    comments = [f"random graph n={num_vertices} p={edge_prob} seed={seed}"]
    _emit(output, fileio.write_graph(g, comments=comments))


if __name__ == "__main__":
    main()
