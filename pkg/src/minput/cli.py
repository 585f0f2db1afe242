"""Command line front end: solve instances from files, verify, benchmark.

Exit codes: 0 solved, 2 no admissible input set exists, 1 anything
else (bad flags, malformed files, oracle bound exceeded, internal
verification failure).
"""

from __future__ import annotations

import argparse
import json
import math
import random
import sys
import time
from typing import TextIO

from .errors import MinputError, NotSquare, ParseError
from .families import chain, diagonal, erdos_renyi, preferential
from .flowgraph import build_flow_graph
from .graph import SparseDigraph, build_graph, induced_subgraph, isolated_vertices, scc_decompose
from .matching import find_allowed_matching
from .oracle import brute_force_min_input_set, check_structural_controllability
from .solver import Problem, Solution, solve

BENCH_FAMILIES = ("erdos-renyi", "preferential", "diagonal", "chain")


def ingest_edge_list(path: str) -> SparseDigraph:
    """Parse the plain edge-list format.

    The first significant line is ``n <edge-count>``; every following
    line is one ``i j`` pair meaning edge i -> j (0-based).  ``#``
    starts a comment, blank lines are skipped, and the declared edge
    count must match the number of edge lines.
    """
    n = None
    declared = 0
    edges: list[tuple[int, int]] = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            text = raw.split("#", 1)[0].strip()
            if not text:
                continue
            parts = text.split()
            if len(parts) != 2:
                what = "header 'n <edge-count>'" if n is None else "edge line 'i j'"
                raise ParseError(f"expected {what}, got {text!r}", lineno)
            try:
                a, b = int(parts[0]), int(parts[1])
            except ValueError:
                raise ParseError(f"expected two integers, got {text!r}", lineno) from None
            if n is None:
                if a < 0 or b < 0:
                    raise ParseError("header fields must be nonnegative", lineno)
                n, declared = a, b
                continue
            if not (0 <= a < n and 0 <= b < n):
                raise ParseError(f"edge ({a}, {b}) outside vertex range [0, {n})", lineno)
            edges.append((a, b))
    if n is None:
        raise ParseError("no header line found")
    if declared != len(edges):
        raise ParseError(f"header declared {declared} edges, file has {len(edges)}")
    return SparseDigraph(n, edges)


def dump_edge_list(g: SparseDigraph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def ingest_matrix_market(path: str, zero_tol: float = 0.0) -> SparseDigraph:
    """Matrix Market coordinate ingestion.

    A stored entry (row, col, value) with ``|value| > zero_tol`` means
    the matrix couples state ``col`` into state ``row``, i.e. edge
    col -> row after shifting the 1-based file indices down.  Accepts
    real, integer and pattern fields, general or symmetric.
    """
    with open(path, "r", encoding="utf-8") as fh:
        banner = fh.readline()
        fields = banner.split()
        if len(fields) < 5 or fields[0] != "%%MatrixMarket":
            raise ParseError("missing '%%MatrixMarket matrix coordinate ...' banner", 1)
        if fields[1].lower() != "matrix" or fields[2].lower() != "coordinate":
            raise ParseError("only 'matrix coordinate' files are supported", 1)
        value_kind = fields[3].lower()
        symmetry = fields[4].lower()
        if value_kind not in ("real", "integer", "pattern"):
            raise ParseError(f"unsupported value field {value_kind!r}", 1)
        if symmetry not in ("general", "symmetric"):
            raise ParseError(f"unsupported symmetry {symmetry!r}", 1)
        dims = None
        seen = 0
        entries: list[tuple[int, int]] = []
        for lineno, raw in enumerate(fh, start=2):
            text = raw.strip()
            if not text or text.startswith("%"):
                continue
            parts = text.split()
            if dims is None:
                if len(parts) != 3:
                    raise ParseError("expected size line 'rows cols nnz'", lineno)
                try:
                    rows, cols, nnz = (int(p) for p in parts)
                except ValueError:
                    raise ParseError("size line must be three integers", lineno) from None
                if rows != cols:
                    raise NotSquare(f"matrix is {rows}x{cols}, need square")
                dims = (rows, nnz)
                continue
            want = 2 if value_kind == "pattern" else 3
            if len(parts) != want:
                raise ParseError(f"expected {want} fields per entry", lineno)
            try:
                r, c = int(parts[0]), int(parts[1])
                value = 1.0 if value_kind == "pattern" else float(parts[2])
            except ValueError:
                raise ParseError(f"malformed entry {text!r}", lineno) from None
            if not (1 <= r <= dims[0] and 1 <= c <= dims[0]):
                raise ParseError(f"entry ({r}, {c}) outside matrix", lineno)
            seen += 1
            if abs(value) > zero_tol:
                entries.append((r - 1, c - 1))
                if symmetry == "symmetric" and r != c:
                    entries.append((c - 1, r - 1))
    if dims is None:
        raise ParseError("size line missing")
    if seen != dims[1]:
        raise ParseError(f"size line declared {dims[1]} entries, file has {seen}")
    return build_graph(dims[0], entries)


def read_forbidden(path: str, n: int) -> frozenset[int]:
    """Whitespace-separated forbidden vertex ids; ``#`` comments allowed."""
    forbidden = set()
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            text = raw.split("#", 1)[0].strip()
            if not text:
                continue
            for token in text.split():
                try:
                    v = int(token)
                except ValueError:
                    raise ParseError(f"expected vertex id, got {token!r}", lineno) from None
                if not (0 <= v < n):
                    raise ParseError(f"forbidden vertex {v} outside [0, {n})", lineno)
                forbidden.add(v)
    return frozenset(forbidden)


def _flow_dump(problem: Problem) -> str:
    """First-round flow graph of an instance (isolated vertices removed)."""
    g = problem.graph
    iso = set(isolated_vertices(g))
    if iso:
        keep = [v for v in range(g.n) if v not in iso]
        sub, old_ids = induced_subgraph(g, keep)
        forb = frozenset(i for i, v in enumerate(keep) if v in problem.forbidden)
        labels = [str(v) for v in old_ids]
    else:
        sub, forb, labels = g, frozenset(problem.forbidden), problem.labels
    m0 = find_allowed_matching(sub, forb)
    if m0 is None:
        return "# no allowed matching, flow graph undefined\n"
    fg = build_flow_graph(sub, scc_decompose(sub), m0, forb)
    return fg.dump(labels) + "\n"


def _make_family(family: str, n: int, rng: random.Random) -> SparseDigraph:
    if family == "erdos-renyi":
        return erdos_renyi(n, 3.0 / n, rng)
    if family == "preferential":
        return preferential(n, 3, rng)
    if family == "diagonal":
        return diagonal(n)
    if family == "chain":
        return chain(n)
    raise ParseError(f"unknown family {family!r}, pick one of {', '.join(BENCH_FAMILIES)}")


def bench(family: str, nmin: int, nmax: int, reps: int, seed: int = 0,
          out: TextIO | None = None) -> bool:
    """Solve generated instances over doubling sizes and emit CSV rows.

    Returns False when any run exceeds the 6*sqrt(n) iteration bound,
    which would mean a bug in the augmentation loop.
    """
    out = out if out is not None else sys.stdout
    print("family,n,m,iterations,wall_nanos,cost", file=out)
    findex = BENCH_FAMILIES.index(family) if family in BENCH_FAMILIES else 0
    ok = True
    n = nmin
    while n <= nmax:
        for rep in range(reps):
            rng = random.Random(((seed * 8 + findex) * (nmax + 1) + n) * 1000003 + rep)
            g = _make_family(family, n, rng)
            t0 = time.perf_counter_ns()
            result = solve(Problem(g))
            wall = time.perf_counter_ns() - t0
            assert isinstance(result, Solution)  # no forbidden set, always solvable
            iters = result.diagnostics.iterations
            print(f"{family},{n},{g.m},{iters},{wall},{result.cost}", file=out)
            if iters > 6 * math.sqrt(n):
                print(
                    f"iteration bound broken: {iters} rounds on n={n} {family}",
                    file=sys.stderr,
                )
                ok = False
        n *= 2
    return ok


def _parse_bench(flag: str) -> tuple[str, int, int, int]:
    parts = flag.split(",")
    if len(parts) != 4:
        raise ParseError("--bench wants FAMILY,NMIN,NMAX,REPS")
    family = parts[0]
    try:
        nmin, nmax, reps = int(parts[1]), int(parts[2]), int(parts[3])
    except ValueError:
        raise ParseError("--bench sizes and reps must be integers") from None
    if nmin < 1 or nmax < nmin or reps < 1:
        raise ParseError("--bench wants 1 <= NMIN <= NMAX and REPS >= 1")
    return family, nmin, nmax, reps


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="minput",
        description="Minimum input selection for structural controllability.",
    )
    p.add_argument("--graph", metavar="PATH", help="edge-list instance file")
    p.add_argument("--mm", metavar="PATH", help="Matrix Market coordinate instance file")
    p.add_argument("--forbidden", metavar="PATH", help="file of forbidden vertex ids")
    p.add_argument("--zero-tol", type=float, default=0.0,
                   help="treat Matrix Market values with |v| <= this as zero")
    p.add_argument("--verify", action="store_true",
                   help="re-check the result with the independent controllability test")
    p.add_argument("--oracle", action="store_true",
                   help="also run the exhaustive oracle (small instances only)")
    p.add_argument("--seed", type=int, default=0, help="seed for --bench generation")
    p.add_argument("--out", metavar="PATH", help="write the JSON result to this file")
    p.add_argument("--bench", metavar="FAMILY,NMIN,NMAX,REPS",
                   help=f"benchmark harness (families: {', '.join(BENCH_FAMILIES)}); CSV on stdout")
    p.add_argument("--dump-flow", metavar="PATH",
                   help="write the first-round flow graph as a text edge list")
    return p


def run(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 1
    try:
        if args.bench:
            family, nmin, nmax, reps = _parse_bench(args.bench)
            return 0 if bench(family, nmin, nmax, reps, seed=args.seed) else 1
        if args.graph and args.mm:
            print("error: --graph and --mm are mutually exclusive", file=sys.stderr)
            return 1
        if args.graph:
            g = ingest_edge_list(args.graph)
        elif args.mm:
            g = ingest_matrix_market(args.mm, zero_tol=args.zero_tol)
        else:
            print("error: one of --graph or --mm is required", file=sys.stderr)
            return 1
        forb = read_forbidden(args.forbidden, g.n) if args.forbidden else frozenset()
        problem = Problem(g, forb)
        if args.dump_flow:
            with open(args.dump_flow, "w", encoding="utf-8") as fh:
                fh.write(_flow_dump(problem))
        result = solve(problem)
        code = 0
        if isinstance(result, Solution):
            payload = {
                "solvable": True,
                "input_set": result.input_set,
                "cost": result.cost,
                "iterations": result.diagnostics.iterations,
                "per_iteration": [
                    {"dist": it.dist, "paths": it.paths, "cost": it.cost}
                    for it in result.diagnostics.per_iteration
                ],
            }
            if args.verify:
                payload["verify"] = check_structural_controllability(g, result.input_set)
                if not payload["verify"]:
                    print("error: verification failed on the returned set", file=sys.stderr)
                    code = 1
            if args.oracle:
                answer = brute_force_min_input_set(g, forb)
                payload["oracle_cost"] = None if answer is None else answer[0]
                if answer is None or answer[0] != result.cost:
                    print("error: oracle disagrees with the solver", file=sys.stderr)
                    code = 1
        else:
            payload = {
                "solvable": False,
                "reason": result.reason.value,
                "input_set": [],
                "cost": None,
                "iterations": 0,
                "per_iteration": [],
            }
            if args.oracle:
                answer = brute_force_min_input_set(g, forb)
                payload["oracle_cost"] = None if answer is None else answer[0]
                if answer is not None:
                    print("error: oracle disagrees with the solver", file=sys.stderr)
                    code = 1
            if code == 0:
                code = 2
        text = json.dumps(payload, indent=2) + "\n"
        if args.out:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
        return code
    except (MinputError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())
