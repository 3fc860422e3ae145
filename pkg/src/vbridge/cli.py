"""Command-line interface.

Exit codes: 0 success, 1 usage error, 2 invalid input, 3 timeout-only
failures.  Single-diagram commands print JSON; ``batch`` honors --format.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from . import __version__
from .batch import (
    ALL_ANALYSES,
    PipelineConfig,
    ingest_table,
    run_pipeline,
    write_results,
)
from .errors import (
    GaussCodeError,
    NotAKnotError,
    SearchExhaustedError,
    SearchTimeoutError,
    VbridgeError,
)
from .gauss import (
    bridge_count,
    cut_split_witness,
    ensure_tail_per_component,
    parse_gauss_code,
    strand_table,
    to_gauss_code,
)
from .linkgroup import (
    alexander_matrix,
    ideal_lower_bound,
    wirtinger_presentation,
)
from .parity import gaussian_parity, parity_projection
from .quandle import count_colorings, load_quandle_table, sandwich_check
from .search import wirtinger_number
from .welded import is_one_overbridge, replay_certificate, welded_unknot_certificate

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INPUT = 2
EXIT_TIMEOUT = 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse default exits with code 2
        raise _UsageError(message)


def _build_parser() -> _Parser:
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--max-k", type=int, default=None, help="cap on seed-set / ideal index search")
    shared.add_argument("--time-limit", type=float, default=None, help="per-diagram wall-clock limit in seconds")
    shared.add_argument("--jobs", type=int, default=1, help="worker count for batch processing")
    shared.add_argument("--format", choices=["csv", "json"], default="csv", help="batch output format")
    shared.add_argument("--certificates", action="store_true", help="embed certificates in JSON output")
    shared.add_argument("--quandle", action="append", default=[], metavar="FILE", help="quandle table file (repeatable)")
    shared.add_argument("--prime-bound", type=int, default=97, help="largest prime tried for ideal certificates")

    parser = _Parser(prog="vbridge", description="Bridge-number bounds for virtual links from Gauss codes")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, help_text in [
        ("parse", "validate a Gauss code and report its structure"),
        ("bridge", "count overbridges"),
        ("wirtinger", "minimal seed-set search"),
        ("parity", "Gaussian parity and projection"),
        ("alexander", "Fox-calculus matrix and ideal bounds"),
        ("quandle", "coloring counts for quandle table files"),
        ("welded", "one-overbridge unknotting certificate"),
    ]:
        p = sub.add_parser(name, parents=[shared], help=help_text)
        p.add_argument("code", help="Gauss code, e.g. 'O1+U2+O2+U1+'")

    batch = sub.add_parser("batch", parents=[shared], help="process a name<TAB>code table")
    batch.add_argument("table", help="input table path")
    batch.add_argument("-o", "--output", default=None, help="output path (default stdout)")
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    try:
        return _dispatch(args)
    except (GaussCodeError, NotAKnotError, VbridgeError, OSError, ValueError) as exc:
        if isinstance(exc, SearchTimeoutError):
            print(f"timeout: {exc}", file=sys.stderr)
            return EXIT_TIMEOUT
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2))


def _dispatch(args) -> int:
    cmd = args.command
    if cmd == "batch":
        return _cmd_batch(args)

    d = parse_gauss_code(args.code)

    if cmd == "parse":
        table = strand_table(d)
        witness = cut_split_witness(d)
        _emit(
            {
                "code": to_gauss_code(d),
                "components": d.n_components,
                "chords": d.n_chords,
                "strands": [
                    {"id": s.id, "component": s.component, "tails": list(s.tails)}
                    for s in table.strands
                ],
                "cut_split": None
                if witness is None
                else {"kind": witness.kind, "index": witness.index},
            }
        )
        return EXIT_OK

    if cmd == "bridge":
        _emit({"code": to_gauss_code(d), "bridge_count": bridge_count(d)})
        return EXIT_OK

    if cmd == "wirtinger":
        result = wirtinger_number(d, max_k=args.max_k, time_limit=args.time_limit)
        out = {
            "omega": result.omega,
            "seed_set": list(result.seed_set),
            "subsets_examined": result.stats.subsets_examined,
            "saturation_steps": result.stats.saturation_steps,
        }
        if args.certificates:
            out["sequence"] = result.sequence.to_json_dict()
        _emit(out)
        return EXIT_OK

    if cmd == "parity":
        steps = [to_gauss_code(d)]
        current = d
        while True:
            nxt = parity_projection(current)
            if to_gauss_code(nxt) == to_gauss_code(current):
                break
            steps.append(to_gauss_code(nxt))
            current = nxt
        _emit(
            {
                "parity": {str(c): b for c, b in sorted(gaussian_parity(d).items())},
                "projection": steps[1] if len(steps) > 1 else steps[0],
                "iterated": steps,
                "fixpoint": steps[-1],
            }
        )
        return EXIT_OK

    if cmd == "alexander":
        pres = wirtinger_presentation(d)
        matrix = alexander_matrix(pres)
        result = ideal_lower_bound(d, k_max=args.max_k, prime_bound=args.prime_bound)
        _emit(
            {
                "generators": len(pres.generators),
                "relations": len(pres.relations),
                "matrix": [[str(entry) for entry in row] for row in matrix.rows],
                "ideals": [
                    {
                        "k": c.k,
                        "generators": [str(g) for g in c.generators],
                        "witness": list(c.witness) if c.witness else None,
                        "nontrivial": c.nontrivial,
                    }
                    for c in result.certificates
                ],
                "lower_bound": result.bound,
            }
        )
        return EXIT_OK

    if cmd == "quandle":
        if not args.quandle:
            print("usage error: quandle command needs at least one --quandle FILE", file=sys.stderr)
            return EXIT_USAGE
        quandles = [load_quandle_table(path) for path in args.quandle]
        result = wirtinger_number(d, max_k=args.max_k, time_limit=args.time_limit)
        _emit(
            {
                "omega": result.omega,
                "counts": {q.name: count_colorings(d, q, result=result) for q in quandles},
                "sandwich": {q.name: sandwich_check(d, q, result=result) for q in quandles},
            }
        )
        return EXIT_OK

    if cmd == "welded":
        if not is_one_overbridge(d):
            _emit({"one_overbridge": False})
            return EXIT_OK
        cert = welded_unknot_certificate(d)
        _emit(
            {
                "one_overbridge": True,
                "certificate": cert.to_json_dict(),
                "verified": bool(replay_certificate(cert)),
            }
        )
        return EXIT_OK

    raise _UsageError(f"unknown command {cmd!r}")  # pragma: no cover


def _cmd_batch(args) -> int:
    entries, problems = ingest_table(args.table)
    for problem in problems:
        print(f"{args.table}:{problem.line}: {problem.message}", file=sys.stderr)

    quandles = tuple(load_quandle_table(path) for path in args.quandle)
    config = PipelineConfig(
        max_k=args.max_k,
        time_limit=args.time_limit,
        jobs=args.jobs,
        analyses=ALL_ANALYSES,
        quandles=quandles,
        prime_bound=args.prime_bound,
        certificates=args.certificates,
    )
    records = run_pipeline(entries, config)
    text = write_results(records, args.format, args.output)
    if args.output is None:
        sys.stdout.write(text)

    if problems or any(r.status == "error" for r in records):
        return EXIT_INPUT
    if any(r.status == "timeout" for r in records):
        return EXIT_TIMEOUT
    return EXIT_OK
