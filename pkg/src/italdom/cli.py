"""Command-line front end.

    italdom gamma --family cycle:6 --format plain
    italdom bondage --file graph.dg
    italdom verify --orders 3 4 --catalog --workers 4 --output report.json
    italdom generate --family corona:(empty:2),(path:2)
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import re
import sys
import time
from pathlib import Path
from typing import Optional, Sequence

from . import __version__
from .digraph import Digraph, format_edge_list, parse_edge_list
from .errors import BondageUndefinedError, GuardError, ParseError
from .families import build_family
from .harness import CHECK_IDS, CorpusConfig, RandomSpec, default_catalog, run_corpus
from .idf import gamma_domination, gamma_italian
from .perturbation import italian_bondage, italian_reinforcement

EXIT_OK = 0
EXIT_VIOLATIONS = 1
EXIT_PARSE = 2
EXIT_GUARD = 3
EXIT_BONDAGE_UNDEFINED = 4

SOLVER_VERBS = ("gamma", "gamma-classic", "bondage", "reinforce")

_RANDOM_NO_SEED = re.compile(r"^\s*random\s*:\s*([^,()]+),([^,()]+)\s*$")


def _family_text(text: str, seed: Optional[int]) -> str:
    # "random:n,p" takes its seed from --seed
    m = _RANDOM_NO_SEED.match(text)
    if m and seed is not None:
        return f"random:{m.group(1).strip()},{m.group(2).strip()},{seed}"
    return text


def load_digraph(args: argparse.Namespace) -> tuple[Digraph, str]:
    if args.file is not None:
        try:
            text = Path(args.file).read_text()
        except OSError as exc:
            raise ParseError(f"cannot read {args.file}: {exc.strerror or exc}") from exc
        return parse_edge_list(text), args.file
    spec = _family_text(args.family, args.seed)
    return build_family(spec), spec


def _arc_lines(arcs) -> list[str]:
    return [f"{t}->{h}" for t, h in sorted(arcs)]


def solve(verb: str, d: Digraph) -> dict:
    """Run one solver verb; returns the value, witness and bounds fields."""
    if verb == "gamma":
        r = gamma_italian(d)
        return {
            "value": r.value,
            "witness": str(r.witness),
            "bounds": {"lower": r.lower_bound_used, "upper": r.upper_bound_used},
        }
    if verb == "gamma-classic":
        k, members = gamma_domination(d)
        return {"value": k, "witness": sorted(members), "bounds": {}}
    if verb == "bondage":
        r = italian_bondage(d)
    elif verb == "reinforce":
        r = italian_reinforcement(d)
    else:
        raise ValueError(f"unknown verb {verb!r}")
    bounds = {c.source: c.value for c in r.certificates}
    bounds["gamma_I_before"] = r.base_gamma
    bounds["gamma_I_after"] = r.perturbed_gamma
    return {"value": r.value, "witness": _arc_lines(r.witness), "bounds": bounds}


def _render(verb: str, record: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(record, sort_keys=True) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["verb", "input", "value", "witness", "bounds", "runtime_ms"])
        witness = record["witness"]
        if isinstance(witness, list):
            witness = " ".join(map(str, witness))
        writer.writerow([
            verb,
            record["input"],
            record["value"],
            witness,
            json.dumps(record["bounds"], sort_keys=True),
            record["runtime_ms"],
        ])
        return buf.getvalue()
    name = {"gamma": "gamma_I", "gamma-classic": "gamma", "bondage": "b_I", "reinforce": "r_I"}[verb]
    lines = [f"{name} = {record['value']}"]
    witness = record["witness"]
    if verb == "gamma":
        lines.append(f"witness = {witness}")
    elif verb == "gamma-classic":
        lines.append("dominating set = " + " ".join(map(str, witness)))
    else:
        lines.extend(witness)
    return "\n".join(lines) + "\n"


def _run_solver(args: argparse.Namespace, out) -> int:
    d, label = load_digraph(args)
    start = time.perf_counter()
    record = solve(args.verb, d)
    record["runtime_ms"] = round((time.perf_counter() - start) * 1000, 3)
    record["verb"] = args.verb
    record["input"] = label
    out.write(_render(args.verb, record, args.format))
    return EXIT_OK


def _random_entry(text: str, seed: int, checks) -> RandomSpec:
    parts = text.split(",")
    if len(parts) != 3:
        raise ParseError(f"--random expects n,p,count: {text!r}")
    try:
        return RandomSpec(int(parts[0]), float(parts[1]), seed, int(parts[2]), checks)
    except ValueError as exc:
        raise ParseError(f"--random expects n,p,count: {text!r}") from exc


def build_config(args: argparse.Namespace) -> CorpusConfig:
    if args.corpus is not None:
        try:
            data = json.loads(Path(args.corpus).read_text())
        except OSError as exc:
            raise ParseError(f"cannot read {args.corpus}: {exc.strerror or exc}") from exc
        except json.JSONDecodeError as exc:
            raise ParseError(f"{args.corpus}: {exc}") from exc
        try:
            return CorpusConfig.from_dict(data)
        except (KeyError, TypeError) as exc:
            raise ParseError(f"{args.corpus}: malformed corpus config ({exc})") from exc
    seed = args.seed if args.seed is not None else 0
    checks = tuple(args.checks) if args.checks else None
    rnd = tuple(_random_entry(t, seed, checks) for t in args.random or ())
    catalog = default_catalog() if args.catalog else ()
    return CorpusConfig(tuple(args.orders or ()), rnd, catalog)


def _run_verify(args: argparse.Namespace, out) -> int:
    config = build_config(args)
    report = run_corpus(config, checks=args.checks, workers=args.workers)
    if args.format == "json" or args.output:
        text = report.to_json(include_timings=args.timings)
        if args.output:
            Path(args.output).write_text(text)
        else:
            out.write(text)
    if args.format != "json":
        out.write(report.table() + "\n")
    return EXIT_VIOLATIONS if report.blocking_violations else EXIT_OK


def _run_generate(args: argparse.Namespace, out) -> int:
    d, _ = load_digraph(args)
    text = format_edge_list(d)
    if args.output:
        Path(args.output).write_text(text)
    else:
        out.write(text)
    return EXIT_OK


def _add_input(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--file", help="edge-list file: 'n m' header then 'u v' lines")
    src.add_argument("--family", help="family spec such as cycle:6, kbip:3,5 or corona:(empty:2),(path:2)")
    p.add_argument("--seed", type=int, help="seed for 'random:n,p' specs given without one")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="italdom", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true", help="log search warnings")
    sub = parser.add_subparsers(dest="verb", required=True)
    helps = {
        "gamma": "Italian domination number with a witness labeling",
        "gamma-classic": "classical domination number with a dominating set",
        "bondage": "Italian bondage number with a witness arc set",
        "reinforce": "Italian reinforcement number with a witness arc set",
    }
    for verb in SOLVER_VERBS:
        p = sub.add_parser(verb, help=helps[verb])
        _add_input(p)
        p.add_argument("--format", choices=("json", "csv", "plain"), default="json")
    v = sub.add_parser("verify", help="run the theorem checks over a corpus")
    v.add_argument("--corpus", help="JSON corpus config; overrides the corpus flags below")
    v.add_argument("--orders", type=int, nargs="*", help="exhaustive orders, e.g. 3 4")
    v.add_argument("--random", action="append", metavar="N,P,COUNT",
                   help="random digraphs seeded from --seed upward (repeatable)")
    v.add_argument("--catalog", action="store_true", help="include the family catalog")
    v.add_argument("--checks", nargs="*", choices=CHECK_IDS, help="restrict to these check ids")
    v.add_argument("--seed", type=int, help="first seed of --random entries (default 0)")
    v.add_argument("--workers", type=int, default=1)
    v.add_argument("--format", choices=("json", "csv", "plain"), default="plain",
                   help="json prints the report; otherwise a table")
    v.add_argument("--output", help="write the JSON report here")
    v.add_argument("--timings", action="store_true", help="put per-check wall times in the JSON")
    g = sub.add_parser("generate", help="write a family digraph as an edge list")
    src = g.add_mutually_exclusive_group(required=True)
    src.add_argument("--family", help="family spec")
    src.add_argument("--file", help=argparse.SUPPRESS)
    g.add_argument("--seed", type=int, help="seed for 'random:n,p' specs given without one")
    g.add_argument("--output", help="write here instead of stdout")
    return parser


def main(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_PARSE
    logging.basicConfig(level=logging.WARNING if args.verbose else logging.ERROR, format="%(message)s")
    try:
        if args.verb in SOLVER_VERBS:
            return _run_solver(args, out)
        if args.verb == "verify":
            return _run_verify(args, out)
        return _run_generate(args, out)
    except BondageUndefinedError as exc:
        err.write(f"bondage undefined: {exc}\n")
        return EXIT_BONDAGE_UNDEFINED
    except GuardError as exc:
        err.write(f"guard: {exc}\n")
        return EXIT_GUARD
    except (ParseError, ValueError) as exc:
        err.write(f"parse error: {exc}\n")
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
