"""Command-line entry point: compute, witness, check, corpus, serve."""

from __future__ import annotations

import argparse
import logging
import sys
from collections.abc import Sequence
from typing import Any

from src.config.settings import configure_logging, settings
from src.models.errors import IdealParseError, MonoregError
from src.models.field import CoefficientField
from src.models.reports import CorpusSpec
from src.services.betti import regularity
from src.services.compute import QUANTITIES, compute
from src.services.corpus import CorpusItem, acceptance_corpus, generate
from src.services.degree_complex import reg_witness_search, verify_witness
from src.services.io import corpus_document, dumps, emit_reports, read_ideal
from src.services.runner import SUITES, Grid, parse_suite, run_corpus

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2

CORPORA = ("acceptance", "exhaustive-squarefree", "random-monomial", "named-family")


def _field(text: str) -> CoefficientField:
    try:
        return CoefficientField.parse(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from e


def _box(text: str) -> tuple[int, ...]:
    try:
        bounds = tuple(int(b) for b in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"box must be comma-separated integers, got {text!r}") from None
    if any(b < 0 for b in bounds):
        raise argparse.ArgumentTypeError("box bounds must be nonnegative")
    return bounds


def _add_corpus_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--corpus", choices=CORPORA, default="acceptance", help="Corpus to generate.")
    p.add_argument("--n", type=int, default=3, help="Number of variables (default: 3).")
    p.add_argument("--degree-cap", type=int, default=3, dest="degree_cap")
    p.add_argument("--mu-cap", type=int, default=4, dest="mu_cap")
    p.add_argument("--count", type=int, default=100, help="Random ideals to draw.")
    p.add_argument("--seed", type=int, default=42, help="Seed of the random corpus.")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="monoreg",
        description="Regularity, symbolic powers and integral closures of monomial ideals.",
    )
    parser.add_argument("--log-level", default=None, dest="log_level")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="Compute one quantity of an ideal file.")
    p.add_argument("quantity", choices=QUANTITIES)
    p.add_argument("ideal", help="Path to an ideal file.")
    p.add_argument("--field", type=_field, default=settings.default_field)
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--s", type=int, default=1)

    p = sub.add_parser("witness", help="Search for a regularity witness.")
    p.add_argument("ideal", help="Path to an ideal file.")
    p.add_argument("--field", type=_field, default=settings.default_field)
    p.add_argument("--box", type=_box, default=None, help="Comma-separated upper bounds for a.")

    p = sub.add_parser("check", help="Check theorem instances over a corpus or ideal files.")
    p.add_argument("ideals", nargs="*", help="Ideal files; when given, replace the corpus.")
    p.add_argument("--suite", action="append", default=None, choices=sorted(SUITES))
    _add_corpus_flags(p)
    p.add_argument("--field", type=_field, default=settings.default_field)
    p.add_argument("--m-max", type=int, default=settings.grid_m_max, dest="m_max")
    p.add_argument("--k-max", type=int, default=settings.grid_k_max, dest="k_max")
    p.add_argument("--s-max", type=int, default=settings.grid_s_max, dest="s_max")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", default=None, help="Write the JSON report here instead of stdout.")
    p.add_argument("--strict", action="store_true", help="SKIPPED cells fail the run.")
    p.add_argument("--timings", action="store_true", help="Record runtime_ms in the report.")

    p = sub.add_parser("corpus", help="Emit a generated corpus as JSON.")
    _add_corpus_flags(p)
    p.add_argument("--out", default=None)

    p = sub.add_parser("serve", help="Run the HTTP API.")
    p.add_argument("--host", default=settings.host)
    p.add_argument("--port", type=int, default=settings.port)
    p.add_argument("--reload", action="store_true")
    return parser


def _corpus(args: argparse.Namespace) -> list[CorpusItem]:
    if args.corpus == "acceptance":
        return acceptance_corpus(n=args.n, seed=args.seed, count=args.count)
    spec = CorpusSpec(
        n=args.n,
        mode=args.corpus,
        degree_cap=args.degree_cap,
        mu_cap=args.mu_cap,
        count=args.count,
        seed=args.seed,
    )
    return generate(spec)


def _write(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def cmd_compute(args: argparse.Namespace) -> int:
    I = read_ideal(args.ideal)
    sys.stdout.write(dumps(compute(I, args.quantity, args.field, m=args.m, s=args.s)))
    return EXIT_OK


def cmd_witness(args: argparse.Namespace) -> int:
    I = read_ideal(args.ideal)
    w = reg_witness_search(I, args.field, box=args.box)
    document: dict[str, Any] = {
        "ideal": str(I),
        "witness": w.model_dump(mode="json"),
        "verified": verify_witness(I, w, args.field),
        "lower_bound_only": args.box is not None,
    }
    if args.box is None:
        reg = regularity(I, args.field).to_json()
        document["regularity"] = reg
        document["oracle_agreement"] = reg == w.value
    sys.stdout.write(dumps(document))
    return EXIT_OK


def cmd_check(args: argparse.Namespace) -> int:
    if args.ideals:
        items = [
            CorpusItem(index=i, label=path, ideal=read_ideal(path))
            for i, path in enumerate(args.ideals)
        ]
    else:
        items = _corpus(args)
    suite_names = args.suite or ["all"]
    grid = Grid(m_max=args.m_max, k_max=args.k_max, s_max=args.s_max)
    result = run_corpus(items, parse_suite(suite_names), args.field, grid, jobs=args.jobs)
    header = {
        "tool_version": settings.app_version,
        "seed": args.seed,
        "field": args.field.label,
        "flags": {
            "suite": sorted(suite_names),
            "corpus": "files" if args.ideals else args.corpus,
            "n": args.n,
            "degree_cap": args.degree_cap,
            "mu_cap": args.mu_cap,
            "count": args.count,
            "m_max": grid.m_max,
            "k_max": grid.k_max,
            "s_max": grid.s_max,
            "strict": args.strict,
        },
    }
    text = emit_reports(
        result.reports,
        None,
        header,
        summary=result.summary.model_dump(mode="json"),
        include_timings=args.timings,
    )
    _write(text, args.out)
    if result.failed:
        print(f"{len(result.summary.failures)} theorem instance(s) FAILED:", file=sys.stderr)
        for line in result.summary.failures:
            print(f"  {line}", file=sys.stderr)
        return EXIT_FAILED
    if args.strict and result.skipped:
        print(f"{result.skipped} cell(s) SKIPPED under --strict", file=sys.stderr)
        return EXIT_FAILED
    return EXIT_OK


def cmd_corpus(args: argparse.Namespace) -> int:
    _write(dumps(corpus_document(_corpus(args))), args.out)
    return EXIT_OK


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    uvicorn.run("src.api.main:app", host=args.host, port=args.port, reload=args.reload)
    return EXIT_OK


COMMANDS = {
    "compute": cmd_compute,
    "witness": cmd_witness,
    "check": cmd_check,
    "corpus": cmd_corpus,
    "serve": cmd_serve,
}


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    configure_logging(args.log_level)
    try:
        return COMMANDS[args.command](args)
    except IdealParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except (MonoregError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
