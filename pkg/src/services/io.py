"""Ideal files, corpus listings and JSON reports."""

from __future__ import annotations

import json
import logging
from pathlib import Path
from typing import Any

from src.models.errors import IdealParseError, MalformedInputError
from src.models.monomial import MonomialIdeal
from src.models.reports import CheckReport
from src.services.corpus import CorpusItem
from src.services.ideals import minimize

logger = logging.getLogger(__name__)


def parse_ideal(text: str) -> MonomialIdeal:
    """Parse the line format: n first, then one exponent tuple per line.

    Blank lines and lines starting with '#' are ignored everywhere. No
    exponent lines means the zero ideal.
    """
    n: int | None = None
    gens: list[tuple[int, ...]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if n is None:
            if len(fields) != 1 or not (fields[0].isascii() and fields[0].isdigit()):
                raise IdealParseError(lineno, f"expected the variable count, got {line!r}")
            n = int(fields[0])
            if n < 1:
                raise IdealParseError(lineno, "the variable count must be positive")
            continue
        if len(fields) != n:
            raise IdealParseError(lineno, f"expected {n} exponents, got {len(fields)}")
        try:
            exps = tuple(int(f) for f in fields)
        except ValueError:
            raise IdealParseError(lineno, f"non-integer exponent in {line!r}") from None
        if any(e < 0 for e in exps):
            raise IdealParseError(lineno, f"negative exponent in {line!r}")
        if exps in gens:
            logger.warning(f"line {lineno}: duplicate generator {exps} ignored")
            continue
        gens.append(exps)
    if n is None:
        raise IdealParseError(0, "empty ideal file")
    try:
        return minimize(gens, n)
    except MalformedInputError as e:
        raise IdealParseError(0, str(e)) from e


def read_ideal(path: str | Path) -> MonomialIdeal:
    return parse_ideal(Path(path).read_text(encoding="utf-8"))


def format_ideal(I: MonomialIdeal) -> str:
    lines = [str(I.n)] + [" ".join(str(e) for e in u) for u in I.gens]
    return "\n".join(lines) + "\n"


def dumps(document: Any) -> str:
    """Canonical JSON: sorted keys, fixed indentation, trailing newline."""
    return json.dumps(document, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def report_document(
    reports: list[CheckReport],
    header: dict[str, Any],
    summary: dict[str, Any] | None = None,
    include_timings: bool = False,
) -> dict[str, Any]:
    rows = []
    for r in reports:
        row = r.model_dump(mode="json")
        if not include_timings:
            row["runtime_ms"] = None
        rows.append(row)
    document: dict[str, Any] = {"header": header, "reports": rows}
    if summary is not None:
        document["summary"] = summary
    return document


def emit_reports(
    reports: list[CheckReport],
    path: str | Path | None,
    header: dict[str, Any],
    summary: dict[str, Any] | None = None,
    include_timings: bool = False,
) -> str:
    """Serialize reports; write them to ``path`` when one is given."""
    text = dumps(report_document(reports, header, summary, include_timings))
    if path is not None:
        Path(path).write_text(text, encoding="utf-8")
        logger.info(f"wrote {len(reports)} reports to {path}")
    return text


def corpus_document(items: list[CorpusItem]) -> list[dict[str, Any]]:
    return [
        {
            "index": item.index,
            "label": item.label,
            "n": item.ideal.n,
            "generators": [list(u) for u in item.ideal.gens],
        }
        for item in items
    ]
