"""Command-line front end: scan directories, pair sources with classes, report.

``oometric PATH...`` walks the given roots, computes decision complexity for
every ``.java`` file and coupling for every ``.class`` file, joins them by
class name, and prints one row per class as an aligned table, CSV, or JSON.
Source files are attributed to the top-level type whose name matches the file
stem (prefixed by the declared package); files that declare no such type are
reported as diagnostics rather than guessed at. Output is deterministic:
records are sorted by class name and identical trees render byte-identically.

Exit codes: 0 success (diagnostics allowed), 1 usage error, 2 analysis
failure (unreadable root, or any parse error under --strict).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import NamedTuple, Optional, Sequence

from . import __version__
from .classfile import RawClassFile, parse_class
from .coupling import DEFAULT_JDK_PREFIXES, CouplingPolicy, compute_cbo
from .cyclomatic import SourceUnit, cc_of_source, load_source_unit
from .errors import ClassFileError
from .metrics import MetricsRecord, Provenance, RiskLevel


class ScanMode(Enum):
    AUTO = "auto"
    SOURCE_ONLY = "source"
    CLASS_ONLY = "class"


class OutputFormat(Enum):
    TABLE = "table"
    CSV = "csv"
    JSON = "json"


class Diagnostic(NamedTuple):
    path: str
    error: str


@dataclass(frozen=True)
class ScanConfig:
    roots: tuple[str, ...]
    mode: ScanMode = ScanMode.AUTO
    policy: CouplingPolicy = CouplingPolicy.LITERAL
    jdk_prefixes: tuple[str, ...] = DEFAULT_JDK_PREFIXES
    format: OutputFormat = OutputFormat.TABLE
    strict: bool = False

    def __post_init__(self):
        if not self.roots:
            raise ValueError("at least one root path is required")
        if not self.jdk_prefixes or any(not p for p in self.jdk_prefixes):
            raise ValueError("JDK prefixes must be non-empty strings")


@dataclass(frozen=True)
class Report:
    records: tuple[MetricsRecord, ...]
    diagnostics: tuple[Diagnostic, ...]
    summary: dict


class AnalysisError(Exception):
    """Fatal condition: unreadable root, or a per-file error under strict."""


def scan(config: ScanConfig) -> tuple[list[SourceUnit], list[tuple[str, RawClassFile]], list[Diagnostic]]:
    """Collect and parse inputs under the configured roots, in path order."""
    units: list[SourceUnit] = []
    classes: list[tuple[str, RawClassFile]] = []
    diagnostics: list[Diagnostic] = []

    def report(path: Path, exc: Exception) -> None:
        if config.strict:
            raise AnalysisError(f"{path}: {exc}") from exc
        diagnostics.append(Diagnostic(str(path), str(exc)))

    for root in config.roots:
        base = Path(root)
        if not base.exists():
            raise AnalysisError(f"root {root!r} does not exist")
        try:
            found = [base] if base.is_file() else [p for p in base.rglob("*") if p.is_file()]
        except OSError as exc:
            raise AnalysisError(f"cannot walk root {root!r}: {exc}") from exc
        for path in sorted(found, key=lambda p: p.as_posix()):
            if path.suffix == ".java" and config.mode is not ScanMode.CLASS_ONLY:
                try:
                    unit = load_source_unit(path)
                except (OSError, UnicodeDecodeError) as exc:
                    report(path, exc)
                    continue
                if unit.primary_class is None:
                    diagnostics.append(Diagnostic(
                        str(path), f"no top-level type matching file stem {path.stem!r}"
                    ))
                else:
                    units.append(unit)
            elif path.suffix == ".class" and config.mode is not ScanMode.SOURCE_ONLY:
                try:
                    classes.append((str(path), parse_class(path.read_bytes())))
                except (OSError, ClassFileError) as exc:
                    report(path, exc)
    return units, classes, diagnostics


def pair_units(
    sources: Sequence[SourceUnit],
    classes: Sequence[tuple[str, RawClassFile]],
    policy: CouplingPolicy = CouplingPolicy.LITERAL,
    jdk_prefixes: Sequence[str] = DEFAULT_JDK_PREFIXES,
) -> tuple[list[MetricsRecord], list[Diagnostic]]:
    """Join sources and classes by binary name into one record per class."""
    diagnostics: list[Diagnostic] = []
    by_source: dict[str, SourceUnit] = {}
    for unit in sources:
        if unit.primary_class in by_source:
            first = by_source[unit.primary_class]
            diagnostics.append(Diagnostic(
                unit.path,
                f"duplicate source for class {unit.primary_class}; using {first.path}",
            ))
        else:
            by_source[unit.primary_class] = unit
    by_class: dict[str, RawClassFile] = {}
    for path, cls in classes:
        name = cls.class_name
        if name in by_class:
            diagnostics.append(Diagnostic(path, f"duplicate class file for {name}; using the first"))
        else:
            by_class[name] = cls

    records = []
    for name in sorted(set(by_source) | set(by_class)):
        cc = cc_of_source(by_source[name]).cc if name in by_source else None
        cbo = compute_cbo(by_class[name], policy, jdk_prefixes)[0] if name in by_class else None
        records.append(MetricsRecord.from_parts(name, cc, cbo))
    return records, diagnostics


def make_report(records: Sequence[MetricsRecord], diagnostics: Sequence[Diagnostic]) -> Report:
    ordered = tuple(sorted(records, key=lambda r: r.class_name))
    bands = {level.label: 0 for level in RiskLevel}
    provenance = {p: 0 for p in Provenance}
    for record in ordered:
        provenance[record.provenance] += 1
        if record.risk is not None:
            bands[record.risk.label] += 1
    summary = {
        "records": len(ordered),
        "paired": provenance[Provenance.PAIRED],
        "source_only": provenance[Provenance.SOURCE_ONLY],
        "class_only": provenance[Provenance.CLASS_ONLY],
        "risk_bands": bands,
    }
    return Report(records=ordered, diagnostics=tuple(diagnostics), summary=summary)


def render(report: Report, fmt: OutputFormat) -> bytes:
    if fmt is OutputFormat.CSV:
        return _render_csv(report)
    if fmt is OutputFormat.JSON:
        return _render_json(report)
    return _render_table(report)


def _cell(value: Optional[int]) -> str:
    return "" if value is None else str(value)


def _render_csv(report: Report) -> bytes:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["class", "cc", "cbo", "new_cc", "risk"])
    for r in report.records:
        writer.writerow([
            r.class_name, _cell(r.cc), _cell(r.cbo), _cell(r.new_cc),
            r.risk.label if r.risk is not None else "",
        ])
    return buffer.getvalue().encode("utf-8")


def _render_json(report: Report) -> bytes:
    payload = {
        "tool_version": __version__,
        "records": [
            {
                "class": r.class_name,
                "cc": r.cc,
                "cbo": r.cbo,
                "new_cc": r.new_cc,
                "risk": r.risk.label if r.risk is not None else None,
                "provenance": r.provenance.value,
            }
            for r in report.records
        ],
        "summary": report.summary,
        "diagnostics": [{"path": d.path, "error": d.error} for d in report.diagnostics],
    }
    return (json.dumps(payload, indent=2) + "\n").encode("utf-8")


def _render_table(report: Report) -> bytes:
    headers = ("S.No", "Class", "CC", "CBO", "NewCC", "Risk")
    rows = [
        (
            str(i + 1), r.class_name, _cell(r.cc), _cell(r.cbo), _cell(r.new_cc),
            r.risk.label if r.risk is not None else "",
        )
        for i, r in enumerate(report.records)
    ]
    widths = [max(len(h), *(len(row[k]) for row in rows)) if rows else len(h)
              for k, h in enumerate(headers)]
    right = {0, 2, 3, 4}  # numeric columns
    lines = []
    for row in [headers, *rows]:
        cells = [
            cell.rjust(widths[k]) if k in right else cell.ljust(widths[k])
            for k, cell in enumerate(row)
        ]
        lines.append("  ".join(cells).rstrip())
    return ("\n".join(lines) + "\n").encode("utf-8")


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # exit 1 instead of argparse's default 2
        raise _UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="oometric",
        description="Decision complexity, class coupling, and combined risk for Java code.",
    )
    parser.add_argument("paths", nargs="+", metavar="PATH",
                        help="files or directories to analyze")
    parser.add_argument("--mode", choices=[m.value for m in ScanMode], default="auto",
                        help="restrict analysis to source or class files (default: auto)")
    parser.add_argument("--policy", choices=[p.value for p in CouplingPolicy], default="literal",
                        help="coupling policy (default: literal)")
    parser.add_argument("--jdk-prefix", action="append", metavar="P", dest="jdk_prefixes",
                        help="package prefix treated as JDK-internal; repeatable "
                             "(default: java. javax.)")
    parser.add_argument("--format", choices=[f.value for f in OutputFormat], default="table",
                        help="output format (default: table)")
    parser.add_argument("--strict", action="store_true",
                        help="treat any per-file parse error as fatal")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        config = ScanConfig(
            roots=tuple(args.paths),
            mode=ScanMode(args.mode),
            policy=CouplingPolicy(args.policy),
            jdk_prefixes=tuple(args.jdk_prefixes) if args.jdk_prefixes else DEFAULT_JDK_PREFIXES,
            format=OutputFormat(args.format),
            strict=args.strict,
        )
    except _UsageError as exc:
        print(f"oometric: error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"oometric: error: {exc}", file=sys.stderr)
        return 1

    try:
        units, classes, scan_diags = scan(config)
        records, pair_diags = pair_units(units, classes, config.policy, config.jdk_prefixes)
    except AnalysisError as exc:
        print(f"oometric: {exc}", file=sys.stderr)
        return 2

    report = make_report(records, scan_diags + pair_diags)
    sys.stdout.buffer.write(render(report, config.format))
    sys.stdout.buffer.flush()
    for diagnostic in report.diagnostics:
        print(f"{diagnostic.path}: {diagnostic.error}", file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
