"""Table ingestion, the per-entry analysis pipeline, and result writers.

Input tables are tab-separated ``name<TAB>code`` lines; ``#`` lines are
comments.  Every entry is normalized (a tail on each component) before
analysis, and the reported component/chord/strand statistics describe the
normalized diagram, so the recorded invariant ideal_lb <= omega <= vb is
meaningful within one record.
"""

from __future__ import annotations

import csv
import io
import json
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .errors import GaussCodeError, SearchExhaustedError, SearchTimeoutError
from .gauss import bridge_count, ensure_tail_per_component, parse_gauss_code, strand_table
from .linkgroup import ideal_lower_bound
from .parity import parity_lower_bound
from .quandle import FiniteQuandle, count_colorings
from .search import wirtinger_number
from .welded import is_one_overbridge, replay_certificate, welded_unknot_certificate

CSV_COLUMNS = [
    "name",
    "components",
    "chords",
    "strands",
    "vbD",
    "omegaD",
    "seed_set",
    "ideal_lb",
    "parity_lb",
    "status",
    "elapsed_ms",
]

ALL_ANALYSES = frozenset({"ideal", "parity", "quandle", "welded"})


@dataclass(frozen=True)
class TableEntry:
    name: str
    code: str
    line: int


@dataclass(frozen=True)
class TableProblem:
    line: int
    message: str


@dataclass
class PipelineConfig:
    max_k: Optional[int] = None
    time_limit: Optional[float] = None
    jobs: int = 1
    analyses: frozenset = ALL_ANALYSES
    quandles: tuple[FiniteQuandle, ...] = ()
    prime_bound: int = 97
    certificates: bool = False


@dataclass
class ResultRecord:
    name: str
    components: Optional[int] = None
    chords: Optional[int] = None
    strands: Optional[int] = None
    vb_d: Optional[int] = None
    omega_d: Optional[int] = None
    seed_set: tuple[int, ...] = ()
    ideal_lb: Optional[int] = None
    parity_lb: Optional[int] = None
    quandle_counts: dict = field(default_factory=dict)
    welded_unknot: Optional[bool] = None
    status: str = "ok"
    error_code: Optional[str] = None
    elapsed_ms: float = 0.0
    certificates: Optional[dict] = None

    @property
    def status_text(self) -> str:
        if self.status == "error":
            return f"error({self.error_code})"
        return self.status


def ingest_table(path) -> tuple[list[TableEntry], list[TableProblem]]:
    """Read a name/code table.  Malformed lines become TableProblem entries
    and processing continues; duplicate names are rejected."""
    entries: list[TableEntry] = []
    problems: list[TableProblem] = []
    seen: set[str] = set()
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.rstrip("\n")
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            if "\t" not in line:
                problems.append(TableProblem(lineno, "expected name<TAB>code"))
                continue
            name, code = line.split("\t", 1)
            name = name.strip()
            code = code.strip()
            if not name or not code:
                problems.append(TableProblem(lineno, "empty name or code"))
                continue
            if name in seen:
                problems.append(TableProblem(lineno, f"duplicate name {name!r}"))
                continue
            seen.add(name)
            entries.append(TableEntry(name, code, lineno))
    return entries, problems


def _process_entry(entry: TableEntry, config: PipelineConfig) -> ResultRecord:
    rec = ResultRecord(name=entry.name)
    start = time.perf_counter()
    deadline = None if config.time_limit is None else start + config.time_limit
    try:
        diagram = ensure_tail_per_component(parse_gauss_code(entry.code))
    except GaussCodeError:
        rec.status = "error"
        rec.error_code = "parse"
        rec.elapsed_ms = (time.perf_counter() - start) * 1000.0
        return rec

    table = strand_table(diagram)
    rec.components = diagram.n_components
    rec.chords = diagram.n_chords
    rec.strands = table.n_strands
    rec.vb_d = bridge_count(diagram)

    result = None
    try:
        remaining = None if deadline is None else max(deadline - time.perf_counter(), 0.0)
        result = wirtinger_number(diagram, max_k=config.max_k, time_limit=remaining)
        rec.omega_d = result.omega
        rec.seed_set = result.seed_set
    except SearchTimeoutError:
        rec.status = "timeout"
    except SearchExhaustedError:
        rec.status = "error"
        rec.error_code = "exhausted"

    def time_left() -> bool:
        return deadline is None or time.perf_counter() < deadline

    is_knot = diagram.n_components == 1
    if rec.status == "ok":
        if "ideal" in config.analyses and is_knot and time_left():
            rec.ideal_lb = ideal_lower_bound(
                diagram, config.max_k, config.prime_bound
            ).bound
        if "parity" in config.analyses and is_knot and time_left():
            rec.parity_lb = parity_lower_bound(
                diagram, config.max_k, config.prime_bound
            ).bound
        if "quandle" in config.analyses and result is not None and time_left():
            for q in config.quandles:
                rec.quandle_counts[q.name or f"Q{q.order}"] = count_colorings(
                    diagram, q, result=result
                )
        welded_cert = None
        if "welded" in config.analyses and is_knot and time_left():
            if is_one_overbridge(diagram):
                welded_cert = welded_unknot_certificate(diagram)
                rec.welded_unknot = bool(replay_certificate(welded_cert))
            else:
                rec.welded_unknot = None  # not applicable on this diagram

        if (
            rec.ideal_lb is not None
            and rec.omega_d is not None
            and not rec.ideal_lb <= rec.omega_d <= rec.vb_d
        ):
            rec.status = "error"
            rec.error_code = "invariant"

        if config.certificates:
            certs = {}
            if result is not None:
                certs["sequence"] = result.sequence.to_json_dict()
            if welded_cert is not None:
                certs["welded"] = welded_cert.to_json_dict()
            rec.certificates = certs or None

    rec.elapsed_ms = (time.perf_counter() - start) * 1000.0
    return rec


def run_pipeline(
    entries: Sequence[TableEntry], config: Optional[PipelineConfig] = None
) -> list[ResultRecord]:
    """Analyze entries with a worker pool; records come back in input order
    whatever the worker count, so writers emit identical output."""
    config = config or PipelineConfig()
    if config.jobs <= 1 or len(entries) <= 1:
        return [_process_entry(e, config) for e in entries]
    with ThreadPoolExecutor(max_workers=config.jobs) as pool:
        return list(pool.map(lambda e: _process_entry(e, config), entries))


def _record_json_dict(rec: ResultRecord) -> dict:
    out = {
        "name": rec.name,
        "components": rec.components,
        "chords": rec.chords,
        "strands": rec.strands,
        "vbD": rec.vb_d,
        "omegaD": rec.omega_d,
        "seed_set": list(rec.seed_set),
        "ideal_lb": rec.ideal_lb,
        "parity_lb": rec.parity_lb,
        "quandle_counts": rec.quandle_counts,
        "welded_unknot": rec.welded_unknot,
        "status": rec.status_text,
        "elapsed_ms": rec.elapsed_ms,
    }
    if rec.certificates is not None:
        out["certificates"] = rec.certificates
    return out


def render_results(records: Sequence[ResultRecord], fmt: str = "csv") -> str:
    """Render records as CSV (the stable, diffable format) or JSON.

    The CSV elapsed_ms column is pinned to 0 so identical inputs give
    byte-identical files whatever the worker count or machine load; the
    JSON output carries the measured per-entry times.
    """
    if fmt == "json":
        return json.dumps([_record_json_dict(r) for r in records], indent=2) + "\n"
    if fmt != "csv":
        raise ValueError(f"unknown format {fmt!r}")
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for rec in records:
        writer.writerow(
            [
                rec.name,
                _cell(rec.components),
                _cell(rec.chords),
                _cell(rec.strands),
                _cell(rec.vb_d),
                _cell(rec.omega_d),
                ";".join(str(s) for s in rec.seed_set),
                _cell(rec.ideal_lb),
                _cell(rec.parity_lb),
                rec.status_text,
                0,
            ]
        )
    return buf.getvalue()


def _cell(value) -> str:
    return "" if value is None else str(value)


def write_results(records: Sequence[ResultRecord], fmt: str, path=None) -> str:
    """Render and optionally write to ``path``; returns the rendered text."""
    text = render_results(records, fmt)
    if path is not None:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    return text
