"""CSV, DOT and manifest writers.

Oracle CSV (schema v1): n, objective, value, witnesses, scanned, seconds.
Scenario CSV (schema v1): n, objective, value, verdict, witnesses, expected, scanned.
Scenario CSVs leave timings out so reruns are byte-identical; timings go to
the JSON manifest.  Graph lists are space-separated graph6 strings.
"""

from __future__ import annotations

import csv
import io
import json
import os
from pathlib import Path

from .. import __version__
from ..oracles.enumerate import DEFAULT_CAP, HARD_CAP
from ..oracles.extremal import ExtremalReport
from .scenario import ScenarioVerdict

SCHEMA_VERSION = 1
ORACLE_COLUMNS = ["n", "objective", "value", "witnesses", "scanned", "seconds"]
SCENARIO_COLUMNS = ["n", "objective", "value", "verdict", "witnesses", "expected", "scanned"]


def output_dir(arg: str | None = None) -> Path:
    path = Path(arg or os.environ.get("SPEXLAB_OUT") or "spexlab-out")
    path.mkdir(parents=True, exist_ok=True)
    return path


def _csv(rows: list[list], columns: list[str]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    w.writerows(rows)
    return buf.getvalue()


def oracle_csv(reports: list[ExtremalReport]) -> str:
    rows = [[r.n, r.objective, r.value_text(), " ".join(r.witness_graph6), r.graphs_scanned, f"{r.duration:.3f}"]
            for r in reports]
    return _csv(rows, ORACLE_COLUMNS)


def scenario_csv(v: ScenarioVerdict) -> str:
    rows = [[row.n, row.report.objective, row.report.value_text(), row.verdict, " ".join(row.report.witness_graph6),
             " ".join(row.expected), row.report.graphs_scanned] for row in v.rows]
    return _csv(rows, SCENARIO_COLUMNS)


def scenario_manifest(v: ScenarioVerdict, *, threads: int, max_n: int | None, long_run: bool, seed: int = 0) -> dict:
    s = v.scenario
    return {
        "schema": SCHEMA_VERSION,
        "version": __version__,
        "scenario": s.name,
        "family_ref": s.family_ref,
        "family_sha256": s.family.digest(),
        "objective": s.objective,
        "n_values": list(s.n_values),
        "caps": {"default": DEFAULT_CAP, "hard": HARD_CAP, "max_n": max_n, "long_run": long_run},
        "threads": threads,
        "seed": seed,
        "verdicts": {str(r.n): r.verdict for r in v.rows},
        "frontier": v.frontier,
        "checks": list(v.checks),
        "seconds": {str(n): round(t, 3) for n, t in v.timings.items()},
    }


def write_text(path: Path, text: str) -> Path:
    path.write_text(text)
    return path


def write_json(path: Path, obj: dict) -> Path:
    path.write_text(json.dumps(obj, indent=2, sort_keys=True) + "\n")
    return path
