"""Report emission: JSON (versioned) and CSV with fixed column orders.

Every report is a plain dict with ``"schema": SCHEMA_VERSION`` and a
``"command"`` field.  Nothing time-dependent goes in unless the caller asks
for timing, so repeated runs with the same flags give identical bytes.
"""

from __future__ import annotations

import csv
import io
import json
from typing import Dict, List, Sequence

from .graphs import Graph

__all__ = ["SCHEMA_VERSION", "CSV_COLUMNS", "graph_key", "graph_descriptor", "to_json", "to_csv",
           "write_report"]

SCHEMA_VERSION = 1

# One fixed column order per command.  Rows are emitted in this order only.
CSV_COLUMNS: Dict[str, Sequence[str]] = {
    "ideal": ("ideal", "power", "index", "generator", "degree"),
    "depth": ("k", "depth", "method"),
    "rees": ("index", "lead", "trail", "x_degree", "total_degree"),
    "spread": ("quantity", "value"),
    "koszul": ("condition", "violated", "witness"),
    "verify": ("suite", "theorem", "status", "instances", "min_instances", "failures", "reason",
               "elapsed_ms"),
}


def graph_key(g: Graph) -> tuple:
    """Sort key used to order per-instance results before emission."""
    return (g.n, g.m, g.edges)


def graph_descriptor(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.edges]}


def to_json(report: dict) -> str:
    return json.dumps(report, indent=2, ensure_ascii=False) + "\n"


def to_csv(command: str, rows: List[dict]) -> str:
    cols = CSV_COLUMNS[command]
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=cols, lineterminator="\n", extrasaction="ignore")
    w.writeheader()
    for row in rows:
        w.writerow({c: row.get(c, "") for c in cols})
    return buf.getvalue()


def write_report(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)
