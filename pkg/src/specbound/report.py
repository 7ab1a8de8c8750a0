"""Report documents: one dict schema, three renderings (table/CSV/JSON).

A document is a plain dict with ``schema_version``, ``kind``,
``metadata``, ``summary`` and ``rows``.  All indices in serialized
output are 1-based (the Python API is 0-based).  JSON has no infinity
literal, so infinite values serialize as the string ``"inf"`` and
:func:`from_json` restores them; with timestamps suppressed the JSON and
CSV renderings are byte-identical across runs for identical inputs.
"""

from __future__ import annotations

import csv
import io
import json
import math
from datetime import datetime, timezone

import numpy as np

from ._version import __version__
from .bounds import EigenBoundReport, SingularBoundReport
from .certification import CertificationReport
from .fuzz import FuzzResult

SCHEMA_VERSION = 1

# The only fields that can legitimately hold an infinity.
_INF_KEYS = frozenset({
    "quadratic", "eigen_worst_slack", "sv_worst_slack",
    "degenerate_worst_slack", "weyl_margin", "quadratic_margin",
    "interior_extreme_ratio",
})


def _num(x) -> float:
    return float(x)


def _metadata(seed, source, timestamp) -> dict:
    meta = {"tool": "specbound", "version": __version__}
    if seed is not None:
        meta["seed"] = int(seed)
    if source is not None:
        meta["source"] = str(source)
    if timestamp:
        meta["generated_at"] = datetime.now(timezone.utc).isoformat(
            timespec="seconds")
    return meta


def document(report, seed=None, source=None, timestamp: bool = True) -> dict:
    """Build the serializable document for any report object."""
    meta = _metadata(seed, source, timestamp)
    if isinstance(report, EigenBoundReport):
        return _eigen_document(report, meta)
    if isinstance(report, SingularBoundReport):
        return _sv_document(report, meta)
    if isinstance(report, CertificationReport):
        return _certification_document(report, meta)
    if isinstance(report, FuzzResult):
        return _fuzz_document(report, meta)
    raise TypeError(f"no document schema for {type(report).__name__}")


def _eigen_document(rep: EigenBoundReport, meta: dict) -> dict:
    oracle = rep.true_diff is not None
    rows = []
    for i in range(rep.dim):
        row = {
            "index": i + 1,
            "block_eigenvalue": _num(rep.block_eigenvalues[i]),
            "provenance": rep.provenance[i],
            "gap": _num(rep.gaps[i]),
            "weyl": _num(rep.weyl),
            "quadratic": _num(rep.quadratic_i[i]),
            "main": _num(rep.main_i[i]),
        }
        if oracle:
            row["eigenvalue"] = _num(rep.eigenvalues[i])
            row["true_diff"] = _num(rep.true_diff[i])
        rows.append(row)
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": "eigen_bounds",
        "metadata": meta,
        "summary": {
            "m": rep.m, "n": rep.n, "dim": rep.dim,
            "coupling_norm": _num(rep.coupling_norm),
            "gap": _num(rep.gap),
            "main_global": _num(rep.main_global),
            "oracle": oracle,
        },
        "rows": rows,
    }


def _sv_document(rep: SingularBoundReport, meta: dict) -> dict:
    oracle = rep.sigmas is not None
    rows = []
    for i in range(rep.bounded_count):
        row = {
            "index": i + 1,
            "block_sigma": _num(rep.block_sigmas[i]),
            "provenance": rep.provenance[i],
            "gap": _num(rep.gaps[i]),
            "main": _num(rep.main_i[i]),
        }
        if oracle:
            row["sigma"] = _num(rep.sigmas[i])
            row["true_diff"] = _num(rep.true_diff[i])
        rows.append(row)
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": "singular_value_bounds",
        "metadata": meta,
        "summary": {
            "m": rep.m, "n": rep.n, "k": rep.k, "l": rep.l,
            "coupling_norm": _num(rep.coupling_norm),
            "gap": _num(rep.gap),
            "main_global": _num(rep.main_global),
            "bounded_count": rep.bounded_count,
            "tail_length": int(rep.block_sigmas.size - rep.bounded_count),
            "tail_defect": _num(rep.tail_defect()),
            "oracle": oracle,
        },
        "rows": rows,
    }


def _certification_document(rep: CertificationReport, meta: dict) -> dict:
    oracle = rep.true_errors is not None
    rows = []
    for i in range(rep.m):
        row = {
            "index": i + 1,
            "ritz_value": _num(rep.ritz_values[i]),
            "merged_position": rep.merged_positions[i] + 1,
            "col_residual_norm": _num(rep.col_residual_norms[i]),
            "struck_gap": _num(rep.struck_gaps[i]),
            "per_column_bound": _num(rep.per_column_bounds[i]),
            "gap": _num(rep.merged_gaps[i]),
            "whole_bound": _num(rep.whole_bounds[i]),
        }
        if oracle:
            row["true_error"] = _num(rep.true_errors[i])
        rows.append(row)
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": "certification",
        "metadata": meta,
        "summary": {
            "m": rep.m, "dim": rep.dim,
            "residual_norm": _num(rep.residual_norm),
            "coupling_norm": _num(rep.coupling_norm),
            "oracle": oracle,
        },
        "rows": rows,
    }


def _fuzz_document(res: FuzzResult, meta: dict) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": "fuzz",
        "metadata": meta,
        "summary": {
            "seed": res.seed,
            "eigen_trials": res.eigen_trials,
            "sv_trials": res.sv_trials,
            "degenerate_trials": res.degenerate_trials,
            "zero_gap_trials": res.zero_gap_trials,
            "violation_count": len(res.violations),
            "eigen_worst_slack": _num(res.eigen_worst_slack),
            "sv_worst_slack": _num(res.sv_worst_slack),
            "degenerate_worst_slack": _num(res.degenerate_worst_slack),
            "weyl_margin": _num(res.weyl_margin),
            "quadratic_margin": _num(res.quadratic_margin),
        },
        "rows": [{"message": v} for v in res.violations],
    }


def _encode(obj):
    if isinstance(obj, dict):
        return {k: _encode(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_encode(v) for v in obj]
    if isinstance(obj, float) and math.isinf(obj):
        return "inf" if obj > 0 else "-inf"
    if isinstance(obj, np.generic):  # pragma: no cover - documents are plain
        return obj.item()
    return obj


def _decode(obj):
    if isinstance(obj, dict):
        return {
            k: (float(v) if k in _INF_KEYS and v in ("inf", "-inf")
                else _decode(v))
            for k, v in obj.items()
        }
    if isinstance(obj, list):
        return [_decode(v) for v in obj]
    return obj


def render_json(doc: dict) -> str:
    return json.dumps(_encode(doc), indent=2) + "\n"


def from_json(text: str) -> dict:
    """Parse a rendered document, restoring infinities."""
    return _decode(json.loads(text))


def render_csv(doc: dict) -> str:
    """Rows only, with quoting; metadata and summary are JSON/table
    concerns."""
    rows = doc["rows"]
    buf = io.StringIO()
    if not rows:
        return ""
    writer = csv.DictWriter(buf, fieldnames=list(rows[0].keys()),
                            lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()


def _fmt_cell(v) -> str:
    if isinstance(v, bool):
        return str(v)
    if isinstance(v, float):
        return f"{v:.9g}"
    return str(v)


def render_table(doc: dict) -> str:
    """Aligned human-readable table with metadata and summary header."""
    lines = [f"# {doc['kind']} (schema v{doc['schema_version']})"]
    for k, v in doc["metadata"].items():
        lines.append(f"# {k}: {v}")
    for k, v in doc["summary"].items():
        lines.append(f"{k} = {_fmt_cell(v)}")
    rows = doc["rows"]
    if rows:
        lines.append("")
        headers = list(rows[0].keys())
        table = [[_fmt_cell(r[h]) for h in headers] for r in rows]
        widths = [
            max(len(h), *(len(t[c]) for t in table))
            for c, h in enumerate(headers)
        ]
        lines.append("  ".join(h.ljust(w) for h, w in zip(headers, widths)))
        for t in table:
            lines.append("  ".join(c.ljust(w) for c, w in zip(t, widths)))
    return "\n".join(lines) + "\n"


def render(doc: dict, fmt: str) -> str:
    if fmt == "json":
        return render_json(doc)
    if fmt == "csv":
        return render_csv(doc)
    if fmt == "table":
        return render_table(doc)
    raise ValueError(f"unknown format {fmt!r}")
