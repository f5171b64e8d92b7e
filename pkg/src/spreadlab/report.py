"""Run reports.

Every CLI command produces one RunReport rendered as a single JSON
document with fixed field order, so golden tests can diff the bytes.
Wall-clock timing is kept on the in-memory report and printed to stderr,
never serialized: reports must be byte-identical across reruns and
thread counts.
"""

import json
import math
from dataclasses import dataclass

import numpy as np

from .certificates import BoundCertificate
from .extremal import SearchReport
from .scanlab import IntervalSet, ScanTable
from .spread import SpreadResult

SCHEMA_VERSION = "1"


@dataclass(frozen=True)
class RunReport:
    schema_version: str
    command: str
    inputs: dict
    results: dict
    timing_ms: float


def _clean(value):
    """Make a value JSON-safe and deterministic."""
    if isinstance(value, dict):
        return {k: _clean(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_clean(v) for v in value]
    if isinstance(value, np.ndarray):
        return [_clean(v) for v in value.tolist()]
    if isinstance(value, (np.floating, float)):
        v = float(value)
        return v if math.isfinite(v) else None
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.bool_):
        return bool(value)
    if isinstance(value, complex):
        return [_clean(value.real), _clean(value.imag)]
    return value


def make_report(command: str, inputs: dict, results: dict,
                timing_ms: float) -> RunReport:
    return RunReport(
        schema_version=SCHEMA_VERSION,
        command=command,
        inputs=_clean(inputs),
        results=_clean(results),
        timing_ms=float(timing_ms),
    )


def render_report(report: RunReport) -> str:
    doc = {
        "schema_version": report.schema_version,
        "command": report.command,
        "inputs": report.inputs,
        "results": report.results,
    }
    return json.dumps(doc, indent=2, allow_nan=False) + "\n"


def spread_result_dict(r: SpreadResult) -> dict:
    return {
        "value": r.value,
        "pair": [[r.pair[0].real, r.pair[0].imag],
                 [r.pair[1].real, r.pair[1].imag]],
        "pair_kind": r.pair_kind,
        "perron": r.perron,
    }


def certificate_dict(c: BoundCertificate) -> dict:
    return {
        "name": c.name,
        "bound": c.bound,
        "attained": c.attained,
        "slack": c.slack,
        "passed": c.passed,
        "context": dict(c.context),
    }


def search_report_dict(r: SearchReport) -> dict:
    return {
        "n": r.n,
        "search_space": r.search_space,
        "best_spread": r.best_spread,
        "best_matrix": r.best_matrix,
        "is_symmetric": r.is_symmetric,
        "is_01": r.is_01,
        "matrices_examined": r.matrices_examined,
        "ties": r.ties,
        "seed": r.seed,
    }


def scan_summary_dict(t: ScanTable) -> dict:
    return {
        "eta": t.eta,
        "resolution": t.resolution,
        "max_x": t.max_x,
        "max_value": t.max_value,
        "degenerate": t.degenerate,
    }


def interval_list(s: IntervalSet) -> list:
    return [[lo, hi] for lo, hi in s]
