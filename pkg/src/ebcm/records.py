"""CSV persistence: detection-event records, sweep curves, run manifests.

All files are plain CSV with a header row, LF line endings, and decimal
notation with 12 significant digits.
"""
from __future__ import annotations

import csv
import json
from pathlib import Path

import numpy as np

from .analysis import RECORD_DTYPE


def _fmt(v) -> str:
    if isinstance(v, str):
        return v
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    return format(float(v), ".12g")


def write_curve_csv(path, header: list[str], columns: list[np.ndarray]) -> None:
    path = Path(path)
    with path.open("w", newline="\n") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        for row in zip(*columns):
            w.writerow([_fmt(v) for v in row])


def write_event_records(path, records: np.ndarray) -> None:
    write_curve_csv(
        path,
        ["event_index", "outcome", "time_tag", "setting", "sweep_value"],
        [records[name] for name in records.dtype.names],
    )


def read_event_records(path) -> np.ndarray:
    data = np.genfromtxt(path, delimiter=",", names=True)
    out = np.empty(data.shape[0] if data.shape else 1, dtype=RECORD_DTYPE)
    data = np.atleast_1d(data)
    for name in RECORD_DTYPE.names:
        out[name] = data[name]
    return out


def write_manifest(path, manifest: dict) -> None:
    Path(path).write_text(json.dumps(manifest, indent=2, sort_keys=True) + "\n")
