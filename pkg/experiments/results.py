"""CSV output for sweep results: one data file plus a sibling ``*_agg.csv``."""

from __future__ import annotations

import csv
import logging
from dataclasses import asdict
from pathlib import Path

from experiments.base import AggregateRow, SweepResult, SweepRow

logger = logging.getLogger(__name__)

ROW_FIELDS = ["sigma", "alpha", "trial", "modularity", "precision", "iterations", "labels_per_class"]
AGG_FIELDS = [
    "sigma", "alpha", "labels_per_class", "trials",
    "modularity_mean", "modularity_std", "precision_mean", "precision_std",
]


def aggregate_path(path: str | Path) -> Path:
    path = Path(path)
    return path.with_name(f"{path.stem}_agg{path.suffix or '.csv'}")


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _write(path: Path, fields: list[str], records: list[dict]) -> None:
    try:
        with path.open("w", newline="", encoding="utf-8") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(fields)
            for record in records:
                writer.writerow([_cell(record[name]) for name in fields])
    except OSError as e:
        raise OSError(f"Failed to write sweep results to {path}: {e}") from e


def write_csv(result: SweepResult, path: str | Path) -> Path:
    """Write rows to ``path`` and per-cell aggregates next to it.

    Returns the aggregate file's path.
    """
    path = Path(path)
    agg = aggregate_path(path)
    _write(path, ROW_FIELDS, [asdict(row) for row in result.rows])
    _write(agg, AGG_FIELDS, [asdict(row) for row in result.aggregates()])
    logger.info("Wrote %d sweep rows to %s (aggregates in %s)", len(result.rows), path, agg)
    return agg


def read_csv(path: str | Path) -> SweepResult:
    """Parse a data file written by write_csv."""
    path = Path(path)
    rows = []
    with path.open(newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames != ROW_FIELDS:
            raise ValueError(f"{path}: unexpected header {reader.fieldnames}")
        for lineno, record in enumerate(reader, start=2):
            try:
                rows.append(SweepRow(
                    sigma=float(record["sigma"]),
                    alpha=float(record["alpha"]),
                    trial=int(record["trial"]),
                    modularity=float(record["modularity"]),
                    precision=float(record["precision"]) if record["precision"] else None,
                    iterations=int(record["iterations"]),
                    labels_per_class=int(record["labels_per_class"]),
                ))
            except (TypeError, ValueError) as e:
                raise ValueError(f"{path}:{lineno}: malformed sweep row ({e})") from None
    return SweepResult(rows=rows)


def read_aggregates(path: str | Path) -> list[AggregateRow]:
    path = Path(path)
    out = []
    with path.open(newline="", encoding="utf-8") as fh:
        for record in csv.DictReader(fh):
            out.append(AggregateRow(
                sigma=float(record["sigma"]),
                alpha=float(record["alpha"]),
                labels_per_class=int(record["labels_per_class"]),
                trials=int(record["trials"]),
                modularity_mean=float(record["modularity_mean"]),
                modularity_std=float(record["modularity_std"]),
                precision_mean=float(record["precision_mean"]) if record["precision_mean"] else None,
                precision_std=float(record["precision_std"]) if record["precision_std"] else None,
            ))
    return out
