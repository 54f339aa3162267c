"""Append-only JSON Lines result store and CSV export."""

from __future__ import annotations

import csv
import json
from pathlib import Path
from typing import Iterable

from .theorems import VerificationReport

SCHEMA_VERSION = 1

RECORD_KEYS = (
    "schema_version",
    "identity",
    "q",
    "p",
    "deg",
    "modulus",
    "status",
    "reason",
    "lhs",
    "rhs",
    "witness",
    "divergence_notes",
    "seed",
    "elapsed_ms",
)

CSV_HEADER = ("identity", "q", "p", "deg", "status", "lhs", "rhs", "witness", "elapsed_ms")


class StoreError(ValueError):
    pass


def report_to_record(rep: VerificationReport, timing: bool = True) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "identity": rep.identity,
        "q": rep.q,
        "p": rep.p,
        "deg": rep.n,
        "modulus": list(rep.modulus),
        "status": rep.status,
        "reason": rep.reason,
        "lhs": rep.lhs,
        "rhs": rep.rhs,
        "witness": rep.witness,
        "divergence_notes": list(rep.notes),
        "seed": rep.seed,
        "elapsed_ms": rep.elapsed_ms if timing else 0,
    }


def canonical(record: dict) -> dict:
    missing = [k for k in RECORD_KEYS if k not in record]
    if missing:
        raise StoreError(f"record is missing keys {missing}")
    return {k: record[k] for k in RECORD_KEYS}


def dumps_record(record: dict) -> str:
    return json.dumps(canonical(record), separators=(",", ":"), ensure_ascii=False)


def load_store(path: str | Path) -> list[dict]:
    path = Path(path)
    if not path.exists():
        return []
    records = []
    with path.open(encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            if not line.strip():
                continue
            try:
                rec = json.loads(line)
            except json.JSONDecodeError as exc:
                raise StoreError(f"{path}:{lineno}: corrupt line ({exc.msg})") from None
            if not isinstance(rec, dict):
                raise StoreError(f"{path}:{lineno}: expected a JSON object")
            try:
                records.append(canonical(rec))
            except StoreError as exc:
                raise StoreError(f"{path}:{lineno}: {exc}") from None
    return records


def completed_keys(records: Iterable[dict]) -> set[tuple[str, int]]:
    return {(r["identity"], r["q"]) for r in records}


class StoreWriter:
    """Single sink; every record is flushed as soon as it is written."""

    def __init__(self, path: str | Path):
        self.path = Path(path)
        self._fh = self.path.open("a", encoding="utf-8")

    def write(self, record: dict) -> None:
        self._fh.write(dumps_record(record) + "\n")
        self._fh.flush()

    def close(self) -> None:
        self._fh.close()

    def __enter__(self) -> StoreWriter:
        return self

    def __exit__(self, *exc) -> None:
        self.close()


def _csv_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, list):
        return ";".join(_csv_cell(v) for v in value)
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def export_csv(store: str | Path, out: str | Path) -> int:
    records = load_store(store)
    with Path(out).open("w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh)
        w.writerow(CSV_HEADER)
        for r in records:
            w.writerow([_csv_cell(r[k]) for k in CSV_HEADER])
    return len(records)
