"""
Experiment report files.

emit_report writes one JSON object per ResultRecord (keys as in
ResultRecord.to_dict) to `path`, plus a companion CSV with the columns
k, mean_rel_error, sd_rel_error, mean_time. Aborted trials and records
without a reference are left out of the error columns. A second CSV,
keyed by (input, n, k), sets the mean trial time against the time of the
full-matrix reference computation.
"""

import csv
import json
import logging
import os
from typing import Dict, Iterable, List

import numpy as np

from models.records import ResultRecord
from utils.errors import ParseError, ReportWriteError

logger = logging.getLogger(__name__)

CSV_COLUMNS = ('k', 'mean_rel_error', 'sd_rel_error', 'mean_time')
RUNTIME_COLUMNS = ('input', 'n', 'k', 'mean_time', 'reference_time')


def _report_root(path) -> str:
    root, ext = os.path.splitext(str(path))
    return root if ext in ('.jsonl', '.json') else str(path)


def companion_csv_path(path) -> str:
    return _report_root(path) + '.csv'


def runtime_csv_path(path) -> str:
    return _report_root(path) + '.runtime.csv'


def summarize(records: Iterable[ResultRecord]) -> List[Dict]:
    """Per-k mean/sd relative error and mean trial time"""
    by_k: Dict[int, List[ResultRecord]] = {}
    for record in records:
        by_k.setdefault(record.k, []).append(record)

    rows = []
    for k in sorted(by_k):
        group = by_k[k]
        completed = [r for r in group if not r.aborted]
        errors = np.array([r.rel_error for r in completed if r.rel_error is not None], dtype=float)
        times = np.array([r.wall_time_seconds for r in completed], dtype=float)
        rows.append({
            'k': k,
            'mean_rel_error': float(errors.mean()) if errors.size else float('nan'),
            'sd_rel_error': float(errors.std(ddof=1)) if errors.size > 1 else 0.0,
            'mean_time': float(times.mean()) if times.size else float('nan'),
            'trials': len(group),
            'aborted': len(group) - len(completed),
        })
    return rows


def runtime_table(records: Iterable[ResultRecord]) -> List[Dict]:
    """Mean trial time next to the full reference time, per (input, n, k)"""
    groups: Dict[tuple, List[ResultRecord]] = {}
    for record in records:
        if not record.aborted:
            groups.setdefault((record.input_descriptor, record.n, record.k), []).append(record)

    rows = []
    for (descriptor, n, k) in sorted(groups):
        group = groups[(descriptor, n, k)]
        # multi-t commands repeat a trial's time once per t
        trial_times = {r.seed: r.wall_time_seconds for r in group}
        reference = [r.reference_time_seconds for r in group if r.reference_time_seconds is not None]
        rows.append({
            'input': descriptor,
            'n': n,
            'k': k,
            'mean_time': float(np.mean(list(trial_times.values()))),
            'reference_time': reference[0] if reference else float('nan'),
        })
    return rows


def emit_report(records: List[ResultRecord], path):
    csv_path = companion_csv_path(path)
    runtime_path = runtime_csv_path(path)
    try:
        directory = os.path.dirname(os.path.abspath(str(path)))
        os.makedirs(directory, exist_ok=True)
        with open(path, 'w', encoding='utf-8') as f:
            for record in records:
                f.write(json.dumps(record.to_dict(), sort_keys=True))
                f.write('\n')
        with open(csv_path, 'w', encoding='utf-8', newline='') as f:
            writer = csv.writer(f)
            writer.writerow(CSV_COLUMNS)
            for row in summarize(records):
                writer.writerow([row[column] for column in CSV_COLUMNS])
        with open(runtime_path, 'w', encoding='utf-8', newline='') as f:
            writer = csv.writer(f)
            writer.writerow(RUNTIME_COLUMNS)
            for row in runtime_table(records):
                writer.writerow([row[column] for column in RUNTIME_COLUMNS])
    except OSError as e:
        raise ReportWriteError(f"cannot write report {path}: {e}") from e
    logger.info("wrote %d records to %s and %s", len(records), path, csv_path)


def read_report(path) -> List[ResultRecord]:
    records = []
    try:
        with open(path, 'r', encoding='utf-8') as f:
            for line_number, line in enumerate(f, start=1):
                if not line.strip():
                    continue
                try:
                    records.append(ResultRecord.from_dict(json.loads(line)))
                except (ValueError, TypeError) as e:
                    raise ParseError(f"bad report record: {e}", path, line_number) from e
    except OSError as e:
        raise ParseError(f"cannot read report: {e}", path) from e
    return records
