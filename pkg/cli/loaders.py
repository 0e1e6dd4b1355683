"""
Matrix, point-set and problem file loaders.

Formats:
  csv     comma-separated decimals, one matrix row per line, no header
  bin     b"SQMX", version byte 1, rows and cols as little-endian uint64,
          then rows*cols little-endian float64 values in row-major order
  points  csv whose rows are data points
"""

import csv
import logging
import math
import os
import struct
from typing import List, Optional, Tuple

import numpy as np

from models.matrix import DenseMatrix
from models.problem import QuadraticProblem
from utils.errors import ConfigError, DimensionMismatch, NonFiniteEntry, ParseError, RaggedRows

logger = logging.getLogger(__name__)

BINARY_MAGIC = b"SQMX"
BINARY_VERSION = 1
_HEADER = struct.Struct('<4sBQQ')


def _read_rows(path) -> List[Tuple[int, List[float]]]:
    rows = []
    try:
        with open(path, 'r', encoding='utf-8', newline='') as f:
            for line_number, cells in enumerate(csv.reader(f), start=1):
                if not cells or all(not cell.strip() for cell in cells):
                    continue
                row = []
                for column, cell in enumerate(cells, start=1):
                    try:
                        value = float(cell.strip())
                    except ValueError:
                        raise ParseError(f"cannot parse {cell!r} as a number", path, line_number, column) from None
                    if not math.isfinite(value):
                        raise NonFiniteEntry(f"{path}: non-finite entry {cell.strip()!r} at line {line_number}, "
                                             f"column {column}")
                    row.append(value)
                rows.append((line_number, row))
    except OSError as e:
        raise ParseError(f"cannot read file: {e}", path) from e
    except UnicodeDecodeError as e:
        raise ParseError(f"not a text file: {e}", path) from e
    if not rows:
        raise ParseError("file contains no rows", path)
    return rows


def _read_binary(path) -> DenseMatrix:
    try:
        with open(path, 'rb') as f:
            payload = f.read()
    except OSError as e:
        raise ParseError(f"cannot read file: {e}", path) from e
    if len(payload) < _HEADER.size:
        raise ParseError(f"truncated header ({len(payload)} bytes)", path)
    magic, version, rows, cols = _HEADER.unpack_from(payload)
    if magic != BINARY_MAGIC:
        raise ParseError(f"bad magic {magic!r}", path)
    if version != BINARY_VERSION:
        raise ParseError(f"unsupported version {version}", path)
    expected = rows * cols * 8
    body = payload[_HEADER.size:]
    if len(body) != expected:
        raise ParseError(f"expected {expected} data bytes for {rows}x{cols}, found {len(body)}", path)
    data = np.frombuffer(body, dtype='<f8').astype(np.float64).reshape(rows, cols)
    return DenseMatrix(data, copy=False)


def _sniff_binary(path) -> bool:
    try:
        with open(path, 'rb') as f:
            return f.read(len(BINARY_MAGIC)) == BINARY_MAGIC
    except OSError as e:
        raise ParseError(f"cannot read file: {e}", path) from e


def load_matrix(path, fmt: Optional[str] = None) -> DenseMatrix:
    """Load a matrix from csv or bin; the format is sniffed when fmt is None"""
    if fmt is None:
        fmt = 'bin' if _sniff_binary(path) else 'csv'
    if fmt == 'bin':
        matrix = _read_binary(path)
    elif fmt in ('csv', 'points'):
        rows = _read_rows(path)
        width = len(rows[0][1])
        for line_number, row in rows:
            if len(row) != width:
                raise ParseError(f"expected {width} columns, found {len(row)}", path, line_number)
        matrix = DenseMatrix([row for _, row in rows], copy=False)
    else:
        raise ParseError(f"unknown matrix format {fmt!r}", path)
    logger.info("loaded %dx%d matrix from %s", matrix.rows, matrix.cols, os.path.basename(str(path)))
    return matrix


def load_points(path) -> np.ndarray:
    """n points of dimension d, one per csv row"""
    rows = _read_rows(path)
    width = len(rows[0][1])
    for line_number, row in rows:
        if len(row) != width:
            raise RaggedRows(f"{path}: line {line_number} has {len(row)} values, expected {width}")
    points = np.array([row for _, row in rows], dtype=np.float64)
    logger.info("loaded %d points in R^%d from %s", points.shape[0], width, os.path.basename(str(path)))
    return points


def load_problem(path, fmt: Optional[str] = None) -> QuadraticProblem:
    """Quadratic problem stored as an n x (n+2) matrix: [A | d | b]"""
    matrix = load_matrix(path, fmt)
    n = matrix.rows
    if matrix.cols != n + 2:
        raise DimensionMismatch(f"{path}: a problem file needs n x (n+2) entries [A | d | b], "
                                f"got {matrix.rows}x{matrix.cols}")
    data = matrix.data
    return QuadraticProblem(DenseMatrix(data[:, :n]), data[:, n], data[:, n + 1])


def save_matrix(A: DenseMatrix, path, fmt: str = 'csv'):
    """Write A in csv or bin format"""
    if fmt == 'bin':
        with open(path, 'wb') as f:
            f.write(_HEADER.pack(BINARY_MAGIC, BINARY_VERSION, A.rows, A.cols))
            f.write(A.data.astype('<f8').tobytes(order='C'))
    elif fmt == 'csv':
        with open(path, 'w', encoding='utf-8', newline='') as f:
            writer = csv.writer(f)
            for row in A.data:
                writer.writerow([repr(float(x)) for x in row])
    else:
        raise ConfigError(f"unknown matrix format {fmt!r}")
