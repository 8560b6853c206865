"""Readers and writers for the file formats used by the command line."""

from __future__ import annotations

import csv
import json
from pathlib import Path

import numpy as np

from .mfields import MField2D, MFunction


class DataError(ValueError):
    """Malformed input file; the message names the file and, when known, the line."""

    def __init__(self, path, message: str, line: int | None = None):
        where = f"{path}:{line}" if line is not None else str(path)
        super().__init__(f"{where}: {message}")


def read_collection(path):
    """Load a set, multiset or weighted set from JSON.

    Returns ``(kind, value)`` where value is a ``frozenset`` for sets and a
    ``dict`` for multisets and weighted sets.
    """
    try:
        doc = json.loads(Path(path).read_text())
    except json.JSONDecodeError as e:
        raise DataError(path, e.msg, e.lineno) from None
    kind = doc.get("kind") if isinstance(doc, dict) else None
    try:
        if kind == "set":
            return kind, frozenset(str(e) for e in doc["elements"])
        if kind == "multiset":
            return kind, {str(k): float(v) for k, v in doc["multiplicities"].items()}
        if kind == "weighted":
            return kind, {str(k): float(v) for k, v in doc["weights"].items()}
    except (KeyError, TypeError, ValueError, AttributeError) as e:
        raise DataError(path, f"invalid {kind} document ({e})") from None
    raise DataError(path, f"unknown collection kind {kind!r}")


def write_collection(path, kind: str, value) -> None:
    if kind == "set":
        doc = {"kind": "set", "elements": sorted(value)}
    elif kind == "multiset":
        doc = {"kind": "multiset", "multiplicities": dict(sorted(value.items()))}
    elif kind == "weighted":
        doc = {"kind": "weighted", "weights": dict(sorted(value.items()))}
    else:
        raise ValueError(f"unknown collection kind {kind!r}")
    Path(path).write_text(json.dumps(doc) + "\n")


def read_env(path) -> dict:
    """JSON object mapping set names to element lists."""
    try:
        doc = json.loads(Path(path).read_text())
    except json.JSONDecodeError as e:
        raise DataError(path, e.msg, e.lineno) from None
    if not isinstance(doc, dict):
        raise DataError(path, "expected an object of name -> element list")
    return {name: frozenset(str(e) for e in elems) for name, elems in doc.items()}


def _is_number(text: str) -> bool:
    try:
        float(text)
    except ValueError:
        return False
    return True


def _rows(path, ncols: int, header: bool = False):
    rows = []
    with open(path, newline="") as fh:
        for lineno, row in enumerate(csv.reader(fh), start=1):
            if not row or all(not c.strip() for c in row):
                continue
            if lineno == 1 and header and not _is_number(row[0]):
                continue
            if ncols and len(row) != ncols:
                raise DataError(path, f"expected {ncols} columns, got {len(row)}", lineno)
            try:
                rows.append([float(c) for c in row])
            except ValueError:
                raise DataError(path, f"non-numeric value in {row}", lineno) from None
    return rows


def read_matrix(path) -> np.ndarray:
    rows = _rows(path, 0)
    if not rows or len({len(r) for r in rows}) != 1:
        raise DataError(path, "matrix rows must be non-empty and of equal length")
    return np.array(rows)


def read_function(path) -> MFunction:
    """Load ``x,value`` rows with uniform spacing (checked to 1e-9 relative)."""
    rows = _rows(path, 2, header=True)
    if len(rows) < 2:
        raise DataError(path, "need at least two samples")
    xs = np.array([r[0] for r in rows])
    steps = np.diff(xs)
    dx = (xs[-1] - xs[0]) / (len(xs) - 1)
    if not dx > 0:
        raise DataError(path, "x must be increasing")
    bad = np.flatnonzero(np.abs(steps - dx) > 1e-9 * max(abs(dx), 1.0) + 1e-9 * np.abs(xs[1:]))
    if bad.size:
        raise DataError(path, "x is not uniformly spaced", int(bad[0]) + 3)
    return MFunction(np.array([r[1] for r in rows]), float(dx), float(xs[0]))


def write_function(path, f: MFunction, header: str = "x,value") -> None:
    with open(path, "w", newline="") as fh:
        fh.write(header + "\n")
        for x, v in zip(f.x, f.samples):
            fh.write(f"{float(x)!r},{float(v)!r}\n")


def read_points(path) -> np.ndarray:
    rows = _rows(path, 2, header=True)
    if not rows:
        raise DataError(path, "no points")
    return np.array(rows)


def read_pairs(path) -> tuple[np.ndarray, np.ndarray]:
    rows = np.array(_rows(path, 2, header=True))
    if len(rows) < 2:
        raise DataError(path, "need at least two paired observations")
    return rows[:, 0], rows[:, 1]


def write_rows(path, header: str, rows) -> None:
    with open(path, "w", newline="") as fh:
        fh.write(header + "\n")
        for row in rows:
            fh.write(",".join(v if isinstance(v, str) else repr(float(v)) for v in row) + "\n")


# -- plain PGM ---------------------------------------------------------------

def _pgm_tokens(text: str):
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0]
        for tok in line.split():
            yield tok, lineno


def read_pgm(path) -> MField2D:
    """Read a plain (P2) PGM, scaling gray levels to [0, 1] by the max value."""
    text = Path(path).read_text()
    toks = _pgm_tokens(text)
    try:
        magic, _ = next(toks)
    except StopIteration:
        raise DataError(path, "empty file") from None
    if magic != "P2":
        raise DataError(path, f"expected plain PGM magic 'P2', got {magic!r}", 1)
    header = []
    data = []
    lineno = 1
    for tok, lineno in toks:
        try:
            val = int(tok)
        except ValueError:
            raise DataError(path, f"bad token {tok!r}", lineno) from None
        if len(header) < 3:
            header.append(val)
        else:
            data.append(val)
    if len(header) < 3:
        raise DataError(path, "truncated header", lineno)
    width, height, maxval = header
    if width <= 0 or height <= 0 or not 0 < maxval < 65536:
        raise DataError(path, f"invalid header {header}")
    if len(data) != width * height:
        raise DataError(path, f"expected {width * height} pixels, got {len(data)}", lineno)
    pix = np.array(data, dtype=float).reshape(height, width)
    if (pix < 0).any() or (pix > maxval).any():
        raise DataError(path, "pixel value out of range")
    return MField2D(pix / maxval)


def write_pgm(path, img: MField2D | np.ndarray, maxval: int = 255) -> None:
    """Write a plain PGM; values are clipped to [0, 1] and quantized to ``maxval``."""
    arr = img.samples if isinstance(img, MField2D) else np.asarray(img, dtype=float)
    q = np.rint(np.clip(arr, 0.0, 1.0) * maxval).astype(int)
    height, width = q.shape
    lines = ["P2", f"{width} {height}", str(maxval)]
    lines += [" ".join(map(str, row)) for row in q]
    Path(path).write_text("\n".join(lines) + "\n")
