"""File formats: point-set CSV, binary PGM, triple catalogs."""

from __future__ import annotations

import csv
from pathlib import Path

import numpy as np

from .attractor import EscapeGrid, PointSet, grid_to_gray

# 17 significant digits make float round trips exact
_CSV_DIGITS = 17


def fmt(x: float, digits: int = 12) -> str:
    return f"{x:.{digits}g}"


def write_points_csv(ps: PointSet, path) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["re", "im", "mult"])
        for z, m in zip(ps.points.tolist(), ps.mult.tolist()):
            w.writerow([fmt(z.real, _CSV_DIGITS), fmt(z.imag, _CSV_DIGITS), m])


def read_points_csv(path) -> PointSet:
    with open(path, newline="") as fh:
        rows = list(csv.reader(fh))
    if not rows or [h.strip() for h in rows[0]] != ["re", "im", "mult"]:
        raise ValueError(f"{path}: expected header re,im,mult")
    body = [r for r in rows[1:] if r]
    if not body:
        raise ValueError(f"{path}: no points")
    try:
        re_ = np.array([float(r[0]) for r in body])
        im_ = np.array([float(r[1]) for r in body])
        mult = np.array([int(r[2]) for r in body], dtype=np.int64)
    except (ValueError, IndexError) as exc:
        raise ValueError(f"{path}: malformed row ({exc})") from None
    return PointSet(re_ + 1j * im_, mult, meta={"source": str(path)})


def write_pgm(grid: EscapeGrid, path) -> None:
    gray = grid_to_gray(grid)
    h, w = gray.shape
    with open(path, "wb") as fh:
        fh.write(f"P5\n{w} {h}\n255\n".encode("ascii"))
        fh.write(gray.tobytes())


def read_pgm(path) -> np.ndarray:
    data = Path(path).read_bytes()
    fields, pos = [], 0
    while len(fields) < 4:
        while data[pos:pos + 1].isspace():
            pos += 1
        end = pos
        while end < len(data) and not data[end:end + 1].isspace():
            end += 1
        fields.append(data[pos:end])
        pos = end
    if fields[0] != b"P5":
        raise ValueError(f"{path}: not a binary PGM")
    w, h, maxval = (int(f) for f in fields[1:])
    if maxval != 255:
        raise ValueError(f"{path}: only 8-bit PGM is supported")
    # exactly one whitespace byte separates the header from the pixels
    pixels = np.frombuffer(data, dtype=np.uint8, count=w * h, offset=pos + 1)
    return pixels.reshape(h, w)


def write_catalog_csv(rows, path) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["n", "a2", "a3", "labeled_count"])
        w.writerows(rows)
