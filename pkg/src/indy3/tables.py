"""Reference critical-orbit tables and their recomputation.

Two kinds of reference cell are stored: closed forms (checked to 1e-12) and
decimals rounded to 2 or 3 places (checked to a little over half a unit in
the last place).  ``verify_table`` recomputes every cell from the cubic.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import sqrt

from .cubic import Cubic, evaluate, structure_report

EXACT_TOL = 1e-12
ROUNDED_TOL = {2: 0.006, 3: 6e-4}


@dataclass(frozen=True)
class Cell:
    name: str
    value: complex
    tol: float
    label: str  # as printed in the source table


def exact(name: str, value: complex, label: str) -> Cell:
    return Cell(name, complex(value), EXACT_TOL, label)


def rounded(name: str, value: complex, decimals: int) -> Cell:
    return Cell(name, complex(value), ROUNDED_TOL[decimals], f"{value}")


@dataclass(frozen=True)
class Row:
    cubic: Cubic
    cells: tuple[Cell, ...]


def _critical_rows(a1: int, data) -> tuple[Row, ...]:
    rows = []
    for a2, a3, c, c_label, pc, pc_label, p2c, disk_c, disk_r in data:
        rows.append(Row(Cubic(a1, a2, a3), (
            exact("c", c, c_label),
            exact("P(c)", pc, pc_label),
            rounded("P^2(c)", p2c, 2),
            exact("disk center", disk_c, f"{disk_c:.6g}"),
            exact("disk radius", disk_r, f"{disk_r:.6g}"),
        )))
    return tuple(rows)


def _fixed_rows(data) -> tuple[Row, ...]:
    rows = []
    for (a1, a2, a3), d1, c2, c2_label, pc2 in data:
        if isinstance(pc2, tuple):
            pc2_cell = exact("P(c2)", pc2[0], pc2[1])
        else:
            pc2_cell = rounded("P(c2)", pc2, 3)
        rows.append(Row(Cubic(a1, a2, a3), (
            exact("delta1", d1, str(d1)),
            exact("c2", c2, c2_label),
            pc2_cell,
        )))
    return tuple(rows)


s2, s3, s5, s11 = sqrt(2), sqrt(3), sqrt(5), sqrt(11)

TABLES: dict[int, tuple[Row, ...]] = {
    1: _critical_rows(5, [
        (5, 2, complex(-5 / 6, s5 / 6), "-5/6 + (sqrt5/6)i",
         complex(-50 / 27, 5 * s5 / 54), "-50/27 + (5sqrt5/54)i", -4.55 + 1.44j, -5 / 6, s2),
        (6, 3, complex(-2 / 3, 1 / 3), "-2/3 + (1/3)i",
         complex(-14 / 9, 2 / 9), "-14/9 + (2/9)i", -4.16 + 1.77j, -2 / 3, 2 / s3),
        (7, 4, complex(-7 / 12, s11 / 12), "-7/12 + (sqrt11/12)i",
         complex(-287 / 216, 11 * s11 / 216), "-287/216 + (11sqrt11/216)i", -3.41 + 1.26j, -7 / 12, 1.0),
    ]),
    2: _critical_rows(6, [
        (4, 1, complex(-4 / 3, s2 / 3), "-4/3 + (sqrt2/3)i",
         complex(-88 / 27, 4 * s2 / 27), "-88/27 + (4sqrt2/27)i", -11.43 + 2.46j, -4 / 3, 2.0),
        (7, 3, complex(-7 / 9, s5 / 9), "-7/9 + (sqrt5/9)i",
         complex(-448 / 243, 10 * s5 / 243), "-448/243 + (10sqrt5/243)i", -5.99 + 0.99j, -7 / 9, 2 / s3),
        (8, 4, complex(-2 / 3, s2 / 6), "-2/3 + (sqrt2/6)i",
         complex(-44 / 27, 2 * s2 / 27), "-44/27 + (2sqrt2/27)i", -5.72 + 1.23j, -2 / 3, 1.0),
        (9, 5, complex(-3 / 5, 1 / 5), "-3/5 + (1/5)i",
         complex(-972 / 675, 2 / 25), "-972/675 + (2/25)i", -4.83 + 0.89j, -3 / 5, 2 / sqrt(5)),
        (10, 6, complex(-5 / 9, s2 / 9), "-5/9 + (sqrt2/9)i",
         complex(-310 / 243, 8 * s2 / 243), "-310/243 + (8sqrt2/243)i", -3.81 + 0.45j, -5 / 9, 2 / sqrt(6)),
        (11, 7, complex(-11 / 21, s5 / 21), "-11/21 + (sqrt5/21)i",
         complex(-1496 / 1323, 10 * s5 / 1323), "-1496/1323 + (10sqrt5/1323)i", -2.84 + 0.13j,
         -11 / 21, 2 / sqrt(7)),
    ]),
    3: _fixed_rows([
        ((6, 11, 6), -1, (-11 + sqrt(13)) / 18, "(-11+sqrt13)/18", -1.024),
        ((7, 13, 7), -1, (-13 + sqrt(22)) / 21, "(-13+sqrt22)/21", -1.168),
        ((8, 15, 8), -1, (-15 + sqrt(33)) / 24, "(-15+sqrt33)/24", -1.313),
    ]),
    4: _fixed_rows([
        ((7, 7, 2), -2, (-7 + sqrt(7)) / 6, "(-7+sqrt7)/6", -2.158),
        ((7, 14, 8), -1, (-7 + sqrt(7)) / 12, "(-7+sqrt7)/12", -1.079),
        ((8, 16, 9), -1, (-16 + sqrt(40)) / 27, "(-16+sqrt40)/27", -1.226),
    ]),
    5: _fixed_rows([
        ((7, 9, 3), -2, (-3 + s2) / 3, "(-3+sqrt2)/3", -1.629),
        ((8, 11, 4), -7 / 4, -1 / 2, "-1/2", (-1.75, "-7/4")),
        ((8, 17, 10), -1, -1 / 3, "-1/3", -1.148),
        ((8, 18, 11), -1, (-18 + sqrt(60)) / 33, "(-18+sqrt60)/33", -1.078),
        ((8, 19, 12), -1, (-19 + sqrt(73)) / 36, "(-19+sqrt73)/36", -1.015),
    ]),
}


def recompute(row: Row) -> dict[str, complex]:
    P = row.cubic
    s = structure_report(P)
    if row.cells[0].name == "c":
        c = s.c2  # the critical point in the upper half-plane
        pc = complex(evaluate(P, c))
        return {
            "c": c,
            "P(c)": pc,
            "P^2(c)": complex(evaluate(P, pc)),
            "disk center": s.critical_disk.center,
            "disk radius": complex(s.critical_disk.radius),
        }
    return {"delta1": s.delta1, "c2": s.c2, "P(c2)": s.critical_values[1]}


@dataclass(frozen=True)
class CellCheck:
    table: int
    cubic: Cubic
    name: str
    expected: complex
    computed: complex
    tol: float

    @property
    def error(self) -> float:
        return abs(self.computed - self.expected)

    @property
    def ok(self) -> bool:
        return self.error <= self.tol


def verify_table(k: int) -> list[list[CellCheck]]:
    """One list of cell checks per row of table ``k``."""
    if k not in TABLES:
        raise ValueError(f"no table {k}; choose from {sorted(TABLES)}")
    out = []
    for row in TABLES[k]:
        got = recompute(row)
        out.append([CellCheck(k, row.cubic, c.name, c.value, got[c.name], c.tol) for c in row.cells])
    return out
