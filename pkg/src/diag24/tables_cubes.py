"""Multiplication tables and cubes of Z_n, and brute-force scans of them.

A modulus has the *diagonal property* when every 1 in its multiplication
table sits at a position ``(a, a)``.  The scans here look for an
off-diagonal 1 directly (``check_diagonal_table``) or through the units
(``check_diagonal_units``); the structural route lives in ``unit_group``.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass

import numpy as np

from .errors import SizeError
from .modring import ResidueRing, make_ring

RENDER_CAP = 4096
TABLE_SCAN_CAP = 5000
CUBE_CAP = 1000

METHODS = ("table", "units", "structural")


@dataclass(frozen=True)
class DiagonalReport:
    n: int
    holds: bool
    witness: tuple[int, int] | None
    method: str

    def __post_init__(self):
        if self.method not in METHODS:
            raise ValueError(f"unknown method {self.method!r}")
        if self.holds and self.witness is not None:
            raise ValueError("a holding report carries no witness")
        if not self.holds:
            if self.witness is None:
                raise ValueError("a failing report needs a witness")
            a, b = self.witness
            if a == b or (a * b) % self.n != 1 % self.n:
                raise ValueError(f"bad witness {self.witness} for n={self.n}")

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "holds": self.holds,
            "witness": list(self.witness) if self.witness else None,
            "method": self.method,
        }


@dataclass(frozen=True)
class CubeReport:
    n: int
    holds: bool
    witness: tuple[int, int, int] | None

    def __post_init__(self):
        if not self.holds:
            if self.witness is None:
                raise ValueError("a failing report needs a witness")
            i, j, k = self.witness
            if (i * j * k) % self.n != 1 % self.n or i == j == k:
                raise ValueError(f"bad witness {self.witness} for n={self.n}")

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "holds": self.holds,
            "witness": list(self.witness) if self.witness else None,
        }


def render_table(ring: ResidueRing, cap: int = RENDER_CAP) -> np.ndarray:
    n = ring.n
    if n > cap:
        raise SizeError(f"refusing to render a {n}x{n} table (cap {cap})")
    r = np.arange(n, dtype=np.int64)
    return np.outer(r, r) % n


def format_table_text(table) -> str:
    """Render as ``*|0 1 ...``, a ``-+---`` rule, then ``a|row`` lines."""
    n = len(table)
    header = "*|" + " ".join(str(b) for b in range(n))
    lines = [header, "-+" + "-" * (len(header) - 2)]
    for a, row in enumerate(table):
        lines.append(f"{a}|" + " ".join(str(int(v)) for v in row))
    return "\n".join(lines) + "\n"


def format_table_csv(table) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    for row in table:
        writer.writerow(int(v) for v in row)
    return buf.getvalue()


def format_table_json(table) -> str:
    return json.dumps({"n": len(table), "table": [[int(v) for v in row] for row in table]})


def check_diagonal_table(n: int, cap: int = TABLE_SCAN_CAP) -> DiagonalReport:
    """Scan the upper triangle ``a < b`` row by row for ``a*b == 1``.

    Rows are generated one at a time so the table is never held in memory.
    """
    make_ring(n)
    if n > cap:
        raise SizeError(
            f"table scan of n={n} exceeds cap {cap}; use the units or structural method"
        )
    for a in range(1, n - 1):
        b = np.arange(a + 1, n, dtype=np.int64)
        hits = np.flatnonzero((a * b) % n == 1)
        if hits.size:
            return DiagonalReport(n, False, (a, int(b[hits[0]])), "table")
    return DiagonalReport(n, True, None, "table")


def check_diagonal_units(n: int) -> DiagonalReport:
    ring = make_ring(n)
    one = ring.one
    for a in ring.iter_units():
        if (a * a) % n != one:
            return DiagonalReport(n, False, (a, ring.inverse(a)), "units")
    return DiagonalReport(n, True, None, "units")


def cube_check(n: int, cap: int = CUBE_CAP) -> CubeReport:
    """Scan triples ``i <= j <= k`` for an off-diagonal ``i*j*k == 1``.

    Any permutation of a witness is also a witness, so the ordered scan
    loses nothing; the first hit in lexicographic order is returned.
    """
    make_ring(n)
    if n > cap:
        raise SizeError(f"cube scan of n={n} exceeds cap {cap}")
    if n == 1:
        return CubeReport(1, True, None)
    for i in range(n):
        for j in range(i, n):
            ij = (i * j) % n
            if ij == 0:
                continue
            k = np.arange(j, n, dtype=np.int64)
            hits = np.flatnonzero((ij * k) % n == 1)
            for h in hits:
                kk = int(k[h])
                if not i == j == kk:
                    return CubeReport(n, False, (i, j, kk))
    return CubeReport(n, True, None)


def cube_scan(limit: int, cap: int = CUBE_CAP) -> list[int]:
    if limit > cap:
        raise SizeError(f"cube scan limit {limit} exceeds cap {cap}")
    return [n for n in range(1, limit + 1) if cube_check(n, cap).holds]


def cube_holds_structural(n: int) -> bool:
    """Closed form of the cube classification: only Z_1 and Z_2 qualify.

    For n >= 3 the unit n-1 != 1 gives the off-diagonal triple
    (1, n-1, n-1).
    """
    make_ring(n)
    return n <= 2
