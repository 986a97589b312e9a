"""Exact rational matrices: rank, kernels and incremental echelon forms.

All elimination is fraction-free.  Every row is scaled to a primitive
integer vector (denominators cleared, content divided out) and a row is
reduced against a pivot row by ``r <- p[c] * r - r[c] * p`` followed by
content removal.  Pivots are chosen as the first nonzero column in the
caller's column order, and columns are never exchanged.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence, Union

Rational = Union[int, Fraction]


@dataclass(frozen=True)
class RationalMatrix:
    rows: int
    cols: int
    entries: tuple[Fraction, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative matrix dimension")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} entries")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Rational]], cols: int | None = None) -> "RationalMatrix":
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), cols, tuple(Fraction(x) for r in rows for x in r))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[Rational]], rows: int) -> "RationalMatrix":
        return cls.from_rows([[col[i] for col in columns] for i in range(rows)], len(columns))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RationalMatrix":
        return cls(rows, cols, (Fraction(0),) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls.from_rows([[int(i == j) for j in range(n)] for i in range(n)], n)

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> list[Fraction]:
        return list(self.entries[i * self.cols : (i + 1) * self.cols])

    def to_rows(self) -> list[list[Fraction]]:
        return [self.row(i) for i in range(self.rows)]

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix.from_rows(
            [[self[i, j] for i in range(self.rows)] for j in range(self.cols)], self.rows
        )

    def apply(self, vector: Sequence[Rational]) -> list[Fraction]:
        if len(vector) != self.cols:
            raise ValueError("dimension mismatch")
        return [sum((self[i, j] * vector[j] for j in range(self.cols)), Fraction(0)) for i in range(self.rows)]

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.cols != other.rows:
            raise ValueError("dimension mismatch")
        out = [
            [sum((self[i, k] * other[k, j] for k in range(self.cols)), Fraction(0)) for j in range(other.cols)]
            for i in range(self.rows)
        ]
        return RationalMatrix.from_rows(out, other.cols)

    def __str__(self) -> str:
        cells = [[str(x) for x in r] for r in self.to_rows()]
        if not cells:
            return f"<{self.rows}x{self.cols} matrix>"
        width = max((len(c) for r in cells for c in r), default=1)
        return "\n".join("[" + " ".join(c.rjust(width) for c in r) + "]" for r in cells)


def _primitive(row: dict[int, int]) -> dict[int, int]:
    """Divide out the content and make the leading (smallest column) entry positive."""
    if not row:
        return row
    g = 0
    for x in row.values():
        g = gcd(g, x)
        if g == 1:
            break
    lead = row[min(row)]
    if lead < 0:
        g = -g
    if g != 1:
        row = {c: x // g for c, x in row.items()}
    return row


def integer_row(vector: Iterable[Rational]) -> dict[int, int]:
    """Sparse primitive integer row proportional to ``vector``."""
    items = [(j, Fraction(x)) for j, x in enumerate(vector) if x]
    return integer_row_sparse(dict(items))


def integer_row_sparse(vector: dict[int, Rational]) -> dict[int, int]:
    den = 1
    for x in vector.values():
        if isinstance(x, Fraction):
            den = lcm(den, x.denominator)
    row = {j: int(x * den) for j, x in vector.items() if x}
    return _primitive(row)


class Echelon:
    """Incrementally maintained reduced echelon basis of a row space.

    Rows are sparse primitive integer vectors.  Every pivot column is zero in
    all rows except its own, so reduction against the basis is a single pass.
    """

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.pivot_rows: dict[int, dict[int, int]] = {}

    @property
    def rank(self) -> int:
        return len(self.pivot_rows)

    def pivots(self) -> list[int]:
        return sorted(self.pivot_rows)

    def rows(self) -> list[dict[int, int]]:
        return [self.pivot_rows[c] for c in sorted(self.pivot_rows)]

    def _reduce_int(self, row: dict[int, int]) -> dict[int, int]:
        for c in sorted(c for c in row if c in self.pivot_rows):
            rc = row.get(c)
            if not rc:
                continue
            p = self.pivot_rows[c]
            pc = p[c]
            g = gcd(pc, rc)
            a, b = pc // g, rc // g
            new = {j: a * x for j, x in row.items()} if a != 1 else dict(row)
            for j, x in p.items():
                y = new.get(j, 0) - b * x
                if y:
                    new[j] = y
                else:
                    new.pop(j, None)
            row = _primitive(new)
        return row

    def add(self, vector: Iterable[Rational] | dict[int, Rational]) -> bool:
        """Insert a vector; return True if it enlarged the row space."""
        if isinstance(vector, dict):
            row = integer_row_sparse(vector)
        else:
            row = integer_row(vector)
        row = self._reduce_int(row)
        if not row:
            return False
        c = min(row)
        rc = row[c]
        for pc_col, p in list(self.pivot_rows.items()):
            x = p.get(c)
            if x:
                g = gcd(rc, x)
                a, b = rc // g, x // g
                new = {j: a * y for j, y in p.items()}
                for j, y in row.items():
                    z = new.get(j, 0) - b * y
                    if z:
                        new[j] = z
                    else:
                        new.pop(j, None)
                self.pivot_rows[pc_col] = _primitive(new)
        self.pivot_rows[c] = row
        return True

    def reduce(self, vector: Iterable[Rational] | dict[int, Rational]) -> dict[int, Fraction]:
        """Normal form of a rational vector: result is supported off the pivot columns."""
        items = vector.items() if isinstance(vector, dict) else enumerate(vector)
        out = {j: Fraction(x) for j, x in items if x}
        for c in sorted(c for c in out if c in self.pivot_rows):
            x = out.get(c)
            if not x:
                continue
            p = self.pivot_rows[c]
            factor = x / p[c]
            for j, y in p.items():
                z = out.get(j, 0) - factor * y
                if z:
                    out[j] = z
                else:
                    out.pop(j, None)
        return out

    def contains(self, vector: Iterable[Rational] | dict[int, Rational]) -> bool:
        return not self.reduce(vector)


def rank(matrix: RationalMatrix) -> int:
    ech = Echelon(matrix.cols)
    for i in range(matrix.rows):
        ech.add(matrix.row(i))
    return ech.rank


def kernel_basis(matrix: RationalMatrix) -> list[list[Fraction]]:
    """Basis of {v : M v = 0}, one vector per non-pivot column.

    The vector for free column f has a 1 in position f and zeros in the other
    free columns.
    """
    ech = Echelon(matrix.cols)
    for i in range(matrix.rows):
        ech.add(matrix.row(i))
    pivots = ech.pivot_rows
    basis = []
    for f in range(matrix.cols):
        if f in pivots:
            continue
        v = [Fraction(0)] * matrix.cols
        v[f] = Fraction(1)
        for c, p in pivots.items():
            x = p.get(f)
            if x:
                v[c] = Fraction(-x, p[c])
        basis.append(v)
    return basis
