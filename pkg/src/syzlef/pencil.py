"""Generic splitting type of Syz(f_1, ..., f_n) on a line of P^2.

On a line L with restricted forms g_i = f_i|_L having no common zero, the
bundle Syz|_L is the kernel of (+) O_L(-d_i) -> O_L, and it splits as
(+) O_L(-b_j).  Its twisted sections h(m) = sum_j max(0, m - b_j + 1) are
the degree-m syzygies of the binary forms g_i, which we get by exact rank.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .artinian import IdealGenerators, hilbert_function
from .exactla import RationalMatrix, rank
from .qpoly import BinaryForm, LinearForm, restrict_to_line

log = logging.getLogger(__name__)


class CommonZeroError(ValueError):
    """The restricted forms share a zero on the line."""


class SplittingError(RuntimeError):
    """Reconstruction of the splitting type did not close up."""


@dataclass(frozen=True)
class SplittingType:
    twists: tuple[int, ...]
    lines_sampled: tuple[tuple[int, int], ...] = ()
    per_line: tuple[tuple[int, ...], ...] = ()

    @property
    def gap(self) -> int:
        return self.twists[0] - self.twists[-1] if self.twists else 0

    @property
    def max_step(self) -> int:
        """Largest a_i - a_{i+1}; Grauert-Mulich bounds this by 1 for semistable bundles."""
        return max((a - b for a, b in zip(self.twists, self.twists[1:])), default=0)

    def to_dict(self) -> dict:
        return {
            "twists": list(self.twists),
            "gap": self.gap,
            "max_step": self.max_step,
            "lines_sampled": [list(l) for l in self.lines_sampled],
            "per_line": [list(t) for t in self.per_line],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "SplittingType":
        return cls(
            tuple(data["twists"]),
            tuple(tuple(l) for l in data["lines_sampled"]),
            tuple(tuple(t) for t in data["per_line"]),
        )


def splitting_gap(t: SplittingType | Sequence[int]) -> int:
    twists = t.twists if isinstance(t, SplittingType) else tuple(sorted(t, reverse=True))
    return twists[0] - twists[-1]


def _univariate_gcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    """Monic gcd of polynomials given low-degree-first."""

    def trim(p):
        while p and not p[-1]:
            p.pop()
        return p

    a, b = trim(list(a)), trim(list(b))
    while b:
        r = list(a)
        while len(r) >= len(b) and r:
            q = r[-1] / b[-1]
            shift = len(r) - len(b)
            for i, c in enumerate(b):
                r[shift + i] -= q * c
            trim(r)
        a, b = b, r
    return [c / a[-1] for c in a] if a else a


def has_common_zero(forms: Sequence[BinaryForm]) -> bool:
    """Whether the nonzero binary forms share a zero on P^1."""
    nonzero = [g for g in forms if not g.is_zero()]
    if not nonzero:
        return True
    # zero at [1:0] means the X^d coefficient vanishes
    if all(not g.coefficients[0] for g in nonzero):
        return True
    # remaining zeros are [t:1], roots of g(t, 1) = sum_j c_j t^(d-j)
    acc: list[Fraction] | None = None
    for g in nonzero:
        poly = list(reversed(g.coefficients))
        acc = poly if acc is None else _univariate_gcd(acc, poly)
        while acc and not acc[-1]:
            acc.pop()
        if len(acc) <= 1:
            return False
    return len(acc) > 1


def _restricted_rank(forms: Sequence[BinaryForm], m: int) -> tuple[int, int]:
    """(number of columns, rank) of the map (+) B_{m-d_i} -> B_m."""
    columns = []
    for g in forms:
        k = m - g.degree
        for shift in range(k + 1):
            col = [Fraction(0)] * (m + 1)
            # multiply by X^(k-shift) Y^shift
            for j, c in enumerate(g.coefficients):
                col[j + shift] = c
            columns.append(col)
    if not columns:
        return 0, 0
    return len(columns), rank(RationalMatrix.from_columns(columns, m + 1))


def restricted_forms(ideal: IdealGenerators, line: LinearForm) -> list[BinaryForm]:
    forms = [restrict_to_line(f, line) for f in ideal.generators]
    if all(g.is_zero() for g in forms):
        raise CommonZeroError("every generator vanishes on the line")
    if has_common_zero(forms):
        raise CommonZeroError(f"restricted forms share a zero on the line {line}")
    return forms


def restricted_syzygy_dims(ideal: IdealGenerators, line: LinearForm, m_max: int) -> list[int]:
    """h(m) for m = 0..m_max: dimension of degree-m syzygies of the f_i|_L."""
    forms = restricted_forms(ideal, line)
    out = []
    for m in range(m_max + 1):
        ncols, r = _restricted_rank(forms, m)
        out.append(ncols - r)
    return out


def _generator_degrees(forms: Sequence[BinaryForm], n_gens: int, total: int) -> tuple[list[int], dict[int, int]]:
    """Recover the b_j from second differences of h, scanning m upward."""
    start = max(0, min(g.degree for g in forms) - len(forms))
    h: dict[int, int] = {}
    degrees: list[int] = []
    m = start
    while True:
        if m > total:
            raise SplittingError(f"scan passed degree {total} with generator degrees {degrees}")
        ncols, r = _restricted_rank(forms, m)
        h[m] = ncols - r
        count = h[m] - 2 * h.get(m - 1, 0) + h.get(m - 2, 0)
        if count < 0:
            raise SplittingError(f"negative second difference at degree {m}")
        degrees.extend([m] * count)
        if len(degrees) >= n_gens:
            break
        m += 1
    if len(degrees) != n_gens or sum(degrees) != total:
        raise SplittingError(
            f"generator degrees {degrees} do not match rank {n_gens} and degree sum {total}"
        )
    return degrees, h


def line_splitting(ideal: IdealGenerators, line: LinearForm) -> tuple[int, ...]:
    """Twists a_1 >= ... >= a_{n-1} of Syz|_L on one line."""
    forms = restricted_forms(ideal, line)
    degrees, h = _generator_degrees(forms, ideal.n - 1, sum(ideal.degrees))
    for m, value in h.items():
        expected = sum(max(0, m - b + 1) for b in degrees)
        if expected != value:
            raise SplittingError(f"h({m}) = {value} but the splitting predicts {expected}")
    return tuple(sorted((-b for b in degrees), reverse=True))


def dominates(a: Sequence[int], b: Sequence[int]) -> bool:
    """Partial sums of a (sorted descending) are all >= those of b."""
    sa = sb = 0
    for x, y in zip(a, b):
        sa += x
        sb += y
        if sa < sb:
            return False
    return True


def random_chart_line(rng: random.Random, bound: int) -> tuple[int, int]:
    while True:
        u, v = rng.randint(-bound, bound), rng.randint(-bound, bound)
        if u and v:
            return u, v


def splitting_type(
    ideal: IdealGenerators, samples: int = 3, bound: int = 1000, seed: int = 0, max_resample: int = 20
) -> SplittingType:
    """Generic splitting type from lines Z = uX + vY with random nonzero u, v.

    Special lines can only jump to a type dominating the generic one, so the
    dominance-minimal observed type is returned.
    """
    if samples < 1:
        raise ValueError("samples must be >= 1")
    if ideal.n < 2:
        raise ValueError("a syzygy bundle needs at least two generators")
    hilbert_function(ideal, strict=True)
    rng = random.Random(seed)
    lines: list[tuple[int, int]] = []
    types: list[tuple[int, ...]] = []
    attempts = 0
    while len(types) < samples:
        if attempts >= samples * max_resample:
            raise CommonZeroError("every sampled line met the common zero locus")
        attempts += 1
        u, v = random_chart_line(rng, bound)
        try:
            t = line_splitting(ideal, LinearForm.chart(u, v))
        except CommonZeroError:
            continue
        lines.append((u, v))
        types.append(t)
    best = types[0]
    for t in types[1:]:
        if t != best:
            log.info("splitting types differ across lines: %s vs %s", best, t)
            if dominates(best, t):
                best = t
    return SplittingType(best, tuple(lines), tuple(types))
