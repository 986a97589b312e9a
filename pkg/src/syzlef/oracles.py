"""Slow independent reference computations used to cross-check the fast paths."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .qpoly import Monomial, monomials_of_degree


def naive_rank(rows: Sequence[Sequence]) -> int:
    """Textbook Gaussian elimination over Fraction with row swaps."""
    a = [[Fraction(x) for x in r] for r in rows]
    if not a:
        return 0
    nrows, ncols = len(a), len(a[0])
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if a[i][c] != 0), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        for i in range(r + 1, nrows):
            if a[i][c]:
                factor = a[i][c] / a[r][c]
                a[i] = [x - factor * y for x, y in zip(a[i], a[r])]
        r += 1
        if r == nrows:
            break
    return r


def monomial_hilbert_value(monomials: Sequence[Monomial], m: int) -> int:
    """Number of degree-m monomials divisible by none of ``monomials``."""
    return sum(1 for mono in monomials_of_degree(m) if not any(g.divides(mono) for g in monomials))


def monomial_hilbert_function(monomials: Sequence[Monomial]) -> tuple[int, ...]:
    """Standard-monomial counts up to and including the first zero.

    Only meaningful for Artinian monomial ideals, i.e. ones containing pure
    powers of X, Y and Z.
    """
    pure = [0, 0, 0]
    for g in monomials:
        support = [i for i, e in enumerate(g.exponents) if e]
        if len(support) == 1:
            i = support[0]
            e = g.exponents[i]
            pure[i] = e if not pure[i] else min(pure[i], e)
    if not all(pure):
        raise ValueError("monomial ideal is not Artinian")
    values = []
    for m in range(sum(pure) + 1):
        values.append(monomial_hilbert_value(monomials, m))
        if values[-1] == 0:
            break
    return tuple(values)
