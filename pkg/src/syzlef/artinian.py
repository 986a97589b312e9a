"""Graded pieces of ideals I = (f_1, ..., f_n) in K[X,Y,Z] and of A = R/I."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .exactla import Echelon, RationalMatrix, rank
from .qpoly import (
    HomogeneousPolynomial,
    Monomial,
    dim_R,
    monomial_index,
    monomials_of_degree,
    parse_polynomial,
)


class NotArtinianError(ValueError):
    """The ideal is provably not R_+-primary."""

    def __init__(self, message: str, values: Sequence[int] = ()):
        super().__init__(message)
        self.values = list(values)


class UndecidedError(NotArtinianError):
    """The degree cap was reached before the Artinian test could decide."""


@dataclass(frozen=True)
class IdealGenerators:
    generators: tuple[HomogeneousPolynomial, ...]

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        if not self.generators:
            raise ValueError("an ideal needs at least one generator")
        for f in self.generators:
            if f.is_zero():
                raise ValueError("zero generator")

    @classmethod
    def parse(cls, texts: Iterable[str]) -> "IdealGenerators":
        return cls(tuple(parse_polynomial(t) for t in texts))

    @classmethod
    def of(cls, *texts: str) -> "IdealGenerators":
        return cls.parse(texts)

    @property
    def n(self) -> int:
        return len(self.generators)

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(f.degree for f in self.generators)

    @property
    def is_monomial(self) -> bool:
        return all(f.is_monomial() for f in self.generators)

    def monomials(self) -> list[Monomial]:
        if not self.is_monomial:
            raise ValueError("not a monomial ideal")
        return [f.leading_monomial() for f in self.generators]

    def __str__(self) -> str:
        return "(" + ", ".join(str(f) for f in self.generators) + ")"


@dataclass(frozen=True)
class HilbertFunction:
    values: tuple[int, ...]
    socle_degree: int | None
    artinian: bool
    status: str = "artinian"

    def __getitem__(self, m: int) -> int:
        if m < 0:
            return 0
        if m < len(self.values):
            return self.values[m]
        if self.artinian:
            return 0
        raise IndexError(f"value at degree {m} was not computed")

    def to_dict(self) -> dict:
        return {
            "values": list(self.values),
            "socle_degree": self.socle_degree,
            "artinian": self.artinian,
            "status": self.status,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "HilbertFunction":
        return cls(tuple(data["values"]), data["socle_degree"], data["artinian"], data["status"])


@dataclass(frozen=True)
class GradedBasis:
    degree: int
    standard_monomials: tuple[Monomial, ...]
    ideal_dim: int


class GradedIdeal:
    """Echelon bases of I_0, I_1, ... built on demand.

    I_{m+1} is spanned by X*I_m, Y*I_m, Z*I_m and the generators of degree
    m + 1; columns are the monomials of R_m in canonical order, so pivot
    columns are leading monomials and the non-pivot ones are standard.
    """

    def __init__(self, ideal: IdealGenerators):
        self.ideal = ideal
        self._pieces: list[Echelon] = []

    def piece(self, m: int) -> Echelon:
        if m < 0:
            raise ValueError("negative degree")
        while len(self._pieces) <= m:
            self._extend()
        return self._pieces[m]

    def _extend(self):
        m = len(self._pieces)
        ech = Echelon(dim_R(m))
        index = monomial_index(m)
        if m > 0:
            prev_monos = monomials_of_degree(m - 1)
            shifts = (Monomial(1, 0, 0), Monomial(0, 1, 0), Monomial(0, 0, 1))
            for row in self._pieces[m - 1].rows():
                for x in shifts:
                    ech.add({index[prev_monos[j] * x]: c for j, c in row.items()})
                    if ech.rank == dim_R(m):
                        break
                if ech.rank == dim_R(m):
                    break
        for f in self.ideal.generators:
            if f.degree == m and ech.rank < dim_R(m):
                ech.add({index[mono]: c for mono, c in f.terms})
        self._pieces.append(ech)

    def ideal_dim(self, m: int) -> int:
        return self.piece(m).rank

    def standard_monomials(self, m: int) -> tuple[Monomial, ...]:
        pivots = self.piece(m).pivot_rows
        return tuple(mono for j, mono in enumerate(monomials_of_degree(m)) if j not in pivots)

    def normal_form(self, f: HomogeneousPolynomial) -> dict[Monomial, Fraction]:
        """Coefficients on standard monomials of f modulo I."""
        m = f.degree
        index = monomial_index(m)
        reduced = self.piece(m).reduce({index[mono]: c for mono, c in f.terms})
        monos = monomials_of_degree(m)
        return {monos[j]: c for j, c in reduced.items()}


@lru_cache(maxsize=256)
def graded(ideal: IdealGenerators) -> GradedIdeal:
    return GradedIdeal(ideal)


def generator_matrix(ideal: IdealGenerators, m: int) -> RationalMatrix:
    """Columns x^alpha * f_i for all deg x^alpha = m - d_i, in the monomial basis of R_m."""
    columns = []
    for f in ideal.generators:
        if f.degree <= m:
            for mono in monomials_of_degree(m - f.degree):
                columns.append((f * mono).to_vector())
    return RationalMatrix.from_columns(columns, dim_R(m))


def ideal_graded_dim(ideal: IdealGenerators, m: int) -> int:
    if m < 0:
        raise ValueError("negative degree")
    return graded(ideal).ideal_dim(m)


def algebra_basis(ideal: IdealGenerators, m: int) -> GradedBasis:
    if m < 0:
        raise ValueError("negative degree")
    g = graded(ideal)
    return GradedBasis(m, g.standard_monomials(m), g.ideal_dim(m))


def hilbert_function(ideal: IdealGenerators, strict: bool = True) -> HilbertFunction:
    """dim A_m for m = 0, 1, ... until the Artinian test decides.

    A value of 0 proves R_m = I_m and hence A_k = 0 for all k >= m.  A repeat
    values[m] == values[m+1] == c > 0 with m >= max(c, max d_i) meets the
    Macaulay growth bound for an ideal generated in degrees <= m, so by
    Gotzmann persistence the function is constant from then on.  Nothing is
    decided past degree sum(d_i) + 1.

    With ``strict`` a non-Artinian or undecided outcome raises; otherwise it
    is returned with ``artinian=False``.
    """
    g = graded(ideal)
    cap = sum(ideal.degrees)
    dmax = max(ideal.degrees)
    values: list[int] = []
    for m in range(cap + 2):
        values.append(dim_R(m) - g.ideal_dim(m))
        if values[-1] == 0:
            return HilbertFunction(tuple(values), m - 1 if m > 0 else None, True)
        if m >= 1:
            c = values[m]
            if values[m - 1] == c and m - 1 >= max(c, dmax):
                if strict:
                    raise NotArtinianError(
                        f"not R_+-primary: Hilbert function persists at {c}", values
                    )
                return HilbertFunction(tuple(values), None, False, "not_artinian")
    if strict:
        raise UndecidedError(f"undecided at cap: no verdict up to degree {cap + 1}", values)
    return HilbertFunction(tuple(values), None, False, "undecided")


def is_artinian(ideal: IdealGenerators) -> bool:
    return hilbert_function(ideal, strict=False).artinian


def is_complete_intersection(ideal: IdealGenerators) -> bool:
    return ideal.n == 3 and is_artinian(ideal)


def in_ideal(ideal: IdealGenerators, f: HomogeneousPolynomial) -> bool:
    return not graded(ideal).normal_form(f)


def direct_ideal_dim(ideal: IdealGenerators, m: int) -> int:
    """Rank of :func:`generator_matrix`; independent of the incremental bases."""
    return rank(generator_matrix(ideal, m))
