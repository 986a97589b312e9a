"""Multiplication by a linear form on A = R/I and the Weak Lefschetz property."""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass
from fractions import Fraction

from .artinian import IdealGenerators, graded, hilbert_function
from .exactla import RationalMatrix, kernel_basis, rank
from .qpoly import HomogeneousPolynomial, LinearForm, Monomial

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class DegreeRecord:
    degree: int
    dim_source: int
    dim_target: int
    rank: int

    @property
    def expected(self) -> int:
        return min(self.dim_source, self.dim_target)

    @property
    def maximal(self) -> bool:
        return self.rank == self.expected

    @property
    def injective(self) -> bool:
        return self.rank == self.dim_source

    @property
    def surjective(self) -> bool:
        return self.rank == self.dim_target


@dataclass(frozen=True)
class SampledForm:
    form: LinearForm
    ranks: tuple[int, ...]


@dataclass(frozen=True)
class WlpReport:
    records: tuple[DegreeRecord, ...]
    sampled_forms: tuple[SampledForm, ...]
    seed: int
    hilbert: tuple[int, ...]
    disagreements: tuple[int, ...] = ()

    @property
    def failing_degrees(self) -> tuple[int, ...]:
        return tuple(r.degree for r in self.records if not r.maximal)

    @property
    def verdict(self) -> bool:
        return not self.failing_degrees

    def record(self, m: int) -> DegreeRecord:
        for r in self.records:
            if r.degree == m:
                return r
        raise KeyError(m)

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "failing_degrees": list(self.failing_degrees),
            "hilbert": list(self.hilbert),
            "records": [
                {
                    "degree": r.degree,
                    "dim_source": r.dim_source,
                    "dim_target": r.dim_target,
                    "rank": r.rank,
                    "maximal": r.maximal,
                }
                for r in self.records
            ],
            "sampled_forms": [
                {"form": [str(s.form.u), str(s.form.v), str(s.form.w)], "ranks": list(s.ranks)}
                for s in self.sampled_forms
            ],
            "disagreements": list(self.disagreements),
            "seed": self.seed,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "WlpReport":
        records = tuple(
            DegreeRecord(r["degree"], r["dim_source"], r["dim_target"], r["rank"]) for r in data["records"]
        )
        forms = tuple(
            SampledForm(LinearForm(*(Fraction(x) for x in s["form"])), tuple(s["ranks"]))
            for s in data["sampled_forms"]
        )
        return cls(records, forms, data["seed"], tuple(data["hilbert"]), tuple(data["disagreements"]))


def _require_artinian(ideal: IdealGenerators):
    return hilbert_function(ideal, strict=True)


def multiplication_matrix(ideal: IdealGenerators, g: HomogeneousPolynomial, m: int) -> RationalMatrix:
    """Matrix of A_m -> A_{m+deg g}, f -> g*f, in the standard-monomial bases."""
    _require_artinian(ideal)
    if m < 0:
        raise ValueError("negative degree")
    gi = graded(ideal)
    source = gi.standard_monomials(m)
    target = gi.standard_monomials(m + g.degree)
    row_of = {mono: i for i, mono in enumerate(target)}
    columns = []
    for mono in source:
        col = [Fraction(0)] * len(target)
        for t, c in gi.normal_form(g * mono).items():
            col[row_of[t]] = c
        columns.append(col)
    return RationalMatrix.from_columns(columns, len(target))


def mult_map_matrix(ideal: IdealGenerators, form: LinearForm, m: int) -> RationalMatrix:
    """The map mu_l : A_m -> A_{m+1}."""
    return multiplication_matrix(ideal, form.as_polynomial(), m)


def random_linear_form(rng: random.Random, bound: int) -> LinearForm:
    while True:
        coeffs = [rng.randint(-bound, bound) for _ in range(3)]
        if any(coeffs):
            return LinearForm(*coeffs)


def wlp_check(ideal: IdealGenerators, trials: int = 3, bound: int = 1000, seed: int = 0) -> WlpReport:
    """Decide WLP from the maximum rank of mu_l over ``trials`` random forms l.

    Every sampled form's per-degree ranks are kept.  A form that falls below
    the running maximum is logged but cannot lower the verdict.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if bound < 2:
        raise ValueError("bound must be >= 2")
    hf = _require_artinian(ideal)
    s = hf.socle_degree if hf.socle_degree is not None else -1
    rng = random.Random(seed)
    samples = []
    for _ in range(trials):
        form = random_linear_form(rng, bound)
        ranks = tuple(rank(mult_map_matrix(ideal, form, m)) for m in range(s))
        samples.append(SampledForm(form, ranks))
    records = []
    disagreements = []
    for m in range(s):
        per_form = [smp.ranks[m] for smp in samples]
        best = max(per_form)
        if min(per_form) != best:
            disagreements.append(m)
            log.info("rank of mu_l in degree %d differs across samples: %s", m, per_form)
        records.append(DegreeRecord(m, hf[m], hf[m + 1], best))
    return WlpReport(tuple(records), tuple(samples), seed, hf.values, tuple(disagreements))


def kernel_witness(ideal: IdealGenerators, form: LinearForm, m: int) -> list[HomogeneousPolynomial]:
    """Forms of degree m, written in standard monomials, spanning ker(mu_l) on A_m."""
    matrix = mult_map_matrix(ideal, form, m)
    source = graded(ideal).standard_monomials(m)
    return [
        HomogeneousPolynomial(dict(zip(source, v)), m) for v in kernel_basis(matrix)
    ]


@dataclass(frozen=True)
class UVPolynomial:
    """Polynomial in the line parameters u, v; keys are (i, j) for u^i v^j."""

    terms: tuple[tuple[tuple[int, int], Fraction], ...]

    @classmethod
    def from_dict(cls, coeffs: dict[tuple[int, int], Fraction]) -> "UVPolynomial":
        return cls(tuple(sorted((k, Fraction(c)) for k, c in coeffs.items() if c)))

    def is_zero(self) -> bool:
        return not self.terms

    def __call__(self, u, v) -> Fraction:
        return sum((c * Fraction(u) ** i * Fraction(v) ** j for (i, j), c in self.terms), Fraction(0))

    def __add__(self, other: "UVPolynomial") -> "UVPolynomial":
        acc = dict(self.terms)
        for k, c in other.terms:
            acc[k] = acc.get(k, 0) + c
        return UVPolynomial.from_dict(acc)

    def __sub__(self, other: "UVPolynomial") -> "UVPolynomial":
        return self + other.scale(-1)

    def scale(self, c) -> "UVPolynomial":
        return UVPolynomial.from_dict({k: x * c for k, x in self.terms})

    def shift(self, i: int, j: int) -> "UVPolynomial":
        """Multiply by u^i v^j."""
        return UVPolynomial.from_dict({(a + i, b + j): c for (a, b), c in self.terms})

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (i, j), c in sorted(self.terms, key=lambda t: (-(t[0][0] + t[0][1]), t[0])):
            mono = "*".join(
                f"{n}^{e}" if e > 1 else n for n, e in (("u", i), ("v", j)) if e
            )
            body = mono if c in (1, -1) and mono else (f"{abs(c)}*{mono}" if mono else str(abs(c)))
            parts.append(("- " if c < 0 else "+ ") + body)
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]


def x3y3z3_obstruction(f: HomogeneousPolynomial) -> UVPolynomial:
    """v*c21 - u*c12 for the fourth generator f of (X^3, Y^3, Z^3, f).

    c21 and c12 are the X^2Y and XY^2 coefficients of f restricted to the line
    Z = uX + vY.  The polynomial vanishes identically exactly when f lies in
    the span of X^3, Y^3, Z^3, XYZ.
    """
    if f.degree != 3:
        raise ValueError(f"expected a cubic, got degree {f.degree}")
    a = lambda i, j, k: f.coefficient(Monomial(i, j, k))
    c12 = UVPolynomial.from_dict(
        {
            (0, 0): a(1, 2, 0),
            (1, 0): a(0, 2, 1),
            (1, 1): 2 * a(0, 1, 2),
            (0, 1): a(1, 1, 1),
            (0, 2): a(1, 0, 2),
            (1, 2): 3 * a(0, 0, 3),
        }
    )
    c21 = UVPolynomial.from_dict(
        {
            (0, 0): a(2, 1, 0),
            (2, 0): a(0, 1, 2),
            (0, 1): a(2, 0, 1),
            (1, 0): a(1, 1, 1),
            (1, 1): 2 * a(1, 0, 2),
            (2, 1): 3 * a(0, 0, 3),
        }
    )
    return c21.shift(0, 1) - c12.shift(1, 0)
