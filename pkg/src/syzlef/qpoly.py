"""Exact homogeneous polynomials in X, Y, Z over the rationals.

Monomials are ordered graded-lexicographically with X > Y > Z.  Within a
fixed degree this is plain lexicographic order on exponent triples, taken
descending, so ``monomials_of_degree(2)`` is ``X^2, XY, XZ, Y^2, YZ, Z^2``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterable, Mapping, Union

Rational = Union[int, Fraction]

VARIABLES = ("X", "Y", "Z")


class PolynomialSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class NotHomogeneousError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Monomial:
    """X^a Y^b Z^c."""

    a: int
    b: int
    c: int

    def __post_init__(self):
        if min(self.a, self.b, self.c) < 0:
            raise ValueError(f"negative exponent in {self.exponents}")

    @property
    def exponents(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)

    @property
    def degree(self) -> int:
        return self.a + self.b + self.c

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial(self.a + other.a, self.b + other.b, self.c + other.c)

    def divides(self, other: "Monomial") -> bool:
        return self.a <= other.a and self.b <= other.b and self.c <= other.c

    def __str__(self) -> str:
        parts = []
        for name, e in zip(VARIABLES, self.exponents):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts) if parts else "1"


@lru_cache(maxsize=None)
def monomials_of_degree(d: int) -> tuple[Monomial, ...]:
    """All monomials of degree ``d`` in canonical (descending grlex) order."""
    if d < 0:
        return ()
    return tuple(
        Monomial(a, b, d - a - b) for a in range(d, -1, -1) for b in range(d - a, -1, -1)
    )


@lru_cache(maxsize=None)
def monomial_index(d: int) -> dict[Monomial, int]:
    return {mono: i for i, mono in enumerate(monomials_of_degree(d))}


def dim_R(d: int) -> int:
    """dim of the degree-d piece of K[X,Y,Z]."""
    return comb(d + 2, 2) if d >= 0 else 0


def monomial_gcd_degree(monomials: Iterable[Monomial]) -> int:
    monomials = list(monomials)
    if not monomials:
        raise ValueError("gcd of an empty set of monomials")
    return (
        min(m.a for m in monomials)
        + min(m.b for m in monomials)
        + min(m.c for m in monomials)
    )


class HomogeneousPolynomial:
    """A form of fixed degree with exact rational coefficients.

    Immutable.  Zero coefficients are never stored, and the zero polynomial
    keeps its degree tag.
    """

    __slots__ = ("_degree", "_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Rational], degree: int | None = None):
        clean: dict[Monomial, Fraction] = {}
        for mono, coef in terms.items():
            coef = Fraction(coef)
            if coef:
                clean[mono] = clean.get(mono, Fraction(0)) + coef
                if not clean[mono]:
                    del clean[mono]
        degrees = {m.degree for m in clean}
        if len(degrees) > 1:
            raise NotHomogeneousError(f"terms of degrees {sorted(degrees)}")
        if degrees:
            (d,) = degrees
            if degree is not None and degree != d:
                raise NotHomogeneousError(f"declared degree {degree}, terms of degree {d}")
            degree = d
        elif degree is None:
            raise ValueError("the zero polynomial needs an explicit degree")
        if degree < 0:
            raise ValueError("negative degree")
        self._degree = degree
        order = monomial_index(degree)
        self._terms = tuple(sorted(clean.items(), key=lambda t: order[t[0]]))
        self._hash = None

    @classmethod
    def zero(cls, degree: int) -> "HomogeneousPolynomial":
        return cls({}, degree)

    @classmethod
    def monomial(cls, mono: Monomial, coef: Rational = 1) -> "HomogeneousPolynomial":
        return cls({mono: coef}, mono.degree)

    @classmethod
    def from_vector(cls, degree: int, vector: Iterable[Rational]) -> "HomogeneousPolynomial":
        """Inverse of :meth:`to_vector`."""
        return cls(dict(zip(monomials_of_degree(degree), vector)), degree)

    @property
    def degree(self) -> int:
        return self._degree

    @property
    def terms(self) -> tuple[tuple[Monomial, Fraction], ...]:
        return self._terms

    def coefficients(self) -> dict[Monomial, Fraction]:
        return dict(self._terms)

    def coefficient(self, mono: Monomial) -> Fraction:
        for m, c in self._terms:
            if m == mono:
                return c
        return Fraction(0)

    def to_vector(self) -> list[Fraction]:
        """Coefficients in the canonical monomial basis of R_d."""
        vec = [Fraction(0)] * dim_R(self._degree)
        index = monomial_index(self._degree)
        for m, c in self._terms:
            vec[index[m]] = c
        return vec

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def leading_monomial(self) -> Monomial:
        if not self._terms:
            raise ValueError("zero polynomial has no leading monomial")
        return self._terms[0][0]

    def __eq__(self, other):
        if not isinstance(other, HomogeneousPolynomial):
            return NotImplemented
        return self._degree == other._degree and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._degree, self._terms))
        return self._hash

    def _check_same_degree(self, other: "HomogeneousPolynomial"):
        if self._degree != other._degree:
            raise NotHomogeneousError(f"cannot add forms of degree {self._degree} and {other._degree}")

    def __add__(self, other: "HomogeneousPolynomial") -> "HomogeneousPolynomial":
        self._check_same_degree(other)
        acc = dict(self._terms)
        for m, c in other._terms:
            acc[m] = acc.get(m, 0) + c
        return HomogeneousPolynomial(acc, self._degree)

    def __neg__(self) -> "HomogeneousPolynomial":
        return HomogeneousPolynomial({m: -c for m, c in self._terms}, self._degree)

    def __sub__(self, other: "HomogeneousPolynomial") -> "HomogeneousPolynomial":
        return self + (-other)

    def scale(self, factor: Rational) -> "HomogeneousPolynomial":
        return HomogeneousPolynomial({m: c * factor for m, c in self._terms}, self._degree)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if isinstance(other, Monomial):
            return HomogeneousPolynomial(
                {m * other: c for m, c in self._terms}, self._degree + other.degree
            )
        if isinstance(other, HomogeneousPolynomial):
            acc: dict[Monomial, Fraction] = {}
            for m1, c1 in self._terms:
                for m2, c2 in other._terms:
                    key = m1 * m2
                    acc[key] = acc.get(key, 0) + c1 * c2
            return HomogeneousPolynomial(acc, self._degree + other._degree)
        return NotImplemented

    __rmul__ = __mul__

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        out = []
        for i, (m, c) in enumerate(self._terms):
            sign = "-" if c < 0 else "+"
            c = abs(c)
            if m.degree == 0:
                body = str(c)
            elif c == 1:
                body = str(m)
            else:
                body = f"{c}*{m}"
            if i == 0:
                out.append(body if sign == "+" else f"-{body}")
            else:
                out.append(f" {sign} {body}")
        return "".join(out)

    def __repr__(self) -> str:
        return f"HomogeneousPolynomial({str(self)!r}, degree={self._degree})"


@dataclass(frozen=True)
class LinearForm:
    """u*X + v*Y + w*Z."""

    u: Fraction
    v: Fraction
    w: Fraction

    def __init__(self, u: Rational, v: Rational, w: Rational):
        object.__setattr__(self, "u", Fraction(u))
        object.__setattr__(self, "v", Fraction(v))
        object.__setattr__(self, "w", Fraction(w))
        if not (self.u or self.v or self.w):
            raise ValueError("the zero linear form does not define a line")

    @classmethod
    def chart(cls, u: Rational, v: Rational) -> "LinearForm":
        """The line Z = u*X + v*Y, i.e. the form u*X + v*Y - Z."""
        return cls(u, v, -1)

    def as_polynomial(self) -> HomogeneousPolynomial:
        return HomogeneousPolynomial(
            {Monomial(1, 0, 0): self.u, Monomial(0, 1, 0): self.v, Monomial(0, 0, 1): self.w}, 1
        )

    def substitution(self) -> tuple[Fraction, Fraction]:
        """(p, q) with Z = p*X + q*Y on the line."""
        if not self.w:
            raise ValueError("line has w = 0; permute coordinates first")
        return (-self.u / self.w, -self.v / self.w)

    def __str__(self) -> str:
        return str(self.as_polynomial())


@dataclass(frozen=True)
class BinaryForm:
    """Form in X, Y; ``coefficients[j]`` multiplies X^(d-j) Y^j."""

    degree: int
    coefficients: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.coefficients) != self.degree + 1:
            raise ValueError("binary form of degree d needs d + 1 coefficients")

    @classmethod
    def zero(cls, degree: int) -> "BinaryForm":
        return cls(degree, (Fraction(0),) * (degree + 1))

    def is_zero(self) -> bool:
        return not any(self.coefficients)

    def coefficient(self, i: int, j: int) -> Fraction:
        """Coefficient of X^i Y^j."""
        if i + j != self.degree or i < 0 or j < 0:
            return Fraction(0)
        return self.coefficients[j]

    def __add__(self, other: "BinaryForm") -> "BinaryForm":
        if self.degree != other.degree:
            raise NotHomogeneousError("binary forms of different degree")
        return BinaryForm(self.degree, tuple(a + b for a, b in zip(self.coefficients, other.coefficients)))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return BinaryForm(self.degree, tuple(c * other for c in self.coefficients))
        if isinstance(other, BinaryForm):
            out = [Fraction(0)] * (self.degree + other.degree + 1)
            for i, a in enumerate(self.coefficients):
                if a:
                    for j, b in enumerate(other.coefficients):
                        out[i + j] += a * b
            return BinaryForm(self.degree + other.degree, tuple(out))
        return NotImplemented

    __rmul__ = __mul__

    def __str__(self) -> str:
        poly = HomogeneousPolynomial(
            {Monomial(self.degree - j, j, 0): c for j, c in enumerate(self.coefficients)},
            self.degree,
        )
        return str(poly)


@lru_cache(maxsize=4096)
def _power_expansion(p: Fraction, q: Fraction, k: int) -> tuple[Fraction, ...]:
    """Coefficients of (p*X + q*Y)^k as a binary form."""
    return tuple(comb(k, j) * p ** (k - j) * q**j for j in range(k + 1))


def restrict_to_line(f: HomogeneousPolynomial, line: LinearForm) -> BinaryForm:
    """Substitute Z = p*X + q*Y, where ``line`` is the form u*X + v*Y + w*Z."""
    p, q = line.substitution()
    d = f.degree
    out = [Fraction(0)] * (d + 1)
    for mono, coef in f.terms:
        zpow = _power_expansion(p, q, mono.c)
        # X^a Y^b (pX + qY)^c: Y-power is b + j
        for j, z in enumerate(zpow):
            if z:
                out[mono.b + j] += coef * z
    return BinaryForm(d, tuple(out))


# ----------------------------------------------------------------------------
# parsing

_TOKEN = re.compile(r"\s*(?:(\d+)(?:/(\d+))?|([XYZxyz])(?:\s*\^\s*(\d+))?|([-+*]))")


def parse_polynomial(text: str) -> HomogeneousPolynomial:
    """Parse ``coef*X^a*Y^b*Z^c`` terms joined by ``+``/``-``.

    ``*`` between factors and ``^1`` are optional; coefficients are integers
    or fractions ``p/q``.
    """
    tokens = []
    pos = 0
    stripped = text.rstrip()
    while pos < len(stripped):
        m = _TOKEN.match(stripped, pos)
        if not m or m.end() == pos:
            raise PolynomialSyntaxError(f"unexpected character {stripped[pos]!r}", pos)
        start = m.start() + (len(m.group(0)) - len(m.group(0).lstrip()))
        if m.group(1) is not None:
            den = int(m.group(2)) if m.group(2) is not None else 1
            if den == 0:
                raise PolynomialSyntaxError("zero denominator", start)
            tokens.append(("num", Fraction(int(m.group(1)), den), start))
        elif m.group(3) is not None:
            exp = int(m.group(4)) if m.group(4) is not None else 1
            tokens.append(("var", ("XYZ".index(m.group(3).upper()), exp), start))
        else:
            tokens.append(("op", m.group(5), start))
        pos = m.end()
    if not tokens:
        raise PolynomialSyntaxError("empty polynomial", 0)

    terms: list[tuple[Monomial, Fraction, int]] = []
    i = 0
    sign = 1
    expect_term = True
    while i < len(tokens):
        kind, value, start = tokens[i]
        if kind == "op" and value in "+-" and expect_term:
            # leading sign of a term; allow a single one
            if i + 1 < len(tokens) and tokens[i + 1][0] == "op":
                raise PolynomialSyntaxError("expected a term", tokens[i + 1][2])
            sign = -1 if value == "-" else 1
            i += 1
            continue
        if not expect_term:
            if kind == "op" and value in "+-":
                expect_term = True
                sign = -1 if value == "-" else 1
                i += 1
                if i >= len(tokens):
                    raise PolynomialSyntaxError("dangling operator", start)
                if tokens[i][0] == "op":
                    raise PolynomialSyntaxError("expected a term", tokens[i][2])
                continue
            raise PolynomialSyntaxError("expected '+' or '-'", start)
        # a term: factors separated by optional '*'
        coef = Fraction(sign)
        exps = [0, 0, 0]
        term_start = start
        seen_factor = False
        while i < len(tokens):
            kind, value, start = tokens[i]
            if kind == "num":
                coef *= value
            elif kind == "var":
                exps[value[0]] += value[1]
            elif value == "*":
                if not seen_factor or i + 1 >= len(tokens) or tokens[i + 1][0] == "op":
                    raise PolynomialSyntaxError("misplaced '*'", start)
                i += 1
                continue
            else:
                break
            seen_factor = True
            i += 1
        terms.append((Monomial(*exps), coef, term_start))
        expect_term = False
        sign = 1
    if expect_term:
        raise PolynomialSyntaxError("dangling operator", len(stripped))

    degree = terms[0][0].degree
    for mono, _, start in terms:
        if mono.degree != degree:
            raise NotHomogeneousError(
                f"not homogeneous: term at position {start} has degree {mono.degree}, expected {degree}"
            )
    acc: dict[Monomial, Fraction] = {}
    for mono, coef, _ in terms:
        acc[mono] = acc.get(mono, 0) + coef
    return HomogeneousPolynomial(acc, degree)
