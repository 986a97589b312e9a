"""Slopes of syzygy bundles and the subset criterion for monomial ideals.

For monomials m_1, ..., m_n the subsheaf Syz(m_i : i in J) has rank |J| - 1
and degree d_J - sum_{i in J} d_i, with d_J the degree of gcd(m_i : i in J).
Syz(m_1, ..., m_n) is semistable exactly when no such subset has slope above
-sum(d_i) / (n - 1) ("Looking out for stable syzygy bundles", Cor. 3.6).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .artinian import IdealGenerators
from .qpoly import monomial_gcd_degree

MAX_GENERATORS = 20

SEMISTABLE = "semistable"
NOT_SEMISTABLE = "not_semistable"
UNKNOWN = "unknown"
STABLE = "stable"
NOT_STABLE = "not_stable"


@dataclass(frozen=True)
class SubsetSlope:
    indices: tuple[int, ...]
    gcd_degree: int
    degree: int
    slope: Fraction

    def to_dict(self) -> dict:
        return {
            "indices": list(self.indices),
            "gcd_degree": self.gcd_degree,
            "degree": self.degree,
            "slope": str(self.slope),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "SubsetSlope":
        return cls(tuple(data["indices"]), data["gcd_degree"], data["degree"], Fraction(data["slope"]))


@dataclass(frozen=True)
class StabilityReport:
    total_degree: int
    slope: Fraction
    status: str
    witness: SubsetSlope | None = None
    all_subset_slopes: tuple[SubsetSlope, ...] | None = None
    strict: bool = False

    def to_dict(self) -> dict:
        return {
            "total_degree": self.total_degree,
            "slope": str(self.slope),
            "status": self.status,
            "strict": self.strict,
            "witness": self.witness.to_dict() if self.witness else None,
            "all_subset_slopes": (
                [s.to_dict() for s in self.all_subset_slopes] if self.all_subset_slopes is not None else None
            ),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "StabilityReport":
        table = data.get("all_subset_slopes")
        return cls(
            data["total_degree"],
            Fraction(data["slope"]),
            data["status"],
            SubsetSlope.from_dict(data["witness"]) if data["witness"] else None,
            tuple(SubsetSlope.from_dict(s) for s in table) if table is not None else None,
            data.get("strict", False),
        )


def syzygy_slope(ideal: IdealGenerators) -> Fraction:
    if ideal.n < 2:
        raise ValueError("slope needs at least two generators")
    return Fraction(-sum(ideal.degrees), ideal.n - 1)


def _subset(ideal: IdealGenerators, indices: Sequence[int]) -> SubsetSlope:
    monos = ideal.monomials()
    chosen = [monos[i] for i in indices]
    d_j = monomial_gcd_degree(chosen)
    degree = d_j - sum(m.degree for m in chosen)
    return SubsetSlope(tuple(indices), d_j, degree, Fraction(degree, len(indices) - 1))


def subset_slope(ideal: IdealGenerators, indices: Sequence[int]) -> Fraction:
    if not ideal.is_monomial:
        raise ValueError("subset slopes are only defined here for monomial ideals")
    indices = tuple(sorted(set(indices)))
    if len(indices) < 2:
        raise ValueError("a subset needs at least two generators")
    if indices[0] < 0 or indices[-1] >= ideal.n:
        raise IndexError("generator index out of range")
    return _subset(ideal, indices).slope


def distinct_generators(ideal: IdealGenerators) -> IdealGenerators:
    """Drop repeated generators (equal up to a nonzero scalar), keeping first occurrences."""
    seen = set()
    kept = []
    for f in ideal.generators:
        lead = f.terms[0][1]
        key = f.scale(1 / lead)
        if key not in seen:
            seen.add(key)
            kept.append(f)
    return IdealGenerators(tuple(kept))


def monomial_semistable(ideal: IdealGenerators, strict: bool = False, audit: bool = False) -> StabilityReport:
    """Subset-slope test on the distinct generators.

    With ``strict`` the comparison is < instead of <= and the status reads
    "stable" / "not_stable".
    Non-monomial input gets status "unknown".
    """
    ideal = distinct_generators(ideal)
    slope = syzygy_slope(ideal)
    total = -sum(ideal.degrees)
    if not ideal.is_monomial:
        return StabilityReport(total, slope, UNKNOWN, strict=strict)
    if ideal.n > MAX_GENERATORS:
        raise ValueError(f"exhaustive subset test limited to {MAX_GENERATORS} generators")
    table = []
    witness = None
    for size in range(2, ideal.n + 1):
        for indices in combinations(range(ideal.n), size):
            entry = _subset(ideal, indices)
            if audit:
                table.append(entry)
            violates = entry.slope >= slope if strict else entry.slope > slope
            if size == ideal.n:
                # the whole bundle never destabilizes itself
                violates = False
            if violates and (witness is None or entry.slope > witness.slope):
                witness = entry
    if strict:
        status = NOT_STABLE if witness else STABLE
    else:
        status = NOT_SEMISTABLE if witness else SEMISTABLE
    return StabilityReport(total, slope, status, witness, tuple(table) if audit else None, strict)
