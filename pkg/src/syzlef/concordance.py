"""Cross-checks between WLP, generic splitting type and semistability.

Here gap is the spread a_1 - a_{n-1} of the generic splitting type.  Each
rule is an implication between independently computed quantities:

    GM_gap        semistable                     => a_i - a_{i+1} <= 1  (Grauert-Mulich)
    T22_forward   semistable and gap <= 1        => WLP
    T22_backward  semistable and gap >= 2        => not WLP
    GAP1_WLP      gap <= 1                       => WLP
    T33           n = 4, monomial, not semistable => WLP
    C24           n = 3 (Artinian)               => WLP

A rule whose hypothesis cannot be evaluated (stability unknown) is skipped,
never counted as satisfied or violated.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable

from .artinian import IdealGenerators, hilbert_function
from .lefschetz import wlp_check
from .pencil import splitting_type
from .qpoly import HomogeneousPolynomial, Monomial, monomials_of_degree
from .stability import NOT_SEMISTABLE, SEMISTABLE, UNKNOWN, distinct_generators, monomial_semistable

RULES = ("GM_gap", "T22_forward", "T22_backward", "GAP1_WLP", "T33", "C24")


@dataclass(frozen=True)
class RuleCheck:
    rule: str
    applicable: bool
    satisfied: bool

    @property
    def violated(self) -> bool:
        return self.applicable and not self.satisfied


@dataclass(frozen=True)
class ConcordanceVerdict:
    ideal: str
    n: int
    degrees: tuple[int, ...]
    monomial: bool
    hilbert: tuple[int, ...]
    wlp: bool
    failing_degrees: tuple[int, ...]
    twists: tuple[int, ...]
    gap: int
    max_step: int
    stability: str
    checks: tuple[RuleCheck, ...]

    @property
    def violations(self) -> list[str]:
        return [c.rule for c in self.checks if c.violated]

    def check(self, rule: str) -> RuleCheck:
        for c in self.checks:
            if c.rule == rule:
                return c
        raise KeyError(rule)

    def to_dict(self) -> dict:
        return {
            "ideal": self.ideal,
            "n": self.n,
            "degrees": list(self.degrees),
            "monomial": self.monomial,
            "hilbert": list(self.hilbert),
            "wlp": self.wlp,
            "failing_degrees": list(self.failing_degrees),
            "twists": list(self.twists),
            "gap": self.gap,
            "max_step": self.max_step,
            "stability": self.stability,
            "checks": [
                {"rule": c.rule, "applicable": c.applicable, "satisfied": c.satisfied} for c in self.checks
            ],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ConcordanceVerdict":
        return cls(
            data["ideal"],
            data["n"],
            tuple(data["degrees"]),
            data["monomial"],
            tuple(data["hilbert"]),
            data["wlp"],
            tuple(data["failing_degrees"]),
            tuple(data["twists"]),
            data["gap"],
            data["max_step"],
            data["stability"],
            tuple(RuleCheck(c["rule"], c["applicable"], c["satisfied"]) for c in data["checks"]),
        )


def evaluate_rules(
    n: int, monomial: bool, wlp: bool, gap: int, max_step: int, stability: str
) -> tuple[RuleCheck, ...]:
    semistable = stability == SEMISTABLE
    known = stability != UNKNOWN

    def rule(name, hypothesis, conclusion):
        return RuleCheck(name, hypothesis, bool(conclusion) if hypothesis else True)

    return (
        rule("GM_gap", known and semistable, max_step <= 1),
        rule("T22_forward", known and semistable and gap <= 1, wlp),
        rule("T22_backward", known and semistable and gap >= 2, not wlp),
        rule("GAP1_WLP", gap <= 1, wlp),
        rule("T33", n == 4 and monomial and stability == NOT_SEMISTABLE, wlp),
        rule("C24", n == 3, wlp),
    )


def concord(
    ideal: IdealGenerators, trials: int = 3, bound: int = 1000, samples: int = 3, seed: int = 0
) -> ConcordanceVerdict:
    ideal = distinct_generators(ideal)
    hf = hilbert_function(ideal, strict=True)
    wlp = wlp_check(ideal, trials=trials, bound=bound, seed=seed)
    split = splitting_type(ideal, samples=samples, bound=bound, seed=seed)
    stab = monomial_semistable(ideal)
    checks = evaluate_rules(ideal.n, ideal.is_monomial, wlp.verdict, split.gap, split.max_step, stab.status)
    return ConcordanceVerdict(
        str(ideal),
        ideal.n,
        ideal.degrees,
        ideal.is_monomial,
        hf.values,
        wlp.verdict,
        wlp.failing_degrees,
        split.twists,
        split.gap,
        split.max_step,
        stab.status,
        checks,
    )


# ----------------------------------------------------------------------------
# fuzzing


@dataclass(frozen=True)
class FuzzSpec:
    kind: str = "monomial"
    n_range: tuple[int, int] = (4, 4)
    degree_range: tuple[int, int] = (1, 5)
    trials: int = 100
    seed: int = 0
    wlp_trials: int = 3
    bound: int = 1000
    samples: int = 3
    coefficient_bound: int = 9

    def __post_init__(self):
        if self.kind not in ("monomial", "dense", "mixed"):
            raise ValueError(f"unknown generator kind {self.kind!r}")
        lo, hi = self.n_range
        if not 2 <= lo <= hi:
            raise ValueError(f"bad generator count range {self.n_range}")
        if self.kind != "dense" and lo < 3:
            raise ValueError("monomial Artinian ideals need at least three generators")
        dlo, dhi = self.degree_range
        if not 1 <= dlo <= dhi:
            raise ValueError(f"bad degree range {self.degree_range}")
        if self.trials < 0:
            raise ValueError("negative trial count")


def random_monomial_ideal(rng: random.Random, n: int, degrees: tuple[int, int]) -> IdealGenerators:
    """Pure powers X^a, Y^b, Z^c plus n - 3 further monomials; minimally generated."""
    lo, hi = degrees
    while True:
        gens = [
            Monomial(rng.randint(lo, hi), 0, 0),
            Monomial(0, rng.randint(lo, hi), 0),
            Monomial(0, 0, rng.randint(lo, hi)),
        ]
        candidates_tried = 0
        while len(gens) < n and candidates_tried < 200:
            candidates_tried += 1
            d = rng.randint(lo, hi)
            mono = rng.choice(monomials_of_degree(d))
            if any(g.divides(mono) or mono.divides(g) for g in gens):
                continue
            gens.append(mono)
        if len(gens) == n:
            return IdealGenerators(tuple(HomogeneousPolynomial.monomial(g) for g in gens))


def random_dense_form(rng: random.Random, degree: int, coefficient_bound: int = 9) -> HomogeneousPolynomial:
    while True:
        f = HomogeneousPolynomial(
            {m: rng.randint(-coefficient_bound, coefficient_bound) for m in monomials_of_degree(degree)},
            degree,
        )
        if not f.is_zero():
            return f


def random_dense_ideal(
    rng: random.Random, n: int, degrees: tuple[int, int], coefficient_bound: int = 9
) -> IdealGenerators:
    return IdealGenerators(
        tuple(random_dense_form(rng, rng.randint(*degrees), coefficient_bound) for _ in range(n))
    )


@dataclass
class RuleTally:
    applicable: int = 0
    satisfied: int = 0
    skipped: int = 0


@dataclass
class FuzzSummary:
    spec: FuzzSpec
    tested: int = 0
    skipped_non_artinian: int = 0
    tally: dict[str, RuleTally] = field(default_factory=lambda: {r: RuleTally() for r in RULES})
    gap_le_1: int = 0
    wlp_true: int = 0
    stability_counts: dict[str, int] = field(default_factory=dict)
    violations: list[str] = field(default_factory=list)
    verdicts: list[ConcordanceVerdict] = field(default_factory=list)

    def add(self, verdict: ConcordanceVerdict):
        self.tested += 1
        self.verdicts.append(verdict)
        self.gap_le_1 += verdict.gap <= 1
        self.wlp_true += verdict.wlp
        self.stability_counts[verdict.stability] = self.stability_counts.get(verdict.stability, 0) + 1
        for c in verdict.checks:
            t = self.tally[c.rule]
            if c.applicable:
                t.applicable += 1
                t.satisfied += c.satisfied
                if not c.satisfied:
                    self.violations.append(f"{c.rule} violated by {verdict.ideal}")
            else:
                t.skipped += 1

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "kind": self.spec.kind,
            "n_range": list(self.spec.n_range),
            "degree_range": list(self.spec.degree_range),
            "trials": self.spec.trials,
            "seed": self.spec.seed,
            "tested": self.tested,
            "skipped_non_artinian": self.skipped_non_artinian,
            "gap_le_1": self.gap_le_1,
            "wlp_true": self.wlp_true,
            "stability_counts": dict(sorted(self.stability_counts.items())),
            "rules": {
                r: {"applicable": t.applicable, "satisfied": t.satisfied, "skipped": t.skipped}
                for r, t in self.tally.items()
            },
            "violations": list(self.violations),
        }


def generate(spec: FuzzSpec) -> Iterable[tuple[IdealGenerators, int]]:
    """Yield (ideal, per-trial seed) pairs; deterministic in ``spec.seed``."""
    rng = random.Random(spec.seed)
    for trial in range(spec.trials):
        n = rng.randint(*spec.n_range)
        kind = spec.kind
        if kind == "mixed":
            kind = rng.choice(("monomial", "dense"))
        if kind == "monomial":
            ideal = random_monomial_ideal(rng, n, spec.degree_range)
        else:
            ideal = random_dense_ideal(rng, n, spec.degree_range, spec.coefficient_bound)
        yield ideal, rng.getrandbits(64)


def fuzz(spec: FuzzSpec) -> FuzzSummary:
    summary = FuzzSummary(spec)
    for ideal, trial_seed in generate(spec):
        if not hilbert_function(ideal, strict=False).artinian:
            summary.skipped_non_artinian += 1
            continue
        summary.add(
            concord(ideal, trials=spec.wlp_trials, bound=spec.bound, samples=spec.samples, seed=trial_seed)
        )
    return summary
