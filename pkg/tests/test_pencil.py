import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from syzlef.artinian import IdealGenerators
from syzlef.concordance import random_dense_ideal, random_monomial_ideal
from syzlef.pencil import (
    CommonZeroError,
    SplittingType,
    dominates,
    has_common_zero,
    line_splitting,
    restricted_syzygy_dims,
    splitting_gap,
    splitting_type,
)
from syzlef.qpoly import BinaryForm, LinearForm
from syzlef.stability import monomial_semistable

ACI = IdealGenerators.of("X^3", "Y^3", "Z^3", "X*Y*Z")


def test_aci_restricted_syzygies():
    h = restricted_syzygy_dims(ACI, LinearForm.chart(3, 5), 6)
    assert h[2] == 0 and h[3] == 1 and h[5] == 6
    assert all(h[m] == sum(max(0, m - b + 1) for b in (3, 4, 5)) for m in range(7))


@pytest.mark.parametrize(
    "gens,twists",
    [
        (("X^3", "Y^3", "Z^3", "X*Y*Z"), (-3, -4, -5)),
        (("X^4", "Y^4", "Z^4", "X^3*Y"), (-5, -5, -6)),
        (("X^4", "Y^4", "Z^4", "X^3*Y^3*Z^3"), (-6, -6, -9)),
        (("X^4", "Y^4", "Z^4", "X^3*Y^2"), (-5, -6, -6)),
        (("X^2", "Y^4", "Z^7", "X*Y"), (-3, -5, -7)),
        (("X", "Y", "Z"), (-1, -2)),
        (("X^2", "Y^2", "Z^2"), (-3, -3)),
    ],
)
def test_known_splitting_types(gens, twists):
    ideal = IdealGenerators.of(*gens)
    st_ = splitting_type(ideal)
    assert st_.twists == twists
    assert sum(st_.twists) == -sum(ideal.degrees)
    assert len(st_.lines_sampled) == 3 and all(u and v for u, v in st_.lines_sampled)


def test_gap_examples():
    assert splitting_gap((-5, -5, -6)) == 1
    assert splitting_gap((-3, -4, -5)) == 2
    assert splitting_gap(SplittingType((-6, -6, -9))) == 3
    assert SplittingType((-3, -4, -5)).max_step == 1
    assert SplittingType((-6, -6, -9)).max_step == 3


def test_common_zero_detection():
    # X*(X+Y) and X*Y share [0:1]
    assert has_common_zero([BinaryForm(2, (1, 1, 0)), BinaryForm(2, (0, 1, 0))])
    # both vanish at [1:0]
    assert has_common_zero([BinaryForm(2, (0, 1, 1)), BinaryForm(1, (0, 1))])
    assert not has_common_zero([BinaryForm(2, (1, 0, 0)), BinaryForm(2, (0, 0, 1))])
    # X^2 + Y^2 and X^2 - Y^2 have no common zero
    assert not has_common_zero([BinaryForm(2, (1, 0, 1)), BinaryForm(2, (1, 0, -1))])


def test_line_through_common_zero_is_rejected():
    # on Z = X the second form restricts to 0 and X - Y vanishes at [1:1]
    ideal = IdealGenerators.of("X - Y", "X*Y - Y*Z")
    with pytest.raises(CommonZeroError):
        line_splitting(ideal, LinearForm.chart(1, 0))


def test_dominance():
    assert dominates((-3, -4, -5), (-4, -4, -4))
    assert not dominates((-4, -4, -4), (-3, -4, -5))
    assert dominates((-5, -5), (-5, -5))


def _check_expansion(ideal, line):
    twists = line_splitting(ideal, line)
    bs = [-a for a in twists]
    h = restricted_syzygy_dims(ideal, line, sum(ideal.degrees) + 1)
    assert all(h[m] == sum(max(0, m - b + 1) for b in bs) for m in range(len(h)))
    return twists


def test_second_difference_reconstruction_is_exact():
    rng = random.Random(17)
    for _ in range(30):
        ideal = random_monomial_ideal(rng, rng.randint(3, 5), (1, 5))
        _check_expansion(ideal, LinearForm.chart(rng.randint(1, 99), rng.randint(1, 99)))
    for _ in range(10):
        ideal = random_dense_ideal(rng, 4, (2, 3))
        try:
            _check_expansion(ideal, LinearForm.chart(rng.randint(1, 99), rng.randint(1, 99)))
        except CommonZeroError:
            pass


def test_semistable_monomial_ideals_obey_grauert_mulich():
    rng = random.Random(23)
    seen = 0
    for _ in range(200):
        ideal = random_monomial_ideal(rng, rng.randint(3, 5), (1, 6))
        if monomial_semistable(ideal).status != "semistable":
            continue
        seen += 1
        assert splitting_type(ideal, seed=rng.randint(0, 10**6)).max_step <= 1
    assert seen >= 50


def test_spread_bound_is_too_strong_for_semistable_bundles():
    # semistable with splitting (-3,-4,-5): consecutive steps are 1, the spread is 2
    assert monomial_semistable(ACI).status == "semistable"
    t = splitting_type(ACI)
    assert t.max_step == 1 and t.gap == 2


@given(st.permutations(range(4)), st.lists(st.integers(1, 9), min_size=4, max_size=4))
def test_invariant_under_permutation_and_scaling(perm, scales):
    gens = [IdealGenerators.of("X^4", "Y^4", "Z^4", "X^2*Y*Z").generators[i] for i in perm]
    gens = [g.scale(Fraction(s, 2)) for g, s in zip(gens, scales)]
    assert splitting_type(IdealGenerators(tuple(gens))).twists == (-5, -5, -6)


def test_round_trip_and_determinism():
    a = splitting_type(ACI, seed=4)
    assert SplittingType.from_dict(a.to_dict()) == a
    assert splitting_type(ACI, seed=4) == a


def test_bad_arguments():
    with pytest.raises(ValueError):
        splitting_type(ACI, samples=0)
    with pytest.raises(ValueError):
        splitting_type(IdealGenerators.of("X"))
