import random
from fractions import Fraction

from hypothesis import given, strategies as st

from syzlef.exactla import Echelon, RationalMatrix, kernel_basis, rank
from syzlef.golden import random_matrix
from syzlef.oracles import naive_rank


def matrices(max_size=7):
    return st.integers(1, max_size).flatmap(
        lambda r: st.integers(1, max_size).flatmap(
            lambda c: st.lists(
                st.lists(st.integers(-4, 4), min_size=c, max_size=c), min_size=r, max_size=r
            ).map(lambda rows: RationalMatrix.from_rows(rows, c))
        )
    )


def test_rank_small_cases():
    assert rank(RationalMatrix.zeros(3, 4)) == 0
    assert rank(RationalMatrix.identity(5)) == 5
    assert rank(RationalMatrix.from_rows([[1, 2, 3], [2, 4, 6], [1, 0, 1]], 3)) == 2
    assert rank(RationalMatrix.from_rows([[Fraction(1, 2), Fraction(1, 3)], [3, 2]], 2)) == 1


def test_rank_agrees_with_naive_elimination():
    rng = random.Random(11)
    for _ in range(200):
        m = random_matrix(rng)
        assert rank(m) == naive_rank(m.to_rows())


@given(matrices())
def test_rank_of_transpose(m):
    assert rank(m) == rank(m.transpose())


@given(matrices())
def test_kernel_is_kernel(m):
    basis = kernel_basis(m)
    assert len(basis) == m.cols - rank(m)
    for v in basis:
        assert all(x == 0 for x in m.apply(v))
    if basis:
        assert rank(RationalMatrix.from_rows(basis, m.cols)) == len(basis)


def test_echelon_normal_form_is_canonical():
    e = Echelon(3)
    assert e.add([1, 1, 0])
    assert e.add({1: 1, 2: 1})
    assert not e.add([1, 2, 1])
    assert e.rank == 2
    # (0,0,1) and (1,0,0) differ by (1,0,-1) = (1,1,0) - (0,1,1)
    assert e.reduce({2: Fraction(1)}) == e.reduce({0: Fraction(1)})
    assert e.contains([2, 3, 1])
    assert not e.contains([0, 0, 1])


def test_echelon_entries_stay_integral():
    e = Echelon(4)
    e.add([Fraction(1, 2), Fraction(1, 3), 0, 1])
    e.add([0, Fraction(5, 7), 1, 0])
    for row in e.rows():
        assert all(isinstance(x, int) for x in row.values())


def test_matrix_product_and_apply():
    a = RationalMatrix.from_rows([[1, 2], [0, 1]], 2)
    b = RationalMatrix.from_rows([[3], [4]], 1)
    assert (a @ b).to_rows() == [[11], [4]]
    assert a.apply([1, 1]) == [3, 1]
