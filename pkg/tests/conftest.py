from fractions import Fraction

from hypothesis import settings, strategies as st

from syzlef.qpoly import HomogeneousPolynomial, monomials_of_degree

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

small_fractions = st.builds(Fraction, st.integers(-20, 20), st.integers(1, 6))


@st.composite
def homogeneous(draw, degree=None, max_degree=4):
    d = draw(st.integers(0, max_degree)) if degree is None else degree
    monos = monomials_of_degree(d)
    coeffs = draw(st.lists(small_fractions, min_size=len(monos), max_size=len(monos)))
    return HomogeneousPolynomial(dict(zip(monos, coeffs)), d)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
