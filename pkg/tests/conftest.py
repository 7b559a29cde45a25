from fractions import Fraction

from hypothesis import strategies as st

from icosilab.golden import GoldenNum

rationals = st.fractions(max_denominator=50).filter(lambda f: abs(f) < 1000)
goldens = st.builds(GoldenNum, rationals, rationals)
nonzero_goldens = goldens.filter(bool)


def G(x, y=0):
    return GoldenNum(Fraction(x), Fraction(y))
