from hypothesis import strategies as st

from lkconj.scalars import LaurentPoly
from lkconj.words import Gen, Word

EXPONENTS = st.integers(min_value=-8, max_value=8)
COEFFS = st.integers(min_value=-99, max_value=99)

polys = st.dictionaries(EXPONENTS, COEFFS, max_size=5).map(LaurentPoly)

T_LETTERS = [Gen.alpha(1), Gen.alpha(2), Gen.t(1), Gen.t(-1)]
SIGMA_LETTERS = [Gen.alpha(1), Gen.alpha(2), Gen.sigma(1), Gen.sigma(1, -1), Gen.sigma(2), Gen.sigma(2, -1)]


def words(max_len=8, letters=None):
    pool = letters or T_LETTERS + SIGMA_LETTERS[2:]
    return st.lists(st.sampled_from(pool), max_size=max_len).map(lambda ls: Word(tuple(ls), 3))
