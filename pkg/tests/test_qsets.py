from fractions import Fraction

import pytest

from lkconj.analysis.qsets import (
    QSetId,
    prop5_expected_spectrum,
    prop5_witness,
    qset_candidates,
    qset_expressions,
    qset_member,
    s_witness_spectrum,
)
from lkconj.errors import ExcludedPoint, UnsupportedSet, ZeroQ
from lkconj.matrices import mat_eigenvalues, multiset_close
from lkconj.representation import RepContext
from lkconj.scalars import ScalarMode
from lkconj.words import parse_word

SYM = RepContext(3)
PROBES = (2, 3 + 1j, 0.3 - 0.7j)
GRID = [complex(re, im) for re in (-1.5, -0.5, 0.3, 1.0, 2.5) for im in (-1.0, 0.0, 0.5, 1.5)]


def spectrum(word, q):
    return mat_eigenvalues(SYM.rep_word(word).specialize(ScalarMode.complex(q)))


def test_membership_examples():
    assert qset_member(QSetId("P", 2), 2)
    assert qset_member(QSetId("R", 2), 0.5)
    for n in (1, 2, 3):
        assert qset_member(QSetId("S", n), Fraction(1, 2))
    assert not qset_member(QSetId("S", 1), 2)
    assert not qset_member(QSetId("P", 1), 2)  # i^2 = -1


def test_membership_errors():
    with pytest.raises(ExcludedPoint):
        qset_member(QSetId("P", 2), 4)
    with pytest.raises(ExcludedPoint):
        qset_member(QSetId("R", 2), 0.25)
    with pytest.raises(ZeroQ):
        qset_member(QSetId("S", 2), 0)
    with pytest.raises(ValueError):
        QSetId("Q", 1)


def test_expressions_at_two():
    # (2q)^-2k (q^2 - 2q -+ sqrt(q-4) q^{3/2})^2k at q = 2 is (-+ i)^2k
    vals = qset_expressions(QSetId("P", 1), 2)
    assert all(abs(v + 1) < 1e-12 for v in vals)


def test_witness_words():
    assert prop5_witness(QSetId("P", 2)) == parse_word("a2 T a2 T a2 T a2 T T^-4")
    assert prop5_witness(QSetId("R", 2)) == parse_word("a1 a2 a1 T " * 4 + "T^-4")
    assert prop5_witness(QSetId("S", 1)) == parse_word("T a1 a2 a1 T a1 a2 a1 T^-2")


def test_expected_spectrum_examples():
    assert multiset_close(prop5_expected_spectrum(QSetId("P", 1), 2), [1, -1, -1], 1e-12)
    assert multiset_close(prop5_expected_spectrum(QSetId("R", 1), 0.5), [1, -1, -1], 1e-12)
    assert multiset_close(prop5_expected_spectrum(QSetId("P", 2), 2), [1, 1, 1], 1e-12)
    with pytest.raises(UnsupportedSet):
        prop5_expected_spectrum(QSetId("S", 1), 2)


@pytest.mark.parametrize("tag", ["P", "R"])
@pytest.mark.parametrize("k", [1, 2])
@pytest.mark.parametrize("q", PROBES)
def test_witness_spectrum_matches_expressions(tag, k, q):
    s = QSetId(tag, k)
    assert multiset_close(spectrum(prop5_witness(s), q), prop5_expected_spectrum(s, q), 1e-8)


@pytest.mark.parametrize("tag", ["P", "R"])
@pytest.mark.parametrize("k", [2, 4])
def test_members_make_witness_unipotent(tag, k):
    s = QSetId(tag, k)
    grid = qset_candidates(s) + GRID
    assert len(grid) >= 20
    members = 0
    for q in grid:
        if not qset_member(s, q):
            continue
        members += 1
        assert multiset_close(spectrum(prop5_witness(s), q), [1, 1, 1], 1e-8)
        m = SYM.rep_word(prop5_witness(s)).specialize(ScalarMode.complex(q))
        assert m.is_identity(1e-8)
    assert members >= 1


@pytest.mark.parametrize("n", [1, 2])
@pytest.mark.parametrize("q", PROBES)
def test_s_witness_follows_r_type_expressions(n, q):
    got = spectrum(prop5_witness(QSetId("S", n)), q)
    assert multiset_close(got, s_witness_spectrum(n, q), 1e-8)


def test_s_members_do_not_force_unipotent_witness():
    # q = (1 + i)/2 solves ((1-q)/q)^4 = 1, yet the S witness keeps a nontrivial spectrum
    q = (1 + 1j) / 2
    s = QSetId("S", 2)
    assert qset_member(s, q)
    assert not multiset_close(spectrum(prop5_witness(s), q), [1, 1, 1], 1e-4)
    # at q = 1/2 the square root vanishes and the witness has eigenvalue 1 only, but is not I
    m = SYM.rep_word(prop5_witness(QSetId("S", 1))).specialize(ScalarMode.rational(Fraction(1, 2)))
    assert not m.is_identity()


def test_candidates_are_members():
    for tag in "PRS":
        for k in (2, 4):
            for q in qset_candidates(QSetId(tag, k)):
                assert qset_member(QSetId(tag, k), q, 1e-7)
    assert any(abs(q - (2 + 2 ** 0.5)) < 1e-9 for q in qset_candidates(QSetId("P", 4)))
