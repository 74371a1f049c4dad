import pytest

import oracle
from lkconj.analysis.reduce import (
    case_specs,
    conjugate_reduce,
    detect_case,
    reduction_corpus,
    reduce_auto,
    violated_equation,
)
from lkconj.errors import CaseNotApplicable
from lkconj.matrices import RingMatrix
from lkconj.representation import RepContext
from lkconj.words import A1, A2, LEADING_T, TRAILING_T, E1Spec, build_from_spec, parse_word, t_power

SYM = RepContext(3)


def holds(spec, red, x=None):
    x = x or build_from_spec(spec)
    return SYM.rep_word(red.w.inverse() * x * red.w) == SYM.rep_word(red.reduced)


def test_case_b_r3_odd_length_example():
    # (a1, a2, a1) has odd alpha length, so it is not an E_1 word; the identity still holds
    spec = E1Spec(((A1,), (A2,), (A1,)))
    red = conjugate_reduce(spec, "b")
    assert red.w == parse_word("a1 T")
    assert red.reduced == parse_word("a2")
    x = parse_word("a1 T a2 T a1") * t_power(-2)
    assert holds(spec, red, x)


def test_case_a_r3_example():
    spec = E1Spec(((A2,), (A1, A2), (A1,)))
    red = conjugate_reduce(spec, "a")
    assert red.w == parse_word("a2 T")
    assert red.reduced == parse_word("a1 a2 T a1 a2 T^-1")
    assert holds(spec, red)


def test_case_c_r5_example():
    # A5 A1 = 1, A4 A2 = A3
    spec = E1Spec(((A1,), (A2,), (A1, A2), (A1,), (A1,)))
    red = conjugate_reduce(spec, "c", 0)
    assert red.label == "c(i=0)"
    assert red.w == parse_word("a1 T a2 T")
    assert red.reduced == parse_word("a1 a2 T a1 a2 T^-1")
    assert holds(spec, red)


def test_violation_is_named():
    spec = E1Spec(((A1,), (A1,), (A1,), (A2,), (A2,)))
    assert violated_equation(spec, "b") == "A_5A_1 = 1"
    with pytest.raises(CaseNotApplicable, match="A_5A_1 = 1"):
        conjugate_reduce(spec, "b")
    with pytest.raises(CaseNotApplicable):
        conjugate_reduce(E1Spec(((A1,), (A1,))), "a")
    with pytest.raises(CaseNotApplicable):
        conjugate_reduce(spec, "c", 1)


def test_detect_order():
    # satisfies both (b) and (a): A3 A1 = 1 = ... and b is tried first
    spec = E1Spec(((A1, A2), (A1, A2, A1), (A2, A1)))
    assert violated_equation(spec, "b") is None
    assert detect_case(spec) == ("b", None)
    assert reduce_auto(spec).case == "b"
    none = E1Spec(((A1,), (A1,), (A1, A2)))
    assert detect_case(none) is None
    with pytest.raises(CaseNotApplicable):
        reduce_auto(none)


def test_corpus_covers_required_cases():
    corpus = reduction_corpus()
    assert len(corpus) >= 12
    keys = {(case, spec.r, i) for spec, case, i in corpus}
    for r in (3, 5, 7):
        assert ("a", r, None) in keys and ("b", r, None) in keys
    assert {("c", 5, 0), ("c", 7, 0), ("c", 7, 1)} <= keys
    assert {spec.form for spec, _, _ in corpus} == {TRAILING_T, LEADING_T}


@pytest.mark.parametrize("spec, case, i", reduction_corpus())
def test_corpus_reduction(spec, case, i):
    red = conjugate_reduce(spec, case, i)
    assert holds(spec, red)
    assert SYM.rep_word(red.reduced) != RingMatrix.identity(3)


def test_corpus_reduction_against_sympy():
    for spec, case, i in reduction_corpus()[::6]:
        red = conjugate_reduce(spec, case, i)
        x = build_from_spec(spec)
        assert oracle.rho(red.w.inverse() * x * red.w) == oracle.rho(red.reduced)


@pytest.mark.parametrize("case, r, i", [("a", 3, None), ("b", 3, None), ("a", 5, None), ("b", 5, None), ("c", 5, 0)])
@pytest.mark.parametrize("form", [TRAILING_T, LEADING_T])
def test_every_case_member(case, r, i, form):
    count = 0
    for spec in case_specs(case, r, i, form):
        red = conjugate_reduce(spec, case, i)
        assert holds(spec, red)
        assert not SYM.rep_word(red.reduced).is_identity()
        count += 1
    assert count > 0
