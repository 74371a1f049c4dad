import pytest
from hypothesis import given, settings

from conftest import words
from lkconj.errors import GeneratorIndexError, SpecInvalid, TOnlyForN3, WordSyntaxError
from lkconj.representation import RepContext
from lkconj.scalars import ScalarMode
from lkconj.words import (
    A1,
    A2,
    LEADING_T,
    T,
    T_INV,
    E1Spec,
    ESpec,
    Gen,
    Word,
    build_from_spec,
    classify_kernel_candidate,
    enumerate_alpha_subgroup,
    expand_T,
    free_reduce,
    gen_counts,
    parse_word,
    word_length,
)

EX6 = "a2 T a2 T a2 T a2 T T^-4"


def test_word_length():
    assert word_length(parse_word("s1^5 a2 s2^-2 a1 s1^-2")) == 11
    assert word_length(parse_word("")) == 0
    assert word_length(expand_T(parse_word("T^-4"))) == 12


def test_parse():
    w = parse_word(EX6)
    assert w.letters == (A2, T) * 4 + (T_INV,) * 4
    assert parse_word("").letters == ()
    assert parse_word("e") == parse_word("")
    with pytest.raises(GeneratorIndexError):
        parse_word("s3", 3)
    assert len(parse_word("s3", 4)) == 1


def test_parse_errors_carry_position():
    with pytest.raises(WordSyntaxError) as exc:
        parse_word("a1 x2")
    assert exc.value.position == 3
    with pytest.raises(WordSyntaxError):
        parse_word("a1^-1")
    with pytest.raises(WordSyntaxError):
        parse_word("T", allow_t=False)
    with pytest.raises(TOnlyForN3):
        parse_word("T", 4)


def test_render_round_trip():
    for text in [EX6, "s1^-2 a1 T^3", ""]:
        w = parse_word(text)
        assert parse_word(str(w)) == w
    assert str(parse_word("")) == "e"


def test_expand_T():
    assert expand_T(parse_word("T")) == parse_word("s2 a2 a1")
    assert expand_T(parse_word("T^-1")) == parse_word("a1 a2 s2^-1")
    six = expand_T(parse_word("T T^-1"))
    assert len(six) == 6 and free_reduce(six) == Word()


def test_expand_T_preserves_rho():
    ctx = RepContext(3)
    for text in ["T", "T^-1", EX6, "a1 T^-3 s1"]:
        w = parse_word(text)
        assert ctx.rep_word(expand_T(w)) == ctx.rep_word(w)


def test_free_reduce():
    assert free_reduce(parse_word("a1 a1")) == Word()
    assert free_reduce(parse_word("s1 s1^-1 s2")) == parse_word("s2")
    rel = parse_word("a1 a2 a1 a2 a1 a2")
    assert free_reduce(rel) == rel


@settings(max_examples=300, deadline=None)
@given(words(max_len=14))
def test_free_reduce_idempotent(w):
    r = free_reduce(w)
    assert free_reduce(r) == r
    assert len(r) <= len(w)
    assert all(r.letters[k + 1] != r.letters[k].inverse() for k in range(len(r) - 1))


def test_alpha_subgroup():
    els = enumerate_alpha_subgroup()
    assert len(els) == 6
    assert sum(e.is_identity for e in els) == 1
    assert {str(e.word) for e in els} == {"e", "a1", "a2", "a1 a2", "a2 a1", "a1 a2 a1"}
    ctx = RepContext(3, ScalarMode.rational(3))
    assert ctx.rep_word(parse_word("a2 a1 a2")) == ctx.rep_word(parse_word("a1 a2 a1"))
    assert ctx.rep_word(parse_word("a1 a2 a1 a2")) == ctx.rep_word(parse_word("a2 a1"))


def test_alpha_images_are_the_six_permutation_matrices():
    from itertools import permutations

    ctx = RepContext(3, ScalarMode.rational(5))
    images = {ctx.rep_word(e.word).rows for e in enumerate_alpha_subgroup()}
    perms = set()
    for p in permutations(range(3)):
        perms.add(tuple(tuple(1 if p[i] == j else 0 for j in range(3)) for i in range(3)))
    assert images == perms


def test_build_from_spec():
    assert build_from_spec(E1Spec(((A1,), (A1,)))) == parse_word("a1 T a1 T^-1")
    ex = build_from_spec(ESpec(((A2,),) * 4, (1, 1, 1, -3)))
    assert ex == free_reduce(parse_word(EX6))
    with pytest.raises(SpecInvalid):
        build_from_spec(ESpec(((A1,), (A2,)), (1, -2)))
    with pytest.raises(SpecInvalid):
        build_from_spec(E1Spec(((A1,), (A2,), (A1,))))
    lead = build_from_spec(E1Spec(((A1,), (A2,), (A1,), (A2,)), LEADING_T))
    assert lead == parse_word("T^-3 a1 T a2 T a1 T a2")


def test_e1_words_are_eligible():
    from itertools import product

    blocks = [(A1,), (A2,), (A1, A2), (A2, A1), (A1, A2, A1)]
    for r in (2, 3):
        for A in product(blocks, repeat=r):
            if sum(map(len, A)) % 2:
                continue
            for form in ("trailing", LEADING_T):
                w = build_from_spec(E1Spec(A, form))
                c = gen_counts(w)
                assert c.t - c.i == 0
                assert classify_kernel_candidate(w).eligible


def test_gen_counts():
    c = gen_counts(parse_word(EX6))
    assert (c.a1, c.a2, c.t, c.i) == (0, 4, 4, 4)
    assert gen_counts(Word()) == (0, 0, 0, 0, 0, 0)
    c = gen_counts(parse_word("s1^5 s2^-2"))
    assert (c.sigma_count, c.sigma_exponent_sum) == (7, 3)


def test_classify():
    c = classify_kernel_candidate(parse_word("T^3"))
    assert (c.form, c.eligible) == ("ii", False)
    assert "(-q)^9" in c.reason
    c = classify_kernel_candidate(parse_word("a1"))
    assert (c.form, c.eligible) == ("i", False)
    c = classify_kernel_candidate(parse_word("a1 T a1 T^-1"))
    assert (c.form, c.eligible) == ("iii", True)
    c = classify_kernel_candidate(parse_word("T a1 T^-1 a2"))
    assert (c.form, c.eligible) == ("iv", True)
    assert not classify_kernel_candidate(parse_word("a1 T a1 T")).eligible
    assert not classify_kernel_candidate(parse_word("a1 T a2 a1 T^-1")).eligible


def test_gen_validation():
    with pytest.raises(ValueError):
        Word((Gen("a", 1, -1),))
    with pytest.raises(TOnlyForN3):
        Word((T,), 4)
