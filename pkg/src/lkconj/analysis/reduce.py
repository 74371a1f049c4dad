"""Conjugation reduction of E_1 words with odd r.

For x = A_1 T A_2 T ... A_r T^{1-r} whose blocks satisfy one of three pairing
patterns, conjugating by a prefix w of x collapses it to a shorter word:

* (a) A_r A_1 = A_2 = ... = A_{r-1}:  w = A_1 T
* (b) A_{r+1-j} A_j = 1 for j <= (r-1)/2:  w = A_1 T ... A_{(r-1)/2} T
* (c) for some 0 <= i <= (r-5)/2, A_{r+1-j} A_j = 1 for j <= i+1 and
  A_{r-i-1} A_{i+2} = A_{i+3} = ... = A_{r-i-2}:  w = A_1 T ... A_{i+2} T

Products of blocks are compared and rewritten inside the alpha subgroup. For
the leading form T^{1-r} A_1 T ... T A_r = T^{1-r} x T^{r-1}, the conjugator
is T^{1-r} w and the reduced word is the same.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator

from ..errors import CaseNotApplicable
from ..words import (
    ALPHA_WORDS,
    LEADING_T,
    NONTRIVIAL_ALPHA,
    TRAILING_T,
    E1Spec,
    Word,
    alpha_canonical,
    alpha_equal,
    t_power,
)


@dataclass(frozen=True)
class Reduction:
    spec: E1Spec
    case: str  # "a", "b" or "c"
    i: int | None
    w: Word
    reduced: Word

    @property
    def label(self) -> str:
        return f"c(i={self.i})" if self.case == "c" else self.case


def _A(spec: E1Spec, j: int) -> tuple:
    return spec.A_list[j - 1]


def _prod(spec: E1Spec, j: int, k: int) -> tuple:
    return _A(spec, j) + _A(spec, k)


def _is_one(letters: tuple) -> bool:
    return alpha_equal(letters, ())


def _check_odd(spec: E1Spec):
    r = spec.r
    if r < 3 or r % 2 == 0:
        raise CaseNotApplicable(f"needs odd r >= 3, got r = {r}")


def _pairs_to_one(spec: E1Spec, count: int) -> str | None:
    r = spec.r
    for j in range(1, count + 1):
        if not _is_one(_prod(spec, r + 1 - j, j)):
            return f"A_{r + 1 - j}A_{j} = 1"
    return None


def _chain(spec: E1Spec, head: tuple[int, int], lo: int, hi: int) -> str | None:
    """A_{head[0]} A_{head[1]} = A_lo = A_{lo+1} = ... = A_hi."""
    first = _prod(spec, *head)
    label = f"A_{head[0]}A_{head[1]}"
    prev_label, prev = label, first
    for j in range(lo, hi + 1):
        if not alpha_equal(prev, _A(spec, j)):
            return f"{prev_label} = A_{j}"
        prev_label, prev = f"A_{j}", _A(spec, j)
    return None


def violated_equation(spec: E1Spec, case: str, i: int | None = None) -> str | None:
    """The first equation of the case hypothesis that fails, or None if the case applies."""
    _check_odd(spec)
    r = spec.r
    if case == "a":
        return _chain(spec, (r, 1), 2, r - 1)
    if case == "b":
        return _pairs_to_one(spec, (r - 1) // 2)
    if case == "c":
        if i is None or not 0 <= i <= (r - 5) // 2:
            raise CaseNotApplicable(f"case (c) needs 0 <= i <= {(r - 5) // 2}, got i = {i}")
        bad = _pairs_to_one(spec, i + 1)
        if bad:
            return bad
        return _chain(spec, (r - i - 1, i + 2), i + 3, r - i - 2)
    raise CaseNotApplicable(f"unknown case {case!r}")


def _blocks_with_t(spec: E1Spec, lo: int, hi: int) -> list:
    letters: list = []
    T = t_power(1).letters
    for j in range(lo, hi + 1):
        letters.extend(_A(spec, j))
        letters.extend(T)
    return letters


def conjugate_reduce(spec: E1Spec, case: str, i: int | None = None) -> Reduction:
    """Conjugator w and reduced word with rho(w^-1 x w) = rho(reduced).

    Raises CaseNotApplicable naming the first violated equation.
    """
    bad = violated_equation(spec, case, i)
    if bad:
        raise CaseNotApplicable(f"case {case}: {bad} does not hold")
    r = spec.r
    if case == "a":
        w = _blocks_with_t(spec, 1, 1)
        reduced = _blocks_with_t(spec, 2, r - 1)
        reduced += list(alpha_canonical(_prod(spec, r, 1)))
        reduced += list(t_power(2 - r).letters)
    elif case == "b":
        w = _blocks_with_t(spec, 1, (r - 1) // 2)
        reduced = list(_A(spec, (r + 1) // 2))
    else:
        w = _blocks_with_t(spec, 1, i + 2)
        reduced = _blocks_with_t(spec, i + 3, r - i - 2)
        reduced += list(alpha_canonical(_prod(spec, r - i - 1, i + 2)))
        reduced += list(t_power(2 * i + 4 - r).letters)
    if spec.form == LEADING_T:
        w = list(t_power(1 - r).letters) + w
    return Reduction(spec, case, i if case == "c" else None, Word(tuple(w), 3), Word(tuple(reduced), 3))


def detect_case(spec: E1Spec) -> tuple[str, int | None] | None:
    """First applicable case in the order b, c (by increasing i), a."""
    _check_odd(spec)
    if violated_equation(spec, "b") is None:
        return "b", None
    for i in range(0, (spec.r - 5) // 2 + 1):
        if violated_equation(spec, "c", i) is None:
            return "c", i
    if violated_equation(spec, "a") is None:
        return "a", None
    return None


def reduce_auto(spec: E1Spec) -> Reduction:
    found = detect_case(spec)
    if found is None:
        raise CaseNotApplicable(f"none of the cases a, b, c applies to {spec.A_list}")
    return conjugate_reduce(spec, *found)


def case_specs(case: str, r: int, i: int | None = None, form: str = TRAILING_T) -> Iterator[E1Spec]:
    """Every E1Spec with r blocks (even total alpha length) that satisfies the case hypothesis."""
    blocks = [w.letters for w in NONTRIVIAL_ALPHA]
    for A in product(blocks, repeat=r):
        if sum(len(a) for a in A) % 2:
            continue
        spec = E1Spec(A, form)
        if violated_equation(spec, case, i) is None:
            yield spec


_INV = {"a1": "a1", "a2": "a2", "a1a2": "a2a1", "a2a1": "a1a2", "a1a2a1": "a1a2a1"}


def _template(case: str, r: int, i: int | None, variant: int) -> tuple:
    """Block names for one hand-built member of a case (two variants per case)."""
    W = ALPHA_WORDS
    if case == "a":
        first, last, mid = ("a2", "a1", "a1a2") if variant == 0 else ("a1", "a2", "a2a1")
        names = [first] + [mid] * (r - 2) + [last]
    elif case == "b":
        pair, mid = ("a1", "a1a2") if variant == 0 else ("a1a2", "a2a1")
        h = (r - 1) // 2
        names = [pair] * h + [mid] + [_INV[pair]] * h
    else:
        pair = "a1" if variant == 0 else "a1a2"
        lo, hi, mid = ("a2", "a1", "a1a2") if variant == 0 else ("a1", "a2", "a2a1")
        names = [pair] * (i + 1) + [lo] + [mid] * (r - 2 * i - 4) + [hi] + [_INV[pair]] * (i + 1)
    return tuple(W[n] for n in names)


def reduction_corpus() -> list[tuple[E1Spec, str, int | None]]:
    """Case-satisfying E1Specs: (a) and (b) at r = 3, 5, 7, (c) at (r, i) = (5, 0), (7, 0), (7, 1).

    Two block patterns per case, each in both the trailing and leading form.
    """
    targets = [("a", r, None) for r in (3, 5, 7)] + [("b", r, None) for r in (3, 5, 7)]
    targets += [("c", 5, 0), ("c", 7, 0), ("c", 7, 1)]
    out = []
    for case, r, i in targets:
        for variant in (0, 1):
            for form in (TRAILING_T, LEADING_T):
                spec = E1Spec(_template(case, r, i, variant), form)
                bad = violated_equation(spec, case, i)
                if bad is not None:
                    raise AssertionError(f"corpus template for case {case} r={r} violates {bad}")
                out.append((spec, case, i))
    return out


def alpha_name(letters: tuple) -> str:
    for name, v in ALPHA_WORDS.items():
        if v == tuple(letters):
            return name
    return " ".join(str(g) for g in letters)
