"""Words in the generators of C_n.

Letters are sigma_i^{+-1}, alpha_i (an involution) and, for n = 3 only, the
auxiliary generator T = sigma_2 alpha_2 alpha_1 and its inverse. Words store
unrolled letters; exponents only exist in the text grammar::

    s<k>  a<k>  T   each with an optional ^<int> suffix (negative for s and T only)
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence

from .errors import GeneratorIndexError, SpecInvalid, TOnlyForN3, WordSyntaxError


class Gen(NamedTuple):
    kind: str  # "s", "a" or "T"
    index: int  # 0 for T
    power: int = 1  # +1 or -1; always +1 for alpha

    @classmethod
    def sigma(cls, i: int, power: int = 1) -> "Gen":
        return cls("s", i, power)

    @classmethod
    def alpha(cls, i: int) -> "Gen":
        return cls("a", i, 1)

    @classmethod
    def t(cls, power: int = 1) -> "Gen":
        return cls("T", 0, power)

    def inverse(self) -> "Gen":
        if self.kind == "a":
            return self
        return Gen(self.kind, self.index, -self.power)

    def __str__(self):
        name = "T" if self.kind == "T" else f"{self.kind}{self.index}"
        return name if self.power == 1 else f"{name}^-1"


A1 = Gen.alpha(1)
A2 = Gen.alpha(2)
T = Gen.t()
T_INV = Gen.t(-1)


@dataclass(frozen=True)
class Word:
    letters: tuple = ()
    n: int = 3

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        for g in self.letters:
            _check_gen(g, self.n)

    @classmethod
    def of(cls, *letters: Gen, n: int = 3) -> "Word":
        return cls(tuple(letters), n)

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        if self.n != other.n:
            raise ValueError(f"words over C_{self.n} and C_{other.n}")
        return Word(self.letters + other.letters, self.n)

    def __pow__(self, k: int) -> "Word":
        if k < 0:
            return self.inverse() ** (-k)
        return Word(self.letters * k, self.n)

    def inverse(self) -> "Word":
        return Word(tuple(g.inverse() for g in reversed(self.letters)), self.n)

    @property
    def uses_t(self) -> bool:
        return any(g.kind == "T" for g in self.letters)

    def __str__(self):
        return render_word(self)

    def __repr__(self):
        return f"Word({render_word(self)!r}, n={self.n})"


def _check_gen(g: Gen, n: int):
    if g.kind == "T":
        if n != 3:
            raise TOnlyForN3("T is only defined in C_3")
        if g.power not in (1, -1):
            raise ValueError(f"bad letter {g!r}")
        return
    if g.kind not in ("s", "a") or g.power not in (1, -1) or (g.kind == "a" and g.power != 1):
        raise ValueError(f"bad letter {g!r}")
    if not 1 <= g.index <= n - 1:
        raise GeneratorIndexError(f"{g.kind}{g.index} does not exist in C_{n}")


def render_word(w: Word) -> str:
    """Token form with runs compressed, e.g. ``a2 T a2 T^-3``; the empty word is ``e``."""
    if not w.letters:
        return "e"
    out = []
    run_gen, run = None, 0
    for g in w.letters + (None,):
        if g is not None and run_gen is not None and g == run_gen:
            run += 1
            continue
        if run_gen is not None:
            name = "T" if run_gen.kind == "T" else f"{run_gen.kind}{run_gen.index}"
            exp = run * run_gen.power
            out.append(name if exp == 1 else f"{name}^{exp}")
        run_gen, run = g, 1
    return " ".join(out)


_TOKEN = re.compile(r"(s|a)(\d+)|(T)")


def parse_word(text: str, n: int = 3, allow_t: bool = True) -> Word:
    """Parse whitespace-separated tokens into a Word with exponents unrolled."""
    letters: list[Gen] = []
    for m in re.finditer(r"\S+", text):
        tok, pos = m.group(), m.start()
        if tok == "e":
            continue
        base, _, exp_text = tok.partition("^")
        mm = _TOKEN.fullmatch(base)
        if not mm:
            raise WordSyntaxError(f"unknown generator {base!r}", pos)
        if exp_text:
            if not re.fullmatch(r"-?\d+", exp_text):
                raise WordSyntaxError(f"bad exponent {exp_text!r}", pos)
            exp = int(exp_text)
        else:
            exp = 1
        if mm.group(3):
            if not allow_t:
                raise WordSyntaxError("T is not accepted in the sigma alphabet", pos)
            if n != 3:
                raise TOnlyForN3("T is only defined in C_3")
            letters.extend([Gen.t(1 if exp > 0 else -1)] * abs(exp))
            continue
        kind, idx = mm.group(1), int(mm.group(2))
        if not 1 <= idx <= n - 1:
            raise GeneratorIndexError(f"{kind}{idx} does not exist in C_{n} (position {pos})")
        if kind == "a":
            if exp < 0:
                raise WordSyntaxError("negative exponents are not allowed on alpha", pos)
            letters.extend([Gen.alpha(idx)] * exp)
        else:
            letters.extend([Gen.sigma(idx, 1 if exp > 0 else -1)] * abs(exp))
    return Word(tuple(letters), n)


def word_length(w: Word) -> int:
    """Sum of absolute powers, i.e. the number of unrolled letters."""
    return len(w.letters)


_T_EXPANSION = (Gen.sigma(2), A2, A1)
_T_INV_EXPANSION = (A1, A2, Gen.sigma(2, -1))


def expand_T(w: Word) -> Word:
    """Rewrite T as s2 a2 a1 and T^-1 as a1 a2 s2^-1."""
    out: list[Gen] = []
    for g in w.letters:
        if g.kind == "T":
            out.extend(_T_EXPANSION if g.power == 1 else _T_INV_EXPANSION)
        else:
            out.append(g)
    return Word(tuple(out), w.n)


def free_reduce(w: Word) -> Word:
    """Cancel adjacent g g^-1 pairs (alpha_i alpha_i included) until none remain."""
    stack: list[Gen] = []
    for g in w.letters:
        if stack and stack[-1] == g.inverse():
            stack.pop()
        else:
            stack.append(g)
    return Word(tuple(stack), w.n)


class GenCounts(NamedTuple):
    a1: int
    a2: int
    t: int
    i: int
    sigma_count: int
    sigma_exponent_sum: int

    @property
    def alpha_count(self) -> int:
        return self.a1 + self.a2


def gen_counts(w: Word) -> GenCounts:
    a1 = a2 = t = ti = sc = se = 0
    alpha_total = 0
    for g in w.letters:
        if g.kind == "a":
            alpha_total += 1
            if g.index == 1:
                a1 += 1
            elif g.index == 2:
                a2 += 1
        elif g.kind == "T":
            if g.power == 1:
                t += 1
            else:
                ti += 1
        else:
            sc += 1
            se += g.power
    if w.n != 3:
        # a1/a2 only name the C_3 generators; fold the rest into a2 so parity is kept
        a2 = alpha_total - a1
    return GenCounts(a1, a2, t, ti, sc, se)


# -- the alpha subgroup ------------------------------------------------------

ALPHA_WORDS = {
    "e": (),
    "a1": (A1,),
    "a2": (A2,),
    "a1a2": (A1, A2),
    "a2a1": (A2, A1),
    "a1a2a1": (A1, A2, A1),
}

NONTRIVIAL_ALPHA = tuple(Word(v) for k, v in ALPHA_WORDS.items() if k != "e")


@dataclass(frozen=True)
class AlphaElement:
    word: Word
    is_identity: bool


def _alpha_perm(letters: Sequence[Gen]) -> tuple:
    """Permutation of {0,1,2} induced on the basis e1,e2,e3 by an alpha word."""
    swaps = {1: (0, 2, 1), 2: (1, 0, 2)}
    perm = (0, 1, 2)
    for g in letters:
        s = swaps[g.index]
        perm = tuple(s[p] for p in perm)
    return perm


def enumerate_alpha_subgroup() -> list[AlphaElement]:
    """Close {a1, a2} under multiplication, deduplicating by the image permutation matrix.

    Words are explored in order of length, so each class keeps its shortest (then
    lexicographically first) representative. Returns identity plus five elements.
    """
    from .representation import RepContext

    ctx = RepContext(3)
    seen: dict = {}
    frontier = [()]
    order = []
    while frontier:
        nxt = []
        for letters in frontier:
            key = ctx.rep_word(Word(letters)).rows
            if key in seen:
                continue
            seen[key] = letters
            order.append(letters)
            for g in (A1, A2):
                nxt.append(letters + (g,))
        frontier = nxt
    return [AlphaElement(Word(w), len(w) == 0) for w in order]


def alpha_canonical(letters: Sequence[Gen]) -> tuple:
    """Shortest canonical representative (from ALPHA_WORDS) of a product of alphas."""
    if any(g.kind != "a" for g in letters):
        raise ValueError("alpha_canonical takes alpha letters only")
    target = _alpha_perm(letters)
    for v in ALPHA_WORDS.values():
        if _alpha_perm(v) == target:
            return v
    raise AssertionError("unreachable: S_3 has six elements")


def alpha_equal(u: Sequence[Gen], v: Sequence[Gen]) -> bool:
    return _alpha_perm(tuple(u)) == _alpha_perm(tuple(v))


# -- E and E_1 word families -------------------------------------------------

TRAILING_T = "trailing"
LEADING_T = "leading"


def _as_alpha(a) -> tuple:
    letters = tuple(a.letters) if isinstance(a, Word) else tuple(a)
    if not letters or any(g.kind != "a" for g in letters) or letters not in ALPHA_WORDS.values():
        raise SpecInvalid(f"{a!r} is not one of a1, a2, a1a2, a2a1, a1a2a1")
    return letters


@dataclass(frozen=True)
class ESpec:
    """A_1 T^{s_1} ... A_r T^{s_r} (trailing) or T^{s_1} A_1 ... T^{s_r} A_r (leading)."""

    A_list: tuple
    s_list: tuple
    form: str = TRAILING_T

    def __post_init__(self):
        object.__setattr__(self, "A_list", tuple(_as_alpha(a) for a in self.A_list))
        object.__setattr__(self, "s_list", tuple(int(s) for s in self.s_list))

    @property
    def r(self) -> int:
        return len(self.A_list)


@dataclass(frozen=True)
class E1Spec:
    """A_1 T A_2 T ... A_r T^{1-r} (trailing) or T^{1-r} A_1 T ... T A_r (leading)."""

    A_list: tuple
    form: str = TRAILING_T

    def __post_init__(self):
        object.__setattr__(self, "A_list", tuple(_as_alpha(a) for a in self.A_list))

    @property
    def r(self) -> int:
        return len(self.A_list)

    def to_espec(self) -> ESpec:
        r = self.r
        if self.form == TRAILING_T:
            s = (1,) * (r - 1) + (1 - r,)
        else:
            s = (1 - r,) + (1,) * (r - 1)
        return ESpec(self.A_list, s, self.form)


def build_from_spec(spec) -> Word:
    """Concrete T/alpha word for an ESpec or E1Spec, after checking the parity and exponent-sum conditions."""
    espec = spec.to_espec() if isinstance(spec, E1Spec) else spec
    if len(espec.s_list) != espec.r or espec.r == 0:
        raise SpecInvalid("need r >= 1 alpha blocks and r exponents")
    if sum(espec.s_list) != 0:
        raise SpecInvalid(f"exponent sum {sum(espec.s_list)} != 0")
    if sum(len(a) for a in espec.A_list) % 2:
        raise SpecInvalid("total alpha length is odd")
    if espec.form not in (TRAILING_T, LEADING_T):
        raise SpecInvalid(f"unknown form {espec.form!r}")
    letters: list[Gen] = []
    for a, s in zip(espec.A_list, espec.s_list):
        tpow = [Gen.t(1 if s > 0 else -1)] * abs(s)
        if espec.form == TRAILING_T:
            letters.extend(a)
            letters.extend(tpow)
        else:
            letters.extend(tpow)
            letters.extend(a)
    return Word(tuple(letters), 3)


def t_power(k: int) -> Word:
    return Word((Gen.t(1 if k > 0 else -1),) * abs(k), 3)


def alpha_word(letters: Iterable[Gen]) -> Word:
    return Word(tuple(letters), 3)


# -- kernel-candidate classification ------------------------------------------


@dataclass(frozen=True)
class Classification:
    form: str  # "i", "ii", "iii", "iv"
    eligible: bool
    reason: str
    blocks: tuple = field(default=(), compare=False)


def split_blocks(w: Word) -> list[tuple[str, tuple]]:
    """Split a T/alpha word into maximal alpha runs ("A", letters) and T runs ("T", exponent)."""
    blocks: list[tuple[str, object]] = []
    for g in w.letters:
        if g.kind == "s":
            raise ValueError("expected a word in the T/alpha alphabet")
        if g.kind == "a":
            if blocks and blocks[-1][0] == "A":
                blocks[-1] = ("A", blocks[-1][1] + (g,))
            else:
                blocks.append(("A", (g,)))
        else:
            if blocks and blocks[-1][0] == "T":
                blocks[-1] = ("T", blocks[-1][1] + g.power)
            else:
                blocks.append(("T", g.power))
    return [b for b in blocks if not (b[0] == "T" and b[1] == 0)]


def classify_kernel_candidate(w: Word) -> Classification:
    """Sort a freely reduced T/alpha word into the four shapes of the kernel classification.

    Shapes: (i) alpha-only, (ii) T^k, (iii) starts with an alpha block,
    (iv) starts with a T block. Only (iii)/(iv) with T-exponent sum 0 and even
    alpha length can have determinant 1.
    """
    blocks = split_blocks(free_reduce(w))
    counts = gen_counts(w)
    if not blocks:
        return Classification("i", False, "empty word is the identity element", ())
    kinds = {b[0] for b in blocks}
    if kinds == {"A"}:
        return Classification("i", False, "alpha-only word maps to a nontrivial permutation matrix or is trivial", tuple(blocks))
    if kinds == {"T"}:
        k = blocks[0][1]
        return Classification("ii", False, f"det(rho(T^{k})) = (-q)^{3 * k} != 1", tuple(blocks))
    form = "iii" if blocks[0][0] == "A" else "iv"
    s_sum = counts.t - counts.i
    if s_sum != 0:
        return Classification(form, False, f"T-exponent sum {s_sum} != 0 so det = ±q^{3 * s_sum}", tuple(blocks))
    if counts.alpha_count % 2:
        return Classification(form, False, "odd alpha length so det = -1", tuple(blocks))
    return Classification(form, True, "det = 1: exponent sum 0 and even alpha length", tuple(blocks))
