"""Printed closed forms for rho of the constant-block E_1 words.

For a fixed alpha block A the two words are ``(A T)^r T^{-r}`` (form "i") and
``T^{-r} (T A)^r`` (form "ii"). A printed form is a 3x3 pattern whose entries
are Laurent polynomials or ``None`` (unconstrained). Some cases only make a
claim about one entry at one specific q; those live in :data:`SPECIAL_ENTRIES`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..errors import UnknownCase
from ..matrices import RingMatrix, render_scalar
from ..scalars import ONE, Q, ZERO, LaurentPoly, ScalarMode
from ..words import A1, A2, T, Word, t_power

BLOCKS = {
    "a": (A1,),
    "b": (A2,),
    "c": (A1, A2),
    "d": (A2, A1),
    "e": (A1, A2, A1),
}

CASE_IDS = tuple(f"{b}.{f}" for b in BLOCKS for f in ("i", "ii"))


def _split(case_id: str) -> tuple[str, str]:
    block, _, form = case_id.partition(".")
    if block not in BLOCKS or form not in ("i", "ii"):
        raise UnknownCase(case_id)
    return block, form


def block_word(case_id: str, r: int) -> Word:
    """(A T)^r T^{-r} for form i, T^{-r} (T A)^r for form ii."""
    block, form = _split(case_id)
    a = Word(BLOCKS[block], 3)
    if form == "i":
        return (a * Word((T,), 3)) ** r * t_power(-r)
    return t_power(-r) * (Word((T,), 3) * a) ** r


def constant_block_word(case_id: str, k: int, odd_r: bool = False) -> Word:
    """The word for r = 2k, or r = 2k + 1 when ``odd_r`` (only the c and d blocks allow odd r)."""
    block, _ = _split(case_id)
    if odd_r and block not in ("c", "d"):
        raise UnknownCase(f"{case_id} has even total alpha length only for r = 2k")
    return block_word(case_id, 2 * k + 1 if odd_r else 2 * k)


@dataclass(frozen=True)
class PrintedForm:
    case_id: str
    k: int
    odd_r: bool
    entries: tuple  # 3x3, LaurentPoly or None

    @property
    def is_full(self) -> bool:
        return all(x is not None for row in self.entries for x in row)

    def positions(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(3) for j in range(3) if self.entries[i][j] is not None]

    def to_matrix(self) -> RingMatrix:
        if not self.is_full:
            raise ValueError(f"{self.case_id} is a partial pattern")
        return RingMatrix(tuple(tuple(r) for r in self.entries), ScalarMode.symbolic())

    def mismatches(self, m: RingMatrix) -> list[tuple[int, int, LaurentPoly, LaurentPoly]]:
        """(row, col, printed, actual) for every constrained entry that differs; 1-based positions."""
        out = []
        for i, j in self.positions():
            if m[i, j] != self.entries[i][j]:
                out.append((i + 1, j + 1, self.entries[i][j], m[i, j]))
        return out

    def matches(self, m: RingMatrix) -> bool:
        return not self.mismatches(m)

    def render(self) -> str:
        cells = [["*" if x is None else render_scalar(x) for x in row] for row in self.entries]
        width = max(len(c) for row in cells for c in row)
        return "\n".join("[ " + "  ".join(c.rjust(width) for c in row) + " ]" for row in cells)


def _qpow(e: int) -> LaurentPoly:
    return LaurentPoly.monomial(1, e)


def _pattern(**cells) -> list[list]:
    grid: list[list] = [[None] * 3 for _ in range(3)]
    for key, value in cells.items():
        i, j = int(key[1]) - 1, int(key[2]) - 1
        grid[i][j] = value
    return grid


def theorem8_closed_form(case_id: str, k: int, odd_r: bool = False) -> PrintedForm:
    """The printed matrix or entry pattern for ``case_id`` at this k.

    ``odd_r`` selects r = 2k + 1 for the c and d blocks. The b and e.i blocks
    print a symbolic pattern only for odd k; for even k they print a single
    entry at q = 4 or q = 1/4 (see :func:`special_entry`).
    """
    block, form = _split(case_id)
    if k < 1:
        raise ValueError("k must be >= 1")
    up, down = _qpow(2 * k), _qpow(-2 * k)
    if odd_r and block not in ("c", "d"):
        raise UnknownCase(f"{case_id} is printed for r = 2k only")
    if block == "a":
        q2m1 = Q * Q - ONE
        if form == "i":
            grid = [[ONE, q2m1, down - ONE], [ZERO, up, ZERO], [ZERO, ZERO, down]]
        else:
            grid = [[ONE, down - ONE, q2m1], [ZERO, down, ZERO], [ZERO, ZERO, up]]
    elif block in ("b",) or (block == "e" and form == "i"):
        if k % 2 == 0:
            raise UnknownCase(f"{case_id} prints no symbolic pattern for even k; see special_entry")
        grid = _pattern(e11=ZERO)
    elif block == "c":
        if form == "i":
            grid = _pattern(e22=ZERO) if odd_r else _pattern(e22=up)
        else:
            grid = _pattern(e23=ONE) if odd_r else _pattern(e33=up)
    elif block == "d":
        if form == "i":
            grid = _pattern(e33=ZERO) if odd_r else _pattern(e33=down)
        else:
            grid = _pattern(e33=ZERO) if odd_r else _pattern(e22=down)
    else:  # e.ii
        s = down * (ONE - Q) ** (2 * k)
        grid = [[s, Q * (ONE - s), ZERO], [ZERO, ONE, ZERO], [ZERO, ZERO, ONE]]
    return PrintedForm(case_id, k, odd_r, tuple(tuple(r) for r in grid))


@dataclass(frozen=True)
class SpecialEntry:
    case_id: str
    q: Fraction
    position: tuple[int, int]  # 1-based
    value: object  # function of k

    def expected(self, k: int) -> int:
        return self.value(k)


SPECIAL_ENTRIES = {
    "b.i": SpecialEntry("b.i", Fraction(4), (3, 3), lambda k: 1 - 4 * k * k),
    "b.ii": SpecialEntry("b.ii", Fraction(4), (3, 3), lambda k: 1 - 4 * k * k),
    "e.i": SpecialEntry("e.i", Fraction(1, 4), (3, 1), lambda k: k * (2 * k + 1)),
}


def special_entry(case_id: str) -> SpecialEntry:
    try:
        return SPECIAL_ENTRIES[case_id]
    except KeyError:
        raise UnknownCase(f"{case_id} has no single-value entry claim") from None
