"""Exact scalars: Laurent polynomials in q over the integers, plus specialization.

Three scalar modes are supported:

* symbolic -- entries are :class:`LaurentPoly`
* rational -- entries are :class:`fractions.Fraction`, q is a nonzero rational
* complex  -- entries are Python ``complex``, q is a nonzero complex number
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from numbers import Number
from typing import Iterable, Mapping, Union

from .errors import NotAUnit, ZeroSpecialization

ExactRational = Fraction
ComplexValue = complex


class LaurentPoly:
    """An element of Z[q, 1/q].

    Stored as an exponent-sorted tuple of ``(exponent, coefficient)`` pairs with
    no zero coefficients, so equality and hashing are structural.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Union[Mapping[int, int], Iterable[tuple[int, int]], int, None] = None):
        if terms is None:
            items = ()
        elif isinstance(terms, int):
            items = ((0, terms),) if terms else ()
        else:
            acc: dict[int, int] = {}
            pairs = terms.items() if isinstance(terms, Mapping) else terms
            for e, c in pairs:
                acc[int(e)] = acc.get(int(e), 0) + int(c)
            items = tuple(sorted((e, c) for e, c in acc.items() if c))
        self._terms = items
        self._hash = None

    @classmethod
    def _raw(cls, items):
        obj = cls.__new__(cls)
        obj._terms = items
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, coeff: int = 1, exp: int = 1) -> "LaurentPoly":
        return cls._raw(((exp, coeff),) if coeff else ())

    @classmethod
    def q(cls) -> "LaurentPoly":
        return cls._raw(((1, 1),))

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self):
        return iter(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_one(self) -> bool:
        return self._terms == ((0, 1),)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def constant(self) -> int:
        for e, c in self._terms:
            if e == 0:
                return c
        return 0

    def min_exp(self) -> int:
        return self._terms[0][0]

    def max_exp(self) -> int:
        return self._terms[-1][0]

    # ring operations

    @staticmethod
    def _coerce(other):
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other._terms:
            return self
        if not self._terms:
            return other
        acc = dict(self._terms)
        for e, c in other._terms:
            s = acc.get(e, 0) + c
            if s:
                acc[e] = s
            else:
                acc.pop(e, None)
        return LaurentPoly._raw(tuple(sorted(acc.items())))

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw(tuple((e, -c) for e, c in self._terms))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self._terms or not other._terms:
            return LaurentPoly._raw(())
        if len(other._terms) == 1:
            f, d = other._terms[0]
            return LaurentPoly._raw(tuple((e + f, c * d) for e, c in self._terms))
        if len(self._terms) == 1:
            return other * self
        acc: dict[int, int] = {}
        for e, c in self._terms:
            for f, d in other._terms:
                acc[e + f] = acc.get(e + f, 0) + c * d
        return LaurentPoly._raw(tuple(sorted((e, c) for e, c in acc.items() if c)))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return lp_invert(self) ** (-k)
        result = LaurentPoly(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def exact_div(self, other: "LaurentPoly") -> "LaurentPoly":
        """Divide exactly in Z[q, 1/q]; raises ValueError if ``other`` does not divide."""
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return self
        if other.is_monomial():
            f, d = other._terms[0]
            out = []
            for e, c in self._terms:
                qc, rc = divmod(c, d)
                if rc:
                    raise ValueError("not exactly divisible")
                out.append((e - f, qc))
            return LaurentPoly._raw(tuple(out))
        # long division from the top degree down
        rem = dict(self._terms)
        lead_e, lead_c = other._terms[-1]
        low_e = other._terms[0][0]
        quot: dict[int, int] = {}
        self_low = self._terms[0][0]
        while rem:
            top = max(rem)
            if top - lead_e + low_e < self_low:
                raise ValueError("not exactly divisible")
            c = rem[top]
            qc, rc = divmod(c, lead_c)
            if rc:
                raise ValueError("not exactly divisible")
            shift = top - lead_e
            quot[shift] = qc
            for e, d in other._terms:
                v = rem.get(e + shift, 0) - qc * d
                if v:
                    rem[e + shift] = v
                else:
                    rem.pop(e + shift, None)
        return LaurentPoly(quot)

    # comparison and hashing

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self._terms == other._terms
        if isinstance(other, int):
            return self._terms == (((0, other),) if other else ())
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._terms)
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    # evaluation

    def __call__(self, q):
        return evaluate_at(self, q)

    # rendering

    def __str__(self):
        return render_poly(self)

    def __repr__(self):
        return f"LaurentPoly({render_poly(self)!r})"


def _term_text(c: int, e: int) -> str:
    if e == 0:
        return str(c)
    power = "q" if e == 1 else f"q^{e}"
    if c == 1:
        return power
    if c == -1:
        return "-" + power
    return f"{c}*{power}"


def render_poly(p: LaurentPoly) -> str:
    """Canonical text: increasing exponent, e.g. ``-1 + q^2`` or ``q^-2 - 2*q``."""
    if not p._terms:
        return "0"
    parts = []
    for idx, (e, c) in enumerate(p._terms):
        if idx == 0:
            parts.append(_term_text(c, e))
        elif c < 0:
            parts.append(" - " + _term_text(-c, e))
        else:
            parts.append(" + " + _term_text(c, e))
    return "".join(parts)


_TERM_RE = re.compile(r"\s*([+-])?\s*(\d+)?\s*(\*?\s*q(?:\^(-?\d+))?)?\s*")


def parse_poly(text: str) -> LaurentPoly:
    """Inverse of :func:`render_poly` (accepts the canonical rendering and close variants)."""
    s = text.strip()
    if s == "0":
        return LaurentPoly()
    acc: dict[int, int] = {}
    pos = 0
    while pos < len(s):
        m = _TERM_RE.match(s, pos)
        if not m or m.end() == pos or (m.group(2) is None and m.group(3) is None):
            raise ValueError(f"cannot parse polynomial {text!r} at {pos}")
        sign = -1 if m.group(1) == "-" else 1
        coeff = int(m.group(2)) if m.group(2) else 1
        if m.group(3):
            exp = int(m.group(4)) if m.group(4) is not None else 1
        else:
            exp = 0
        acc[exp] = acc.get(exp, 0) + sign * coeff
        pos = m.end()
    return LaurentPoly(acc)


Q = LaurentPoly.q()
ONE = LaurentPoly(1)
ZERO = LaurentPoly()


def lp_add(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a + b


def lp_mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a * b


def lp_invert(a: LaurentPoly) -> LaurentPoly:
    """Inverse of a unit +-q^k of Z[q, 1/q]."""
    if len(a._terms) != 1 or a._terms[0][1] not in (1, -1):
        raise NotAUnit(f"{render_poly(a)} is not a unit of Z[q^±1]")
    e, c = a._terms[0]
    return LaurentPoly._raw(((-e, c),))


@dataclass(frozen=True)
class ScalarMode:
    """Which ring matrix entries live in.

    ``kind`` is ``"symbolic"``, ``"rational"`` or ``"complex"``; the latter two carry
    the specialized value of q, which must be nonzero.
    """

    kind: str
    q: Union[Fraction, complex, None] = None

    def __post_init__(self):
        if self.kind not in ("symbolic", "rational", "complex"):
            raise ValueError(f"unknown scalar mode {self.kind!r}")
        if self.kind == "symbolic":
            if self.q is not None:
                raise ValueError("symbolic mode carries no q")
            return
        if self.q is None or self.q == 0:
            raise ZeroSpecialization("specialized modes need q != 0")
        if self.kind == "rational":
            object.__setattr__(self, "q", Fraction(self.q))
        else:
            object.__setattr__(self, "q", complex(self.q))

    @classmethod
    def symbolic(cls) -> "ScalarMode":
        return cls("symbolic")

    @classmethod
    def rational(cls, q) -> "ScalarMode":
        return cls("rational", Fraction(q))

    @classmethod
    def complex(cls, q) -> "ScalarMode":
        return cls("complex", complex(q))

    @property
    def is_symbolic(self) -> bool:
        return self.kind == "symbolic"

    @property
    def is_exact(self) -> bool:
        return self.kind != "complex"

    def zero(self):
        return {"symbolic": ZERO, "rational": Fraction(0), "complex": 0j}[self.kind]

    def one(self):
        return {"symbolic": ONE, "rational": Fraction(1), "complex": 1 + 0j}[self.kind]

    def convert(self, value):
        """Bring an int, Fraction, complex or LaurentPoly into this mode."""
        if isinstance(value, LaurentPoly):
            return value if self.kind == "symbolic" else lp_eval(value, self)
        if self.kind == "symbolic":
            if isinstance(value, int):
                return LaurentPoly(value)
            if isinstance(value, Fraction) and value.denominator == 1:
                return LaurentPoly(value.numerator)
            raise TypeError(f"cannot embed {value!r} in Z[q^±1]")
        if self.kind == "rational":
            if isinstance(value, complex):
                raise TypeError("complex value in rational mode")
            return Fraction(value)
        return complex(value)

    def __str__(self):
        if self.kind == "symbolic":
            return "symbolic"
        return f"{self.kind}(q={self.q})"


def evaluate_at(a: LaurentPoly, q):
    """Substitute a number for q. Exact for int/Fraction, floating for complex/float."""
    if not a._terms:
        return Fraction(0) if not isinstance(q, (complex, float)) else 0j
    if q == 0:
        if a._terms[0][0] < 0:
            raise ZeroSpecialization(f"q = 0 in {render_poly(a)}")
        return Fraction(a.constant()) if not isinstance(q, (complex, float)) else complex(a.constant())
    if isinstance(q, (complex, float)):
        q = complex(q)
        total = 0j
    else:
        q = Fraction(q)
        total = Fraction(0)
    for e, c in a._terms:
        total += c * q**e
    return total


def lp_eval(a: LaurentPoly, mode: Union[ScalarMode, Number]):
    """Specialize ``a`` at the q carried by ``mode`` (or at a raw number)."""
    if isinstance(mode, ScalarMode):
        if mode.is_symbolic:
            raise ValueError("lp_eval needs a rational or complex mode")
        return evaluate_at(a, mode.q)
    return evaluate_at(a, mode)
