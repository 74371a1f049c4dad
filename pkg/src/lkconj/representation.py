"""The extended Lawrence-Krammer representation rho of C_n on V_n.

V_n has basis v_{i,j} (1 <= i < j <= n) in lexicographic order; for n = 3 this
is v12, v13, v23 -> e1, e2, e3. A generator matrix has, in the row of v, the
coordinates of the image of v.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

from .errors import GeneratorIndexError, TOnlyForN3
from .matrices import RingMatrix
from .scalars import ONE, Q, ZERO, LaurentPoly, ScalarMode
from .words import A1, A2, Gen, Word, gen_counts

Q_INV = LaurentPoly.monomial(1, -1)


def basis(n: int) -> list[tuple[int, int]]:
    return list(combinations(range(1, n + 1), 2))


def _pair(a: int, b: int) -> tuple[int, int]:
    return (a, b) if a < b else (b, a)


def _sigma_images(n: int, i: int, inverse: bool) -> dict:
    """Image of every basis vector under sigma_i (or its inverse), as {v: {w: coeff}}."""
    images = {}
    u = (i, i + 1)
    for v in basis(n):
        k, l = v
        if v == u:
            images[v] = {u: Q_INV * Q_INV if inverse else Q * Q}
        elif l == i or (k == i and l > i + 1):
            # v_{k,i} with k < i, or v_{i,l} with l > i + 1: the "moving" vector
            partner = (k, i + 1) if l == i else (i + 1, l)
            if inverse:
                images[v] = {partner: ONE}
            else:
                images[v] = {v: ONE - Q, partner: Q, u: Q * (Q - ONE)}
        elif l == i + 1 or k == i + 1:
            # v_{k,i+1} with k < i, or v_{i+1,l}: sent back to the moving vector
            mover = (k, i) if l == i + 1 else (i, l)
            if inverse:
                images[v] = {mover: Q_INV, v: ONE - Q_INV, u: Q_INV * Q_INV - Q_INV}
            else:
                images[v] = {mover: ONE}
        else:
            images[v] = {v: ONE}
    return images


def _alpha_images(n: int, i: int) -> dict:
    swap = {i: i + 1, i + 1: i}
    return {v: {_pair(swap.get(v[0], v[0]), swap.get(v[1], v[1])): ONE} for v in basis(n)}


def _to_matrix(n: int, images: dict) -> RingMatrix:
    b = basis(n)
    pos = {v: p for p, v in enumerate(b)}
    rows = []
    for v in b:
        row = [ZERO] * len(b)
        for w, c in images[v].items():
            row[pos[w]] = row[pos[w]] + c
        rows.append(tuple(row))
    return RingMatrix(tuple(rows), ScalarMode.symbolic())


@lru_cache(maxsize=None)
def symbolic_generator(n: int, g: Gen) -> RingMatrix:
    if g.kind == "T":
        if n != 3:
            raise TOnlyForN3("T is only defined in C_3")
        s2, s2i = symbolic_generator(3, Gen.sigma(2)), symbolic_generator(3, Gen.sigma(2, -1))
        a1, a2 = symbolic_generator(3, A1), symbolic_generator(3, A2)
        return s2 @ a2 @ a1 if g.power == 1 else a1 @ a2 @ s2i
    if not 1 <= g.index <= n - 1:
        raise GeneratorIndexError(f"{g.kind}{g.index} does not exist in C_{n}")
    if g.kind == "a":
        return _to_matrix(n, _alpha_images(n, g.index))
    return _to_matrix(n, _sigma_images(n, g.index, g.power == -1))


@dataclass
class RepContext:
    """Generator matrices of rho for a fixed n and scalar mode, built once."""

    n: int
    mode: ScalarMode = field(default_factory=ScalarMode.symbolic)

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("need n >= 2")
        gens = [Gen.sigma(i, p) for i in range(1, self.n) for p in (1, -1)]
        gens += [Gen.alpha(i) for i in range(1, self.n)]
        if self.n == 3:
            gens += [Gen.t(1), Gen.t(-1)]
        self._cache = {g: symbolic_generator(self.n, g).specialize(self.mode) for g in gens}

    @property
    def dim(self) -> int:
        return self.n * (self.n - 1) // 2

    def generator_matrix(self, g: Gen) -> RingMatrix:
        try:
            return self._cache[g]
        except KeyError:
            if g.kind == "T":
                raise TOnlyForN3("T is only defined in C_3") from None
            raise GeneratorIndexError(f"{g} does not exist in C_{self.n}") from None

    def rep_word(self, w: Word) -> RingMatrix:
        """rho(w) as the ordered product of generator matrices, leftmost letter first."""
        if w.n != self.n:
            raise ValueError(f"word lives in C_{w.n}, context is C_{self.n}")
        m = RingMatrix.identity(self.dim, self.mode)
        for g in w.letters:
            m = m @ self.generator_matrix(g)
        return m


def generator_matrix(ctx: RepContext, g: Gen) -> RingMatrix:
    return ctx.generator_matrix(g)


def rep_word(ctx: RepContext, w: Word) -> RingMatrix:
    return ctx.rep_word(w)


# -- defining relations of C_n -------------------------------------------------


@dataclass(frozen=True)
class RelationInstance:
    family: str
    lhs: Word
    rhs: Word


RELATION_FAMILIES = (
    "braid",
    "sigma-commute",
    "alpha-involution",
    "alpha-commute",
    "alpha-sigma-commute",
    "mixed-sigma-alpha",
    "mixed-sigma-sigma-alpha",
)


def relation_instances(n: int) -> list[RelationInstance]:
    """Every instance of the seven relation families of C_n.

    Far commutation uses |i - j| >= 2 (the standard braid presentation).
    """
    s = lambda i: Gen.sigma(i)  # noqa: E731
    a = Gen.alpha
    W = lambda *g: Word(tuple(g), n)  # noqa: E731
    out = []
    for i in range(1, n - 1):
        out.append(RelationInstance("braid", W(s(i), s(i + 1), s(i)), W(s(i + 1), s(i), s(i + 1))))
    for i in range(1, n):
        for j in range(i + 2, n):
            out.append(RelationInstance("sigma-commute", W(s(i), s(j)), W(s(j), s(i))))
    for i in range(1, n):
        out.append(RelationInstance("alpha-involution", W(a(i), a(i)), W()))
    for i in range(1, n):
        for j in range(i + 2, n):
            out.append(RelationInstance("alpha-commute", W(a(i), a(j)), W(a(j), a(i))))
    for i in range(1, n):
        for j in range(1, n):
            if abs(i - j) >= 2:
                out.append(RelationInstance("alpha-sigma-commute", W(a(i), s(j)), W(s(j), a(i))))
    for i in range(1, n - 1):
        out.append(
            RelationInstance("mixed-sigma-alpha", W(s(i), a(i + 1), a(i)), W(a(i + 1), a(i), s(i + 1)))
        )
    for i in range(1, n - 1):
        out.append(
            RelationInstance("mixed-sigma-sigma-alpha", W(s(i + 1), s(i), a(i + 1)), W(a(i), s(i + 1), s(i)))
        )
    return out


@dataclass(frozen=True)
class RelationCheck:
    instance: RelationInstance
    holds: bool


@dataclass(frozen=True)
class RelationReport:
    n: int
    checks: tuple
    note: str = (
        "far commutation checked for |i-j| >= 2; a strict |i-j| > 2 bound "
        "would drop s1 s3 = s3 s1 at n = 4"
    )

    @property
    def all_hold(self) -> bool:
        return all(c.holds for c in self.checks)

    def families(self) -> set[str]:
        return {c.instance.family for c in self.checks}


def verify_relations(ctx: RepContext) -> RelationReport:
    checks = []
    for inst in relation_instances(ctx.n):
        holds = ctx.rep_word(inst.lhs) == ctx.rep_word(inst.rhs)
        checks.append(RelationCheck(inst, holds))
    return RelationReport(ctx.n, tuple(checks))


# -- determinants ------------------------------------------------------------


def predicted_det(w: Word) -> LaurentPoly:
    """Closed-form det(rho(w)) from letter counts.

    For C_3 this is (-1)^{a1+a2+t-i} q^{3(t-i)} on T/alpha words, extended to
    sigma letters with det(rho(sigma_i)) = -q^3. For general n,
    det(rho(sigma_i)) = (-1)^{n-2} q^n and det(rho(alpha_i)) = (-1)^{n-2}.
    """
    c = gen_counts(w)
    n = w.n
    alpha = c.alpha_count
    sign_exp = (n - 2) * (alpha + c.sigma_count) + (c.t + c.i)
    q_exp = n * c.sigma_exponent_sum + 3 * (c.t - c.i)
    return LaurentPoly.monomial(-1 if sign_exp % 2 else 1, q_exp)
