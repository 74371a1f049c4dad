"""Dense square matrices over a :class:`~lkconj.scalars.ScalarMode`.

Rows are images of basis vectors: row ``r`` holds the coordinates of the image of
``e_r``. Products compose left to right, so ``(A @ B)`` applies ``A`` first.
"""

from __future__ import annotations

import cmath
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DimMismatch, ModeMismatch, UnsupportedDim
from .scalars import LaurentPoly, ScalarMode, lp_eval, parse_poly, render_poly


@dataclass(frozen=True)
class RingMatrix:
    rows: tuple
    mode: ScalarMode

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], mode: ScalarMode | None = None) -> "RingMatrix":
        mode = mode or ScalarMode.symbolic()
        dim = len(rows)
        if dim == 0 or any(len(r) != dim for r in rows):
            raise DimMismatch("matrix must be square and nonempty")
        return cls(tuple(tuple(mode.convert(x) for x in r) for r in rows), mode)

    @classmethod
    def identity(cls, dim: int, mode: ScalarMode | None = None) -> "RingMatrix":
        return cls.scalar(1, dim, mode)

    @classmethod
    def scalar(cls, value, dim: int, mode: ScalarMode | None = None) -> "RingMatrix":
        mode = mode or ScalarMode.symbolic()
        v = mode.convert(value)
        z = mode.zero()
        return cls(tuple(tuple(v if i == j else z for j in range(dim)) for i in range(dim)), mode)

    @property
    def dim(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __matmul__(self, other: "RingMatrix") -> "RingMatrix":
        return mat_mul(self, other)

    def scale(self, c) -> "RingMatrix":
        c = self.mode.convert(c)
        return RingMatrix(tuple(tuple(c * x for x in r) for r in self.rows), self.mode)

    def __add__(self, other: "RingMatrix") -> "RingMatrix":
        _check_compatible(self, other)
        return RingMatrix(
            tuple(tuple(x + y for x, y in zip(r, s)) for r, s in zip(self.rows, other.rows)), self.mode
        )

    def __sub__(self, other: "RingMatrix") -> "RingMatrix":
        return self + other.scale(-1)

    def __pow__(self, k: int) -> "RingMatrix":
        if k < 0:
            return self.inverse() ** (-k)
        result = RingMatrix.identity(self.dim, self.mode)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def transpose(self) -> "RingMatrix":
        return RingMatrix(tuple(zip(*self.rows)), self.mode)

    def specialize(self, mode: ScalarMode) -> "RingMatrix":
        """Map a symbolic matrix to a rational or complex one (or promote rational to complex)."""
        if mode == self.mode:
            return self
        if self.mode.is_symbolic:
            return RingMatrix(tuple(tuple(lp_eval(x, mode) for x in r) for r in self.rows), mode)
        if self.mode.kind == "rational" and mode.kind == "complex":
            return RingMatrix(tuple(tuple(complex(x) for x in r) for r in self.rows), mode)
        raise ModeMismatch(f"cannot specialize {self.mode} to {mode}")

    def is_identity(self, tol: float = 1e-9) -> bool:
        return self.is_scalar(1, tol)

    def is_scalar(self, value=None, tol: float = 1e-9) -> bool:
        """True if this is ``c * I``; with ``value`` given, also requires ``c == value``."""
        c = self.rows[0][0] if value is None else self.mode.convert(value)
        z = self.mode.zero()
        for i, r in enumerate(self.rows):
            for j, x in enumerate(r):
                target = c if i == j else z
                if self.mode.is_exact:
                    if x != target:
                        return False
                elif abs(x - target) > tol:
                    return False
        return True

    def close_to(self, other: "RingMatrix", tol: float = 1e-9) -> bool:
        if self.dim != other.dim:
            return False
        a = self.specialize(ScalarMode.complex(1)) if self.mode.kind == "rational" else self
        b = other.specialize(ScalarMode.complex(1)) if other.mode.kind == "rational" else other
        if a.mode.is_exact and b.mode.is_exact:
            return a.rows == b.rows
        return all(abs(x - y) <= tol for r, s in zip(a.rows, b.rows) for x, y in zip(r, s))

    def inverse(self) -> "RingMatrix":
        return mat_inverse(self)

    def det(self):
        return mat_det(self)

    def trace(self):
        t = self.mode.zero()
        for i in range(self.dim):
            t = t + self.rows[i][i]
        return t

    def render(self) -> str:
        return render_matrix(self)

    def to_json(self) -> list[list[str]]:
        return [[render_scalar(x) for x in r] for r in self.rows]

    def __str__(self):
        return render_matrix(self)


def _check_compatible(a: RingMatrix, b: RingMatrix):
    if a.dim != b.dim:
        raise DimMismatch(f"{a.dim} vs {b.dim}")
    if a.mode != b.mode:
        raise ModeMismatch(f"{a.mode} vs {b.mode}")


def mat_mul(a: RingMatrix, b: RingMatrix) -> RingMatrix:
    _check_compatible(a, b)
    cols = tuple(zip(*b.rows))
    zero = a.mode.zero()
    out = []
    for r in a.rows:
        row = []
        for c in cols:
            acc = zero
            for x, y in zip(r, c):
                if x and y:
                    acc = acc + x * y
            row.append(acc)
        out.append(tuple(row))
    return RingMatrix(tuple(out), a.mode)


def _cofactor_det(rows, zero):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    total = zero
    for j, x in enumerate(rows[0]):
        if not x:
            continue
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = x * _cofactor_det(minor, zero)
        total = total + term if j % 2 == 0 else total - term
    return total


def _bareiss_det(rows, mode: ScalarMode):
    m = [list(r) for r in rows]
    n = len(m)
    sign = 1
    prev = mode.one()
    for k in range(n - 1):
        if not m[k][k]:
            for p in range(k + 1, n):
                if m[p][k]:
                    m[k], m[p] = m[p], m[k]
                    sign = -sign
                    break
            else:
                return mode.zero()
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * m[k][k] - m[i][k] * m[k][j]
                m[i][j] = num.exact_div(prev) if mode.is_symbolic else num / prev
        prev = m[k][k]
    d = m[n - 1][n - 1]
    return d if sign == 1 else -d


def mat_det(a: RingMatrix):
    """Exact determinant: cofactor expansion up to dim 4, fraction-free elimination above."""
    if a.dim <= 4:
        return _cofactor_det(a.rows, a.mode.zero())
    return _bareiss_det(a.rows, a.mode)


def mat_inverse(a: RingMatrix) -> RingMatrix:
    """Inverse via the adjugate; the determinant must be a unit of the scalar ring."""
    n = a.dim
    d = mat_det(a)
    if a.mode.is_symbolic:
        from .scalars import lp_invert

        dinv = lp_invert(d)
    else:
        if d == 0:
            raise ZeroDivisionError("singular matrix")
        dinv = 1 / d
    rows = a.rows
    out = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [r[:j] + r[j + 1:] for k, r in enumerate(rows) if k != i]
            c = _cofactor_det(minor, a.mode.zero()) if n > 1 else a.mode.one()
            if (i + j) % 2:
                c = -c
            out[j][i] = c * dinv
    return RingMatrix(tuple(tuple(r) for r in out), a.mode)


def mat_char_poly(a: RingMatrix) -> tuple:
    """Coefficients ``(1, -c1, c2, -c3)`` of the monic characteristic cubic.

    ``c1`` is the trace, ``c2`` the sum of principal 2x2 minors, ``c3`` the determinant.
    """
    if a.dim != 3:
        raise UnsupportedDim(f"characteristic polynomial implemented for dim 3, got {a.dim}")
    m = a.rows
    c1 = m[0][0] + m[1][1] + m[2][2]
    c2 = (
        (m[0][0] * m[1][1] - m[0][1] * m[1][0])
        + (m[0][0] * m[2][2] - m[0][2] * m[2][0])
        + (m[1][1] * m[2][2] - m[1][2] * m[2][1])
    )
    c3 = mat_det(a)
    return (a.mode.one(), -c1, c2, -c3)


def cayley_hamilton_residual(a: RingMatrix) -> RingMatrix:
    _, b, c, d = mat_char_poly(a)
    a2 = a @ a
    a3 = a2 @ a
    return a3 + a2.scale(b) + a.scale(c) + RingMatrix.scalar(d, 3, a.mode)


def _cubic_roots(b: complex, c: complex, d: complex) -> list[complex]:
    """Roots of x^3 + b x^2 + c x + d via Cardano, polished by Newton steps."""
    shift = b / 3
    p = c - b * b / 3
    qq = 2 * b**3 / 27 - b * c / 3 + d
    scale = max(1.0, abs(b), abs(c) ** 0.5, abs(d) ** (1 / 3))
    if abs(p) <= 1e-14 * scale**2 and abs(qq) <= 1e-14 * scale**3:
        roots = [-shift] * 3
    else:
        disc = cmath.sqrt((qq / 2) ** 2 + (p / 3) ** 3)
        u3 = -qq / 2 + disc
        if abs(u3) < abs(-qq / 2 - disc):
            u3 = -qq / 2 - disc
        u = u3 ** (1 / 3) if u3 != 0 else 0j
        omega = complex(-0.5, 3**0.5 / 2)
        roots = []
        for k in range(3):
            uk = u * omega**k
            vk = -p / (3 * uk) if uk != 0 else 0j
            roots.append(uk + vk - shift)

    def f(x):
        return ((x + b) * x + c) * x + d

    def fp(x):
        return (3 * x + 2 * b) * x + c

    polished = []
    for r in roots:
        for _ in range(3):
            g = fp(r)
            if abs(g) < 1e-300:
                break
            step = f(r) / g
            if not cmath.isfinite(step) or abs(step) > 1e-3 * max(1.0, abs(r)):
                break
            r = r - step
        polished.append(r)
    return polished


def mat_eigenvalues(a: RingMatrix) -> list[complex]:
    """The three eigenvalues (with multiplicity) of a 3x3 rational or complex matrix.

    Closed-form cubic roots of the characteristic polynomial. When two roots come
    out closer than 1e-5 relative, the cubic is ill-conditioned (a scalar-like
    matrix gives errors near eps^(1/3)), so the roots are recomputed from the
    matrix itself with an orthogonal-iteration eigensolver.
    """
    if a.dim != 3:
        raise UnsupportedDim(f"eigenvalues implemented for dim 3, got {a.dim}")
    if a.mode.is_symbolic:
        raise ModeMismatch("eigenvalues need a specialized matrix")
    _, b, c, d = (complex(x) for x in mat_char_poly(a))
    roots = _cubic_roots(b, c, d)
    scale = max(1.0, max(abs(r) for r in roots))
    gap = min(abs(roots[i] - roots[j]) for i in range(3) for j in range(i + 1, 3))
    if gap < 1e-5 * scale:
        import numpy as np

        arr = np.array([[complex(x) for x in r] for r in a.rows], dtype=complex)
        roots = [complex(v) for v in np.linalg.eigvals(arr)]
    return roots


def multiset_close(xs: Sequence[complex], ys: Sequence[complex], tol: float) -> bool:
    """Whether two small multisets of complex numbers agree up to ``tol`` (greedy matching)."""
    if len(xs) != len(ys):
        return False
    remaining = list(ys)
    for x in xs:
        best = min(range(len(remaining)), key=lambda k: abs(remaining[k] - x))
        if abs(remaining[best] - x) > tol * max(1.0, abs(x)):
            return False
        remaining.pop(best)
    return True


def render_scalar(x) -> str:
    if isinstance(x, LaurentPoly):
        return render_poly(x)
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, complex):
        return _render_complex(x)
    return str(x)


def _render_complex(z: complex) -> str:
    re_, im = z.real, z.imag
    if abs(im) < 1e-15:
        return f"{re_:.12g}"
    if abs(re_) < 1e-15:
        return f"{im:.12g}i"
    return f"{re_:.12g}{im:+.12g}i"


def render_matrix(a: RingMatrix) -> str:
    cells = [[render_scalar(x) for x in r] for r in a.rows]
    width = max(len(c) for r in cells for c in r)
    return "\n".join("[ " + "  ".join(c.rjust(width) for c in r) + " ]" for r in cells)


def matrix_to_json(a: RingMatrix) -> str:
    return json.dumps(a.to_json())


def matrix_from_json(rows: Sequence[Sequence[str]]) -> RingMatrix:
    return RingMatrix.from_rows([[parse_poly(c) for c in r] for r in rows])
