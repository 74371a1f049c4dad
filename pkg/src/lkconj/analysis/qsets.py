"""The q-condition sets P_k, R_k, S_k and the unfaithfulness witnesses attached to them.

Membership is decided numerically at a given complex q with principal square
roots; both signs of the radical are always evaluated.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass

from ..errors import ExcludedPoint, UnsupportedSet, ZeroQ
from ..words import A1, A2, T, Word, t_power


@dataclass(frozen=True)
class QSetId:
    tag: str  # "P", "R" or "S"
    k: int

    def __post_init__(self):
        if self.tag not in ("P", "R", "S"):
            raise ValueError(f"unknown q-set {self.tag!r}")

    def __str__(self):
        return f"{self.tag}_{self.k}"


def _radical_pair(tag: str, q: complex) -> tuple[complex, complex, complex]:
    """(g, h, denominator) with the set expressions (g -+ h)^{2k} / denominator^{2k}."""
    if tag == "P":
        g = q * q - 2 * q
        h = cmath.sqrt(q - 4) * cmath.exp(1.5 * cmath.log(q))
        return g, h, 2 * q
    if tag == "R":
        return 1 - 2 * q, cmath.sqrt(1 - 4 * q), 2 * q
    raise UnsupportedSet(tag)


def qset_expressions(s: QSetId, q) -> list[complex]:
    """Values of the defining expressions of ``s`` at q (two for P and R, one for S)."""
    q = complex(q)
    if q == 0:
        raise ZeroQ("q must be nonzero")
    if s.tag == "P" and q == 4:
        raise ExcludedPoint("q = 4 is excluded from P_k")
    if s.tag == "R" and q == 0.25:
        raise ExcludedPoint("q = 1/4 is excluded from R_k")
    e = 2 * s.k
    if s.tag == "S":
        return [((1 - q) / q) ** e]
    g, h, d = _radical_pair(s.tag, q)
    return [((g - h) / d) ** e, ((g + h) / d) ** e]


def qset_member(s: QSetId, q, tol: float = 1e-9) -> bool:
    return all(abs(v - 1) <= tol for v in qset_expressions(s, q))


def prop5_witness(s: QSetId) -> Word:
    """(a2 T)^{2k} T^{-2k}, (a1 a2 a1 T)^{2k} T^{-2k} or (T a1 a2 a1)^{2k} T^{-2k}."""
    k = s.k
    if s.tag == "P":
        block = Word((A2, T))
    elif s.tag == "R":
        block = Word((A1, A2, A1, T))
    else:
        block = Word((T, A1, A2, A1))
    return block ** (2 * k) * t_power(-2 * k)


def prop5_expected_spectrum(s: QSetId, q) -> list[complex]:
    """Closed-form eigenvalues of the P/R witness: 1 and (2q)^{-2k} (g -+ h)^{2k}."""
    if s.tag == "S":
        raise UnsupportedSet("no closed-form spectrum is attached to the S family")
    q = complex(q)
    if q == 0:
        raise ZeroQ("q must be nonzero")
    g, h, d = _radical_pair(s.tag, q)
    e = 2 * s.k
    return [1 + 0j, ((g - h) / d) ** e, ((g + h) / d) ** e]


def s_witness_spectrum(n: int, q) -> list[complex]:
    """Eigenvalues of rho((T a1 a2 a1)^{2n} T^{-2n}).

    T a1 a2 a1 has eigenvalues q and (1 - 2q -+ sqrt(1 - 4q)) / 2, so the witness
    has 1 and ((1 - 2q -+ sqrt(1 - 4q)) / (2q))^{2n}: the R-type expressions,
    not ((1 - q)/q)^{2n}.
    """
    q = complex(q)
    r = cmath.sqrt(1 - 4 * q)
    e = 2 * n
    return [1 + 0j, ((1 - 2 * q - r) / (2 * q)) ** e, ((1 - 2 * q + r) / (2 * q)) ** e]


def qset_candidates(s: QSetId) -> list[complex]:
    """Solutions of the defining equations used as probe points (not an exhaustive solver).

    For S_k: q = 1/(1+z) with z^{2k} = 1, z != -1. For P_k and R_k we solve
    the equivalent eigenvalue condition mu^{2k} = 1 for the quadratic factor of
    the witness's characteristic polynomial, then keep points where both
    expressions are 1.
    """
    e = 2 * s.k
    roots = [cmath.exp(2j * cmath.pi * j / e) for j in range(e)]
    out: list[complex] = []
    if s.tag == "S":
        for z in roots:
            if abs(z + 1) > 1e-12:
                out.append(1 / (1 + z))
        return out
    # the two nontrivial eigenvalue ratios mu, 1/mu must both be 2k-th roots of unity;
    # their sum is q - 2 for P and 1/q - 2 for R
    for z in roots:
        for w in roots:
            if abs(z * w - 1) > 1e-12:
                continue
            c = z + w
            if s.tag == "P":
                cand = [c + 2]
            else:
                cand = [1 / (c + 2)] if abs(c + 2) > 1e-12 else []
            for qv in cand:
                if abs(qv) < 1e-12:
                    continue
                try:
                    if qset_member(s, qv, 1e-7):
                        out.append(qv)
                except ExcludedPoint:
                    pass
    uniq: list[complex] = []
    for v in out:
        if all(abs(v - u) > 1e-9 for u in uniq):
            uniq.append(v)
    return uniq
