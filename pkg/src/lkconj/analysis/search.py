"""Kernel search: enumerate candidate words and keep those with rho(w) = I.

Candidates are screened in batches with numpy. In symbolic and rational mode the
screen works modulo a prime p < 2^30 at a fixed residue of q (a random-looking
q0 for symbolic mode, a * b^-1 for q = a/b); a symbolic or rational identity
survives reduction mod p, so the screen never drops a true hit. Every
screened hit is then re-evaluated exactly (or in complex mode, entrywise
within the tolerance) and annotated by the free-group oracle.

Families:

* ``E1``: A_1 T A_2 T ... A_r T^{1-r} and T^{1-r} A_1 T ... T A_r.
* ``E``: A_1 T^{s_1} ... A_r T^{s_r} and T^{s_1} A_1 ... T^{s_r} A_r with
  sum s_i = 0 and |s_i| <= max_abs_exponent. Blocks are never adjacent: the
  trailing form requires s_1..s_{r-1} != 0 and the leading form all s_i != 0,
  since otherwise two alpha blocks merge into a word already counted at a
  smaller r.
* ``FreeWords``: every freely reduced word up to max_length over
  {a1, a2, T, T^-1} (or {a1, a2, s1^+-1, s2^+-1}).
"""

from __future__ import annotations

import threading
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

import numpy as np

from ..errors import BudgetExceeded
from ..freegroup import apply_word, compose_in_word_order, is_identity
from ..matrices import RingMatrix
from ..representation import RepContext, symbolic_generator
from ..scalars import LaurentPoly, ScalarMode
from ..words import (
    LEADING_T,
    NONTRIVIAL_ALPHA,
    TRAILING_T,
    ESpec,
    Gen,
    Word,
    build_from_spec,
)

FAMILIES = ("E1", "E", "FreeWords")
PRIMES = (1073741789, 1073741783, 1073741741, 1073741723)
SYMBOLIC_Q0 = 91138233  # any residue works; hits are confirmed exactly


@dataclass(frozen=True)
class SearchConfig:
    mode: ScalarMode
    family: str = "E"
    max_r: int = 4
    max_abs_exponent: int = 4
    max_length: int = 8
    tolerance: float = 1e-9
    alphabet: str = "t"  # FreeWords only: "t" or "sigma"
    include_trivial: bool = False
    node_budget: int = 5_000_000
    threads: int = 1

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"family must be one of {FAMILIES}, got {self.family!r}")
        for name in ("max_r", "max_abs_exponent", "max_length", "node_budget", "threads"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be positive")
        if not 0 < self.tolerance <= 1e-4:
            raise ValueError("tolerance must lie in (0, 1e-4]")
        if self.alphabet not in ("t", "sigma"):
            raise ValueError("alphabet must be 't' or 'sigma'")


@dataclass(frozen=True)
class KernelHit:
    word: Word
    matrix: RingMatrix
    nontrivial: bool


@dataclass
class SearchStats:
    nodes: int = 0
    candidates: int = 0
    det_filtered: int = 0
    screened: int = 0
    confirmed: int = 0
    false_positives: int = 0
    trivial_hits: int = 0
    seconds: float = 0.0

    def merge(self, other: "SearchStats"):
        for name in ("nodes", "candidates", "det_filtered", "screened", "confirmed", "false_positives", "trivial_hits"):
            setattr(self, name, getattr(self, name) + getattr(other, name))


@dataclass
class SearchResult:
    config: SearchConfig
    hits: list = field(default_factory=list)
    stats: SearchStats = field(default_factory=SearchStats)

    def __len__(self):
        return len(self.hits)

    def __iter__(self):
        return iter(self.hits)

    def words(self) -> list[Word]:
        return [h.word for h in self.hits]


# -- batched arithmetic --------------------------------------------------------


class _ModArith:
    def __init__(self, q: int, p: int):
        self.p = p
        self.q = q % p
        self.eye = np.eye(3, dtype=np.int64)

    def poly(self, a: LaurentPoly) -> int:
        p = self.p
        return sum(c * pow(self.q, e, p) for e, c in a.items()) % p

    def matrix(self, m: RingMatrix) -> np.ndarray:
        return np.array([[self.poly(x) for x in r] for r in m.rows], dtype=np.int64)

    def mul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return np.matmul(a, b) % self.p

    def identity_mask(self, a: np.ndarray) -> np.ndarray:
        return np.all(a == self.eye, axis=(1, 2))


class _ComplexArith:
    def __init__(self, q: complex, tol: float):
        self.mode = ScalarMode.complex(q)
        self.tol = tol
        self.eye = np.eye(3, dtype=np.complex128)

    def matrix(self, m: RingMatrix) -> np.ndarray:
        return np.array(m.specialize(self.mode).rows, dtype=np.complex128)

    def mul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return np.matmul(a, b)

    def identity_mask(self, a: np.ndarray) -> np.ndarray:
        return np.max(np.abs(a - self.eye), axis=(1, 2)) <= self.tol


def _arith_for(config: SearchConfig):
    mode = config.mode
    if mode.kind == "complex":
        return _ComplexArith(mode.q, config.tolerance)
    if mode.kind == "symbolic":
        return _ModArith(SYMBOLIC_Q0, PRIMES[0])
    q = Fraction(mode.q)
    for p in PRIMES:
        if q.numerator % p and q.denominator % p:
            return _ModArith(q.numerator * pow(q.denominator, -1, p), p)
    raise ValueError(f"no screening prime is coprime to {q}")


def _det_is_one(config: SearchConfig, sign: int, qexp: int) -> bool:
    """Whether the predicted determinant sign * q^qexp equals 1 in the search mode."""
    mode = config.mode
    if mode.kind == "symbolic":
        return sign == 1 and qexp == 0
    if mode.kind == "rational":
        return sign * Fraction(mode.q) ** qexp == 1
    return abs(sign * complex(mode.q) ** qexp - 1) <= config.tolerance


# -- shared bookkeeping ----------------------------------------------------------


class _Budget:
    def __init__(self, limit: int):
        self.limit = limit
        self.used = 0
        self._lock = threading.Lock()

    def spend(self, n: int):
        with self._lock:
            self.used += n
            if self.used > self.limit:
                raise BudgetExceeded(f"enumeration exceeded the node budget of {self.limit}")


class _Confirmer:
    """Exact re-evaluation of screened hits plus the free-group annotation.

    Words are split into maximal alpha and T runs; the exact matrix and the
    automorphism of each run are cached, since hits share most of their runs.
    """

    def __init__(self, config: SearchConfig, on_hit: Callable | None):
        self.config = config
        self.ctx = RepContext(3, config.mode)
        self.on_hit = on_hit
        self._lock = threading.Lock()
        self._mats: dict = {}
        self._auts: dict = {}

    @staticmethod
    def _runs(w: Word) -> list[tuple]:
        runs: list[list] = []
        for g in w.letters:
            if runs and (runs[-1][-1].kind == "T") == (g.kind == "T"):
                runs[-1].append(g)
            else:
                runs.append([g])
        return [tuple(r) for r in runs]

    def _run_matrix(self, run: tuple) -> RingMatrix:
        m = self._mats.get(run)
        if m is None:
            m = self._mats[run] = self.ctx.rep_word(Word(run, 3))
        return m

    def _run_aut(self, run: tuple):
        a = self._auts.get(run)
        if a is None:
            a = self._auts[run] = apply_word(Word(run, 3), 3)
        return a

    def confirm(self, w: Word, stats: SearchStats) -> KernelHit | None:
        runs = self._runs(w)
        m = RingMatrix.identity(3, self.config.mode)
        for run in runs:
            m = m @ self._run_matrix(run)
        if not m.is_identity(self.config.tolerance):
            stats.false_positives += 1
            return None
        stats.confirmed += 1
        nontrivial = not is_identity(compose_in_word_order([self._run_aut(r) for r in runs]))
        if not nontrivial:
            stats.trivial_hits += 1
            if not self.config.include_trivial:
                return None
        hit = KernelHit(w, m, nontrivial)
        if self.on_hit is not None:
            with self._lock:
                self.on_hit(hit)
        return hit


# -- the E and E1 families -------------------------------------------------------

_ALPHA_BLOCKS = [w.letters for w in NONTRIVIAL_ALPHA]


class _BlockTable:
    """Screening matrices for (A, T^s) blocks, built lazily per exponent."""

    def __init__(self, arith):
        self.arith = arith
        sym_t = symbolic_generator(3, Gen.t())
        sym_ti = symbolic_generator(3, Gen.t(-1))
        self.t = arith.matrix(sym_t)
        self.ti = arith.matrix(sym_ti)
        ctx = RepContext(3)
        self.alpha = [arith.matrix(ctx.rep_word(Word(a, 3))) for a in _ALPHA_BLOCKS]
        self._tpow: dict[int, np.ndarray] = {0: np.eye(3, dtype=self.t.dtype)}
        self._block: dict = {}
        self._lock = threading.Lock()

    def tpow(self, s: int) -> np.ndarray:
        with self._lock:
            if s not in self._tpow:
                base = self.t if s > 0 else self.ti
                m = np.eye(3, dtype=self.t.dtype)
                for _ in range(abs(s)):
                    m = self.arith.mul(m, base)
                self._tpow[s] = m
            return self._tpow[s]

    def block(self, a: int, s: int, form: str) -> np.ndarray:
        key = (a, s, form)
        if key not in self._block:
            tp = self.tpow(s)
            m = self.arith.mul(self.alpha[a], tp) if form == TRAILING_T else self.arith.mul(tp, self.alpha[a])
            with self._lock:
                self._block[key] = m
        return self._block[key]


def _nonfinal_exponents(config: SearchConfig, r: int, j: int, form: str) -> list[int]:
    if config.family == "E1":
        return [1 - r] if (form == LEADING_T and j == 1) else [1]
    m = config.max_abs_exponent
    return [s for s in range(-m, m + 1) if s != 0]


def _e_subtree(config, arith, table, r, form, first_alpha, budget, confirmer) -> tuple[list, SearchStats]:
    """All words with r blocks in one form whose first alpha block is ``first_alpha``."""
    stats = SearchStats()
    hits: list[KernelHit] = []
    m = config.max_abs_exponent
    eye = np.eye(3, dtype=table.t.dtype)
    mats = eye[None]
    psum = np.zeros(1, dtype=np.int64)
    apar = np.zeros(1, dtype=np.int64)
    choice_a = np.zeros((1, 0), dtype=np.int64)
    choice_s = np.zeros((1, 0), dtype=np.int64)
    alpha_len = np.array([len(a) for a in _ALPHA_BLOCKS])

    for j in range(1, r):
        exps = _nonfinal_exponents(config, r, j, form)
        alphas = [first_alpha] if j == 1 else range(len(_ALPHA_BLOCKS))
        parts = []
        for a in alphas:
            for s in exps:
                new_psum = psum + s
                keep = np.ones(len(psum), dtype=bool)
                if config.family == "E":
                    keep = np.abs(new_psum) <= (r - j) * m
                if not keep.any():
                    continue
                idx = np.nonzero(keep)[0]
                parts.append((idx, a, s, arith.mul(mats[idx], table.block(a, s, form))))
        if not parts:
            return hits, stats
        mats = np.concatenate([p[3] for p in parts])
        psum = np.concatenate([psum[p[0]] + p[2] for p in parts])
        apar = np.concatenate([(apar[p[0]] + alpha_len[p[1]]) % 2 for p in parts])
        choice_a = np.concatenate(
            [np.hstack([choice_a[p[0]], np.full((len(p[0]), 1), p[1])]) for p in parts]
        )
        choice_s = np.concatenate(
            [np.hstack([choice_s[p[0]], np.full((len(p[0]), 1), p[2])]) for p in parts]
        )
        stats.nodes += len(mats)
        budget.spend(len(mats))

    final_s = -psum
    ok = np.ones(len(final_s), dtype=bool)
    if config.family == "E":
        ok &= np.abs(final_s) <= m
    if form == LEADING_T:
        ok &= final_s != 0
    alphas = [first_alpha] if r == 1 else range(len(_ALPHA_BLOCKS))
    for a in alphas:
        sel = ok & ((apar + alpha_len[a]) % 2 == 0)
        for s in np.unique(final_s[sel]):
            idx = np.nonzero(sel & (final_s == s))[0]
            prods = arith.mul(mats[idx], table.block(a, int(s), form))
            stats.nodes += len(idx)
            stats.candidates += len(idx)
            budget.spend(len(idx))
            for h in idx[np.nonzero(arith.identity_mask(prods))[0]]:
                stats.screened += 1
                A = tuple(_ALPHA_BLOCKS[x] for x in choice_a[h]) + (_ALPHA_BLOCKS[a],)
                S = tuple(int(x) for x in choice_s[h]) + (int(s),)
                w = build_from_spec(ESpec(A, S, form))
                hit = confirmer.confirm(w, stats)
                if hit is not None:
                    hits.append(hit)
    return hits, stats


def _e_tasks(config: SearchConfig) -> list[tuple]:
    return [
        (r, form, a)
        for r in range(1, config.max_r + 1)
        for form in (TRAILING_T, LEADING_T)
        for a in range(len(_ALPHA_BLOCKS))
    ]


# -- free words ------------------------------------------------------------------


def _alphabet(config: SearchConfig) -> list[Gen]:
    if config.alphabet == "t":
        return [Gen.alpha(1), Gen.alpha(2), Gen.t(), Gen.t(-1)]
    return [Gen.alpha(1), Gen.alpha(2), Gen.sigma(1), Gen.sigma(1, -1), Gen.sigma(2), Gen.sigma(2, -1)]


def _free_subtree(config, arith, first: int, budget, confirmer) -> tuple[list, SearchStats]:
    """Freely reduced words starting with letter ``first``, screened level by level."""
    stats = SearchStats()
    hits: list[KernelHit] = []
    gens = _alphabet(config)
    inv = np.array([gens.index(g.inverse()) for g in gens])
    # every letter flips the determinant sign; sigma and T letters move the q-exponent by +-3
    dq = np.array([0 if g.kind == "a" else 3 * g.power for g in gens])
    ctx = RepContext(3)
    gmats = [arith.matrix(ctx.generator_matrix(g)) for g in gens]
    det_ok_cache: dict = {}

    mats = gmats[first][None]
    letters = np.full((1, 1), first, dtype=np.int8)
    qexp = np.array([dq[first]])
    for length in range(1, config.max_length + 1):
        stats.nodes += len(mats)
        stats.candidates += len(mats)
        budget.spend(len(mats))
        sign = -1 if length % 2 else 1
        det_ok = np.zeros(len(mats), dtype=bool)
        for e in np.unique(qexp):
            key = (sign, int(e))
            if key not in det_ok_cache:
                det_ok_cache[key] = _det_is_one(config, sign, int(e))
            if det_ok_cache[key]:
                det_ok |= qexp == e
        stats.det_filtered += int((~det_ok).sum())
        cand = np.nonzero(det_ok)[0]
        if len(cand):
            for h in cand[np.nonzero(arith.identity_mask(mats[cand]))[0]]:
                stats.screened += 1
                w = Word(tuple(gens[x] for x in letters[h]), 3)
                hit = confirmer.confirm(w, stats)
                if hit is not None:
                    hits.append(hit)
        if length == config.max_length:
            break
        last = letters[:, -1]
        new_m, new_l, new_q = [], [], []
        for c in range(len(gens)):
            idx = np.nonzero(last != inv[c])[0]
            if not len(idx):
                continue
            new_m.append(arith.mul(mats[idx], gmats[c]))
            new_l.append(np.hstack([letters[idx], np.full((len(idx), 1), c, dtype=np.int8)]))
            new_q.append(qexp[idx] + dq[c])
        mats, letters, qexp = np.concatenate(new_m), np.concatenate(new_l), np.concatenate(new_q)
    return hits, stats


# -- driver ------------------------------------------------------------------------

_KIND_ORDER = {"a": 0, "T": 1, "s": 2}


def word_sort_key(w: Word) -> tuple:
    return (len(w), tuple((_KIND_ORDER[g.kind], g.index, -g.power) for g in w.letters))


def kernel_search(config: SearchConfig, on_hit: Callable[[KernelHit], None] | None = None) -> SearchResult:
    """Enumerate the configured family and return every confirmed kernel word.

    Output is sorted by (length, letters) and identical for any thread count.
    Trivial hits (words acting as the identity on F_3) are counted in the stats
    and only returned when ``include_trivial`` is set.
    """
    start = time.perf_counter()
    arith = _arith_for(config)
    budget = _Budget(config.node_budget)
    confirmer = _Confirmer(config, on_hit)
    if config.family == "FreeWords":
        tasks: Sequence = list(range(len(_alphabet(config))))
        run = lambda t: _free_subtree(config, arith, t, budget, confirmer)  # noqa: E731
    else:
        table = _BlockTable(arith)
        tasks = _e_tasks(config)
        run = lambda t: _e_subtree(config, arith, table, *t, budget, confirmer)  # noqa: E731
    if config.threads > 1:
        with ThreadPoolExecutor(max_workers=config.threads) as pool:
            outputs = list(pool.map(run, tasks))
    else:
        outputs = [run(t) for t in tasks]
    result = SearchResult(config)
    for hits, stats in outputs:
        result.hits.extend(hits)
        result.stats.merge(stats)
    result.hits.sort(key=lambda h: word_sort_key(h.word))
    result.stats.seconds = time.perf_counter() - start
    return result
