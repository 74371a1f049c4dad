"""Registry of machine-checked statements about rho on C_3.

Each entry recomputes its statement from scratch and returns a
:class:`ClaimVerdict`. ``PASS``/``FAIL`` entries are hard assertions;
``CHECKED(...)`` entries compute both sides of a printed statement and report
the outcome without asserting it, so they never affect the exit status.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from typing import Callable

from ..freegroup import (
    CONVENTION,
    apply_word,
    has_conjugating_shape,
    is_identity,
    select_convention,
)
from ..matrices import RingMatrix, mat_eigenvalues, multiset_close, render_scalar
from ..representation import RELATION_FAMILIES, RepContext, predicted_det, symbolic_generator, verify_relations
from ..scalars import Q, ScalarMode
from ..words import (
    A1,
    A2,
    E1Spec,
    Gen,
    Word,
    build_from_spec,
    classify_kernel_candidate,
    enumerate_alpha_subgroup,
    parse_word,
    t_power,
)
from .closed_forms import SPECIAL_ENTRIES, theorem8_closed_form, constant_block_word
from .qsets import (
    QSetId,
    prop5_expected_spectrum,
    prop5_witness,
    qset_candidates,
    qset_expressions,
    qset_member,
    s_witness_spectrum,
)
from .reduce import conjugate_reduce, reduction_corpus

PASS, FAIL = "PASS", "FAIL"


def checked(outcome: str) -> str:
    return f"CHECKED({outcome})"


@dataclass(frozen=True)
class ClaimVerdict:
    claim_id: str
    paper_locus: str
    status: str
    evidence: dict = field(default_factory=dict)

    @property
    def hard(self) -> bool:
        return self.status in (PASS, FAIL)

    @property
    def failed(self) -> bool:
        return self.status == FAIL

    def to_json(self) -> dict:
        return {
            "claim_id": self.claim_id,
            "paper_locus": self.paper_locus,
            "status": self.status,
            "evidence": self.evidence,
        }


_REGISTRY: list[tuple[str, str, Callable[[], tuple[str, dict]]]] = []


def _claim(claim_id: str, locus: str):
    def register(fn):
        _REGISTRY.append((claim_id, locus, fn))
        return fn

    return register


def _hard(ok: bool) -> str:
    return PASS if ok else FAIL


_SYM = RepContext(3)


def _rho(text: str) -> RingMatrix:
    return _SYM.rep_word(parse_word(text))


def _cstr(z: complex) -> str:
    return f"{z.real:.12g}{z.imag:+.12g}i"


# -- generators and relations -----------------------------------------------------


@_claim("prop4-alpha-subgroup", "Proposition 4")
def _alpha_subgroup():
    elems = enumerate_alpha_subgroup()
    images = {_SYM.rep_word(e.word).rows for e in elems}
    relator = _rho("a1 a2 a1 a2 a1 a2").is_identity()
    words = [str(e.word) for e in elems]
    ok = len(elems) == 6 and len(images) == 6 and relator and sum(e.is_identity for e in elems) == 1
    return _hard(ok), {"elements": words, "distinct_images": len(images), "relator_maps_to_I": relator}


@_claim("rho-T-squared-central", "Section 3, rho(T^2) = q^2 I_3")
def _t_squared():
    t = _rho("T")
    sq = t @ t
    ok = sq == RingMatrix.scalar(Q * Q, 3)
    powers = {}
    for k in range(-4, 5):
        even = _SYM.rep_word(t_power(2 * k)) == RingMatrix.scalar(Q ** (2 * k), 3)
        odd = _SYM.rep_word(t_power(2 * k + 1)) == t.scale(Q ** (2 * k))
        powers[str(k)] = even and odd
        ok = ok and even and odd
    return _hard(ok), {"rho(T)": t.to_json(), "rho(T)^2": sq.to_json(), "powers_k_-4_to_4": powers}


@_claim("sigma-from-T-identities", "Section 3, sigma_2 = T a1 a2 and sigma_1 = a2 a1 T a2 a1")
def _sigma_identities():
    s2 = _rho("s2") == _rho("T a1 a2")
    s1 = _rho("s1") == _rho("a2 a1 T a2 a1")
    return _hard(s1 and s2), {"sigma2 = T a1 a2": s2, "sigma1 = a2 a1 T a2 a1": s1}


def explicit_matrices() -> dict:
    """The four explicit 3x3 generator matrices, entered by hand."""
    from ..scalars import ONE, ZERO

    qq = Q * (Q - ONE)
    rows = {
        Gen.sigma(1): [[Q * Q, ZERO, ZERO], [qq, ONE - Q, Q], [ZERO, ONE, ZERO]],
        Gen.sigma(2): [[ONE - Q, Q, qq], [ONE, ZERO, ZERO], [ZERO, ZERO, Q * Q]],
        Gen.alpha(1): [[ONE, ZERO, ZERO], [ZERO, ZERO, ONE], [ZERO, ONE, ZERO]],
        Gen.alpha(2): [[ZERO, ONE, ZERO], [ONE, ZERO, ZERO], [ZERO, ZERO, ONE]],
    }
    return {g: RingMatrix.from_rows(r) for g, r in rows.items()}


@_claim("definition1-matches-definition3", "Definition 1 vs Definition 3")
def _general_vs_explicit():
    ev = {}
    ok = True
    for g, m in explicit_matrices().items():
        same = symbolic_generator(3, g) == m
        ev[str(g)] = same
        ok = ok and same
    return _hard(ok), ev


def _relations(n: int):
    report = verify_relations(RepContext(n))
    aut_ok = all(apply_word(c.instance.lhs, n) == apply_word(c.instance.rhs, n) for c in report.checks)
    ok = report.all_hold and aut_ok
    return _hard(ok), {
        "instances": len(report.checks),
        "families": sorted(report.families()),
        "families_without_instances": sorted(set(RELATION_FAMILIES) - report.families()),
        "matrix_identities_hold": report.all_hold,
        "free_group_identities_hold": aut_ok,
        "note": report.note,
    }


@_claim("relations-n3", "Section 2, defining relations of C_n (n = 3)")
def _rel3():
    return _relations(3)


@_claim("relations-n4", "Section 2, defining relations of C_n (n = 4)")
def _rel4():
    return _relations(4)


@_claim("artin-convention", "Section 1, conjugating automorphisms of F_n")
def _artin():
    chosen, passing = select_convention(4)
    outcome = "unique" if len(passing) == 1 else f"{len(passing)} of 4 conventions pass"
    return checked(outcome), {
        "passing": [f"{c.sigma_variant}/{c.order}" for c in passing],
        "used": f"{CONVENTION.sigma_variant}/{CONVENTION.order}",
        "note": "the two passing conventions are mirror images (sigma_i replaced by sigma_i^-1 and the "
        "composition order reversed), so no relation can tell them apart",
    }


# -- q-sets and the unfaithfulness witnesses -----------------------------------------


@_claim("qset-P2-contains-2", "Section 3, 2 in P_k")
def _p2():
    vals = qset_expressions(QSetId("P", 2), 2)
    return _hard(qset_member(QSetId("P", 2), 2)), {"expressions": [_cstr(v) for v in vals]}


@_claim("qset-R2-contains-half", "Section 3, 1/2 in R_k")
def _r2():
    vals = qset_expressions(QSetId("R", 2), 0.5)
    return _hard(qset_member(QSetId("R", 2), 0.5)), {"expressions": [_cstr(v) for v in vals]}


@_claim("qset-S-contains-half", "Section 3, 1/2 in S_n")
def _s_half():
    ev = {f"S_{n}": qset_member(QSetId("S", n), 0.5) for n in (1, 2, 3)}
    ev["S_1 contains 2"] = qset_member(QSetId("S", 1), 2)
    ok = all(ev[f"S_{n}"] for n in (1, 2, 3)) and not ev["S_1 contains 2"]
    return _hard(ok), ev


@_claim("example6-kernel-witness", "Example 6")
def _q2_witness():
    ctx = RepContext(3, ScalarMode.rational(2))
    block = ctx.rep_word(parse_word("a2 T a2 T a2 T a2 T"))
    w = parse_word("a2 T a2 T a2 T a2 T T^-4")
    m = ctx.rep_word(w)
    aut = apply_word(w)
    ok = block == RingMatrix.scalar(16, 3, ctx.mode) and m.is_identity() and not is_identity(aut)
    return _hard(ok), {
        "rho((a2 T)^4) at q=2": block.to_json(),
        "rho(x) at q=2": m.to_json(),
        "free_group_image": aut.render(),
        "conjugating_shape": has_conjugating_shape(aut),
    }


_PROBES = (2, 3 + 1j, 0.3 - 0.7j)


def _spectrum_claim(tag: str):
    ev = {}
    ok = True
    for k in (1, 2):
        s = QSetId(tag, k)
        m = _SYM.rep_word(prop5_witness(s))
        for q in _PROBES:
            got = mat_eigenvalues(m.specialize(ScalarMode.complex(q)))
            want = prop5_expected_spectrum(s, q)
            same = multiset_close(got, want, 1e-8)
            ev[f"k={k} q={_cstr(complex(q))}"] = {
                "eigenvalues": [_cstr(z) for z in got],
                "expected": [_cstr(z) for z in want],
                "match": same,
            }
            ok = ok and same
    return _hard(ok), ev


@_claim("prop5-P-spectrum", "Proposition 5 (P_m witness spectrum)")
def _p_spec():
    return _spectrum_claim("P")


@_claim("prop5-R-spectrum", "Proposition 5 (R_m witness spectrum)")
def _r_spec():
    return _spectrum_claim("R")


@_claim("prop5-P-R-members-give-kernel", "Proposition 5 (q in P_m or R_m, m even)")
def _pr_members():
    ev = {}
    ok = True
    for tag in ("P", "R"):
        for k in (2, 4):
            s = QSetId(tag, k)
            m = _SYM.rep_word(prop5_witness(s))
            for q in qset_candidates(s):
                mq = m.specialize(ScalarMode.complex(q))
                ident = mq.is_identity(1e-8)
                ev[f"{s} q={_cstr(q)}"] = ident
                ok = ok and ident
    return _hard(ok), ev


@_claim("prop5-S-witness", "Proposition 5 (S_n witness)")
def _s_witness():
    ev = {}
    mismatch = False
    for n in (1, 2):
        m = _SYM.rep_word(prop5_witness(QSetId("S", n)))
        for q in _PROBES:
            got = mat_eigenvalues(m.specialize(ScalarMode.complex(q)))
            s_form = [1, 1, ((1 - q) / q) ** (2 * n)]
            r_form = s_witness_spectrum(n, q)
            ev[f"n={n} q={_cstr(complex(q))}"] = {
                "eigenvalues": [_cstr(z) for z in got],
                "matches_S_expression": multiset_close(got, s_form, 1e-8),
                "matches_R_type_expression": multiset_close(got, r_form, 1e-8),
            }
        for q in qset_candidates(QSetId("S", n)):
            ident = m.specialize(ScalarMode.complex(q)).is_identity(1e-8)
            ev[f"n={n} member q={_cstr(q)} gives I"] = ident
            mismatch = mismatch or not ident
    return checked("mismatch" if mismatch else "match"), ev


@_claim("prop5-T-fixes-e1", "Proposition 5 proof, T(e_1) = e_1")
def _t_e1():
    t = _rho("T")
    column = [render_scalar(t[i, 0]) for i in range(3)]
    row = [render_scalar(x) for x in t.rows[0]]
    fixed = column == ["1", "0", "0"] or row == ["1", "0", "0"]
    return checked("match" if fixed else "mismatch"), {
        "rho(T) first column": column,
        "rho(T) first row": row,
        "note": "rho(T) e_1 = q e_1, so T fixes e_1 only projectively",
    }


# -- determinants and kernel candidates ---------------------------------------------------


def random_words(count: int, max_len: int, seed: int, alphabet: str) -> list[Word]:
    rng = random.Random(seed)
    if alphabet == "t":
        gens = [Gen.alpha(1), Gen.alpha(2), Gen.t(), Gen.t(-1)]
    else:
        gens = [Gen.alpha(1), Gen.alpha(2), Gen.sigma(1), Gen.sigma(1, -1), Gen.sigma(2), Gen.sigma(2, -1)]
    return [Word(tuple(rng.choice(gens) for _ in range(rng.randint(0, max_len))), 3) for _ in range(count)]


@_claim("thm7-det-formula", "Theorem 7 proof, det(rho(x)) = (-1)^{a1+a2+t-i} q^{3(t-i)}")
def _det_formula():
    words = random_words(150, 12, 7, "t") + random_words(150, 12, 8, "sigma")
    bad = [str(w) for w in words if _SYM.rep_word(w).det() != predicted_det(w)]
    return _hard(not bad), {"words_checked": len(words), "mismatches": bad[:5]}


@_claim("thm7-classification", "Theorem 7 (shapes of kernel candidates)")
def _classification():
    cases = {"T^3": ("ii", False), "a1": ("i", False), "a1 T a1 T^-1": ("iii", True), "T a1 T^-1 a1": ("iv", True)}
    ev = {}
    ok = True
    for text, (form, eligible) in cases.items():
        c = classify_kernel_candidate(parse_word(text))
        ev[text] = {"form": c.form, "eligible": c.eligible, "reason": c.reason}
        ok = ok and c.form == form and c.eligible == eligible
    return _hard(ok), ev


@_claim("generic-kernel-element", "Theorem 7 (kernel candidates for generic q)")
def _generic_kernel():
    w = parse_word("a2 T^2 a2 T^-2")
    m = _SYM.rep_word(w)
    aut = apply_word(w)
    found = m.is_identity() and not is_identity(aut)
    return checked("found" if found else "none"), {
        "word": str(w),
        "rho(word)": m.to_json(),
        "free_group_image": aut.render(),
        "note": "rho(T^2) is central but T^2 does not commute with a2 in C_3, so this commutator "
        "lies in ker rho for every q",
    }


# -- closed forms for constant blocks ---------------------------------------------------------


def _printed_vs_direct(case_id: str, ks, odd_options=(False,)):
    ev = {}
    ok = True
    for k in ks:
        for odd in odd_options:
            pf = theorem8_closed_form(case_id, k, odd)
            m = _SYM.rep_word(constant_block_word(case_id, k, odd))
            bad = pf.mismatches(m)
            label = f"k={k}" + (" r=2k+1" if odd else (" r=2k" if len(odd_options) > 1 else ""))
            ev[label] = {
                "match": not bad,
                "differences": [
                    {"entry": f"({i},{j})", "printed": render_scalar(p), "direct": render_scalar(a)} for i, j, p, a in bad
                ],
            }
            ok = ok and not bad
    return ok, ev


for _cid, _locus in (("a.i", "Theorem 8 (a)(i)"), ("a.ii", "Theorem 8 (a)(ii)")):

    def _make(cid=_cid):
        def fn():
            ok, ev = _printed_vs_direct(cid, (1, 2, 3))
            return _hard(ok), ev

        return fn

    _claim(f"thm8-{_cid.replace('.', '-')}-printed-matrix", _locus)(_make())


@_claim("thm8-a-not-in-kernel", "Theorem 8 (a)")
def _a_conclusion():
    ev = {}
    ok = True
    for cid in ("a.i", "a.ii"):
        for k in (1, 2, 3):
            m = _SYM.rep_word(constant_block_word(cid, k))
            diag = [m[1, 1], m[2, 2]]
            want = [Q ** (2 * k), Q ** (-2 * k)] if cid == "a.i" else [Q ** (-2 * k), Q ** (2 * k)]
            same = diag == want
            ev[f"{cid} k={k}"] = {"diag(2,3)": [render_scalar(x) for x in diag], "match": same}
            ok = ok and same and not m.is_identity()
    return _hard(ok), ev


for _cid, _locus in (
    ("c.i", "Theorem 8 (c)(i)"),
    ("c.ii", "Theorem 8 (c)(ii)"),
    ("d.i", "Theorem 8 (d)(i)"),
    ("d.ii", "Theorem 8 (d)(ii)"),
):

    def _make(cid=_cid):
        def fn():
            ok, ev = _printed_vs_direct(cid, (1, 2, 3), (False, True))
            return _hard(ok), ev

        return fn

    _claim(f"thm8-{_cid.replace('.', '-')}-entries", _locus)(_make())


for _cid, _locus in (("b.i", "Theorem 8 (b)(i)"), ("b.ii", "Theorem 8 (b)(ii)"), ("e.i", "Theorem 8 (e)(i)")):

    def _make(cid=_cid):
        def fn():
            ok, ev = _printed_vs_direct(cid, (1, 3))
            return checked("match" if ok else "mismatch"), ev

        return fn

    _claim(f"thm8-{_cid.replace('.', '-')}-odd-k-zero-entry", _locus + ", k odd")(_make())


def _special(case_id: str):
    se = SPECIAL_ENTRIES[case_id]
    ctx = RepContext(3, ScalarMode.rational(se.q))
    ev = {}
    ok = True
    for k in (2, 4):
        m = ctx.rep_word(constant_block_word(case_id, k))
        i, j = se.position
        got = m[i - 1, j - 1]
        same = got == se.expected(k)
        ev[f"k={k}"] = {"entry": f"({i},{j})", "printed": se.expected(k), "direct": render_scalar(got), "match": same}
        ok = ok and same
    ev["q"] = str(se.q)
    return checked("match" if ok else "mismatch"), ev


@_claim("thm8-b-q4-entry", "Theorem 8 (b)(i)/(ii), q = 4")
def _b_q4():
    status_i, ev_i = _special("b.i")
    status_ii, ev_ii = _special("b.ii")
    both = "match" if status_i == status_ii == checked("match") else "mismatch"
    return checked(both), {"b.i": ev_i, "b.ii": ev_ii}


@_claim("thm8-e-i-quarter-entry", "Theorem 8 (e)(i), q = 1/4")
def _e_quarter():
    return _special("e.i")


@_claim("thm8-e-ii-printed-matrix", "Theorem 8 (e)(ii)")
def _e_ii():
    ok, ev = _printed_vs_direct("e.ii", (1,))
    ev["direct k=1"] = _SYM.rep_word(constant_block_word("e.ii", 1)).to_json()
    ev["printed k=1"] = [[render_scalar(x) for x in r] for r in theorem8_closed_form("e.ii", 1).entries]
    return checked("match" if ok else "mismatch"), ev


# -- conjugation reduction ----------------------------------------------------------------------


def _reduction_rows():
    rows = []
    for spec, case, i in reduction_corpus():
        red = conjugate_reduce(spec, case, i)
        x = build_from_spec(spec)
        lhs = _SYM.rep_word(red.w.inverse() * x * red.w)
        rhs = _SYM.rep_word(red.reduced)
        rows.append((spec, red, lhs == rhs, not rhs.is_identity()))
    return rows


@_claim("prop9-conjugation-reduction", "Proposition 9")
def _reduction_identity():
    rows = _reduction_rows()
    ok = all(r[2] for r in rows)
    return _hard(ok), {
        "corpus_size": len(rows),
        "cases": sorted({f"{r[1].label} r={r[0].r} {r[0].form}" for r in rows}),
        "failures": [str(build_from_spec(r[0])) for r in rows if not r[2]],
    }


@_claim("example10-reductions", "Example 10")
def _reduction_examples():
    ev = {}
    ok = True
    checks = [
        ("r=3 (a)", E1Spec(((A2,), (A1, A2), (A1,))), "a", None, "a1 a2 T a1 a2 T^-1"),
        ("r=3 (b)", E1Spec(((A1,), (A1, A2), (A1,))), "b", None, "a1 a2"),
        ("r=5 (c) i=0", E1Spec(((A1,), (A2,), (A1, A2), (A1,), (A1,))), "c", 0, "a1 a2 T a1 a2 T^-1"),
        ("r=7 (c) i=1", E1Spec(((A1,), (A1,), (A2,), (A1, A2), (A1,), (A1,), (A1,))), "c", 1, "a1 a2 T a1 a2 T^-1"),
    ]
    for label, spec, case, i, expected in checks:
        red = conjugate_reduce(spec, case, i)
        same = red.reduced == parse_word(expected)
        x = build_from_spec(spec)
        eq = _SYM.rep_word(red.w.inverse() * x * red.w) == _SYM.rep_word(red.reduced)
        ev[label] = {"w": str(red.w), "reduced": str(red.reduced), "expected": expected, "identity_holds": eq}
        ok = ok and same and eq
    return _hard(ok), ev


@_claim("thm11-not-in-kernel", "Theorem 11")
def _reduced_not_identity():
    rows = _reduction_rows()
    ok = all(r[3] for r in rows)
    return _hard(ok), {"corpus_size": len(rows), "reduced_equal_to_I": [str(r[1].reduced) for r in rows if not r[3]]}


# -- driver -----------------------------------------------------------------------------------------


def claim_ids() -> list[str]:
    return [cid for cid, _, _ in _REGISTRY]


def verify_paper_claims(only: list[str] | None = None) -> list[ClaimVerdict]:
    """Run the registry in its fixed order and return one verdict per claim."""
    out = []
    for cid, locus, fn in _REGISTRY:
        if only and cid not in only:
            continue
        status, evidence = fn()
        out.append(ClaimVerdict(cid, locus, status, evidence))
    return out


def verdicts_to_json(verdicts: list[ClaimVerdict]) -> str:
    return json.dumps([v.to_json() for v in verdicts], indent=2, sort_keys=False)
