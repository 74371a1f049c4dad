"""Acceptance criteria, one test each; every test prints a PASS/FAIL line."""

import random
from fractions import Fraction
from itertools import permutations


from lkconj.analysis.claims import FAIL, PASS, verify_paper_claims
from lkconj.analysis.closed_forms import theorem8_closed_form, constant_block_word
from lkconj.analysis.qsets import QSetId, prop5_expected_spectrum, prop5_witness, qset_member
from lkconj.analysis.reduce import conjugate_reduce, reduction_corpus
from lkconj.analysis.search import SearchConfig, kernel_search
from lkconj.freegroup import apply_word, is_identity
from lkconj.matrices import RingMatrix, cayley_hamilton_residual, mat_det, mat_eigenvalues, multiset_close
from lkconj.representation import RELATION_FAMILIES, RepContext, predicted_det, relation_instances, verify_relations
from lkconj.scalars import ONE, Q, ZERO, LaurentPoly, ScalarMode
from lkconj.words import Gen, Word, build_from_spec, enumerate_alpha_subgroup, free_reduce, parse_word

SYM = RepContext(3)


def report(capsys, number, title, ok, detail=""):
    line = f"{'PASS' if ok else 'FAIL'}  criterion {number:>2}: {title}"
    if detail:
        line += f"  [{detail}]"
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


def rho(text, ctx=SYM):
    return ctx.rep_word(parse_word(text, ctx.n))


def test_01_relation_suite(capsys):
    bad = []
    for n in (3, 4):
        rep = verify_relations(RepContext(n))
        bad += [f"n={n} {c.instance.family}" for c in rep.checks if not c.holds]
        for inst in relation_instances(n):
            if apply_word(inst.lhs, n) != apply_word(inst.rhs, n):
                bad.append(f"F_{n} {inst.family}")
    families = {i.family for i in relation_instances(4)}
    ok = not bad and families == set(RELATION_FAMILIES)
    report(capsys, 1, "relation families hold in matrices and on F_n (n = 3, 4)", ok, ", ".join(bad))


def test_02_T_powers(capsys):
    T = rho("T")
    ok = rho("T T") == RingMatrix.scalar(Q * Q, 3)
    for k in range(-4, 5):
        ok &= rho(f"T^{2 * k + 1}") == T.scale(LaurentPoly.monomial(1, 2 * k))
    report(capsys, 2, "rho(T)^2 = q^2 I and rho(T^(2k+1)) = q^(2k) rho(T), k in [-4, 4]", ok)


def test_03_sigma_from_T(capsys):
    ok = rho("s2") == rho("T a1 a2") and rho("s1") == rho("a2 a1 T a2 a1")
    report(capsys, 3, "rho(s2) = rho(T a1 a2), rho(s1) = rho(a2 a1 T a2 a1)", ok)


def test_04_general_n_matches_explicit_matrices(capsys):
    qq = Q * (Q - ONE)
    hand = {
        "s1": [[Q * Q, ZERO, ZERO], [qq, ONE - Q, Q], [ZERO, ONE, ZERO]],
        "s2": [[ONE - Q, Q, qq], [ONE, ZERO, ZERO], [ZERO, ZERO, Q * Q]],
        "a1": [[ONE, ZERO, ZERO], [ZERO, ZERO, ONE], [ZERO, ONE, ZERO]],
        "a2": [[ZERO, ONE, ZERO], [ONE, ZERO, ZERO], [ZERO, ZERO, ONE]],
    }
    bad = [g for g, rows in hand.items() if rho(g) != RingMatrix.from_rows(rows)]
    report(capsys, 4, "general-n generators at n = 3 equal the explicit 3x3 matrices", not bad, ", ".join(bad))


def test_05_alpha_subgroup(capsys):
    els = enumerate_alpha_subgroup()
    ctx = RepContext(3, ScalarMode.rational(3))
    images = {ctx.rep_word(e.word).rows for e in els}
    perms = {tuple(tuple(1 if p[i] == j else 0 for j in range(3)) for i in range(3)) for p in permutations(range(3))}
    names = {str(e.word) for e in els}
    ok = (
        len(els) == 6
        and images == perms
        and names == {"e", "a1", "a2", "a1 a2", "a2 a1", "a1 a2 a1"}
        and rho("a1 a2 a1 a2 a1 a2") == RingMatrix.identity(3)
    )
    report(capsys, 5, "alpha subgroup has 6 elements mapping onto the S_3 permutation matrices", ok)


def test_06_example6_end_to_end(capsys):
    q2 = RepContext(3, ScalarMode.rational(2))
    power = rho("a2 T a2 T a2 T a2 T", q2) == RingMatrix.scalar(Fraction(16), 3, q2.mode)
    ident = rho("a2 T a2 T a2 T a2 T T^-4", q2) == RingMatrix.identity(3, q2.mode)
    nontrivial = not is_identity(apply_word(parse_word("a2 T a2 T a2 T a2 T T^-4")))
    report(capsys, 6, "(a2 T)^4 = 16 I and (a2 T)^4 T^-4 = I at q = 2, nontrivial on F_3", power and ident and nontrivial)


def test_07_qset_witnesses(capsys):
    ok = qset_member(QSetId("P", 2), 2) and qset_member(QSetId("R", 2), 0.5)
    ok &= all(qset_member(QSetId("S", n), 0.5) for n in (1, 2, 3))
    ok &= not qset_member(QSetId("S", 1), 2)
    report(capsys, 7, "2 in P_2, 1/2 in R_2 and S_1..S_3, 2 not in S_1", ok)


def test_08_determinant_formula(capsys):
    rng = random.Random(2024)
    pools = [
        [Gen.alpha(1), Gen.alpha(2), Gen.t(), Gen.t(-1)],
        [Gen.alpha(1), Gen.alpha(2)] + [Gen.sigma(i, p) for i in (1, 2) for p in (1, -1)],
    ]
    bad = 0
    for pool in pools:
        for _ in range(1000):
            w = Word(tuple(rng.choice(pool) for _ in range(rng.randint(0, 12))), 3)
            bad += predicted_det(w) != mat_det(SYM.rep_word(w))
    report(capsys, 8, "predicted det equals det(rho(w)) on 2 x 1000 random words", bad == 0, f"{bad} mismatches")


def test_09_theorem8_a_closed_forms(capsys):
    bad = []
    for case_id in ("a.i", "a.ii"):
        for k in (1, 2, 3):
            m = SYM.rep_word(constant_block_word(case_id, k))
            for i, j, printed, actual in theorem8_closed_form(case_id, k).mismatches(m):
                bad.append(f"{case_id} k={k} ({i},{j}) printed {printed} actual {actual}")
    report(capsys, 9, "printed (a)(i)/(a)(ii) matrices equal direct evaluation, k = 1, 2, 3", not bad, "; ".join(bad))


def test_10_spectra(capsys):
    bad = []
    for tag in ("P", "R"):
        for k in (1, 2):
            s = QSetId(tag, k)
            m = SYM.rep_word(prop5_witness(s))
            for q in (2, 3 + 1j):
                got = mat_eigenvalues(m.specialize(ScalarMode.complex(q)))
                if not multiset_close(got, prop5_expected_spectrum(s, q), 1e-8):
                    bad.append(f"{s} q={q}")
    report(capsys, 10, "P/R witness eigenvalues match the closed-form expressions", not bad, ", ".join(bad))


def test_11_reducer(capsys):
    corpus = reduction_corpus()
    keys = {(case, spec.r, i) for spec, case, i in corpus}
    needed = {("a", r, None) for r in (3, 5, 7)} | {("b", r, None) for r in (3, 5, 7)}
    needed |= {("c", 5, 0), ("c", 7, 0), ("c", 7, 1)}
    bad = 0
    for spec, case, i in corpus:
        red = conjugate_reduce(spec, case, i)
        lhs = SYM.rep_word(red.w.inverse() * build_from_spec(spec) * red.w)
        rhs = SYM.rep_word(red.reduced)
        bad += lhs != rhs or rhs == RingMatrix.identity(3)
    ok = len(corpus) >= 12 and needed <= keys and bad == 0
    report(capsys, 11, f"conjugation reduction on {len(corpus)} specs, reduced word never maps to I", ok)


def test_12_kernel_search(capsys):
    ex6 = free_reduce(parse_word("a2 T a2 T a2 T a2 T T^-4"))
    q2 = kernel_search(SearchConfig(ScalarMode.rational(2), "E", max_r=4, max_abs_exponent=4))
    found = any(h.word == ex6 and h.nontrivial for h in q2)
    free = kernel_search(SearchConfig(ScalarMode.symbolic(), "FreeWords", max_length=10))
    detail = f"q=2 E search found witness: {found}; symbolic free words <= 10: {len(free)} nontrivial hits"
    if len(free):
        detail += f", shortest {free.hits[0].word}"
    report(capsys, 12, "kernel search finds the q = 2 witness and nothing symbolic up to length 10", found and not len(free), detail)


def test_13_claim_registry(capsys):
    verdicts = {v.claim_id: v for v in verify_paper_claims()}
    hard_required = [
        "prop4-alpha-subgroup", "rho-T-squared-central", "sigma-from-T-identities",
        "qset-P2-contains-2", "qset-R2-contains-half", "qset-S-contains-half",
        "example6-kernel-witness", "thm7-det-formula",
        "thm8-a-i-printed-matrix", "thm8-a-ii-printed-matrix",
        "thm8-c-i-entries", "thm8-c-ii-entries", "thm8-d-i-entries", "thm8-d-ii-entries",
    ]
    checked_required = ["thm8-b-q4-entry", "thm8-e-i-quarter-entry", "thm8-e-ii-printed-matrix"]
    problems = [f"{c} missing" for c in hard_required + checked_required if c not in verdicts]
    problems += [f"{c} {verdicts[c].status}" for c in hard_required if c in verdicts and verdicts[c].status != PASS]
    problems += [f"{c} not CHECKED" for c in checked_required if c in verdicts and verdicts[c].hard]
    problems += [f"{c} has no evidence" for c, v in verdicts.items() if not v.evidence]
    exit_code = 1 if any(v.status == FAIL for v in verdicts.values()) else 0
    ok = len(verdicts) >= 14 and not problems
    report(capsys, 13, f"{len(verdicts)} verdicts, required hard claims PASS (exit code {exit_code})", ok, "; ".join(problems))


def test_14_property_suites(capsys):
    rng = random.Random(99)

    def poly():
        return LaurentPoly({rng.randint(-8, 8): rng.randint(-99, 99) for _ in range(rng.randint(0, 5))})

    ring = all(
        (a * b) * c == a * (b * c) and a * (b + c) == a * b + a * c and a + b == b + a and a * b == b * a
        for a, b, c in ((poly(), poly(), poly()) for _ in range(1000))
    )
    letters = [Gen.alpha(1), Gen.alpha(2), Gen.t(), Gen.t(-1), Gen.sigma(1), Gen.sigma(2, -1)]

    def word(max_len):
        return Word(tuple(rng.choice(letters) for _ in range(rng.randint(0, max_len))), 3)

    hom = all(
        SYM.rep_word(u * v) == SYM.rep_word(u) @ SYM.rep_word(v)
        for u, v in ((word(8), word(8)) for _ in range(500))
    )

    def mono_matrix():
        return RingMatrix.from_rows(
            [[LaurentPoly.monomial(rng.randint(-5, 5), rng.randint(-4, 4)) for _ in range(3)] for _ in range(3)]
        )

    det = all(mat_det(a @ b) == mat_det(a) * mat_det(b) for a, b in ((mono_matrix(), mono_matrix()) for _ in range(500)))
    ch_words = ["s1", "s2", "a1", "a2", "T", "T^-1", "s1^-1", "a2 T", "T a1 a2 a1", "a1 T a1 T^-1",
                "a2 T a2 T a2 T a2 T T^-4", "s1 s2 s1"]
    zero = RingMatrix.scalar(ZERO, 3)
    ch = all(cayley_hamilton_residual(rho(w)) == zero for w in ch_words)
    fr = all(free_reduce(free_reduce(w)) == free_reduce(w) for w in (word(14) for _ in range(500)))
    parts = {"ring laws": ring, "homomorphism": hom, "det multiplicative": det, "Cayley-Hamilton": ch, "free reduce": fr}
    failed = [k for k, v in parts.items() if not v]
    report(capsys, 14, "property suites at the stated sample sizes", not failed, ", ".join(failed))
