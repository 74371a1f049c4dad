"""Command-line entry point: ``lkconj <subcommand> ...``.

Exit codes: 0 on success, 1 when a hard claim or relation fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .analysis.claims import verdicts_to_json, verify_paper_claims
from .analysis.qsets import QSetId, qset_expressions, qset_member
from .analysis.reduce import alpha_name, conjugate_reduce, reduce_auto
from .analysis.search import KernelHit, SearchConfig, kernel_search
from .errors import (
    CaseNotApplicable,
    ExcludedPoint,
    GeneratorIndexError,
    SpecInvalid,
    TOnlyForN3,
    WordSyntaxError,
    ZeroQ,
    ZeroSpecialization,
)
from .matrices import mat_det, render_matrix, render_scalar
from .representation import RepContext, predicted_det, verify_relations
from .scalars import ScalarMode, render_poly
from .words import ALPHA_WORDS, LEADING_T, TRAILING_T, E1Spec, enumerate_alpha_subgroup, parse_word


class UsageError(Exception):
    pass


def parse_q(text: str):
    """``a/b`` (or a decimal) gives an exact Fraction, ``re+imi`` a complex number."""
    s = text.strip().replace(" ", "")
    try:
        if s.endswith(("i", "j")):
            value = complex(s[:-1] + "j")
        else:
            value = Fraction(s)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"cannot read q = {text!r}") from None
    if value == 0:
        raise UsageError("q must be nonzero")
    return value


def _mode(args) -> ScalarMode:
    if getattr(args, "symbolic", False) or args.q is None:
        return ScalarMode.symbolic()
    q = parse_q(args.q)
    return ScalarMode.complex(q) if isinstance(q, complex) else ScalarMode.rational(q)


def _dump(obj) -> None:
    print(json.dumps(obj, indent=2))


def _cells(m) -> list[list[str]]:
    return [[render_scalar(x) for x in row] for row in m.rows]


# -- subcommands ----------------------------------------------------------------


def cmd_eval(args) -> int:
    w = parse_word(args.word, args.n, allow_t=args.alphabet == "t")
    ctx = RepContext(args.n, _mode(args))
    m = ctx.rep_word(w)
    out = {"word": str(w), "n": args.n, "mode": str(ctx.mode), "matrix": _cells(m)}
    if args.det:
        pred = predicted_det(w)
        out["det"] = render_scalar(mat_det(m))
        out["predicted_det"] = render_poly(pred) if ctx.mode.is_symbolic else render_scalar(ctx.mode.convert(pred))
    if args.json:
        _dump(out)
        return 0
    print(render_matrix(m))
    if args.det:
        print(f"det = {out['det']}")
        print(f"predicted det = {out['predicted_det']}")
    return 0


def cmd_verify(args) -> int:
    both = not args.relations and not args.claims
    status = 0
    report: dict = {}
    if args.relations or both:
        rows = []
        for n in args.n or [3, 4]:
            rep = verify_relations(RepContext(n))
            for c in rep.checks:
                rows.append({
                    "n": n,
                    "family": c.instance.family,
                    "relation": f"{c.instance.lhs} = {c.instance.rhs}",
                    "status": "PASS" if c.holds else "FAIL",
                })
            if not rep.all_hold:
                status = 1
        report["relations"] = rows
    if args.claims or both:
        verdicts = verify_paper_claims()
        report["claims"] = json.loads(verdicts_to_json(verdicts))
        if any(v.failed for v in verdicts):
            status = 1
    if args.json:
        _dump(report)
        return status
    for row in report.get("relations", []):
        print(f"{row['status']:<6} n={row['n']}  {row['family']:<22} {row['relation']}")
    for v in report.get("claims", []):
        print(f"{v['status']:<22} {v['claim_id']:<34} {v['paper_locus']}")
    if "claims" in report:
        hard_fail = sum(v["status"] == "FAIL" for v in report["claims"])
        print(f"{len(report['claims'])} claims, {hard_fail} hard failures")
    return status


_FAMILY = {"e": "E", "e1": "E1", "freewords": "FreeWords"}


def _hit_json(h: KernelHit) -> dict:
    return {"word": str(h.word), "nontrivial": h.nontrivial}


def cmd_search(args) -> int:
    try:
        config = SearchConfig(
            mode=_mode(args),
            family=_FAMILY[args.family],
            max_r=args.max_r,
            max_abs_exponent=args.max_exp,
            max_length=args.max_len,
            tolerance=args.tol,
            alphabet=args.alphabet,
            include_trivial=args.include_trivial,
            node_budget=args.budget,
            threads=args.threads,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None

    def stream(h: KernelHit):
        tag = "nontrivial" if h.nontrivial else "trivial"
        print(f"hit: {h.word}  [{tag}]", flush=True)

    result = kernel_search(config, on_hit=None if args.json else stream)
    st = result.stats
    if args.json:
        _dump({
            "mode": str(config.mode),
            "family": config.family,
            "hits": [_hit_json(h) for h in result.hits],
            "stats": {
                "nodes": st.nodes,
                "candidates": st.candidates,
                "det_filtered": st.det_filtered,
                "screened": st.screened,
                "confirmed": st.confirmed,
                "false_positives": st.false_positives,
                "trivial_hits": st.trivial_hits,
            },
        })
        return 0
    print(
        f"{len(result)} hits; {st.nodes} nodes, {st.candidates} candidates, "
        f"{st.screened} passed the screen, {st.confirmed} confirmed "
        f"({st.trivial_hits} trivial), {st.seconds:.2f}s"
    )
    return 0


def _block(name: str) -> tuple:
    try:
        return ALPHA_WORDS[name]
    except KeyError:
        names = ", ".join(k for k in ALPHA_WORDS if k != "e")
        raise UsageError(f"unknown block {name!r}; use one of {names}") from None


def cmd_reduce(args) -> int:
    spec = E1Spec(tuple(_block(b) for b in args.blocks), args.form)
    red = reduce_auto(spec) if args.case == "auto" else conjugate_reduce(spec, args.case, args.i)
    out = {
        "blocks": [alpha_name(a) for a in spec.A_list],
        "form": spec.form,
        "case": red.label,
        "conjugator": str(red.w),
        "reduced": str(red.reduced),
    }
    if args.json:
        _dump(out)
    else:
        print(f"case {out['case']}")
        print(f"w       = {out['conjugator']}")
        print(f"reduced = {out['reduced']}")
    return 0


def cmd_qset(args) -> int:
    s = QSetId(args.set, args.k)
    q = parse_q(args.q)
    values = qset_expressions(s, q)
    member = qset_member(s, q, args.tol)
    if args.json:
        _dump({"set": str(s), "q": args.q, "member": member, "values": [render_scalar(complex(v)) for v in values]})
    else:
        print(f"{s} contains q = {args.q}: {'yes' if member else 'no'}")
        for v in values:
            print(f"  {render_scalar(complex(v))}")
    return 0


def cmd_alpha_words(args) -> int:
    ctx = RepContext(3, ScalarMode.rational(1))
    elements = enumerate_alpha_subgroup()
    if args.json:
        _dump([
            {"word": str(el.word), "identity": el.is_identity, "matrix": _cells(ctx.rep_word(el.word))}
            for el in elements
        ])
        return 0
    for el in elements:
        print(el.word)
        print(render_matrix(ctx.rep_word(el.word)))
    return 0


# -- argument parsing -----------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="lkconj", description="Exact checks and kernel search for the extended Lawrence-Krammer representation of C_n.")
    sub = p.add_subparsers(dest="command", required=True)

    def add_q(sp):
        g = sp.add_mutually_exclusive_group()
        g.add_argument("--q", help="specialize q: a/b (exact) or re+imi (floating)")
        g.add_argument("--symbolic", action="store_true", help="keep q symbolic (default)")

    e = sub.add_parser("eval", help="print rho(word)")
    e.add_argument("word", help='e.g. "a2 T a2 T^-1" or "s1 s2^-1"')
    e.add_argument("-n", type=int, default=3)
    add_q(e)
    e.add_argument("--det", action="store_true", help="also print det and the predicted det")
    e.add_argument("--alphabet", choices=("t", "sigma"), default="t", help="sigma rejects T tokens")
    e.add_argument("--json", action="store_true")
    e.set_defaults(func=cmd_eval)

    v = sub.add_parser("verify", help="relation suite and claim registry")
    v.add_argument("--relations", action="store_true")
    v.add_argument("--claims", action="store_true")
    v.add_argument("-n", type=int, action="append", help="n for the relation suite (repeatable; default 3 and 4)")
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("search", help="search for words with rho(w) = I")
    add_q(s)
    s.add_argument("--family", choices=sorted(_FAMILY), default="e")
    s.add_argument("--max-r", type=int, default=4)
    s.add_argument("--max-exp", type=int, default=4)
    s.add_argument("--max-len", type=int, default=8)
    s.add_argument("--tol", type=float, default=1e-9)
    s.add_argument("--alphabet", choices=("t", "sigma"), default="t")
    s.add_argument("--threads", type=int, default=1)
    s.add_argument("--budget", type=int, default=5_000_000, help="node budget")
    s.add_argument("--include-trivial", action="store_true", help="also report words acting trivially on F_3")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_search)

    r = sub.add_parser("reduce", help="conjugation reduction of an odd-r E_1 word")
    r.add_argument("blocks", nargs="+", help="alpha blocks by name: a1 a2 a1a2 a2a1 a1a2a1")
    r.add_argument("--case", choices=("a", "b", "c", "auto"), default="auto")
    r.add_argument("--i", type=int, default=None, help="index for case c")
    r.add_argument("--form", choices=(TRAILING_T, LEADING_T), default=TRAILING_T)
    r.add_argument("--json", action="store_true")
    r.set_defaults(func=cmd_reduce)

    qs = sub.add_parser("qset", help="membership of q in P_k, R_k or S_k")
    qs.add_argument("set", choices=("P", "R", "S"))
    qs.add_argument("k", type=int)
    qs.add_argument("--q", required=True)
    qs.add_argument("--tol", type=float, default=1e-9)
    qs.add_argument("--json", action="store_true")
    qs.set_defaults(func=cmd_qset)

    a = sub.add_parser("alpha-words", help="the six elements of the alpha subgroup")
    a.add_argument("--json", action="store_true")
    a.set_defaults(func=cmd_alpha_words)
    return p


_USAGE_ERRORS = (
    UsageError,
    WordSyntaxError,
    GeneratorIndexError,
    TOnlyForN3,
    SpecInvalid,
    CaseNotApplicable,
    ExcludedPoint,
    ZeroQ,
    ZeroSpecialization,
)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _USAGE_ERRORS as exc:
        print(f"lkconj {args.command}: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"lkconj {args.command}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
