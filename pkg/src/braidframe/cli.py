"""Command-line front end.

Exit codes: 0 when the verdict is verified or consistent, 1 when a check
fails or a map is refuted, 2 on usage or parse errors.  ``--json`` output is
deterministic; ``--timing`` wraps it in an envelope carrying the wall time.
"""

import argparse
import json
import random
import shlex
import sys
import time

from . import __version__
from .framed_groups import (
    FramedFullElement, FramedPureElement, fb_multiply, fb_tilde_closed_presentation,
    forget_framing, fp_boundary_presentation, fp_closed_presentation, fp_multiply,
    permutation_of, torus_fp_presentation, torus_fp_tilde_presentation,
)
from .homomorphisms import (
    CHECKERS, alpha_forget_framed, beta_forget_framing, beta_hat_boundary, chi_doubling,
    fb_tilde_expansion, forget_strand_hom, hom_audit, iota_section,
)
from .pi1_action_oracle import build_action_table, oracle_report
from .presentations import PresentationError, h1_invariants
from .surface_braid_groups import (
    braid_alphabet, closed_pure_presentation, pure_alphabet, pure_presentation,
    torus_pure_presentation, torus_quotient_presentation, tr_relators,
)
from .words import WordError, format_word, parse_word, random_word

SCHEMA = 1

BUILDERS = {
    "pure": (("g", "b", "n"), pure_presentation),
    "pure-closed": (("g", "n"), closed_pure_presentation),
    "torus-pure": (("n",), torus_pure_presentation),
    "torus-ptilde": (("n",), torus_quotient_presentation),
    "fp-closed": (("g", "n"), fp_closed_presentation),
    "fp-boundary": (("g", "b", "n"), fp_boundary_presentation),
    "torus-fp": (("n",), torus_fp_presentation),
    "torus-fp-tilde": (("n",), torus_fp_tilde_presentation),
    "fb-tilde": (("g", "n"), fb_tilde_closed_presentation),
}

HOMS = {
    "beta": (("g", "n"), beta_forget_framing),
    "beta-hat": (("g", "b", "n"), beta_hat_boundary),
    "forget": (("g", "b", "n", "s"), forget_strand_hom),
    "chi": (("g", "n"), chi_doubling),
    "alpha": (("g", "b", "n", "m"), alpha_forget_framed),
    "iota": (("g", "b", "n", "m"), iota_section),
    "fbt-expansion": (("g", "n"), fb_tilde_expansion),
}


class UsageError(Exception):
    pass


def _ints(names, values, what):
    if len(values) != len(names):
        raise UsageError(f"{what} expects {len(names)} parameters ({' '.join(names)}), got {len(values)}")
    try:
        return dict(zip(names, map(int, values)))
    except ValueError:
        raise UsageError(f"{what}: parameters must be integers") from None


def _framing(text, n):
    try:
        v = [int(t) for t in text.replace(",", " ").split()] if text.strip() else []
    except ValueError:
        raise UsageError(f"bad framing vector {text!r}") from None
    if len(v) != n:
        raise UsageError(f"framing vector needs {n} entries, got {len(v)}")
    return v


# -- commands: each returns (report dict, ok flag, human text) -----------------

def cmd_reduce(a):
    w = parse_word(" ".join(a.word))
    s = format_word(w)
    return {"word": s, "length": len(w)}, True, s


def cmd_equal(a):
    t = build_action_table(a.g, a.n)
    u = parse_word(a.u, t.braid_alphabet)
    v = parse_word(a.v, t.braid_alphabet)
    eq = t.are_equal(u, v)
    rep = {"g": a.g, "n": a.n, "u": format_word(u), "v": format_word(v), "equal": eq}
    return rep, eq, "equal" if eq else "not equal (acts differently on the free group)"


def cmd_perm(a):
    w = parse_word(" ".join(a.word))
    p = permutation_of(w, a.n)
    return {"images": list(p.images), "cycles": str(p)}, True, str(p)


def cmd_h1(a):
    names, build = BUILDERS[a.builder]
    params = _ints(names, a.params, a.builder)
    inv = h1_invariants(build(**params))
    rep = dict(inv.to_json(), builder=a.builder, params=params)
    return rep, True, str(inv)


def cmd_export(a):
    names, build = BUILDERS[a.builder]
    params = _ints(names, a.params, a.builder)
    P = build(**params)
    doc = P.to_json()
    doc["name"] = P.name
    lines = [f"{P!r}"] + [f"  {r.label}: {format_word(r.word)}" for r in P.relators]
    return doc, True, "\n".join(lines)


def cmd_oracle_check(a):
    fams, first = oracle_report(a.g, a.n, a.jobs)
    ok = first is None
    rep = {"g": a.g, "n": a.n, "families": fams, "verdict": "verified" if ok else "refuted",
           "first_failure": None}
    if first is not None:
        rep["first_failure"] = {"relator": first.label, "word": format_word(first.word),
                                "reproduce": f"braidframe equal {a.g} {a.n} "
                                             f"{shlex.quote(format_word(first.word))} 1"}
    rows = [f"{f:5s} {c['passed']}/{c['checked']}" for f, c in sorted(fams.items())]
    rows.append(f"verdict: {rep['verdict']}")
    return rep, ok, "\n".join(rows)


def cmd_audit(a):
    names, build = HOMS[a.hom]
    params = _ints(names, a.params, a.hom)
    H = build(**params)
    checker = a.checker
    if checker is None:
        checker = "oracle" if H.oracle else ("string-identity" if H.target is not None else "permutation")
    rep = hom_audit(H, checker, jobs=a.jobs)
    rep["params"] = params
    ok = rep["verdict"] in ("verified", "consistent")
    rows = [f"{rep['hom']} [{checker}]: {rep['relators_checked']} checked, "
            f"{len(rep['failures'])} failures -> {rep['verdict']}"]
    if "status" in rep:
        rows.append(f"status: {rep['status']}")
    for f in rep["failures"][:10]:
        rows.append("  " + json.dumps(f, sort_keys=True))
    return rep, ok, "\n".join(rows)


def cmd_fp_mul(a):
    alph = pure_alphabet(a.g, a.b, a.n)
    u = FramedPureElement(_framing(a.f1, a.n), parse_word(a.w1, alph))
    v = FramedPureElement(_framing(a.f2, a.n), parse_word(a.w2, alph))
    r = fp_multiply(u, v)
    rep = {"framing": list(r.framing), "word": format_word(r.word)}
    return rep, True, f"framing {list(r.framing)}  word {format_word(r.word)}"


def cmd_fb_mul(a):
    alph = braid_alphabet(a.g, a.n)
    u = FramedFullElement(_framing(a.f1, a.n), parse_word(a.w1, alph))
    v = FramedFullElement(_framing(a.f2, a.n), parse_word(a.w2, alph))
    r = fb_multiply(u, v)
    rep = {"framing": list(r.framing), "word": format_word(r.braid),
           "permutation": list(r.permutation.images)}
    return rep, True, f"framing {list(r.framing)}  word {format_word(r.braid)}  perm {r.permutation}"


def cmd_ftr_vs_tr(a):
    P = fp_closed_presentation(a.g, a.n)
    tr = {r.params: r.word for r in tr_relators(a.g, a.n, pure_alphabet(a.g, 1, a.n))}
    checks = []
    for r in P.relators:
        if r.family != "FTR":
            continue
        img = forget_framing(r.word)
        rec = {"name": r.label, "status": "pass" if img == tr[r.params] else "fail"}
        if rec["status"] == "fail":
            rec.update(image=format_word(img), expected=format_word(tr[r.params]),
                       reproduce=f"braidframe ftr-vs-tr {a.g} {a.n}")
        checks.append(rec)
    ok = all(c["status"] == "pass" for c in checks)
    rep = {"g": a.g, "n": a.n, "checks": checks, "verdict": "verified" if ok else "refuted"}
    rows = [f"{c['name']}: {c['status']}" for c in checks] + [f"verdict: {rep['verdict']}"]
    return rep, ok, "\n".join(rows)


def cmd_laws(a):
    """Seeded random spot checks of the framed element laws."""
    rng = random.Random(a.seed)
    alph = braid_alphabet(a.g, a.n)
    bad = []
    for t in range(a.count):
        els = [FramedFullElement([rng.randint(-3, 3) for _ in range(a.n)],
                                 random_word(rng, alph, rng.randint(0, 8))) for _ in range(3)]
        u, v, w = els
        left, right = fb_multiply(fb_multiply(u, v), w), fb_multiply(u, fb_multiply(v, w))
        if left != right or left.permutation != permutation_of(left.braid, a.n):
            bad.append({"trial": t, "u": format_word(u.braid), "v": format_word(v.braid),
                        "w": format_word(w.braid),
                        "reproduce": f"braidframe laws {a.g} {a.n} --seed {a.seed} --count {t + 1}"})
    ok = not bad
    rep = {"g": a.g, "n": a.n, "seed": a.seed, "count": a.count, "failures": bad[:10],
           "verdict": "verified" if ok else "refuted"}
    return rep, ok, f"{a.count - len(bad)}/{a.count} trials passed"


# -- parser -------------------------------------------------------------------

def _parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for audits")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized runs")
    common.add_argument("--timing", action="store_true",
                        help="wrap JSON output in an envelope with the wall time")

    p = argparse.ArgumentParser(prog="braidframe", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"braidframe {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("reduce", parents=[common], help="freely reduce a word")
    s.add_argument("word", nargs="+")
    s.set_defaults(func=cmd_reduce)

    s = sub.add_parser("equal", parents=[common], help="compare two braids with the action oracle")
    s.add_argument("g", type=int)
    s.add_argument("n", type=int)
    s.add_argument("u")
    s.add_argument("v")
    s.set_defaults(func=cmd_equal)

    s = sub.add_parser("perm", parents=[common], help="permutation induced by a word")
    s.add_argument("word", nargs="+")
    s.add_argument("--n", type=int, default=None, help="number of strands")
    s.set_defaults(func=cmd_perm)

    for name, func, hlp in (("h1", cmd_h1, "first integral homology of a presentation"),
                            ("export-presentation", cmd_export, "dump a presentation")):
        s = sub.add_parser(name, parents=[common], help=hlp)
        s.add_argument("builder", choices=sorted(BUILDERS))
        s.add_argument("params", nargs="*")
        s.set_defaults(func=func)

    s = sub.add_parser("oracle-check", parents=[common], help="audit the oracle against the pure relators")
    s.add_argument("g", type=int)
    s.add_argument("n", type=int)
    s.set_defaults(func=cmd_oracle_check)

    s = sub.add_parser("audit", parents=[common], help="audit a homomorphism")
    s.add_argument("hom", choices=sorted(HOMS))
    s.add_argument("params", nargs="*")
    s.add_argument("--checker", choices=CHECKERS, default=None)
    s.set_defaults(func=cmd_audit)

    s = sub.add_parser("fp-mul", parents=[common], help="multiply boundary framed pure braids")
    for x in ("g", "b", "n"):
        s.add_argument(x, type=int)
    for x in ("f1", "w1", "f2", "w2"):
        s.add_argument(x)
    s.set_defaults(func=cmd_fp_mul)

    s = sub.add_parser("fb-mul", parents=[common], help="multiply boundary framed braids")
    for x in ("g", "n"):
        s.add_argument(x, type=int)
    for x in ("f1", "w1", "f2", "w2"):
        s.add_argument(x)
    s.set_defaults(func=cmd_fb_mul)

    s = sub.add_parser("ftr-vs-tr", parents=[common], help="FTR with framings erased against TR")
    s.add_argument("g", type=int)
    s.add_argument("n", type=int)
    s.set_defaults(func=cmd_ftr_vs_tr)

    s = sub.add_parser("laws", parents=[common], help="seeded random checks of the framed braid law")
    s.add_argument("g", type=int)
    s.add_argument("n", type=int)
    s.add_argument("--count", type=int, default=1000)
    s.set_defaults(func=cmd_laws)
    return p


def run(argv=None, out=None, err=None):
    """Run one command line; returns the exit code."""
    out = out or sys.stdout
    err = err or sys.stderr
    p = _parser()
    try:
        a = p.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2
    t0 = time.perf_counter()
    try:
        rep, ok, text = a.func(a)
    except (UsageError, WordError, PresentationError, ValueError, KeyError) as e:
        print(f"braidframe {a.command}: error: {e}", file=err)
        return 2
    if a.json:
        doc = {"schema": SCHEMA, "tool": f"braidframe {__version__}", "command": _echo(argv)}
        doc.update(rep)
        if a.timing:
            doc = {"schema": SCHEMA, "report": doc, "wall_time_s": round(time.perf_counter() - t0, 6)}
        print(json.dumps(doc, sort_keys=True), file=out)
    else:
        print(text, file=out)
    return 0 if ok else 1


def _echo(argv):
    """Command echo without output-only flags, so reports stay byte-identical."""
    args = list(sys.argv[1:] if argv is None else argv)
    drop = {"--json", "--timing"}
    out = []
    skip = False
    for x in args:
        if skip:
            skip = False
            continue
        if x in drop:
            continue
        if x == "--jobs":
            skip = True
            continue
        if x.startswith("--jobs="):
            continue
        out.append(x)
    return shlex.join(["braidframe"] + out)


def main():
    sys.exit(run())
