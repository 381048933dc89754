"""Command-line front door.

Verbs map one-to-one onto library entry points; output is deterministic
given identical inputs and seed.  Exit code 0 on pass, 1 on verification
failure, 2 on usage or parse errors.  JSON (--json) is the stable machine
interface; the text output is cosmetic.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import verify as verify_mod
from .abgroup import format_group, parse_group
from .detline import check_symmetry, graded_det, ungraded_det
from .dimtorsor import DimTheory, RelDimTheory, mu_combine
from .exactlin import Field
from .fileio import (ParseError, format_cochain, format_lattice,
                     parse_cochain, parse_lattice, parse_laurent_matrix,
                     parse_simplicial_set)
from .simptors import (GerbeError, GerbeRep, check_mult_torsor,
                       classify_torsor, cohomology, gerbe_to_torsor,
                       iso_decide)
from .swald import BudgetExceeded, enumerate_s_skeleton
from .tate import (TateSESInvalid, check_tate_ses, diagnose_tate_ses,
                   lattice_join, lattice_meet, lift_lattice, project_lattice,
                   relative_index)

PASS, FAIL, USAGE = 0, 1, 2


class CliError(Exception):
    def __init__(self, message, code=USAGE):
        self.code = code
        super().__init__(message)


def _read(path):
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise CliError("cannot read %s: %s" % (path, exc))


def _load_lattice(path):
    try:
        return parse_lattice(_read(path))
    except ParseError as exc:
        raise CliError("%s: %s" % (path, exc))


def _load_lmx(path):
    try:
        return parse_laurent_matrix(_read(path))
    except ParseError as exc:
        raise CliError("%s: %s" % (path, exc))


def _load_sset(path):
    from .simptors import ComplexError
    try:
        return parse_simplicial_set(_read(path))
    except (ParseError, ComplexError) as exc:
        raise CliError("%s: %s" % (path, exc))


def _load_ses(i_path, j_path):
    i = _load_lmx(i_path)
    j = _load_lmx(j_path)
    try:
        return check_tate_ses(i, j)
    except TateSESInvalid as exc:
        raise CliError("sequence invalid: %s" % exc.code, FAIL)


def _emit(args, payload, text_lines, code=PASS):
    if args.json:
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        for line in text_lines:
            print(line)
    return code


def cmd_index(args):
    a = _load_lattice(args.a)
    b = _load_lattice(args.b)
    idx = relative_index(a, b)
    return _emit(args, {"command": "index", "status": "pass", "index": idx},
                 [str(idx)])


def _binary_lattice_op(args, op, name):
    a = _load_lattice(args.a)
    b = _load_lattice(args.b)
    out = op(a, b)
    text = format_lattice(out)
    return _emit(args, {"command": name, "status": "pass", "lattice": text},
                 [text.rstrip()])


def cmd_meet(args):
    return _binary_lattice_op(args, lattice_meet, "meet")


def cmd_join(args):
    return _binary_lattice_op(args, lattice_join, "join")


def cmd_lift(args):
    ses = _load_ses(args.i, args.j)
    u = _load_lattice(args.lattice)
    out = lift_lattice(ses, u)
    text = format_lattice(out)
    return _emit(args, {"command": "lift", "status": "pass", "lattice": text},
                 [text.rstrip()])


def cmd_project(args):
    ses = _load_ses(args.i, args.j)
    u = _load_lattice(args.lattice)
    out = project_lattice(ses, u)
    text = format_lattice(out)
    return _emit(args, {"command": "project", "status": "pass",
                        "lattice": text}, [text.rstrip()])


def cmd_ses_check(args):
    i = _load_lmx(args.i)
    j = _load_lmx(args.j)
    try:
        code = diagnose_tate_ses(i, j)
    except ValueError as exc:
        raise CliError(str(exc))
    if code is None:
        return _emit(args, {"command": "ses-check", "status": "pass"},
                     ["valid admissible short exact sequence"])
    _emit(args, {"command": "ses-check", "status": "fail",
                 "diagnosis": code}, ["invalid: %s" % code])
    return FAIL


def cmd_mu_eval(args):
    ses = _load_ses(args.i, args.j)
    u = _load_lattice(args.lattice)
    group = parse_group(args.group)
    gen = group.elem([int(x) for x in args.generator.split(",")]) \
        if args.generator else group.elem([1] * group.ngens)
    chi = DimTheory(group, gen)
    d1 = RelDimTheory.standard(chi, ses.sub_space,
                               group.elem(_coords(args.d1, group)))
    d2 = RelDimTheory.standard(chi, ses.quot_space,
                               group.elem(_coords(args.d2, group)))
    d = mu_combine(ses, d1, d2)
    val = d.eval(u)
    coords = ",".join(str(x) for x in val.coords)
    return _emit(args, {"command": "mu-eval", "status": "pass",
                        "value": list(val.coords)}, [coords])


def _coords(text, group):
    if text is None:
        return [0] * group.ngens
    out = [int(x) for x in text.split(",")]
    if len(out) != group.ngens:
        raise CliError("expected %d coordinates" % group.ngens)
    return out


def cmd_det_symmetry(args):
    field = Field.parse(args.field)
    theory = ungraded_det(field) if args.ungraded else graded_det(field)
    import random
    from .exactcat import complete_grid_3x3, inclusion_map
    from .exactlin import Subspace
    rng = random.Random(args.seed)
    pairs = [(a, b) for a in range(3) for b in range(3)]
    grids = []
    for _ in range(args.trials):
        ambient = rng.randint(1, 3)
        if field.p is None:
            raise CliError("det-symmetry needs a finite field")
        rows1 = [[rng.randrange(field.p) for _ in range(ambient)]
                 for _ in range(rng.randint(0, ambient))]
        rows2 = [[rng.randrange(field.p) for _ in range(ambient)]
                 for _ in range(rng.randint(0, ambient))]
        grids.append(complete_grid_3x3(
            inclusion_map(Subspace.from_rows(field, ambient, rows1)),
            inclusion_map(Subspace.from_rows(field, ambient, rows2))))
    rep = check_symmetry(theory, pairs, grids)
    failures = [{"kind": i.kind,
                 "data": str(i.data if i.kind == "pair" else "grid"),
                 "got": str(i.got), "expected": str(i.expected)}
                for i in rep.failures()]
    status = "pass" if rep.all_passed and rep.criteria_agree else "fail"
    lines = ["%s: %d instances, %d failures, criteria agree: %s"
             % (status, len(rep.instances), len(failures),
                rep.criteria_agree)]
    for f in failures[:10]:
        lines.append("  %(kind)s %(data)s: %(got)s vs %(expected)s" % f)
    _emit(args, {"command": "det-symmetry", "status": status,
                 "instances": len(rep.instances), "failures": failures,
                 "criteria_agree": rep.criteria_agree}, lines)
    return PASS if status == "pass" else FAIL


def cmd_cohomology(args):
    cx = _load_sset(args.sset)
    group = parse_group(args.group)
    res = cohomology(cx, args.degree, group)
    pres = format_group(type(group)(res.group_presentation))
    return _emit(args, {"command": "cohomology", "status": "pass",
                        "degree": args.degree,
                        "group": pres}, [pres])


def cmd_classify(args):
    cx = _load_sset(args.sset)
    try:
        alpha = parse_cochain(_read(args.cochain), cx)
    except ParseError as exc:
        raise CliError("%s: %s" % (args.cochain, exc))
    if alpha.degree < 1:
        raise CliError("torsor data must live on simplices of dimension "
                       ">= 1")
    from .simptors import MultTorsorRep
    t1 = MultTorsorRep(cx, alpha.degree - 1, alpha.group, alpha)
    cls = classify_torsor(t1)
    payload = {"command": "classify", "status": "pass",
               "degree": t1.degree,
               "class": [list(c) for c in cls.coords]}
    lines = ["class in H^%d: %s" % (alpha.degree, cls.coords)]
    if args.other:
        try:
            beta = parse_cochain(_read(args.other), cx)
        except ParseError as exc:
            raise CliError("%s: %s" % (args.other, exc))
        t2 = MultTorsorRep(cx, beta.degree - 1, beta.group, beta)
        transporter = iso_decide(t1, t2)
        if transporter is None:
            payload["isomorphic"] = False
            lines.append("not isomorphic")
            _emit(args, payload, lines)
            return FAIL
        payload["isomorphic"] = True
        payload["transporter"] = format_cochain(transporter)
        lines.append("isomorphic; transporter:")
        lines.append(format_cochain(transporter).rstrip())
    return _emit(args, payload, lines)


def cmd_gerbe_torsor(args):
    cx = _load_sset(args.sset)
    try:
        beta = parse_cochain(_read(args.cochain), cx)
    except ParseError as exc:
        raise CliError("%s: %s" % (args.cochain, exc))
    try:
        gerbe = GerbeRep(cx, beta.group, beta)
    except GerbeError as exc:
        _emit(args, {"command": "gerbe-torsor", "status": "fail",
                     "diagnosis": str(exc)}, ["invalid gerbe: %s" % exc])
        return FAIL
    t = gerbe_to_torsor(gerbe)
    rep = check_mult_torsor(t)
    cls = classify_torsor(t)
    status = "pass" if rep.ok else "fail"
    _emit(args, {"command": "gerbe-torsor", "status": status,
                 "checked": rep.total,
                 "class": [list(c) for c in cls.coords]},
          ["torsor check: %s (%d simplices); class in H^3: %s"
           % (status, rep.total, cls.coords)])
    return PASS if rep.ok else FAIL


def cmd_s_enumerate(args):
    field = Field.parse(args.field)
    try:
        sk = enumerate_s_skeleton(field, args.dim_cap, args.level_cap,
                                  budget=args.budget)
    except BudgetExceeded as exc:
        raise CliError(str(exc))
    bad = sk.check_simplicial_identities()
    status = "pass" if bad is None else "fail"
    counts = sk.counts()
    lines = ["levels: %s" % " ".join(str(c) for c in counts),
             "simplicial identities: %s" % status]
    _emit(args, {"command": "s-enumerate", "status": status,
                 "counts": counts}, lines)
    return PASS if bad is None else FAIL


def cmd_verify(args):
    names = list(verify_mod.SUITES) if args.suite == "all" else [args.suite]
    for n in names:
        if n not in verify_mod.SUITES:
            raise CliError("unknown suite %r (have: %s)"
                           % (n, ", ".join(verify_mod.SUITES)))
    results = [verify_mod.run_suite(n, seed=args.seed, trials=args.trials)
               for n in names]
    ok = all(r.passed for r in results)
    lines = []
    for r in results:
        lines.append("%-16s %s  (%d checked, %.2fs)  %s"
                     % (r.name, "pass" if r.passed else "FAIL",
                        r.checked, r.elapsed, r.detail))
        for f in r.failures[:5]:
            lines.append("    %s" % f)
    payload = {"command": "verify", "status": "pass" if ok else "fail",
               "results": [r.to_dict() for r in results]}
    _emit(args, payload, lines)
    return PASS if ok else FAIL


def build_parser():
    p = argparse.ArgumentParser(
        prog="satokit",
        description="Exact lattices in Laurent-series spaces, determinant "
                    "lines, and multiplicative torsors on simplicial sets.")
    p.add_argument("--json", action="store_true",
                   help="emit the stable JSON report")
    sub = p.add_subparsers(dest="verb", required=True)

    def lat2(name, fn, doc):
        q = sub.add_parser(name, help=doc)
        q.add_argument("a")
        q.add_argument("b")
        q.set_defaults(fn=fn)

    lat2("index", cmd_index, "relative index of two lattices")
    lat2("meet", cmd_meet, "intersection of two lattices")
    lat2("join", cmd_join, "sum of two lattices")

    for name, fn, doc in [("lift", cmd_lift,
                           "preimage of a lattice along the mono of a SES"),
                          ("project", cmd_project,
                           "image of a lattice along the epi of a SES")]:
        q = sub.add_parser(name, help=doc)
        q.add_argument("i", help=".lmx file of the mono")
        q.add_argument("j", help=".lmx file of the epi")
        q.add_argument("lattice", help=".lat file")
        q.set_defaults(fn=fn)

    q = sub.add_parser("ses-check", help="validate a Laurent-matrix SES")
    q.add_argument("i")
    q.add_argument("j")
    q.set_defaults(fn=cmd_ses_check)

    q = sub.add_parser("mu-eval",
                       help="evaluate the combined dimensional theory")
    q.add_argument("i")
    q.add_argument("j")
    q.add_argument("lattice")
    q.add_argument("--group", default="Z")
    q.add_argument("--generator", default=None,
                   help="image of the one-dimensional class, comma coords")
    q.add_argument("--d1", default=None, help="anchor value on the sub")
    q.add_argument("--d2", default=None, help="anchor value on the quotient")
    q.set_defaults(fn=cmd_mu_eval)

    q = sub.add_parser("det-symmetry",
                       help="pair/grid symmetry criteria for determinants")
    q.add_argument("--field", default="F5")
    q.add_argument("--ungraded", action="store_true")
    q.add_argument("--trials", type=int, default=50)
    q.add_argument("--seed", type=int, default=0)
    q.set_defaults(fn=cmd_det_symmetry)

    q = sub.add_parser("cohomology", help="H^n of a simplicial set")
    q.add_argument("sset")
    q.add_argument("--degree", type=int, required=True)
    q.add_argument("--group", default="Z")
    q.set_defaults(fn=cmd_cohomology)

    q = sub.add_parser("classify",
                       help="cohomology class of a multiplicative torsor")
    q.add_argument("sset")
    q.add_argument("cochain", help=".coch file with the alpha values")
    q.add_argument("--other", default=None,
                   help="second .coch: decide isomorphism and transport")
    q.set_defaults(fn=cmd_classify)

    q = sub.add_parser("gerbe-torsor",
                       help="induced degree-2 torsor of a gerbe")
    q.add_argument("sset")
    q.add_argument("cochain", help=".coch file with the beta values")
    q.set_defaults(fn=cmd_gerbe_torsor)

    q = sub.add_parser("s-enumerate", help="enumerate an S-construction "
                                           "skeleton")
    q.add_argument("--field", default="F2")
    q.add_argument("--dim-cap", type=int, default=2)
    q.add_argument("--level-cap", type=int, default=4)
    q.add_argument("--budget", type=int, default=20000)
    q.set_defaults(fn=cmd_s_enumerate)

    q = sub.add_parser("verify", help="run a verification suite")
    q.add_argument("suite", help="suite name or 'all'")
    q.add_argument("--seed", type=int, default=0)
    q.add_argument("--trials", type=int, default=None)
    q.set_defaults(fn=cmd_verify)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except CliError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return exc.code
    except (TateSESInvalid,) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return FAIL


if __name__ == "__main__":
    sys.exit(main())
