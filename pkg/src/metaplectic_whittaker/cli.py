"""Command-line front end.

Every subcommand prints {"meta": {...}, "result": {...}}.  Exit codes: 0 on
success, 2 for invalid arguments, 3 when a resource limit is hit and 4 when a
verification (compare, gk, gkw, simulate, integrate) finds a mismatch.
"""
import argparse
import csv
import io
import itertools
import json
import platform
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import __version__
from .algebra import GaussNumeric, gauss_numeric
from .crystal import NORMALIZATIONS, all_weyl_words, enumerate_bzl, gk_lhs, gk_rhs, gkw, whittaker_sum
from .errors import (InvalidArgument, InvalidContext, ResourceLimit,
                     UnsupportedConfiguration)
from .gt import compare_crystal_gt, gt_ppart
from .lusztig import BzlTuple, local_transition, transition
from .roots import CartanCase, ReducedWord, RootSystemA, braid_chain, gt_word, root_order

DEFAULT_SEED = 20240607
EXIT_OK, EXIT_INVALID, EXIT_RESOURCE, EXIT_MISMATCH = 0, 2, 3, 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _int_list(text):
    try:
        return tuple(int(v) for v in text.replace(" ", "").split(",") if v != "")
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _complex_list(text):
    try:
        return tuple(complex(v.replace("i", "j")) for v in text.replace(" ", "").split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated complex numbers, got {text!r}")


def _cnum(z, digits=12):
    return [round(z.real, digits) + 0.0, round(z.imag, digits) + 0.0]


def _lam(args):
    lam = args.lam if args.lam is not None else (0,) * args.r
    if len(lam) != args.r:
        raise InvalidArgument(f"--lambda needs {args.r} entries, got {len(lam)}")
    return lam


def _rank(args):
    if args.r < 1:
        raise InvalidArgument("rank must be at least 1")
    return RootSystemA(args.r)


# subcommands: each returns (result dict, rows for csv, ok flag)

def cmd_whittaker(args):
    rs = _rank(args)
    lam = _lam(args)
    poly = whittaker_sum(lam, args.n, rs, args.normalization)
    return {"lambda": list(lam), "n": args.n, "normalization": args.normalization,
            "polynomial": poly.to_json()}, _poly_rows(poly), True


def cmd_gt_ppart(args):
    rs = _rank(args)
    lam = _lam(args)
    poly = gt_ppart(lam, args.n, rs, args.gt_normalization)
    return {"lambda": list(lam), "n": args.n, "normalization": args.gt_normalization,
            "polynomial": poly.to_json()}, _poly_rows(poly), True


def cmd_compare(args):
    rs = _rank(args)
    lam = _lam(args)
    p = args.p
    if p is None and 12 % args.n == 0:
        p = 13
    rep = compare_crystal_gt(lam, args.n, rs, p=p, seed=args.seed, points=args.points,
                             crystal_normalization=args.normalization,
                             gt_normalization=args.gt_normalization)
    rows = [{"exponents": " ".join(map(str, t["exponents"])), "match": t["match"]} for t in rep.table]
    return rep.to_json(), rows, rep.verdict == "match"


def _gk_payload(lhs, rhs):
    equal = lhs == rhs
    return {"verdict": "equal" if equal else "different", "sum": lhs.to_json(),
            "product": rhs.to_json()}, equal


def cmd_gk(args):
    rs = _rank(args)
    payload, ok = _gk_payload(gk_lhs(args.n, rs, args.D), gk_rhs(args.n, rs, args.D))
    payload.update({"n": args.n, "degree": args.D})
    return payload, [{"verdict": payload["verdict"]}], ok


def cmd_gkw(args):
    rs = _rank(args)
    if args.word is not None:
        words = [args.word]
    elif args.random is not None:
        rng = random.Random(args.seed)
        pool = all_weyl_words(args.r)
        words = rng.sample(pool, min(args.random, len(pool)))
    else:
        words = all_weyl_words(args.r)
    items, rows, ok = [], [], True
    for w in words:
        lhs, rhs = gkw(w, args.n, rs, args.D)
        payload, same = _gk_payload(lhs, rhs)
        payload["word"] = list(w)
        items.append(payload)
        rows.append({"word": " ".join(map(str, w)), "verdict": payload["verdict"]})
        ok = ok and same
    return {"n": args.n, "degree": args.D, "words": items,
            "verdict": "equal" if ok else "different"}, rows, ok


def cmd_gauss_table(args):
    if args.p is None:
        raise InvalidArgument("--prime is required")
    ctx = GaussNumeric(args.p, args.n)
    rows = []
    for a in range(args.n):
        for b in args.b:
            g = gauss_numeric(a, b, ctx)
            rows.append({"a": a, "b": b, "re": _cnum(g)[0], "im": _cnum(g)[1],
                         "abs2": round(abs(g) ** 2, 9)})
    return {"p": args.p, "n": args.n, "generator": ctx.generator, "table": rows}, rows, True


def cmd_crystal_enum(args):
    rs = _rank(args)
    lam = _lam(args)
    out = []
    for t in enumerate_bzl(lam, rs):
        out.append({
            "m": [t.m[a] for a in rs.positive_roots],
            "circled": [t.circled[a] for a in rs.positive_roots],
            "boxed": [t.boxed[a] for a in rs.positive_roots],
        })
    roots = [list(a) for a in rs.positive_roots]
    rows = [{"m": " ".join(map(str, e["m"]))} for e in out]
    return {"lambda": list(lam), "roots": roots, "count": len(out), "tuples": out}, rows, True


def cmd_transition(args):
    if args.case is not None:
        case = CartanCase[args.case]
        image = local_transition(case, args.m)
        back = local_transition(case.swapped(), image)
        res = {"case": case.name, "input": list(args.m), "output": list(image),
               "involution_ok": list(back) == list(args.m)}
        return res, [{"output": " ".join(map(str, image))}], True
    if args.word is None or args.target is None:
        raise InvalidArgument("transition needs --case, or --word and --target")
    src = ReducedWord(args.word, args.r)
    dst = ReducedWord(args.target, args.r)
    t = BzlTuple(src, args.m)
    image = transition(t, dst)
    chain = braid_chain(src, dst)
    res = {"word": list(src), "target": list(dst), "input": list(t.m), "output": list(image.m),
           "moves": [{"position": mv.position, "case": mv.case.name, "word": list(w)} for mv, w in chain],
           "weight": list(t.weight), "weight_preserved": image.weight == t.weight}
    return res, [{"output": " ".join(map(str, image.m))}], True


def cmd_simulate(args):
    from .padic_sim.simulate import run_checks
    lam = _lam(args)
    if args.p is None:
        raise InvalidArgument("--prime is required")
    rep = run_checks(args.r, args.p, args.samples, seed=args.seed, lam=lam)
    res = rep.to_json()
    rows = [{"check": k, "failures": v} for k, v in sorted(rep.failures.items())]
    return res, rows, rep.ok


def _measures_job(job):
    from .padic_sim.integrate import cell_measures
    word_letters, r, p, n, lams, box, budget, start = job
    return cell_measures(ReducedWord(word_letters, r), p, n, lams, box=box, budget=budget, start=start)


def cmd_integrate(args):
    from .padic_sim.integrate import closed_form, integrate_cell, split_box
    rs = _rank(args)
    lam = _lam(args)
    if args.p is None:
        raise InvalidArgument("--prime is required")
    if args.r > 2:
        raise UnsupportedConfiguration("exact cell integration is implemented for r <= 2")
    if (args.p - 1) % args.n:
        raise InvalidContext(f"{args.n} does not divide p - 1")
    word = gt_word(args.r)
    roots = root_order(word)
    xs = args.x if args.x is not None else tuple(complex(0.5 + 0.1 * k, 0.3 - 0.2 * k) for k in range(args.r))
    if len(xs) != args.r:
        raise InvalidArgument(f"--x needs {args.r} values")
    box = args.max_sum
    if args.threads > 1:
        jobs = [(word.letters, args.r, args.p, args.n, [lam], box, args.budget, [piece])
                for piece in split_box(word, args.p, box)]
        with ProcessPoolExecutor(max_workers=args.threads) as ex:
            parts = list(ex.map(_measures_job, jobs))
        cm = parts[0]
        for part in parts[1:]:
            cm.merge(part)
    else:
        cm = _measures_job((word.letters, args.r, args.p, args.n, [lam], box, args.budget, None))
    cells, rows, ok = [], [], True
    for m in itertools.product(range(args.max_sum + 1), repeat=len(word)):
        if sum(m) > args.max_sum:
            continue
        got = integrate_cell(m, lam, args.n, args.p, xs, word, measures=cm)
        want = closed_form(dict(zip(roots, m)), lam, args.n, args.p, xs, rs)
        f_only = integrate_cell(m, lam, args.n, args.p, xs, word, with_psi=False, measures=cm)
        vanishing = any(k % args.n for k in m)
        good = abs(got - want) <= args.tol and (not vanishing or abs(f_only) <= 1e-9)
        ok = ok and good
        cells.append({"m": list(m), "integral": _cnum(got), "closed_form": _cnum(want),
                      "f_only": _cnum(f_only), "volume": str(cm.volume(m)), "match": good})
        rows.append({"m": " ".join(map(str, m)), "integral_re": _cnum(got)[0], "integral_im": _cnum(got)[1],
                     "closed_re": _cnum(want)[0], "closed_im": _cnum(want)[1], "match": good})
    res = {"lambda": list(lam), "n": args.n, "p": args.p, "x": [_cnum(x) for x in xs],
           "roots": [list(a) for a in roots], "boxes": cm.boxes, "cells": cells,
           "verdict": "match" if ok else "mismatch"}
    return res, rows, ok


COMMANDS = {
    "whittaker": cmd_whittaker,
    "gt-ppart": cmd_gt_ppart,
    "compare": cmd_compare,
    "gk": cmd_gk,
    "gkw": cmd_gkw,
    "gauss-table": cmd_gauss_table,
    "crystal-enum": cmd_crystal_enum,
    "transition": cmd_transition,
    "simulate": cmd_simulate,
    "integrate": cmd_integrate,
}


def _poly_rows(poly):
    rows = []
    for e, c in poly.sorted_terms():
        rows.append({"exponents": " ".join(map(str, e)), "coefficient": repr(c)})
    return rows


def schema_path():
    """Location of the JSON schema every subcommand's output validates against."""
    return Path(__file__).with_name("schema") / "output.schema.json"


def build_parser():
    common = _Parser(add_help=False)
    common.add_argument("-r", "--rank", dest="r", type=int, default=1)
    common.add_argument("-n", "--cover", dest="n", type=int, default=1)
    common.add_argument("--lambda", dest="lam", type=_int_list, default=None,
                        help="weight in fundamental-weight coordinates, e.g. 1,0")
    common.add_argument("-p", "--prime", dest="p", type=int, default=None)
    common.add_argument("-D", "--degree", dest="D", type=int, default=6)
    common.add_argument("--seed", type=int, default=DEFAULT_SEED)
    common.add_argument("--format", choices=["json", "csv", "pretty"], default="json")
    common.add_argument("--out", default=None, help="write to this file instead of stdout")
    common.add_argument("--threads", type=int, default=1)
    common.add_argument("--normalization", choices=NORMALIZATIONS, default="haar")
    common.add_argument("--gt-normalization", choices=["classical", "printed"], default="classical")

    parser = _Parser(prog="metaplectic-whittaker", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sp = sub.add_parser(name, parents=[common])
        if name == "compare":
            sp.add_argument("--points", type=int, default=3)
        if name == "gkw":
            sp.add_argument("--word", type=_int_list, default=None)
            sp.add_argument("--random", type=int, default=None, help="sample this many Weyl elements")
        if name == "gauss-table":
            sp.add_argument("-b", dest="b", type=_int_list, default=(-3, -1, 0, 2))
        if name == "transition":
            sp.add_argument("--case", choices=[c.name for c in CartanCase], default=None)
            sp.add_argument("--word", type=_int_list, default=None)
            sp.add_argument("--target", type=_int_list, default=None)
            sp.add_argument("--m", type=_int_list, required=True)
        if name == "simulate":
            sp.add_argument("--samples", type=int, default=1000)
        if name == "integrate":
            sp.add_argument("--max-sum", type=int, default=2)
            sp.add_argument("--x", type=_complex_list, default=None)
            sp.add_argument("--tol", type=float, default=1e-6)
            sp.add_argument("--budget", type=int, default=5_000_000)
    return parser


def _config(args):
    cfg = {k: v for k, v in sorted(vars(args).items()) if k not in ("out", "format")}
    for k, v in cfg.items():
        if isinstance(v, tuple):
            cfg[k] = [_cnum(x) if isinstance(x, complex) else x for x in v]
    cfg["subcommand"] = cfg.pop("command")
    return cfg


def render(doc, rows, fmt):
    if fmt == "json":
        return json.dumps(doc, sort_keys=True, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        if rows:
            fields = list(rows[0])
            w = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
            w.writeheader()
            w.writerows(rows)
        return buf.getvalue()
    lines = [f"{doc['meta']['config']['subcommand']}  (version {doc['meta']['versions']['package']})"]
    for row in rows:
        lines.append("  " + "  ".join(f"{k}={v}" for k, v in row.items()))
    verdict = doc["result"].get("verdict")
    if verdict is not None:
        lines.append(f"verdict: {verdict}")
    return "\n".join(lines) + "\n"


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    if args.threads < 1:
        print("error: --threads must be positive", file=sys.stderr)
        return EXIT_INVALID
    try:
        result, rows, ok = COMMANDS[args.command](args)
    except ResourceLimit as exc:
        print(f"resource limit: {exc} (depth {exc.depth})", file=sys.stderr)
        return EXIT_RESOURCE
    except (InvalidArgument, InvalidContext, UnsupportedConfiguration, KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    doc = {
        "meta": {
            "config": _config(args),
            "versions": {"package": __version__, "python": platform.python_version()},
        },
        "result": result,
    }
    text = render(doc, rows, args.format)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK if ok else EXIT_MISMATCH


if __name__ == "__main__":
    sys.exit(main())
