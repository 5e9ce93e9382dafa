"""Command-line front end.

    fermat27 fermat-lines [--format json]
    fermat27 expand  [--label K | --all] --order N [--active SPEC] [--normalize]
    fermat27 verify  [--label K | --all] --order N [--active SPEC]
    fermat27 eval    [--label K | --all] --order N [--active SPEC] --t P=V ...
    fermat27 eval    --from-json expand.json --t P=V ...

Parameters are addressed by position 0..19 in the canonical order or by a
4-digit exponent vector (``1110`` is x0*x1*x2).  Exit status: 0 pass,
1 verification failure, 2 usage error.  FERMAT27_THREADS sets the number of
worker processes.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from .formula import (
    ALL_PARAMETERS,
    LineLabel,
    LinePencil,
    all_labels,
    fermat_lines,
    line_pencil,
    period_matrix,
)
from .numeric import DegeneratePencilError, evaluate_pencil, scaling_check_assignment, surface_residual
from .series import NPARAMS, Series, parameter_position
from .verify import check_fermat_limit, check_on_surface, check_rank_two

SCHEMA = 1


class UsageError(Exception):
    pass


def parse_parameter(token):
    token = token.strip()
    if len(token) == 4 and token.isdigit():
        try:
            return parameter_position(tuple(int(ch) for ch in token))
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    try:
        p = int(token)
    except ValueError:
        raise UsageError(f"bad parameter {token!r}: use a position 0..19 or a vector like 1110") from None
    if not 0 <= p < NPARAMS:
        raise UsageError(f"parameter position {p} out of range 0..{NPARAMS - 1}")
    return p


def parse_active(spec):
    if spec is None or spec == "all":
        return ALL_PARAMETERS
    if spec in ("", "none"):
        return frozenset()
    return frozenset(parse_parameter(tok) for tok in spec.split(",") if tok.strip())


def parse_assignment(items):
    out = {}
    for item in items or ():
        key, sep, value = item.partition("=")
        if not sep:
            raise UsageError(f"bad assignment {item!r}: expected P=VALUE")
        try:
            out[parse_parameter(key)] = complex(value.replace(" ", ""))
        except ValueError:
            raise UsageError(f"bad value in {item!r}") from None
    return out


def _labels(args):
    labels = all_labels()
    if args.label is None:
        return labels
    if not 0 <= args.label < len(labels):
        raise UsageError(f"label must be in 0..{len(labels) - 1}")
    return [labels[args.label]]


def _workers():
    try:
        return max(1, int(os.environ.get("FERMAT27_THREADS", "1")))
    except ValueError:
        return 1


def _map(fn, jobs):
    jobs = list(jobs)
    n = _workers()
    if n == 1 or len(jobs) < 2:
        return [fn(job) for job in jobs]
    with ProcessPoolExecutor(max_workers=n) as pool:
        return list(pool.map(fn, jobs))


def label_json(k):
    return {"index": k.index, "triple": list(k.triple), "zeta1": k.zeta1.exponent, "zeta2": k.zeta2.exponent}


def label_from_json(d):
    return LineLabel(tuple(d["triple"]), d["zeta1"], d["zeta2"])


def _form_text(coeffs):
    parts = [f"({c})*x{q}" for q, c in enumerate(coeffs) if c]
    return " + ".join(parts) if parts else "0"


# -- fermat-lines -------------------------------------------------------


def cmd_fermat_lines(args, out):
    lines = fermat_lines()
    if args.format == "json":
        doc = {
            "schema": SCHEMA,
            "command": "fermat-lines",
            "lines": [
                {"label": label_json(f.label), "L1": [str(c) for c in f.L1], "L2": [str(c) for c in f.L2]}
                for f in lines
            ],
        }
        json.dump(doc, out, indent=1)
        out.write("\n")
    else:
        for f in lines:
            out.write(f"{f.label.index:2d} {f.label}\n")
            out.write(f"   L1: {_form_text(f.L1)}\n   L2: {_form_text(f.L2)}\n")
    return 0


# -- expand -------------------------------------------------------------


def _expand_one(job):
    index, order, active, normalize = job
    k = all_labels()[index]
    p = line_pencil(k, order, active, normalize=normalize)
    return {
        **label_json(k),
        "L1": [s.to_json() for s in p.L1],
        "L2": [s.to_json() for s in p.L2],
    }


def pencils_from_json(doc):
    order = doc["order"]
    active = frozenset(doc["active"])
    out = []
    for entry in doc["labels"]:
        k = label_from_json(entry)
        L1 = tuple(Series.from_json(s, order) for s in entry["L1"])
        L2 = tuple(Series.from_json(s, order) for s in entry["L2"])
        unit = L2[k.perm[3]] if not doc.get("normalized") else Series.one(order)
        out.append(LinePencil(k, order, active, L1, L2, unit, bool(doc.get("normalized"))))
    return out


def cmd_expand(args, out):
    active = parse_active(args.active)
    labels = _labels(args)
    results = _map(_expand_one, [(k.index, args.order, active, args.normalize) for k in labels])
    if args.format == "json":
        doc = {
            "schema": SCHEMA,
            "command": "expand",
            "order": args.order,
            "active": sorted(active),
            "normalized": args.normalize,
            "labels": results,
        }
        json.dump(doc, out, indent=1)
        out.write("\n")
        return 0
    for r in results:
        k = label_from_json(r)
        out.write(f"label {k.index}: {k}\n")
        for name in ("L1", "L2"):
            for q, terms in enumerate(r[name]):
                s = Series.from_json(terms, args.order)
                out.write(f"  {name}[x{q}] = {s}\n")
    return 0


# -- verify -------------------------------------------------------------


def _verify_one(job):
    index, order, active = job
    k = all_labels()[index]
    P = period_matrix(k, order, active)
    pencil = line_pencil(k, order, active, matrix=P)
    surface = check_on_surface(k, order, active, pencil=pencil)
    rank = check_rank_two(k, order, active, matrix=P)
    return {**label_json(k), "passed": surface.passed and rank.passed, "checks": [surface.to_json(), rank.to_json()]}


def cmd_verify(args, out):
    active = parse_active(args.active)
    labels = _labels(args)
    results = _map(_verify_one, [(k.index, args.order, active) for k in labels])
    fermat = check_fermat_limit(labels)
    passed = fermat.passed and all(r["passed"] for r in results)
    if args.format == "json":
        doc = {
            "schema": SCHEMA,
            "command": "verify",
            "order": args.order,
            "active": sorted(active),
            "passed": passed,
            "fermat_limit": fermat.to_json(),
            "labels": results,
        }
        json.dump(doc, out, indent=1)
        out.write("\n")
    else:
        for r, f in zip(results, fermat.entries):
            k = label_from_json(r)
            status = {c["check"]: ("PASS" if c["passed"] else "FAIL") for c in r["checks"]}
            out.write(
                f"label {k.index:2d} {k}: on_surface {status['on_surface']}, "
                f"rank_two {status['rank_two']}, fermat_limit {'PASS' if f['passed'] else 'FAIL'}\n"
            )
            for c in r["checks"]:
                for t in c.get("offending", [])[:20]:
                    out.write(f"    {t['monomial']}: ({t['coefficient']}) * {t['term']}\n")
                if c.get("error"):
                    out.write(f"    {c['error']}\n")
                for mnr in c.get("nonzero_minors", [])[:20]:
                    out.write(f"    minor rows {mnr['rows']} cols {mnr['cols']}: lowest term {mnr['lowest_term']}\n")
        out.write(f"{'PASS' if passed else 'FAIL'}: {len(results)} label(s), order {args.order}, {len(active)} active parameter(s)\n")
    return 0 if passed else 1


# -- eval ---------------------------------------------------------------


def _complex_json(z):
    return [z.real, z.imag]


def _eval_pencil(pencil, assignment, samples, seed):
    nl = evaluate_pencil(pencil, assignment)
    entry = {
        **label_json(pencil.label),
        "L1": [_complex_json(z) for z in nl.L1],
        "L2": [_complex_json(z) for z in nl.L2],
        "residual": surface_residual(nl, samples=samples, seed=seed),
    }
    if any(assignment.values()):
        entry["scaling"] = scaling_check_assignment(pencil, assignment, samples, seed).to_json()
    return entry


def _eval_one(job):
    index, order, active, assignment, samples, seed = job
    pencil = line_pencil(all_labels()[index], order, active)
    return _eval_pencil(pencil, assignment, samples, seed)


def cmd_eval(args, out):
    assignment = parse_assignment(args.t)
    if args.from_json:
        with open(args.from_json) as fh:
            doc = json.load(fh)
        pencils = pencils_from_json(doc)
        if args.label is not None:
            pencils = [p for p in pencils if p.label.index == args.label]
        order, active = doc["order"], frozenset(doc["active"])
    else:
        order, active = args.order, parse_active(args.active)
        pencils = None
    inactive = sorted(p for p in assignment if p not in active)
    if inactive:
        raise UsageError(f"assignment uses inactive parameter(s) {inactive}")
    for v in assignment.values():
        if abs(v) > 0.1:
            raise UsageError("assigned values must satisfy |t| <= 0.1")
    try:
        if pencils is None:
            jobs = [(k.index, order, active, assignment, args.samples, args.seed) for k in _labels(args)]
            results = _map(_eval_one, jobs)
        else:
            results = [_eval_pencil(p, assignment, args.samples, args.seed) for p in pencils]
    except DegeneratePencilError as exc:
        raise UsageError(f"degenerate pencil: {exc}") from None
    doc = {
        "schema": SCHEMA,
        "command": "eval",
        "order": order,
        "active": sorted(active),
        "assignment": {str(p): _complex_json(v) for p, v in sorted(assignment.items())},
        "labels": results,
    }
    if args.format == "json":
        json.dump(doc, out, indent=1)
        out.write("\n")
    else:
        for r in results:
            line = f"label {r['index']:2d}: residual {r['residual']:.3e}"
            if "scaling" in r:
                s = r["scaling"]
                line += f", ratio {s['ratio']:.5f} (expected {s['expected_ratio']:.5f}) {'PASS' if s['passed'] else 'FAIL'}"
            out.write(line + "\n")
    return 0


# -- entry point --------------------------------------------------------


def build_parser():
    parser = argparse.ArgumentParser(prog="fermat27", description="Lines on cubic surfaces near the Fermat cubic.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, order=True):
        sel = p.add_mutually_exclusive_group()
        sel.add_argument("--label", type=int, help="label index 0..26")
        sel.add_argument("--all", action="store_true", help="all 27 labels (default)")
        if order:
            p.add_argument("--order", type=int, default=2, help="truncation order N (default 2)")
            p.add_argument("--active", default="all", help="comma list of positions or vectors, 'all' or 'none'")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("fermat-lines", help="the 27 lines of the Fermat cubic")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_fermat_lines)

    p = sub.add_parser("expand", help="series coefficients of the line pencils")
    common(p)
    p.add_argument("--normalize", action="store_true", help="divide both forms by c_0202")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("verify", help="exact on-surface, rank-two and Fermat-limit checks")
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("eval", help="numeric residuals at a parameter point")
    common(p)
    p.add_argument("--t", action="append", metavar="P=VALUE", help="parameter value, repeatable")
    p.add_argument("--from-json", metavar="FILE", help="evaluate pencils saved by 'expand --format json'")
    p.add_argument("--samples", type=int, default=8)
    p.set_defaults(func=cmd_eval)
    return parser


def main(argv=None, out=None):
    out = sys.stdout if out is None else out
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "order", 0) < 0:
        parser.error("--order must be non-negative")
    if getattr(args, "samples", 3) < 3:
        parser.error("--samples must be at least 3")
    try:
        return args.func(args, out)
    except UsageError as exc:
        parser.error(str(exc))


if __name__ == "__main__":
    sys.exit(main())
