"""Command-line front end.

Every command builds a JSON-ready dict; ``--format text`` renders that dict.
Exit codes: 0 success, 2 usage or input error, 3 admissibility or resource
limit, 4 genericity certificate not reached.
"""

from __future__ import annotations

import argparse
import functools
import json
import sys
from math import comb

from . import components, grassmann
from . import monomials as mn
from .census import census_record, enumerate_borel
from .errors import (
    AdmissibilityError,
    DginError,
    GenericityError,
    ResourceError,
)
from .extensors import METHODS, ExtensorTerm, check_persistence, dd_compare, eisenbud_compare
from .hilbert import as_polynomial, gotzmann_decompose, gotzmann_number
from .stable import regularity

EXIT_USAGE = 2
EXIT_LIMIT = 3
EXIT_GENERICITY = 4


class UsageError(DginError):
    pass


def _order(args):
    return mn.parse_order(args.order)


def _need(args, name):
    if getattr(args, name) is None:
        raise UsageError(f"--{name} is required for {args.command}")
    return getattr(args, name)


def _space(args):
    return grassmann.Subspace.parse(_need(args, "space"), _need(args, "n") + 1)


def cmd_gotzmann(args):
    p = as_polynomial(_need(args, "poly"))
    dec = gotzmann_decompose(p)
    return {"p": str(p), "r": dec.length, "decomposition": list(dec.exponents)}


def cmd_enumerate(args):
    p = as_polynomial(_need(args, "poly"))
    n = _need(args, "n")
    r = gotzmann_number(p) if not p.is_zero() else 0
    ideals = enumerate_borel(p, n, jobs=args.jobs)
    return {"p": str(p), "n": n, "r": r, "count": len(ideals),
            "ideals": [census_record(J, r) for J in ideals]}


def cmd_maximal(args):
    rep = components.component_lower_bound(_need(args, "poly"), _need(args, "n"), _order(args),
                                           jobs=args.jobs)
    return {"p": rep.p, "n": rep.n, "order": str(rep.order), "r": rep.r, "count": rep.count,
            "maximal": rep.maximal,
            "ideals": [rep.ideals[i].generator_strings() for i in rep.maximal]}


def cmd_bound(args):
    rep = components.component_lower_bound(_need(args, "poly"), _need(args, "n"), _order(args),
                                           jobs=args.jobs)
    return {"p": rep.p, "n": rep.n, "order": str(rep.order), "count": rep.count,
            "bound_basic": rep.bound_basic, "bound_refined": rep.bound_refined}


def cmd_report(args):
    rep = components.component_lower_bound(_need(args, "poly"), _need(args, "n"), _order(args),
                                           jobs=args.jobs)
    return rep.to_json()


def cmd_compare(args):
    order = _order(args)
    nvars = _need(args, "n") + 1
    left = ExtensorTerm.parse(_need(args, "left"), order, nvars)
    right = ExtensorTerm.parse(_need(args, "right"), order, nvars)
    out = {
        "order": str(order),
        "left": str(left),
        "right": str(right),
        "relation": dd_compare(order, left, right).value,
        "methods": {m: dd_compare(order, left, right, m).value for m in METHODS},
        "eisenbud": eisenbud_compare(order, left, right),
        "persistence": None,
    }
    try:
        rep = check_persistence(order, left, right)
    except DginError:
        pass
    else:
        out["persistence"] = {"degree": rep.degree, "next": rep.verdict_next.value,
                              "persistent": rep.persistent, "guaranteed": rep.guaranteed}
    return out


def _seed(args):
    if args.seed is None:
        if args.format == "json":
            raise UsageError(f"--seed is required for {args.command} with --format json")
        return 0
    return args.seed


def cmd_gin(args):
    order = _order(args)
    nvars = _need(args, "n") + 1
    gens = [grassmann.parse_polynomial(s, nvars) for s in _need(args, "gens").split(";") if s.strip()]
    seed = _seed(args)
    ideal = grassmann.gin_ideal(gens, order, seed=seed, degree_bound=args.degree,
                                hilbert_poly=args.poly, trials=args.trials)
    return {"order": str(order), "seed": seed, "generators": [str(f) for f in gens],
            "gin": ideal.generator_strings(), "regularity": regularity(ideal)}


def cmd_ginext(args):
    order = _order(args)
    space = _space(args)
    seed = _seed(args)
    gin = grassmann.generic_initial_extensor(space, order, seed=seed, trials=args.trials)
    return {"order": str(order), "seed": seed, "space": str(space),
            "initial": grassmann.initial_extensor(space, order).wedge_str(),
            "gin": gin.wedge_str()}


def cmd_support(args):
    order = _order(args)
    space = _space(args)
    terms = grassmann.delta_support(space, order, budget=args.budget)
    cmp = functools.cmp_to_key(lambda a, b: eisenbud_compare(order, a, b))
    terms = sorted(terms, key=cmp, reverse=True)
    return {"order": str(order), "space": str(space), "size": len(terms),
            "support": [t.wedge_str() for t in terms]}


def cmd_hilb(args):
    space = _space(args)
    upto = args.upto if args.upto is not None else space.m + 3
    dims = grassmann.ideal_hilbert_function(space, upto)
    n = space.nvars - 1
    return {"space": str(space), "degrees": list(range(space.m, upto + 1)), "dims": dims,
            "hilbert_function": [comb(n + t, n) - d for t, d in zip(range(space.m, upto + 1), dims)]}


def cmd_conjecture(args):
    ev = components.conjecture_min_deglex_check(_need(args, "poly"), _need(args, "n"),
                                                jobs=args.jobs)
    return {"p": str(as_polynomial(args.poly)), "n": args.n, "order": "deglex", "r": ev.r,
            "count": ev.count, "lex_index": ev.lex_index, "verdict": ev.verdict(),
            "counterexamples": ev.counterexamples}


COMMANDS = {
    "gotzmann": cmd_gotzmann,
    "enumerate": cmd_enumerate,
    "maximal": cmd_maximal,
    "bound": cmd_bound,
    "compare": cmd_compare,
    "gin": cmd_gin,
    "ginext": cmd_ginext,
    "support": cmd_support,
    "hilb": cmd_hilb,
    "report": cmd_report,
    "conjecture": cmd_conjecture,
}


def _fmt_value(v):
    if isinstance(v, list):
        return ", ".join(_fmt_value(x) for x in v)
    if isinstance(v, dict):
        return " ".join(f"{k}={_fmt_value(x)}" for k, x in v.items())
    if v is None:
        return "unset"
    return str(v)


def render_text(command, data):
    if command == "gotzmann":
        return str(data["r"])
    if command == "bound":
        return f"bound_basic={data['bound_basic']} bound_refined={_fmt_value(data['bound_refined'])}"
    if command in ("enumerate", "report"):
        head = [f"{k}: {_fmt_value(v)}" for k, v in data.items() if k != "ideals"]
        body = []
        for i, rec in enumerate(data["ideals"]):
            body.append(f"{i:4d}  ({', '.join(rec['generators'])})  reg={rec['regularity']}")
        return "\n".join(head + body)
    if command == "maximal":
        rows = [f"{i:4d}  ({', '.join(g)})" for i, g in zip(data["maximal"], data["ideals"])]
        return "\n".join([f"{data['order']}: {len(rows)} maximal of {data['count']}"] + rows)
    width = max(len(k) for k in data)
    return "\n".join(f"{k:<{width}}  {_fmt_value(v)}" for k, v in data.items())


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, help="projective dimension")
    common.add_argument("--poly", help="Hilbert polynomial, e.g. 7t-5")
    common.add_argument("--order", default="degrevlex",
                        help="lex | deglex | degrevlex | weight:w0,...,wn")
    common.add_argument("--seed", type=int)
    common.add_argument("--trials", type=int, default=4)
    common.add_argument("--format", choices=("json", "text"), default="text")
    common.add_argument("--upto", type=int)
    common.add_argument("--budget", type=int, default=grassmann.SUPPORT_BUDGET)
    common.add_argument("--output", help="write results to this file instead of stdout")
    common.add_argument("--jobs", type=int, help="worker processes (default: $DGIN_JOBS or 1)")
    common.add_argument("--left", help="extensor term, e.g. '[x2^2, x2*x1]'")
    common.add_argument("--right")
    common.add_argument("--gens", help="';'-separated homogeneous generators")
    common.add_argument("--space", help="';'-separated basis of a subspace of S_m")
    common.add_argument("--degree", type=int, help="degree bound for gin")
    parser = argparse.ArgumentParser(prog="dgin", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sub.add_parser(name, parents=[common])
    return parser


def run(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code
    try:
        data = COMMANDS[args.command](args)
    except (AdmissibilityError, ResourceError) as exc:
        print(f"dgin {args.command}: {exc}", file=stderr)
        return EXIT_LIMIT
    except GenericityError as exc:
        print(f"dgin {args.command}: {exc}", file=stderr)
        return EXIT_GENERICITY
    except (DginError, ValueError) as exc:
        print(f"dgin {args.command}: {exc}", file=stderr)
        return EXIT_USAGE
    if args.format == "json":
        text = json.dumps(data, indent=2, ensure_ascii=False)
    else:
        text = render_text(args.command, data)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        stdout.write(text + "\n")
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
