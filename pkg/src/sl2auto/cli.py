"""Command-line front end.

Exit codes: 0 ok, 1 usage or parse error, 2 NotLie / NotDivisible,
3 ConsistencyError (or a failing ``verify``).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .algebra import VarSpec
from .bch import bch, nilpotent_example, project_to_w
from .checks import run_all
from .errors import ConsistencyError, NotDivisible
from .g3 import G3Element, G3Matrix, g3_compose, g3_exp, g3_g, g3_recover, p_matrix
from . import matrix3 as m3
from .inner import AutMatrix, ad_matrix, compose, exp_ad, log_aut, quotient_reduce
from .lie import NotLie, decomp_to_text, lie_form, lie_membership
from .parser import ParseError, parse_poly, parse_w, poly_symbols
from .sampling import make_rng

EXIT_USAGE, EXIT_NOTLIE, EXIT_CONSISTENCY = 1, 2, 3


@dataclass
class RunConfig:
    order: int = 8
    nclass: int = None
    fmt: str = "text"
    seed: int = 0


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _read_text(arg):
    return sys.stdin.read() if arg == "-" else arg


def _read_json(arg):
    if arg == "-":
        return json.load(sys.stdin)
    with open(arg) as fh:
        return json.load(fh)


def _emit(cfg, text, payload):
    if cfg.fmt == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def _element(cfg, arg):
    return parse_w(_read_text(arg), cfg.order)


def _reduce(cfg, obj):
    return quotient_reduce(obj, cfg.nclass) if cfg.nclass else obj


# W-algebra commands


def cmd_normalize(cfg, args):
    e = _reduce(cfg, _element(cfg, args.expr))
    _emit(cfg, str(e), e.to_json())
    return 0


def _notlie(cfg, verdict):
    _emit(cfg, str(verdict), {"lie": False, "reason": verdict.reason})
    return EXIT_NOTLIE


def cmd_lie_check(cfg, args):
    e = _reduce(cfg, _element(cfg, args.expr))
    d = lie_membership(e)
    if isinstance(d, NotLie):
        return _notlie(cfg, d)
    text = "\n".join([
        decomp_to_text(d),
        f"alpha = {d.alpha}",
        f"beta = {d.beta}",
        f"a = {d.a}",
        f"b = {d.b}",
        f"c = {d.c}",
    ])
    _emit(cfg, text, {"lie": True, **d.to_json()})
    return 0


def cmd_lie_form(cfg, args):
    e = _reduce(cfg, _element(cfg, args.expr))
    d = lie_membership(e)
    if isinstance(d, NotLie):
        return _notlie(cfg, d)
    expr = lie_form(d)
    _emit(cfg, str(expr), {"order": d.order, "terms": expr.to_json()})
    return 0


def cmd_ad(cfg, args):
    M = _reduce(cfg, ad_matrix(_element(cfg, args.expr), cfg.order))
    _emit(cfg, str(M), M.to_json())
    return 0


def cmd_exp(cfg, args):
    Q = _reduce(cfg, exp_ad(_element(cfg, args.expr), cfg.order))
    text = f"{Q}\ng = {Q.g.poly if Q.g is not None else '?'}"
    _emit(cfg, text, Q.to_json())
    return 0


def cmd_log(cfg, args):
    Q = AutMatrix.from_json(_read_json(args.file))
    X = log_aut(Q)
    text = "\n".join([f"a = {X.px}", f"b = {X.py}", f"c = {X.pz}", f"X = {X}"])
    _emit(cfg, text, {"order": X.order, "a": X.px.to_json(), "b": X.py.to_json(),
                      "c": X.pz.to_json(), "element": X.to_json()})
    return 0


def cmd_compose(cfg, args):
    X, Y = _element(cfg, args.lhs), _element(cfg, args.rhs)
    Z = _reduce(cfg, compose(X, Y, cfg.order))
    d = lie_membership(Z)
    lines, payload = [], {"element": Z.to_json()}
    if isinstance(d, NotLie):
        lines.append(str(Z))
    else:
        expr = lie_form(d)
        lines += [decomp_to_text(d), f"W-element: {Z}", f"commutators: {expr}"]
        payload["decomposition"] = d.to_json()
        payload["commutators"] = expr.to_json()
    _emit(cfg, "\n".join(lines), payload)
    return 0


def cmd_bch(cfg, args):
    n = abs(args.n) if args.n is not None else cfg.order
    s = bch(n)
    P = _reduce(cfg, project_to_w(s))
    text = f"free: {s}\nW: {P}"
    _emit(cfg, text, {"free": s.to_json(), "w": P.to_json()})
    return 0


def cmd_nilpotent(cfg, args):
    report = nilpotent_example(cfg.order)
    lines = [("PASS  " if c["pass"] else "FAIL  ") + c["name"] for c in report["checks"]]
    lines.append("phi = " + ", ".join(report["phi"]))
    _emit(cfg, "\n".join(lines), report)
    return 0 if report["passed"] else EXIT_CONSISTENCY


# G3 commands


def _split_triple(text):
    parts = [p.strip() for p in _read_text(text).split(",")]
    if len(parts) != 3:
        raise ValueError(f"expected three comma-separated coordinates, got {len(parts)}")
    return parts


def _g3_elements(cfg, texts):
    triples = [_split_triple(t) for t in texts]
    names = sorted({n for tr in triples for p in tr for n in poly_symbols(p)})
    vs = VarSpec.uniform(tuple(names) or ("s",))
    return [G3Element(*(parse_poly(p, vs) for p in tr), order=cfg.order) for tr in triples]


def cmd_g3(cfg, args):
    op = args.g3op
    if op == "recover":
        data = _read_json(args.args[0])
        Q = G3Matrix(m3.from_json(data["entries"]), int(data["order"]))
        Z = g3_recover(Q)
        _emit(cfg, str(Z), Z.to_json())
        return 0
    need = 2 if op == "compose" else 1
    if len(args.args) != need:
        raise ValueError(f"g3 {op} takes {need} coordinate triple(s)")
    elems = _g3_elements(cfg, args.args)
    X = elems[0]
    if op == "p":
        P = p_matrix(X)
        _emit(cfg, str(P), P.to_json())
    elif op == "g":
        g = g3_g(X)
        _emit(cfg, str(g.poly), g.to_json())
    elif op == "exp":
        Q = g3_exp(X)
        _emit(cfg, str(Q), Q.to_json())
    elif op == "compose":
        Z = g3_compose(X, elems[1])
        _emit(cfg, str(Z), Z.to_json())
    return 0


def cmd_verify(cfg, args):
    results = run_all(make_rng(cfg.seed), cfg.order)
    ok = all(r.ok for r in results)
    text = "\n".join(r.line() for r in results)
    _emit(cfg, text, {"seed": cfg.seed, "order": cfg.order, "passed": ok,
                      "checks": [{"name": r.name, "pass": r.ok, "detail": r.detail} for r in results]})
    return 0 if ok else EXIT_CONSISTENCY


def _add_globals(p, suppress):
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p.add_argument("--order", type=int, default=d(8), help="truncation order (default 8)")
    p.add_argument("--class", dest="nclass", type=int, default=d(None),
                   help="reduce results to the nilpotent quotient of this class")
    p.add_argument("--format", dest="fmt", choices=("text", "json"), default=d("text"))
    p.add_argument("--seed", type=int, default=d(0), help="seed for verify")


def build_parser():
    parser = _Parser(prog="sl2auto", description="Exact exp(ad X), log and composition "
                     "for two generic traceless 2x2 matrices.")
    _add_globals(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, fn, help_):
        p = sub.add_parser(name, help=help_)
        _add_globals(p, suppress=True)
        p.set_defaults(fn=fn)
        return p

    add("normalize", cmd_normalize, "normal form in W").add_argument("expr")
    add("lie-check", cmd_lie_check, "Lie membership").add_argument("expr")
    add("lie-form", cmd_lie_form, "rewrite as left-normed commutators").add_argument("expr")
    add("ad", cmd_ad, "matrix of ad X").add_argument("expr")
    add("exp", cmd_exp, "matrix of exp(ad X)").add_argument("expr")
    add("log", cmd_log, "recover X from an exp matrix (JSON file or -)").add_argument("file")
    p = add("compose", cmd_compose, "Z with exp(ad Z) = exp(ad X) exp(ad Y)")
    p.add_argument("lhs")
    p.add_argument("rhs")
    add("bch", cmd_bch, "free BCH series and its image in W").add_argument(
        "n", nargs="?", type=int, help="word length (defaults to --order)")
    add("nilpotent", cmd_nilpotent, "checks for e^U e^V with nilpotent U, V")
    p = add("g3", cmd_g3, "Baker's computation in G3")
    p.add_argument("g3op", choices=("p", "g", "exp", "recover", "compose"))
    p.add_argument("args", nargs="+", help='coordinate triples "c1, c2, c3" or a JSON file')
    add("verify", cmd_verify, "run the invariant suite")
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    cfg = RunConfig(order=args.order, nclass=args.nclass, fmt=args.fmt, seed=args.seed)
    try:
        if cfg.order < 1:
            raise ValueError("--order must be >= 1")
        return args.fn(cfg, args)
    except ConsistencyError as exc:
        print(f"ConsistencyError: {exc}", file=sys.stderr)
        return EXIT_CONSISTENCY
    except NotDivisible as exc:
        print(f"NotDivisible: {exc}", file=sys.stderr)
        return EXIT_NOTLIE
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, TypeError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
