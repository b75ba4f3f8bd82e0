"""Command-line front end.

Exit codes: 0 when every requested check passed, 1 when any failed, 2 on a
usage error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction

from . import gaussian, verify
from .macdonald import macdonald_poly, norm_direct, norm_formula
from .roots import (
    Weight,
    dominant_grid,
    dominant_weights_in_ball,
    from_fundamental,
    parse_fundamental,
    root_system,
    weights_in_ball,
)

CHECKS = ("eq1", "eq8", "eq7", "prop1", "eq5", "norms", "symmetry", "gauss-eval", "all")

DEFAULT_K = {2: (1, 2, 3), 3: (1, 2)}
DEFAULT_MAX_COEFF = {2: 3, 3: 2}
DEFAULT_ORDER = {"prop1": Fraction(12), "eq5": Fraction(20), "gauss-eval": Fraction(40)}
PROP1_RADIUS = Fraction(4)
EQ7_SUPPORT_RADIUS = Fraction(4)


class UsageError(Exception):
    pass


def _order(text: str) -> Fraction:
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"bad order {text!r}") from exc
    if value < 0:
        raise argparse.ArgumentTypeError(f"order must be nonnegative, got {text}")
    return value


def _positive(name: str, minimum: int):
    def parse(text: str) -> int:
        try:
            v = int(text)
        except ValueError as exc:
            raise argparse.ArgumentTypeError(f"bad {name} {text!r}") from exc
        if v < minimum:
            raise argparse.ArgumentTypeError(f"{name} must be >= {minimum}")
        return v
    return parse


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cmmcheck", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, with_grid=False):
        sp.add_argument("--n", type=_positive("n", 2), default=None)
        sp.add_argument("--k", type=_positive("k", 1), default=None)
        sp.add_argument("--lambda", dest="lam", default=None, metavar="a1,..")
        sp.add_argument("--format", choices=("text", "json"), default="text")
        sp.add_argument("--out", default=None, metavar="PATH")
        if with_grid:
            sp.add_argument("--mu", default=None, metavar="a1,..")
            sp.add_argument("--order", type=_order, default=None, metavar="p/r")
            sp.add_argument("--max-coeff", type=_positive("max-coeff", 0), default=None)
            sp.add_argument("--threads", type=_positive("threads", 1), default=None)
            sp.add_argument("--seed", type=int, default=0)

    mp = sub.add_parser("mpoly", help="print a Macdonald polynomial")
    common(mp)
    mp.add_argument("--expand", action="store_true", help="expand into e^nu monomials")

    np_ = sub.add_parser("norm", help="compare <P,P>_k with the norm product")
    common(np_)

    ck = sub.add_parser("check", help="run identity checks over a grid")
    ck.add_argument("which", choices=CHECKS)
    common(ck, with_grid=True)
    return p


def _weight(n: int, text: str | None, default: Weight | None = None) -> Weight:
    if text is None:
        if default is None:
            raise UsageError("--lambda is required")
        return default
    try:
        return parse_fundamental(n, text)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _emit(lines: list[str], args) -> None:
    text = "\n".join(lines) + ("\n" if lines else "")
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_mpoly(args) -> int:
    n = args.n or 2
    k = args.k or 1
    lam = _weight(n, args.lam)
    p = macdonald_poly(lam, k)
    if args.format == "json":
        body = {"n": n, "k": k, "lambda": str(lam), "poly": p.render(args.expand)}
        _emit([json.dumps(body)], args)
    else:
        _emit([p.render(args.expand)], args)
    return 0


def cmd_norm(args) -> int:
    n = args.n or 2
    k = args.k or 1
    lam = _weight(n, args.lam)
    direct = norm_direct(lam, k).simplify()
    formula = norm_formula(lam, k).simplify()
    agree = direct == formula
    if args.format == "json":
        body = {"n": n, "k": k, "lambda": str(lam), "norm_direct": str(direct),
                "norm_formula": str(formula), "agree": agree}
        _emit([json.dumps(body)], args)
    else:
        _emit([f"norm_direct  = {direct}", f"norm_formula = {formula}", f"agree = {str(agree).lower()}"],
              args)
    return 0 if agree else 1


def _ns(args) -> tuple:
    return (args.n,) if args.n else (2, 3)


def _ks(args, n: int) -> tuple:
    return (args.k,) if args.k else DEFAULT_K.get(n, (1, 2))


def _grid(args, n: int, text: str | None) -> list:
    if text is not None:
        return [_weight(n, text)]
    mc = args.max_coeff if args.max_coeff is not None else DEFAULT_MAX_COEFF.get(n, 1)
    return dominant_grid(n, mc)


def _cmm_tasks(args, fn, *extra) -> list:
    tasks = []
    for n in _ns(args):
        for k in _ks(args, n):
            for lam in _grid(args, n, args.lam):
                for mu in _grid(args, n, args.mu):
                    tasks.append((fn, (verify.CmmInstance(n, k, lam, mu),) + extra))
    return tasks


def build_tasks(which: str, args) -> list:
    if which in ("eq1", "eq8"):
        return _cmm_tasks(args, verify.verify_cmm, which)
    if which == "symmetry":
        return _cmm_tasks(args, verify.verify_symmetry)
    if which == "norms":
        tasks = []
        for n in _ns(args):
            for k in _ks(args, n):
                for lam in _grid(args, n, args.lam):
                    tasks.append((verify.verify_norm, (lam, k)))
        return tasks
    if which == "eq7":
        rng = random.Random(args.seed)
        tasks = []
        for n in _ns(args):
            support = dominant_weights_in_ball(n, EQ7_SUPPORT_RADIUS)
            for k in _ks(args, n):
                for lam in _grid(args, n, args.lam):
                    for mu in _grid(args, n, args.mu):
                        a = verify.random_coefficient_map(rng, support)
                        tasks.append((verify.verify_eq7, (lam, mu, k, a)))
        return tasks
    if which == "prop1":
        order = args.order if args.order is not None else DEFAULT_ORDER["prop1"]
        return [(gaussian.prop1_coefficient_check, (n, mu, order))
                for n in _ns(args) for mu in weights_in_ball(n, PROP1_RADIUS)]
    if which == "eq5":
        order = args.order if args.order is not None else DEFAULT_ORDER["eq5"]
        return [(gaussian.verify_eq5, (order,))]
    if which == "gauss-eval":
        order = args.order if args.order is not None else DEFAULT_ORDER["gauss-eval"]
        tasks = []
        for n in _ns(args):
            lams = [_weight(n, args.lam)] if args.lam else [
                Weight.zero(n), from_fundamental(n, [1] + [0] * (n - 2))]
            tasks.extend((gaussian.gaussian_eval_property, (lam, order)) for lam in lams)
        return tasks
    if which == "all":
        out = []
        for w in CHECKS[:-1]:
            out.extend(build_tasks(w, args))
        return out
    raise UsageError(f"unknown check {which!r}")


def cmd_check(args) -> int:
    if args.which in ("eq5",) and args.n not in (None, 2):
        raise UsageError("eq5 is the n=2 identity")
    if args.which == "gauss-eval":
        order = args.order if args.order is not None else DEFAULT_ORDER["gauss-eval"]
        for n in _ns(args):
            lam = _weight(n, args.lam) if args.lam else from_fundamental(n, [1] + [0] * (n - 2))
            s = lam + root_system(n).rho
            if order <= s.norm2():
                raise UsageError(f"gauss-eval needs --order > {s.norm2()}")
    tasks = build_tasks(args.which, args)
    threads = args.threads or verify.default_threads()
    reports = verify.run_tasks(tasks, threads)
    if args.format == "json":
        lines = [r.to_json() for r in reports]
    else:
        lines = [r.to_text() for r in reports]
        npass = sum(r.passed for r in reports)
        lines.append(f"{npass}/{len(reports)} passed")
    _emit(lines, args)
    return 0 if all(r.passed for r in reports) else 1


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else 0
    try:
        if args.command == "mpoly":
            return cmd_mpoly(args)
        if args.command == "norm":
            return cmd_norm(args)
        return cmd_check(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
