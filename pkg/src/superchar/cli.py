"""Command-line front end: characters, KL polynomials, diagrams, verification sweeps."""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import charformulas as cf
from .arcdiag import ArcDiagram, build_arc_diagram, shorten, special_direct, standard_diagram
from .exactring import DenFactor, LaurentPoly, expand_truncated, format_monomial, level
from .render import render_arc_diagram, render_weight_diagram
from .roots import (
    E,
    PreconditionError,
    RhoWeight,
    Root,
    SimpleRootSystem,
    atypicality,
    normalize_to_integral,
    odd_root,
    rho,
)
from .weightdiag import (
    enumerate_paths,
    enumerate_sources,
    from_weight_diagram,
    kl_polynomial,
    to_weight_diagram,
    valuation,
)

EXIT_OK, EXIT_USAGE, EXIT_FAIL = 0, 1, 2

FORMULAS = ("kw", "su_zhang", "nested", "stepwise", "determinantal", "kac")


class UsageError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


# -- parsing helpers ---------------------------------------------------------------


def parse_vector(s: str) -> list[Fraction]:
    try:
        return [Fraction(x.strip()) for x in s.split(",") if x.strip()]
    except ValueError as exc:
        raise UsageError(f"cannot parse weight {s!r}") from exc


def parse_window(s: str) -> tuple[int, int]:
    try:
        lo, hi = s.split("..")
        lo, hi = int(lo), int(hi)
    except ValueError as exc:
        raise UsageError(f"window must look like a..b, got {s!r}") from exc
    if lo > hi:
        raise UsageError("empty window")
    return lo, hi


def parse_arcs(s: str) -> list[tuple[int, int]]:
    out = []
    for part in s.split(","):
        try:
            i, j = part.split("-")
            out.append((int(i), int(j)))
        except ValueError as exc:
            raise UsageError(f"arcs must look like i-j,..., got {s!r}") from exc
    return out


def resolve_pi(args) -> SimpleRootSystem:
    if args.pi is None:
        return SimpleRootSystem.standard(args.m, args.n)
    try:
        pi = SimpleRootSystem.from_string(args.pi)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if (pi.m, pi.n) != (args.m, args.n):
        raise UsageError(f"pi {args.pi!r} does not have {args.m} e's and {args.n} d's")
    return pi


def resolve_weight(args, pi: SimpleRootSystem):
    """(lambda^rho, twist c); a non-integral shifted weight is twisted to an integral one."""
    if (args.lambda_rho is None) == (args.lam is None):
        raise UsageError("give exactly one of --lambda-rho or --lambda")
    vec = parse_vector(args.lambda_rho if args.lambda_rho is not None else args.lam)
    if len(vec) != args.m + args.n:
        raise UsageError(f"weight needs {args.m + args.n} entries, got {len(vec)}")
    w = RhoWeight(vec[: args.m], vec[args.m :])
    lam = w - rho(pi) if args.lambda_rho is not None else w
    lam_t, c = normalize_to_integral(lam, pi)
    return lam_t + rho(pi), c


def diagram_for(pi: SimpleRootSystem, lr: RhoWeight, arcs=None) -> ArcDiagram:
    """Arc diagram for (pi, lambda^rho); arcs default to greedy adjacent equal pairs,
    or to the standard nesting for the standard order."""
    if arcs is not None:
        S = [odd_root(i, j) if pi.position((E, i)) < pi.position(("d", j)) else Root(("d", j), (E, i)) for i, j in arcs]
        return build_arc_diagram(pi, lr, S)
    if pi.is_standard():
        return standard_diagram(lr)
    used: set = set()
    S = []
    order = pi.order
    for k in range(len(order) - 1):
        s1, s2 = order[k], order[k + 1]
        if s1[0] == s2[0] or s1 in used or s2 in used:
            continue
        if lr.entry(s1) == lr.entry(s2):
            S.append(Root(s1, s2))
            used.update((s1, s2))
    if len(S) != atypicality(lr):
        raise UsageError("no admissible arcs for this order; pass --arcs")
    return build_arc_diagram(pi, lr, S)


# -- formatting ------------------------------------------------------------------------


def format_factor(f: DenFactor, names) -> str:
    mono = format_monomial(f.gamma, names)
    if "*" in mono or "^" in mono:
        mono = f"({mono})"
    return f"(1 {'+' if f.sign == -1 else '-'} {mono}^-1)"


def format_quotient(num: LaurentPoly, den, unit=None) -> str:
    names = num.var_names()
    parts = [format_factor(f, names) for f in den]
    if unit is not None and any(unit):
        parts.insert(0, format_monomial(unit, names))
    top = str(num)
    if not parts:
        return top
    if " " in top:
        top = f"({top})"
    bottom = parts[0] if len(parts) == 1 else "(" + "*".join(parts) + ")"
    return f"{top} / {bottom}"


def _fraction_json(x: Fraction):
    return int(x) if x.denominator == 1 else str(x)


def _rho_json(lr: RhoWeight):
    return [_fraction_json(x) for x in lr.a + lr.b]


# -- commands --------------------------------------------------------------------------


def evaluate(formula: str, pi: SimpleRootSystem, lr: RhoWeight, arcs=None):
    """FormulaResult list for the chosen formula (stepwise gives one per step)."""
    if formula == "kw":
        d = diagram_for(pi, lr, arcs)
        if arcs is None and pi.is_standard() and not d.is_admissible():
            # the standard order has long arcs; evaluate on the special diagram instead
            d = special_direct(lr)
        return [cf.kw_formula(d)]
    if formula == "kac":
        return [cf.kac_result(lr)]
    if not pi.is_standard():
        raise UsageError(f"formula {formula} needs the standard order")
    if formula == "su_zhang":
        return [cf.su_zhang(lr)]
    if formula == "nested":
        return [cf.nested_formula(lr)]
    if formula == "stepwise":
        return cf.stepwise_all(lr)
    if formula == "determinantal":
        return [cf.determinantal(special_direct(lr))]
    raise UsageError(f"unknown formula {formula}")


def cmd_char(args, out) -> int:
    pi = resolve_pi(args)
    lr, c = resolve_weight(args, pi)
    arcs = parse_arcs(args.arcs) if args.arcs else None
    results = evaluate(args.formula, pi, lr, arcs)
    records = []
    for fr in results:
        v = fr.value
        rec = fr.to_json()
        rec["twist"] = _fraction_json(c)
        rec["value_text"] = format_quotient(v.num, v.den, v.unit)
        if not args.no_extract:
            ch = cf.extract_character(fr, pi if fr.pi is None else fr.pi)
            if c:
                ch = ch.shift(tuple(-int(2 * c) for _ in range(fr.m + fr.n)))
            rec["character"] = str(ch)
            rec["dimension"] = ch.at_one()
        records.append(rec)
    if args.format == "json":
        out.write(json.dumps(records if len(records) > 1 else records[0], indent=2) + "\n")
    else:
        for rec in records:
            head = rec["formula"] + (f" (step {rec['meta']['step']})" if "step" in rec["meta"] else "")
            out.write(f"{head}: {rec['value_text']}\n")
            if "character" in rec:
                out.write(f"  ch L = {rec['character']}\n  dim = {rec['dimension']}\n")
    return EXIT_OK


def cmd_kl(args, out) -> int:
    pi = SimpleRootSystem.standard(args.m, args.n)
    lr, _ = resolve_weight(args, pi)
    Dl = to_weight_diagram(lr)
    if args.mu_rho:
        vec = parse_vector(args.mu_rho)
        if len(vec) != args.m + args.n:
            raise UsageError("mu needs m + n entries")
        Dm = to_weight_diagram(RhoWeight(vec[: args.m], vec[args.m :]))
        paths = sorted(str(p) for p in enumerate_paths(Dm, Dl))
        K = kl_polynomial(Dl, Dm)
        if args.format == "json":
            out.write(json.dumps({"kl": str(K), "at_minus_one": K(-1), "paths": paths}, indent=2) + "\n")
        else:
            out.write(f"{K}\n")
            for p in paths:
                out.write(f"  {p}\n")
        return EXIT_OK
    rows = []
    for Dm in enumerate_sources(Dl, args.V):
        K = kl_polynomial(Dl, Dm)
        mu = from_weight_diagram(Dm)
        rows.append({"mu_rho": _rho_json(mu), "valuation": valuation(lr, Dm), "kl": str(K), "at_minus_one": K(-1)})
    rows.sort(key=lambda r: (r["valuation"], r["mu_rho"]))
    if args.format == "json":
        out.write(json.dumps(rows, indent=2) + "\n")
    else:
        for r in rows:
            out.write(f"{r['valuation']:>3}  {','.join(map(str, r['mu_rho'])):<30} {r['kl']}\n")
    return EXIT_OK


def _window(args):
    return parse_window(args.window) if args.window else None


def cmd_diagram(args, out) -> int:
    pi = resolve_pi(args)
    lr, _ = resolve_weight(args, pi)
    d = diagram_for(pi, lr, parse_arcs(args.arcs) if args.arcs else None)
    wd = to_weight_diagram(lr) if pi.is_standard() else None
    if args.format == "json":
        rec = {"arc_diagram": d.to_json()}
        if wd is not None:
            rec["weight_diagram"] = wd.to_json()
        out.write(json.dumps(rec, indent=2) + "\n")
    else:
        out.write(render_arc_diagram(d) + "\n")
        if wd is not None:
            out.write("\n" + render_weight_diagram(wd, _window(args)) + "\n")
    return EXIT_OK


def cmd_shorten(args, out) -> int:
    pi = SimpleRootSystem.standard(args.m, args.n)
    lr, _ = resolve_weight(args, pi)
    seq = shorten(standard_diagram(lr))
    if args.format == "json":
        out.write(json.dumps([d.to_json() for d in seq], indent=2) + "\n")
    else:
        for k, d in enumerate(seq):
            out.write(f"step {k}: {d.order.to_string()}\n{render_arc_diagram(d)}\n\n")
    return EXIT_OK


def verify_weight(lr: RhoWeight, V: int):
    """Yield (identity, lhs, rhs, passed, witness) for one totally connected weight."""
    ref = cf.kw_formula(special_direct(lr))
    others = [cf.su_zhang(lr), cf.nested_formula(lr), cf.determinantal(special_direct(lr))]
    others += cf.stepwise_all(lr)
    if not lr_atypical(lr):
        others.append(cf.kac_result(lr))
    for fr in others:
        name = fr.formula + (f"[{fr.meta['step']}]" if fr.formula == "stepwise" else "")
        ok = fr.equals(ref)
        wit = None if ok else {"lhs": fr.to_json()["value"], "rhs": ref.to_json()["value"]}
        yield "equal", name, "kw_special", ok, wit
        if fr.formula == "determinantal":
            yield "printed_sign", "determinantal", "symmetrized_leibniz", True, {
                "sign": fr.meta["sign"],
                "printed_sign_matches": fr.meta["printed_sign_matches"],
            }
    lhs = expand_truncated(cf.su_zhang(lr).value, V, top=level(lr.exponent()))
    rhs = cf.truncated_kl_char(lr, V)
    ok = lhs == rhs
    yield f"truncated_V{V}", "su_zhang", "truncated_kl", ok, None if ok else {"lhs": str(lhs), "rhs": str(rhs)}


def lr_atypical(lr: RhoWeight) -> bool:
    return atypicality(lr) > 0


def cmd_verify(args, out) -> int:
    from .oracles import strictly_dominant_weights
    from .arcdiag import interval_property

    lo, hi = parse_window(args.window or "0..5")
    failures = 0
    for lr in sorted(strictly_dominant_weights(args.m, args.n, lo, hi), key=_rho_json):
        if not interval_property(standard_diagram(lr)):
            continue
        for identity, lhs, rhs, ok, wit in verify_weight(lr, args.V):
            rec = {
                "m": args.m,
                "n": args.n,
                "lambda_rho": _rho_json(lr),
                "identity": identity,
                "lhs_formula": lhs,
                "rhs_formula": rhs,
                "pass": ok,
            }
            if wit is not None:
                rec["witness"] = wit
            failures += not ok
            out.write(json.dumps(rec, sort_keys=True) + "\n")
    return EXIT_FAIL if failures else EXIT_OK


# -- entry point -----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="superchar", description="Characters of gl(m|n) modules with totally connected weights.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, weight=True, pi=True):
        sp.add_argument("--m", type=int, required=True)
        sp.add_argument("--n", type=int, required=True)
        if weight:
            g = sp.add_mutually_exclusive_group()
            g.add_argument("--lambda-rho", dest="lambda_rho", help="rho-shifted weight: a entries then b entries")
            g.add_argument("--lambda", dest="lam", help="unshifted weight: a entries then b entries")
        if pi:
            sp.add_argument("--pi", help="order of simple roots as a string of e's and d's (default: standard)")
            sp.add_argument("--arcs", help="arcs as i-j pairs (e index - d index), comma separated")
        sp.add_argument("--format", choices=("json", "ascii"), default="ascii")

    c = sub.add_parser("char", help="evaluate a character formula")
    common(c)
    c.add_argument("--formula", choices=FORMULAS, default="kw")
    c.add_argument("--no-extract", action="store_true", help="skip dividing out the Weyl denominator")
    c.set_defaults(func=cmd_char)

    k = sub.add_parser("kl", help="Kazhdan-Lusztig polynomials")
    common(k, pi=False)
    k.add_argument("--mu-rho", dest="mu_rho", help="second weight; prints a single polynomial")
    k.add_argument("--V", type=int, default=3, help="valuation bound for the source table")
    k.set_defaults(func=cmd_kl)

    d = sub.add_parser("diagram", help="render arc and weight diagrams")
    common(d)
    d.add_argument("--window", help="weight diagram axis range a..b")
    d.set_defaults(func=cmd_diagram)

    s = sub.add_parser("shorten", help="run the shortening algorithm")
    common(s, pi=False)
    s.set_defaults(func=cmd_shorten)

    v = sub.add_parser("verify", help="cross-check all formulas over a window")
    common(v, weight=False, pi=False)
    v.add_argument("--window", default="0..5", help="entry range a..b")
    v.add_argument("--V", type=int, default=3, help="truncation order for the series check")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.m < 0 or args.n < 0 or args.m + args.n == 0:
        parser.error("m and n must be nonnegative and not both zero")
    try:
        return args.func(args, out)
    except BrokenPipeError:
        # reader closed early (e.g. piped into head); silence the flush at exit
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        return EXIT_OK
    except (UsageError, PreconditionError, ValueError) as exc:
        sys.stderr.write(f"superchar: error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
