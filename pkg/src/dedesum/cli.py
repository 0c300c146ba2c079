"""Command-line front end: ``dedesum <command> ...``.

Exit codes: 0 success, 1 bad input or usage, 2 internal inconsistency
(oracle disagreement, non-integral class number, violated property).
"""

import argparse
import csv
import json
import sys

from . import __version__
from .abelian import cyclotomic_field, field_from_characters, imaginary_quadratic_field, relative_class_number
from .characters import all_characters, unit_group
from .dedekind import dedekind_sum, dedekind_sum_cotangent, dedekind_sum_sawtooth
from .errors import DomainError, InconsistencyError
from .quadratic import ORACLES, class_number, sweep
from .verify import SUITES

EXIT_OK, EXIT_DOMAIN, EXIT_INCONSISTENT = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_DOMAIN, f"{self.prog}: error: {message}\n")


def _emit(args, command: str, inputs: dict, result: dict, text: str) -> None:
    if args.json:
        env = {"command": command, "inputs": inputs, "result": result, "version": __version__}
        print(json.dumps(env, sort_keys=True, indent=2))
    else:
        print(text)


def _cmd_sum(args) -> int:
    s = dedekind_sum(args.c, args.d)
    result = {"value": str(s)}
    lines = [str(s)]
    status = EXIT_OK
    if args.oracle == "sawtooth":
        saw = dedekind_sum_sawtooth(args.c, args.d)
        agree = saw == s
        result["sawtooth"] = {"value": str(saw), "agree": agree}
        lines.append(f"sawtooth: {saw} ({'agree' if agree else 'DISAGREE'})")
    elif args.oracle == "cotangent":
        cot = dedekind_sum_cotangent(args.c, args.d)
        tol = args.d * 2.0**-40
        agree = abs(cot - float(s)) <= tol
        result["cotangent"] = {"float": cot, "tolerance": tol, "agree": agree}
        lines.append(f"cotangent: {cot!r} ({'agree' if agree else 'DISAGREE'})")
    else:
        agree = True
    if not agree:
        status = EXIT_INCONSISTENT
    _emit(args, "sum", {"c": args.c, "d": args.d, "oracle": args.oracle}, result, "\n".join(lines))
    return status


def _render_value(chi, n: int) -> str:
    t = chi.exponent_at(n)
    if t < 0:
        return "0"
    if t == 0:
        return "1"
    return f"zeta_{chi.order}^{t}"


def _cmd_chars(args) -> int:
    f = args.f
    if f < 1:
        raise DomainError(f"modulus must be >= 1, got {f}")
    grp = unit_group(f)
    rows = []
    for chi in all_characters(f):
        if args.odd_only and not chi.is_odd:
            continue
        rows.append({
            "exponents": list(chi.exponents),
            "order": chi.order,
            "parity": chi.parity,
            "conductor": chi.conductor,
            "primitive": chi.is_primitive,
            "values": [_render_value(chi, n) for n in range(1, f)] if f > 1 else [],
        })
    result = {"unit_group": [list(c) for c in grp.components], "characters": rows}
    lines = [f"(Z/{f}Z)* generators (g, order): {grp.components}"]
    for r in rows:
        lines.append(
            f"{r['exponents']} order={r['order']} {r['parity']} conductor={r['conductor']}"
            f"{' primitive' if r['primitive'] else ''}: {' '.join(r['values'])}"
        )
    _emit(args, "chars", {"f": f, "odd_only": args.odd_only}, result, "\n".join(lines))
    return EXIT_OK


def _oracle_list(name):
    if name is None:
        return ()
    return ORACLES if name == "all" else (name,)


def _cmd_classnum(args) -> int:
    rep = class_number(args.D, _oracle_list(args.oracle))
    text = f"h(-{rep.D}) = {rep.h}  (w={rep.w}, sum={rep.exact_sum})"
    if rep.agreement:
        text += f"\noracles_agree={str(rep.oracles_agree).lower()}"
        if rep.forms_h is not None:
            text += f"\nforms oracle: {rep.forms_h}"
        if rep.analytic_value is not None:
            text += f"\nanalytic oracle: {rep.analytic_value!r}"
    _emit(args, "classnum", {"D": args.D, "oracle": args.oracle}, rep.to_dict(), text)
    return EXIT_OK if rep.oracles_agree in (None, True) else EXIT_INCONSISTENT


def _parse_exponents(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise DomainError(f"bad exponent vector {text!r}") from None


def _cmd_relclassnum(args) -> int:
    if args.cyclotomic is not None:
        spec = cyclotomic_field(args.cyclotomic, args.hasse_q)
    elif args.quadratic is not None:
        spec = imaginary_quadratic_field(args.quadratic)
        if args.hasse_q is not None:
            spec.hasse_q_override = args.hasse_q
    elif args.modulus is not None:
        if not args.char:
            raise DomainError("--modulus needs at least one --char exponent vector")
        spec = field_from_characters(args.modulus, [_parse_exponents(c) for c in args.char], args.hasse_q)
    else:
        raise DomainError("give --cyclotomic, --quadratic, or --modulus with --char")
    rep = relative_class_number(spec)
    lines = [
        f"h_minus={rep.h_minus}",
        f"degree={spec.degree} w={rep.w} Q={rep.Q} ({rep.Q_source})",
        f"exact product={rep.product}",
    ]
    lines += [f"  {c.kind} {[x.label() for x in c.characters]} f={c.conductor}: {c.value}" for c in rep.contributions]
    lines.append(f"float cross-check={rep.float_value!r}")
    inputs = {k: getattr(args, k) for k in ("cyclotomic", "quadratic", "modulus", "char", "hasse_q")}
    _emit(args, "relclassnum", inputs, rep.to_dict(), "\n".join(lines))
    return EXIT_OK if rep.float_agrees else EXIT_INCONSISTENT


def _cmd_sweep(args) -> int:
    reports = sweep(args.max_d, args.min_d, ORACLES, args.jobs)
    bad = [r for r in reports if not r.oracles_agree]
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            wr = csv.writer(fh, lineterminator="\n")
            wr.writerow(["D", "h", "exact_sum", "forms_oracle", "analytic_oracle", "agree"])
            for r in reports:
                wr.writerow([r.D, r.h, str(r.exact_sum), r.forms_h, repr(r.analytic_value),
                             str(bool(r.oracles_agree)).lower()])
    result = {
        "count": len(reports),
        "disagreements": [r.D for r in bad],
        "rows": [r.to_dict() for r in reports] if args.rows else None,
    }
    text = f"{len(reports)} fundamental discriminants in [{args.min_d}, {args.max_d}], {len(bad)} disagreements"
    if bad:
        text += f"\nfirst disagreement: {bad[0].to_dict()}"
    _emit(args, "sweep", {"max_d": args.max_d, "min_d": args.min_d, "csv": args.csv}, result, text)
    return EXIT_OK if not bad else EXIT_INCONSISTENT


def _cmd_verify(args) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    results = []
    for name in names:
        fn = SUITES[name]
        kwargs = {}
        if name in ("reciprocity", "oddness", "inversion", "oracle", "classnum") and args.max_d is not None:
            kwargs["max_d"] = args.max_d
        if name in ("vanishing", "lvalue") and args.max_f is not None:
            kwargs["max_f"] = args.max_f
        if name == "parity" and args.max_p is not None:
            kwargs["max_p"] = args.max_p
        if name == "reciprocity":
            kwargs["samples"] = args.samples
            kwargs["seed"] = args.seed
        results.append(fn(**kwargs))
    lines = []
    for r in results:
        lines.append(f"{r.name}: {r.checked} checked, {r.violations} violations")
        if r.first_counterexample:
            lines.append(f"  first counterexample: {r.first_counterexample}")
    inputs = {"suite": args.suite, "max_d": args.max_d, "max_f": args.max_f, "max_p": args.max_p,
              "samples": args.samples, "seed": args.seed}
    _emit(args, "verify", inputs, {"suites": [r.to_dict() for r in results]}, "\n".join(lines))
    return EXIT_OK if all(r.ok for r in results) else EXIT_INCONSISTENT


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="dedesum", description="Dedekind sums, L(1, chi) and class numbers, exactly.")
    p.add_argument("--version", action="version", version=f"dedesum {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        sp.set_defaults(func=fn)
        return sp

    sp = add("sum", _cmd_sum, "Dedekind sum s(c, d)")
    sp.add_argument("c", type=int)
    sp.add_argument("d", type=int)
    sp.add_argument("--oracle", choices=["sawtooth", "cotangent"])

    sp = add("chars", _cmd_chars, "character table modulo f")
    sp.add_argument("f", type=int)
    sp.add_argument("--odd-only", action="store_true")

    sp = add("classnum", _cmd_classnum, "class number of Q(sqrt(-D))")
    sp.add_argument("D", type=int)
    sp.add_argument("--oracle", choices=["forms", "analytic", "all"])

    sp = add("relclassnum", _cmd_relclassnum, "relative class number of an imaginary abelian field")
    sp.add_argument("--cyclotomic", type=int, metavar="N")
    sp.add_argument("--quadratic", type=int, metavar="D")
    sp.add_argument("--modulus", type=int, metavar="F")
    sp.add_argument("--char", action="append", metavar="E1,E2,...",
                    help="exponent vector of a generating character (repeatable)")
    sp.add_argument("--hasse-q", type=int, choices=[1, 2])

    sp = add("sweep", _cmd_sweep, "class numbers for all fundamental -D in a range")
    sp.add_argument("--max-d", type=int, default=10_000)
    sp.add_argument("--min-d", type=int, default=3)
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--csv", metavar="PATH")
    sp.add_argument("--rows", action="store_true", help="include every row in JSON output")

    sp = add("verify", _cmd_verify, "run property suites")
    sp.add_argument("suite", choices=[*SUITES, "all"])
    sp.add_argument("--max-d", type=int)
    sp.add_argument("--max-f", type=int)
    sp.add_argument("--max-p", type=int)
    sp.add_argument("--samples", type=int, default=10_000)
    sp.add_argument("--seed", type=int, default=0)
    return p


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except InconsistencyError as exc:
        print(f"dedesum: internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT
    except DomainError as exc:
        print(f"dedesum: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


def main() -> None:
    sys.exit(run())
