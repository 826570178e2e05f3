"""Command-line driver: ``table``, ``verify`` and ``gram``.

Exit codes: 0 pass, 1 usage, 2 domain or degenerate-denominator error,
3 quadrature did not converge, 4 a verification ran and failed.
A one-line JSON run manifest is written to stderr for every invocation.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from fractions import Fraction

from . import bigm1, degenerate
from .bigm1 import ParamSet, Perturb
from .degenerate import DegenerateCase, Kind
from .errors import BigJacobiError, DegenerateDenominator, NoConvergence
from .quadrature import QuadConfig, gram_quadrature
from .ratpoly import rational_str

EXIT_PASS, EXIT_USAGE, EXIT_DOMAIN, EXIT_NOCONV, EXIT_FAIL = 0, 1, 2, 3, 4

_RATIONAL = re.compile(r"^[+-]?\d+(/\d+)?$")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def __init__(self, *a, **kw):
        super().__init__(*a, **kw)
        # let "-9/10" through as a value, not an option
        self._negative_number_matcher = re.compile(r"^-\d+(/\d+)?$|^-\d*\.\d+$")

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def rational(text: str) -> Fraction:
    text = text.strip()
    if not _RATIONAL.match(text):
        if re.match(r"^[+-]?\d*\.\d*([eE][+-]?\d+)?$", text) or "e" in text.lower():
            raise argparse.ArgumentTypeError(
                f"{text!r} looks like a decimal; write it as an exact fraction P/Q (e.g. 1/2)")
        raise argparse.ArgumentTypeError(f"{text!r} is not a rational of the form P or P/Q")
    return Fraction(text)


def _add_params(p):
    p.add_argument("--alpha", type=rational, required=True)
    p.add_argument("--beta", type=rational, required=True)
    p.add_argument("--c", type=rational, required=True)


def _add_case(p):
    p.add_argument("--kind", choices=["alpha", "beta"], default="alpha",
                   help="which parameter equals -2N-1")
    p.add_argument("--N", type=int, default=None)
    p.add_argument("--alpha", type=rational, default=None, help="free parameter when --kind beta")
    p.add_argument("--beta", type=rational, default=None, help="free parameter when --kind alpha")
    p.add_argument("--c", type=rational, default=None)


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="bigminus1", description="Big -1 Jacobi polynomials: tables and exact/numeric verification.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    t = sub.add_parser("table", help="recurrence coefficients, norms and polynomials")
    _add_params(t)
    t.add_argument("--nmax", type=int, required=True)
    fmt = t.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--csv", action="store_true")

    v = sub.add_parser("verify", help="exact identity suites")
    v.add_argument("--suite", required=True,
                   choices=["hyper", "lemma1", "lemma2", "lemma3", "norms", "remark2"])
    v.add_argument("--kind", choices=["alpha", "beta"], default="alpha")
    v.add_argument("--N", type=int, default=None)
    v.add_argument("--alpha", type=rational, default=None)
    v.add_argument("--beta", type=rational, default=None)
    v.add_argument("--c", type=rational, default=None)
    v.add_argument("--nmax", type=int, default=None)
    v.add_argument("--mmax", type=int, default=None)
    v.add_argument("--jmax", type=int, default=None)
    v.add_argument("--Nmax", type=int, default=4, help="lemma1: largest N")
    v.add_argument("--a", type=rational, action="append", default=None,
                   help="lemma1: upper parameter (repeatable)")
    v.add_argument("--out", default=None)

    g = sub.add_parser("gram", help="quadrature-backed Gram matrix checks")
    g.add_argument("--mode", choices=["standard", "degenerate"], required=True)
    _add_case(g)
    g.add_argument("--nmax", type=int, required=True)
    g.add_argument("--tol", type=float, default=1e-8)
    g.add_argument("--max-levels", type=int, default=QuadConfig().max_levels)
    g.add_argument("--out", default=None)
    return ap


# -- helpers ------------------------------------------------------------

def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError("missing required flag(s): " + ", ".join("--" + m for m in missing))


def _case_from(args) -> DegenerateCase:
    _need(args, "N", "c")
    if args.kind == "alpha":
        if args.alpha is not None:
            raise UsageError("--kind alpha fixes alpha = -2N-1; pass the free parameter as --beta")
        _need(args, "beta")
        return DegenerateCase(Kind.ALPHA_ODD, args.N, args.beta, args.c)
    if args.beta is not None:
        raise UsageError("--kind beta fixes beta = -2N-1; pass the free parameter as --alpha")
    _need(args, "alpha")
    return DegenerateCase(Kind.BETA_ODD, args.N, args.alpha, args.c)


def _params_from(args) -> ParamSet:
    _need(args, "alpha", "beta", "c")
    return ParamSet(args.alpha, args.beta, args.c)


def _emit(text: str, out: str | None, artifacts: list) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
        artifacts.append(out)
    else:
        sys.stdout.write(text + "\n")


# -- subcommands ------------------------------------------------------------

def cmd_table(args, manifest) -> int:
    params = _params_from(args)
    manifest["params"] = params.as_strings()
    manifest["nmax"] = args.nmax
    seq = bigm1.q_seq(args.nmax, params)
    rows = []
    for n in range(args.nmax + 1):
        rows.append({
            "n": n,
            "b": rational_str(bigm1.recurrence_b(n, params)),
            "u": rational_str(bigm1.recurrence_u(n, params)),
            "h": rational_str(bigm1.norm_h(n, params)),
            "Q": str(seq[n]),
            "coeffs": [rational_str(a) for a in seq[n].coeffs],
        })
    if args.json:
        sys.stdout.write(json.dumps({"params": params.as_strings(), "rows": rows}, indent=2) + "\n")
    elif args.csv:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "b_n", "u_n", "h_n", "Q_n"])
        for r in rows:
            w.writerow([r["n"], r["b"], r["u"], r["h"], r["Q"]])
        sys.stdout.write(buf.getvalue())
    else:
        print(f"# big -1 Jacobi {params}; h_n is the norm over <u,1>")
        print(f"{'n':>3}  {'b_n':>14}  {'u_n':>14}  {'h_n':>16}  Q_n")
        for r in rows:
            print(f"{r['n']:>3}  {r['b']:>14}  {r['u']:>14}  {r['h']:>16}  {r['Q']}")
    return EXIT_PASS


def _suite_cases(args, manifest) -> tuple[dict, list[dict]]:
    s = args.suite
    cases = []
    if s == "hyper":
        params = _params_from(args)
        _need(args, "nmax")
        seq = bigm1.q_seq(args.nmax, params)
        for n in range(args.nmax + 1):
            cases.append({"n": n, "ok": bigm1.q_hyper(n, params) == seq[n]})
        return {"params": params.as_strings(), "nmax": args.nmax}, cases
    if s == "lemma1":
        nmax = 8 if args.nmax is None else args.nmax
        avals = args.a or [Fraction(1, 2), Fraction(3, 2), Fraction(2), Fraction(7, 3)]
        for a in avals:
            for N in range(1, args.Nmax + 1):
                for n in range(nmax + 1):
                    cases.append({"n": n, "N": N, "a": rational_str(a),
                                  "ok": bigm1.lemma1_check(n, N, a)})
        return {"nmax": nmax, "Nmax": args.Nmax, "a": [rational_str(a) for a in avals]}, cases
    if s == "norms":
        params = _params_from(args)
        _need(args, "nmax")
        # literal values at alpha or beta = -2N-1 collapse to 0 = 0; compare eps-leading terms there
        perturb = _degenerate_perturb(params)
        for n in range(1, args.nmax + 1):
            if perturb is None:
                try:
                    ok = bigm1.norm_h(n, params) == bigm1.recurrence_u(n, params) * bigm1.norm_h(n - 1, params)
                    cases.append({"n": n, "mode": "exact", "ok": ok})
                    continue
                except DegenerateDenominator as exc:
                    cases.append({"n": n, "mode": "exact", "ok": False, "error": str(exc)})
                    continue
            ok = degenerate.norm_recursion_eps_check(params, perturb, n)
            cases.append({"n": n, "mode": f"eps-{perturb.value}", "ok": ok})
        return {"params": params.as_strings(), "nmax": args.nmax}, cases

    case = _case_from(args)
    info = {"kind": case.kind.value, "N": case.N, "free": rational_str(case.free),
            "c": rational_str(case.c), "params": case.params.as_strings()}
    if s == "lemma2":
        nmax = 10 if args.nmax is None else args.nmax
        for n in range(nmax + 1):
            cases.append(_guarded({"n": n}, degenerate.lemma2_check, case, n))
        info["nmax"] = nmax
    elif s == "lemma3":
        mmax = 6 if args.mmax is None else args.mmax
        for m in range(mmax + 1):
            cases.append(_guarded({"m": m}, degenerate.factor_check, case, m))
        info["mmax"] = mmax
    elif s == "remark2":
        jmax = case.size + 4 if args.jmax is None else args.jmax
        for j in range(case.size, jmax + 1):
            cases.append(_guarded({"j": j}, degenerate.remark2_ratio_check, case, j))
        info["jmax"] = jmax
    return info, cases


def _negative_odd(q: Fraction) -> bool:
    return q.denominator == 1 and q < 0 and q % 2 == 1


def _degenerate_perturb(params: ParamSet) -> Perturb | None:
    if _negative_odd(params.alpha):
        return Perturb.ALPHA
    if _negative_odd(params.beta):
        return Perturb.BETA
    return None


def _guarded(case_info, fn, *a):
    try:
        case_info["ok"] = bool(fn(*a))
    except DegenerateDenominator as exc:
        case_info["ok"] = False
        case_info["error"] = str(exc)
    return case_info


def cmd_verify(args, manifest) -> int:
    info, cases = _suite_cases(args, manifest)
    manifest["params"] = info.get("params", {})
    manifest["nmax"] = info.get("nmax", info.get("mmax", info.get("jmax")))
    all_ok = all(c["ok"] for c in cases)
    verdict = {"suite": args.suite, **info, "cases": cases, "all_true": all_ok}
    _emit(json.dumps(verdict, indent=2), args.out, manifest["artifacts"])
    if any("error" in c for c in cases):
        return EXIT_DOMAIN
    return EXIT_PASS if all_ok else EXIT_FAIL


def cmd_gram(args, manifest) -> int:
    cfg = QuadConfig(max_levels=args.max_levels)
    manifest["nmax"] = args.nmax
    manifest["tol"] = args.tol
    if args.mode == "standard":
        if args.N is not None:
            raise UsageError("--N is only meaningful with --mode degenerate")
        params = _params_from(args)
        manifest["params"] = params.as_strings()
        report = gram_quadrature(args.nmax, params, cfg, tol=args.tol)
        doc = report.to_dict()
    else:
        case = _case_from(args)
        manifest["params"] = case.params.as_strings()
        report = degenerate.gram_degenerate(case, args.nmax, cfg, tol=args.tol)
        doc = report.to_dict()
        doc["notes"] = {k: (rational_str(v) if isinstance(v, Fraction) else v)
                        for k, v in report.notes.items()}
    _emit(json.dumps(doc, indent=2), args.out, manifest["artifacts"])
    return EXIT_PASS if report.passed else EXIT_FAIL


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        if exc.code in (0, None):
            return EXIT_PASS
        manifest = {"command": None, "params": {}, "nmax": None, "tol": None,
                    "outcome": "error", "artifacts": []}
        print(json.dumps({"manifest": manifest}), file=sys.stderr)
        return EXIT_USAGE
    manifest = {"command": args.command, "params": {}, "nmax": None,
                "tol": getattr(args, "tol", None), "outcome": "error", "artifacts": []}
    handlers = {"table": cmd_table, "verify": cmd_verify, "gram": cmd_gram}
    try:
        code = handlers[args.command](args, manifest)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
        code = EXIT_USAGE
    except DegenerateDenominator as exc:
        print(f"error: {exc}", file=sys.stderr)
        code = EXIT_DOMAIN
    except NoConvergence as exc:
        print(f"error: {exc}", file=sys.stderr)
        code = EXIT_NOCONV
    except (BigJacobiError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        code = EXIT_DOMAIN
    manifest["outcome"] = {EXIT_PASS: "pass", EXIT_FAIL: "fail"}.get(code, "error")
    print(json.dumps({"manifest": manifest}), file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
