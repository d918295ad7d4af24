"""Command-line driver: exact evaluation, verification suites and lab tools.

Spins are given as values ("1/2", "3/2", "2", "0.5").  Every command exits
with status 0 when its checks pass, 1 when a check fails and 2 on invalid
input.
"""

from __future__ import annotations

import argparse
import json
import sys
from decimal import Decimal
from fractions import Fraction

from .exact import DomainError, Spin
from .lab import emit_identification_system, gamma_product, orthogonality_check, residual_delta_sum_rule
from .lab import zeng_relation_check
from .memo import load_caches, save_caches
from .osp import closure_unified, poly_P, poly_P_extended, poly_Q, supertriangles, x_coeff
from .providers import FileProvider, MissingEntryError
from .reports import VerificationReport
from .su2 import nabla, sixj
from .suites import DEFAULT_Q, SUITES, SuiteConfig, load_provider, run_suite
from .suq2 import QContext

ARITY = {"sixj": 6, "qsixj": 6, "nabla": 3, "nablaS": 3, "P": 3, "Q": 3, "closure": 3,
         "gamma-product": 2, "x": 4}


def _spins(values: list[str]) -> list[int]:
    return [Spin.parse(v).twice for v in values]


def _compute(symbol: str, raw: list[str], q_values) -> str:
    if len(raw) != ARITY[symbol]:
        raise DomainError(f"{symbol} takes {ARITY[symbol]} arguments, got {len(raw)}")
    if symbol == "x":
        try:
            m = int(raw[0])
        except ValueError as exc:
            raise DomainError(f"the index m must be an integer, got {raw[0]!r}") from exc
        return str(x_coeff(m, *_spins(raw[1:])))
    args = _spins(raw)
    if symbol == "sixj":
        return sixj(*args).render()
    if symbol == "qsixj":
        return QContext(q_values[0]).q_sixj(*args).render()
    if symbol == "nabla":
        return nabla(*args).render()
    if symbol == "nablaS":
        return supertriangles(*args)[0].render()
    if symbol == "P":
        w2, l2, k2 = args
        return (poly_P(*args) if w2 <= min(l2, k2) else poly_P_extended(*args)).render()
    if symbol == "Q":
        return poly_Q(*args).render()
    if symbol == "closure":
        return closure_unified(*args).render()
    return gamma_product(*args).polynomial().render()


def _tolerance(exponent: int) -> Decimal:
    if exponent <= 0:
        raise DomainError("--tolerance takes a positive exponent n, meaning 10^-n")
    return Decimal(10) ** -exponent


def _emit(payload, fmt: str, text: str):
    if fmt == "json":
        print(json.dumps(payload, indent=2, sort_keys=True, default=str))
    else:
        print(text)


def _report_out(rep: VerificationReport, args) -> int:
    if args.format == "json":
        print(rep.to_json(include_time=args.timing))
    else:
        print(rep.to_text(include_time=args.timing))
    return 0 if rep.ok else 1


def _config(args) -> SuiteConfig:
    provider = load_provider(args.provider, args.precision) if args.provider else None
    return SuiteConfig(threads=args.threads, q_values=tuple(args.q) if args.q else DEFAULT_Q,
                       provider=provider, precision=args.precision, tolerance=_tolerance(args.tolerance))


def _need_provider(args):
    if not args.provider:
        raise DomainError("this command needs --provider (TSV path, synthetic:SEED or experimental)")
    return load_provider(args.provider, args.precision)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--twice-max", type=int, default=None, help="twice-value bound for scans")
    common.add_argument("--q", type=Fraction, action="append", help="rational deformation parameter (repeatable)")
    common.add_argument("--provider", help="6-j^S values: TSV path, synthetic:SEED or experimental")
    common.add_argument("--precision", type=int, default=60, help="decimal digits for non-exact values")
    common.add_argument("--tolerance", type=int, default=30, help="n in the absolute tolerance 10^-n")
    common.add_argument("--threads", type=int, default=1)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--cache", help="memo cache file, loaded before and saved after the run")
    common.add_argument("--timing", action="store_true", help="include wall time in reports")

    parser = argparse.ArgumentParser(prog="supersum", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", parents=[common], help="evaluate one exact quantity")
    p.add_argument("symbol", choices=sorted(ARITY))
    p.add_argument("args", nargs="+", help="spins (x takes an integer index m first)")

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("suite", choices=list(SUITES) + ["all"])

    lab = sub.add_parser("lab", help="sum-rule laboratory").add_subparsers(dest="lab_command", required=True)
    p = lab.add_parser("residual", parents=[common], help="coefficient-wise residual of the sum rule")
    p.add_argument("spins", nargs=5, metavar="a b c d e")
    p = lab.add_parser("emit-system", parents=[common], help="linear system over unknown 6-j^S values")
    p.add_argument("spins", nargs=5, metavar="a b d e c")

    zeng = sub.add_parser("zeng", help="Zeng-type relation").add_subparsers(dest="zeng_command", required=True)
    p = zeng.add_parser("check", parents=[common], help="evaluate all sublevel combinations")
    p.add_argument("spins", nargs=6, metavar="J1 J2 J3 j1 j2 j3")

    table = sub.add_parser("table", help="provider tables").add_subparsers(dest="table_command", required=True)
    p = table.add_parser("validate", parents=[common], help="orthogonality check on every family of a TSV")
    p.add_argument("path")
    return parser


def _run(args) -> int:
    if args.command == "compute":
        value = _compute(args.symbol, args.args, args.q or DEFAULT_Q)
        _emit({"symbol": args.symbol, "args": args.args, "value": value}, args.format, value)
        return 0
    if args.command == "verify":
        cfg = _config(args)
        names = [n for n in SUITES if n not in ("lab-residuals", "zeng") or cfg.provider] \
            if args.suite == "all" else [args.suite]
        reports = [run_suite(n, args.twice_max, cfg) for n in names]
        if len(reports) == 1:
            return _report_out(reports[0], args)
        if args.format == "json":
            print(json.dumps([r.to_dict(args.timing) for r in reports], indent=2, sort_keys=True, default=str))
        else:
            print("\n".join(r.to_text(args.timing) for r in reports))
        return 0 if all(r.ok for r in reports) else 1
    if args.command == "lab":
        if args.lab_command == "emit-system":
            system = emit_identification_system(*_spins(args.spins))
            _emit(system.to_dict(), args.format, json.dumps(system.to_dict(), indent=2))
            return 0
        provider = _need_provider(args)
        res = residual_delta_sum_rule(*_spins(args.spins), provider, args.precision)
        text = "\n".join(f"m={m}: {r}" for m, r in enumerate(res.rendered()))
        _emit(res.to_dict(), args.format, f"basis degree {res.basis_degree} ({res.branch})\n{text}")
        return 0
    if args.command == "zeng":
        rep = zeng_relation_check(*_spins(args.spins), _need_provider(args), args.precision,
                                  _tolerance(args.tolerance))
        return _report_out(rep, args)
    provider = FileProvider(args.path)
    rep = VerificationReport("table-validate", {"path": args.path, "precision": args.precision})
    for family in provider.families():
        rep.merge(orthogonality_check(provider, family, args.precision, _tolerance(args.tolerance)))
    return _report_out(rep, args)


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.threads < 1:
        print("error: --threads must be >= 1", file=sys.stderr)
        return 2
    if args.cache:
        try:
            load_caches(args.cache)
        except FileNotFoundError:
            pass
    try:
        code = _run(args)
    except (DomainError, MissingEntryError, FileNotFoundError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.cache:
        save_caches(args.cache)
    return code


if __name__ == "__main__":
    sys.exit(main())
