"""Command-line interface: eval, table, verify and triangle."""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import re
import sys
from concurrent.futures import ThreadPoolExecutor
from typing import Optional, Sequence

from .legendre import Argument, IndexTriple, evaluate, p_tilde
from .suites import SUITES, run_all, run_suite
from .triangle import KINDS, TriangleConfig, solve_triangle
from .types import FnValue, GenLegendreError, PoleError, Side
from .wigner import SpinIndex, wigner_d

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3

FUNCTIONS = ("P", "Q", "Ptilde", "wigner-d")
COLUMNS = ("j_re", "j_im", "mu_re", "mu_im", "nu_re", "nu_im", "z_re", "z_im", "side",
           "value_re", "value_im", "abs_err", "flags")

_NUM = r"(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?"
_COMPLEX = re.compile(rf"([+-]?{_NUM})(?:([+-]{_NUM})i)?")


class UsageError(Exception):
    pass


def parse_complex(text: str) -> complex:
    """Parse "a", "a+bi" or "a-bi" (no spaces inside the literal, no locale rules)."""
    m = _COMPLEX.fullmatch(text.strip())
    if not m:
        raise UsageError(f"not a complex literal: {text!r} (use a, a+bi or a-bi)")
    re_part = float(m.group(1))
    im_part = float(m.group(2)) if m.group(2) else 0.0
    return complex(re_part, im_part)


def parse_real(text: str) -> float:
    z = parse_complex(text)
    if z.imag != 0.0:
        raise UsageError(f"expected a real number, got {text!r}")
    return z.real


def parse_range(text: str) -> list[complex]:
    """"v" or "start:stop:step"; points start + k step that do not pass stop."""
    parts = text.split(":")
    if len(parts) == 1:
        return [parse_complex(parts[0])]
    if len(parts) != 3:
        raise UsageError(f"range must be VALUE or START:STOP:STEP, got {text!r}")
    start, stop, step = (parse_complex(p) for p in parts)
    if step == 0:
        raise UsageError("range step must be nonzero")
    ratio = (stop - start) / step
    if abs(ratio.imag) > 1e-9 * max(1.0, abs(ratio)):
        raise UsageError(f"stop is not reachable from start along step in {text!r}")
    if ratio.real < -1e-9:
        return []
    count = int(math.floor(ratio.real + 1e-9)) + 1
    return [start + k * step for k in range(count)]


def _side(text: Optional[str]) -> Side:
    return Side.OFF_AXIS if text is None else Side.parse(text)


def _float_text(v: float) -> str:
    return repr(float(v))


def _json_number(v: float):
    return v if math.isfinite(v) else None


# ------------------------------------------------------------ evaluation


def _evaluate_point(function: str, j: complex, mu: complex, nu: complex, z: complex, side: Side) -> FnValue:
    if function in ("P", "Q"):
        return evaluate(function, IndexTriple(j, mu, nu), Argument(z, side))
    if z.imag != 0.0:
        raise UsageError(f"{function} takes a real argument in [-1, 1]")
    if function == "Ptilde":
        return p_tilde(IndexTriple(j, mu, nu), z.real, from_below=side == Side.BELOW)
    for name, v in (("j", j), ("mu", mu), ("nu", nu)):
        if v.imag != 0.0:
            raise UsageError(f"wigner-d needs real {name}")
    return wigner_d(SpinIndex.from_values(j.real, mu.real, nu.real), z.real)


def _value_dict(v: FnValue) -> dict:
    return {"value": {"re": _json_number(v.value.real), "im": _json_number(v.value.imag)},
            "abs_error": _json_number(v.abs_error), "flags": v.flag_names()}


def cmd_eval(args) -> int:
    vals = [parse_complex(t) for t in (args.j, args.mu, args.nu, args.z)]
    try:
        v = _evaluate_point(args.function, *vals, _side(args.side))
    except PoleError:
        v = FnValue.pole()
    print(json.dumps(_value_dict(v)))
    return EXIT_OK


def _table_row(function: str, point: tuple, side: Side) -> dict:
    j, mu, nu, z = point
    row = {"j_re": j.real, "j_im": j.imag, "mu_re": mu.real, "mu_im": mu.imag, "nu_re": nu.real, "nu_im": nu.imag,
           "z_re": z.real, "z_im": z.imag}
    on_cut = function in ("P", "Q") and z.imag == 0.0 and z.real < 1.0
    row["side"] = side.name.lower() if (on_cut or function == "Ptilde") and side != Side.OFF_AXIS else ""
    try:
        v = _evaluate_point(function, j, mu, nu, z, side)
        flags = v.flag_names()
        value, err = v.value, v.abs_error
    except PoleError:
        value, err, flags = complex(math.nan, math.nan), math.inf, ["pole"]
    except (GenLegendreError, UsageError) as exc:
        value, err = complex(math.nan, math.nan), math.nan
        flags = ["invalid-index" if type(exc).__name__ == "InvalidIndexError" else "domain-error"]
    row.update({"value_re": value.real, "value_im": value.imag, "abs_err": err, "flags": ";".join(flags)})
    return row


def table_rows(function: str, js, mus, nus, zs, side: Side, threads: int = 1) -> list[dict]:
    points = [(j, mu, nu, z) for j in js for mu in mus for nu in nus for z in zs]
    if function in ("P", "Q") and side == Side.OFF_AXIS:
        if any(z.imag == 0.0 and z.real < 1.0 for z in zs):
            raise UsageError("the argument range touches a cut; pass --side above or --side below")
    work = lambda p: _table_row(function, p, side)  # noqa: E731
    if threads > 1 and len(points) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(work, points))
    return [work(p) for p in points]


def render_csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(COLUMNS)
    for r in rows:
        w.writerow([r[c] if isinstance(r[c], str) else _float_text(r[c]) for c in COLUMNS])
    return buf.getvalue()


def render_json(rows: list[dict]) -> str:
    out = []
    for r in rows:
        out.append({c: (r[c] if isinstance(r[c], str) else _json_number(r[c])) for c in COLUMNS})
    return json.dumps(out, indent=1) + "\n"


def cmd_table(args) -> int:
    side = _side(args.side)
    rows = table_rows(args.function, parse_range(args.j), parse_range(args.mu), parse_range(args.nu),
                      parse_range(args.z), side, args.threads)
    text = render_csv(rows) if args.format == "csv" else render_json(rows)
    if args.output is None or args.output == "-":
        sys.stdout.write(text)
        return EXIT_OK
    try:
        with open(args.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"error: cannot write {args.output}: {exc.strerror or exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.samples is not None and args.samples < 0:
        raise UsageError("--samples must be nonnegative")
    if args.tolerance is not None and not args.tolerance > 0:
        raise UsageError("--tolerance must be positive")
    if args.suite == "all":
        reports = run_all(args.seed, args.samples, args.tolerance, args.threads)
        passed = all(r.passed for r in reports)
        doc = {"suite": "all", "seed": args.seed, "cases_run": sum(r.cases_run for r in reports),
               "max_residual": max(r.max_residual for r in reports), "pass": passed,
               "suites": [r.to_dict() for r in reports]}
    else:
        report = run_suite(args.suite, args.seed, args.samples, args.tolerance, args.threads)
        passed, doc = report.passed, report.to_dict()
    sys.stdout.write(json.dumps(doc, indent=1) + "\n")
    return EXIT_OK if passed else EXIT_FAIL


def cmd_triangle(args) -> int:
    cfg = solve_triangle(TriangleConfig(parse_real(args.z1), parse_real(args.z2), parse_real(args.parameter), args.kind))
    print(json.dumps({"kind": cfg.kind, "z1": cfg.z1, "z2": cfg.z2, "parameter": cfg.parameter,
                      "z_third": cfg.z_third, "p1": cfg.p1, "p2": cfg.p2, "consistency": cfg.consistency}))
    return EXIT_OK


# ------------------------------------------------------------ argument parsing


def _threads(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if n < 1:
        raise argparse.ArgumentTypeError("--threads must be at least 1")
    return n


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="genlegendre",
                                description="Generalized Legendre functions P, Q and rotation d-functions.")
    p.add_argument("--threads", type=_threads, default=os.cpu_count() or 1,
                   help="worker threads for table rows and verify cases (default: logical cores)")
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("eval", help="evaluate one function value")
    e.add_argument("function", choices=FUNCTIONS)
    for name in ("j", "mu", "nu", "z"):
        e.add_argument(name, help="complex literal a, a+bi or a-bi")
    e.add_argument("--side", choices=("above", "below"), help="cut side when z lies on a branch cut")
    e.set_defaults(handler=cmd_eval)

    t = sub.add_parser("table", help="tabulate a function over index and argument ranges")
    t.add_argument("function", choices=FUNCTIONS)
    for name in ("j", "mu", "nu", "z"):
        t.add_argument(f"--{name}", required=True, help="VALUE or START:STOP:STEP (complex literals)")
    t.add_argument("--side", choices=("above", "below"))
    t.add_argument("--format", choices=("csv", "json"), default="csv")
    t.add_argument("--output", "-o", help="output file (default: standard output)")
    t.set_defaults(handler=cmd_table)

    v = sub.add_parser("verify", help="run a verification suite and print its JSON report")
    v.add_argument("suite", choices=SUITES + ("all",))
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--samples", type=int, help="sample count (default: per-suite)")
    v.add_argument("--tolerance", type=float, help="replace the residual bounds of the suite")
    v.set_defaults(handler=cmd_verify)

    g = sub.add_parser("triangle", help="solve the hyperbolic or trigonometric triangle")
    g.add_argument("kind", choices=KINDS)
    g.add_argument("z1")
    g.add_argument("z2")
    g.add_argument("parameter", help="alpha (hyperbolic) or theta (trigonometric)")
    g.set_defaults(handler=cmd_triangle)
    return p


def _shield_negative_literals(argv: Sequence[str]) -> list[str]:
    # argparse reads "-3+0.5i" as an option; a leading space keeps it positional and parse_complex strips it
    out = []
    for a in argv:
        literal = all(_COMPLEX.fullmatch(part) for part in a.split(":"))
        if a.startswith("-") and literal and not re.fullmatch(r"-\d+|-\d*\.\d+", a):
            a = " " + a
        out.append(a)
    return out


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_shield_negative_literals(argv))
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.handler(args)
    except (UsageError, GenLegendreError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
