"""Command-line front end: ``confembed levels|check|classify|decompose|verify-paper``.

Exit status: 0 success, 1 usage error, 2 verification mismatch, 3 internal error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
import time
from fractions import Fraction
from typing import List, Optional

from . import __version__
from .conformal import LevelError, solve_levels, verify_numcheck
from .decomp import finite_decomposition, fmt_rational, graded_decomposition
from .findec import ClassificationError, classify
from .rootsys import LieType, LieTypeError
from .subalg import ConstructionError, SubalgebraError, enumerate_maximal, find_subalgebra

EXIT_OK, EXIT_USAGE, EXIT_MISMATCH, EXIT_INTERNAL = 0, 1, 2, 3
DEFAULT_WINDOW = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        # let "-5/3" through as a positional level
        self._negative_number_matcher = re.compile(r"^-\d+(/\d+)?$|^-\d*\.\d+$")

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def parse_level(text: str) -> Fraction:
    try:
        return Fraction(text.strip().replace("−", "-"))
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"cannot read level {text!r}; expected an integer or p/q") from None


def parse_type(text: str) -> LieType:
    try:
        return LieType.parse(text)
    except LieTypeError as exc:
        raise UsageError(str(exc)) from None


def _emit(args, payload: dict, lines: List[str]) -> None:
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print("\n".join(lines))


def _frs(xs) -> List[str]:
    return [fmt_rational(x) for x in xs]


# -- commands ------------------------------------------------------------------


def cmd_levels(args) -> int:
    g = parse_type(args.type)
    rows = []
    for s in enumerate_maximal(g):
        sol = solve_levels(s)
        rows.append({
            "subalgebra": s.label,
            "removed_node": s.removed_node,
            "levels": _frs(sol.levels),
            "conditions": list(sol.conditions),
            "needs_inspection": sol.needs_inspection,
        })
    lines = [f"{g}"]
    width = max(len(r["subalgebra"]) for r in rows) if rows else 0
    for r in rows:
        text = "; ".join(r["levels"])
        extra = f"   [{'; '.join(r['conditions'])}]" if r["conditions"] else ""
        flag = "   needs inspection" if r["needs_inspection"] else ""
        lines.append(f"  {r['subalgebra']:<{width}}  {text}{extra}{flag}")
    _emit(args, {"command": "levels", "inputs": {"type": str(g)}, "rows": rows}, lines)
    return EXIT_OK


def _sub(args):
    g = parse_type(args.type)
    try:
        return find_subalgebra(g, args.subalgebra)
    except (SubalgebraError, LieTypeError) as exc:
        raise UsageError(str(exc)) from None


def cmd_check(args) -> int:
    s = _sub(args)
    k = parse_level(args.level)
    rep = verify_numcheck(s, k)
    payload = {
        "command": "check",
        "inputs": {"type": str(s.ambient), "subalgebra": s.label, "level": fmt_rational(k)},
        "components": [{"index": i, "value": fmt_rational(v)} for i, v in rep.values],
        "conformal": rep.conformal,
    }
    lines = [f"{s.ambient} > {s.label} at k = {fmt_rational(k)}"]
    lines += [f"  component {i}: {fmt_rational(v)}" for i, v in rep.values]
    lines.append(f"  conformal: {'yes' if rep.conformal else 'no'}")
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_classify(args) -> int:
    s = _sub(args)
    k = parse_level(args.level)
    v = classify(s, k)
    payload = {
        "command": "classify",
        "inputs": {"type": str(s.ambient), "subalgebra": s.label, "level": fmt_rational(k)},
        "verdict": v.verdict.value,
        "justification": v.justification.value,
        "witness_prefix": None if v.witness is None else _frs(v.witness),
        "citation": v.citation,
        "failing_weights": [
            {"blocks": [list(map(fmt_rational, b)) for b in r.nu.blocks], "delta": fmt_rational(r.delta)}
            for r in v.failing
        ],
    }
    lines = [f"{s.ambient} > {s.label} at k = {fmt_rational(k)}: {v.verdict.value} ({v.justification.value})"]
    if v.witness is not None:
        lines.append("  witness: " + ", ".join(_frs(v.witness)))
    if v.citation:
        lines.append(f"  citation: {v.citation}")
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_decompose(args) -> int:
    s = _sub(args)
    k = parse_level(args.level)
    if s.center_dim:
        window = DEFAULT_WINDOW if args.window is None else args.window
        if window < 0:
            raise UsageError("--window must be nonnegative")
        table = graded_decomposition(s, k, window)
    else:
        table = finite_decomposition(s, k)
    payload = dict(table.to_json(), command="decompose")
    _emit(args, payload, [f"{s.ambient} > {s.label} at k = {fmt_rational(k)}", table.text()])
    return EXIT_OK


def cmd_verify_paper(args) -> int:
    from .verify import run_all

    t0 = time.perf_counter()
    results = run_all(args.max_rank)
    elapsed = time.perf_counter() - t0
    failed = [r for r in results if not r.passed]
    payload = {
        "command": "verify-paper",
        "inputs": {"max_rank": args.max_rank},
        "items": [
            {"criterion": r.criterion, "item": r.item, "passed": r.passed, "detail": r.detail}
            for r in results
        ],
        "passed": len(results) - len(failed),
        "failed": len(failed),
        "elapsed": f"{elapsed:.2f}",
    }
    lines = []
    for r in results:
        lines.append(r.line())
        lines += [f"    {d}" for d in r.detail]
    lines.append(f"{len(results) - len(failed)}/{len(results)} items pass")
    _emit(args, payload, lines)
    return EXIT_MISMATCH if failed else EXIT_OK


# -- entry point ---------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    p = _Parser(prog="confembed", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("levels", parents=[common], help="conformal levels of every maximal equal-rank subalgebra")
    c.add_argument("type")
    c.set_defaults(func=cmd_levels)

    for name, func, helptext in (
        ("check", cmd_check, "conformal weights of the components of p"),
        ("classify", cmd_classify, "finite or infinite decomposition at a conformal level"),
        ("decompose", cmd_decompose, "explicit decomposition into irreducible modules"),
    ):
        c = sub.add_parser(name, parents=[common], help=helptext)
        c.add_argument("type")
        c.add_argument("subalgebra", help='e.g. "C2xC3", "A4xZ" or "A3xZ#4"')
        c.add_argument("level", help="integer or p/q")
        if name == "decompose":
            c.add_argument("--window", type=int, default=None, help="charge window Q for the center case")
        c.set_defaults(func=func)

    c = sub.add_parser("verify-paper", parents=[common], help="run every reference comparison")
    c.add_argument("--max-rank", type=int, default=12)
    c.set_defaults(func=cmd_verify_paper)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"confembed: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (SubalgebraError, LevelError) as exc:
        print(f"confembed: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ConstructionError, ClassificationError, AssertionError) as exc:
        print(f"confembed: internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
