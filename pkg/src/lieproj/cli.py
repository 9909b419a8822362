"""Command-line front end.

Exit status: 0 when every reported check passes, 1 on a failed check or
internal invariant failure, 2 on unparseable input, 3 when the module
exceeds ``--max-dim``.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction

from .casimir_projector import casimir_tensor_apply, pi_constant, tensor
from .checks import pi_projector_identity, run_all
from .errors import DimensionCapError, InvariantError, ParseError
from .exactlin import RMatrix, format_rational, parse_vector
from .homvariety import (
    SubspaceData, emit_equations, generator_label, inner_ideal_test, lichtenstein_constant,
    membership_test, orbit_sample, parse_generator, random_word,
)
from .hwmodule import DEFAULT_MAX_DIM, build_module
from .liealgebra import bracket_closure
from .rootdata import format_weight, freudenthal_multiplicities, parse_type, parse_weight


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ParseError(message)


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="text")
    common.add_argument("--max-dim", type=int, default=DEFAULT_MAX_DIM,
                        help="refuse modules larger than this (default %(default)s)")

    p = _Parser(prog="lieproj", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    d = sub.add_parser("describe", parents=[common], help="root system summary")
    d.add_argument("type")

    for name, help_ in [("rep", "module dimension and weight multiplicities"),
                        ("projector", "pi constant, Casimir eigenvalue, Lichtenstein constant"),
                        ("equations", "quadrics cutting out the highest-weight orbit"),
                        ("verify", "run the full invariant suite")]:
        s = sub.add_parser(name, parents=[common], help=help_)
        s.add_argument("type")
        s.add_argument("weight")

    m = sub.add_parser("member", parents=[common], help="orbit membership of a vector")
    m.add_argument("type")
    m.add_argument("weight")
    src = m.add_mutually_exclusive_group(required=True)
    src.add_argument("--vector", help="comma-separated rationals, e.g. 1,0,-1/2")
    src.add_argument("--vector-file")

    ii = sub.add_parser("inner-ideal", parents=[common], help="inner-ideal test for a subspace")
    ii.add_argument("type")
    ii.add_argument("weight")
    src = ii.add_mutually_exclusive_group(required=True)
    src.add_argument("--subspace", help="file with one comma-separated column per line")
    src.add_argument("--column", action="append", help="a spanning column (repeatable)")

    o = sub.add_parser("orbit-sample", parents=[common], help="a point of the highest-weight orbit")
    o.add_argument("type")
    o.add_argument("weight")
    src = o.add_mutually_exclusive_group()
    src.add_argument("--word", help="e.g. F2:1,F1:-1/2 (first entry acts first)")
    src.add_argument("--seed", type=int, default=0)
    o.add_argument("--length", type=int, default=5)
    return p


def _q(x) -> str:
    return format_rational(Fraction(x))


def _vec(v: RMatrix) -> list[str]:
    return [_q(x) for x in v.values()]


def _read_vector(args, dim: int) -> RMatrix:
    text = args.vector
    if text is None:
        with open(args.vector_file) as fh:
            text = fh.read().strip()
    vals = parse_vector(text)
    if len(vals) != dim:
        raise ParseError(f"vector has {len(vals)} entries, module has dimension {dim}")
    return RMatrix.column(vals)


def _read_subspace(args, dim: int) -> SubspaceData:
    lines = args.column
    if lines is None:
        with open(args.subspace) as fh:
            lines = [ln for ln in (s.strip() for s in fh) if ln and not ln.startswith("#")]
    cols = []
    for ln in lines:
        vals = parse_vector(ln)
        if len(vals) != dim:
            raise ParseError(f"column has {len(vals)} entries, module has dimension {dim}")
        cols.append(RMatrix.column(vals))
    try:
        return SubspaceData(tuple(cols))
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def _parse_word(text: str, rank: int) -> list[tuple[int, Fraction]]:
    word = []
    for item in text.split(","):
        label, _, s = item.strip().partition(":")
        try:
            idx = parse_generator(label, rank)
        except (ValueError, IndexError) as exc:
            raise ParseError(str(exc)) from exc
        word.append((idx, parse_vector(s or "1")[0]))
    return word


def run(argv: list[str]) -> tuple[int, dict]:
    """Parse ``argv`` and execute; returns (exit status, report)."""
    return execute(_build_parser().parse_args(argv))


def execute(args: argparse.Namespace) -> tuple[int, dict]:
    rs = parse_type(args.type)
    report: dict = {"command": args.command, "type": rs.name, "weight": None,
                    "results": {}, "checks": []}
    res, checks = report["results"], report["checks"]

    if args.command == "describe":
        res.update({
            "rank": rs.rank,
            "cartan": [list(r) for r in rs.cartan],
            "roots": 2 * len(rs.positive_roots),
            "positive_roots": len(rs.positive_roots),
            "dim_g": rs.dim_g,
            "delta": list(rs.delta),
            "highest_root": list(rs.highest_root),
        })
        return 0, report

    lam = rs.check_weight(parse_weight(rs, args.weight))
    report["weight"] = format_weight(lam)
    rep = build_module(rs, lam, max_dim=args.max_dim)

    if args.command == "rep":
        mults = freudenthal_multiplicities(rs, lam)
        res.update({
            "dim": rep.dim,
            "weights": [format_weight(w) for w in rep.basis_weights],
            "multiplicities": {format_weight(w): m for w, m in mults.items()},
        })
        return 0, report

    L = bracket_closure(rep)

    if args.command == "projector":
        c = pi_constant(L)
        v0 = rep.unit_vector(0)
        const = lichtenstein_constant(L)
        ok = pi_projector_identity(L)
        w = tensor(v0, v0)
        res.update({
            "dim": rep.dim,
            "dim_g": L.d,
            "c": _q(c),
            "casimir_eigenvalue": _q(L.casimir_eigenvalue()),
            "lichtenstein_constant": _q(const),
        })
        checks.append({"name": "pi_squared_equals_c_pi", "pass": ok})
        checks.append({"name": "casimir_on_v0_tensor_v0",
                       "pass": casimir_tensor_apply(L, w) == w.scale(const)})
    elif args.command == "equations":
        system = emit_equations(L)
        res.update({
            "dim": system.dim,
            "ambient_constant": _q(system.ambient_constant),
            "count": len(system.forms),
            "forms": [[[i, j, _q(c)] for i, j, c in terms] for terms in system.term_lists()],
        })
    elif args.command == "member":
        v = _read_vector(args, rep.dim)
        if v.is_zero():
            raise ParseError("zero vector does not define a line")
        r = membership_test(L, v)
        res.update({"is_member": r.is_member, "residual_norm_is_zero": r.residual.is_zero()})
    elif args.command == "inner-ideal":
        M = _read_subspace(args, rep.dim)
        res.update({"subspace_dim": M.dim, "is_inner_ideal": inner_ideal_test(L, M)})
    elif args.command == "orbit-sample":
        if args.word:
            word = _parse_word(args.word, rs.rank)
        else:
            word = random_word(rs.rank, random.Random(args.seed), args.length)
        v = orbit_sample(L, word)
        res.update({
            "word": [f"{generator_label(i, rs.rank)}:{_q(s)}" for i, s in word],
            "vector": _vec(v),
        })
        checks.append({"name": "sample_is_member", "pass": membership_test(L, v).is_member})
    elif args.command == "verify":
        for name, ok in run_all(L):
            checks.append({"name": name, "pass": ok})
    status = 0 if all(c["pass"] for c in checks) else 1
    return status, report


def _render_text(report: dict) -> str:
    lines = [f"command: {report['command']}", f"type: {report['type']}"]
    if report["weight"] is not None:
        lines.append(f"weight: {report['weight']}")
    for k, v in report["results"].items():
        if k == "forms":
            for n, terms in enumerate(v, 1):
                body = " ".join(f"({i},{j},{c})" for i, j, c in terms)
                lines.append(f"form {n}: {body}")
        elif isinstance(v, dict):
            lines.append(f"{k}: " + "; ".join(f"{a}:{b}" for a, b in v.items()))
        elif isinstance(v, list):
            lines.append(f"{k}: " + " ".join(
                ",".join(map(str, x)) if isinstance(x, list) else str(x) for x in v))
        else:
            lines.append(f"{k}: {str(v).lower() if isinstance(v, bool) else v}")
    for c in report["checks"]:
        lines.append(f"{c['name']}: {'PASS' if c['pass'] else 'FAIL'}")
    return "\n".join(lines)


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        args = _build_parser().parse_args(argv)
        status, report = execute(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        # bad type/weight strings, unreadable files
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DimensionCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except InvariantError as exc:
        print(f"internal invariant failure: {exc}", file=sys.stderr)
        return 1
    if args.format == "json":
        print(json.dumps(report, indent=2))
    else:
        print(_render_text(report))
    return status


if __name__ == "__main__":
    sys.exit(main())
