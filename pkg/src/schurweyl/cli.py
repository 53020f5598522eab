"""Command-line front end.

Exit codes: 0 on success, 1 on a domain error (message names the error
class), 2 on malformed arguments.  ``--json`` switches any subcommand to a
JSON document carrying ``"schema_version": 1``.
"""

from __future__ import annotations

import argparse
import contextlib
import io
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Sequence

from . import classification as cls_
from .diagrams import YoungDiagram, enumerate_bounded, enumerate_partitions, format_diagram, make_diagram, parse_rows, render_ascii
from .errors import DegreeTooLarge, SchurWeylError
from .group_algebra import (
    canonical_tableau,
    column_group,
    left_ideal_dimension,
    parse_element,
    quasi_idempotent_constant,
    row_group,
    young_symmetrizer,
)
from .permutations import (
    MAX_ENUMERATION_DEGREE,
    conjugate_perm,
    cycle_decomposition,
    cycle_type,
    format_cycles,
    parse_permutation,
    sign,
)
from .schur import (
    apply_schur_functor,
    bounded_square_sum,
    commutant_dimension,
    index_word,
    permutation_span_dimension,
    schur_dimension,
    schur_subspace_basis,
    schur_weyl_check,
)
from .tableaux import enumerate_standard, format_tableau, hook_length_count

SCHEMA_VERSION = 1


@dataclass(frozen=True)
class CommandResult:
    exit_code: int
    stdout: str
    stderr: str = ""


# -- argument types (syntax only; shape errors are domain errors) ---------


def _nonneg_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text!r}")
    return value


def _pos_int(text: str) -> int:
    value = _nonneg_int(text)
    if value == 0:
        raise argparse.ArgumentTypeError("expected a positive integer, got 0")
    return value


def _int(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None


def _rows(text: str) -> list[int]:
    try:
        return parse_rows(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated row lengths, got {text!r}") from None


def _matrix(text: str) -> list[list[Fraction]]:
    try:
        rows = [[Fraction(x.strip()) for x in r.split(",")] for r in text.split(";")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"malformed matrix {text!r}") from None
    if any(len(r) != len(rows) for r in rows):
        raise argparse.ArgumentTypeError(f"matrix must be square, got {text!r}")
    return rows


def _twist_range(text: str) -> range:
    lo, sep, hi = text.partition("..")
    try:
        if not sep:
            raise ValueError
        return range(int(lo), int(hi) + 1)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a range lo..hi, got {text!r}") from None


# -- helpers ----------------------------------------------------------------


def _frac(x: Fraction) -> str:
    return str(x)


def _diagram_json(y: YoungDiagram) -> list[int]:
    return list(y.rows)


def _format_matrix(m: Sequence[Sequence[Fraction]]) -> str:
    return ";".join(",".join(_frac(x) for x in row) for row in m)


Handler = Callable[[argparse.Namespace], "tuple[str, dict[str, Any]]"]


def cmd_partitions(args: argparse.Namespace) -> tuple[str, dict[str, Any]]:
    if args.max_rows is None:
        ys = enumerate_partitions(args.n)
    else:
        ys = enumerate_bounded(args.n, args.max_rows)
    text = "\n".join(format_diagram(y) for y in ys)
    return text, {"n": args.n, "max_rows": args.max_rows, "partitions": [_diagram_json(y) for y in ys]}


def _perm_info(g) -> dict[str, Any]:
    return {
        "permutation": format_cycles(g),
        "one_line": list(g.images),
        "cycles": [list(c) for c in cycle_decomposition(g)],
        "cycle_type": _diagram_json(cycle_type(g)),
        "sign": sign(g),
    }


def cmd_cycle_type(args: argparse.Namespace) -> tuple[str, dict[str, Any]]:
    g = _parse_perm(args.perm, args.degree)
    h = None
    if args.conjugate_by is not None:
        h = _parse_perm(args.conjugate_by, args.degree)
        if args.degree is None:
            # cycle notation only fixes a lower bound on the degree
            top = max(g.degree, h.degree)
            if args.perm.strip().startswith("("):
                g = _parse_perm(args.perm, top)
            if args.conjugate_by.strip().startswith("("):
                h = _parse_perm(args.conjugate_by, top)
    info = _perm_info(g)
    lines = [format_cycles(g), format_diagram(cycle_type(g))]
    if h is not None:
        c = conjugate_perm(g, h)
        info["conjugate"] = {"by": format_cycles(h), **_perm_info(c)}
        lines.append(format_cycles(c))
    return "\n".join(lines), info


def _parse_perm(text: str, degree: int | None):
    try:
        return parse_permutation(text, degree)
    except SchurWeylError:
        raise
    except ValueError as exc:
        raise _Usage(str(exc)) from None


class _Usage(Exception):
    pass


def cmd_tableaux(args: argparse.Namespace) -> tuple[str, dict[str, Any]]:
    y = make_diagram(args.diagram)
    ts = enumerate_standard(y)
    data: dict[str, Any] = {"shape": _diagram_json(y), "count": len(ts), "hook_length_count": hook_length_count(y)}
    if args.count:
        return str(len(ts)), data
    data["tableaux"] = [[list(r) for r in t.rows] for t in ts]
    return "\n".join(format_tableau(t) for t in ts), data


def cmd_symmetrizer(args: argparse.Namespace) -> tuple[str, dict[str, Any]]:
    y = make_diagram(args.diagram)
    e = young_symmetrizer(y)
    c = quasi_idempotent_constant(e)
    t = canonical_tableau(y)
    data = {
        "shape": _diagram_json(y),
        "tableau": format_tableau(t),
        "element": str(e),
        "terms": [
            {"permutation": format_cycles(g, include_fixed=False), "coefficient": _frac(e.terms[g])}
            for g in sorted(e.terms, key=lambda p: p.images)
        ],
        "quasi_idempotent_constant": _frac(c),
        "row_group_order": len(row_group(t)),
        "column_group_order": len(column_group(t)),
    }
    return f"{e}\nc = {c}", data


def cmd_qi_constant(args: argparse.Namespace) -> tuple[str, dict[str, Any]]:
    try:
        e = parse_element(args.element, args.degree)
    except SchurWeylError:
        raise
    except ValueError as exc:
        raise _Usage(str(exc)) from None
    c = quasi_idempotent_constant(e)
    return str(c), {"element": str(e), "degree": e.degree, "quasi_idempotent_constant": _frac(c)}


def cmd_sn_dim(args: argparse.Namespace) -> tuple[str, dict[str, Any]]:
    y = make_diagram(args.diagram)
    if y.box_count > MAX_ENUMERATION_DEGREE:
        # fail before building a symmetrizer with up to n!/2 terms
        raise DegreeTooLarge(f"degree {y.box_count} exceeds enumeration cap {MAX_ENUMERATION_DEGREE}")
    d = left_ideal_dimension(young_symmetrizer(y))
    return str(d), {"shape": _diagram_json(y), "dimension": d}


def cmd_schur_dim(args: argparse.Namespace) -> tuple[str, dict[str, Any]]:
    y = make_diagram(args.diagram)
    d = schur_dimension(y, args.N)
    return str(d), {"shape": _diagram_json(y), "N": args.N, "dimension": d}


def cmd_schur_apply(args: argparse.Namespace) -> tuple[str, dict[str, Any]]:
    y = make_diagram(args.diagram)
    A = args.matrix
    N = len(A)
    m = apply_schur_functor(y, A)
    basis = schur_subspace_basis(y, N)
    n = y.box_count
    data = {
        "shape": _diagram_json(y),
        "N": N,
        "dimension": len(m),
        "matrix": [[_frac(x) for x in row] for row in m],
        "basis": [
            {" ".join(map(str, index_word(i, N, n))): _frac(v[i]) for i in sorted(v)} for v in basis.vectors
        ],
    }
    return _format_matrix(m), data


def cmd_schur_weyl(args: argparse.Namespace) -> tuple[str, dict[str, Any]]:
    report = schur_weyl_check(args.N, args.n)
    lines = [f"{format_diagram(e.shape) or '()'}\tf={e.sn_dimension}\td={e.schur_dimension}" for e in report.entries]
    lines.append(f"sum f*d = {report.total} ; N^n = {args.N ** args.n} ; holds = {str(report.holds).lower()}")
    data = {
        "N": args.N,
        "n": args.n,
        "entries": [
            {"shape": _diagram_json(e.shape), "sn_dimension": e.sn_dimension, "schur_dimension": e.schur_dimension}
            for e in report.entries
        ],
        "total": report.total,
        "tensor_dimension": args.N**args.n,
        "balanced": report.balanced,
        "vanishing_ok": report.vanishing_ok,
    }
    return "\n".join(lines), data


def cmd_commutant(args: argparse.Namespace) -> tuple[str, dict[str, Any]]:
    c = commutant_dimension(args.N, args.n)
    p = permutation_span_dimension(args.N, args.n)
    s = bounded_square_sum(args.N, args.n)
    data = {"N": args.N, "n": args.n, "commutant_dimension": c, "permutation_span_dimension": p, "sum_f_squared": s}
    return f"commutant {c}\npermutation span {p}\nsum f^2 {s}", data


def cmd_classify(args: argparse.Namespace) -> tuple[str, dict[str, Any]]:
    kind = args.group
    labels = cls_.enumerate_labels(kind, args.size, args.boxes, args.twists)
    data = {
        "group": kind.value,
        "size": args.size,
        "boxes": args.boxes,
        "labels": [
            {"label": str(lab), "diagram": _diagram_json(lab.diagram), "twist": lab.twist} for lab in labels
        ],
    }
    return "\n".join(str(lab) for lab in labels), data


def cmd_label_dim(args: argparse.Namespace) -> tuple[str, dict[str, Any]]:
    try:
        raw = cls_.parse_label(args.label)
    except SchurWeylError:
        raise
    except ValueError as exc:
        raise _Usage(str(exc)) from None
    label = cls_.make_label(raw.group, raw.size, raw.diagram, raw.twist)
    d = cls_.label_dimension(label)
    return f"{label}\t{d}", {"label": str(label), "dimension": d}


def cmd_normalize_gl(args: argparse.Namespace) -> tuple[str, dict[str, Any]]:
    y = make_diagram(args.diagram)
    z, k = cls_.normalize_gl_label(y, args.k, args.N)
    return f"{format_diagram(z)}\t{k}", {"diagram": _diagram_json(z), "twist": k, "N": args.N}


def cmd_render(args: argparse.Namespace) -> tuple[str, dict[str, Any]]:
    y = make_diagram(args.diagram)
    return render_ascii(y), {"shape": _diagram_json(y), "ascii": render_ascii(y)}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="schurweyl", description="Young diagrams, symmetrizers and Schur functors")
    parser.add_argument("--json", action="store_true", help="emit JSON")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="emit JSON")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, handler: Handler, help: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, parents=[common], help=help)
        p.set_defaults(handler=handler)
        return p

    p = add("partitions", cmd_partitions, "list the partitions of n")
    p.add_argument("n", type=_nonneg_int)
    p.add_argument("--max-rows", type=_nonneg_int, default=None)

    p = add("cycle-type", cmd_cycle_type, "cycle decomposition and cycle type of a permutation")
    p.add_argument("perm", help='cycle notation "(1 2 4)(5 6)" or one-line "2 4 3 1"')
    p.add_argument("--degree", type=_nonneg_int, default=None)
    p.add_argument("--conjugate-by", default=None, metavar="PERM")

    p = add("tableaux", cmd_tableaux, "standard Young tableaux of a shape")
    p.add_argument("diagram", type=_rows)
    p.add_argument("--count", action="store_true")

    p = add("symmetrizer", cmd_symmetrizer, "Young symmetrizer and its quasi-idempotency constant")
    p.add_argument("diagram", type=_rows)

    p = add("qi-constant", cmd_qi_constant, "quasi-idempotency constant of a group-algebra element")
    p.add_argument("element", help='e.g. "1/2*() + 1/2*(1 2)"')
    p.add_argument("--degree", type=_nonneg_int, default=None)

    p = add("sn-dim", cmd_sn_dim, "dimension of the left ideal of a Young symmetrizer")
    p.add_argument("diagram", type=_rows)

    p = add("schur-dim", cmd_schur_dim, "dimension of the Schur functor image")
    p.add_argument("diagram", type=_rows)
    p.add_argument("N", type=_pos_int)

    p = add("schur-apply", cmd_schur_apply, "Schur functor applied to a matrix")
    p.add_argument("diagram", type=_rows)
    p.add_argument("matrix", type=_matrix, help='rows separated by ";", entries by ",", e.g. "1,0;1/2,1"')

    p = add("schur-weyl", cmd_schur_weyl, "check sum f^Y dim L_Y = N^n")
    p.add_argument("N", type=_pos_int)
    p.add_argument("n", type=_nonneg_int)

    p = add("commutant", cmd_commutant, "commutant dimension of the tensor-power action")
    p.add_argument("N", type=_pos_int)
    p.add_argument("n", type=_nonneg_int)

    p = add("classify", cmd_classify, "enumerate irrep labels")
    p.add_argument("group", type=_group_kind, help="Sn, End, GLpoly, GL, SL, U or SU")
    p.add_argument("size", type=_nonneg_int, help="n for Sn, N otherwise")
    p.add_argument("--boxes", type=_nonneg_int, default=None)
    p.add_argument("--twists", type=_twist_range, default=None, metavar="LO..HI")

    p = add("label-dim", cmd_label_dim, "dimension of the irrep with a given label")
    p.add_argument("label", help='e.g. "SL:2:[2]" or "GL:2:[2,1]:k=-3"')

    p = add("normalize-gl", cmd_normalize_gl, "strip full columns into the determinant twist")
    p.add_argument("diagram", type=_rows)
    p.add_argument("k", type=_int)
    p.add_argument("N", type=_pos_int)

    p = add("render", cmd_render, "draw a diagram")
    p.add_argument("diagram", type=_rows)
    return parser


def _group_kind(text: str) -> cls_.GroupKind:
    try:
        return cls_.GroupKind.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _argv_with_negatives(argv: Sequence[str]) -> list[str]:
    # let "--twists -2..2" through; argparse would read "-2..2" as an option
    out = []
    it = iter(argv)
    for a in it:
        if a == "--twists":
            nxt = next(it, None)
            out.append(a if nxt is None else f"--twists={nxt}")
        else:
            out.append(a)
    return out


def run_cli(argv: Sequence[str]) -> CommandResult:
    parser = build_parser()
    err = io.StringIO()
    try:
        with contextlib.redirect_stderr(err), contextlib.redirect_stdout(io.StringIO()) as out:
            args = parser.parse_args(_argv_with_negatives(argv))
    except SystemExit as exc:
        code = exc.code if isinstance(exc.code, int) else 2
        return CommandResult(code, out.getvalue() if code == 0 else "", err.getvalue())
    try:
        text, data = args.handler(args)
    except _Usage as exc:
        return CommandResult(2, "", f"{parser.format_usage()}{parser.prog} {args.command}: error: {exc}\n")
    except SchurWeylError as exc:
        return CommandResult(1, "", f"error: {type(exc).__name__}: {exc}\n")
    if args.json:
        payload = {"schema_version": SCHEMA_VERSION, "command": args.command, **data}
        return CommandResult(0, json.dumps(payload, sort_keys=True) + "\n")
    return CommandResult(0, text + "\n")


def main(argv: Sequence[str] | None = None) -> int:
    result = run_cli(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(result.stdout)
    sys.stderr.write(result.stderr)
    return result.exit_code


if __name__ == "__main__":
    raise SystemExit(main())
