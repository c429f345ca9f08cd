"""Command line interface: ``chordweights {eval,gram,verify,oracle,dims}``.

JSON goes to stdout, diagnostics to stderr.  Exit status: 0 success, 1 a
check failed (Gram form not PSD, oracle discrepancy), 2 bad input, 3 a size
guard was hit.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace
from fractions import Fraction
from math import prod
from pathlib import Path

from .config import DEFAULT_GUARDS, Guards, load_guards
from .diagrams import enumerate_words, parse_diagram
from .errors import DimensionError, ParseError, ResourceError, ZeroModuleError
from .states import GramSpec, check_basis, gram_matrix, matrix_csv, verify_state
from .weights import Labelling, parse_labelling, tensor_oracle, weight

EXIT_FAIL, EXIT_INPUT, EXIT_RESOURCE = 1, 2, 3


def _labelling(text: str | None, strands: int) -> Labelling:
    rho = Labelling.standard(strands) if text is None else parse_labelling(text)
    if len(rho) != strands:
        raise DimensionError(f"labelling {rho} has {len(rho)} labels for {strands} strands")
    return rho


def _guards(args) -> Guards:
    g = DEFAULT_GUARDS
    if args.config:
        g = load_guards(args.config, g)
    if args.unsafe_limits:
        g = g.unlimited()
    for name in ("max_basis", "max_tensor_dim"):
        val = getattr(args, name)
        if val is None:
            continue
        if val > getattr(g, name) and not args.unsafe_limits:
            raise ResourceError(f"--{name.replace('_', '-')} above {getattr(g, name)} needs --unsafe-limits")
        g = replace(g, **{name: val})
    return g


def _emit(args, payload: dict):
    text = json.dumps(payload, indent=2)
    if getattr(args, "output", None):
        Path(args.output).write_text(text + "\n")
    print(text)


def cmd_eval(args) -> int:
    word = parse_diagram(args.diagram)
    rho = _labelling(args.label, word.strands)
    if args.n is None and not args.poly:
        raise ValueError("--n is required unless --poly is given")
    wv = weight(word, rho, args.n, strict=args.strict)
    out = {
        "diagram": str(word),
        "labelling": str(rho),
        "n": args.n,
        "value": None if wv.value is None else str(wv.value),
        "poly": [str(c) for c in wv.poly.coeffs],
    }
    if wv.zero_module:
        out["zero_module"] = True
    if args.poly:
        out["poly_text"] = str(wv.poly)
    _emit(args, out)
    return 0


def _spec(args) -> GramSpec:
    rho = _labelling(args.label, args.strands)
    return GramSpec(args.strands, args.depth, rho, args.n)


def cmd_gram(args) -> int:
    guards = _guards(args)
    spec = _spec(args)
    M, basis = gram_matrix(spec, guards)
    if args.csv:
        Path(args.csv).write_text(matrix_csv(basis, M))
    _emit(args, {
        "strands": spec.strands,
        "max_chords": spec.max_chords,
        "labelling": str(spec.labelling),
        "n": spec.n,
        "basis": [str(w) for w in basis],
        "matrix": [[str(x) for x in row] for row in M],
    })
    return 0


def cmd_verify(args) -> int:
    guards = _guards(args)
    report = verify_state(_spec(args), guards)
    if args.csv:
        Path(args.csv).write_text(report.matrix_csv())
    _emit(args, report.to_dict())
    for note in report.notes:
        print(f"note: {note}", file=sys.stderr)
    return 0 if report.state_on_truncation else EXIT_FAIL


def cmd_oracle(args) -> int:
    guards = _guards(args)
    spec = _spec(args)
    rho, n = spec.labelling, spec.n
    # fail on the guard before doing any work
    if n**rho.total_width > guards.max_tensor_dim:
        raise ResourceError(
            f"oracle tensor space {n}^{rho.total_width} = {n**rho.total_width} "
            f"> guard {guards.max_tensor_dim}"
        )
    check_basis(spec.strands, spec.max_chords, guards)
    words = enumerate_words(spec.strands, spec.max_chords)
    worst = Fraction(0)
    for w in words:
        a = weight(w, rho, n).value
        b = tensor_oracle(w, rho, n, guards)
        if a != b:
            print(f"discrepancy on {w}: pipeline {a}, oracle {b}", file=sys.stderr)
            worst = max(worst, abs(a - b))
            if not args.keep_going:
                break
    _emit(args, {
        "strands": spec.strands,
        "max_chords": spec.max_chords,
        "labelling": str(rho),
        "n": n,
        "words": len(words),
        "max_discrepancy": str(worst),
        "all_equal": worst == 0,
    })
    return 0 if worst == 0 else EXIT_FAIL


def cmd_dims(args) -> int:
    rho = parse_labelling(args.label)
    dims = rho.dimensions(args.n)
    _emit(args, {
        "labelling": str(rho),
        "n": args.n,
        "dimensions": dims,
        "unit_value": prod(dims),
    })
    return 0


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return v


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be a non-negative integer")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chordweights",
        description="Exact gl_n weight systems on horizontal chord diagrams.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="key=value file setting max_basis / max_tensor_dim")
    common.add_argument("--unsafe-limits", action="store_true", help="lift all size guards")
    common.add_argument("--max-basis", type=_positive)
    common.add_argument("--max-tensor-dim", type=_positive)
    common.add_argument("--output", "-o", help="also write the JSON result here")

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common], help="evaluate a weight system on one diagram")
    p.add_argument("diagram", help='e.g. "3: (1,2) (2,3)", chords bottom to top')
    p.add_argument("--label", help="e.g. std,sym:2,ext:2,part:[2,1] (default: all std)")
    p.add_argument("--n", type=_positive)
    p.add_argument("--poly", action="store_true", help="include the polynomial in n as text")
    p.add_argument("--strict", action="store_true", help="error on zero-dimensional labels")
    p.set_defaults(func=cmd_eval)

    for name, func, helptext in (
        ("gram", cmd_gram, "print the Gram matrix on words with <= depth chords"),
        ("verify", cmd_verify, "certify positivity of the Gram matrix"),
        ("oracle", cmd_oracle, "compare the pipeline with the tensor oracle"),
    ):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("--strands", type=_nonneg, required=True)
        p.add_argument("--depth", type=_nonneg, required=True)
        p.add_argument("--label")
        p.add_argument("--n", type=_positive, required=True)
        if name != "oracle":
            p.add_argument("--csv", help="write the matrix as CSV")
        else:
            p.add_argument("--keep-going", action="store_true")
        p.set_defaults(func=func)

    p = sub.add_parser("dims", parents=[common], help="dimensions of the labels' representations")
    p.add_argument("--label", required=True)
    p.add_argument("--n", type=_positive, required=True)
    p.set_defaults(func=cmd_dims)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (DimensionError, ZeroModuleError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ResourceError as exc:
        print(f"resource error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
