"""Command-line front end.

Exit codes: 0 success, 1 verification mismatch, 2 usage or I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import io
from .convolve import CONVOLUTIONS, METHODS
from .graph import BALL_KINDS, PRODUCT_KINDS, product
from .jacobi import eta_from_jacobi, jacobi_from_moments
from .series import SeriesError, eta_from_moments, moments_from_eta
from .verify import LOOP_PRODUCT_CONVOLUTION, verify_product
from .walks import walk_table

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _table(rows: dict[str, Sequence]) -> str:
    width = max(len(k) for k in rows)
    return "".join(f"{k.ljust(width)}  " + "  ".join(str(x) for x in v) + "\n" for k, v in rows.items())


def _order(args, available: int) -> int:
    order = args.order if args.order is not None else available
    if order < 1:
        raise UsageError(f"--order must be positive, got {order}")
    if order > available:
        raise UsageError(f"--order {order} exceeds the stored order {available}")
    return order


def cmd_conv(args) -> int:
    mu = io.dist_from_json(io.load_file(args.mu))
    nu = io.dist_from_json(io.load_file(args.nu))
    N = _order(args, min(mu.order, nu.order))
    result = CONVOLUTIONS[args.kind](mu, nu, N, args.method)
    if args.format == "table":
        text = _table({
            "n": range(1, N + 1),
            "moments": [io.frac_to_str(x) for x in result.moments],
            "first_return": [io.frac_to_str(x) for x in result.first_return],
        })
    else:
        text = io.dumps(io.conv_to_json(result))
    _emit(text, args.out)
    return EXIT_OK


def cmd_graph_product(args) -> int:
    if args.kind in BALL_KINDS and args.radius is None:
        raise UsageError(f"{args.kind} product needs --radius")
    g1 = io.graph_from_json(io.load_file(args.g1))
    g2 = io.graph_from_json(io.load_file(args.g2))
    radius = args.radius if args.kind in BALL_KINDS else None
    g = product(args.kind, g1, g2, radius)
    _emit(io.dumps(io.graph_to_json(g)), args.out)
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(io.to_dot(g, name=args.kind))
    return EXIT_OK


def cmd_walks(args) -> int:
    g = io.graph_from_json(io.load_file(args.graph))
    max_n = args.order if args.order is not None else 4
    table = walk_table(g, max_n, args.method)
    if not table.even_fwalk_ok:
        print(
            "warning: the root has alternating first-return walks of even length; "
            "matrix d-walk counts may differ from true d-walk counts",
            file=sys.stderr,
        )
    if args.format == "table":
        rows = {
            "n": range(1, max_n + 1),
            "spectral": table.spectral,
            "first_return": table.first_return,
            "dwalks": table.dwalks,
        }
        if table.dwalks_brute is not None:
            rows["dwalks_brute"] = table.dwalks_brute
        text = _table(rows)
        if table.agreement is not None:
            text += f"agreement: {'pass' if table.agreement else 'fail'}\n"
    else:
        text = io.dumps(io.walks_to_json(table))
    _emit(text, args.out)
    return EXIT_OK if table.agreement in (None, True) else EXIT_MISMATCH


def cmd_verify(args) -> int:
    g1 = io.graph_from_json(io.load_file(args.g1))
    g2 = io.graph_from_json(io.load_file(args.g2))
    max_n = args.order if args.order is not None else 4
    report = verify_product(args.kind, g1, g2, max_n, brute=not args.no_brute)
    text = report.table() if args.format == "table" else io.dumps(report.to_json())
    _emit(text, args.out)
    return EXIT_OK if report.passed else EXIT_MISMATCH


def cmd_jacobi(args) -> int:
    doc = io.load_file(args.file)
    if args.action == "to-eta":
        if args.order is None:
            raise UsageError("jacobi to-eta needs --order")
        eta = eta_from_jacobi(io.jacobi_from_json(doc), args.order)
        _emit(io.dumps(io.eta_to_json(eta)), args.out)
    else:
        mu = io.dist_from_json(doc)
        J = jacobi_from_moments(mu, _order(args, mu.order))
        _emit(io.dumps(io.jacobi_to_json(J)), args.out)
    return EXIT_OK


def cmd_convert(args) -> int:
    doc = io.load_file(args.file)
    if args.action == "moments-to-eta":
        mu = io.dist_from_json(doc)
        mu = mu.truncate(_order(args, mu.order))
        _emit(io.dumps(io.eta_to_json(eta_from_moments(mu))), args.out)
    else:
        eta = io.eta_from_json(doc)
        N = _order(args, eta.order)
        _emit(io.dumps(io.dist_to_json(moments_from_eta(eta, N))), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="freeconv",
        description="Multiplicative convolutions on moment data and walk counts on product graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, order_help="truncation order N"):
        p.add_argument("-N", "--order", "--max-n", dest="order", type=int, help=order_help)
        p.add_argument("--out", help="write output to this file instead of stdout")

    p = sub.add_parser("conv", help="convolve two moment sequences")
    p.add_argument("kind", choices=sorted(CONVOLUTIONS))
    p.add_argument("--mu", required=True, help="first Dist JSON file")
    p.add_argument("--nu", required=True, help="second Dist JSON file")
    p.add_argument("--method", choices=METHODS, default="transform")
    p.add_argument("--format", choices=("json", "table"), default="json")
    common(p)
    p.set_defaults(func=cmd_conv)

    p = sub.add_parser("graph", help="graph constructions")
    gsub = p.add_subparsers(dest="graph_command", required=True)
    p = gsub.add_parser("product", help="build a product of two rooted graphs")
    p.add_argument("kind", choices=PRODUCT_KINDS)
    p.add_argument("g1")
    p.add_argument("g2")
    p.add_argument("--radius", type=int, help="ball radius (sfree_loop and free only)")
    p.add_argument("--dot", help="also write Graphviz DOT to this file")
    p.add_argument("--out", help="write output to this file instead of stdout")
    p.set_defaults(func=cmd_graph_product)

    p = sub.add_parser("walks", help="walk statistics at the root of a graph")
    p.add_argument("graph")
    p.add_argument("--method", choices=("matrix", "brute", "both"), default="matrix")
    p.add_argument("--format", choices=("json", "table"), default="json")
    common(p, "largest n (default 4)")
    p.set_defaults(func=cmd_walks)

    p = sub.add_parser("verify", help="check convolution against d-walk counts on a loop product")
    p.add_argument("kind", choices=tuple(LOOP_PRODUCT_CONVOLUTION))
    p.add_argument("g1")
    p.add_argument("g2")
    p.add_argument("--no-brute", action="store_true", help="skip brute-force enumeration")
    p.add_argument("--format", choices=("json", "table"), default="json")
    common(p, "largest n (default 4)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("jacobi", help="Jacobi parameters")
    p.add_argument("action", choices=("to-eta", "from-moments"))
    p.add_argument("file")
    common(p)
    p.set_defaults(func=cmd_jacobi)

    p = sub.add_parser("convert", help="moments <-> first-return moments")
    p.add_argument("action", choices=("moments-to-eta", "eta-to-moments"))
    p.add_argument("file")
    common(p)
    p.set_defaults(func=cmd_convert)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except json.JSONDecodeError as exc:
        print(f"error: invalid JSON: {exc}", file=sys.stderr)
    except (UsageError, io.FormatError, SeriesError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
