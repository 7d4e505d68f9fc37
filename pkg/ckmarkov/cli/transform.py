from __future__ import annotations

import argparse
import logging
from collections.abc import Callable

from ckmarkov.io.matrix_file import format_edge_list, format_matrix, read_matrix, write_matrix
from ckmarkov.surgery.binary import BinaryMatrix
from ckmarkov.surgery.constructions import (
    bar_construction,
    cuntz_splice,
    primitive_transfer_bar_to_tilde,
    ps_expansion,
    tilde_construction,
)

logger = logging.getLogger(__name__)


def _transfer(bar: BinaryMatrix) -> BinaryMatrix:
    return primitive_transfer_bar_to_tilde(bar, bar.size - 3)


OPERATIONS: dict[str, Callable[[BinaryMatrix], BinaryMatrix]] = {
    "splice": cuntz_splice,
    "expand": ps_expansion,
    "bar": bar_construction,
    "tilde": tilde_construction,
    "transfer": _transfer,
}


def register(commands: argparse._SubParsersAction) -> None:
    p = commands.add_parser("transform", help="apply a graph construction to a matrix")
    p.add_argument("--op", required=True, choices=sorted(OPERATIONS))
    p.add_argument("--in", dest="input", required=True, metavar="FILE")
    p.add_argument("--out", default=None, metavar="FILE", help="write the result here instead of stdout")
    p.add_argument("--edges", action="store_true", help="also print the edge list of the result")
    p.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    a = read_matrix(args.input)
    result = OPERATIONS[args.op](a)
    logger.info("transform.applied", extra={"op": args.op, "size_in": a.size, "size_out": result.size})
    if args.out:
        write_matrix(result, args.out)
    else:
        print(format_matrix(result), end="")
    if args.edges:
        print(format_edge_list(result), end="")
    return 0
