from __future__ import annotations

import argparse

from ckmarkov.core.errors import PermutationError
from ckmarkov.io.matrix_file import format_matrix, read_matrix, write_matrix
from ckmarkov.surgery.constructions import permutation_conjugate


def parse_permutation(text: str) -> list[int]:
    """'3,1,2' -> [3, 1, 2]; the i-th entry is the image of vertex i."""
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise PermutationError(f"permutation must be a comma-separated list of integers, got {text!r}") from None


def register(commands: argparse._SubParsersAction) -> None:
    p = commands.add_parser("conjugate", help="relabel vertices: print P A P^-1")
    p.add_argument("--in", dest="input", required=True, metavar="FILE")
    p.add_argument("--perm", required=True, help='1-based image list, e.g. "3,1,2"')
    p.add_argument("--out", default=None, metavar="FILE")
    p.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    a = read_matrix(args.input)
    result = permutation_conjugate(a, parse_permutation(args.perm))
    if args.out:
        write_matrix(result, args.out)
    else:
        print(format_matrix(result), end="")
    return 0
