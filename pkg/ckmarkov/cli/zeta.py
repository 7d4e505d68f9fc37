from __future__ import annotations

import argparse

from ckmarkov.config import settings
from ckmarkov.dynamics.zeta import periodic_point_count, zeta_consistency, zeta_series
from ckmarkov.io.matrix_file import read_matrix
from ckmarkov.linalg.determinant import char_denominator
from ckmarkov.schemas.zeta import ZetaResponse
from ckmarkov.surgery.binary import BinaryMatrix


def zeta_response(a: BinaryMatrix, order: int, check: bool = True) -> ZetaResponse:
    poly = char_denominator(a)
    series = zeta_series(a, order)
    return ZetaResponse(
        coefficients=list(poly.coefficients),
        polynomial=str(poly),
        order=order,
        series=[str(c) for c in series.coefficients],
        periodic_points=[periodic_point_count(a, n) for n in range(1, order + 1)],
        consistent=zeta_consistency(a, order) if check else None,
    )


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def register(commands: argparse._SubParsersAction) -> None:
    p = commands.add_parser("zeta", help="print det(1 - zA), the zeta series and periodic point counts")
    p.add_argument("--in", dest="input", required=True, metavar="FILE")
    p.add_argument("--order", type=_positive_int, default=None, help="series truncation order (default: ZETA_ORDER)")
    p.add_argument("--no-check", action="store_true", help="skip the series / 1/det(1 - zA) comparison")
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    order = settings.zeta_order if args.order is None else args.order
    response = zeta_response(read_matrix(args.input), order, check=not args.no_check)
    if args.json:
        print(response.model_dump_json(indent=2))
        return 0
    print(f"det(1-zA):    {response.polynomial}")
    print(f"coefficients: {' '.join(str(c) for c in response.coefficients)}")
    print(f"zeta:         {' '.join(response.series)}")
    print(f"p_1..p_{order}:     {' '.join(str(p) for p in response.periodic_points)}")
    if response.consistent is not None:
        print(f"consistent:   {str(response.consistent).lower()}")
    return 0 if response.consistent is not False else 1
