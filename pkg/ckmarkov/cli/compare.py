from __future__ import annotations

import argparse

from ckmarkov.classify.compare import compare
from ckmarkov.io.matrix_file import read_matrix
from ckmarkov.schemas.report import ReportResponse


def register(commands: argparse._SubParsersAction) -> None:
    p = commands.add_parser("compare", help="decide the equivalence relations between two matrices")
    p.add_argument("--a", required=True, metavar="FILE")
    p.add_argument("--b", required=True, metavar="FILE")
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    report = compare(read_matrix(args.a), read_matrix(args.b), max_order=args.max_group_order)
    response = ReportResponse.from_report(report)
    if args.json:
        print(response.model_dump_json(indent=2))
        return 0
    for name, value in response.model_dump(exclude={"evidence"}).items():
        shown = value if isinstance(value, str) else str(value).lower()
        print(f"{name + ':':<22}{shown}")
        for line in response.evidence.get(name, []):
            print(f"{'':<24}{line}")
    return 0
