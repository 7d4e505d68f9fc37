from __future__ import annotations

import argparse

from ckmarkov.cli import compare, conjugate, invariants, transform, zeta


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ckmarkov",
        description="Invariants and graph surgery for 0/1 transition matrices.",
    )
    parser.add_argument(
        "--max-group-order",
        type=int,
        default=None,
        help="largest finite group searched by brute force (default: MAX_GROUP_ORDER setting)",
    )
    parser.add_argument("--log-level", default=None, help="logging level (default: LOG_LEVEL setting)")

    commands = parser.add_subparsers(dest="command", required=True)
    transform.register(commands)
    invariants.register(commands)
    zeta.register(commands)
    compare.register(commands)
    conjugate.register(commands)
    return parser
