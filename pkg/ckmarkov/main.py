from __future__ import annotations

import logging
import sys
from collections.abc import Sequence

from ckmarkov.cli.router import build_parser
from ckmarkov.config import settings
from ckmarkov.core.errors import CkMarkovError

logger = logging.getLogger(__name__)


def _configure_logging(level: str | None = None) -> None:
    level = (level or settings.log_level).upper()
    logging.basicConfig(
        level=getattr(logging, level, logging.INFO),
        format="%(asctime)s [%(levelname)s] %(name)s: %(message)s",
        stream=sys.stderr,
    )


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _configure_logging(args.log_level)
    logger.debug("main.command", extra={"command": args.command})
    try:
        return args.handler(args)
    except CkMarkovError as exc:
        logger.error("main.failed", extra={"command": args.command, "error": type(exc).__name__})
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
