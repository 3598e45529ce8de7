"""Command line entrypoint for cauchykit."""

from __future__ import annotations

import sys

from src.cli.main import main


def bootstrap() -> None:
    """Dispatch to the CLI and exit with its status code."""
    sys.exit(main(sys.argv[1:]))


if __name__ == "__main__":
    bootstrap()
