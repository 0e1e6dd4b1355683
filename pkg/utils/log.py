"""
Console output helpers for the CLI and experiment runner
"""

import logging
import sys

_quiet = False


def configure_logging(verbose=False, quiet=False):
    """Set up the root handler and the console echo switch"""
    global _quiet
    _quiet = quiet
    level = logging.DEBUG if verbose else logging.WARNING
    logging.basicConfig(
        level=level,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        stream=sys.stderr,
    )
    logging.getLogger().setLevel(level)


def echo(tag, message):
    """Print a tagged progress line, e.g. [TRIAL] k=64 seed=0"""
    if not _quiet:
        print(f"[{tag}] {message}")


def status(ok, message):
    if not _quiet:
        mark = "✓" if ok else "✗"
        print(f"  {mark} {message}")


def warn(message):
    if not _quiet:
        print(f"  ⚠ {message}")
