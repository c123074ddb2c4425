"""Proximinal and path-proximinal graphs over finite semimetric spaces.

Thin re-export of the compiled extension. Distances are exact and come back
as ``fractions.Fraction``; graphs, partitions and spaces are immutable.
"""

from ._core import *  # noqa: F401,F403
from ._core import ProxigraphError, run_cli

__all__ = [name for name in dir() if not name.startswith("_")]


def main() -> int:
    """Console entry point mirroring the ``proxigraph`` executable."""
    import sys

    code, out, err = run_cli(sys.argv[1:])
    sys.stdout.write(out)
    sys.stderr.write(err)
    return code
