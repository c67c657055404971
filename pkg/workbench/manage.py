#!/usr/bin/env python
"""Command-line utility for the maxent workbench."""
import sys


def main():

    """Run one workbench command."""
    try:
        from cli import run
    except ImportError as exc:
        raise ImportError(
            "Couldn't import the workbench. Are numpy, scipy and click installed "
            "and is this directory on your PYTHONPATH?"
        ) from exc
    sys.exit(run(sys.argv[1:]))


if __name__ == '__main__':
    main()
