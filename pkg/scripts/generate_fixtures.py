#!/usr/bin/env python3
"""Regenerate the packaged graph6 fixture files.

The fixtures hold every graph up to isomorphism per vertex count and back
the exhaustive sweeps (crosscheck command, acceptance suite).  Enumeration
is deterministic, so regenerating reproduces the committed files.
"""

import argparse
from pathlib import Path

from lrw1 import oracle


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=7)
    parser.add_argument(
        "--out",
        type=Path,
        default=Path(__file__).resolve().parent.parent / "src" / "lrw1" / "fixtures",
    )
    args = parser.parse_args()
    counts = oracle.write_fixture_files(args.out, max_n=args.max_n)
    for n, count in sorted(counts.items()):
        print(f"n={n}: {count} graphs -> {args.out / f'n{n}.g6'}")


if __name__ == "__main__":
    main()
