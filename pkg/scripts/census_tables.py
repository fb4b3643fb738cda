#!/usr/bin/env python3
"""Reproduce the classified census tables.

The required ranges (dimension 2 to genus 10, dimension 3 to genus 7) take a
few seconds; --extended pushes to genus 14 / genus 11, which walks a few
million canonical tree nodes and takes tens of minutes in one process.
"""

import argparse
import sys
import time

from gns import enumeration
from gns.cli import emit_table


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--extended", action="store_true",
                    help="also run d=2 genus 11..14 and d=3 genus 8..11")
    ap.add_argument("--threads", type=int, default=1)
    ap.add_argument("--format", choices=["text", "csv", "json"], default="csv")
    args = ap.parse_args()

    plans = [(2, 6, 14 if args.extended else 10), (3, 8, 11 if args.extended else 7)]
    for dim, edim, genus_max in plans:
        t0 = time.time()
        rows = enumeration.count_table(dim, genus_max, edim, workers=args.threads)
        sys.stderr.write(f"# dim={dim} edim={edim} genus<={genus_max}: {time.time() - t0:.1f}s\n")
        print(f"# dim={dim} edim={edim}")
        print(emit_table(rows, args.format))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
