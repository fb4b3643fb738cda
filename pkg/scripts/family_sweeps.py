#!/usr/bin/env python3
"""Run the family verification sweeps and print one line per sweep.

Defaults match the acceptance caps; raise them to push the verification
further (runtime grows roughly with the cube of the triple cap).
"""

import argparse
import sys
import time

from gns import sweeps


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--triple-max", type=int, default=20)
    ap.add_argument("--cross-max", type=int, default=12)
    ap.add_argument("--extra-pair-max", type=int, default=15)
    ap.add_argument("--odd-max", type=int, default=21)
    ap.add_argument("--enum-genus-2", type=int, default=9)
    ap.add_argument("--enum-genus-3", type=int, default=6)
    args = ap.parse_args()

    t0 = time.time()
    outcomes = sweeps.run_all(
        triple_max=args.triple_max,
        cross_max=args.cross_max,
        extra_pair_max=args.extra_pair_max,
        pair_family_odd_max=args.odd_max,
        enum_genus_2=args.enum_genus_2,
        enum_genus_3=args.enum_genus_3,
    )
    for outcome in outcomes:
        print(outcome.line())
    sys.stderr.write(f"# total {time.time() - t0:.1f}s\n")
    return 0 if all(o.ok for o in outcomes) else 1


if __name__ == "__main__":
    raise SystemExit(main())
