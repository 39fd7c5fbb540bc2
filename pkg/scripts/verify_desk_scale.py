"""Run every theorem check on Γ(r) for r = 1..4 and print a timing table.

    python scripts/verify_desk_scale.py [--max-r 4] [--seed 0] [--json out.json]
"""

from __future__ import annotations

import argparse
import json
import time

from hypercover.symmetry import verify_main_theorem
from hypercover.symmetry.certificates import CHECKS, MAX_VERIFY_R


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-r", type=int, default=MAX_VERIFY_R)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--json", help="also dump the reports here")
    args = parser.parse_args()

    reports = []
    print(f"{'r':>2} {'n':>5} {'|Aut|':>10} {'formula':>10}  " + " ".join(f"{c:>7}" for c in CHECKS) + "   total")
    for r in range(1, args.max_r + 1):
        t0 = time.perf_counter()
        rep = verify_main_theorem(r, seed=args.seed)
        total = time.perf_counter() - t0
        cells = " ".join(f"{('ok' if c.ok else 'FAIL'):>7}" for c in rep.checks)
        print(f"{r:>2} {1 << (2 * r + 1):>5} {rep.aut_order:>10} {rep.expected_order:>10}  {cells}  {total:6.2f}s")
        for c in rep.checks:
            if c.witness:
                print(f"     {c.name}: {c.witness}")
        reports.append(rep.to_json())
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(reports, fh, indent=2)


if __name__ == "__main__":
    main()
