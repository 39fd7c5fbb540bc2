"""Which (r, type) carry a symmetric basis, checked three ways.

For each r the script reports the existence rule, the inductive construction
(validated) and, where the space is small enough, the exhaustive search.

    python scripts/symmetric_basis_table.py [--max-r 12]
"""

from __future__ import annotations

import argparse
import time

from hypercover.quadratic import FormType, standard_form
from hypercover.symmetric_basis import (
    MAX_BRUTE_FORCE_DIM,
    brute_force_symmetric_basis,
    construct_symmetric_basis,
    exists_symmetric_basis,
    is_symmetric_basis,
)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-r", type=int, default=12)
    args = parser.parse_args()

    print(f"{'r':>3} {'type':<11} {'rule':>5} {'construct':>10} {'brute':>6} {'ms':>8}")
    for r in range(1, args.max_r + 1):
        for t in FormType:
            t0 = time.perf_counter()
            built = construct_symmetric_basis(r, t)
            valid = bool(built) and is_symmetric_basis(built.form, built.vectors)
            brute = "-"
            if 2 * r <= MAX_BRUTE_FORCE_DIM:
                brute = "yes" if brute_force_symmetric_basis(standard_form(r, t)) else "no"
            ms = 1000 * (time.perf_counter() - t0)
            rule = "yes" if exists_symmetric_basis(r, t) else "no"
            print(f"{r:>3} {t.value:<11} {rule:>5} {('valid' if valid else 'none'):>10} {brute:>6} {ms:8.1f}")


if __name__ == "__main__":
    main()
