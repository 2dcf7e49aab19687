#!/usr/bin/env python3
"""Sweep a corpus of groups: solvability, criterion verdict, witness pairs.

A quick empirical tour of the two main predicates.  Solvable groups satisfy
the per-class-pair criterion and admit no witness pair; the nonabelian
simple groups in the corpus all fail the criterion and expose at least one
pair of distinct prime element orders whose pairs always generate
nonsolvably.
"""

import argparse
import time

from solvcrit.catalog import catalog_group
from solvcrit.criterion import check_criterion, search_witness_pairs
from solvcrit.structure import is_solvable, order_spectrum

DEFAULT_CORPUS = [
    "C12", "D6", "F20", "S4", "A4", "S5", "A5", "A6",
    "psl2:7", "psl2:8", "psl2:11", "M11",
]


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("groups", nargs="*", default=DEFAULT_CORPUS,
                        help="catalog names (default: a mixed corpus)")
    parser.add_argument("--primes", action="store_true",
                        help="restrict the search to distinct prime pairs")
    args = parser.parse_args()

    print(f"{'group':10s} {'order':>8s} {'solvable':>9s} {'criterion':>10s}"
          f"  witness pairs")
    for name in args.groups:
        started = time.time()
        g = catalog_group(name)
        solvable = is_solvable(g).solvable
        holds = check_criterion(g).holds
        pairs = search_witness_pairs(g, restrict_to_primes=args.primes)
        spectrum = order_spectrum(g).orders
        body = ", ".join(f"({a},{b})" for a, b in pairs) or "-"
        print(f"{name:10s} {g.order():8d} {str(solvable):>9s} "
              f"{('holds' if holds else 'fails'):>10s}  {body}"
              f"   [oe={list(spectrum)}, {time.time() - started:.1f}s]")
        assert holds == solvable, "criterion/solvability mismatch"


if __name__ == "__main__":
    main()
