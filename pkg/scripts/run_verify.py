"""Run the theorem cross-validation harness over catalog pairs and dump
the report.  Exits nonzero exactly when a discrepancy was found, so this
doubles as a regression gate."""

import argparse
import json
import sys

from centext.catalog import get_group
from centext.isotest import verify_theorems

DEFAULT_PAIRS = ["Z2:Z2", "Z2:Z4", "Z2:K4", "Z3:Z3"]


def main():
    parser = argparse.ArgumentParser(
        description="cross-validate the structured criteria against "
                    "exhaustive search")
    parser.add_argument("pairs", nargs="*", default=DEFAULT_PAIRS,
                        metavar="G1:G2")
    parser.add_argument("--max-order", type=int, default=16,
                        help="skip pairs whose carrier exceeds this order")
    args = parser.parse_args()

    pairs = []
    for spec in args.pairs:
        n1, _, n2 = spec.partition(":")
        if not n2:
            parser.error(f"pair {spec!r} is not of the form G1:G2")
        g1, g2 = get_group(n1), get_group(n2)
        if g1.order * g2.order <= args.max_order:
            pairs.append((g1, g2))

    report = verify_theorems(pairs, max_order=args.max_order)
    json.dump(report, sys.stdout, indent=2, default=str)
    print()
    bad = len(report["discrepancies"])
    print(f"checked {report['checked_class_pairs']} class pairs, "
          f"{bad} discrepancies", file=sys.stderr)
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
