"""Sweep the eight cohomology classes over kernel Z2 and quotient K4,
build each carrier, and print the classification census together with
every pair of distinct classes whose carriers turn out isomorphic."""

import argparse
import itertools
from collections import Counter

from centext.catalog import get_group, identify_group
from centext.cocycles import are_cohomologous, compute_cocycle_space
from centext.extensions import build_extension
from centext.groups import brute_force_isomorphism


def main():
    parser = argparse.ArgumentParser(
        description="order-8 carrier census over (Z2, K4)")
    parser.add_argument("--kernel", default="Z2")
    parser.add_argument("--quotient", default="K4")
    args = parser.parse_args()

    g1, g2 = get_group(args.kernel), get_group(args.quotient)
    space = compute_cocycle_space(g1, g2)
    exts = [build_extension(rep) for rep in space.class_representatives]
    names = [identify_group(e.group) or "(unidentified)" for e in exts]

    print(f"H2({args.quotient}, {args.kernel}) has {space.h2_order} classes")
    for i, (e, name) in enumerate(zip(exts, names)):
        print(f"  class {i}: carrier {name}, order {e.group.order}")
    census = Counter(names)
    print("census:", dict(sorted(census.items())))

    print("distinct classes with isomorphic carriers:")
    for i, j in itertools.combinations(range(len(exts)), 2):
        if brute_force_isomorphism(exts[i].group, exts[j].group) is None:
            continue
        w = are_cohomologous(exts[i].cocycle, exts[j].cocycle)
        tag = "cohomologous" if w is not None else "non-cohomologous"
        print(f"  ({i}, {j}) {tag}")


if __name__ == "__main__":
    main()
