#!/usr/bin/env python3
"""Survey pair-poset shapes across a list of ring descriptions.

For each ring: number of pairs, maximal elements, whether a greatest pair
exists, and the longest chain in the completed poset.

    python3 scripts/hom_survey.py
    python3 scripts/hom_survey.py zmod:24 product:zmod:4:zmod:9 matrix:2:gf:2:1
"""
import argparse
import sys
from functools import lru_cache

from homposet.cli import parse_ring
from homposet.config import caps_from_env
from homposet.poset import hasse, has_greatest, hom_poset, max_elements
from homposet.rings import ring_label

DEFAULT_RINGS = [
    "zmod:4", "zmod:6", "zmod:8", "zmod:12", "zmod:16", "zmod:24", "zmod:30",
    "zmod:36", "zmod:60", "gf:2:2", "gf:3:2", "gf:2:4",
    "product:zmod:2:zmod:3", "product:zmod:4:zmod:9",
    "product:gf:2:2:zmod:4", "matrix:2:gf:2:1", "quot:zmod:60:gens=12",
]


def chain_height(poset) -> int:
    """Vertices on the longest chain of the completed poset."""
    edges = hasse(poset)
    succ = {}
    for i, j in edges:
        succ.setdefault(i, []).append(j)
    n = len(poset.elements) + (1 if poset.top_adjoined else 0)

    @lru_cache(maxsize=None)
    def depth(i):
        return 1 + max((depth(j) for j in succ.get(i, [])), default=0)

    return max((depth(i) for i in range(n)), default=0)


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("rings", nargs="*", default=DEFAULT_RINGS,
                    help="ring descriptions (see the hom subcommand)")
    args = ap.parse_args()
    caps = caps_from_env()

    header = f"{'description':32} {'label':14} {'size':>4} {'pairs':>5} " \
             f"{'max':>3} {'greatest':>8} {'height':>6}"
    print(header)
    print("-" * len(header))
    for text in args.rings:
        ring = parse_ring(text, caps)
        poset = hom_poset(ring)
        bar = hom_poset(ring, adjoin_top=True)
        mx = max_elements(poset)
        top = has_greatest(poset)
        print(f"{text:32} {ring_label(ring):14} {ring.size:>4} "
              f"{len(poset.elements):>5} {len(mx):>3} "
              f"{'yes' if top is not None else 'no':>8} {chain_height(bar):>6}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
