#!/usr/bin/env python3
"""Unfold the bundled models at increasing depth and check the projections.

For each depth the unfolding must be a tree and its projection a covering
up to the matching search bound.
"""
import sys

from phda import fixtures as F
from phda.lifting import is_covering
from phda.unfolding import is_tree, unfold


def main() -> int:
    names = sys.argv[1:] or ["full_square", "punctured_cube", "self_loop", "glued_square"]
    for name in names:
        x = F.MODELS[name]()
        print(f"{name} ({len(x.cells)} cells):")
        for depth in range(1, 7):
            tree, cover, truncated = unfold(x, depth)
            flags = []
            flags.append("tree" if is_tree(tree) else "NOT-TREE")
            flags.append("covering" if is_covering(cover, depth - 1) else "NOT-COVERING")
            flags.append("truncated" if truncated else "complete")
            print(f"  depth {depth}: {len(tree.cells):4d} states  [{', '.join(flags)}]")
    return 0


if __name__ == "__main__":
    sys.exit(main())
