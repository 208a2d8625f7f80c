#!/usr/bin/env python3
"""Glue three executions of a square and inspect the resulting tree.

Shows the colimit cells, the two strict executions to the merged corner,
their confluent homotopy, and the DOT rendering.
"""
from phda import fixtures as F
from phda.colimits import colimit
from phda.homotopy import are_confluently_homotopic, classes_to
from phda.jsonio import export_dot
from phda.paths import enumerate_paths
from phda.unfolding import is_tree


def main() -> int:
    d = F.glued_square_diagram()
    for u, s in sorted(d.objects.items()):
        print(f"object {u}: {s.text()}")
    res = colimit(d)
    D = res.model
    print(f"\ncolimit: {len(D.cells)} cells "
          f"({', '.join(sorted(D.cells))})")
    corner = res.injections["B"].mapping["4"]
    print(f"corners of B and C glued to: {corner}")
    executions = [p for p in enumerate_paths(D, 4) if p.end == corner]
    for p in executions:
        print(f"  execution: {p.text()}")
    print(f"confluently homotopic: {are_confluently_homotopic(*executions)}")
    print(f"classes to {corner}: {len(classes_to(D, corner, 4))}")
    print(f"is_tree: {bool(is_tree(D))}")
    print("\n" + export_dot(D))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
