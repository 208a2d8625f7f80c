#!/usr/bin/env python3
"""Write the bundled example models to JSON files usable with the CLI.

Usage: python scripts/export_fixtures.py [outdir]   (default: ./fixtures)
"""
import sys
from pathlib import Path

from phda import fixtures as F
from phda import jsonio
from phda.unfolding import unfold


def main() -> int:
    outdir = Path(sys.argv[1] if len(sys.argv) > 1 else "fixtures")
    outdir.mkdir(parents=True, exist_ok=True)
    written = []
    for name, mk in F.MODELS.items():
        path = outdir / f"{name}.json"
        jsonio.save_json(str(path), jsonio.model_to_dict(mk()))
        written.append(path)
    path = outdir / "glued_square_diagram.json"
    jsonio.save_json(str(path), jsonio.diagram_to_dict(F.glued_square_diagram()))
    written.append(path)
    for name, morphism in [
        ("branch_fold", F.branch_fold(2, 1)),
        ("loop_unrolling", F.loop_unrolling(2)),
        ("square_cover", unfold(F.full_square(), 4).cover),
    ]:
        path = outdir / f"{name}.json"
        jsonio.save_json(str(path), jsonio.morphism_to_dict(morphism))
        written.append(path)
    for p in written:
        print(p)
    return 0


if __name__ == "__main__":
    sys.exit(main())
