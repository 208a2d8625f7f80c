"""Executions of a model, their spines, and the shapes that classify them.

A path alternates two kinds of steps: direction 0 enters a cell whose
past face is the current cell (an action starts), direction 1 moves to
the future face of the current cell (an action finishes).  The spine is
the (dimension, label) shadow of a path; it freely generates a shape
model whose morphisms into a host are exactly the host's paths.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidSpine, NotAPathShape
from .model import PHDA, Morphism, build
from .words import FUTURE, PAST, Label, single

Step = tuple[int, int]


@dataclass(frozen=True)
class Path:
    host: PHDA
    cells: tuple[str, ...]
    steps: tuple[Step, ...]

    def __len__(self) -> int:
        return len(self.steps)

    @property
    def end(self) -> str:
        return self.cells[-1]

    def key(self) -> tuple:
        return (self.cells, self.steps)

    def prefix(self, k: int) -> "Path":
        return Path(self.host, self.cells[: k + 1], self.steps[:k])

    def extend(self, step: Step, cell: str) -> "Path":
        return Path(self.host, self.cells + (cell,), self.steps + (step,))

    def text(self) -> str:
        out = [self.cells[0]]
        for (j, a), c in zip(self.steps, self.cells[1:]):
            out.append(f"-({j},{a})-> {c}")
        return " ".join(out)


@dataclass(frozen=True)
class Spine:
    entries: tuple[tuple[int, Label], ...]
    steps: tuple[Step, ...]

    def __post_init__(self) -> None:
        if len(self.entries) != len(self.steps) + 1:
            raise InvalidSpine("entry/step count mismatch")
        if self.entries[0] != (0, ()):
            raise InvalidSpine(f"must start at (0, ε), got {self.entries[0]}")
        for k, (j, a) in enumerate(self.steps, start=1):
            (dp, wp), (dk, wk) = self.entries[k - 1], self.entries[k]
            if len(wp) != dp or len(wk) != dk:
                raise InvalidSpine(f"label length differs from dimension at {k}")
            if a == PAST:
                ok = dp == dk - 1 and 1 <= j <= dk and wk[: j - 1] + wk[j:] == wp
            elif a == FUTURE:
                ok = dk == dp - 1 and 1 <= j <= dp and wp[: j - 1] + wp[j:] == wk
            else:
                ok = False
            if not ok:
                raise InvalidSpine(f"bad transition at step {k}: {(dp, wp)} -({j},{a})-> {(dk, wk)}")

    def __len__(self) -> int:
        return len(self.steps)

    def text(self) -> str:
        out = ["(0,ε)"]
        for (j, a), (d, w) in zip(self.steps, self.entries[1:]):
            out.append(f"-({j},{a})-> ({d},{''.join(w) or 'ε'})")
        return " ".join(out)


@dataclass(frozen=True)
class PathIssue:
    kind: str
    step: int | None = None

    def __str__(self) -> str:
        return self.kind if self.step is None else f"{self.kind}({self.step})"


def empty_path(x: PHDA) -> Path:
    return Path(x, (x.initial,), ())


def validate_path(p: Path) -> PathIssue | None:
    """None when valid, otherwise the first violated step (1-based)."""
    x = p.host
    if len(p.cells) != len(p.steps) + 1:
        return PathIssue("BadStart")
    if p.cells[0] != x.initial or p.cells[0] not in x.cells:
        return PathIssue("BadStart")
    for k, (j, a) in enumerate(p.steps, start=1):
        prev, cur = p.cells[k - 1], p.cells[k]
        if cur not in x.cells or j < 1:
            return PathIssue("BadStep", k)
        if a == PAST:
            ok = x.faces.get((cur, single(j, PAST))) == prev
        elif a == FUTURE:
            ok = x.faces.get((prev, single(j, FUTURE))) == cur
        else:
            ok = False
        if not ok:
            return PathIssue("BadStep", k)
    return None


def spine_of(p: Path) -> Spine:
    entries = tuple((p.host.dim(c), p.host.label(c)) for c in p.cells)
    return Spine(entries, p.steps)


def path_shape(s: Spine, alphabet: frozenset[str] | None = None) -> PHDA:
    """The model freely generated by a spine: one cell per position, faces from the steps."""
    letters = alphabet if alphabet is not None else frozenset(l for _, w in s.entries for l in w)
    cells = [(str(k), d, w) for k, (d, w) in enumerate(s.entries)]
    entries = []
    for k, (j, a) in enumerate(s.steps, start=1):
        if a == PAST:
            entries.append((str(k), single(j, PAST), str(k - 1)))
        else:
            entries.append((str(k - 1), single(j, FUTURE), str(k)))
    return build(letters, cells, "0", entries)


def path_to_morphism(p: Path) -> Morphism:
    shape = path_shape(spine_of(p), p.host.alphabet)
    return Morphism(shape, p.host, {str(k): c for k, c in enumerate(p.cells)})


def _shape_walk(x: PHDA) -> Path:
    """The unique maximal chain of a path shape; raises NotAPathShape otherwise."""
    up, future = step_moves(x)
    cur = x.initial
    cells, steps = [cur], []
    seen = {cur}
    while True:
        moves = [((i, PAST), z) for i, z in up.get(cur, [])] + [((i, FUTURE), z) for i, z in future.get(cur, [])]
        if not moves:
            break
        if len(moves) > 1:
            raise NotAPathShape(f"branching at cell {cur}")
        (step, nxt) = moves[0]
        if nxt in seen:
            raise NotAPathShape(f"cycle through cell {nxt}")
        cells.append(nxt)
        steps.append(step)
        seen.add(nxt)
        cur = nxt
    if seen != set(x.cells):
        raise NotAPathShape(f"unreachable cells {sorted(set(x.cells) - seen)}")
    return Path(x, tuple(cells), tuple(steps))


def morphism_to_path(f: Morphism) -> Path:
    walk = _shape_walk(f.source)
    reference = path_shape(spine_of(walk), f.source.alphabet)
    renamed = {str(k): c for k, c in enumerate(walk.cells)}
    if {(renamed[a], w, renamed[b]) for a, w, b in reference.entries()} != set(f.source.entries()):
        raise NotAPathShape("face table is not freely generated by the spine")
    return Path(f.target, tuple(f.mapping[c] for c in walk.cells), walk.steps)


def map_path(f: Morphism, p: Path) -> Path:
    return Path(f.target, tuple(f.mapping[c] for c in p.cells), p.steps)


def step_moves(x: PHDA) -> tuple[dict[str, list[tuple[int, str]]], dict[str, list[tuple[int, str]]]]:
    """Single-step move tables: up-moves keyed by the entered cell's past face, future moves by source."""
    up: dict[str, list[tuple[int, str]]] = {}
    future: dict[str, list[tuple[int, str]]] = {}
    for (src, w), tgt in x.faces.items():
        if len(w) != 1:
            continue
        (i, a) = w.pairs[0]
        if a == PAST:
            up.setdefault(tgt, []).append((i, src))
        else:
            future.setdefault(src, []).append((i, tgt))
    for table in (up, future):
        for moves in table.values():
            moves.sort()
    return up, future


def enumerate_paths(x: PHDA, max_len: int) -> list[Path]:
    """All paths of length at most max_len, breadth first, deterministic order."""
    up, future = step_moves(x)
    out = [empty_path(x)]
    frontier = [out[0]]
    for _ in range(max_len):
        nxt = []
        for p in frontier:
            e = p.end
            for i, z in up.get(e, []):
                nxt.append(p.extend((i, PAST), z))
            for i, z in future.get(e, []):
                nxt.append(p.extend((i, FUTURE), z))
        if not nxt:
            break
        out.extend(nxt)
        frontier = nxt
    return out
