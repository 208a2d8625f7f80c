"""Confluent homotopy of paths: swapping blocks of future steps in place.

Two paths are elementary-homotopic when they agree outside a window of
future-directed steps whose composite face words are equal.  Equivalence
is decided by breadth-first closure over elementary rewrites; the
necessary-condition key serves only as an index and negative pre-filter.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainMismatch, UnknownCell
from .paths import Path, enumerate_paths, step_moves
from .words import EPSILON, FUTURE, FaceWord, single, star, star_fold

Futures = dict[str, list[tuple[int, str]]]


@dataclass(frozen=True)
class HomotopyClass:
    representative: Path
    members: tuple[Path, ...]

    def __len__(self) -> int:
        return len(self.members)


def class_key(p: Path) -> tuple:
    """Invariants shared by homotopic paths: length, past steps, per-run composites, endpoint.

    Necessary conditions only; never used to decide equivalence positively.
    """
    past = tuple((k, j) for k, (j, a) in enumerate(p.steps) if a != FUTURE)
    runs = []
    k = 0
    while k < len(p.steps):
        if p.steps[k][1] == FUTURE:
            start = k
            while k < len(p.steps) and p.steps[k][1] == FUTURE:
                k += 1
            runs.append((start, star_fold(list(p.steps[start:k]))))
        else:
            k += 1
    return (len(p.steps), past, tuple(runs), p.end)


def _future_chains(
    x, start: str, length: int, target: FaceWord, futures: Futures
) -> list[tuple[tuple[str, ...], tuple]]:
    """All chains of `length` future steps from `start` whose composite is `target`."""
    out = []
    stack = [(start, EPSILON, (), ())]
    while stack:
        cell, acc, cells, steps = stack.pop()
        if len(steps) == length:
            if acc == target:
                out.append((cells, steps))
            continue
        for i, z in futures.get(cell, []):
            stack.append((z, star(acc, single(i, FUTURE)), cells + (z,), steps + ((i, FUTURE),)))
    out.sort()
    return out


def elementary_neighbors(p: Path, futures: Futures | None = None) -> list[Path]:
    """All paths one elementary rewrite away from p."""
    if futures is None:
        futures = step_moves(p.host)[1]
    found: dict[tuple, Path] = {}
    n = len(p.steps)
    for s in range(1, n):
        if p.steps[s - 1][1] != FUTURE:
            continue
        for t in range(s + 1, n + 1):
            if p.steps[t - 1][1] != FUTURE:
                break
            window = list(p.steps[s - 1 : t])
            target = star_fold(window)
            for cells, steps in _future_chains(p.host, p.cells[s - 1], t - s + 1, target, futures):
                if cells[-1] != p.cells[t]:
                    continue
                q = Path(p.host, p.cells[:s] + cells[:-1] + p.cells[t:], p.steps[: s - 1] + steps + p.steps[t:])
                if q.key() != p.key():
                    found[q.key()] = q
    return [found[k] for k in sorted(found)]


def are_confluently_homotopic(p: Path, q: Path) -> bool:
    """Reflexive-transitive closure of elementary rewrites, by search."""
    if p.host != q.host:
        raise DomainMismatch("paths live in different models")
    if p.key() == q.key():
        return True
    if class_key(p) != class_key(q):
        return False  # provably necessary conditions; a pure pre-filter
    futures = step_moves(p.host)[1]
    seen = {p.key()}
    frontier = [p]
    while frontier:
        nxt = []
        for r in frontier:
            for nb in elementary_neighbors(r, futures):
                k = nb.key()
                if k == q.key():
                    return True
                if k not in seen:
                    seen.add(k)
                    nxt.append(nb)
        frontier = nxt
    return False


def partition_paths(paths: list[Path], futures: Futures | None = None) -> list[list[Path]]:
    """Group paths by closure under elementary rewrites, preserving first-seen order.

    The input must be closed under rewrites (rewrites preserve length and
    endpoint, so length- or endpoint-filtered enumerations qualify).
    """
    if futures is None and paths:
        futures = step_moves(paths[0].host)[1]
    index = {p.key(): i for i, p in enumerate(paths)}
    parent = list(range(len(paths)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i, p in enumerate(paths):
        for nb in elementary_neighbors(p, futures):
            j = index[nb.key()]
            ri, rj = find(i), find(j)
            if ri != rj:
                parent[max(ri, rj)] = min(ri, rj)
    groups: dict[int, list[Path]] = {}
    for i, p in enumerate(paths):
        groups.setdefault(find(i), []).append(p)
    return [groups[r] for r in sorted(groups)]


def classes_to(x, cell: str, max_len: int) -> list[HomotopyClass]:
    """The homotopy classes of paths of length <= max_len ending at `cell`."""
    if cell not in x.cells:
        raise UnknownCell(cell)
    paths = [p for p in enumerate_paths(x, max_len) if p.end == cell]
    out = []
    for group in partition_paths(paths):
        members = tuple(sorted(group, key=Path.key))
        out.append(HomotopyClass(members[0], members))
    return out


def _single_moves(x) -> dict[str, list[tuple[tuple[int, int], str]]]:
    singles: dict[str, list[tuple[tuple[int, int], str]]] = {}
    for (src, word), tgt in x.faces.items():
        if len(word) == 1:
            singles.setdefault(src, []).append((word.pairs[0], tgt))
    return singles


def _single_chain_exists(x, cid: str, w: FaceWord, expect: str, singles) -> bool:
    stack = [(cid, EPSILON, 0)]
    while stack:
        cell, acc, depth = stack.pop()
        if depth == len(w):
            if acc == w and cell == expect:
                return True
            continue
        for (i, a), z in singles.get(cell, []):
            stack.append((z, star(acc, single(i, a)), depth + 1))
    return False


def find_shortcuts(x) -> set[tuple[str, FaceWord]]:
    """Defined composites admitting no chain of defined single faces with the same composite."""
    singles = _single_moves(x)
    out = set()
    for (cid, w), tgt in x.faces.items():
        if len(w) >= 2 and not _single_chain_exists(x, cid, w, tgt, singles):
            out.add((cid, w))
    return out
