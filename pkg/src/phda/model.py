"""Labelled cubical transition models with a partial composite-face table.

A model is a graded set of cells, an initial point, a labelling word per
cell, and a partial table mapping (cell, face word) to the cell's face.
The table stores every defined composite explicitly; `validate_phda`
checks closure rather than computing it, and `saturate` closes a set of
generator entries for builders that start from single faces.

Instances are treated as immutable after construction; every operation
here is pure, so models and morphisms can be shared freely.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .errors import DomainMismatch, ModelInvalid, UnknownCell
from .words import FUTURE, PAST, FaceWord, Label, delete_letters, single, star

FaceTable = dict[tuple[str, FaceWord], str]
FaceEntry = tuple[str, FaceWord, str]


@dataclass(frozen=True)
class Cell:
    id: str
    dim: int
    label: Label


@dataclass(frozen=True)
class PHDA:
    alphabet: frozenset[str]
    cells: dict[str, Cell]
    initial: str
    faces: FaceTable

    def dim(self, cid: str) -> int:
        return self._cell(cid).dim

    def label(self, cid: str) -> Label:
        return self._cell(cid).label

    def _cell(self, cid: str) -> Cell:
        try:
            return self.cells[cid]
        except KeyError:
            raise UnknownCell(cid) from None

    def cells_of_dim(self, n: int) -> list[str]:
        return sorted(c.id for c in self.cells.values() if c.dim == n)

    @property
    def max_dim(self) -> int:
        return max((c.dim for c in self.cells.values()), default=0)

    def entries(self) -> list[FaceEntry]:
        return sorted((x, w, y) for (x, w), y in self.faces.items())


@dataclass(frozen=True)
class Morphism:
    """A total, dimension- and label-preserving cell map between models."""

    source: PHDA
    target: PHDA
    mapping: dict[str, str]

    def __call__(self, cid: str) -> str:
        return self.mapping[cid]


@dataclass(frozen=True)
class Violation:
    kind: str
    subject: tuple
    detail: str = ""

    def __str__(self) -> str:
        parts = ",".join(str(s) for s in self.subject)
        return f"{self.kind}({parts})" + (f": {self.detail}" if self.detail else "")


def face(x: PHDA, cid: str, w: FaceWord) -> str | None:
    """Look up the w-face of a cell; the empty word is the identity."""
    if cid not in x.cells:
        raise UnknownCell(cid)
    if len(w) == 0:
        return cid
    return x.faces.get((cid, w))


def saturate(entries: Iterable[FaceEntry]) -> FaceTable:
    """Close a set of face entries under composition of defined faces.

    Raises ModelInvalid(NotFunctional) if the closure assigns two targets
    to the same (cell, word) key.
    """
    table: FaceTable = {}
    by_src: dict[str, set[FaceWord]] = {}
    by_tgt: dict[str, set[tuple[str, FaceWord]]] = {}
    queue: deque[FaceEntry] = deque()

    def add(x: str, w: FaceWord, y: str) -> None:
        if len(w) == 0:
            if x != y:
                raise ModelInvalid([Violation("NotFunctional", (x, w.text(), y), "empty word must be the identity")])
            return
        key = (x, w)
        old = table.get(key)
        if old is not None:
            if old != y:
                raise ModelInvalid([Violation("NotFunctional", (x, w.text()), f"targets {old} and {y}")])
            return
        table[key] = y
        by_src.setdefault(x, set()).add(w)
        by_tgt.setdefault(y, set()).add((x, w))
        queue.append((x, w, y))

    for x, w, y in entries:
        add(x, w, y)
    while queue:
        x, w, y = queue.popleft()
        for j in sorted(by_src.get(y, ())):
            add(x, star(w, j), table[(y, j)])
        for v, k in sorted(by_tgt.get(x, ())):
            add(v, star(k, w), y)
    return table


def build(
    alphabet: Iterable[str],
    cells: Iterable[tuple[str, int, Iterable[str]]],
    initial: str,
    entries: Iterable[FaceEntry] = (),
    close: bool = True,
) -> PHDA:
    """Assemble a model, closing the face table unless `close` is False."""
    cmap = {cid: Cell(cid, dim, tuple(label)) for cid, dim, label in cells}
    table = saturate(entries) if close else {(x, w): y for x, w, y in entries}
    return PHDA(alphabet=frozenset(alphabet), cells=cmap, initial=initial, faces=table)


def validate_phda(x: PHDA) -> list[Violation]:
    """Check functionality, dimensions, labelling, closure, and the initial point."""
    out: list[Violation] = []
    if x.initial not in x.cells:
        out.append(Violation("BadInitial", (x.initial,), "unknown cell"))
    elif x.cells[x.initial].dim != 0:
        out.append(Violation("BadInitial", (x.initial,), "not of dimension 0"))
    for cid in sorted(x.cells):
        cell = x.cells[cid]
        if len(cell.label) != cell.dim:
            out.append(Violation("LabelViolation", (cid,), "label length differs from dimension"))
        for letter in cell.label:
            if letter not in x.alphabet:
                out.append(Violation("LabelViolation", (cid,), f"letter {letter!r} not in alphabet"))
    entries = x.entries()
    for xc, w, y in entries:
        if xc not in x.cells or y not in x.cells:
            out.append(Violation("UnknownCell", (xc, w.text(), y)))
            continue
        if len(w) == 0:
            if y != xc:
                out.append(Violation("NotFunctional", (xc, w.text(), y), "empty word must be the identity"))
            continue
        dx, dy = x.cells[xc].dim, x.cells[y].dim
        if w.max_index > dx or dy != dx - len(w):
            out.append(Violation("DimensionMismatch", (xc, w.text(), y)))
            continue
        if delete_letters(w, x.cells[xc].label) != x.cells[y].label:
            out.append(Violation("LabelViolation", (xc, w.text(), y)))
    # closure under composition, and agreement with stored composites
    valid = {(xc, w): y for xc, w, y in entries if xc in x.cells and y in x.cells and len(w) >= 1}
    by_src: dict[str, list[tuple[FaceWord, str]]] = {}
    for (xc, w), y in valid.items():
        by_src.setdefault(xc, []).append((w, y))
    for xc, w, y in sorted((xc, w, y) for (xc, w), y in valid.items()):
        for j, z in sorted(by_src.get(y, [])):
            comp = star(w, j)
            got = valid.get((xc, comp))
            if got is None:
                out.append(Violation("LaxLawViolation", (xc, w.text(), j.text()), f"missing composite {comp.text()}"))
            elif got != z:
                out.append(Violation("NotFunctional", (xc, comp.text()), f"targets {got} and {z}"))
    return out


def check_phda(x: PHDA) -> PHDA:
    violations = validate_phda(x)
    if violations:
        raise ModelInvalid(violations)
    return x


def validate_morphism(f: Morphism) -> list[Violation]:
    """Check totality, label preservation, the initial point, and face preservation."""
    out: list[Violation] = []
    src, tgt = f.source, f.target
    for cid in sorted(src.cells):
        img = f.mapping.get(cid)
        if img is None or img not in tgt.cells:
            out.append(Violation("NotTotal", (cid,), f"maps to {img}"))
            continue
        if src.cells[cid].dim != tgt.cells[img].dim:
            out.append(Violation("DimensionMismatch", (cid, img)))
        elif src.cells[cid].label != tgt.cells[img].label:
            out.append(Violation("LabelViolation", (cid, img)))
    if f.mapping.get(src.initial) != tgt.initial:
        out.append(Violation("InitialViolation", (src.initial,)))
    for xc, w, y in src.entries():
        fx, fy = f.mapping.get(xc), f.mapping.get(y)
        if fx is None or fy is None:
            continue  # reported as NotTotal already
        if tgt.faces.get((fx, w)) != fy:
            out.append(Violation("FaceNotPreserved", (xc, w.text(), y)))
    return out


def check_morphism(f: Morphism) -> Morphism:
    violations = validate_morphism(f)
    if violations:
        raise ModelInvalid(violations)
    return f


def identity(x: PHDA) -> Morphism:
    return Morphism(x, x, {cid: cid for cid in x.cells})


def compose(f: Morphism, g: Morphism) -> Morphism:
    """The composite applying `g` first and then `f`."""
    if g.target != f.source:
        raise DomainMismatch("codomain of the first-applied map must be the domain of the second")
    return Morphism(g.source, f.target, {cid: f.mapping[g.mapping[cid]] for cid in g.mapping})


def is_hda(x: PHDA) -> bool:
    """True when every single-index face is defined on every positive-dimensional cell."""
    for cell in x.cells.values():
        for i in range(1, cell.dim + 1):
            for a in (PAST, FUTURE):
                if (cell.id, single(i, a)) not in x.faces:
                    return False
    return True
