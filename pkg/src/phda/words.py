"""Face-index words: the composite-face algebra of cube-shaped cells.

A composite face of an n-cell is named by a word of (index, direction)
pairs with strictly increasing indices; direction 0 is the past face,
1 the future face.  Words compose with `star`.  `eval_coface` gives the
dual insertion action on bit vectors and is implemented independently of
`star`, so the two can serve as oracles for each other:

    eval_coface(star(I, J), b) == eval_coface(I, eval_coface(J, b))
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .errors import IndexOutOfRange

PAST = 0
FUTURE = 1

Label = tuple[str, ...]


@dataclass(frozen=True, order=True)
class FaceWord:
    """An ordered sequence of (index, direction) pairs, indices strictly increasing."""

    pairs: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        prev = 0
        for i, a in self.pairs:
            if i <= prev:
                raise ValueError(f"indices must be strictly increasing and >= 1: {self.pairs}")
            if a not in (PAST, FUTURE):
                raise ValueError(f"direction must be 0 or 1: {self.pairs}")
            prev = i

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.pairs)

    def __mul__(self, other: "FaceWord") -> "FaceWord":
        return star(self, other)

    @property
    def indices(self) -> tuple[int, ...]:
        return tuple(i for i, _ in self.pairs)

    @property
    def max_index(self) -> int:
        return self.pairs[-1][0] if self.pairs else 0

    def text(self) -> str:
        return "[" + ",".join(f"({i},{a})" for i, a in self.pairs) + "]"

    @classmethod
    def parse(cls, s: str) -> "FaceWord":
        s = s.strip()
        if not (s.startswith("[") and s.endswith("]")):
            raise ValueError(f"not a face word: {s!r}")
        body = s[1:-1].replace(" ", "")
        if not body:
            return EPSILON
        pairs = []
        for item in body.replace("),(", ");(").split(";"):
            if not (item.startswith("(") and item.endswith(")")):
                raise ValueError(f"not a face word: {s!r}")
            i, a = item[1:-1].split(",")
            pairs.append((int(i), int(a)))
        return cls(tuple(pairs))


EPSILON = FaceWord()


def word(*pairs: tuple[int, int]) -> FaceWord:
    return FaceWord(tuple(pairs))


def single(index: int, direction: int) -> FaceWord:
    return FaceWord(((index, direction),))


def star(lhs: FaceWord, rhs: FaceWord) -> FaceWord:
    """Compose two face words: taking the `lhs` face and then the `rhs` face.

    Merge by heads; whenever an lhs entry is emitted, the still-pending rhs
    indices shift up by one because they act on a cell one dimension lower.
    """
    out: list[tuple[int, int]] = []
    i, j, shift = 0, 0, 0
    lp, rp = lhs.pairs, rhs.pairs
    while i < len(lp) and j < len(rp):
        li, la = lp[i]
        rj, ra = rp[j][0] + shift, rp[j][1]
        if li <= rj:
            out.append((li, la))
            i += 1
            shift += 1
        else:
            out.append((rj, ra))
            j += 1
    out.extend(lp[i:])
    out.extend((r + shift, a) for r, a in rp[j:])
    return FaceWord(tuple(out))


def star_fold(singles: list[tuple[int, int]]) -> FaceWord:
    """Compose a chain of single faces applied left to right."""
    acc = EPSILON
    for i, a in singles:
        acc = star(acc, single(i, a))
    return acc


def delete_letters(w: FaceWord, label: Label) -> Label:
    """Drop the letter positions named by `w`, highest index first."""
    letters = list(label)
    for i, _ in reversed(w.pairs):
        if not 1 <= i <= len(letters):
            raise IndexOutOfRange(f"cannot delete position {i} of word of length {len(letters)}")
        del letters[i - 1]
    return tuple(letters)


def eval_coface(w: FaceWord, bits: tuple[int, ...]) -> tuple[int, ...]:
    """Insert the directions of `w` at their indices, lowest index first.

    Literal insertion semantics, kept independent of `star` on purpose.
    """
    out = list(bits)
    for i, a in w.pairs:
        if not 1 <= i <= len(out) + 1:
            raise IndexOutOfRange(f"cannot insert at position {i} of vector of length {len(out)}")
        out.insert(i - 1, a)
    return tuple(out)


def canonical_chain(w: FaceWord) -> list[tuple[int, int]]:
    """One single-face chain whose left-to-right composition is `w`.

    Taking the highest-index face first keeps the remaining indices valid;
    star_fold(canonical_chain(w)) == w.
    """
    return list(reversed(w.pairs))


def enumerate_words(max_index: int, max_len: int | None = None) -> list[FaceWord]:
    """All face words over indices 1..max_index, optionally length-bounded."""
    top = max_index if max_len is None else min(max_index, max_len)
    out = []
    for k in range(top + 1):
        for idx in itertools.combinations(range(1, max_index + 1), k):
            for dirs in itertools.product((PAST, FUTURE), repeat=k):
                out.append(FaceWord(tuple(zip(idx, dirs))))
    return out
