"""
Decorated Temperley-Lieb diagrams of types A and D.

A diagram of rank r lives on 2r boundary points, numbered 1..r along the
bottom from left to right and r+1..2r along the top from right to left.
Folding the top row down to the right therefore relabels nothing: the
matching *is* its own chord diagram, and the Dyck word of the diagram reads
U at the smaller point of each pair and D at the larger.

Pairs with both points <= r are caps, pairs with both points > r are cups,
and mixed pairs are vertical (through) strands. Decorations are dots on
pairs. A diagram carries either a single dot (on the pair containing bottom
point 1; such diagrams encode elements whose reduced words use both of the
fork generators) or an even number of dots, each on a nesting-maximal
chord. The identity diagram never carries dots.
"""

from __future__ import annotations

import dataclasses
import functools
import math
from typing import Iterable, Iterator

Pair = tuple[int, int]


class DiagramError(ValueError):
    """Raised for structurally invalid diagrams or decorations."""


def _is_noncrossing(pairs: Iterable[Pair], n_points: int) -> bool:
    partner = [0] * (n_points + 1)
    seen = 0
    for a, b in pairs:
        if not (1 <= a < b <= n_points) or partner[a] or partner[b]:
            return False
        partner[a], partner[b] = b, a
        seen += 2
    if seen != n_points:
        return False
    stack: list[int] = []
    for p in range(1, n_points + 1):
        if partner[p] > p:
            stack.append(partner[p])
        elif not stack or stack.pop() != p:
            return False
    return True


@dataclasses.dataclass(frozen=True, order=True)
class Matching:
    """A noncrossing perfect matching of 1..2r."""

    rank: int
    pairs: tuple[Pair, ...]

    def __post_init__(self) -> None:
        if self.rank < 1:
            raise DiagramError("rank must be positive")
        if not _is_noncrossing(self.pairs, 2 * self.rank):
            raise DiagramError(f"not a noncrossing perfect matching of 1..{2 * self.rank}: {self.pairs}")
        object.__setattr__(self, "pairs", tuple(sorted(tuple(sorted(p)) for p in self.pairs)))

    @staticmethod
    def of(rank: int, pairs: Iterable[Pair]) -> Matching:
        return Matching(rank, tuple(tuple(sorted(p)) for p in pairs))  # type: ignore[arg-type]

    @staticmethod
    def identity(rank: int) -> Matching:
        return Matching(rank, tuple((i, 2 * rank + 1 - i) for i in range(1, rank + 1)))

    def is_identity(self) -> bool:
        return self == Matching.identity(self.rank)

    def partner(self, p: int) -> int:
        for a, b in self.pairs:
            if a == p:
                return b
            if b == p:
                return a
        raise DiagramError(f"no point {p}")

    def pair_of(self, p: int) -> Pair:
        for pair in self.pairs:
            if p in pair:
                return pair
        raise DiagramError(f"no point {p}")

    def is_cap(self, pair: Pair) -> bool:
        return pair[1] <= self.rank

    def is_cup(self, pair: Pair) -> bool:
        return pair[0] > self.rank

    def is_vertical(self, pair: Pair) -> bool:
        return pair[0] <= self.rank < pair[1]

    def outermost(self) -> tuple[Pair, ...]:
        """Pairs enclosed by no other pair; exactly the dottable chords."""
        return tuple(
            p for p in self.pairs
            if not any(q[0] < p[0] and p[1] < q[1] for q in self.pairs)
        )

    def dyck_word(self) -> str:
        opens = {a for a, _ in self.pairs}
        return "".join("U" if p in opens else "D" for p in range(1, 2 * self.rank + 1))

    def delete_chord(self, i: int) -> Matching:
        """Remove the chord (i, i+1) and relabel the remaining points 1..2r-2."""
        if (i, i + 1) not in self.pairs:
            raise DiagramError(f"no chord ({i}, {i + 1})")
        relabel = lambda p: p if p < i else p - 2
        pairs = tuple((relabel(a), relabel(b)) for a, b in self.pairs if (a, b) != (i, i + 1))
        return Matching(self.rank - 1, pairs)


@dataclasses.dataclass(frozen=True, order=True)
class DecoratedDiagram:
    """A matching plus a dot set satisfying the parity and placement rules."""

    matching: Matching
    dots: tuple[Pair, ...]

    def __post_init__(self) -> None:
        dots = tuple(sorted(set(tuple(sorted(p)) for p in self.dots)))
        object.__setattr__(self, "dots", dots)
        pairset = set(self.matching.pairs)
        for d in dots:
            if d not in pairset:
                raise DiagramError(f"dot on non-existent pair {d}")
        k = len(dots)
        if k == 0:
            return
        if self.matching.is_identity():
            raise DiagramError("the identity diagram carries no dots")
        if k == 1:
            if 1 not in dots[0]:
                raise DiagramError("a single dot must sit on the pair containing bottom point 1")
        elif k % 2 == 0:
            outer = set(self.matching.outermost())
            bad = [d for d in dots if d not in outer]
            if bad:
                raise DiagramError(f"even-case dots must sit on outermost chords, not {bad}")
        else:
            raise DiagramError(f"dot count {k} is odd and greater than one")

    @staticmethod
    def of(rank: int, pairs: Iterable[Pair], dots: Iterable[Pair] = ()) -> DecoratedDiagram:
        return DecoratedDiagram(Matching.of(rank, pairs), tuple(tuple(sorted(p)) for p in dots))  # type: ignore[arg-type]

    @staticmethod
    def identity(rank: int) -> DecoratedDiagram:
        return DecoratedDiagram(Matching.identity(rank), ())

    @property
    def rank(self) -> int:
        return self.matching.rank

    @property
    def pairs(self) -> tuple[Pair, ...]:
        return self.matching.pairs

    def is_identity(self) -> bool:
        return not self.dots and self.matching.is_identity()

    def dot_count(self) -> int:
        return len(self.dots)

    def is_odd(self) -> bool:
        return len(self.dots) == 1

    def sort_key(self) -> tuple:
        return (self.rank, self.matching.pairs, self.dots)

    def __repr__(self) -> str:
        dots = f" dots={list(self.dots)}" if self.dots else ""
        return f"<diagram r={self.rank} {list(self.pairs)}{dots}>"


def generator(rank: int, i: int) -> DecoratedDiagram:
    """The diagram of the i-th generator at the given rank (i = 0 carries two dots)."""
    if i < 0 or i > rank - 1 or (i in (0, 1) and rank < 2):
        raise DiagramError(f"generator index {i} out of range for rank {rank}")
    j = max(i, 1)
    cap = (j, j + 1)
    cup = (2 * rank - j, 2 * rank + 1 - j)
    pairs = [cap, cup]
    for p in range(1, rank + 1):
        if p not in (j, j + 1):
            pairs.append((p, 2 * rank + 1 - p))
    dots = (cap, cup) if i == 0 else ()
    return DecoratedDiagram.of(rank, pairs, dots)


def extend_right(d: DecoratedDiagram, by: int = 1) -> DecoratedDiagram:
    """Add vertical strands on the right, preserving dots."""
    out = d
    for _ in range(by):
        r = out.rank
        relabel = lambda p: p if p <= r else p + 2
        pairs = [(relabel(a), relabel(b)) for a, b in out.pairs] + [(r + 1, r + 2)]
        dots = [(relabel(a), relabel(b)) for a, b in out.dots]
        out = DecoratedDiagram.of(r + 1, pairs, dots)
    return out


def forgetful(d: DecoratedDiagram) -> Matching:
    """Drop all dots."""
    return d.matching


def undotted(m: Matching) -> DecoratedDiagram:
    return DecoratedDiagram(m, ())


def odd_on(m: Matching) -> DecoratedDiagram:
    """The unique single-dot diagram over a non-identity matching."""
    if m.is_identity():
        raise DiagramError("the identity matching has no single-dot diagram")
    return DecoratedDiagram(m, (m.pair_of(1),))


def transpose(d: DecoratedDiagram) -> DecoratedDiagram:
    """Turn the diagram upside down; a single dot is re-seated on the bottom-left pair."""
    r = d.rank
    flip = lambda p: 2 * r + 1 - p
    pairs = [(flip(b), flip(a)) for a, b in d.pairs]
    m = Matching.of(r, pairs)
    if len(d.dots) == 1:
        return odd_on(m)
    dots = [tuple(sorted((flip(a), flip(b)))) for a, b in d.dots]
    return DecoratedDiagram(m, tuple(dots))  # type: ignore[arg-type]


def theta(word: Iterable[int]) -> tuple[int, ...]:
    """Swap the two fork generators 0 and 1 in a word."""
    return tuple(1 - s if s in (0, 1) else s for s in word)


@dataclasses.dataclass(frozen=True)
class ChordView:
    """The Dyck word of a diagram together with its dotted chords."""

    word: str
    dotted: tuple[Pair, ...]


def to_chord(d: DecoratedDiagram) -> ChordView:
    return ChordView(d.matching.dyck_word(), d.dots)


def innermost_caps(d: DecoratedDiagram) -> tuple[frozenset[int], frozenset[int]]:
    """
    Positions of removable inner-most caps, split into (plain, dotted).

    Position i names the chord (i, i+1) for 1 <= i <= rank; i = rank is the
    right-most vertical strand. A dotted inner-most cap is removable only at
    position one, so dotted chords at larger positions appear in neither set.
    """
    pairset = set(d.pairs)
    dotset = set(d.dots)
    plain, dotted = set(), set()
    for i in range(1, d.rank + 1):
        if (i, i + 1) in pairset:
            if (i, i + 1) in dotset:
                if i == 1:
                    dotted.add(1)
            else:
                plain.add(i)
    return frozenset(plain), frozenset(dotted)


def remove_cap(d: DecoratedDiagram, i: int) -> DecoratedDiagram:
    """
    Remove the inner-most cap at position i from an even-dot diagram.

    Removing the dotted cap at position one toggles a dot on the chord that
    contains the new bottom-left point (two dots on one chord cancel).
    """
    plain, dotted = innermost_caps(d)
    if i not in plain and i not in dotted:
        raise DiagramError(f"position {i} is not a removable inner-most cap of {d}")
    relabel = lambda p: p if p < i else p - 2
    new_pairs = [(relabel(a), relabel(b)) for a, b in d.pairs if (a, b) != (i, i + 1)]
    new_dots = {(relabel(a), relabel(b)) for a, b in d.dots if (a, b) != (i, i + 1)}
    m = Matching.of(d.rank - 1, new_pairs)
    if i in dotted:
        left = m.pair_of(1)
        new_dots ^= {left}
    return DecoratedDiagram(m, tuple(sorted(new_dots)))  # type: ignore[arg-type]


@functools.cache
def noncrossing_matchings(rank: int) -> tuple[Matching, ...]:
    """All noncrossing perfect matchings on 2*rank points, in sorted order."""

    def gen(points: tuple[int, ...]) -> Iterator[tuple[Pair, ...]]:
        if not points:
            yield ()
            return
        a = points[0]
        for k in range(1, len(points), 2):
            b = points[k]
            inside = points[1:k]
            outside = points[k + 1:]
            for left in gen(inside):
                for right in gen(outside):
                    yield ((a, b),) + left + right

    ms = [Matching(rank, pairs) for pairs in gen(tuple(range(1, 2 * rank + 1)))]
    return tuple(sorted(ms))


def even_decorations(m: Matching) -> tuple[DecoratedDiagram, ...]:
    """All even-dot diagrams over a matching: even subsets of its outermost chords."""
    if m.is_identity():
        return (undotted(m),)
    outer = m.outermost()
    out = []
    for size in range(0, len(outer) + 1, 2):
        for dots in _combinations(outer, size):
            out.append(DecoratedDiagram(m, dots))
    return tuple(sorted(out))


def _combinations(items: tuple, size: int) -> Iterator[tuple]:
    import itertools

    return itertools.combinations(items, size)


def enumerate_basis(rank: int, parity: str = "all") -> tuple[DecoratedDiagram, ...]:
    """All canonical decorated diagrams of the requested dot parity."""
    if parity not in ("even", "odd", "all"):
        raise ValueError(f"parity must be even, odd or all, not {parity!r}")
    out: list[DecoratedDiagram] = []
    for m in noncrossing_matchings(rank):
        if parity in ("even", "all"):
            out.extend(even_decorations(m))
        if parity in ("odd", "all") and not m.is_identity():
            out.append(odd_on(m))
    return tuple(sorted(out))


def dims(rank: int) -> tuple[int, int, int]:
    """(even, odd, total) diagram counts; total matches (rank+3)/2 * Catalan(rank) - 1."""
    if rank < 1:
        raise ValueError("rank must be positive")
    catalan = math.comb(2 * rank, rank) // (rank + 1)
    even = math.comb(2 * rank, rank) // 2
    odd = catalan - 1
    total_formula = (rank + 3) * catalan // 2 - 1
    assert even + odd == total_formula
    return even, odd, total_formula


def matching_from_dyck(word: str) -> Matching:
    """The matching whose chord diagram is the given Dyck word."""
    stack: list[int] = []
    pairs = []
    for p, step in enumerate(word, start=1):
        if step == "U":
            stack.append(p)
        elif step == "D":
            if not stack:
                raise DiagramError(f"not a Dyck word: {word}")
            pairs.append((stack.pop(), p))
        else:
            raise DiagramError(f"bad step {step!r} in {word}")
    if stack or len(word) % 2:
        raise DiagramError(f"not a Dyck word: {word}")
    return Matching.of(len(word) // 2, pairs)
