"""
Scalar multiples of diagrams and finite linear combinations of them.

Products are evaluated through the word algebra, so they are exact on all
of the algebra, not just on length-additive stackings. Every product of two
basis diagrams is (-[2])^k times a basis diagram; TLElement multiplication
distributes that over linear combinations.
"""

from __future__ import annotations

import dataclasses
import functools
from typing import Iterable, Mapping, Sequence

from .diagrams import DecoratedDiagram, DiagramError, generator
from .qlaurent import QRat, qint
from .words import compose_words, diagram_to_word, normalize, word_to_diagram


@functools.cache
def minus_q2_power(k: int) -> QRat:
    """(-[2])^k as a rational function."""
    return (QRat.of(-qint(2))) ** k


@dataclasses.dataclass(frozen=True)
class ScaledDiagram:
    scalar: QRat
    diagram: DecoratedDiagram

    def __post_init__(self) -> None:
        if self.scalar.is_zero():
            raise DiagramError("a scaled diagram carries a nonzero scalar")


def compose(top: DecoratedDiagram, bottom: DecoratedDiagram) -> ScaledDiagram:
    """Stack top over bottom and evaluate exactly."""
    k, d = compose_words(top, bottom)
    return ScaledDiagram(minus_q2_power(k), d)


def word_to_element(word: Sequence[int], rank: int) -> ScaledDiagram:
    """Evaluate a product of generators; the empty word is the identity."""
    for s in word:
        if not 0 <= s <= rank - 1:
            raise DiagramError(f"generator index {s} out of range for rank {rank}")
    k, w = normalize(tuple(word))
    return ScaledDiagram(minus_q2_power(k), word_to_diagram(w, rank))


@dataclasses.dataclass(frozen=True)
class TLElement:
    """A linear combination of same-rank diagrams with exact coefficients."""

    rank: int
    terms: Mapping[DecoratedDiagram, QRat]

    def __post_init__(self) -> None:
        clean = {}
        for d, c in self.terms.items():
            if d.rank != self.rank:
                raise DiagramError(f"term of rank {d.rank} in an element of rank {self.rank}")
            if not c.is_zero():
                clean[d] = c
        object.__setattr__(self, "terms", clean)

    @staticmethod
    def zero(rank: int) -> TLElement:
        return TLElement(rank, {})

    @staticmethod
    def identity(rank: int) -> TLElement:
        return TLElement(rank, {DecoratedDiagram.identity(rank): QRat.one()})

    @staticmethod
    def of(d: DecoratedDiagram, coeff: QRat | None = None) -> TLElement:
        return TLElement(d.rank, {d: coeff if coeff is not None else QRat.one()})

    @staticmethod
    def gen(rank: int, i: int) -> TLElement:
        return TLElement.of(generator(rank, i))

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, d: DecoratedDiagram) -> QRat:
        return self.terms.get(d, QRat.zero())

    def support(self) -> tuple[DecoratedDiagram, ...]:
        return tuple(sorted(self.terms))

    def __add__(self, other: TLElement) -> TLElement:
        if self.rank != other.rank:
            raise DiagramError("rank mismatch in addition")
        terms = dict(self.terms)
        for d, c in other.terms.items():
            terms[d] = terms[d] + c if d in terms else c
        return TLElement(self.rank, terms)

    def __sub__(self, other: TLElement) -> TLElement:
        return self + other.scale(QRat.integer(-1))

    def scale(self, c: QRat) -> TLElement:
        return TLElement(self.rank, {d: x * c for d, x in self.terms.items()})

    def __mul__(self, other: TLElement) -> TLElement:
        if self.rank != other.rank:
            raise DiagramError("rank mismatch in multiplication")
        acc: dict[DecoratedDiagram, QRat] = {}
        for d1, c1 in self.terms.items():
            w1 = diagram_to_word(d1)
            for d2, c2 in other.terms.items():
                k, w = normalize(w1 + diagram_to_word(d2))
                d = word_to_diagram(w, self.rank)
                c = c1 * c2 * minus_q2_power(k)
                acc[d] = acc[d] + c if d in acc else c
        return TLElement(self.rank, acc)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, TLElement) and self.rank == other.rank and self.terms == other.terms

    def __repr__(self) -> str:
        parts = [f"({c!r})*{d!r}" for d, c in sorted(self.terms.items(), key=lambda t: t[0].sort_key())]
        return f"TLElement(rank={self.rank}, " + " + ".join(parts or ["0"]) + ")"


def element_from_words(rank: int, words_coeffs: Iterable[tuple[Sequence[int], QRat]]) -> TLElement:
    """Assemble an element from (word, coefficient) pairs."""
    acc = TLElement.zero(rank)
    for word, c in words_coeffs:
        sd = word_to_element(word, rank)
        acc = acc + TLElement.of(sd.diagram, sd.scalar * c)
    return acc
