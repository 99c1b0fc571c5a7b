"""
Jones-Wenzl projections of types A and D.

Four independent routes to the same coefficients live here:

* product engines that build P_n and Q_n bottom-up from the recurrences
  (the simplified one for Q_n, and the three-term one for the cross-check
  engine), multiplying actual diagram elements;
* top-down cap-removal recursions on single diagrams, one for diagrams
  with an even number of dots, one for diagrams with a single dot, and the
  sign-free mixed form that routes the even part through type A;
* the type-A recursion and the linear combination of dotted diagrams that
  satisfies it;
* closed forms for chain and hook words and a handful of special words.

The Dyck-tiling generating functions (a fifth and sixth route) are in
``tilings``; tests check that every route agrees on every basis diagram.
"""

from __future__ import annotations

import functools
from typing import Sequence

from .diagrams import (
    DecoratedDiagram,
    Matching,
    even_decorations,
    extend_right,
    innermost_caps,
    odd_on,
    remove_cap,
)
from .elements import TLElement, word_to_element
from .qlaurent import QRat, qfrac, qint_rat
from .words import g_word, h_word


def coef_g(n: int, i: int) -> QRat:
    """Chain-word coefficient; the i = 1 entry is [n]/[2n]."""
    if not 1 <= i <= n + 1:
        raise ValueError(f"need 1 <= i <= n+1, got i={i}, n={n}")
    if i == 1:
        return qfrac([n], [2 * n])
    return qfrac([n, 2 * i - 2], [2 * n, i - 1])


def coef_h(n: int, j: int) -> QRat:
    """Hook-word coefficient [n][n+1-j]/([2n][n+1])."""
    if not 0 <= j <= n:
        raise ValueError(f"need 0 <= j <= n, got j={j}, n={n}")
    return qfrac([n, n + 1 - j], [2 * n, n + 1])


def three_term_A(n: int) -> QRat:
    """Coefficient of the E_n sandwich in the three-term recurrence (special at n=1)."""
    if n == 1:
        return qfrac([], [2])
    return qfrac([n, 2 * n - 2], [2 * n, n - 1])


def three_term_B(n: int) -> QRat:
    """Coefficient of the long-word sandwich in the three-term recurrence."""
    return qfrac([n], [2 * n, n + 1])


def _extend(el: TLElement, to_rank: int) -> TLElement:
    if el.rank == to_rank:
        return el
    return TLElement(to_rank, {extend_right(d, to_rank - el.rank): c for d, c in el.terms.items()})


def _single(word: Sequence[int], rank: int) -> TLElement:
    sd = word_to_element(word, rank)
    assert sd.scalar.is_one(), f"word {word} is not reduced"
    return TLElement.of(sd.diagram)


@functools.cache
def compute_P(n: int) -> TLElement:
    """The type-A projection as a rank n+1 element over undotted diagrams."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return TLElement.identity(1)
    prev = _extend(compute_P(n - 1), n + 1)
    mix = TLElement.zero(n + 1)
    for i in range(1, n + 2):
        mix = mix + _single(g_word(n, i), n + 1).scale(qfrac([i], [n + 1]))
    return prev * mix


@functools.cache
def compute_Q(n: int) -> TLElement:
    """
    The type-D projection built by the simplified recurrence.

    For n = 0 the element is returned at rank 2 (its image under the
    standard embedding): the rank-1 picture has no diagram for the dotted
    generator, while at rank 2 it is the doubly-dotted cap-cup diagram.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return TLElement.identity(2) + TLElement.gen(2, 0).scale(qfrac([], [2]))
    rank = n + 1
    prev = _extend(compute_Q(n - 1), rank)
    mix = TLElement.zero(rank)
    for i in range(1, n + 2):
        mix = mix + _single(g_word(n, i), rank).scale(coef_g(n, i))
    for j in range(0, n + 1):
        mix = mix + _single(h_word(n, j), rank).scale(coef_h(n, j))
    return prev * mix


@functools.cache
def compute_Q_three_term(n: int) -> TLElement:
    """The type-D projection by the three-term recurrence (full element products)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return compute_Q(0)
    rank = n + 1
    prev = _extend(compute_Q_three_term(n - 1), rank)
    e_n = TLElement.gen(rank, n)
    e_w = _single(h_word(n, n), rank)
    return (
        prev
        + (prev * e_n * prev).scale(three_term_A(n))
        + (prev * e_w * prev).scale(three_term_B(n))
    )




@functools.cache
def coef_A_recursive(m: Matching) -> QRat:
    """Type-A coefficient of a matching by inner-most cap removal."""
    if m.rank == 1:
        return QRat.one()
    n = m.rank - 1
    pairset = set(m.pairs)
    total = QRat.zero()
    for i in range(1, m.rank + 1):
        if (i, i + 1) in pairset:
            total = total + qfrac([i], [n + 1]) * coef_A_recursive(m.delete_chord(i))
    return total


@functools.cache
def coef_even_recursive(d: DecoratedDiagram) -> QRat:
    """Even-dot coefficient by cap removal; dotted caps are removable only at position one."""
    if d.dot_count() % 2:
        raise ValueError("coef_even_recursive expects an even number of dots")
    if d.rank == 1:
        return QRat.one()
    n = d.rank - 1
    plain, dotted = innermost_caps(d)
    total = QRat.zero()
    for i in sorted(plain | dotted):
        total = total + coef_g(n, i) * coef_even_recursive(remove_cap(d, i))
    return total


@functools.cache
def coef_odd_recursive(d: DecoratedDiagram) -> QRat:
    """Single-dot coefficient by the parity-split recursion (carries a -[2] term)."""
    if d.dot_count() != 1:
        raise ValueError("coef_odd_recursive expects exactly one dot")
    n = d.rank - 1
    q2 = qint_rat(2)
    pairset = set(d.pairs)
    total = QRat.zero()
    for i in range(1, d.rank + 1):
        if (i, i + 1) not in pairset:
            continue
        m_i = d.matching.delete_chord(i)
        ident = m_i.is_identity()
        if i <= n:
            inner = QRat.zero()
            for dd in even_decorations(m_i):
                inner = inner + coef_even_recursive(dd)
            if not ident:
                inner = inner - q2 * coef_odd_recursive(odd_on(m_i))
            total = total + coef_h(n, i) * inner
        if not ident:
            gterm = coef_g(n, i) * coef_odd_recursive(odd_on(m_i))
            if i == 1:
                gterm = gterm + gterm
            total = total + gterm
    return total


@functools.cache
def coef_mixed_recursive(d: DecoratedDiagram) -> QRat:
    """Single-dot coefficient by the sign-free recursion through type A."""
    if d.dot_count() != 1:
        raise ValueError("coef_mixed_recursive expects exactly one dot")
    n = d.rank - 1
    pairset = set(d.pairs)
    total = QRat.zero()
    for i in range(1, d.rank + 1):
        if (i, i + 1) not in pairset:
            continue
        m_i = d.matching.delete_chord(i)
        if i <= n:
            total = total + coef_h(n, i) * coef_A_recursive(m_i)
        if not m_i.is_identity():
            gterm = coef_g(n, i) * coef_mixed_recursive(odd_on(m_i))
            if i == 1:
                gterm = gterm + gterm
            total = total + gterm
    return total


def typeA_combination(m: Matching) -> QRat:
    """
    The dotted-diagram combination that obeys the type-A recursion:
    the sum of even-dot coefficients over the matching minus [2] times the
    single-dot coefficient.
    """
    if m.is_identity():
        return QRat.one()
    total = QRat.zero()
    for dd in even_decorations(m):
        total = total + coef_even_recursive(dd)
    return total - qint_rat(2) * coef_odd_recursive(odd_on(m))


# ---------------------------------------------------------------------------
# Closed forms.


def _chain_value(n: int, j: int, i: int) -> QRat:
    if i == 1 and j == 1:
        return qfrac([n, n + 1], [2 * n, 2])
    if i == 1:
        return qfrac([n, n + 1 - j], [2 * n])
    return qfrac([n, 2 * (i - 1), n + 1 - j], [2 * n, i - 1])


def _closed_forms(n: int) -> dict[str, tuple]:
    return {
        "chain": (
            lambda j, i: tuple(range(j, i - 1, -1)),
            lambda j, i: _chain_value(n, j, i),
            [(j, i) for j in range(1, n + 1) for i in range(1, j + 1)],
        ),
        "hook": (
            lambda j, i: tuple(range(j, 0, -1)) + (0,) + tuple(range(2, i + 1)),
            lambda j, i: qfrac([n, n + 1 - i, n + 1 - j], [2 * n, n + 1]),
            [(j, i) for j in range(1, n + 1) for i in range(2, n + 1)],
        ),
        "e01": (
            lambda: (0, 1),
            lambda: qfrac([n, n, n], [2 * n, n + 1]),
            [()] if n >= 1 else [],
        ),
        "e013": (
            lambda: (0, 1, 3),
            lambda: qfrac([n - 1] * 3 + [n - 2, 2, 2], [2 * n - 2, n + 1, n])
            + QRat.integer(2) * qfrac([n] + [n - 1] * 3 + [n - 2, 2], [2 * n, 2 * n - 2, n + 1]),
            [()] if n >= 3 else [],
        ),
        "e120": (
            lambda: (1, 2, 0),
            lambda: qfrac([n, n - 1], [2 * n, 2]),
            [()] if n >= 2 else [],
        ),
        "en310": (
            lambda: tuple(range(n, 2, -1)) + (1, 0),
            lambda: qfrac([n - 1, n - 1, 2], [2 * n, n + 1])
            + qfrac([n - 1] * 3 + [2, 2], [2 * n, 2 * n - 2]),
            [()] if n >= 3 else [],
        ),
        "gn31": (
            lambda: tuple(range(n, 2, -1)) + (1,),
            lambda: qfrac([n, n, n - 1, 3], [2 * n, 2 * n - 2, 2]),
            [()] if n >= 3 else [],
        ),
        "zerogn1": (
            lambda: (0,) + tuple(range(n, 0, -1)),
            lambda: qfrac([n, n, n - 1], [2 * n, 2 * n - 2, 2]),
            [()] if n >= 2 else [],
        ),
        "l021gn3": (
            lambda: (0, 2, 1) + tuple(range(n, 2, -1)),
            lambda: qfrac([n, n - 1, n - 2, 3], [2 * n, 2 * n - 2, 2]),
            [()] if n >= 3 else [],
        ),
        "l120gn1": (
            lambda: (1, 2, 0) + tuple(range(n, 0, -1)),
            lambda: qfrac([n, n - 1, n - 2], [2 * n, 2 * n - 2, 2]),
            [()] if n >= 3 else [],
        ),
    }


CLOSED_FORM_PATTERNS = tuple(_closed_forms(4))


def closed_form_params(pattern: str, n: int) -> list[tuple]:
    """Admissible parameter tuples for a pattern at a given n."""
    forms = _closed_forms(n)
    if pattern not in forms:
        raise ValueError(f"unknown closed form {pattern!r}")
    return forms[pattern][2]


def closed_form_word(pattern: str, n: int, *params: int) -> tuple[int, ...]:
    forms = _closed_forms(n)
    if pattern not in forms:
        raise ValueError(f"unknown closed form {pattern!r}")
    if tuple(params) not in {tuple(p) for p in forms[pattern][2]}:
        raise ValueError(f"parameters {params} out of range for {pattern!r} at n={n}")
    return forms[pattern][0](*params)


def closed_form(pattern: str, n: int, *params: int) -> QRat:
    forms = _closed_forms(n)
    if pattern not in forms:
        raise ValueError(f"unknown closed form {pattern!r}")
    if tuple(params) not in {tuple(p) for p in forms[pattern][2]}:
        raise ValueError(f"parameters {params} out of range for {pattern!r} at n={n}")
    return forms[pattern][1](*params)


def coefficient_in_Q(word: Sequence[int], n: int) -> QRat:
    """Coefficient in the type-D projection of the diagram of a reduced word."""
    rank = max(n + 1, 2)
    sd = word_to_element(word, rank)
    if not sd.scalar.is_one():
        raise ValueError(f"word {tuple(word)} is not reduced")
    return compute_Q(n).coeff(sd.diagram)
