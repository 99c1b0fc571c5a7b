"""
The word algebra behind diagram composition.

Basis elements of the algebra are fully commutative reduced words in the
generators 0..n with the D-series adjacency (0-2, 1-2, 2-3, 3-4, ...; the
fork generators 0 and 1 are not adjacent). Any product of generators equals
(-[2])^k times a unique such word, and this module computes that normal
form directly from the defining relations:

    s s     -> -[2] s
    s j s   ->  s          (j adjacent to s)
    s t     ->  t s        (s, t not adjacent)

Normalizing words, rather than tracing strands, is what keeps products of
decorated diagrams exact: the naive loop-with-a-dot rule of the graphical
calculus is only valid for reduced expressions, and projection engines
routinely multiply outside that regime.

Reduced words are rendered back into diagrams by graphical stacking, one
generator at a time, which is exactly the regime where the loop rules hold
(every loop closed while stacking a reduced word carries a single dot).
"""

from __future__ import annotations

import functools
from typing import Iterable, Sequence

from .diagrams import DecoratedDiagram, DiagramError, Matching, generator, innermost_caps, odd_on, remove_cap, undotted

Word = tuple[int, ...]


def adjacent(a: int, b: int) -> bool:
    """Adjacency in the D-series graph, independent of rank."""
    if a > b:
        a, b = b, a
    if a == 0:
        return b == 2
    if a == 1:
        return b == 2
    return b == a + 1


def _blocking(s: int, letter: int) -> bool:
    return letter == s or adjacent(s, letter)


@functools.cache
def _mult_right(w: Word, s: int) -> tuple[int, Word]:
    """
    Multiply the basis word w by a generator on the right.

    Returns (k, w') with E_w E_s = (-[2])^k E_w'.
    """
    p = None
    for idx in range(len(w) - 1, -1, -1):
        if _blocking(s, w[idx]):
            p = idx
            break
    if p is None:
        return 0, w + (s,)
    if w[p] == s:
        return 1, w
    q = None
    for idx in range(p - 1, -1, -1):
        if _blocking(s, w[idx]):
            q = idx
            break
    if q is not None and w[q] == s:
        # w = A s B j C with nothing blocking s inside B or C: s j s -> s.
        reduced = w[:q] + w[q + 1:p] + (s,) + w[p + 1:]
        return normalize(reduced)
    return 0, w + (s,)


def normalize(word: Sequence[int]) -> tuple[int, Word]:
    """Normal form of a product of generators: E_word = (-[2])^k E_result."""
    k, acc = 0, ()
    for s in word:
        dk, acc = _mult_right(acc, s)
        k += dk
    return k, canonical(acc)


def canonical(word: Sequence[int]) -> Word:
    """
    The Cartier-Foata normal form of a reduced word: repeatedly emit, in
    increasing order, the letters whose first occurrence is blocked by
    nothing earlier. Words of the same element agree after this reordering.
    """
    rest = list(word)
    out: list[int] = []
    while rest:
        block: list[int] = []
        blocked: set[int] = set()
        for letter in rest:
            if letter not in blocked and letter not in block:
                block.append(letter)
            blocked.add(letter)
            blocked.update(b for b in range(max(rest) + 1) if adjacent(letter, b))
        block.sort()
        out.extend(block)
        for letter in block:
            rest.remove(letter)
    return tuple(out)


def word_length(word: Sequence[int]) -> int:
    return len(word)


# ---------------------------------------------------------------------------
# Graphical stacking, used only on reduced words.


def _stack(top: DecoratedDiagram, bottom: DecoratedDiagram):
    """
    Trace strands of bottom with top glued above it.

    Returns (strands, loops) where strands maps each new pair (in positions
    of the composite) to its dot count and loops is a list of dot counts of
    closed loops. Parallel strands between the same two glued points are
    legitimate (they close a loop), so the walk follows edges, not nodes.
    """
    r = top.rank
    # Node spaces: ('B', i) final bottom, ('M', i) the glued boundary, ('T', i) final top.
    def bottom_node(p: int):
        return ("B", p) if p <= r else ("M", 2 * r + 1 - p)

    def top_node(p: int):
        return ("M", p) if p <= r else ("T", 2 * r + 1 - p)

    edges: list[tuple[tuple, tuple, int]] = []
    incidence: dict[tuple, list[int]] = {}

    def add_edge(u, v, dots):
        incidence.setdefault(u, []).append(len(edges))
        incidence.setdefault(v, []).append(len(edges))
        edges.append((u, v, dots))

    for a, b in bottom.pairs:
        add_edge(bottom_node(a), bottom_node(b), 1 if (a, b) in bottom.dots else 0)
    for a, b in top.pairs:
        add_edge(top_node(a), top_node(b), 1 if (a, b) in top.dots else 0)

    used = [False] * len(edges)
    strands: dict[tuple[int, int], int] = {}
    loops: list[int] = []

    def boundary_pos(node) -> int:
        side, i = node
        return i if side == "B" else 2 * r + 1 - i

    for node, incident in incidence.items():
        if node[0] == "M" or used[incident[0]]:
            continue
        eid, cur, dots = incident[0], node, 0
        while True:
            u, v, d = edges[eid]
            used[eid] = True
            dots += d
            cur = v if cur == u else u
            if cur[0] != "M":
                break
            remaining = [e for e in incidence[cur] if not used[e]]
            assert len(remaining) == 1
            eid = remaining[0]
        a, b = sorted((boundary_pos(node), boundary_pos(cur)))
        strands[(a, b)] = dots

    for eid0, flag in enumerate(used):
        if flag:
            continue
        start = edges[eid0][0]
        cur = start
        eid, dots = eid0, 0
        while True:
            u, v, d = edges[eid]
            used[eid] = True
            dots += d
            cur = v if cur == u else u
            if cur == start and all(used[e] for e in incidence[start]):
                break
            remaining = [e for e in incidence[cur] if not used[e]]
            eid = remaining[0]
        loops.append(dots)

    return strands, loops


def _trace_reduced(top: DecoratedDiagram, bottom: DecoratedDiagram) -> DecoratedDiagram:
    """Stack two diagrams known to compose without length loss."""
    strands, loops = _stack(top, bottom)
    for dots in loops:
        if dots != 1:
            raise DiagramError("loop without a single dot while stacking a reduced word")
    r = top.rank
    parity = {pair: d % 2 for pair, d in strands.items()}
    total = sum(parity.values())
    m = Matching(r, tuple(strands))
    if total % 2 == 1:
        if m.is_identity():
            raise DiagramError("odd dot count on the identity matching")
        return odd_on(m)
    dots = tuple(sorted(p for p, d in parity.items() if d))
    return DecoratedDiagram(m, dots)


# ---------------------------------------------------------------------------
# The word <-> diagram dictionary.


def g_word(n: int, i: int) -> Word:
    """E_n E_{n-1} ... E_i (empty for i = n+1)."""
    if not 1 <= i <= n + 1:
        raise ValueError(f"g index {i} out of range for n={n}")
    return tuple(range(n, i - 1, -1))


def h_word(n: int, j: int) -> Word:
    """E_n ... E_2 E_0 E_1 E_2 ... E_j (the j = 0 word stops at E_0)."""
    if not 0 <= j <= n:
        raise ValueError(f"h index {j} out of range for n={n}")
    head = tuple(range(n, 1, -1)) + (0,)
    if j == 0:
        return head
    return head + tuple(range(1, j + 1))


@functools.cache
def word_to_diagram(word: Word, rank: int) -> DecoratedDiagram:
    """The diagram of a reduced word, built by graphical stacking."""
    if not word:
        return DecoratedDiagram.identity(rank)
    head = word_to_diagram(word[:-1], rank)
    return _trace_reduced(head, generator(rank, word[-1]))


@functools.cache
def diagram_to_word(d: DecoratedDiagram) -> Word:
    """
    A reduced word for a basis diagram, built by peeling inner-most caps.

    Even diagrams peel through the chain words g (or the two-dot word h_0
    when the cap at position one is dotted); a single-dot diagram is the
    undotted diagram of its shrunken matching times the appropriate h word.
    """
    r = d.rank
    if d.is_identity():
        return ()
    n = r - 1
    if d.dot_count() == 1:
        if (r, r + 1) in d.pairs:
            shrunk = odd_on(d.matching.delete_chord(r))
            return diagram_to_word(shrunk)
        plain, dotted = innermost_caps(d)
        i = min(plain | dotted)
        m_i = d.matching.delete_chord(i)
        if m_i.is_identity():
            return canonical(h_word(n, i))
        return canonical(diagram_to_word(undotted(m_i)) + h_word(n, i))
    plain, dotted = innermost_caps(d)
    if dotted:
        d1 = remove_cap(d, 1)
        return canonical(diagram_to_word(d1) + h_word(n, 0))
    i = min(plain)
    return canonical(diagram_to_word(remove_cap(d, i)) + g_word(n, i))


def compose_words(top: DecoratedDiagram, bottom: DecoratedDiagram) -> tuple[int, DecoratedDiagram]:
    """Exact product of two basis diagrams: returns (k, d) with value (-[2])^k d."""
    if top.rank != bottom.rank:
        raise DiagramError(f"rank mismatch: {top.rank} vs {bottom.rank}")
    k, word = normalize(diagram_to_word(top) + diagram_to_word(bottom))
    return k, word_to_diagram(word, top.rank)


def max_letter(word: Iterable[int]) -> int:
    return max(word, default=-1)
