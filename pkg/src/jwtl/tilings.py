"""
Cover-inclusive Dyck tilings, Hermite histories and the tiling
generating functions for projection coefficients.

Geometry: a Dyck path of size m runs from (0,0) to (2m,0); step k covers
the x-interval [k-1, k]. A unit cell is the diamond centred at (x, y) with
x + y odd; the cell lies between lower path L and upper path M when
L(x) < y < M(x) in terms of path heights. A tile is a ribbon of cells,
consecutive in x with heights moving by one, whose first and last cells sit
at the minimal height; its size is (number of cells - 1) / 2 and its height
is that minimal height.

Cover-inclusiveness: a tile moved down by (0,-2) must land entirely below
the lower path or entirely inside a single other tile.

A vertical Hermite history threads each tile from the lower-left down-step
edge of its leftmost cell to the upper-right down-step edge of its
rightmost cell and chains these lines into trajectories; every trajectory
ends on a down step of the upper path. Down steps of the upper path that
end no trajectory count as zero-length trajectories when ordering.
"""

from __future__ import annotations

import dataclasses
import functools
from typing import Iterable, Iterator, Sequence

from .diagrams import DecoratedDiagram, DiagramError, Matching, matching_from_dyck
from .qlaurent import QRat, qfrac, qint_rat

Cell = tuple[int, int]
Tile = tuple[Cell, ...]


def top_path(m: int) -> str:
    return "U" * m + "D" * m


def heights(path: str) -> list[int]:
    hs = [0]
    for step in path:
        if step == "U":
            hs.append(hs[-1] + 1)
        elif step == "D":
            hs.append(hs[-1] - 1)
        else:
            raise DiagramError(f"bad step {step!r}")
    return hs


def is_dyck(path: str) -> bool:
    hs = heights(path)
    return hs[-1] == 0 and min(hs) == 0 and len(path) % 2 == 0


def path_of_diagram(d: DecoratedDiagram | Matching) -> str:
    m = d if isinstance(d, Matching) else d.matching
    return m.dyck_word()


def region_cells(lower: str, upper: str) -> frozenset[Cell]:
    """Cells strictly between the two paths; the paths must be comparable."""
    if len(lower) != len(upper):
        raise DiagramError("paths of different sizes")
    if not (is_dyck(lower) and is_dyck(upper)):
        raise DiagramError("not Dyck words")
    hl, hu = heights(lower), heights(upper)
    if any(a > b for a, b in zip(hl, hu)):
        raise DiagramError(f"lower path {lower} is not below {upper}")
    cells = set()
    for x in range(1, len(lower)):
        for y in range(hl[x] + 1, hu[x], 2):
            cells.add((x, y))
    return frozenset(cells)


def is_tile(cells: Sequence[Cell]) -> bool:
    cs = sorted(cells)
    if len(cs) % 2 == 0 or not cs:
        return False
    xs = [x for x, _ in cs]
    ys = [y for _, y in cs]
    if xs != list(range(xs[0], xs[0] + len(cs))):
        return False
    if any(abs(b - a) != 1 for a, b in zip(ys, ys[1:])):
        return False
    return ys[0] == ys[-1] == min(ys)


def tile_height(tile: Tile) -> int:
    return min(y for _, y in tile)


def tile_size(tile: Tile) -> int:
    return (len(tile) - 1) // 2


def _column_floor(cells: frozenset[Cell]) -> dict[int, int]:
    floor: dict[int, int] = {}
    for x, y in cells:
        floor[x] = min(floor.get(x, y), y)
    return floor


def _cover_inclusive(tiles: Sequence[Tile], floor: dict[int, int]) -> bool:
    owner: dict[Cell, int] = {}
    for t, tile in enumerate(tiles):
        for c in tile:
            owner[c] = t
    for t, tile in enumerate(tiles):
        shifted = [(x, y - 2) for x, y in tile]
        if all(y < floor[x] for x, y in shifted):
            continue
        owners = {owner.get(c) for c in shifted}
        if len(owners) != 1 or None in owners or owners == {t}:
            return False
    return True


@dataclasses.dataclass(frozen=True)
class DyckTiling:
    lower: str
    upper: str
    tiles: tuple[Tile, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "tiles", tuple(sorted(tuple(sorted(t)) for t in self.tiles)))

    def size(self) -> int:
        return len(self.lower) // 2

    def cells(self) -> frozenset[Cell]:
        return frozenset(c for t in self.tiles for c in t)


def enumerate_cell_tilings(cells: frozenset[Cell]) -> tuple[tuple[Tile, ...], ...]:
    """All cover-inclusive partitions of a cell set into tiles, sorted."""
    floor = _column_floor(cells)
    order = sorted(cells)
    results: list[tuple[Tile, ...]] = []
    covered: set[Cell] = set()
    placed: list[Tile] = []

    def candidates(c0: Cell) -> Iterator[Tile]:
        x0, y0 = c0
        tile = [c0]

        def extend() -> Iterator[Tile]:
            x, y = tile[-1]
            if y == y0:
                yield tuple(tile)
            for dy in (1, -1):
                nxt = (x + 1, y + dy)
                if y + dy >= y0 and nxt in cells and nxt not in covered:
                    tile.append(nxt)
                    yield from extend()
                    tile.pop()

        yield from extend()

    def place() -> None:
        remaining = [c for c in order if c not in covered]
        if not remaining:
            if _cover_inclusive(placed, floor):
                results.append(tuple(sorted(placed)))
            return
        c0 = remaining[0]
        for tile in candidates(c0):
            shifted = [(x, y - 2) for x, y in tile]
            below = [y < floor[x] for x, y in shifted]
            if any(below) and not all(below):
                continue
            covered.update(tile)
            placed.append(tile)
            place()
            placed.pop()
            covered.difference_update(tile)

    place()
    return tuple(sorted(results))


@functools.cache
def enumerate_tilings(lower: str, upper: str) -> tuple[DyckTiling, ...]:
    """All cover-inclusive tilings of the region between two paths."""
    cells = region_cells(lower, upper)
    return tuple(DyckTiling(lower, upper, tiles) for tiles in enumerate_cell_tilings(cells))


# ---------------------------------------------------------------------------
# Hermite histories.

Edge = tuple[tuple[int, int], tuple[int, int]]


def _entry_edge(tile: Tile) -> Edge:
    (x, y) = min(tile)
    return ((x - 1, y), (x, y - 1))


def _exit_edge(tile: Tile) -> Edge:
    (x, y) = max(tile)
    return ((x, y + 1), (x + 1, y))


@dataclasses.dataclass(frozen=True)
class Trajectory:
    tiles: tuple[Tile, ...]
    exit_step: int

    def tile_count(self) -> int:
        return len(self.tiles)

    def bottom_height(self) -> int:
        return tile_height(self.tiles[0])

    def top_height(self) -> int:
        return tile_height(self.tiles[-1])

    def entry(self) -> Edge:
        return _entry_edge(self.tiles[0])


def vertical_history(t: DyckTiling) -> tuple[Trajectory, ...]:
    """Nonzero-length vertical trajectories, ordered by exit step along the upper path."""
    by_entry = {_entry_edge(tile): tile for tile in t.tiles}
    exits = {_exit_edge(tile) for tile in t.tiles}
    hu = heights(t.upper)
    out = []
    for tile in t.tiles:
        if _entry_edge(tile) in exits:
            continue
        chain = [tile]
        while _exit_edge(chain[-1]) in by_entry:
            chain.append(by_entry[_exit_edge(chain[-1])])
        (a, b) = _exit_edge(chain[-1])
        step = b[0]
        if not (hu[a[0]] == a[1] and hu[b[0]] == b[1]):
            raise DiagramError(f"trajectory exits off the upper path at step {step}")
        out.append(Trajectory(tuple(chain), step))
    return tuple(sorted(out, key=lambda tr: tr.exit_step))


def horizontal_history(t: DyckTiling) -> tuple[Trajectory, ...]:
    """Nonzero-length horizontal trajectories (the mirror construction)."""
    def entry(tile: Tile) -> Edge:
        (x, y) = min(tile)
        return ((x - 1, y), (x, y + 1))

    def exit_(tile: Tile) -> Edge:
        (x, y) = max(tile)
        return ((x, y - 1), (x + 1, y))

    by_entry = {entry(tile): tile for tile in t.tiles}
    exits = {exit_(tile) for tile in t.tiles}
    hu = heights(t.upper)
    out = []
    for tile in t.tiles:
        if entry(tile) in exits:
            continue
        chain = [tile]
        while exit_(chain[-1]) in by_entry:
            chain.append(by_entry[exit_(chain[-1])])
        (a, b) = entry(chain[0])
        step = b[0]
        if not (hu[a[0]] == a[1] and hu[b[0]] == b[1]):
            raise DiagramError("horizontal trajectory starts off the upper path")
        out.append(Trajectory(tuple(chain), step))
    return tuple(sorted(out, key=lambda tr: tr.exit_step))


def trajectory_slots(t: DyckTiling) -> tuple[Trajectory | None, ...]:
    """All n trajectory slots by upper-path down step; None marks zero length."""
    nonzero = {tr.exit_step: tr for tr in vertical_history(t)}
    hu = heights(t.upper)
    slots = []
    for step in range(1, len(t.upper) + 1):
        if hu[step] < hu[step - 1]:
            slots.append(nonzero.get(step))
    return tuple(slots)


def mirror(t: DyckTiling) -> DyckTiling:
    n = len(t.lower)
    flip = {"U": "D", "D": "U"}
    lower = "".join(flip[s] for s in reversed(t.lower))
    upper = "".join(flip[s] for s in reversed(t.upper))
    tiles = tuple(tuple(sorted((n - x, y) for x, y in tile)) for tile in t.tiles)
    return DyckTiling(lower, upper, tiles)


# ---------------------------------------------------------------------------
# Deletion.


def deletion(t: DyckTiling) -> DyckTiling:
    """
    Peel one strand: remove the first vertical trajectory, contract the
    up-down pair of the lower path beneath its foot, and shift what remains.
    Surviving cells left uncovered by the removed tiles become unit tiles.
    """
    if t.upper != top_path(t.size()):
        raise DiagramError("deletion is defined under the top path")
    trajs = vertical_history(t)
    if not trajs:
        raise DiagramError("no nonzero trajectory to delete")
    first = trajs[0]
    ((ax, ay), (bx, by)) = first.entry()
    x0 = bx
    hl = heights(t.lower)
    if not (hl[x0 - 2] + 1 == hl[x0 - 1] and hl[x0 - 1] - 1 == hl[x0]):
        raise DiagramError("trajectory foot is not above an up-down pair of the lower path")
    lower = t.lower[: x0 - 2] + t.lower[x0:]
    upper = top_path(t.size() - 1)
    new_cells = region_cells(lower, upper)

    def image(cell: Cell) -> Cell | None:
        x, y = cell
        if x in (x0 - 1, x0):
            return None
        nx = x if x < x0 else x - 2
        return (nx, y) if (nx, y) in new_cells else None

    removed = set(first.tiles)
    tiles: list[Tile] = []
    taken: set[Cell] = set()
    for tile in t.tiles:
        if tile in removed:
            continue
        img = tuple(sorted(c for c in map(image, tile) if c is not None))
        if not img:
            continue
        if not is_tile(img):
            raise DiagramError(f"deletion broke tile {tile} into {img}")
        tiles.append(img)
        taken.update(img)
    for c in sorted(new_cells - taken):
        tiles.append((c,))
    return DyckTiling(lower, upper, tuple(tiles))


# ---------------------------------------------------------------------------
# Bicolored histories and the generating functions.


def q4_counts(t: DyckTiling, m: int) -> tuple[int, ...]:
    """Tile counts of the trajectory slots after the m-th nonzero trajectory."""
    slots = trajectory_slots(t)
    nonzero = [i for i, s in enumerate(slots) if s is not None]
    if not 1 <= m <= len(nonzero):
        raise DiagramError(f"no {m}-th nonzero trajectory")
    g = nonzero[m - 1]
    return tuple(0 if s is None else s.tile_count() for s in slots[g + 1:])


def _weakly_decreasing(ns: Sequence[int]) -> bool:
    return all(a >= b for a, b in zip(ns, ns[1:]))


@dataclasses.dataclass(frozen=True)
class BicoloredHistory:
    tiling: DyckTiling
    green_index: int
    reds: tuple[Trajectory, ...]
    green: Trajectory
    remainder_cells: frozenset[Cell]


def enumerate_bicolored(lower: str) -> tuple[BicoloredHistory, ...]:
    """All admissible colorings (tiling, green position) over the top path."""
    m_size = len(lower) // 2
    if lower == top_path(m_size):
        raise DiagramError("the top path admits no bicolored history")
    out = []
    for t in enumerate_tilings(lower, top_path(m_size)):
        trajs = vertical_history(t)
        for m in range(1, len(trajs) + 1):
            if not _weakly_decreasing(q4_counts(t, m)):
                continue
            reds, green, rest = trajs[: m - 1], trajs[m - 1], trajs[m:]
            remainder = frozenset(c for tr in rest for tile in tr.tiles for c in tile)
            out.append(BicoloredHistory(t, m, reds, green, remainder))
    return tuple(out)


def admissible_by_deletion(t: DyckTiling, m: int) -> bool:
    """The equivalent acceptance test: m deletions leave only unit tiles."""
    cur = t
    for _ in range(m):
        cur = deletion(cur)
    return all(len(tile) == 1 for tile in cur.tiles)


def _even_tile_weight(h: int) -> QRat:
    if h == 1:
        return qfrac([1], [2])
    return qfrac([h, 2 * h - 2], [2 * h, h - 1])


def _wt_tile_weight(h: int) -> QRat:
    return qfrac([h], [h + 1])


def _red_weight(tr: Trajectory) -> QRat:
    ht, hb = tr.top_height(), tr.bottom_height()
    if hb == 1:
        return qfrac([ht], [2 * ht])
    return qfrac([ht, 2 * (hb - 1)], [2 * ht, hb - 1])


def _green_weight(tr: Trajectory) -> QRat:
    ht, hb = tr.top_height(), tr.bottom_height()
    return qfrac([ht, ht + 1 - hb], [2 * ht, ht + 1])


def wt_cells(cells: frozenset[Cell]) -> QRat:
    """Type-A weight of a region: sum over its tilings of prod [h]/[h+1]."""
    total = QRat.zero()
    for tiles in enumerate_cell_tilings(cells):
        w = QRat.one()
        for tile in tiles:
            w = w * _wt_tile_weight(tile_height(tile))
        total = total + w
    return total


def wt_A(lower: str) -> QRat:
    """Type-A generating function of tilings from a path up to the top path."""
    return wt_cells(region_cells(lower, top_path(len(lower) // 2)))


def admissible_for_dots(t: DyckTiling, dotted: Iterable[tuple[int, int]]) -> bool:
    """No tile may span the full strip of columns over a dotted chord."""
    for (a, b) in dotted:
        lo, hi = a - 1, b
        for tile in t.tiles:
            xs = [x for x, _ in tile]
            if min(xs) <= lo and hi <= max(xs):
                return False
    return True


def z_even(d: DecoratedDiagram) -> QRat:
    """Tiling generating function for a diagram with an even number of dots."""
    if d.dot_count() % 2:
        raise ValueError("z_even expects an even number of dots")
    lower = path_of_diagram(d)
    total = QRat.zero()
    for t in enumerate_tilings(lower, top_path(d.rank)):
        if not admissible_for_dots(t, d.dots):
            continue
        w = QRat.one()
        for tile in t.tiles:
            w = w * _even_tile_weight(tile_height(tile))
        total = total + w
    return total


def z_prime(d: DecoratedDiagram) -> QRat:
    """Bicolored-history generating function for a single-dot diagram."""
    if d.dot_count() != 1:
        raise ValueError("z_prime expects exactly one dot")
    lower = path_of_diagram(d)
    total = QRat.zero()
    for h in enumerate_bicolored(lower):
        w = _green_weight(h.green) * wt_cells(h.remainder_cells)
        doubling = 0
        for red in h.reds:
            w = w * _red_weight(red)
            if red.bottom_height() == 1:
                doubling += 1
        total = total + w * QRat.integer(2 ** doubling)
    return total


def count_tilings_to_top(n: int) -> int:
    """Total number of tilings from all lower paths of size n to the top path."""
    from itertools import product

    total = 0
    for steps in product("UD", repeat=2 * n):
        word = "".join(steps)
        if not is_dyck(word):
            continue
        total += len(enumerate_tilings(word, top_path(n)))
    return total
