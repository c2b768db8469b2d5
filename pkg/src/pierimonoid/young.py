"""Operators on the Young lattice.

Rows are counted from the bottom (row 1 is the largest part) and a cell in
row ``r``, column ``c`` has content ``c - r``. A cover that adds a cell of
content ``r`` is the edge labelled ``r``; the operator ``u_r`` follows those
edges and sends everything else to :data:`ZERO`.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

from .permgroup import IntegerPermutation, PatternError
from .symcore import Expansion, Index, SymError, as_partition, composition_of_word, contains

Partition = Index

#: the zero of the free module on partitions; absorbs every operator
ZERO = None


class ContainmentError(SymError):
    pass


@dataclass(frozen=True)
class SkewShape:
    inner: Partition
    outer: Partition

    def __post_init__(self):
        if not contains(self.outer, self.inner):
            raise ContainmentError(f"{self.inner} is not contained in {self.outer}")

    def cells(self) -> list[tuple[int, int]]:
        """Cells (row, column), 1-based, in reading order: bottom row first, left to right."""
        out = []
        for r, top in enumerate(self.outer, start=1):
            bottom = self.inner[r - 1] if r - 1 < len(self.inner) else 0
            out.extend((r, c) for c in range(bottom + 1, top + 1))
        return out

    def reading_word(self) -> tuple[int, ...]:
        return tuple(c - r for r, c in self.cells())


def content_of_addition(lam: Partition, row: int) -> int:
    """Content of the cell added at the end of 0-based ``row``."""
    return (lam[row] if row < len(lam) else 0) - row


def covers_up(lam: Iterable[int]) -> list[tuple[int, Partition]]:
    lam = as_partition(lam)
    out = []
    for row in range(len(lam) + 1):
        cur = lam[row] if row < len(lam) else 0
        if row == 0 or lam[row - 1] > cur:
            new = list(lam) + ([0] if row == len(lam) else [])
            new[row] += 1
            out.append((cur - row, tuple(new)))
    return sorted(out)


def apply_u(r: int, lam: Optional[Partition]) -> Optional[Partition]:
    if lam is ZERO:
        return ZERO
    lam = tuple(lam)
    # a cell of content r sits in row i (0-based) at column r + i + 1
    for row in range(len(lam) + 1):
        cur = lam[row] if row < len(lam) else 0
        if cur - row == r:
            if row == 0 or lam[row - 1] > cur:
                new = list(lam) + ([0] if row == len(lam) else [])
                new[row] += 1
                return tuple(new)
            return ZERO
    return ZERO


def apply_word(word: Iterable[int], lam: Optional[Partition]) -> Optional[Partition]:
    """Apply u_w for w = s_{i1} s_{i2} ... s_{il}: cells of contents i1, i2, ... are added in that order.

    This matches border_word, where a cover by u_r multiplies on the right by s_r.
    """
    for r in word:
        lam = apply_u(r, lam)
        if lam is ZERO:
            return ZERO
    return lam


apply_in_order = apply_word


# ---------------------------------------------------------------------------
# border word


def border_word(lam: Iterable[int]) -> IntegerPermutation:
    """The 321-avoiding permutation read off the boundary of ``lam``.

    Vertical boundary steps carry the labels ..., -1, 0 and horizontal steps
    the labels 1, 2, ...; the step entering the point (x, y) horizontally sits
    at position x - y, a vertical step leaving (x, y) downwards at x - y + 1.
    """
    lam = as_partition(lam)
    ell = len(lam)
    images: dict[int, int] = {}
    vlabel = -ell + 1
    hlabel = 1
    x = 0
    for y in range(ell, 0, -1):
        for xx in range(x + 1, lam[y - 1] + 1):
            images[xx - y] = hlabel
            hlabel += 1
        x = lam[y - 1]
        images[x - y + 1] = vlabel
        vlabel += 1
    return IntegerPermutation(images)


# ---------------------------------------------------------------------------
# skew shape of a 321-avoiding permutation


def skew_from_321(p: IntegerPermutation, word: Iterable[int] | None = None) -> SkewShape:
    """A skew shape lam/mu whose row reading word is a reduced word of ``p``.

    Built one letter of ``word`` at a time (default: ``p.reduced_word()``)
    with :func:`extend_skew`, starting from the empty shape. Adding the cells
    of the result in reading order takes mu to lam.
    """
    witness = p.pattern_321()
    if witness is not None:
        raise PatternError(witness)
    if word is None:
        word = p.reduced_word()
    else:
        word = tuple(word)
        if IntegerPermutation.from_word(word) != p or len(word) != p.length():
            raise ValueError(f"{word} is not a reduced word of {p}")
    shape = SkewShape((), ())
    for d in word:
        shape = extend_skew(shape, d)
    return shape


def extend_skew(shape: SkewShape, d: int) -> SkewShape:
    """One induction step: make room for a cell of content ``d`` read last.

    The new cell slides down diagonal ``d`` to the first free cell. If it is
    not addable, whatever blocks it (the rows above, or the columns to the
    right) is pushed one step up its diagonals and mu is padded so the new
    cell becomes addable. The reading word gains ``d`` up to commutations.
    """
    cells = set(shape.cells())
    inner = {(r, c) for r, part in enumerate(shape.inner, start=1) for c in range(1, part + 1)}
    cells, inner = _insert_letter(d, cells, inner)
    return SkewShape(_cells_to_partition(inner), _cells_to_partition(cells | inner))


def _cells_to_partition(cells: set[tuple[int, int]]) -> Partition:
    rows: dict[int, int] = defaultdict(int)
    for r, c in cells:
        rows[r] = max(rows[r], c)
    if not rows:
        return ()
    return tuple(rows.get(r, 0) for r in range(1, max(rows) + 1))


def _insert_letter(d: int, skew: set, inner: set) -> tuple[set, set]:
    occupied = skew | inner

    def present(r: int, c: int) -> bool:
        return r < 1 or c < 1 or (r, c) in occupied

    # lowest cell of diagonal d not yet occupied
    r = max(1, 1 - d)
    while (r, r + d) in occupied:
        r += 1
    c = r + d
    below, left = present(r - 1, c), present(r, c - 1)
    if below and left:
        return skew | {(r, c)}, inner
    if below and not left:
        # push rows >= r one step up their diagonals, pad with mu on the left
        rows_used = {rr for rr, _ in occupied if rr >= r}
        moved_skew = {(rr + 1, cc + 1) if rr >= r else (rr, cc) for rr, cc in skew}
        moved_inner = {(rr + 1, cc + 1) if rr >= r else (rr, cc) for rr, cc in inner}
        moved_inner |= {(rr + 1, 1) for rr in rows_used}
        moved_inner |= {(r, cc) for cc in range(1, c)}
        return moved_skew | {(r, c)}, moved_inner
    if left and not below:
        cols_used = {cc for _, cc in occupied if cc >= c}
        moved_skew = {(rr + 1, cc + 1) if cc >= c else (rr, cc) for rr, cc in skew}
        moved_inner = {(rr + 1, cc + 1) if cc >= c else (rr, cc) for rr, cc in inner}
        moved_inner |= {(1, cc + 1) for cc in cols_used}
        moved_inner |= {(rr, c) for rr in range(1, r)}
        return moved_skew | {(r, c)}, moved_inner
    raise AssertionError(f"letter {d} blocked on both sides at {(r, c)}")


# ---------------------------------------------------------------------------
# Pieri series and interval functions


def young_H(k: int, lam: Iterable[int]) -> dict[Partition, int]:
    """H_k(lam): every path adding k cells with strictly increasing contents."""
    lam = as_partition(lam)
    out: dict[Partition, int] = defaultdict(int)

    def rec(cur: Partition, steps: int, last: float):
        if steps == 0:
            out[cur] += 1
            return
        for r, nxt in covers_up(cur):
            if r > last:
                rec(nxt, steps - 1, r)

    rec(lam, k, float("-inf"))
    return dict(out)


def apply_H(k: int, combo: dict[Partition, int]) -> dict[Partition, int]:
    out: dict[Partition, int] = defaultdict(int)
    for lam, c in combo.items():
        for nu, d in young_H(k, lam).items():
            out[nu] += c * d
    return {nu: c for nu, c in out.items() if c}


def is_consecutive_cycle_form(zeta: IntegerPermutation, k: int) -> bool:
    """True iff zeta is a product of disjoint cycles (a+b, ..., a+1, a) of total length k."""
    total = 0
    for cyc in zeta.cycles():
        top = cyc[0]
        if list(cyc) != list(range(top, top - len(cyc), -1)):
            return False
        total += len(cyc) - 1
    return total == k


def saturated_chains(lam: Partition, nu: Partition) -> Iterator[tuple[int, ...]]:
    """Content labels of all saturated chains lam -> nu, first cover first."""
    if lam == nu:
        yield ()
        return
    for r, nxt in covers_up(lam):
        if contains(nu, nxt):
            for rest in saturated_chains(nxt, nu):
                yield (r,) + rest


def young_K(lam: Iterable[int], nu: Iterable[int]) -> Expansion:
    lam, nu = as_partition(lam), as_partition(nu)
    if not contains(nu, lam):
        raise ContainmentError(f"{lam} is not contained in {nu}")
    return Expansion.from_counts("F", (composition_of_word(ch) for ch in saturated_chains(lam, nu)))
