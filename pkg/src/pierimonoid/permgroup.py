"""Finite-support permutations of the integers.

An :class:`IntegerPermutation` stores only its moved points, so elements of
S_Z with negative support cost nothing extra. Multiplication is composition
of functions: ``(p * q)(i) == p(q(i))``.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping


class PermutationError(ValueError):
    pass


class PatternError(PermutationError):
    """Raised when a 321 pattern is present; ``witness`` is the triple of positions."""

    def __init__(self, witness: tuple[int, int, int]):
        self.witness = witness
        super().__init__(f"321 pattern at positions {witness}")


class IntegerPermutation:
    __slots__ = ("_map", "_hash")

    def __init__(self, mapping: Mapping[int, int] | None = None):
        moved = {int(i): int(v) for i, v in (mapping or {}).items() if int(i) != int(v)}
        if set(moved) != set(moved.values()):
            raise PermutationError(f"not a bijection with finite support: {moved}")
        self._map = moved
        self._hash = hash(frozenset(moved.items()))

    # construction -------------------------------------------------------

    @classmethod
    def identity(cls) -> "IntegerPermutation":
        return cls()

    @classmethod
    def from_window(cls, images: Iterable[int], start: int = 1) -> "IntegerPermutation":
        """One-line notation over ``start, start+1, ...``; e.g. ``[1,4,2,6,3,5]``."""
        images = [int(x) for x in images]
        domain = range(start, start + len(images))
        if sorted(images) != list(domain):
            raise PermutationError(f"{images} is not a permutation of {start}..{start + len(images) - 1}")
        return cls(dict(zip(domain, images)))

    @classmethod
    def parse(cls, text: str, start: int = 1) -> "IntegerPermutation":
        text = text.strip()
        if not text:
            return cls()
        try:
            images = [int(x) for x in text.split(",")]
        except ValueError as exc:
            raise PermutationError(f"cannot parse permutation {text!r}") from exc
        return cls.from_window(images, start)

    @classmethod
    def simple(cls, r: int) -> "IntegerPermutation":
        """The simple reflection s_r exchanging r and r + 1."""
        return cls({r: r + 1, r + 1: r})

    @classmethod
    def transposition(cls, a: int, b: int) -> "IntegerPermutation":
        if a == b:
            return cls()
        return cls({a: b, b: a})

    @classmethod
    def from_cycle(cls, cycle: Iterable[int]) -> "IntegerPermutation":
        """The cycle (c1, c2, ..., cm) sending c1 -> c2 -> ... -> cm -> c1."""
        cycle = list(cycle)
        return cls({c: cycle[(i + 1) % len(cycle)] for i, c in enumerate(cycle)})

    @classmethod
    def from_word(cls, word: Iterable[int]) -> "IntegerPermutation":
        """Product s_{i1} s_{i2} ... of simple reflections."""
        p = cls()
        for r in word:
            p = p * cls.simple(r)
        return p

    # group structure ----------------------------------------------------

    def __call__(self, i: int) -> int:
        return self._map.get(i, i)

    def __mul__(self, other: "IntegerPermutation") -> "IntegerPermutation":
        points = set(self._map) | set(other._map)
        return IntegerPermutation({i: self(other(i)) for i in points})

    def inverse(self) -> "IntegerPermutation":
        return IntegerPermutation({v: i for i, v in self._map.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, IntegerPermutation) and self._map == other._map

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: "IntegerPermutation") -> bool:
        lo, hi = _span(self, other)
        return self.window(lo, hi) < other.window(lo, hi)

    @property
    def support(self) -> frozenset[int]:
        return frozenset(self._map)

    def is_identity(self) -> bool:
        return not self._map

    def bounds(self) -> tuple[int, int]:
        """Smallest interval containing all moved points; (1, 0) for the identity."""
        if not self._map:
            return (1, 0)
        return (min(self._map), max(self._map))

    def window(self, lo: int, hi: int) -> tuple[int, ...]:
        return tuple(self(i) for i in range(lo, hi + 1))

    def one_line(self, n: int | None = None) -> tuple[int, ...]:
        """Images of 1..n; ``n`` defaults to the largest moved point."""
        if n is None:
            n = max(self._map, default=0)
        return self.window(1, n)

    def __repr__(self) -> str:
        if not self._map:
            return "IntegerPermutation(id)"
        lo, hi = self.bounds()
        if lo >= 1:
            return f"IntegerPermutation({list(self.one_line())})"
        return f"IntegerPermutation({dict(sorted(self._map.items()))})"

    def to_string(self) -> str:
        return ",".join(map(str, self.one_line()))

    # statistics ---------------------------------------------------------

    def length(self) -> int:
        """Number of inversions; only pairs inside the moved-point span can be inverted."""
        lo, hi = self.bounds()
        w = self.window(lo, hi)
        return sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])

    def descents(self) -> list[int]:
        lo, hi = self.bounds()
        return [i for i in range(lo, hi) if self(i) > self(i + 1)]

    def reduced_word(self) -> tuple[int, ...]:
        """Reduced word built by stripping the leftmost descent until the identity remains."""
        p = self
        stripped = []
        while not p.is_identity():
            i = p.descents()[0]
            stripped.append(i)
            p = p * IntegerPermutation.simple(i)
        return tuple(reversed(stripped))

    def pattern_321(self) -> tuple[int, int, int] | None:
        lo, hi = self.bounds()
        pts = range(lo, hi + 1)
        for j in pts:
            wj = self(j)
            left = next((i for i in range(lo, j) if self(i) > wj), None)
            if left is None:
                continue
            right = next((k for k in range(j + 1, hi + 1) if self(k) < wj), None)
            if right is not None:
                return (left, j, right)
        return None

    def is_321_avoiding(self) -> bool:
        return self.pattern_321() is None

    def up_set(self) -> frozenset[int]:
        """Values pulled upward: {a : p^{-1}(a) < a}."""
        return frozenset(v for i, v in self._map.items() if i < v)

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its largest element."""
        seen: set[int] = set()
        out = []
        for start in sorted(self._map, reverse=True):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            nxt = self(start)
            while nxt != start:
                cyc.append(nxt)
                seen.add(nxt)
                nxt = self(nxt)
            out.append(tuple(cyc))
        return out


def _span(*perms: IntegerPermutation) -> tuple[int, int]:
    lo = min((p.bounds()[0] for p in perms if not p.is_identity()), default=1)
    hi = max((p.bounds()[1] for p in perms if not p.is_identity()), default=0)
    return lo, hi


multiply = IntegerPermutation.__mul__


def length(p: IntegerPermutation) -> int:
    return p.length()


def reduced_word(p: IntegerPermutation) -> tuple[int, ...]:
    return p.reduced_word()


def is_321_avoiding(p: IntegerPermutation) -> bool:
    return p.is_321_avoiding()


def up_set(zeta: IntegerPermutation) -> frozenset[int]:
    return zeta.up_set()


def all_permutations(lo: int, hi: int) -> Iterator[IntegerPermutation]:
    from itertools import permutations

    for images in permutations(range(lo, hi + 1)):
        yield IntegerPermutation.from_window(images, lo)
