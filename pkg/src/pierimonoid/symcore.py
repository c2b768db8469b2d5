"""Partitions, compositions and exact basis changes for (quasi)symmetric functions.

Bases handled here:

* ``M``  monomial quasisymmetric, indexed by compositions
* ``F``  fundamental quasisymmetric, indexed by compositions
* ``m``  monomial symmetric, indexed by partitions
* ``h``  complete homogeneous symmetric, indexed by partitions
* ``s``  Schur, indexed by partitions
* ``R``  ribbon (noncommutative), indexed by compositions
* ``hN`` noncommutative complete homogeneous words, indexed by compositions

Every coefficient is a Python ``int``; all the systems we solve are
unitriangular over the integers, so no rationals ever appear.
"""

from __future__ import annotations

import itertools
import json
from collections import defaultdict
from functools import lru_cache
from typing import Iterable, Iterator, Mapping

Index = tuple[int, ...]

COMPOSITION_BASES = frozenset({"M", "F", "R", "hN"})
PARTITION_BASES = frozenset({"m", "h", "s"})
BASES = COMPOSITION_BASES | PARTITION_BASES


class SymError(ValueError):
    """Base class for errors raised by this module."""


class InvalidDescentError(SymError):
    pass


class SizeMismatchError(SymError):
    pass


class BasisError(SymError):
    pass


class NotSymmetricError(SymError):
    """Raised when an M-expansion is not constant on rearrangement classes.

    ``witness`` holds two rearranged compositions carrying different
    coefficients.
    """

    def __init__(self, witness: tuple[Index, Index]):
        self.witness = witness
        super().__init__(f"not symmetric: M{list(witness[0])} and M{list(witness[1])} differ")


# ---------------------------------------------------------------------------
# partitions and compositions


def is_partition(parts: Iterable[int]) -> bool:
    parts = tuple(parts)
    return all(p > 0 for p in parts) and all(parts[i] >= parts[i + 1] for i in range(len(parts) - 1))


def as_partition(parts: Iterable[int]) -> Index:
    parts = tuple(int(p) for p in parts)
    if not is_partition(parts):
        raise SymError(f"{parts} is not a partition")
    return parts


def as_composition(parts: Iterable[int]) -> Index:
    parts = tuple(int(p) for p in parts)
    if any(p <= 0 for p in parts):
        raise SymError(f"{parts} is not a composition")
    return parts


@lru_cache(maxsize=None)
def partitions(n: int, max_part: int | None = None) -> tuple[Index, ...]:
    """All partitions of ``n`` with parts at most ``max_part``, in reverse lex order."""
    if max_part is None:
        max_part = n
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def compositions(n: int) -> tuple[Index, ...]:
    """All compositions of ``n``, in lexicographic order."""
    if n == 0:
        return ((),)
    return tuple(sorted(composition_from_descents(n, set(d))
                        for r in range(n) for d in itertools.combinations(range(1, n), r)))


def descent_set(alpha: Iterable[int]) -> frozenset[int]:
    """Partial sums of ``alpha`` except the last: D(2,1,1) = {2, 3}."""
    alpha = tuple(alpha)
    return frozenset(itertools.accumulate(alpha[:-1]))


def composition_from_descents(n: int, descents: Iterable[int]) -> Index:
    descents = sorted(set(descents))
    if any(d < 1 or d > n - 1 for d in descents):
        raise InvalidDescentError(f"descents {descents} not inside 1..{n - 1}")
    if n == 0:
        return ()
    cuts = [0] + descents + [n]
    return tuple(cuts[i + 1] - cuts[i] for i in range(len(cuts) - 1))


def composition_of_word(labels: Iterable) -> Index:
    """Descent composition of a sequence: position ``i`` is a descent iff labels[i-1] > labels[i]."""
    labels = list(labels)
    des = [i for i in range(1, len(labels)) if labels[i - 1] > labels[i]]
    return composition_from_descents(len(labels), des)


def refines(beta: Iterable[int], alpha: Iterable[int]) -> bool:
    """True iff ``beta`` is a refinement of ``alpha`` (beta <= alpha), i.e. D(alpha) is in D(beta)."""
    beta, alpha = tuple(beta), tuple(alpha)
    if sum(beta) != sum(alpha):
        raise SizeMismatchError(f"|{beta}| != |{alpha}|")
    return descent_set(alpha) <= descent_set(beta)


def refinements(alpha: Index) -> Iterator[Index]:
    n = sum(alpha)
    base = descent_set(alpha)
    free = [i for i in range(1, n) if i not in base]
    for r in range(len(free) + 1):
        for extra in itertools.combinations(free, r):
            yield composition_from_descents(n, base | set(extra))


def coarsenings(alpha: Index) -> Iterator[Index]:
    n = sum(alpha)
    base = sorted(descent_set(alpha))
    for r in range(len(base) + 1):
        for keep in itertools.combinations(base, r):
            yield composition_from_descents(n, keep)


def dominates(lam: Index, mu: Index) -> bool:
    """Dominance order lam >= mu (partial sums of lam bound those of mu)."""
    a = b = 0
    for i in range(max(len(lam), len(mu))):
        a += lam[i] if i < len(lam) else 0
        b += mu[i] if i < len(mu) else 0
        if a < b:
            return False
    return True


def conjugate(lam: Index) -> Index:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0]))


def contains(outer: Index, inner: Index) -> bool:
    return len(inner) <= len(outer) and all(inner[i] <= outer[i] for i in range(len(inner)))


# ---------------------------------------------------------------------------
# expansions


class Expansion:
    """Sparse integer combination of basis elements of a single basis.

    Immutable; zero coefficients are never stored.
    """

    __slots__ = ("basis", "_terms")

    def __init__(self, basis: str, terms: Mapping[Iterable[int], int] | None = None):
        if basis not in BASES:
            raise BasisError(f"unknown basis {basis!r}")
        clean: dict[Index, int] = {}
        for idx, c in (terms or {}).items():
            idx = tuple(int(x) for x in idx)
            if basis in PARTITION_BASES and not is_partition(idx):
                raise SymError(f"basis {basis} is indexed by partitions, got {idx}")
            if basis in COMPOSITION_BASES and any(x <= 0 for x in idx):
                raise SymError(f"basis {basis} is indexed by compositions, got {idx}")
            c = int(c)
            if c:
                clean[idx] = clean.get(idx, 0) + c
        self.basis = basis
        self._terms = {k: v for k, v in sorted(clean.items()) if v}

    @classmethod
    def from_counts(cls, basis: str, items: Iterable[Index]) -> "Expansion":
        acc: dict[Index, int] = defaultdict(int)
        for idx in items:
            acc[idx] += 1
        return cls(basis, acc)

    @classmethod
    def one(cls, basis: str) -> "Expansion":
        return cls(basis, {(): 1})

    @property
    def terms(self) -> dict[Index, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __getitem__(self, idx: Iterable[int]) -> int:
        return self._terms.get(tuple(idx), 0)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __iter__(self):
        return iter(self._terms)

    def _check(self, other: "Expansion") -> None:
        if not isinstance(other, Expansion) or other.basis != self.basis:
            raise BasisError("cannot combine expansions in different bases")

    def __add__(self, other: "Expansion") -> "Expansion":
        self._check(other)
        acc = dict(self._terms)
        for k, v in other.items():
            acc[k] = acc.get(k, 0) + v
        return Expansion(self.basis, acc)

    def __neg__(self) -> "Expansion":
        return Expansion(self.basis, {k: -v for k, v in self.items()})

    def __sub__(self, other: "Expansion") -> "Expansion":
        return self + (-other)

    def __mul__(self, c: int) -> "Expansion":
        return Expansion(self.basis, {k: c * v for k, v in self.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, Expansion) and self.basis == other.basis and self._terms == other._terms

    def __hash__(self):
        return hash((self.basis, tuple(self._terms.items())))

    def degrees(self) -> set[int]:
        return {sum(k) for k in self._terms}

    def is_positive(self) -> bool:
        return all(v > 0 for v in self._terms.values())

    def __repr__(self) -> str:
        return f"Expansion({self.basis!r}, {self._terms!r})"

    def pretty(self) -> str:
        """Readable sum; partition bases list the largest index first, ``1`` is the unit."""
        if not self._terms:
            return "0"
        out = []
        items = sorted(self._terms.items(), reverse=self.basis in PARTITION_BASES)
        for i, (idx, c) in enumerate(items):
            name = f"{self.basis}[{','.join(map(str, idx))}]" if idx else ""
            mag = abs(c)
            body = (name if mag == 1 else f"{mag}*{name}") if name else str(mag)
            if i == 0:
                out.append(("-" if c < 0 else "") + body)
            else:
                out.append(("- " if c < 0 else "+ ") + body)
        return " ".join(out)

    def to_dict(self) -> dict:
        return {"basis": self.basis,
                "terms": [{"index": list(k), "coeff": v} for k, v in self._terms.items()]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: Mapping) -> "Expansion":
        return cls(data["basis"], {tuple(t["index"]): t["coeff"] for t in data["terms"]})

    @classmethod
    def from_json(cls, text: str) -> "Expansion":
        return cls.from_dict(json.loads(text))


def _require(e: Expansion, basis: str) -> None:
    if e.basis != basis:
        raise BasisError(f"expected an expansion in basis {basis}, got {e.basis}")


# ---------------------------------------------------------------------------
# quasisymmetric changes of basis


def F_to_M(e: Expansion) -> Expansion:
    _require(e, "F")
    acc: dict[Index, int] = defaultdict(int)
    for alpha, c in e.items():
        for beta in refinements(alpha):
            acc[beta] += c
    return Expansion("M", acc)


def M_to_F(e: Expansion) -> Expansion:
    """Moebius inversion on the Boolean lattice of descent sets."""
    _require(e, "M")
    acc: dict[Index, int] = defaultdict(int)
    for alpha, c in e.items():
        for beta in refinements(alpha):
            acc[beta] += c * (-1) ** (len(beta) - len(alpha))
    return Expansion("F", acc)


def is_symmetric(e: Expansion) -> bool:
    return _asymmetry_witness(e) is None


def _asymmetry_witness(e: Expansion) -> tuple[Index, Index] | None:
    _require(e, "M")
    for alpha, c in e.items():
        for beta in set(itertools.permutations(alpha)):
            if e[beta] != c:
                return (alpha, beta)
    return None


def M_to_m(e: Expansion) -> Expansion:
    witness = _asymmetry_witness(e)
    if witness is not None:
        raise NotSymmetricError(witness)
    return Expansion("m", {tuple(sorted(a, reverse=True)): c
                           for a, c in e.items() if list(a) == sorted(a, reverse=True)})


# ---------------------------------------------------------------------------
# Kostka numbers and Schur expansions


def semistandard_tableaux(shape: Index, content: Index) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Backtracking enumeration of SSYT of ``shape`` with the given content.

    Letter ``v`` occupies a horizontal strip on top of the cells used by the
    smaller letters, so the intermediate shapes interlace.
    """
    shape, content = tuple(shape), tuple(content)
    nrows = len(shape)
    if sum(shape) != sum(content):
        return

    def strips(old: tuple[int, ...], count: int, row: int, new: list[int]):
        if row == nrows:
            if count == 0:
                yield tuple(new)
            return
        cap = shape[row] if row == 0 else min(shape[row], old[row - 1])
        for take in range(min(cap - old[row], count), -1, -1):
            new.append(old[row] + take)
            yield from strips(old, count - take, row + 1, new)
            new.pop()

    def rec(filled: tuple[int, ...], letter: int, rows: tuple[tuple[int, ...], ...]):
        if letter == len(content):
            yield rows
            return
        for nxt in strips(filled, content[letter], 0, []):
            grown = tuple(r + (letter + 1,) * (nxt[i] - filled[i]) for i, r in enumerate(rows))
            yield from rec(nxt, letter + 1, grown)

    yield from rec((0,) * nrows, 0, ((),) * nrows)


@lru_cache(maxsize=None)
def kostka(lam: Index, mu: Index) -> int:
    """Number of semistandard tableaux of shape ``lam`` and content ``mu``."""
    lam, mu = tuple(lam), tuple(mu)
    if sum(lam) != sum(mu):
        raise SizeMismatchError(f"|{lam}| != |{mu}|")
    if not dominates(lam, mu):
        return 0
    return sum(1 for _ in semistandard_tableaux(lam, mu))


def s_to_m(e: Expansion) -> Expansion:
    _require(e, "s")
    acc: dict[Index, int] = defaultdict(int)
    for lam, c in e.items():
        for mu in partitions(sum(lam)):
            k = kostka(lam, mu)
            if k:
                acc[mu] += c * k
    return Expansion("m", acc)


def m_to_s(e: Expansion) -> Expansion:
    """Peel off leading terms in dominance order: s_lam = m_lam + lower terms."""
    _require(e, "m")
    rest = dict(e.terms)
    out: dict[Index, int] = {}
    while rest:
        # lexicographically largest partition is maximal in dominance among those present
        lam = max(rest)
        c = rest[lam]
        out[lam] = c
        for mu in partitions(sum(lam)):
            k = kostka(lam, mu)
            if k:
                rest[mu] = rest.get(mu, 0) - c * k
                if rest[mu] == 0:
                    del rest[mu]
    return Expansion("s", out)


def F_to_s(e: Expansion) -> Expansion:
    _require(e, "F")
    return m_to_s(M_to_m(F_to_M(e)))


def convert(e: Expansion, basis: str) -> Expansion:
    """Convert an ``F`` or ``M`` expansion to one of F, M, m, s."""
    if e.basis == basis:
        return e
    if e.basis == "F":
        m = F_to_M(e)
    elif e.basis == "M":
        m = e
    else:
        raise BasisError(f"cannot convert from basis {e.basis}")
    if basis == "M":
        return m
    if basis == "F":
        return M_to_F(m)
    if basis == "m":
        return M_to_m(m)
    if basis == "s":
        return m_to_s(M_to_m(m))
    raise BasisError(f"cannot convert to basis {basis}")


# ---------------------------------------------------------------------------
# oracles and ribbons


def standard_tableaux(shape: Index) -> Iterator[dict[int, tuple[int, int]]]:
    """Standard Young tableaux as maps letter -> (row, column), rows counted from 0."""
    shape = tuple(shape)
    n = sum(shape)

    def rec(filled: list[int], letter: int, where: dict[int, tuple[int, int]]):
        if letter > n:
            yield dict(where)
            return
        for r in range(len(shape)):
            if filled[r] < shape[r] and (r == 0 or filled[r - 1] > filled[r]):
                where[letter] = (r, filled[r])
                filled[r] += 1
                yield from rec(filled, letter + 1, where)
                filled[r] -= 1
                del where[letter]

    yield from rec([0] * len(shape), 1, {})


def schur_in_F(lam: Iterable[int]) -> Expansion:
    """s_lam as the sum over standard tableaux T of F indexed by the descents of T.

    ``i`` is a descent of T when ``i + 1`` sits in a strictly lower row.
    """
    lam = as_partition(lam)
    n = sum(lam)
    acc: dict[Index, int] = defaultdict(int)
    for t in standard_tableaux(lam):
        des = [i for i in range(1, n) if t[i + 1][0] > t[i][0]]
        acc[composition_from_descents(n, des)] += 1
    return Expansion("F", acc)


def ribbon_from_h(alpha: Iterable[int]) -> Expansion:
    alpha = as_composition(alpha)
    return Expansion("hN", {beta: (-1) ** (len(alpha) - len(beta)) for beta in coarsenings(alpha)})


def h_from_ribbons(alpha: Iterable[int]) -> Expansion:
    alpha = as_composition(alpha)
    return Expansion("R", {beta: 1 for beta in coarsenings(alpha)})
