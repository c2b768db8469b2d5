"""The affine symmetric group in window notation.

An element of the k-affine symmetric group is a bijection ``u`` of the
integers with ``u(i + n) = u(i) + n`` for ``n = k + 1``, stored by its main
window ``u(1), ..., u(n)``. Operators act on the right: ``u * s_i`` swaps the
entries in positions ``i + mn`` and ``i + 1 + mn``, and ``u * t_ab`` swaps
positions ``a + mn`` and ``b + mn``. The value 0 counts as negative.
"""

from __future__ import annotations

import itertools
import random
from collections import defaultdict
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Callable, Iterable, Iterator, Optional, Sequence

from .symcore import (
    Expansion,
    Index,
    M_to_F,
    SymError,
    as_partition,
    composition_of_word,
    compositions,
    conjugate,
    partitions,
)

ZERO = None

Label = tuple[int, int]
Word = tuple[Label, ...]


class WindowError(ValueError):
    pass


class LabelError(ValueError):
    pass


class NotGrassmannianError(ValueError):
    pass


class AffinePermutation:
    __slots__ = ("k", "n", "window", "_hash")

    def __init__(self, k: int, window: Iterable[int]):
        window = tuple(int(x) for x in window)
        n = k + 1
        if k < 1:
            raise WindowError("k must be positive")
        if len(window) != n:
            raise WindowError(f"window must have k+1={n} entries, got {len(window)}")
        if len({x % n for x in window}) != n:
            raise WindowError(f"window entries of {window} are not distinct mod {n}")
        if sum(window) != n * (n + 1) // 2:
            raise WindowError(f"window {window} must sum to {n * (n + 1) // 2}")
        self.k, self.n, self.window = k, n, window
        self._hash = hash((k, window))

    @classmethod
    def identity(cls, k: int) -> "AffinePermutation":
        return cls(k, range(1, k + 2))

    @classmethod
    def parse(cls, k: int, text: str) -> "AffinePermutation":
        try:
            entries = [int(x) for x in text.split(",")]
        except ValueError as exc:
            raise WindowError(f"cannot parse window {text!r}") from exc
        return cls(k, entries)

    @classmethod
    def simple(cls, k: int, i: int) -> "AffinePermutation":
        return cls.identity(k).times_simple(i)

    def __call__(self, i: int) -> int:
        q, r = divmod(i - 1, self.n)
        return self.window[r] + q * self.n

    def position(self, value: int) -> int:
        """The inverse map: the position holding ``value``."""
        for p, x in enumerate(self.window, start=1):
            if (value - x) % self.n == 0:
                return p + (value - x)
        raise AssertionError("unreachable")

    def __mul__(self, other: "AffinePermutation") -> "AffinePermutation":
        return AffinePermutation(self.k, (self(other(i)) for i in range(1, self.n + 1)))

    def __eq__(self, other) -> bool:
        return isinstance(other, AffinePermutation) and self.k == other.k and self.window == other.window

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: "AffinePermutation") -> bool:
        return (self.k, self.window) < (other.k, other.window)

    def __repr__(self) -> str:
        return f"AffinePermutation({self.k}, {list(self.window)})"

    def to_string(self) -> str:
        return ",".join(map(str, self.window))

    def swapped(self, a: int, b: int) -> "AffinePermutation":
        """``u * t_ab``: exchange the entries of positions a + mn and b + mn."""
        d = b - a
        if d % self.n == 0:
            raise LabelError(f"positions {a} and {b} are congruent mod {self.n}")
        out = []
        for p in range(1, self.n + 1):
            if (p - a) % self.n == 0:
                out.append(self(p + d))
            elif (p - b) % self.n == 0:
                out.append(self(p - d))
            else:
                out.append(self(p))
        return AffinePermutation(self.k, out)

    def times_simple(self, i: int) -> "AffinePermutation":
        return self.swapped(i, i + 1)


def affine_length(u: AffinePermutation) -> int:
    """#{(i, j) : 1 <= i <= n, i < j, u(i) > u(j)}."""
    n = u.n
    total = 0
    for i in range(1, n + 1):
        for j0 in range(1, n + 1):
            # j = j0 + m n with j > i and u(j0) + m n < u(i)
            m_min = 0 if j0 > i else 1
            m_max = (u(i) - u(j0) - 1) // n
            total += max(0, m_max - m_min + 1)
    return total


def is_0_grassmannian(u: AffinePermutation) -> bool:
    pos = [u.position(v) for v in range(1, u.n + 1)]
    return all(pos[t] < pos[t + 1] for t in range(len(pos) - 1))


def _sign_range(u: AffinePermutation) -> range:
    spread = max(abs(x) for x in u.window) // u.n + 2
    return range(1 - spread * u.n, spread * u.n + 1)


def core_from_grassmannian(u: AffinePermutation) -> Index:
    """The (k+1)-core traced by the signs of the entries of ``u``.

    Reading the entries left to right, a non-positive entry is a step down
    and a positive one a step right; the column over a step right is as tall
    as the number of non-positive entries still to come.
    """
    if not is_0_grassmannian(u):
        raise NotGrassmannianError(f"{u} is not 0-grassmannian")
    seq = [u(p) for p in _sign_range(u)]
    heights = []
    negatives_after = 0
    for x in reversed(seq):
        if x <= 0:
            negatives_after += 1
        elif negatives_after:
            heights.append(negatives_after)
    heights.sort(reverse=True)
    return conjugate(tuple(heights))


def hook_lengths(lam: Index) -> list[int]:
    conj = conjugate(lam)
    return [lam[i] - j + conj[j] - i - 1 for i in range(len(lam)) for j in range(lam[i])]


def is_core(lam: Iterable[int], n: int) -> bool:
    return n not in hook_lengths(as_partition(lam))


# ---------------------------------------------------------------------------
# weak order and the k-Schur side


def weak_cover(u: Optional[AffinePermutation], i: int) -> Optional[AffinePermutation]:
    if u is ZERO:
        return ZERO
    if not 0 <= i <= u.k:
        raise LabelError(f"residue {i} outside 0..{u.k}")
    if u(i) > u(i + 1):
        return ZERO
    v = u.times_simple(i)
    return v if is_0_grassmannian(v) else ZERO


def apply_weak(seq: Iterable[int], u: Optional[AffinePermutation]) -> Optional[AffinePermutation]:
    """Apply ``s_{i1}``, then ``s_{i2}``, ... on the right."""
    for i in seq:
        u = weak_cover(u, i)
        if u is ZERO:
            return ZERO
    return u


def is_cyclically_increasing(seq: Sequence[int], k: int) -> bool:
    n = k + 1
    seq = list(seq)
    if any(not 0 <= x <= k for x in seq) or len(set(seq)) != len(seq):
        return False
    missing = [j for j in range(n) if j not in seq]
    if not missing:
        return False
    j0 = missing[0]
    keys = [(x - j0) % n for x in seq]
    return all(keys[t] < keys[t + 1] for t in range(len(keys) - 1))


@lru_cache(maxsize=None)
def cyclically_increasing(m: int, k: int) -> tuple[tuple[int, ...], ...]:
    return tuple(s for s in itertools.permutations(range(k + 1), m) if is_cyclically_increasing(s, k))


def weak_H(m: int, u: AffinePermutation) -> dict[AffinePermutation, int]:
    if not 1 <= m <= u.k:
        raise ValueError(f"m must lie in 1..{u.k}")
    out: dict[AffinePermutation, int] = defaultdict(int)
    for seq in cyclically_increasing(m, u.k):
        v = apply_weak(seq, u)
        if v is not ZERO:
            out[v] += 1
    return dict(out)


def apply_weak_H(m: int, combo: dict[AffinePermutation, int]) -> dict[AffinePermutation, int]:
    out: dict[AffinePermutation, int] = defaultdict(int)
    for x, c in combo.items():
        for y, d in weak_H(m, x).items():
            out[y] += c * d
    return {y: c for y, c in out.items() if c}


def weak_pairing(alpha: Iterable[int], u: AffinePermutation, w: AffinePermutation) -> int:
    """<H_alpha(u), w>, applying H_{alpha_1} first."""
    combo = {u: 1}
    for part in alpha:
        combo = apply_weak_H(part, combo)
    return combo.get(w, 0)


def weak_K(u: AffinePermutation, w: AffinePermutation) -> Expansion:
    """Sum of <H_alpha(u), w> M_alpha, converted to the F basis."""
    rank = affine_length(w) - affine_length(u)
    if rank < 0:
        return Expansion("F")
    terms = {}
    for alpha in compositions(rank):
        if max(alpha, default=0) <= u.k:
            c = weak_pairing(alpha, u, w)
            if c:
                terms[alpha] = c
    return M_to_F(Expansion("M", terms))


def v_m(k: int, m: int) -> AffinePermutation:
    """The 0-grassmannian |2 ... m 0 m+1 ... k k+2| indexing h_m."""
    if not 1 <= m <= k:
        raise ValueError(f"m must lie in 1..{k}")
    return AffinePermutation(k, list(range(2, m + 1)) + [0] + list(range(m + 1, k + 1)) + [k + 2])


def k_bounded_partitions(n: int, k: int) -> tuple[Index, ...]:
    return tuple(lam for lam in partitions(n) if not lam or lam[0] <= k)


@lru_cache(maxsize=None)
def kschur_matrix(n: int, k: int) -> tuple[dict[Index, AffinePermutation], dict[Index, dict[AffinePermutation, int]]]:
    """Pair each k-bounded partition of n with a 0-grassmannian by triangularity.

    Going through lam in decreasing lexicographic order, H_lam applied to
    the identity must reach exactly one 0-grassmannian not yet paired, with
    coefficient 1; that target is paired with lam.
    """
    ident = AffinePermutation.identity(k)
    label: dict[Index, AffinePermutation] = {}
    rows: dict[Index, dict[AffinePermutation, int]] = {}
    taken: set[AffinePermutation] = set()
    for lam in k_bounded_partitions(n, k):  # reverse lex already
        combo = {ident: 1}
        for part in lam:
            combo = apply_weak_H(part, combo)
        fresh = [x for x in combo if x not in taken]
        if len(fresh) != 1 or combo[fresh[0]] != 1:
            raise SymError(f"h_{lam} is not unitriangular against the k-Schur basis: new terms {fresh}")
        label[lam] = fresh[0]
        taken.add(fresh[0])
        rows[lam] = combo
    return label, rows


def kschur_in_h(k: int, lam: Iterable[int]) -> Expansion:
    lam = as_partition(lam)
    if lam and lam[0] > k:
        raise ValueError(f"{lam} is not {k}-bounded")
    n = sum(lam)
    label, rows = kschur_matrix(n, k)
    owner = {u: mu for mu, u in label.items()}
    # h_mu = S_mu + sum over earlier nu of K S_nu; solve from the top down
    solved: dict[Index, Expansion] = {}
    for mu in k_bounded_partitions(n, k):
        e = Expansion("h", {mu: 1})
        for u, c in rows[mu].items():
            nu = owner[u]
            if nu != mu:
                e = e - solved[nu] * c
        solved[mu] = e
        if mu == lam:
            return e
    raise AssertionError("unreachable")


def kschur_grassmannian(k: int, lam: Iterable[int]) -> AffinePermutation:
    """The 0-grassmannian paired with a k-bounded partition."""
    lam = as_partition(lam)
    return kschur_matrix(sum(lam), k)[0][lam]


def jacobi_trudi(lam: Iterable[int]) -> Expansion:
    """s_lam as det(h_{lam_i - i + j}) expanded in the h basis."""
    lam = as_partition(lam)
    ell = len(lam)
    out: dict[Index, int] = defaultdict(int)
    for perm in itertools.permutations(range(ell)):
        parts = [lam[i] - i + perm[i] for i in range(ell)]
        if any(p < 0 for p in parts):
            continue
        inversions = sum(1 for x, y in itertools.combinations(perm, 2) if x > y)
        out[tuple(sorted((p for p in parts if p), reverse=True))] += (-1) ** inversions
    return Expansion("h", out)


# ---------------------------------------------------------------------------
# affine Bruhat and 0-Bruhat covers


def _check_label(u: AffinePermutation, a: int, b: int) -> None:
    if not (a < b and b - a <= u.k):
        raise LabelError(f"label ({a}, {b}) needs a < b <= a + {u.k}")


def affine_bruhat_cover(u: Optional[AffinePermutation], a: int, b: int) -> Optional[AffinePermutation]:
    if u is ZERO:
        return ZERO
    _check_label(u, a, b)
    ua, ub = u(a), u(b)
    if ua > ub:
        return ZERO
    for i in range(a + 1, b):
        if ua < u(i) < ub:
            return ZERO
    return u.swapped(a, b)


def zero_bruhat_op(u: Optional[AffinePermutation], a: int, b: int) -> Optional[AffinePermutation]:
    if u is ZERO:
        return ZERO
    _check_label(u, a, b)
    if not (u(a) <= 0 < u(b)):
        return ZERO
    return affine_bruhat_cover(u, a, b)


def apply_labels(word: Iterable[Label], u: Optional[AffinePermutation]) -> Optional[AffinePermutation]:
    """``u t_{a1 b1} t_{a2 b2} ...``: the leftmost label acts first."""
    for a, b in word:
        u = zero_bruhat_op(u, a, b)
        if u is ZERO:
            return ZERO
    return u


def _shift_range(lo_excl: float, hi_incl: float) -> range:
    import math

    return range(math.floor(lo_excl) + 1, math.floor(hi_incl) + 1)


def enumerate_label_reps(u: AffinePermutation, a: int, b: int) -> list[Label]:
    """All shifts (a + m n, b + m n) of a label that act nonzero on ``u``."""
    _check_label(u, a, b)
    n = u.n
    # need u(a) + m n <= 0 < u(b) + m n
    out = []
    for m in _shift_range(-u(b) / n, -u(a) / n):
        if zero_bruhat_op(u, a + m * n, b + m * n) is not ZERO:
            out.append((a + m * n, b + m * n))
    return out


@lru_cache(maxsize=200_000)
def zero_bruhat_labels(u: AffinePermutation) -> tuple[tuple[Label, AffinePermutation], ...]:
    """Every label (a, b) with ``u t_ab`` nonzero, with its target, sorted by label."""
    n, k = u.n, u.k
    out = []
    for a0 in range(1, n + 1):
        for d in range(1, k + 1):
            for m in _shift_range(-u(a0 + d) / n, -u(a0) / n):
                a = a0 + m * n
                v = zero_bruhat_op(u, a, a + d)
                if v is not ZERO:
                    out.append(((a, a + d), v))
    out.sort(key=lambda t: t[0])
    return tuple(out)


@lru_cache(maxsize=200_000)
def zero_bruhat_down(w: AffinePermutation) -> tuple[tuple[Label, AffinePermutation], ...]:
    """Every (a, b) and x with ``x t_ab = w`` a 0-Bruhat cover."""
    n, k = w.n, w.k
    out = []
    for a0 in range(1, n + 1):
        for d in range(1, k + 1):
            # x(a) = w(b) <= 0 < w(a) = x(b)
            for m in _shift_range(-w(a0) / n, -w(a0 + d) / n):
                a, b = a0 + m * n, a0 + m * n + d
                x = w.swapped(a, b)
                if zero_bruhat_op(x, a, b) == w:
                    out.append(((a, b), x))
    out.sort(key=lambda t: t[0])
    return tuple(out)


def _down_levels(w: AffinePermutation, depth: int) -> list[set[AffinePermutation]]:
    levels = [{w}]
    for _ in range(depth):
        levels.append({x for y in levels[-1] for _, x in zero_bruhat_down(y)})
    return levels


def enumerate_operator_words(u: AffinePermutation, w: AffinePermutation) -> list[Word]:
    """All label words taking ``u`` to ``w``, one per choice of representative label."""
    rank = affine_length(w) - affine_length(u)
    if rank < 0 or u.k != w.k:
        return []
    levels = _down_levels(w, rank)
    if u not in levels[rank]:
        return []
    memo: dict[AffinePermutation, list[Word]] = {}

    def rec(x: AffinePermutation, left: int) -> list[Word]:
        if left == 0:
            return [()]
        if x in memo:
            return memo[x]
        out = []
        for label, y in zero_bruhat_labels(x):
            if y in levels[left - 1]:
                out.extend((label,) + rest for rest in rec(y, left - 1))
        memo[x] = out
        return out

    return sorted(rec(u, rank))


def interval_elements(u: AffinePermutation, w: AffinePermutation) -> list[AffinePermutation]:
    seen: dict[AffinePermutation, None] = {}
    for word in enumerate_operator_words(u, w):
        x = u
        seen.setdefault(x)
        for a, b in word:
            x = zero_bruhat_op(x, a, b)
            seen.setdefault(x)
    return sorted(seen, key=lambda p: (affine_length(p), p.window))


def word_composition(word: Word) -> Index:
    return composition_of_word(b for _, b in word)


def affine_K(u: AffinePermutation, w: AffinePermutation) -> Expansion:
    return Expansion.from_counts("F", (word_composition(x) for x in enumerate_operator_words(u, w)))


def affine_H(m: int, u: AffinePermutation) -> dict[AffinePermutation, int]:
    """u H_m: words of m labels with strictly increasing b acting nonzero on u."""
    out: dict[AffinePermutation, int] = defaultdict(int)

    def rec(x: AffinePermutation, left: int, last: float):
        if left == 0:
            out[x] += 1
            return
        for (a, b), y in zero_bruhat_labels(x):
            if b > last:
                rec(y, left - 1, b)

    rec(u, m, float("-inf"))
    return dict(out)


def apply_affine_H(m: int, combo: dict[AffinePermutation, int]) -> dict[AffinePermutation, int]:
    out: dict[AffinePermutation, int] = defaultdict(int)
    for x, c in combo.items():
        for y, d in affine_H(m, x).items():
            out[y] += c * d
    return {y: c for y, c in out.items() if c}


def affine_pairing(alpha: Iterable[int], u: AffinePermutation, w: AffinePermutation) -> int:
    combo = {u: 1}
    for part in alpha:
        combo = apply_affine_H(part, combo)
    return combo.get(w, 0)


def grassmannians_by_length(k: int, max_length: int) -> list[list[AffinePermutation]]:
    """All 0-grassmannians of each length up to ``max_length``, grown by weak covers."""
    levels = [[AffinePermutation.identity(k)]]
    for _ in range(max_length):
        nxt = {v for x in levels[-1] for i in range(k + 1) if (v := weak_cover(x, i)) is not ZERO}
        levels.append(sorted(nxt))
    return levels


# ---------------------------------------------------------------------------
# local relations among the t_ab


@dataclass(frozen=True)
class Relation:
    """One direction of a relation on words of labels.

    ``pattern`` names the letters of the source word, e.g. ``"ab cd ec"``.
    ``derive`` may add or check letters that are not read off the word
    (returning None rejects the match), ``cond`` holds the side conditions
    and ``rhs`` builds the other word. A relation with ``rhs`` None asserts
    that the source word acts as zero.
    """

    name: str
    pattern: str
    cond: Callable[[dict, AffinePermutation, int], bool]
    rhs: Optional[Callable[[dict, int], Word]] = None
    derive: Optional[Callable[[dict, int], Optional[dict]]] = None

    @cached_property
    def letters(self) -> tuple[tuple[str, str], ...]:
        return tuple((p[0], p[1]) for p in self.pattern.split())

    def match(self, word: Word, n: int) -> Optional[dict]:
        env = _Env()
        for (x, y), (p, q) in zip(self.letters, word):
            if env.setdefault(x, p) != p or env.setdefault(y, q) != q:
                return None
        if self.derive is not None:
            env = self.derive(env, n)
        return env


class _Env(dict):
    """Letter bindings; ``r = |b - a| + |d - c|`` is computed on demand."""

    def __missing__(self, key):
        if key == "r":
            return abs(self["b"] - self["a"]) + abs(self["d"] - self["c"])
        raise KeyError(key)


class _Residues:
    __slots__ = ("env", "n")

    def __init__(self, env: dict, n: int):
        self.env, self.n = env, n

    def __getitem__(self, x: str) -> int:
        return self.env[x] % self.n


def _inc(e: dict, letters: str) -> bool:
    # letters not bound yet are skipped, so partial words can be pruned
    vals = [e[x] for x in letters if x in e]
    return all(x < y for x, y in zip(vals, vals[1:]))


def _res(e: dict, n: int) -> _Residues:
    return _Residues(e, n)


def _word(*labels: tuple[int, int]) -> Word:
    return tuple(labels)


def _set(**fixed):
    """derive helper: compute missing letters, rejecting inconsistent ones."""

    def derive(e: dict, n: int) -> Optional[dict]:
        e = _Env(e)
        for name, f in fixed.items():
            val = f(e, n)
            if e.setdefault(name, val) != val:
                return None
        return e

    return derive


def _relations() -> tuple[Relation, ...]:
    R = Relation
    out = []

    # length two
    out.append(R("A", "ab cd", lambda e, u, n: len({x % n for x in (e["a"], e["b"], e["c"], e["d"])}) == 4,
                 lambda e, n: _word((e["c"], e["d"]), (e["a"], e["b"]))))

    def b1(e, u, n):
        return e["a"] < e["c"] < e["b"] < e["d"] or (e["b"] == e["c"] and e["d"] - e["a"] > n)

    out.append(R("B1", "ab cd", b1))
    out.append(R("B1", "cd ab", b1))

    def b2(e, u, n):
        s = _res(e, n)
        return (s["a"] == s["c"] and e["b"] <= e["d"]) or (s["b"] == s["d"] and e["c"] <= e["a"])

    out.append(R("B2", "ab cd", b2))
    out.append(R("C", "ab bd", lambda e, u, n: e["d"] - e["a"] == n,
                 lambda e, n: _word((e["a"], e["b"]), (e["b"] - n, e["a"]))))
    out.append(R("C", "ab Ba", lambda e, u, n: e["d"] - e["a"] == n,
                 lambda e, n: _word((e["a"], e["b"]), (e["b"], e["d"])),
                 _set(d=lambda e, n: e["a"] + n, B=lambda e, n: e["b"] - n)))

    def d_cond(e, u, n):
        s = _res(e, n)
        return s["b"] == s["c"] and s["d"] == s["a"] and e["r"] == n and _inc(e, "abcd")

    out.append(R("D", "ab cd", d_cond, lambda e, n: _word((e["d"] - n, e["c"]), (e["b"] - n, e["a"]))))
    out.append(R("D", "Dc Ba", d_cond, lambda e, n: _word((e["a"], e["b"]), (e["c"], e["d"])),
                 _set(d=lambda e, n: e["D"] + n, b=lambda e, n: e["B"] + n)))

    def x(name, cond, rhs):
        out.append(R(name, "ab cd", lambda e, u, n: e["b"] < e["c"] and cond(e, u, n, _res(e, n)), rhs))

    x("X1", lambda e, u, n, s: e["r"] < n and s["d"] == s["a"] and u(e["c"]) <= 0 and u(e["d"]) <= 0,
      lambda e, n: _word((e["d"], e["c"] + e["r"]), (e["b"] - e["r"], e["a"])))
    x("X2", lambda e, u, n, s: e["r"] < n and s["d"] == s["a"] and u(e["d"]) > 0,
      lambda e, n: _word((e["c"], e["d"]), (e["b"] - e["r"], e["b"])))
    x("X3", lambda e, u, n, s: e["r"] < n and s["b"] == s["c"] and u(e["a"] + e["r"]) <= 0,
      lambda e, n: _word((e["d"] - e["r"], e["d"]), (e["a"], e["b"])))
    x("X4", lambda e, u, n, s: e["r"] < n and s["b"] == s["c"] and u(e["b"]) > 0 and u(e["a"] + e["r"]) > 0,
      lambda e, n: _word((e["d"] - e["r"], e["c"]), (e["b"], e["a"] + e["r"])))
    x("X5", lambda e, u, n, s: s["b"] == s["d"] and e["b"] - e["a"] > e["d"] - e["c"]
      and u(e["d"] - e["b"] + e["a"]) > 0,
      lambda e, n: _word((e["c"], e["d"]), (e["a"], e["b"] + e["c"] - e["d"])))
    x("X6", lambda e, u, n, s: s["b"] == s["d"] and e["b"] - e["a"] < e["d"] - e["c"] and u(e["a"]) <= 0,
      lambda e, n: _word((e["c"], e["d"] - e["b"] + e["a"]), (e["a"], e["b"])))

    # length three, free of u
    for name, left, right in (("E1", "bc cd ac", "bd ab bc"), ("E2", "ac cd bc", "bc ab bd")):
        for src, dst in ((left, right), (right, left)):
            out.append(R(name, src, lambda e, u, n: _inc(e, "abcd"),
                         lambda e, n, dst=dst: tuple((e[p[0]], e[p[1]]) for p in dst.split())))
    for pat in ("bc ab bc", "ab bc ab"):
        out.append(R("F", pat, lambda e, u, n: _inc(e, "abc") and e["c"] - e["a"] < n))

    def h1a(e, u, n):
        s = _res(e, n)
        return _inc(e, "abecd") and s["a"] == s["d"] < s["e"] < s["b"] == s["c"]

    out.append(R("1a", "ab cd ec", h1a,
                 lambda e, n: _word((e["e"], e["c"]), (e["a"], e["b"] - (e["c"] - e["e"])), (e["e"], e["d"]))))
    out.append(R("1a", "ec aB ed", h1a,
                 lambda e, n: _word((e["a"], e["b"]), (e["c"], e["d"]), (e["e"], e["c"])),
                 _set(b=lambda e, n: e["B"] + e["c"] - e["e"])))

    def h1b(e, u, n):
        s = _res(e, n)
        return _inc(e, "abecd") and s["a"] == s["d"] == s["e"] and s["b"] == s["c"]

    out.append(R("1b", "ab cd ec", h1b,
                 lambda e, n: _word((e["d"] - n, e["c"]), (e["b"] - n, e["a"]), (e["e"], e["c"]))))
    out.append(R("1b", "Dc Ba ec", h1b,
                 lambda e, n: _word((e["a"], e["b"]), (e["c"], e["d"]), (e["e"], e["c"])),
                 _set(d=lambda e, n: e["D"] + n, b=lambda e, n: e["B"] + n)))

    def h1c(e, u, n):
        s = _res(e, n)
        return _inc(e, "abcefd") and s["a"] == s["d"] and s["b"] == s["c"]

    out.append(R("1c", "ab cd ef", h1c, lambda e, n: _word((e["e"], e["f"]), (e["a"], e["b"]), (e["c"], e["d"]))))
    out.append(R("1c", "ef ab cd", h1c, lambda e, n: _word((e["a"], e["b"]), (e["c"], e["d"]), (e["e"], e["f"]))))

    def h1d(e, u, n):
        return _inc(e, "adbc") and e["a"] % n == e["c"] % n

    out.append(R("1d", "ab bc db", h1d, lambda e, n: _word((e["d"], e["b"]), (e["a"], e["d"]), (e["d"], e["c"]))))
    out.append(R("1d", "db ad dc", h1d, lambda e, n: _word((e["a"], e["b"]), (e["b"], e["c"]), (e["d"], e["b"]))))

    def h1e(e, u, n):
        return _inc(e, "abc") and e["a"] % n == e["c"] % n

    out.append(R("1e", "ab bc ab", h1e,
                 lambda e, n: _word((e["a"], e["b"]), (e["b"] - n, e["c"] - n), (e["a"], e["b"]))))
    out.append(R("1e", "ab BC ab", h1e,
                 lambda e, n: _word((e["a"], e["b"]), (e["b"], e["c"]), (e["a"], e["b"])),
                 _set(c=lambda e, n: e["C"] + n, B=lambda e, n: e["b"] - n)))

    # length three, depending on u; r = |b - a| + |d - c|
    def fam(name, pattern, hyp, rhs, derive=None):
        def cond(e, u, n):
            return e["r"] < n and hyp(e, u, n, _res(e, n))

        out.append(R(name, pattern, cond, rhs, derive))

    def front(e):
        return _inc(e, "abef") and e["f"] <= e["c"] < e["d"]

    fam("2a", "ab cd ef", lambda e, u, n, s: front(e) and s["a"] == s["d"] and u(e["c"]) <= 0 and u(e["d"]) <= 0,
        lambda e, n: _word((e["d"], e["c"] + e["r"]), (e["b"] - e["r"], e["a"]), (e["e"], e["f"])))
    fam("2b", "ab cd ef", lambda e, u, n, s: front(e) and s["a"] == s["d"] and u(e["d"]) > 0,
        lambda e, n: _word((e["c"], e["d"]), (e["b"] - e["r"], e["b"]), (e["e"], e["f"])))
    fam("3a", "ab cd ef", lambda e, u, n, s: front(e) and s["b"] == s["c"] and s["e"] >= s["d"]
        and u(e["a"] + e["r"]) > u(e["b"]) > 0,
        lambda e, n: _word((e["d"] - e["r"], e["c"]), (e["b"], e["a"] + e["r"]), (e["e"], e["f"])))
    fam("3b", "ab cd ef", lambda e, u, n, s: front(e) and s["b"] == s["c"] and s["e"] >= s["d"]
        and u(e["a"] + e["r"]) <= 0,
        lambda e, n: _word((e["d"] - e["r"], e["d"]), (e["a"], e["b"]), (e["e"], e["f"])))

    def h4(e, s):
        return _inc(e, "aebcd") and s["b"] == s["c"] and s["e"] > s["a"]

    fam("4a", "ab cd eb", lambda e, u, n, s: h4(e, s) and u(e["a"] + e["r"]) > u(e["b"]) > 0,
        lambda e, n: _word((e["e"], e["b"]), (e["a"], e["e"]), (e["c"] - (e["b"] - e["e"]), e["d"])))
    fam("4b", "eb ae Cd", lambda e, u, n, s: h4(e, s) and u(e["a"] + e["r"]) <= 0,
        lambda e, n: _word((e["e"], e["b"]), (e["d"] - e["r"], e["d"]), (e["a"], e["b"])),
        _set(c=lambda e, n: e["C"] + e["b"] - e["e"]))

    def h6(e):
        return _inc(e, "cdeab")

    fam("6a", "ea ab cd", lambda e, u, n, s: h6(e) and s["c"] < s["e"] and s["a"] == s["d"]
        and u(e["b"] - e["r"]) <= 0,
        lambda e, n: _word((e["e"], e["b"]), (e["c"], e["d"] - (e["a"] - e["e"])), (e["e"], e["a"])))
    fam("6b", "ea ab cd", lambda e, u, n, s: h6(e) and s["c"] <= s["e"] and s["a"] == s["d"]
        and u(e["b"] - e["r"]) > 0,
        lambda e, n: _word((e["e"], e["b"]), (e["c"], e["c"] + e["r"]), (e["a"], e["b"])))
    fam("6c", "ea ab cd", lambda e, u, n, s: h6(e) and s["c"] > s["e"] and s["a"] == s["d"]
        and u(e["b"] - e["r"]) <= 0,
        lambda e, n: _word((e["e"], e["b"]), (e["d"], e["c"] + e["r"]), (e["b"] - e["r"], e["a"])))
    fam("6d", "ea ab cd", lambda e, u, n, s: h6(e) and s["c"] != s["e"] <= s["d"] and s["b"] == s["c"]
        and u(e["c"]) > 0,
        lambda e, n: _word((e["e"], e["b"]), (e["d"] - e["r"], e["c"]), (e["b"], e["a"] + e["r"])))
    fam("6e", "ea ab cd", lambda e, u, n, s: h6(e) and s["c"] != s["e"] <= s["d"] and s["b"] == s["c"]
        and u(e["c"]) <= 0,
        lambda e, n: _word((e["e"], e["b"]), (e["c"], e["d"]), (e["a"], e["a"] + e["r"])))
    return tuple(out)


RELATIONS: tuple[Relation, ...] = _relations()
RELATION_NAMES: tuple[str, ...] = tuple(dict.fromkeys(rel.name for rel in RELATIONS))


def random_grassmannian(k: int, length: int, rng: random.Random) -> AffinePermutation:
    """A 0-grassmannian reached by ``length`` random weak covers from the identity."""
    u = AffinePermutation.identity(k)
    for _ in range(length):
        u = rng.choice([v for i in range(k + 1) if (v := weak_cover(u, i)) is not ZERO])
    return u


def nonzero_words(u: AffinePermutation, length: int) -> list[tuple[Word, AffinePermutation]]:
    out: list[tuple[Word, AffinePermutation]] = [((), u)]
    for _ in range(length):
        out = [(w + (lab,), y) for w, x in out for lab, y in zero_bruhat_labels(x)]
    return out


def _nearby_labels(u: AffinePermutation, near: Sequence[int]) -> Iterator[Label]:
    # every valid label within two windows of the letters already used
    n, k = u.n, u.k
    lo, hi = min(near) - 2 * n, max(near) + 2 * n
    for a in range(lo, hi + 1):
        for d in range(1, k + 1):
            yield (a, a + d)


def _undecided(rel: Relation, env: dict, u: AffinePermutation) -> bool:
    """False when the letters bound so far already violate the side conditions."""
    try:
        return bool(rel.cond(env, u, u.n))
    except (KeyError, TypeError):
        return True


def relation_instances(rel: Relation, u: AffinePermutation) -> Iterator[tuple[Word, dict]]:
    """Words at ``u`` to which ``rel`` applies, with their letters.

    A rewriting relation needs its source word to act nonzero; for a zero
    relation the last label may be any valid label near the others.
    """
    letters = rel.letters
    n = u.n

    def rec(x: AffinePermutation, word: Word, env: dict) -> Iterator[tuple[Word, dict]]:
        i = len(word)
        if i == len(letters):
            if rel.derive is not None:
                env = rel.derive(env, n)
                if env is None:
                    return
            if rel.cond(env, u, n):
                yield word, env
            return
        last = i == len(letters) - 1
        if rel.rhs is None and last:
            cands = ((lab, None) for lab in _nearby_labels(u, [v for ab in word for v in ab] or [1]))
        else:
            cands = zero_bruhat_labels(x)
        p, q = letters[i]
        for (a, b), y in cands:
            if env.get(p, a) != a or env.get(q, b) != b:
                continue
            new = _Env(env)
            new[p], new[q] = a, b
            if not last and not _undecided(rel, new, u):
                continue
            yield from rec(y, word + ((a, b),), new)

    yield from rec(u, (), _Env())


def check_relation(
    rel: Relation, word: Word, u: AffinePermutation, env: Optional[dict] = None
) -> Optional[tuple[bool, Optional[Word]]]:
    """None when ``rel`` does not apply to ``word`` at ``u``; else (holds, other word)."""
    n = u.n
    if env is None:
        env = rel.match(word, n)
        if env is None or not rel.cond(env, u, n):
            return None
    lhs = apply_labels(word, u)
    if rel.rhs is None:
        return (lhs is ZERO, None)
    other = rel.rhs(env, n)
    if any(not (a < b and b - a <= u.k) for a, b in other):
        return (False, other)
    return (apply_labels(other, u) == lhs, other)


def verify_affine_relations(
    k: int,
    samples: int,
    seed: int,
    names: Optional[Iterable[str]] = None,
    max_draws: Optional[int] = None,
    max_length: Optional[int] = None,
) -> list[dict]:
    """Fuzz every relation family on random 0-grassmannians.

    Each draw picks a random ``u`` and tests the family on every word at
    ``u`` it applies to (see :func:`relation_instances`). Draws stop once
    every family has ``samples`` instances or after ``max_draws`` draws.
    """
    rng = random.Random(seed)
    wanted = set(names) if names is not None else set(RELATION_NAMES)
    rels = [rel for rel in RELATIONS if rel.name in wanted]
    counts: dict[str, int] = {name: 0 for name in RELATION_NAMES if name in wanted}
    failures: dict[str, list] = {name: [] for name in counts}
    nfail: dict[str, int] = {name: 0 for name in counts}
    max_draws = max_draws if max_draws is not None else 20 * samples
    max_length = max_length if max_length is not None else 20 * k

    for _ in range(max_draws):
        if all(c >= samples for c in counts.values()):
            break
        u = random_grassmannian(k, rng.randint(max_length // 2, max_length), rng)
        for rel in rels:
            if counts[rel.name] >= samples:
                continue
            for word, env in relation_instances(rel, u):
                res = check_relation(rel, word, u, env)
                if res is None:
                    continue
                counts[rel.name] += 1
                if not res[0]:
                    nfail[rel.name] += 1
                    if len(failures[rel.name]) < 5:
                        failures[rel.name].append(
                            {"u": list(u.window), "word": [list(x) for x in word],
                             "other": None if res[1] is None else [list(x) for x in res[1]]}
                        )
    return [
        {"relation": name, "k": k, "samples": counts[name], "failure_count": nfail[name], "failures": failures[name]}
        for name in counts
    ]
