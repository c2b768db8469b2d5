"""Monk operators on the r-Bruhat order of S_infinity.

The operator ``u_ab`` sends ``u`` to ``(a, b) u`` (the transposition acts on
values) when that is a cover in the r-Bruhat order, and to zero otherwise.
A chain is stored as the tuple of its ``(a, b)`` labels in the order the
operators are applied, so ``((2, 6), (4, 5), (1, 2), (2, 3))`` is the
composite written ``u_23 u_12 u_45 u_26``.
"""

from __future__ import annotations

from collections import defaultdict
from functools import lru_cache
from typing import Iterable, Iterator, Optional

from .permgroup import IntegerPermutation, PermutationError
from .symcore import Expansion, as_partition, composition_of_word

Perm = IntegerPermutation
Label = tuple[int, int]
Chain = tuple[Label, ...]

ZERO = None


class IntervalError(ValueError):
    pass


class UnmatchedCaseError(ValueError):
    """No (or more than one) rule of the involution fits the triple; ``triple`` records it."""

    def __init__(self, triple: Chain, message: str = "no rule matches"):
        self.triple = triple
        super().__init__(f"{message}: {triple}")


# ---------------------------------------------------------------------------
# covers


def monk_cover(u: Optional[Perm], a: int, b: int, r: int) -> Optional[Perm]:
    if u is ZERO:
        return ZERO
    if not a < b:
        raise ValueError(f"labels need a < b, got ({a}, {b})")
    inv = u.inverse()
    i, j = inv(a), inv(b)
    if not (i <= r < j):
        return ZERO
    for pos in range(i + 1, j):
        if a < u(pos) < b:
            return ZERO
    return IntegerPermutation.transposition(a, b) * u


def apply_chain(chain: Iterable[Label], u: Optional[Perm], r: int) -> Optional[Perm]:
    """Apply the labels first to last."""
    for a, b in chain:
        u = monk_cover(u, a, b, r)
        if u is ZERO:
            return ZERO
    return u


def apply_composite(word: Iterable[Label], u: Optional[Perm], r: int) -> Optional[Perm]:
    """Apply ``u_{a1 b1} u_{a2 b2} ...`` as written: the rightmost operator acts first."""
    return apply_chain(reversed(list(word)), u, r)


def covers(u: Perm, r: int, n: int | None = None) -> list[tuple[Label, Perm]]:
    """All r-Bruhat covers of ``u`` moving positions inside 1..n.

    Without ``n`` the range is just wide enough to catch the single cover
    that brings in a fresh value from beyond the support.
    """
    if n is None:
        n = max(u.bounds()[1], r) + 1
    return _covers(u, r, n)


@lru_cache(maxsize=200_000)
def _covers(u: Perm, r: int, n: int) -> list[tuple[Label, Perm]]:
    out = []
    for i in range(1, min(r, n) + 1):
        ui = u(i)
        best = None  # smallest value above u(i) met so far to the right of i
        for j in range(i + 1, n + 1):
            uj = u(j)
            if uj > ui and (best is None or uj < best):
                if j > r:
                    out.append(((ui, uj), IntegerPermutation.transposition(ui, uj) * u))
                best = uj
    out.sort(key=lambda t: t[0])
    return out


# ---------------------------------------------------------------------------
# intervals


def zeta_to_interval(zeta: Perm) -> tuple[Perm, Perm, int]:
    if zeta.is_identity():
        raise IntervalError("the identity does not determine an interval")
    if zeta.bounds()[0] < 1:
        raise PermutationError("zeta must permute positive integers")
    up = sorted(zeta.up_set())
    n = zeta.bounds()[1]
    rest = [j for j in range(1, n + 1) if j not in set(up)]
    w = IntegerPermutation.from_window(up + rest)
    u = zeta.inverse() * w
    return u, w, len(up)


def _below(x: Perm, w: Perm, r: int, n: int) -> bool:
    # along a chain the values at positions <= r only go up and the others only go down
    return all(x(i) <= w(i) for i in range(1, r + 1)) and all(x(j) >= w(j) for j in range(r + 1, n + 1))


def canonical_chain(u: Perm, w: Perm, r: int) -> Optional[Chain]:
    """The chain built greedily from the bottom; None if the recursion gets stuck."""
    n = max(u.bounds()[1], w.bounds()[1], r + 1)
    chain: list[Label] = []
    x = u
    while x != w:
        lows = [i for i in range(1, r + 1) if x(i) < w(i)]
        if not lows:
            return None
        i1 = max(lows)
        a = x(i1)
        highs = [j for j in range(r + 1, n + 1) if x(j) > a >= w(j)]
        if not highs:
            return None
        b = x(min(highs))
        x = monk_cover(x, a, b, r)
        if x is ZERO:
            return None
        chain.append((a, b))
    return tuple(chain)


def enumerate_chains(u: Perm, w: Perm, r: int) -> list[Chain]:
    """Every saturated chain of [u, w]_r, sorted by label sequence."""
    rank = w.length() - u.length()
    if rank < 0:
        return []
    n = max(u.bounds()[1], w.bounds()[1])
    memo: dict[Perm, list[Chain]] = {}

    def rec(x: Perm, left: int) -> list[Chain]:
        if left == 0:
            return [()] if x == w else []
        if x in memo:
            return memo[x]
        out = []
        for label, y in _covers(x, r, n):
            if _below(y, w, r, n):
                out.extend((label,) + rest for rest in rec(y, left - 1))
        memo[x] = out
        return out

    if not _below(u, w, r, n):
        return []
    return sorted(rec(u, rank))


def interval_elements(u: Perm, w: Perm, r: int) -> list[Perm]:
    """Elements lying on some chain of [u, w]_r, bottom first."""
    seen: dict[Perm, None] = {}
    for ch in enumerate_chains(u, w, r):
        x = u
        seen.setdefault(x)
        for a, b in ch:
            x = monk_cover(x, a, b, r)
            seen.setdefault(x)
    return sorted(seen, key=lambda p: (p.length(), p.window(1, max(u.bounds()[1], w.bounds()[1]))))


def chain_composition(chain: Chain) -> tuple[int, ...]:
    """Descent composition of the b-labels read in application order."""
    return composition_of_word(b for _, b in chain)


def schubert_K(u: Perm, w: Perm, r: int) -> Expansion:
    return Expansion.from_counts("F", (chain_composition(ch) for ch in enumerate_chains(u, w, r)))


# ---------------------------------------------------------------------------
# Pieri series


def grassmannian(lam: Iterable[int], r: int) -> Perm:
    """The r-grassmannian permutation [lam_r + 1, lam_{r-1} + 2, ..., lam_1 + r, ...]."""
    lam = as_partition(lam)
    if len(lam) > r:
        raise ValueError(f"{lam} has more than {r} parts")
    padded = list(lam) + [0] * (r - len(lam))
    head = [padded[r - 1 - t] + t + 1 for t in range(r)]
    n = max(head, default=0)
    tail = [j for j in range(1, n + 1) if j not in set(head)]
    return IntegerPermutation.from_window(head + tail)


def is_k_increasing(zeta: Perm, k: int) -> bool:
    cycs = zeta.cycles()
    for cyc in cycs:
        if any(cyc[t] <= cyc[t + 1] for t in range(len(cyc) - 1)):
            return False
    for s in range(len(cycs)):
        for t in range(s + 1, len(cycs)):
            if not _totally_disjoint(cycs[s], cycs[t]):
                return False
    return sum(len(c) - 1 for c in cycs) == k


def _totally_disjoint(c: tuple[int, ...], d: tuple[int, ...]) -> bool:
    lo_c, hi_c, lo_d, hi_d = c[-1], c[0], d[-1], d[0]
    if hi_c < lo_d or hi_d < lo_c:
        return True
    if not any(lo_c <= x <= hi_c for x in d):
        return True
    return not any(lo_d <= x <= hi_d for x in c)


def schubert_H(k: int, u: Perm, r: int, bound: int = 6) -> dict[Perm, int]:
    """H_k(u): targets of chains of length k with strictly increasing b-labels."""
    if k > bound:
        raise ValueError(f"k={k} exceeds the configured bound {bound}")
    n = max(u.bounds()[1], r) + k
    out: dict[Perm, int] = defaultdict(int)

    def rec(x: Perm, left: int, last: int):
        if left == 0:
            out[x] += 1
            return
        for (a, b), y in _covers(x, r, n):
            if b > last:
                rec(y, left - 1, b)

    rec(u, k, 0)
    return dict(out)


def apply_schubert_H(k: int, combo: dict[Perm, int], r: int) -> dict[Perm, int]:
    out: dict[Perm, int] = defaultdict(int)
    for x, c in combo.items():
        for y, d in schubert_H(k, x, r).items():
            out[y] += c * d
    return {y: c for y, c in out.items() if c}


# ---------------------------------------------------------------------------
# the involutions phi_i
#
# Each rule is a pair of label triples in application order; the first side
# reads descent-ascent on its b-labels, the second ascent-descent.

_RULES = (
    ("A", (("beta", "b"), ("alpha", "a"), ("gamma", "c")), (("beta", "b"), ("gamma", "c"), ("alpha", "a"))),
    ("A", (("gamma", "c"), ("alpha", "a"), ("beta", "b")), (("alpha", "a"), ("gamma", "c"), ("beta", "b"))),
    ("B", (("b", "d"), ("a", "b"), ("b", "c")), (("b", "c"), ("c", "d"), ("a", "c"))),
    ("B", (("b", "c"), ("a", "b"), ("b", "d")), (("a", "c"), ("c", "d"), ("b", "c"))),
    ("C", (("a", "c"), ("alpha", "a"), ("beta", "b")), (("beta", "b"), ("a", "c"), ("alpha", "a"))),
    ("C", (("beta", "b"), ("alpha", "a"), ("a", "c")), (("alpha", "a"), ("a", "c"), ("beta", "b"))),
)


def _side_condition(case: str, v: dict[str, int]) -> bool:
    if case == "A":
        return not ({v["a"], v["alpha"]} & {v["c"], v["gamma"]}) and v["a"] < v["b"] < v["c"]
    if case == "B":
        return v["a"] < v["b"] < v["c"] < v["d"]
    return not ({v["alpha"], v["a"], v["c"]} & {v["b"], v["beta"]}) and v["a"] < v["b"] < v["c"]


def _unify(template, triple: Chain) -> dict[str, int] | None:
    env: dict[str, int] = {}
    for names, values in zip(template, triple):
        for name, val in zip(names, values):
            if env.setdefault(name, val) != val:
                return None
    return env


def _instantiate(template, env: dict[str, int]) -> Chain:
    return tuple((env[x], env[y]) for x, y in template)


def phi_triple(triple: Chain) -> Chain:
    """Image of a three-label window with exactly one descent."""
    images = set()
    for case, left, right in _RULES:
        for src, dst in ((left, right), (right, left)):
            env = _unify(src, triple)
            if env is not None and _side_condition(case, env):
                images.add(_instantiate(dst, env))
    if len(images) != 1:
        raise UnmatchedCaseError(triple, "no rule matches" if not images else "several rules match")
    return images.pop()


def phi_involution(i: int, chain: Chain) -> Chain:
    """phi_i, acting on entries i-1, i, i+1 (1-based) of the chain."""
    chain = tuple(tuple(x) for x in chain)
    n = len(chain)
    if not 1 < i < n:
        raise IndexError(f"phi_{i} needs 1 < i < {n}")
    b = [y for _, y in chain]
    descents = (b[i - 2] > b[i - 1]) + (b[i - 1] > b[i])
    if descents != 1:
        return chain
    return chain[: i - 2] + phi_triple(chain[i - 2 : i + 1]) + chain[i + 1 :]


# ---------------------------------------------------------------------------
# relations among the u_ab, each side written as a composite (rightmost first)


#: name -> (sides, must_vanish). Letters stand for integers that increase in
#: alphabetical order; a side "bc cd ac" is the composite u_bc u_cd u_ac.
RELATIONS: dict[str, tuple[tuple[str, ...], bool]] = {
    "1": (("bc cd ac", "bd ab bc"), False),
    "2": (("ac cd bc", "bc ab bd"), False),
    "3-disjoint": (("ab cd", "cd ab"), False),
    "3-nested": (("ad bc", "bc ad"), False),
    "4": (("ac bd", "bd ac"), True),
    "4-shared-bottom": (("ac ad", "ad ac"), True),
    "4-shared-top": (("ac bc", "bc ac"), True),
    "4-square": (("ac ac",), True),
    "5": (("bc ab bc", "ab bc ab"), True),
}


def relation_letters(name: str) -> str:
    return "".join(sorted(set("".join(RELATIONS[name][0]).replace(" ", ""))))


def instantiate(side: str, env: dict[str, int]) -> tuple[Label, ...]:
    return tuple((env[p[0]], env[p[1]]) for p in side.split())


def check_relation(name: str, env: dict[str, int], u: Perm, r: int) -> tuple[bool, bool]:
    """(holds, nonzero) for one relation instance acting on ``u``."""
    sides, vanish = RELATIONS[name]
    values = [apply_composite(instantiate(side, env), u, r) for side in sides]
    nonzero = any(v is not ZERO for v in values)
    holds = all(v == values[0] for v in values) and not (vanish and nonzero)
    return holds, nonzero


def _fill_letters(letters: str, env: dict[str, int], rng, n: int) -> dict[str, int] | None:
    """Give the unbound letters random values keeping the alphabetical order strict."""
    env = dict(env)
    pos = [t for t, c in enumerate(letters) if c in env]
    bounds = [0] + [env[letters[t]] for t in pos] + [n + 1]
    cuts = [-1] + pos + [len(letters)]
    for seg in range(len(cuts) - 1):
        gap = letters[cuts[seg] + 1 : cuts[seg + 1]]
        lo, hi = bounds[seg], bounds[seg + 1]
        if hi - lo - 1 < len(gap):
            return None
        for c, v in zip(gap, sorted(rng.sample(range(lo + 1, hi), len(gap)))):
            env[c] = v
    vals = [env[c] for c in letters]
    if any(vals[t] >= vals[t + 1] for t in range(len(vals) - 1)):
        return None
    return env


def _match_side(side: str, chain: Chain) -> dict[str, int] | None:
    pairs = side.split()[::-1]  # application order
    if len(pairs) != len(chain):
        return None
    env: dict[str, int] = {}
    for (x, y), (p, q) in zip(pairs, chain):
        if env.setdefault(x, p) != p or env.setdefault(y, q) != q:
            return None
    return env


def sample_relation(name: str, rng, n: int = 8) -> tuple[dict[str, int], Perm, int]:
    """A random instance of a relation acting on a random ``u`` in S_n.

    Half the time the labels are read off an actual chain out of ``u`` so the
    instance is nonzero whenever the relation admits one; otherwise a genuine
    cover of ``u`` is planted as the first operator of a random side and the
    remaining letters are drawn at random.
    """
    sides, vanish = RELATIONS[name]
    letters = relation_letters(name)
    while True:
        u = IntegerPermutation.from_window(rng.sample(range(1, n + 1), n))
        r = rng.randrange(1, n)
        opts = _covers(u, r, n)
        if not opts:
            continue
        if not vanish and rng.random() < 0.5:
            size = len(sides[0].split())
            found = []
            frontier = [((), u)]
            for _ in range(size):
                frontier = [(ch + (lab,), y) for ch, x in frontier for lab, y in _covers(x, r, n)]
            for ch, _ in frontier:
                for side in sides:
                    env = _match_side(side, ch)
                    if env is not None and _fill_letters(letters, env, rng, n) == env:
                        found.append(env)
            if found:
                return rng.choice(found), u, r
        (p, q), _ = rng.choice(opts)
        x, y = rng.choice(sides).split()[-1]
        env = _fill_letters(letters, {x: p, y: q}, rng, n)
        if env is not None:
            return env, u, r


def iter_length3_chains(n: int, r: int) -> Iterator[tuple[Perm, Chain]]:
    """Every saturated chain of length three inside S_n for the cut r."""
    from .permgroup import all_permutations

    for x in all_permutations(1, n):
        for l1, y in _covers(x, r, n):
            for l2, z in _covers(y, r, n):
                for l3, _ in _covers(z, r, n):
                    yield x, (l1, l2, l3)
