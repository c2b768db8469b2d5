"""Randomized and exhaustive checks of the operator identities.

Each suite returns a list of per-relation reports
``{"relation": name, "samples": N, "failure_count": F, "failures": [...]}``
where ``failures`` holds at most five counterexamples.
"""

from __future__ import annotations

import itertools
import math
import random
from typing import Callable

from . import affine, schubert, young
from .permgroup import IntegerPermutation, all_permutations
from .symcore import partitions

SUITES = ("young-relations", "schubert-relations", "affine-relations", "commutativity", "involutions")


class _Tally:
    def __init__(self):
        self.reports: dict[str, dict] = {}

    def add(self, name: str, ok: bool, witness=None):
        rep = self.reports.setdefault(name, {"relation": name, "samples": 0, "failure_count": 0, "failures": []})
        rep["samples"] += 1
        if not ok:
            rep["failure_count"] += 1
            if len(rep["failures"]) < 5:
                rep["failures"].append(witness)

    def result(self) -> list[dict]:
        return list(self.reports.values())


# ---------------------------------------------------------------------------
# Young lattice: u_r^2 = 0, u_r u_{r+1} u_r = u_{r+1} u_r u_{r+1} = 0, far commutation


def _random_partition(rng: random.Random, max_size: int) -> tuple[int, ...]:
    size = rng.randint(0, max_size)
    return rng.choice(partitions(size)) if size else ()


def _young_instance(tally: _Tally, lam, r: int, t: int):
    w = list(lam)
    tally.add("square", young.apply_word((r, r), lam) is young.ZERO, [w, r])
    tally.add("braid", young.apply_word((r, r + 1, r), lam) is young.ZERO
              and young.apply_word((r + 1, r, r + 1), lam) is young.ZERO, [w, r])
    if abs(r - t) > 1:
        tally.add("commute", young.apply_word((r, t), lam) == young.apply_word((t, r), lam), [w, r, t])


def young_relations(samples: int, seed: int, span: int = 6, max_size: int = 8) -> list[dict]:
    """All r, t in [-span, span] on all partitions of size <= max_size, then random draws.

    Half of the random contents are addable contents of the partition, so
    that many instances act nonzero.
    """
    tally = _Tally()
    rng = random.Random(seed)
    for size in range(max_size + 1):
        for lam in partitions(size):
            for r in range(-span, span + 1):
                for t in range(-span, span + 1):
                    _young_instance(tally, lam, r, t)
    while min(rep["samples"] for rep in tally.reports.values()) < samples:
        lam = _random_partition(rng, 2 * max_size)
        addable = [c for c, _ in young.covers_up(lam)]

        def pick():
            return rng.choice(addable) if rng.random() < 0.5 else rng.randint(-2 * span, 2 * span)

        _young_instance(tally, lam, pick(), pick())
    return tally.result()


# ---------------------------------------------------------------------------
# r-Bruhat order


def schubert_relations(samples: int, seed: int, n: int = 8) -> list[dict]:
    rng = random.Random(seed)
    tally = _Tally()
    for name in schubert.RELATIONS:
        for _ in range(samples):
            env, u, r = schubert.sample_relation(name, rng, n)
            holds, _ = schubert.check_relation(name, env, u, r)
            tally.add(name, holds, {"u": list(u.one_line(n)), "r": r, "letters": env})
    return tally.result()


def schubert_relations_exhaustive(n: int = 6) -> list[dict]:
    """Every instance with letters in 1..n+1 on every u in S_n and every cut r."""
    tally = _Tally()
    perms = list(all_permutations(1, n))
    for name in schubert.RELATIONS:
        letters = schubert.relation_letters(name)
        for values in itertools.combinations(range(1, n + 2), len(letters)):
            env = dict(zip(letters, values))
            for u in perms:
                for r in range(1, n):
                    holds, _ = schubert.check_relation(name, env, u, r)
                    tally.add(name, holds, {"u": list(u.one_line(n)), "r": r, "letters": env})
    return tally.result()


# ---------------------------------------------------------------------------
# 0-Bruhat order on the affine grassmannians


def affine_relations(samples: int, seed: int, ks: tuple[int, ...] = (3, 4)) -> list[dict]:
    """verify_affine_relations for each k, with the instances pooled per family."""
    share = math.ceil(samples / len(ks))
    pooled: dict[str, dict] = {}
    for k in ks:
        for rep in affine.verify_affine_relations(k, share, seed + k):
            acc = pooled.setdefault(rep["relation"], {"relation": rep["relation"], "samples": 0,
                                                      "failure_count": 0, "failures": []})
            acc["samples"] += rep["samples"]
            acc["failure_count"] += rep["failure_count"]
            acc["failures"].extend({"k": k, **f} for f in rep["failures"][: 5 - len(acc["failures"])])
    return list(pooled.values())


# ---------------------------------------------------------------------------
# commutation of the Pieri operators


def _commute(tally: _Tally, name: str, apply: Callable, start, a: int, b: int, show):
    ab = apply(b, apply(a, {start: 1}))
    ba = apply(a, apply(b, {start: 1}))
    tally.add(name, ab == ba, {"start": show(start), "a": a, "b": b})


def commutativity(young_size: int = 6, young_sum: int = 6, schubert_n: int = 6, schubert_sum: int = 5,
                  affine_k: int = 4, affine_sum: int = 4, affine_length: int = 4) -> list[dict]:
    """H_a H_b = H_b H_a on every start in the given domains, for all a + b up to the bound."""
    tally = _Tally()
    pairs = lambda bound: [(a, b) for a in range(1, bound) for b in range(a + 1, bound - a + 1)]

    for size in range(young_size + 1):
        for lam in partitions(size):
            for a, b in pairs(young_sum):
                _commute(tally, "young", young.apply_H, lam, a, b, list)

    for u in all_permutations(1, schubert_n):
        for r in range(1, schubert_n):
            for a, b in pairs(schubert_sum):
                _commute(tally, "schubert", lambda m, c, r=r: schubert.apply_schubert_H(m, c, r), u, a, b,
                         lambda p: [list(p.one_line(schubert_n)), r])

    for k in range(1, affine_k + 1):
        for level in affine.grassmannians_by_length(k, affine_length):
            for u in level:
                for a, b in pairs(affine_sum):
                    if b <= k:
                        _commute(tally, "affine-weak", affine.apply_weak_H, u, a, b, lambda p: [k, list(p.window)])
                    _commute(tally, "affine-0-bruhat", affine.apply_affine_H, u, a, b,
                             lambda p: [k, list(p.window)])
    return tally.result()


# ---------------------------------------------------------------------------
# dual-Knuth involutions


def _check_phi(tally: _Tally, u, chain, r: int):
    b = [y for _, y in chain]
    pattern = (b[0] > b[1], b[1] > b[2])
    show = {"u": list(u.one_line(7)), "r": r, "chain": [list(x) for x in chain]}
    if sum(pattern) != 1:
        tally.add("fixed", schubert.phi_involution(2, chain) == chain, show)
        return
    try:
        image = schubert.phi_involution(2, chain)
    except schubert.UnmatchedCaseError:
        tally.add("matched", False, show)
        return
    tally.add("matched", True)
    nb = [y for _, y in image]
    ok = (
        schubert.apply_chain(image, u, r) == schubert.apply_chain(chain, u, r)
        and schubert.phi_involution(2, image) == chain
        and (nb[0] > nb[1], nb[1] > nb[2]) == pattern[::-1]
    )
    tally.add("involution", ok, show)


def involutions_exhaustive(n: int = 7) -> list[dict]:
    """phi_i on every length-three chain of S_n, for every cut.

    phi_i only reads and rewrites entries i-1, i, i+1 of a chain, and those
    entries form a length-three chain between the permutations they join,
    so this covers every interval of S_n.
    """
    tally = _Tally()
    for r in range(1, n):
        for u, chain in schubert.iter_length3_chains(n, r):
            _check_phi(tally, u, chain, r)
    return tally.result()


def involutions(samples: int, seed: int, n: int = 7) -> list[dict]:
    """phi_2 on random length-three chains of random u in S_n."""
    rng = random.Random(seed)
    tally = _Tally()
    drawn = 0
    while drawn < samples:
        u = IntegerPermutation.from_window(rng.sample(range(1, n + 1), n))
        r = rng.randrange(1, n)
        chain, x = [], u
        for _ in range(3):
            opts = schubert.covers(x, r, n)
            if not opts:
                break
            label, x = rng.choice(opts)
            chain.append(label)
        if len(chain) == 3:
            _check_phi(tally, u, tuple(chain), r)
            drawn += 1
    return tally.result()


def run_suite(suite: str, samples: int, seed: int) -> list[dict]:
    if suite == "young-relations":
        return young_relations(samples, seed)
    if suite == "schubert-relations":
        return schubert_relations(samples, seed)
    if suite == "affine-relations":
        return affine_relations(samples, seed)
    if suite == "commutativity":
        return commutativity()
    if suite == "involutions":
        return involutions(samples, seed)
    raise ValueError(f"unknown suite {suite!r}; expected one of {', '.join(SUITES)}")
