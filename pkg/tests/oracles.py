"""Independent reference computations used to cross-check the library.

Nothing here imports pierimonoid; each oracle recomputes its answer from the
textbook definition by brute force.
"""

from __future__ import annotations

import itertools
from collections import Counter


def partitions(n: int, max_part: int | None = None) -> list[tuple[int, ...]]:
    max_part = n if max_part is None else max_part
    if n == 0:
        return [()]
    out = []
    for first in range(min(n, max_part), 0, -1):
        out.extend((first,) + rest for rest in partitions(n - first, first))
    return out


def _skew_cells(outer, inner):
    inner = tuple(inner) + (0,) * (len(outer) - len(inner))
    return [(i, j) for i, row in enumerate(outer) for j in range(inner[i], row)]


def lr_coefficients(outer: tuple[int, ...], inner: tuple[int, ...]) -> dict[tuple[int, ...], int]:
    """s_{outer/inner} = sum c_mu s_mu, counting Littlewood-Richardson tableaux.

    A filling is counted when rows weakly increase, columns strictly increase,
    and the word read right to left along rows, top row first, is a lattice word.
    """
    cells = _skew_cells(outer, inner)
    # fill rows top to bottom, each row right to left, so the lattice test runs as we go
    order = sorted(cells, key=lambda c: (c[0], -c[1]))
    n = len(cells)
    counts: Counter = Counter()
    filling: dict[tuple[int, int], int] = {}
    used = [0] * (n + 2)

    def rec(pos: int):
        if pos == n:
            counts[tuple(x for x in used[1:] if x)] += 1
            return
        i, j = order[pos]
        for v in range(1, n + 1):
            right = filling.get((i, j + 1))
            if right is not None and v > right:
                continue
            above = filling.get((i - 1, j))
            if above is not None and v <= above:
                continue
            if v > 1 and used[v] + 1 > used[v - 1]:
                continue
            filling[(i, j)] = v
            used[v] += 1
            rec(pos + 1)
            used[v] -= 1
            del filling[(i, j)]

    rec(0)
    return dict(counts)


def _h_index(parts):
    """Sort a multiset of h indices into a partition, None if some h_m has m < 0."""
    if any(p < 0 for p in parts):
        return None
    return tuple(sorted((p for p in parts if p), reverse=True))


def jacobi_trudi(lam: tuple[int, ...]) -> dict[tuple[int, ...], int]:
    """h-expansion of s_lam from det(h_{lam_i - i + j}) by the Leibniz formula."""
    n = len(lam)
    out: Counter = Counter()
    for perm in itertools.permutations(range(n)):
        sign = 1
        for a, b in itertools.combinations(range(n), 2):
            if perm[a] > perm[b]:
                sign = -sign
        idx = _h_index([lam[i] - i + perm[i] for i in range(n)])
        if idx is not None:
            out[idx] += sign
    return {k: v for k, v in out.items() if v}


def descent_composition(labels) -> tuple[int, ...]:
    parts, run = [], 1
    for x, y in zip(labels, labels[1:]):
        if x > y:
            parts.append(run)
            run = 1
        else:
            run += 1
    return tuple(parts + [run]) if labels else ()


def count_inversions(seq) -> int:
    return sum(1 for i, j in itertools.combinations(range(len(seq)), 2) if seq[i] > seq[j])


def has_321(seq) -> bool:
    return any(seq[i] > seq[j] > seq[k] for i, j, k in itertools.combinations(range(len(seq)), 3))
