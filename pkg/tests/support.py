"""Independent oracles used to cross-check library results.

Everything here is deliberately naive and kept free of library
internals: plain recursion, itertools expansion, direct property scans
on integer grids.
"""

from __future__ import annotations

import itertools
from functools import lru_cache


@lru_cache(maxsize=None)
def divisors_ge2(n: int) -> tuple[int, ...]:
    return tuple(d for d in range(2, n + 1) if n % d == 0)


def oracle_enumerate(dims) -> list[tuple[tuple[int, int], ...]]:
    """All joint ordered factorisations by brute-force interleaving.

    Chooses any direction other than the previous one and any divisor
    of the remaining quotient at every level.  Output order is whatever
    the recursion produces; callers compare as sets.
    """
    dims = tuple(dims)
    results: list[tuple[tuple[int, int], ...]] = []

    def rec(remaining, last, acc):
        if all(r == 1 for r in remaining):
            results.append(tuple(acc))
            return
        for direction in range(len(dims)):
            if direction == last:
                continue
            for factor in divisors_ge2(remaining[direction]):
                nxt = list(remaining)
                nxt[direction] //= factor
                rec(nxt, direction, acc + [(direction + 1, factor)])

    rec(list(dims), None, [])
    return results


def oracle_count(dims) -> int:
    """Leaf count of the same recursion, without materialising steps.

    No memoisation: every completion is walked.  Tracks how many
    directions still need factoring so a leaf is detected in O(1).
    """
    dims = tuple(dims)
    m = len(dims)

    def rec(remaining, last, open_dirs):
        if open_dirs == 0:
            return 1
        total = 0
        for direction in range(m):
            if direction == last:
                continue
            keep = remaining[direction]
            if keep == 1:
                continue
            for factor in divisors_ge2(keep):
                left = keep // factor
                remaining[direction] = left
                total += rec(remaining, direction, open_dirs - (left == 1))
            remaining[direction] = keep
        return total

    return rec(list(dims), -1, m)


def ordered_factorizations(n: int) -> list[tuple[int, ...]]:
    """Every ordered tuple of integers >= 2 whose product is n."""
    if n < 2:
        return []
    out = [(n,)]
    for first in divisors_ge2(n):
        if first == n:
            continue
        for tail in ordered_factorizations(n // first):
            out.append((first,) + tail)
    return out


def dims_vectors_up_to(max_product: int):
    """(product, dims) pairs for every dims vector, ascending product."""
    for product in range(2, max_product + 1):
        for dims in ordered_factorizations(product):
            yield product, dims


def minkowski_oracle(sets) -> list[int]:
    """Sum multiset via itertools.product, independent of the library."""
    return sorted(sum(combo) for combo in itertools.product(*sets))


# Grid property scans for the square families (plain integer rows).

def grid_entry_set_ok(rows) -> bool:
    n = len(rows)
    return sorted(x for row in rows for x in row) == list(range(1, n * n + 1))


def grid_vertex_ok(rows) -> bool:
    n = len(rows)
    return all(
        rows[i][j] + rows[k][l] == rows[i][l] + rows[k][j]
        for i in range(n) for k in range(n) for j in range(n) for l in range(n)
    )


def grid_reversal_ok(rows) -> bool:
    n = len(rows)
    for i in range(n):
        for j in range(n):
            if rows[i][j] + rows[i][n - 1 - j] != rows[i][0] + rows[i][n - 1]:
                return False
            if rows[i][j] + rows[n - 1 - i][j] != rows[0][j] + rows[n - 1][j]:
                return False
    return True


def grid_magic_ok(rows) -> bool:
    n = len(rows)
    want = n * (n * n + 1) // 2
    if any(sum(row) != want for row in rows):
        return False
    return all(sum(rows[i][j] for i in range(n)) == want for j in range(n))


def grid_associated_ok(rows) -> bool:
    n = len(rows)
    return all(
        rows[i][j] + rows[n - 1 - i][n - 1 - j] == n * n + 1
        for i in range(n) for j in range(n)
    )


def grid_blocks_ok(rows) -> bool:
    n = len(rows)
    want = 2 * (n * n + 1)
    return all(
        rows[i][j] + rows[i][(j + 1) % n] + rows[(i + 1) % n][j]
        + rows[(i + 1) % n][(j + 1) % n] == want
        for i in range(n) for j in range(n)
    )


def grid_diagonal_pairs_ok(rows) -> bool:
    n = len(rows)
    half = n // 2
    return all(
        rows[i][j] + rows[(i + half) % n][(j + half) % n] == n * n + 1
        for i in range(n) for j in range(n)
    )
