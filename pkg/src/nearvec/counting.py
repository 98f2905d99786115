"""Counting R-subgroups of R^m of R-dimension k.

The count "up to reordering of coordinates" is the number of canonical
elimination outputs with the column blocks sorted: pick the total
number t of nonzero entries, a partition of t into k parts (one part
per row, descending, occupying consecutive column blocks), and a
nonzero value for each of the t - k non-leading cells.  This is

    sum_{t=k}^{m} p_k(t) (|R|-1)^(t-k)

and enumerate_canonical lists exactly the matrices the formula counts.
Genuine orbit counting under coordinate permutations is a different
(smaller) number; count_subgroup_orbits computes it by explicit
quotient at small m for comparison.
"""

from __future__ import annotations

import functools
import itertools

from .closure import BudgetExceededError, pack_vector
from .nearfield import Nearfield
from .vectors import NfMatrix, vec_add, vec_scale_right


@functools.cache
def partitions_into_parts(t: int, k: int) -> int:
    """Number of partitions of t into exactly k positive parts."""
    if t < 0 or k < 0:
        raise ValueError("t and k must be nonnegative")
    if k == 0:
        return 1 if t == 0 else 0
    if t < k:
        return 0
    return partitions_into_parts(t - 1, k - 1) + partitions_into_parts(t - k, k)


def count_subgroups(m: int, k: int, nf_order: int) -> int:
    """Number of R-subgroups of R-dimension k of R^m, up to reordering of coordinates."""
    if nf_order < 2:
        raise ValueError("nearfield order must be at least 2")
    if not 1 <= k <= m:
        raise ValueError(f"need 1 <= k <= m, got k={k}, m={m}")
    return sum(
        partitions_into_parts(t, k) * (nf_order - 1) ** (t - k)
        for t in range(k, m + 1)
    )


def _partitions_desc(t: int, k: int, maxpart: int | None = None):
    """Partitions of t into exactly k parts as descending tuples,
    lexicographically decreasing."""
    if maxpart is None:
        maxpart = t
    if k == 0:
        if t == 0:
            yield ()
        return
    for first in range(min(t - k + 1, maxpart), 0, -1):
        for rest in _partitions_desc(t - first, k - 1, first):
            yield (first,) + rest


def enumerate_canonical(m: int, k: int, nf: Nearfield, budget: int = 10 ** 6) -> list[NfMatrix]:
    """The canonical matrices the counting formula counts, in order.

    Row i has its leading 1 at the first column of the i-th block and
    arbitrary nonzero entries in the remaining part_i - 1 block columns;
    blocks are consecutive, parts descending, spare columns zero.
    """
    total = count_subgroups(m, k, nf.order)
    if total > budget:
        raise BudgetExceededError(f"{total} canonical matrices exceed the listing budget {budget}")
    out = []
    for t in range(k, m + 1):
        for parts in _partitions_desc(t, k):
            free = t - k
            starts = [0]
            for part in parts[:-1]:
                starts.append(starts[-1] + part)
            for fill in itertools.product(range(1, nf.order), repeat=free):
                rows = []
                pos = 0
                for i, part in enumerate(parts):
                    row = [0] * m
                    row[starts[i]] = 1
                    for off in range(1, part):
                        row[starts[i] + off] = fill[pos]
                        pos += 1
                    rows.append(tuple(row))
                out.append(NfMatrix(nf, tuple(rows), m))
    assert len(out) == total
    return out


def count_subgroup_orbits(m: int, k: int, nf: Nearfield, budget: int = 10 ** 6) -> int:
    """True orbit count of dimension-k R-subgroups of R^m under coordinate
    permutations, by explicit quotient.  Small m only; provided for
    comparison with count_subgroups, which it is generally below
    (e.g. the subgroups generated by (1,a) and (1,a^-1) merge under a
    column swap)."""
    order = nf.order
    if order ** k > budget or order ** m > budget:
        raise BudgetExceededError("orbit quotient out of budget")
    columns = range(m)
    perms = list(itertools.permutations(columns))
    if len(perms) * order ** k > 10 ** 7:
        raise BudgetExceededError("orbit quotient out of budget")

    # every dimension-k subgroup is generated by k rows with pairwise
    # disjoint supports and unit leading entries; enumerate all of them
    subgroups = set()
    for labels in itertools.product(range(k + 1), repeat=m):  # 0 = unused column
        rows_cols = [[j for j in columns if labels[j] == i + 1] for i in range(k)]
        if any(not cols for cols in rows_cols):
            continue
        rows_cols.sort(key=lambda cols: cols[0])
        frees = [cols[1:] for cols in rows_cols]
        nfree = sum(len(f) for f in frees)
        for fill in itertools.product(range(1, order), repeat=nfree):
            rows = []
            pos = 0
            for cols, free in zip(rows_cols, frees):
                row = [0] * m
                row[cols[0]] = 1
                for j in free:
                    row[j] = fill[pos]
                    pos += 1
                rows.append(tuple(row))
            # disjoint supports: the subgroup is the direct sum of the row modules
            elems = [(0,) * m]
            for row in rows:
                elems = [
                    vec_add(nf, e, vec_scale_right(nf, row, r))
                    for e in elems
                    for r in range(order)
                ]
            subgroups.add(frozenset(pack_vector(nf, e) for e in elems))

    orbits = set()
    for sg in subgroups:
        vecs = [tuple((c // order ** i) % order for i in range(m)) for c in sg]
        key = min(
            tuple(sorted(pack_vector(nf, tuple(v[p] for p in perm)) for v in vecs))
            for perm in perms
        )
        orbits.add(key)
    return len(orbits)
