"""Seed sets spanning R^m with far fewer than m vectors.

Over a proper nearfield the whole space R^m is generated by k rows where
k grows like the square root of m: the matrix V_m consists of a k x k
identity block followed, stage by stage, by every column of the shape
(1, ..., 1, s, ..., s) with j <= k leading rows occupied (counter+1 ones,
then a constant s from S = R \\ {0, 1}, zero-padded).  Stage j
contributes (j-1)(|R|-2) columns, so k rows last exactly up to

    u_k = k + (|R|-2) k (k-1) / 2

columns, and the row count for a given m is the integer ceiling of the
positive root of that quadratic.  All of it is exact integer arithmetic;
no floating point enters the ceiling.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .nearfield import Nearfield
from .vectors import NfMatrix

MAX_SEED_WIDTH = 1 << 12


def u_max(k: int, nf_order: int) -> int:
    """Largest m whose seed matrix has k rows (u_0 = 0)."""
    if nf_order < 3:
        raise ValueError("u_k is defined for |R| >= 3")
    if k < 0:
        raise ValueError("k must be nonnegative")
    u = 0
    for i in range(1, k + 1):
        u += (nf_order - 2) * (i - 1) + 1
    closed = ((nf_order - 2) * (k - 1) + 2) * k // 2 if k else 0
    assert u == closed
    return u


def seed_number(m: int, nf_order: int) -> int:
    """Row count of V_m: the exact ceiling of
    (|R| + sqrt(|R|^2 + 8(|R|-2)m - 8|R| + 16) - 4) / (2(|R|-2))."""
    if nf_order < 3:
        raise ValueError("seed number is defined for |R| >= 3")
    if m < 1:
        raise ValueError("m must be positive")
    a = nf_order - 4
    b = 2 * (nf_order - 2)
    disc = nf_order ** 2 + 8 * (nf_order - 2) * m - 8 * nf_order + 16
    # least k with k*b - a >= sqrt(disc), decided in exact integer arithmetic
    k = max((a + math.isqrt(disc)) // b, 0)
    while k * b - a < 0 or (k * b - a) ** 2 < disc:
        k += 1
    while k > 1 and (k - 1) * b - a >= 0 and ((k - 1) * b - a) ** 2 >= disc:
        k -= 1
    assert u_max(k - 1, nf_order) < m <= u_max(k, nf_order)
    return k


@dataclass(frozen=True)
class SeedMatrix:
    """V_m together with its row count and the ordering of S used."""

    matrix: NfMatrix
    k: int
    s_order: tuple[int, ...]


def build_seed(m: int, nf: Nearfield) -> SeedMatrix:
    """The k x m seed matrix V_m whose rows generate R^m."""
    if nf.n == 1:
        raise ValueError("seed construction requires a proper nearfield (n >= 2)")
    if m < 1:
        raise ValueError("m must be positive")
    if m > MAX_SEED_WIDTH:
        raise ValueError(f"m exceeds the width limit {MAX_SEED_WIDTH}")
    k = seed_number(m, nf.order)
    s_order = tuple(range(2, nf.order))
    cols = [tuple(1 if i == j else 0 for i in range(k)) for j in range(k)]
    for j in range(2, k + 1):
        pad = (0,) * (k - j)
        for counter in range(j - 1):
            ones = (1,) * (counter + 1)
            for s in s_order:
                cols.append(ones + (s,) * (j - 1 - counter) + pad)
    cols = cols[:m]
    rows = tuple(tuple(col[i] for col in cols) for i in range(k))
    return SeedMatrix(NfMatrix(nf, rows, m), k, s_order)


def verify_seed(V: NfMatrix) -> bool:
    """Does gen(rows of V) equal all of R^m?

    Decided through the elimination decomposition; for small spaces the
    closure oracle independently confirms the verdict.
    """
    from .ege import ege

    ok = ege(V).dimension == V.width
    if V.nf.order ** V.width <= 10 ** 4:
        from .closure import VectorSet, gen_closure

        size = len(gen_closure(VectorSet.from_vectors(V.nf, V.width, V.rows)))
        if (size == V.nf.order ** V.width) != ok:
            raise RuntimeError("elimination and closure oracle disagree on the seed property")
    return ok
