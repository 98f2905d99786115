"""Brute-force ground truth for gen, the LC_p strata, and related notions.

Vector sets are stored as sorted packed codes.  Packing is mixed-radix
with radix q^n = p^d, so a packed vector code is simply the base-p digit
string of all its coordinates laid end to end; componentwise addition of
vectors is digitwise base-p addition of packed codes.

The linear-combination step LC -> LC' seeds the products {w o lam} and
closes them under addition.  Because the additive group of R^m is
elementary abelian, the additive closure of the products equals their
GF(p)-span, so the step reduces the products to an independent spanning
subset and enumerates the span breadth-first; the result is identical to
pairwise accumulation over the membership bitmap, in linear work.

Everything is budget-guarded: the enumerated space R^m may not exceed
the configured element budget (NEARVEC_BUDGET, default 10^6).
"""

from __future__ import annotations

import functools
import os
from dataclasses import dataclass

from .nearfield import Nearfield
from .vectors import vec_scale_right

DEFAULT_BUDGET = 10 ** 6
BUDGET_ENV = "NEARVEC_BUDGET"

_VADD_TABLE_CAP = 1024      # full vector-addition table below this space size
_VSCALE_TABLE_CAP = 10 ** 6  # space * order cap for the scaling table


class BudgetExceededError(RuntimeError):
    pass


def current_budget() -> int:
    return int(os.environ.get(BUDGET_ENV, DEFAULT_BUDGET))


def _check_budget(nf: Nearfield, m: int, budget: int | None) -> int:
    limit = current_budget() if budget is None else budget
    space = nf.order ** m
    if space > limit:
        raise BudgetExceededError(f"|R|^m = {space} exceeds the element budget {limit}")
    return space


def pack_vector(nf: Nearfield, v) -> int:
    code = 0
    for a in reversed(v):
        code = code * nf.order + a
    return code


def unpack_vector(nf: Nearfield, m: int, code: int) -> tuple[int, ...]:
    out = []
    for _ in range(m):
        code, a = divmod(code, nf.order)
        out.append(a)
    return tuple(out)


def _padd(p: int, a: int, b: int) -> int:
    # digitwise base-p addition == componentwise vector addition on packed codes
    out, mult = 0, 1
    while a or b:
        out += ((a + b) % p) * mult
        a //= p
        b //= p
        mult *= p
    return out


@functools.lru_cache(maxsize=None)
def _space_tables(nf: Nearfield, m: int):
    """(vadd, vscale) lookup tables for small spaces, None entries when too big."""
    space = nf.order ** m
    p = nf.p
    vadd = None
    if space <= _VADD_TABLE_CAP:
        vadd = [[_padd(p, a, b) for b in range(space)] for a in range(space)]
    vscale = None
    if space * nf.order <= _VSCALE_TABLE_CAP:
        vscale = [
            [pack_vector(nf, vec_scale_right(nf, unpack_vector(nf, m, c), r))
             for r in range(nf.order)]
            for c in range(space)
        ]
    return vadd, vscale


@dataclass(frozen=True)
class VectorSet:
    """Deduplicated set of vectors in R^m, canonically ordered by packed code."""

    nf: Nearfield
    m: int
    codes: tuple[int, ...]

    @classmethod
    def from_vectors(cls, nf: Nearfield, m: int, vectors) -> "VectorSet":
        seen = set()
        for v in vectors:
            if len(v) != m:
                raise ValueError("dimension mismatch")
            seen.add(pack_vector(nf, v))
        return cls(nf, m, tuple(sorted(seen)))

    def vectors(self) -> tuple[tuple[int, ...], ...]:
        return tuple(unpack_vector(self.nf, self.m, c) for c in self.codes)

    def __len__(self) -> int:
        return len(self.codes)

    def __contains__(self, v) -> bool:
        return pack_vector(self.nf, v) in set(self.codes)


def _gfp_reduce(basis: list[list[int]], pivots: list[int], digits: list[int], p: int):
    """Reduce digits against the echelon basis; append if independent."""
    for row, piv in zip(basis, pivots):
        c = digits[piv]
        if c:
            for i, ri in enumerate(row):
                digits[i] = (digits[i] - c * ri) % p
    piv = next((i for i, c in enumerate(digits) if c), None)
    if piv is None:
        return
    inv = pow(digits[piv], -1, p)
    basis.append([(c * inv) % p for c in digits])
    pivots.append(piv)


def lc_step(S: VectorSet, budget: int | None = None) -> VectorSet:
    """One stratum up: the additive subgroup generated by {w o lam}."""
    nf, m = S.nf, S.m
    space = _check_budget(nf, m, budget)
    p = nf.p
    ndig = m * nf.d
    vadd, vscale = _space_tables(nf, m)

    # seed products, deduplicated
    seen = bytearray(space)
    seen[0] = 1  # the empty sum
    prods = []
    for w in S.codes:
        if vscale is not None:
            row = vscale[w]
            for r in range(nf.order):
                c = row[r]
                if not seen[c]:
                    seen[c] = 1
                    prods.append(c)
        else:
            wv = unpack_vector(nf, m, w)
            for r in range(nf.order):
                c = pack_vector(nf, vec_scale_right(nf, wv, r))
                if not seen[c]:
                    seen[c] = 1
                    prods.append(c)

    # independent spanning subset over GF(p)
    basis: list[list[int]] = []
    pivots: list[int] = []
    for c in prods:
        digits = [0] * ndig
        x, i = c, 0
        while x:
            x, digits[i] = divmod(x, p)[0], x % p
            i += 1
        _gfp_reduce(basis, pivots, digits, p)

    # enumerate the span breadth-first
    out = [0]
    for row in basis:
        b = 0
        for c in reversed(row):
            b = b * p + c
        multiples = []
        cur = b
        for _ in range(p - 1):
            multiples.append(cur)
            cur = _padd(p, cur, b)
        grown = list(out)
        if vadd is not None:
            for mb in multiples:
                arow = vadd[mb]
                grown.extend(arow[x] for x in out)
        else:
            for mb in multiples:
                grown.extend(_padd(p, x, mb) for x in out)
        out = grown
    return VectorSet(nf, m, tuple(sorted(out)))


def gen_closure(S: VectorSet, budget: int | None = None) -> VectorSet:
    """Least fixpoint of lc_step containing S: the smallest R-subgroup."""
    space = _check_budget(S.nf, S.m, budget)
    cur = S
    while True:
        nxt = lc_step(cur, budget)
        if nxt.codes == cur.codes or len(nxt) == space:
            return nxt
        cur = nxt


def lc_index(nf: Nearfield, vectors, budget: int | None = None) -> int:
    """Least p with LC_p(V) = R^m; error when gen(V) falls short."""
    vectors = [tuple(v) for v in vectors]
    if not vectors:
        raise ValueError("need at least one vector")
    m = len(vectors[0])
    space = _check_budget(nf, m, budget)
    cur = VectorSet.from_vectors(nf, m, vectors)
    p = 0
    while True:
        if len(cur) == space:
            return p
        nxt = lc_step(cur, budget)
        if nxt.codes == cur.codes:
            raise ValueError("index undefined: gen != R^m")
        cur = nxt
        p += 1


def is_gamma_dependent(nf: Nearfield, vectors, gamma: int,
                       budget: int | None = None) -> tuple[bool, int | None]:
    """Does some v_i lie in LC_gamma of the remaining vectors?

    Returns (True, i) for the first such i (0-based), else (False, None).
    """
    if gamma < 1:
        raise ValueError("gamma must be a positive integer")
    vectors = [tuple(v) for v in vectors]
    if not vectors:
        return False, None
    m = len(vectors[0])
    _check_budget(nf, m, budget)
    for i, v in enumerate(vectors):
        others = vectors[:i] + vectors[i + 1:]
        cur = VectorSet.from_vectors(nf, m, others)
        for _ in range(gamma):
            nxt = lc_step(cur, budget)
            if nxt.codes == cur.codes:
                break
            cur = nxt
        if pack_vector(nf, v) in set(cur.codes):
            return True, i
    return False, None


@dataclass(frozen=True)
class Lc1Report:
    """Measured |LC_1(V)| against the t^k law."""

    k: int
    m: int
    size: int
    bound: int             # |R|^k
    two_independent: bool
    within_bound: bool     # size <= bound, unconditional
    equality: bool         # size == bound
    k_le_m: bool


def check_lc1_cardinality(nf: Nearfield, vectors, budget: int | None = None) -> Lc1Report:
    vectors = [tuple(v) for v in vectors]
    if not vectors:
        raise ValueError("need at least one vector")
    m = len(vectors[0])
    _check_budget(nf, m, budget)
    k = len(vectors)
    lc1 = lc_step(VectorSet.from_vectors(nf, m, vectors), budget)
    size = len(lc1)
    bound = nf.order ** k
    two_indep, _ = is_gamma_dependent(nf, vectors, 2, budget)
    two_indep = not two_indep
    return Lc1Report(
        k=k, m=m, size=size, bound=bound,
        two_independent=two_indep,
        within_bound=size <= bound,
        equality=size == bound,
        k_le_m=k <= m,
    )
