"""Maps R^n -> R^n defined by basis images.

A map is stored as the n x n matrix whose column j is the image of the
j-th standard basis vector; it sends v to sum_j (column_j o v_j) and is
always a homomorphism of the additive group.  Linearity (commuting with
the right scalar action) holds exactly when every matrix row has at
most one nonzero entry, and the image is a submodule exactly when the
same holds per column as well; both criteria are checked against brute
force semantics in the tests.
"""

from __future__ import annotations

import enum
import functools
import itertools
from dataclasses import dataclass
from math import comb, factorial

from .nearfield import Nearfield
from .closure import BudgetExceededError, current_budget, pack_vector, unpack_vector
from .vectors import vec_add, vec_scale_right


class MapClass(enum.Enum):
    HOM_ONLY = "hom_only"
    LINEAR = "linear"
    NORMAL_LINEAR = "normal_linear"
    INVERTIBLE_NORMAL = "invertible_normal"


@dataclass(frozen=True)
class MapRep:
    """Matrix representation; matrix[i][j] is row i, column j."""

    nf: Nearfield
    n: int
    matrix: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.matrix) != self.n or any(len(r) != self.n for r in self.matrix):
            raise ValueError("matrix must be n x n")
        order = self.nf.order
        for row in self.matrix:
            for a in row:
                if not 0 <= a < order:
                    raise ValueError(f"element code {a} out of range")

    @classmethod
    def from_columns(cls, nf: Nearfield, cols) -> "MapRep":
        cols = [tuple(c) for c in cols]
        n = len(cols)
        return cls(nf, n, tuple(tuple(c[i] for c in cols) for i in range(n)))

    @classmethod
    def identity(cls, nf: Nearfield, n: int) -> "MapRep":
        return cls(nf, n, tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.matrix)

    @property
    def columns(self) -> tuple[tuple[int, ...], ...]:
        return tuple(self.column(j) for j in range(self.n))


def apply_map(T: MapRep, v) -> tuple[int, ...]:
    """sum_j column_j o v_j."""
    if len(v) != T.n:
        raise ValueError("dimension mismatch")
    nf = T.nf
    add, mul = nf.add, nf.mul
    out = [0] * T.n
    for i, row in enumerate(T.matrix):
        acc = 0
        for a, r in zip(row, v):
            acc = add(acc, mul(a, r))
        out[i] = acc
    return tuple(out)


# -- packed helper tables for the brute-force semantics ----------------------

@functools.lru_cache(maxsize=None)
def _sem_tables(nf: Nearfield, n: int):
    """(vscale, vadd, vneg) on packed codes; None when the space is too big."""
    space = nf.order ** n
    if space > 1024:
        return None
    vscale = [
        [pack_vector(nf, vec_scale_right(nf, unpack_vector(nf, n, c), r))
         for r in range(nf.order)]
        for c in range(space)
    ]
    vadd = [
        [pack_vector(nf, vec_add(nf, unpack_vector(nf, n, a), unpack_vector(nf, n, b)))
         for b in range(space)]
        for a in range(space)
    ]
    vneg = [pack_vector(nf, tuple(nf.neg(x) for x in unpack_vector(nf, n, c)))
            for c in range(space)]
    return vscale, vadd, vneg


def _check_sem_budget(nf, n, budget):
    limit = current_budget() if budget is None else budget
    space = nf.order ** n
    if space > limit:
        raise BudgetExceededError(f"|R|^n = {space} exceeds the element budget {limit}")
    return space


def _images_packed(T: MapRep, space):
    nf, n = T.nf, T.n
    tabs = _sem_tables(nf, n)
    if tabs is not None:
        vscale, vadd, _ = tabs
        colp = [pack_vector(nf, T.column(j)) for j in range(n)]
        out = []
        for c in range(space):
            v = unpack_vector(nf, n, c)
            acc = 0
            for j in range(n):
                acc = vadd[acc][vscale[colp[j]][v[j]]]
            out.append(acc)
        return out
    return [pack_vector(nf, apply_map(T, unpack_vector(nf, n, c))) for c in range(space)]


def linear_violation(T: MapRep, budget: int | None = None):
    """First (v, r) with T(v o r) != T(v) o r in lexicographic packed order, or None."""
    nf, n = T.nf, T.n
    space = _check_sem_budget(nf, n, budget)
    img = _images_packed(T, space)
    tabs = _sem_tables(nf, n)
    if tabs is not None:
        vscale, _, _ = tabs
        for c in range(space):
            ic = img[c]
            row = vscale[c]
            for r in range(nf.order):
                if img[row[r]] != vscale[ic][r]:
                    return unpack_vector(nf, n, c), r
        return None
    for c in range(space):
        v = unpack_vector(nf, n, c)
        for r in range(nf.order):
            if img[pack_vector(nf, vec_scale_right(nf, v, r))] != pack_vector(
                    nf, vec_scale_right(nf, unpack_vector(nf, n, img[c]), r)):
                return v, r
    return None


def is_linear(T: MapRep, mode: str = "criterion", budget: int | None = None) -> bool:
    if mode == "criterion":
        return all(sum(1 for a in row if a) <= 1 for row in T.matrix)
    if mode == "semantic":
        return linear_violation(T, budget) is None
    raise ValueError("mode must be 'criterion' or 'semantic'")


def is_normal(T: MapRep, mode: str = "criterion", budget: int | None = None) -> bool:
    """Linear maps only: is the image a submodule of R^n?"""
    if not is_linear(T, "criterion"):
        raise ValueError("normality is defined for linear maps only")
    if mode == "criterion":
        return all(sum(1 for i in range(T.n) if T.matrix[i][j]) <= 1 for j in range(T.n))
    if mode != "semantic":
        raise ValueError("mode must be 'criterion' or 'semantic'")
    nf, n = T.nf, T.n
    space = _check_sem_budget(nf, n, budget)
    img = _images_packed(T, space)
    img_set = set(img)
    tabs = _sem_tables(nf, n)
    order = nf.order
    if tabs is not None:
        vscale, vadd, vneg = tabs
        for mcode in range(space):
            mrow = vadd[mcode]
            for a in img_set:
                ma = mrow[a]
                for r in range(order):
                    if vadd[vscale[ma][r]][vneg[vscale[mcode][r]]] not in img_set:
                        return False
        return True
    from .vectors import vec_sub
    for mcode in range(space):
        mv = unpack_vector(nf, n, mcode)
        for a in img_set:
            av = unpack_vector(nf, n, a)
            s = vec_add(nf, mv, av)
            for r in range(order):
                d = vec_sub(nf, vec_scale_right(nf, s, r), vec_scale_right(nf, mv, r))
                if pack_vector(nf, d) not in img_set:
                    return False
    return True


def _is_scaled_permutation(T: MapRep) -> bool:
    return (
        all(sum(1 for a in row if a) == 1 for row in T.matrix)
        and all(sum(1 for i in range(T.n) if T.matrix[i][j]) == 1 for j in range(T.n))
    )


def classify(T: MapRep) -> MapClass:
    if not is_linear(T, "criterion"):
        return MapClass.HOM_ONLY
    if not is_normal(T, "criterion"):
        return MapClass.LINEAR
    if _is_scaled_permutation(T):
        return MapClass.INVERTIBLE_NORMAL
    return MapClass.NORMAL_LINEAR


def is_bijective(T: MapRep, budget: int | None = None) -> bool:
    """Structural for normal linear maps (scaled permutation); image count otherwise."""
    if is_linear(T, "criterion") and is_normal(T, "criterion"):
        return _is_scaled_permutation(T)
    space = _check_sem_budget(T.nf, T.n, budget)
    return len(set(_images_packed(T, space))) == space


def compose(T1: MapRep, T2: MapRep) -> MapRep:
    """Apply T1 first, then T2; the matrix is the product M2 . M1.

    As a function on R^n the product representation is faithful when T2
    is linear (single-term rows need no right distributivity); the
    matrix itself is always the basis-image matrix of the composite.
    """
    if T1.nf is not T2.nf or T1.n != T2.n:
        raise ValueError("maps must live on the same space")
    nf, n = T1.nf, T1.n
    add, mul = nf.add, nf.mul
    m2, m1 = T2.matrix, T1.matrix
    prod = tuple(
        tuple(
            functools.reduce(add, (mul(m2[i][k], m1[k][j]) for k in range(n)))
            for j in range(n)
        )
        for i in range(n)
    )
    return MapRep(nf, n, prod)


def map_sum(T1: MapRep, T2: MapRep) -> MapRep:
    """Raw entrywise sum; linear maps are NOT closed under this."""
    if T1.nf is not T2.nf or T1.n != T2.n:
        raise ValueError("maps must live on the same space")
    add = T1.nf.add
    return MapRep(T1.nf, T1.n,
                  tuple(tuple(add(a, b) for a, b in zip(r1, r2))
                        for r1, r2 in zip(T1.matrix, T2.matrix)))


def scale_family(T: MapRep, scalars) -> MapRep:
    """Column j right-scaled by scalars[j]; preserves linearity."""
    scalars = tuple(scalars)
    if len(scalars) != T.n:
        raise ValueError("need one scalar per column")
    if not is_linear(T, "criterion"):
        raise ValueError("scale_family is defined for linear maps only")
    mul = T.nf.mul
    return MapRep(T.nf, T.n,
                  tuple(tuple(mul(a, scalars[j]) for j, a in enumerate(row))
                        for row in T.matrix))


def enumerate_maps(nf: Nearfield, n: int, budget: int | None = None):
    """All |R|^(n^2) maps, row-major lexicographic on entry codes."""
    limit = current_budget() if budget is None else budget
    total = nf.order ** (n * n)
    if total > limit:
        raise BudgetExceededError(f"|R|^(n^2) = {total} exceeds the element budget {limit}")
    rows = list(itertools.product(range(nf.order), repeat=n))
    for mat in itertools.product(rows, repeat=n):
        yield MapRep(nf, n, mat)


def count_maps(nf: Nearfield, n: int, kind: str, method: str = "closed_form",
               budget: int | None = None) -> int:
    """Counts for kind in {all, linear, normal}."""
    order = nf.order
    if kind not in ("all", "linear", "normal"):
        raise ValueError("kind must be 'all', 'linear' or 'normal'")
    if method == "closed_form":
        if kind == "all":
            return order ** (n * n)
        if kind == "linear":
            # per row: all-zero, or one of n positions holding one of |R|-1 values
            return (1 + n * (order - 1)) ** n
        # place j nonzero cells like non-attacking rooks, values from R*
        return sum(comb(n, j) ** 2 * factorial(j) * (order - 1) ** j for j in range(n + 1))
    if method != "enumeration":
        raise ValueError("method must be 'closed_form' or 'enumeration'")
    limit = current_budget() if budget is None else budget
    total = order ** (n * n)
    if total > limit:
        raise BudgetExceededError(f"|R|^(n^2) = {total} exceeds the element budget {limit}")
    if kind == "all":
        return sum(1 for _ in itertools.product(range(order), repeat=n * n))
    rows = list(itertools.product(range(order), repeat=n))
    nnz = [sum(1 for a in row if a) for row in rows]
    count = 0
    for mat in itertools.product(range(len(rows)), repeat=n):
        if any(nnz[ri] > 1 for ri in mat):
            continue
        if kind == "normal":
            cols = [0] * n
            ok = True
            for ri in mat:
                row = rows[ri]
                for j, a in enumerate(row):
                    if a:
                        cols[j] += 1
                        if cols[j] > 1:
                            ok = False
                            break
                if not ok:
                    break
            if not ok:
                continue
        count += 1
    return count
