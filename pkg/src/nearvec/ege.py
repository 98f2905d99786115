"""Expanded Gaussian Elimination over a nearfield.

Ordinary row reduction works over a nearfield because row operations
only ever multiply rows by scalars on the right and add rows, both of
which preserve the generated R-subgroup.  What it cannot do is clear a
column that holds trailing entries of two different pivot rows: using
one pivot row against the other would disturb the earlier pivot
columns.  The way out is to manufacture a brand-new row from inside the
generated subgroup whose leading entry sits exactly on the conflict
column, exploiting a failure of right distributivity:

    theta = (w_r o a' + w_s o b') o lam - w_r o (a' o lam) - w_s o (b' o lam)

with a' = (w_r^j)^-1 o alpha, b' = (w_s^j)^-1 o beta for a witness
triple (alpha + beta) o lam != alpha o lam + beta o lam.  Every entry of
theta left of the conflict column j cancels (at most one of the two
rows is nonzero there), while the j entry equals the witness defect and
so cannot vanish.  Normalizing theta yields a pivot row for column j;
back-substituting it clears the conflict, and re-running row reduction
restores echelon shape.  The first conflict column strictly increases
from round to round, so at most `width` of these steps are needed.

The end result is a basis whose columns have pairwise disjoint supports,
exhibiting the generated subgroup as a direct sum of cyclic modules u_i R.
Every step is traced and traces replay bit-exactly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .nearfield import Nearfield, Witness
from .vectors import NfMatrix, left_multiple_of, vec_add, vec_scale_right, vec_sub


@dataclass(frozen=True)
class Step:
    """One traced operation.  Row/column indices are 0-based here; the
    textual trace format is 1-based."""

    kind: str                                   # swap | scale | eliminate | trick
    r: int = -1                                 # pivot row / first swap row
    s: int = -1                                 # second swap row / eliminated row
    c: int = -1                                 # scalar code (scale factor or multiplier)
    col: int = -1                               # trick conflict column
    witness: tuple[int, int, int] | None = None
    theta: tuple[int, ...] | None = None
    phi: tuple[int, ...] | None = None


@dataclass(frozen=True)
class GenDecomposition:
    """EGE output: basis rows with pairwise disjoint column supports.

    canonical is False only over a field (n = 1) when a conflict column
    remained; the basis is then the plain reduced row echelon form.
    """

    basis: NfMatrix
    dimension: int
    trace: tuple[Step, ...]
    canonical: bool


def _scale_row(nf, row, c):
    mul = nf.mul
    return tuple(mul(a, c) for a in row)


def _elim_row(nf, target, pivot_row, c):
    # target - pivot_row o c, componentwise
    sub, mul = nf.sub, nf.mul
    return tuple(sub(t, mul(w, c)) for t, w in zip(target, pivot_row))


def _rref_inplace(nf: Nearfield, rows: list[tuple[int, ...]], width: int) -> list[Step]:
    """Full reduced row echelon form, recording steps.  Zero rows sink to
    the bottom and are kept in place (traces stay replayable)."""
    steps = []
    pr = 0
    k = len(rows)
    for col in range(width):
        pivot = next((i for i in range(pr, k) if rows[i][col]), None)
        if pivot is None:
            continue
        if pivot != pr:
            rows[pr], rows[pivot] = rows[pivot], rows[pr]
            steps.append(Step("swap", r=pr, s=pivot))
        lead = rows[pr][col]
        if lead != 1:
            c = nf.inv(lead)
            rows[pr] = _scale_row(nf, rows[pr], c)
            steps.append(Step("scale", r=pr, c=c))
        for i in range(k):
            if i != pr and rows[i][col]:
                a = rows[i][col]
                rows[i] = _elim_row(nf, rows[i], rows[pr], a)
                steps.append(Step("eliminate", r=pr, s=i, c=a))
        pr += 1
    return steps


def _first_conflict(rows, width) -> int | None:
    for col in range(width):
        seen = 0
        for row in rows:
            if row[col]:
                seen += 1
                if seen == 2:
                    return col
    return None


def _trick_inplace(nf: Nearfield, rows: list, col: int, w: Witness) -> Step:
    """Apply the distributivity trick at `col`; mutates rows, returns the Step."""
    hits = [i for i in range(len(rows)) if rows[i][col]]
    r, s = hits[0], hits[1]
    wr, ws = rows[r], rows[s]
    a1 = nf.mul(nf.inv(wr[col]), w.alpha)
    b1 = nf.mul(nf.inv(ws[col]), w.beta)
    mixed = vec_add(nf, vec_scale_right(nf, wr, a1), vec_scale_right(nf, ws, b1))
    theta = vec_sub(
        nf,
        vec_sub(nf, vec_scale_right(nf, mixed, w.lam), vec_scale_right(nf, wr, nf.mul(a1, w.lam))),
        vec_scale_right(nf, ws, nf.mul(b1, w.lam)),
    )
    assert theta[col] != 0 and not any(theta[:col])
    phi = vec_scale_right(nf, theta, nf.inv(theta[col]))
    rows[r] = vec_sub(nf, wr, vec_scale_right(nf, phi, wr[col]))
    rows[s] = vec_sub(nf, ws, vec_scale_right(nf, phi, ws[col]))
    rows.append(phi)
    return Step("trick", col=col, witness=(w.alpha, w.beta, w.lam), theta=theta, phi=phi)


def rref(M: NfMatrix) -> tuple[NfMatrix, tuple[Step, ...]]:
    """Reduced row echelon form over the nearfield; zero rows dropped."""
    rows = list(M.rows)
    steps = _rref_inplace(M.nf, rows, M.width)
    kept = tuple(row for row in rows if any(row))
    return NfMatrix(M.nf, kept, M.width), tuple(steps)


def distributivity_trick(M: NfMatrix, col: int, w: Witness) -> NfMatrix:
    """One trick step at the first conflict column `col` (0-based).

    Preconditions: every column left of `col` has at most one nonzero
    entry, `col` has at least two, and `w` really violates right
    distributivity.  With exactly two nonzero entries the returned
    matrix has a single nonzero (the new pivot) in column `col`; with
    more, the following rref pass clears the rest against it.
    """
    nf = M.nf
    if not (0 <= col < M.width):
        raise ValueError("column index out of range")
    for c in range(col):
        if sum(1 for row in M.rows if row[c]) > 1:
            raise ValueError(f"column {c} already has two nonzero entries before {col}")
    if sum(1 for row in M.rows if row[col]) < 2:
        raise ValueError(f"column {col} is not a conflict column")
    lhs = nf.mul(nf.add(w.alpha, w.beta), w.lam)
    rhs = nf.add(nf.mul(w.alpha, w.lam), nf.mul(w.beta, w.lam))
    if lhs == rhs:
        raise ValueError("witness does not violate right distributivity")
    rows = list(M.rows)
    _trick_inplace(nf, rows, col, w)
    return NfMatrix(nf, tuple(rows), M.width)


def ege(M: NfMatrix) -> GenDecomposition:
    """Decompose gen(rows of M) as a direct sum of cyclic modules.

    Alternates row reduction with the distributivity trick until every
    column has at most one nonzero entry.  Over a field with a conflict
    column no witness exists; the plain RREF is returned with
    canonical=False.
    """
    nf = M.nf
    rows = list(M.rows)
    steps = _rref_inplace(nf, rows, M.width)
    last = -1
    while True:
        col = _first_conflict(rows, M.width)
        if col is None:
            canonical = True
            break
        w = nf.find_witness()
        if w is None:
            canonical = False
            break
        assert col > last, "conflict column must strictly increase"
        last = col
        steps.append(_trick_inplace(nf, rows, col, w))
        steps.extend(_rref_inplace(nf, rows, M.width))
    basis = NfMatrix(nf, tuple(row for row in rows if any(row)), M.width)
    return GenDecomposition(basis, basis.n_rows, tuple(steps), canonical)


def replay(M: NfMatrix, steps) -> NfMatrix:
    """Apply a trace to M; returns the final matrix (zero rows dropped)."""
    rows = list(M.rows)
    for st in steps:
        _apply_step(M.nf, rows, st)
    return NfMatrix(M.nf, tuple(row for row in rows if any(row)), M.width)


def replay_states(M: NfMatrix, steps):
    """Yield the working matrix after every step (zero rows kept)."""
    rows = list(M.rows)
    for st in steps:
        _apply_step(M.nf, rows, st)
        yield NfMatrix(M.nf, tuple(rows), M.width)


def _apply_step(nf, rows, st: Step):
    if st.kind == "swap":
        rows[st.r], rows[st.s] = rows[st.s], rows[st.r]
    elif st.kind == "scale":
        rows[st.r] = _scale_row(nf, rows[st.r], st.c)
    elif st.kind == "eliminate":
        rows[st.s] = _elim_row(nf, rows[st.s], rows[st.r], st.c)
    elif st.kind == "trick":
        _trick_inplace(nf, rows, st.col, Witness(*st.witness))
    else:
        raise ValueError(f"unknown step kind {st.kind!r}")


def is_one_column_independent(M: NfMatrix) -> bool:
    """No column is a left scalar multiple of another (all ordered pairs)."""
    if M.width < 2:
        raise ValueError("need at least 2 columns")
    cols = M.columns
    for i in range(M.width):
        for j in range(i + 1, M.width):
            if column_pair_dependent(M, i, j):
                return False
    return True


def column_pair_dependent(M: NfMatrix, i: int, j: int) -> bool:
    """Is column i a left multiple of column j, or vice versa?"""
    ci, cj = M.column(i), M.column(j)
    return (
        left_multiple_of(M.nf, ci, cj) is not None
        or left_multiple_of(M.nf, cj, ci) is not None
    )


# -- textual trace codec -----------------------------------------------------

def trace_to_text(nf: Nearfield, steps) -> str:
    """One step per line, 1-based indices, elements in polynomial style."""
    out = []
    fmt = nf.format_element
    for st in steps:
        if st.kind == "swap":
            out.append(f"SWAP {st.r + 1} {st.s + 1}")
        elif st.kind == "scale":
            out.append(f"SCALE {st.r + 1} {fmt(st.c)}")
        elif st.kind == "eliminate":
            out.append(f"ELIM {st.r + 1} {st.s + 1} {fmt(st.c)}")
        elif st.kind == "trick":
            a, b, lam = st.witness
            out.append(f"TRICK {st.col + 1} {fmt(a)} {fmt(b)} {fmt(lam)}")
        else:
            raise ValueError(f"unknown step kind {st.kind!r}")
    return "\n".join(out) + ("\n" if out else "")


def trace_from_text(nf: Nearfield, text: str) -> tuple[Step, ...]:
    steps = []
    for ln in text.splitlines():
        ln = ln.strip()
        if not ln or ln.startswith("#"):
            continue
        parts = ln.split()
        op = parts[0].upper()
        if op == "SWAP" and len(parts) == 3:
            steps.append(Step("swap", r=int(parts[1]) - 1, s=int(parts[2]) - 1))
        elif op == "SCALE" and len(parts) == 3:
            steps.append(Step("scale", r=int(parts[1]) - 1, c=nf.parse_element(parts[2])))
        elif op == "ELIM" and len(parts) == 4:
            steps.append(Step("eliminate", r=int(parts[1]) - 1, s=int(parts[2]) - 1,
                              c=nf.parse_element(parts[3])))
        elif op == "TRICK" and len(parts) == 5:
            w = tuple(nf.parse_element(t) for t in parts[2:5])
            steps.append(Step("trick", col=int(parts[1]) - 1, witness=w))
        else:
            raise ValueError(f"malformed trace line {ln!r}")
    return tuple(steps)
