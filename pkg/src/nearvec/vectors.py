"""Vectors and matrices over a nearfield: the right module R^m and its codecs.

Vectors are plain tuples of element codes; scalars act componentwise on
the right (v o r)_i = v_i o r.  The left action r o v appears only in
the left-multiple test and is kept as a separate operation.
"""

from __future__ import annotations

from dataclasses import dataclass

from .nearfield import Nearfield, build_nearfield


def vec_add(nf: Nearfield, u, v):
    if len(u) != len(v):
        raise ValueError("dimension mismatch")
    add = nf.add
    return tuple(add(a, b) for a, b in zip(u, v))


def vec_neg(nf: Nearfield, u):
    neg = nf.neg
    return tuple(neg(a) for a in u)


def vec_sub(nf: Nearfield, u, v):
    if len(u) != len(v):
        raise ValueError("dimension mismatch")
    sub = nf.sub
    return tuple(sub(a, b) for a, b in zip(u, v))


def vec_scale_right(nf: Nearfield, v, r: int):
    """Componentwise right action (v o r)_i = v_i o r."""
    mul = nf.mul
    return tuple(mul(a, r) for a in v)


def vec_scale_left(nf: Nearfield, r: int, v):
    """Componentwise left product (r o v_i)_i; used by the left-multiple test."""
    mul = nf.mul
    return tuple(mul(r, a) for a in v)


def left_multiple_of(nf: Nearfield, u, v) -> int | None:
    """Scalar r with u_i = r o v_i for all i, or None.

    Deterministic: r is solved from the first nonzero position of v and
    then verified everywhere.  The zero vector is 0 times anything.
    """
    if len(u) != len(v):
        raise ValueError("dimension mismatch")
    t = next((i for i, a in enumerate(v) if a), None)
    if t is None:
        return 0 if not any(u) else None
    r = nf.mul(u[t], nf.inv(v[t]))
    mul = nf.mul
    return r if all(mul(r, b) == a for a, b in zip(u, v)) else None


@dataclass(frozen=True)
class NfMatrix:
    """Rectangular matrix of element codes over a fixed nearfield.

    Zero rows are allowed (intermediate computation needs them); the
    file codec rejects degenerate shapes at parse time.
    """

    nf: Nearfield
    rows: tuple[tuple[int, ...], ...]
    width: int

    def __post_init__(self):
        order = self.nf.order
        for row in self.rows:
            if len(row) != self.width:
                raise ValueError("ragged rows")
            for a in row:
                if not 0 <= a < order:
                    raise ValueError(f"element code {a} out of range for order {order}")

    @classmethod
    def from_rows(cls, nf: Nearfield, rows, width: int | None = None) -> "NfMatrix":
        rows = tuple(tuple(r) for r in rows)
        if width is None:
            if not rows:
                raise ValueError("width required for an empty matrix")
            width = len(rows[0])
        return cls(nf, rows, width)

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.rows)

    @property
    def columns(self) -> tuple[tuple[int, ...], ...]:
        return tuple(self.column(j) for j in range(self.width))

    def __str__(self):
        return matrix_format(self)


def matrix_parse(text: str) -> NfMatrix:
    """Parse the shared matrix file format.

    Line 1: ``DN <q> <n>``; line 2: ``<k> <m>``; then k rows of m
    whitespace-separated element tokens (polynomial or code style,
    auto-detected per token).  ``#`` lines are comments.
    """
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise ValueError("empty matrix file")
    head = lines[0].split()
    if len(head) != 3 or head[0] != "DN":
        raise ValueError(f"bad header {lines[0]!r}, expected 'DN <q> <n>'")
    try:
        q, n = int(head[1]), int(head[2])
    except ValueError:
        raise ValueError(f"bad header {lines[0]!r}") from None
    nf = build_nearfield(q, n)
    if len(lines) < 2:
        raise ValueError("missing dimension line")
    dims = lines[1].split()
    if len(dims) != 2:
        raise ValueError(f"bad dimension line {lines[1]!r}")
    k, m = int(dims[0]), int(dims[1])
    if k < 1:
        raise ValueError("no rows")
    if m < 1:
        raise ValueError("no columns")
    if len(lines) != 2 + k:
        raise ValueError(f"expected {k} rows, found {len(lines) - 2}")
    rows = []
    for ln in lines[2:]:
        tokens = ln.split()
        if len(tokens) != m:
            raise ValueError(f"ragged row {ln!r}, expected {m} entries")
        rows.append(tuple(nf.parse_element(tok) for tok in tokens))
    return NfMatrix(nf, tuple(rows), m)


def matrix_format(M: NfMatrix, style: str = "poly", comments: tuple[str, ...] = ()) -> str:
    """Inverse of matrix_parse (up to comments and token style)."""
    nf = M.nf
    out = [f"# {c}" for c in comments]
    out.append(f"DN {nf.q} {nf.n}")
    out.append(f"{M.n_rows} {M.width}")
    for row in M.rows:
        out.append(" ".join(nf.format_element(a, style) for a in row))
    return "\n".join(out) + "\n"
