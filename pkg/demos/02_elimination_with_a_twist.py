#!/usr/bin/env python3
"""Expanded Gaussian elimination: two vectors that span all of R^3.

Over a field, k vectors can never span more than a k-dimensional space.
Over a proper nearfield the right-distributivity failure lets row
reduction manufacture new pivot rows out of thin air, so gen(v1, v2)
below is the whole of R^3.  The oracle closure confirms it by brute
force.
"""

from nearvec import (
    NfMatrix,
    VectorSet,
    build_nearfield,
    ege,
    gen_closure,
    lc_index,
    replay,
    rref,
    trace_to_text,
)

nf = build_nearfield(3, 2)
M = NfMatrix.from_rows(nf, [(1, 0, 1), (1, 1, 0)])
print("input rows:")
for row in M.rows:
    print("  ", [nf.format_element(a) for a in row])

R, _ = rref(M)
print("\nafter ordinary row reduction:")
for row in R.rows:
    print("  ", [nf.format_element(a) for a in row])
print("column 3 holds trailing entries of BOTH pivot rows; a field would be stuck here.")

D = ege(M)
print(f"\nexpanded elimination result: dimension {D.dimension}, canonical={D.canonical}")
for row in D.basis.rows:
    print("  ", [nf.format_element(a) for a in row])

print("\nthe full step trace:")
print(trace_to_text(nf, D.trace), end="")
trick = next(s for s in D.trace if s.kind == "trick")
print(f"trick details: conflict column {trick.col + 1}, "
      f"theta = {[nf.format_element(a) for a in trick.theta]}, "
      f"phi = {[nf.format_element(a) for a in trick.phi]}")

assert replay(M, D.trace) == D.basis
print("replaying the trace reproduces the basis bit-exactly.")

G = gen_closure(VectorSet.from_vectors(nf, 3, M.rows))
print(f"\nbrute-force closure of the two rows: {len(G)} vectors = 9^3 -> all of R^3")
assert len(G) == 729

idx = lc_index(nf, M.rows)
print(f"linearity index: LC_{idx} is the first stratum equal to R^3 (index = {idx})")

fld = build_nearfield(5, 1)
Df = ege(NfMatrix.from_rows(fld, [(1, 0, 1), (0, 1, 2)]))
print(f"\nsame shape over the field GF(5): dimension {Df.dimension}, "
      f"canonical={Df.canonical} (no witness exists, plain RREF returned)")
