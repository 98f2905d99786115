#!/usr/bin/env python3
"""Seed sets: spanning R^m with about sqrt(m) vectors.

The identity block plus columns of the profile (1,..,1,s,..,s) generate
the whole space; k rows suffice while m stays below
u_k = k + (|R|-2)k(k-1)/2.  For DN(3,2) that means two vectors span R^9
and three span R^24.
"""

from nearvec import build_nearfield, build_seed, seed_number, u_max, verify_seed

nf = build_nearfield(3, 2)

print("u_k: the largest dimension spanned by k seed rows (|R| = 9):")
print("  ", [u_max(k, 9) for k in range(1, 7)])

print("\nseed number as m grows:")
row = []
for m in range(1, 25):
    row.append(seed_number(m, 9))
print("  m = 1..24 ->", row)

for m in (3, 9, 10):
    sm = build_seed(m, nf)
    print(f"\nV_{m} ({sm.k} rows):")
    for r in sm.matrix.rows:
        print("   " + " ".join(nf.format_element(a).rjust(4) for a in r))
    ok = verify_seed(sm.matrix)
    print(f"  gen(rows) = R^{m}? {ok}")
    assert ok

print("\nevery m up to u_3 = 24 verifies:")
assert all(verify_seed(build_seed(m, nf).matrix) for m in range(1, 25))
print("  all 24 seed matrices generate their full space.")

big = build_seed(46, nf)
print(f"\nand at the stage-4 boundary: V_46 has {big.k} rows; verified = "
      f"{verify_seed(big.matrix)}")
