#!/usr/bin/env python3
"""Counting R-subgroups of R^m by dimension.

Every R-subgroup of dimension k is generated by k rows with pairwise
disjoint column supports.  Fixing the block layout (descending part
sizes, consecutive columns) the census is a partition sum, and listing
the canonical matrices reproduces it exactly.  Quotienting by honest
column permutations gives a smaller number; both are printed side by
side.
"""

from nearvec import (
    VectorSet,
    build_nearfield,
    count_subgroup_orbits,
    count_subgroups,
    enumerate_canonical,
    gen_closure,
    partitions_into_parts,
)

nf = build_nearfield(3, 2)

print("partitions into exactly k parts (the combinatorial core):")
for t in range(1, 7):
    print(f"  t={t}: ", [partitions_into_parts(t, k) for k in range(1, t + 1)])

print("\nsubgroup counts over DN(3,2) (rows m, columns k):")
for m in range(1, 5):
    counts = [count_subgroups(m, k, 9) for k in range(1, m + 1)]
    listed = [len(enumerate_canonical(m, k, nf)) for k in range(1, m + 1)]
    assert counts == listed
    print(f"  R^{m}: {counts}   (listing agrees)")

print("\nthe canonical dimension-1 subgroups of R^2:")
for M in enumerate_canonical(2, 1, nf):
    G = gen_closure(VectorSet.from_vectors(nf, 2, M.rows))
    print(f"  rows {[nf.format_element(a) for a in M.rows[0]]} -> |gen| = {len(G)}")

formula = count_subgroups(2, 1, 9)
orbits = count_subgroup_orbits(2, 1, nf)
print(f"\ncanonical-shape count for (m,k) = (2,1): {formula}")
print(f"orbits under genuine column permutation:  {orbits}")
print("the swap merges gen(1, a) with gen(1, a^-1); e.g. a = x pairs with 2x:")
a = nf.parse_element("x")
inv_a = nf.inv(a)
left = {tuple(reversed(v)) for v in
        gen_closure(VectorSet.from_vectors(nf, 2, [(1, a)])).vectors()}
right = set(gen_closure(VectorSet.from_vectors(nf, 2, [(1, inv_a)])).vectors())
assert left == right
print(f"  swap(gen(1, x)) = gen(1, {nf.format_element(inv_a)})  (verified)")
