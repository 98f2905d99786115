#!/usr/bin/env python3
"""A census of the 6561 basis-image maps on DN(3,2)^2.

Specifying images of the basis vectors always yields an additive
homomorphism, but only 289 of the 6561 maps commute with the right
scalar action (linear), and only 161 of those have a submodule image
(normal).  Both facts are visible in the matrix: at most one nonzero
entry per row, respectively per row AND column.
"""

from collections import Counter

from nearvec import (
    MapClass,
    MapRep,
    apply_map,
    build_nearfield,
    classify,
    compose,
    count_maps,
    enumerate_maps,
    is_linear,
    linear_violation,
    map_sum,
    vec_scale_right,
)

nf = build_nearfield(3, 2)

census = Counter(classify(T) for T in enumerate_maps(nf, 2))
print("classification of all 6561 maps:")
for cls in MapClass:
    print(f"  {cls.value:18s} {census[cls]}")
assert sum(census.values()) == count_maps(nf, 2, "all") == 6561
linear_total = sum(v for c, v in census.items() if c is not MapClass.HOM_ONLY)
normal_total = census[MapClass.NORMAL_LINEAR] + census[MapClass.INVERTIBLE_NORMAL]
assert linear_total == count_maps(nf, 2, "linear") == 289
assert normal_total == count_maps(nf, 2, "normal") == 161
print(f"closed forms agree: linear 289 = (1 + 2*8)^2, normal 161 = 1 + 32 + 128")

print("\nthe classic trap: images (1,0)->(1,2), (0,1)->(1,1) look innocent...")
T = MapRep.from_columns(nf, [(1, 2), (1, 1)])
v, r = linear_violation(T)
fv = [nf.format_element(a) for a in v]
lhs = apply_map(T, vec_scale_right(nf, v, r))
rhs = vec_scale_right(nf, apply_map(T, v), r)
print(f"  T(({','.join(fv)}) o {nf.format_element(r)}) = "
      f"{[nf.format_element(a) for a in lhs]}")
print(f"  T(({','.join(fv)})) o {nf.format_element(r)} = "
      f"{[nf.format_element(a) for a in rhs]}")
assert lhs != rhs
print("  ...but scaling before and after the map disagree: not linear.")

print("\nlinear maps are closed under composition but not under addition:")
T1 = MapRep(nf, 2, ((0, 0), (0, 1)))
T2 = MapRep(nf, 2, ((0, 0), (1, 0)))
C = compose(T1, T2)
S = map_sum(T1, T2)
print(f"  compose: {C.matrix} linear={is_linear(C)}")
print(f"  sum:     {S.matrix} linear={is_linear(S)}  <- row (1,1) breaks the row rule")
assert is_linear(C) and not is_linear(S)
