#!/usr/bin/env python3
"""Tour of DN(3,2), the smallest finite nearfield that is not a field.

Start from GF(9), keep the addition, and twist the multiplication:
a o b is a*b when a is a square and a*b^3 otherwise.  The result still
has a multiplicative group and the LEFT distributive law, but right
distributivity dies, and that failure is the engine behind everything
else in this package.
"""

from nearvec import build_nearfield, validate_dickson_pair

print("== Which (q, n) produce a Dickson nearfield? ==")
for q, n in [(3, 2), (5, 2), (3, 4), (5, 3), (6, 2)]:
    v = validate_dickson_pair(q, n)
    print(f"  ({q},{n}): {'ok' if v.valid else 'no - ' + v.reason}")

nf = build_nearfield(3, 2)
print(f"\n== {nf} ==")
print(f"order {nf.order}, modulus coefficients {nf.modulus} (x^2+1), generator "
      f"{nf.format_element(nf.generator)}")

squares = [nf.format_element(a) for a in nf.elements if a and nf.coset_index(a) == 0]
print(f"squares (twist exponent 0): {squares}")

print("\nThe twisted multiplication table (row acts on the left):")
labels = [nf.format_element(a) for a in nf.elements]
w = max(map(len, labels))
print("   " + " ".join(s.rjust(w) for s in labels))
for a, row in enumerate(nf.mul_table()):
    print(labels[a].rjust(3) + " " + " ".join(nf.format_element(b).rjust(w) for b in row))

print("\nLeft distributivity survives the twist:")
a, b, c = nf.parse_element("x"), nf.parse_element("1+x"), nf.parse_element("2")
lhs = nf.mul(a, nf.add(b, c))
rhs = nf.add(nf.mul(a, b), nf.mul(a, c))
assert lhs == rhs
print(f"  x o (1+x + 2) = {nf.format_element(lhs)} = x o (1+x) + x o 2")

print("\nRight distributivity does not:")
wit = nf.find_witness()
lhs = nf.mul(nf.add(wit.alpha, wit.beta), wit.lam)
rhs = nf.add(nf.mul(wit.alpha, wit.lam), nf.mul(wit.beta, wit.lam))
assert lhs != rhs
fa, fb, fl = (nf.format_element(x) for x in (wit.alpha, wit.beta, wit.lam))
print(f"  ({fa} + {fb}) o {fl} = {nf.format_element(lhs)}  but  "
      f"{fa} o {fl} + {fb} o {fl} = {nf.format_element(rhs)}")

print("\nEvery nonzero element still has a two-sided inverse:")
for a in range(1, nf.order):
    b = nf.inv(a)
    assert nf.mul(a, b) == 1 == nf.mul(b, a)
    print(f"  ({nf.format_element(a)})^-1 = {nf.format_element(b)}", end="")
print()
