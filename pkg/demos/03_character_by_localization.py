"""Characters from fixed components, compared with Freudenthal multiplicities."""
from finchar import (TorsionElement, char_at, character_via_lefschetz, component_polynomial,
                     fixed_components, group, invert, total_polynomial)
from finchar.rootdata import parabolic_for_lambda

# Sp_4 at an element of order 4.  The fixed-point side returns the
# character at t^-1, so the oracle is evaluated at invert(t).
d = group("Sp_4")
t = TorsionElement.from_numerators(d, 4, (1, 2))
lam = (1, 1)
P = parabolic_for_lambda(d, lam)
comps = fixed_components(d, P, t)
print("component dimensions:", [c.dim for c in comps])

for n in range(6):
    lef = character_via_lefschetz(t, lam, n)
    orc = char_at(invert(t), tuple(n * x for x in lam))
    print(n, lef, "agrees" if lef == orc else "DISAGREES")

# Each residue class of n mod 4 carries one polynomial per component.
for p in range(t.order):
    print("n = %d mod 4:" % p, total_polynomial(t, lam, p).poly)
print(component_polynomial(comps[0], t, lam, 0))
