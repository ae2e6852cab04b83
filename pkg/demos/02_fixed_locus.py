"""Fixed points of a torus element on a flag variety."""
from finchar import (ParabolicSpec, TorsionElement, centralizer, fixed_components, group,
                     orbit_partition_crosscheck, verify_counting)

# t = diag(1, -1, -1) in GL_3 acting on P^2.  Its fixed locus is a point
# (the line through e_1) and a projective line (lines in span(e_2, e_3)).
d = group("GL_3")
P = ParabolicSpec({1})
t = TorsionElement.from_numerators(d, 2, (0, 1, 1))
print("centralizer roots:", [a.vector for a in centralizer(t).roots])

for comp in fixed_components(d, P, t):
    print("component v =", comp.v.word, "dim", comp.dim,
          "tangent", [g.vector for g in comp.tangent_weights],
          "normal", [b.vector for b in comp.normal_weights])

# The centralizer Weyl group moves T-fixed points around inside each
# component; orbit sizes add up to |W^P|.
report = verify_counting(d, P, t)
print("orbit sizes", report.orbit_sizes, "sum vs |W^P|", report.orbit_sum)
print("orbit blocks", orbit_partition_crosscheck(d, P, t).blocks)

# On the full flag variety every component has the same dimension.
t2 = TorsionElement.from_numerators(d, 2, (0, 0, 1))
print("full flags:", [c.dim for c in fixed_components(d, ParabolicSpec.borel(), t2)])
