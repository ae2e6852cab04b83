"""Root data, Weyl groups and minimal coset representatives."""
from collections import Counter

import numpy as np

from finchar import ParabolicSpec, group, inversion_set, minimal_coset_reps

# G2 with its short simple root first; characters are written in the
# fundamental-weight basis because the group is simply connected.
g2 = group("G2")
print(g2, "roots:", len(g2.roots), "Weyl group order:", len(g2.weyl_group()))
print("Cartan matrix:\n", np.array(g2.cartan))

# Lengths of Weyl group elements: the Poincare polynomial of G2 is
# (1 + q)(1 + q + ... + q^5).
print("elements by length:", sorted(Counter(w.length for w in g2.weyl_group()).items()))

# GL_3 uses diagonal coordinates, so roots are e_i - e_j.
gl3 = group("GL_3")
print([a.vector for a in gl3.positive_roots])

# The parabolic whose quotient is P^2 keeps the second simple root in its
# Levi factor; W^P has three elements, one per coordinate line.
P = ParabolicSpec({1})
for v in minimal_coset_reps(gl3, P):
    print("v =", v.word, "length", v.length,
          "inversions", [a.vector for a in inversion_set(v, gl3)])

# The stacked Weyl matrices make orbit computations a single product.
stack = gl3.weyl_stack
print("orbit of (2, 1, 0):", np.unique(stack @ np.array([2, 1, 0]), axis=0).tolist())
