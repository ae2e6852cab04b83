"""Degrees and leading coefficients of n -> ch(t^-1, V(n lambda))."""
from finchar import TorsionElement, degree_report, group

# GL_4 at diag(1, 1, -1, -1) with a regular weight.  For an element of
# order two the even class has degree equal to the largest component
# dimension and a positive leading coefficient.
d = group("GL_4")
t = TorsionElement.from_numerators(d, 2, (0, 0, 1, 1))
rep = degree_report(t, (3, 2, 1, 0))
print("component dims", rep.dims, "max", rep.max_dim, "unique max:", rep.unique_maximizer)
for row in rep.residues:
    print("residue", row.residue, "degree", row.degree,
          "leading coefficient", row.leading_closed_form,
          "(exact degree asserted)" if row.exact_degree_expected else "")

# A central element scales characters by a root of unity, so growth is
# the full Weyl dimension polynomial on every class.
z = TorsionElement.from_numerators(group("SL_3"), 3, (1, 2))
rep = degree_report(z, (1, 0))
print([(r.residue, r.degree, r.leading_closed_form) for r in rep.residues])
