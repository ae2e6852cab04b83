import pytest

from finchar.fixedlocus import (FixedLocusError, component_data, compute_YS, fixed_components,
                                orbit_partition_crosscheck, verify_counting)
from finchar.rootdata import ParabolicSpec, all_parabolics, group, minimal_coset_reps
from finchar.torus import TorsionElement, centralizer, is_regular, torsion_elements

SMALL = ["SL_2", "PGL_2", "SL_3", "GL_3", "Sp_4", "G2"]


def projective_space(n):
    """Parabolic of GL_n with G/P = P^{n-1}: Levi on every simple root but the first."""
    return ParabolicSpec(frozenset(range(1, n - 1)))


def sign_element(d, m):
    n = d.lattice_rank
    return TorsionElement.from_numerators(d, 2, [0] * m + [1] * (n - m))


def test_identity_and_regular():
    d = group("GL_3")
    P = ParabolicSpec.borel()
    assert [v.word for v in compute_YS(d, P, TorsionElement.identity(d))] == [()]
    t = TorsionElement.from_numerators(d, 3, (0, 1, 2))
    assert is_regular(t)
    assert len(compute_YS(d, P, t)) == len(minimal_coset_reps(d, P))


def test_adjoint_a1_order_two():
    d = group("PGL_2")
    t = TorsionElement.from_numerators(d, 2, (1,))
    ys = compute_YS(d, ParabolicSpec.borel(), t)
    assert sorted(v.word for v in ys) == [(), (0,)]
    assert verify_counting(d, ParabolicSpec.borel(), t).borel_quotient == (2, 2)


def test_identity_component():
    d = group("Sp_4")
    P = ParabolicSpec({1})
    c = component_data(d.identity, d, P, TorsionElement.identity(d))
    assert c.dim == len(P.unipotent_roots(d))
    assert not c.normal_weights
    assert {g.vector for g in c.tangent_weights} == {a.vector for a in P.opposite_unipotent_roots(d)}


def test_projective_plane():
    d = group("GL_3")
    P = projective_space(3)
    t = sign_element(d, 1)
    comps = fixed_components(d, P, t)
    assert sorted(c.dim for c in comps) == [0, 1]
    report = verify_counting(d, P, t)
    assert report.passed and report.orbit_sum == (3, 3)
    assert sorted(report.orbit_sizes) == [1, 2]
    orbits = orbit_partition_crosscheck(d, P, t)
    assert orbits.passed
    assert sorted(len(b) for b in orbits.blocks) == [1, 2]


def test_gl3_borel_diag_11m1():
    d = group("GL_3")
    t = TorsionElement.from_numerators(d, 2, (0, 0, 1))
    comps = fixed_components(d, ParabolicSpec.borel(), t)
    assert len(comps) == 3 and all(c.dim == 1 for c in comps)


def test_component_outside_ys():
    d = group("GL_3")
    t = TorsionElement.identity(d)
    v = [w for w in d.weyl_group() if w.length == 1][0]
    with pytest.raises(FixedLocusError):
        component_data(v, d, ParabolicSpec.borel(), t)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_projective_space_splits_in_two(n):
    d = group(f"GL_{n}")
    P = projective_space(n)
    for m in range(1, n):
        dims = sorted(c.dim for c in fixed_components(d, P, sign_element(d, m)))
        assert dims == sorted([m - 1, n - m - 1])


@pytest.mark.parametrize("name", SMALL + ["B3", "SL_4"])
def test_structure_and_counting(name):
    d = group(name)
    W = d.weyl_group()
    for r in (1, 2, 3, 4):
        for t in torsion_elements(d, r):
            cent = centralizer(t)
            pos_prime = {a.vector for a in cent.positive}
            for P in all_parabolics(d):
                comps = fixed_components(d, P, t)
                dimgp = len(P.unipotent_roots(d))
                for c in comps:
                    assert c.dim + len(c.normal_weights) == dimgp
                    v_pos = {c.v.act(a.vector) for a in d.positive_roots}
                    assert pos_prime <= v_pos
                    assert not any(cent.contains(b.vector) for b in c.normal_weights)
                    v_rp = {c.v.act(a.vector) for a in P.unipotent_roots(d)}
                    assert c.dim == len(pos_prime & v_rp)
                if not P.levi_simples:
                    assert len({c.dim for c in comps}) == 1
                    assert comps[0].dim == len(cent.positive)
                report = verify_counting(d, P, t)
                assert report.passed, (name, t, P)
                if not P.levi_simples:
                    assert report.borel_quotient[0] == len(W) // len(cent.weyl)
                assert orbit_partition_crosscheck(d, P, t).passed


def test_regular_and_identity_orbit_blocks():
    d = group("Sp_4")
    P = ParabolicSpec({0})
    reps = minimal_coset_reps(d, P)
    blocks = orbit_partition_crosscheck(d, P, TorsionElement.identity(d)).blocks
    assert len(blocks) == 1 and len(blocks[0]) == len(reps)
    regular = next(t for t in torsion_elements(d, 5) if is_regular(t))
    blocks = orbit_partition_crosscheck(d, P, regular).blocks
    assert len(blocks) == len(reps) and all(len(b) == 1 for b in blocks)
