from fractions import Fraction

import pytest

from metric_lie.catalog import (
    build_cotangent,
    build_euclidean,
    build_graph_radical,
    build_heisenberg,
    build_standard_oscillator,
    sl2,
    so3,
    so_n,
)
from metric_lie.errors import StructureError, UsageError
from metric_lie.forms import metric_radical
from metric_lie.lie import (
    abelian_algebra,
    center,
    derived_series,
    direct_sum,
    fitting_decomposition,
    from_structure_constants,
    ideal_generated,
    is_ideal,
    is_nilpotent_algebra,
    is_solvable,
    is_subalgebra,
    killing_form,
    largest_ideal_within,
    levi_decomposition,
    linear_lie_algebra,
    lower_central_series,
    nilradical,
    normalizer,
    quotient_algebra,
    semidirect_product,
    simple_ideals,
    solvable_radical,
    subalgebra,
)
from metric_lie.linalg import Matrix, Subspace

from oracles import F, killing_by_trace, nilradical_bruteforce, same_span, structure_tensor

# ------------------------------------------------------- construction


def test_jacobi_failure_names_the_triple():
    # [e1,e2] = e3 and [e1,e3] = e1 leave a Jacobi sum of e3 on (0,1,2)
    with pytest.raises(StructureError, match=r"\(0,1,2\)"):
        from_structure_constants(3, None, [(0, 1, 2, 1), (0, 2, 0, 1)])


def test_antisymmetry_disagreement_is_rejected():
    with pytest.raises(StructureError, match="antisymmetry"):
        from_structure_constants(2, None, [(0, 1, 1, 1), (1, 0, 1, 1)])
    with pytest.raises(StructureError, match="antisymmetry"):
        from_structure_constants(2, None, [(0, 0, 1, 1)])


def test_both_orders_accepted_when_consistent():
    g = from_structure_constants(2, ["a", "b"], [(0, 1, 1, 1), (1, 0, 1, -1)])
    assert g.bracket(g.unit(0), g.unit(1)) == g.unit(1)


def test_duplicate_and_out_of_range_entries():
    with pytest.raises(StructureError, match="duplicate"):
        from_structure_constants(2, None, [(0, 1, 1, 1), (0, 1, 1, 2)])
    with pytest.raises(StructureError, match="out of range"):
        from_structure_constants(2, None, [(0, 1, 5, 1)])


def test_semidirect_product_rejects_non_representation():
    f = so3()
    v = abelian_algebra(3)
    bad = [f.ad_basis(0), f.ad_basis(0), f.ad_basis(2)]
    with pytest.raises(StructureError, match="representation"):
        semidirect_product(f, v, bad)


def test_linear_lie_algebra_matches_so3():
    s = so_n(3)
    assert s.dim == 3
    assert is_solvable(s) is False
    assert center(s).is_zero()


# ---------------------------------------------------------- Killing form


def test_killing_form_frozen_values():
    # hand computed in the X, Y, H basis: kappa(X,Y) = 4, kappa(H,H) = 8
    k = killing_form(sl2()).gram
    assert k == Matrix([[0, 4, 0], [4, 0, 0], [0, 0, 8]])
    assert killing_form(so3()).gram == Matrix.diagonal([-2, -2, -2])


@pytest.mark.parametrize(
    "g",
    [sl2(), so3(), so_n(4), build_euclidean(3), build_cotangent(sl2()).algebra],
    ids=["sl2", "so3", "so4", "e3", "cotangent-sl2"],
)
def test_killing_form_matches_trace_oracle(g):
    expected = killing_by_trace(structure_tensor(g))
    got = [[F(a) for a in row] for row in killing_form(g).gram.rows]
    assert got == expected


# ------------------------------------------------------------- radicals


@pytest.mark.parametrize(
    "g",
    [
        build_heisenberg(1).algebra,
        build_standard_oscillator(1).algebra,
        build_euclidean(2),
        direct_sum([sl2(), abelian_algebra(1)]),
        from_structure_constants(3, None, [(0, 1, 1, 1), (0, 2, 2, 1)]),
        from_structure_constants(4, None, [(0, 1, 1, 1), (0, 2, 3, 1), (2, 3, 3, 0)]),
    ],
    ids=["heis3", "osc1", "e2", "sl2+R", "affine-ish", "mixed"],
)
def test_nilradical_matches_bruteforce(g):
    expected = nilradical_bruteforce(g)
    got = [[F(a) for a in v] for v in nilradical(g).vectors]
    assert same_span(got, expected)


def test_nilradical_of_cotangent_is_the_dual():
    # frozen from the brute-force oracle (too slow to rerun at dimension 6)
    g = build_cotangent(sl2()).algebra
    assert nilradical(g) == Subspace.coordinate(range(3, 6), 6)


def test_radical_and_levi_examples():
    cot = build_cotangent(sl2()).algebra
    levi = levi_decomposition(cot)
    assert (levi.compact_part.dim, levi.noncompact_part.dim, levi.radical.dim) == (0, 3, 3)
    assert is_subalgebra(cot, levi.levi)
    e3 = levi_decomposition(build_euclidean(3))
    assert (e3.compact_part.dim, e3.noncompact_part.dim, e3.radical.dim) == (3, 0, 3)
    s4 = levi_decomposition(so_n(4))
    assert (s4.compact_part.dim, s4.noncompact_part.dim) == (6, 0)
    assert len(s4.compact_factors) == 2
    osc = build_standard_oscillator(1).algebra
    assert solvable_radical(osc).is_full()
    assert nilradical(osc).dim == 3


def test_levi_of_twisted_sum_is_a_complement():
    g = build_graph_radical().algebra
    levi = levi_decomposition(g)
    assert levi.levi.dim == 3
    assert (levi.levi + levi.radical).is_full()
    assert is_subalgebra(g, levi.levi)


def test_simple_ideals_of_so4():
    g = so_n(4)
    factors = simple_ideals(g, Subspace.full(6))
    assert sorted(f.dim for f in factors) == [3, 3]
    assert all(is_ideal(g, f) for f in factors)


# -------------------------------------------------------- subspace ops


def test_series_of_heisenberg():
    h = build_heisenberg(1).algebra
    lcs = lower_central_series(h)
    assert [w.dim for w in lcs] == [3, 1, 0]
    assert [w.dim for w in derived_series(h)] == [3, 1, 0]
    assert is_nilpotent_algebra(h)


def test_ideal_generated_and_normalizer():
    g = sl2()
    assert ideal_generated(g, [g.unit(2)]).is_full()
    h_line = Subspace.span([g.unit(2)], 3)
    assert normalizer(g, h_line) == h_line


def test_largest_ideal_inside_graph_radical_is_zero():
    m = build_graph_radical()
    perp = metric_radical(m)
    assert perp.dim == 3
    assert not is_ideal(m.algebra, perp)
    assert largest_ideal_within(m.algebra, perp).is_zero()


def test_quotient_is_homomorphic_image():
    g = build_standard_oscillator(2).algebra
    z = center(g)
    q, proj = quotient_algebra(g, z)
    assert q.dim == g.dim - z.dim
    for x in g.basis_vectors():
        for y in g.basis_vectors():
            assert tuple(proj.apply(g.bracket(x, y))) == tuple(q.bracket(proj.apply(x), proj.apply(y)))
    with pytest.raises(UsageError):
        quotient_algebra(g, Subspace.span([g.unit(1)], g.dim))


def test_subalgebra_structure_constants():
    g = build_euclidean(3)
    k = Subspace.coordinate(range(3), 6)
    sub = subalgebra(g, k)
    assert killing_form(sub).gram == Matrix.diagonal([-2, -2, -2])


# ---------------------------------------------------------------- Fitting


def test_fitting_of_oscillator():
    g = build_standard_oscillator(1).algebra
    fit = fitting_decomposition(g, regular_element=g.unit(0))
    assert (fit.fitting_zero.dim, fit.fitting_one.dim) == (2, 2)
    assert is_subalgebra(g, fit.fitting_zero)
    sampled = fitting_decomposition(g)
    assert sampled.fitting_zero.dim == 2


def test_fitting_is_seed_deterministic():
    g = build_standard_oscillator(2).algebra
    a = fitting_decomposition(g, seed=7)
    b = fitting_decomposition(g, seed=7)
    assert a == b
    assert (a.fitting_zero + a.fitting_one).is_full()


def test_fitting_of_nilpotent_algebra_is_everything():
    h = build_heisenberg(2).algebra
    fit = fitting_decomposition(h)
    assert fit.fitting_zero.is_full()
    assert fit.fitting_one.is_zero()


def test_lie_algebra_is_immutable():
    g = sl2()
    with pytest.raises(AttributeError):
        g.dim = 4


def test_linear_lie_algebra_rejects_non_closed_span():
    a = Matrix([[0, 1], [0, 0]])
    b = Matrix([[0, 0], [1, 0]])
    with pytest.raises(StructureError, match="leaves their span"):
        linear_lie_algebra([a, b], ["a", "b"])


def test_fraction_inputs_are_exact():
    g = from_structure_constants(2, None, [(0, 1, 1, Fraction(1, 3))])
    assert g.bracket(g.unit(0), g.unit(1))[1] == Fraction(1, 3)
