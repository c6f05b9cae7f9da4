import pytest

from metric_lie.catalog import (
    CATALOG,
    build_abelian,
    build_cotangent,
    build_graph_radical,
    build_heisenberg,
    build_nil_not_invariant,
    build_osc_alpha,
    build_torus_pairing,
    catalog_instances,
    classification_cases,
    direct_product,
    sl2,
    so3,
    solvable_members,
    with_killing,
)
from metric_lie.errors import InvariantViolation, UsageError
from metric_lie.forms import index_and_relative_index, is_effective, is_invariant
from metric_lie.lie import is_solvable, killing_form
from metric_lie.linalg import Matrix
from metric_lie.structure import (
    ClassificationReport,
    ModuleAction,
    abelian_radical_decomposition,
    adjoint_module,
    classify_low_index,
    isotropic_tower,
    killing_multiple,
    pairing_left_kernel,
    skew_pairing_space,
    sl2_standard_module,
    so3_irreducible_module,
    symmetric_power_module,
    trivial_module,
    verify_strong_invariance,
)

# ---------------------------------------------------------------- catalog


def test_catalog_dimensions_and_signatures():
    assert build_torus_pairing().form.signature().as_tuple() == (15, 3, 3)
    assert build_graph_radical().form.signature().as_tuple() == (3, 3, 3)
    assert build_heisenberg(2, 1).form.signature().as_tuple() == (2, 2, 1)
    assert build_nil_not_invariant().dim == 9


@pytest.mark.parametrize("m", solvable_members(), ids=lambda m: m.name)
def test_solvable_members_are_solvable_and_invariant(m):
    assert is_solvable(m.algebra)
    assert is_invariant(m)


def test_cotangent_index_equals_base_dimension():
    for base in (sl2(), so3()):
        assert index_and_relative_index(build_cotangent(base)) == (3, 3)


def test_builder_parameter_errors():
    with pytest.raises(UsageError):
        build_abelian(2, 2)
    with pytest.raises(UsageError):
        build_osc_alpha([1], [])
    with pytest.raises(UsageError):
        build_heisenberg(0)


def test_catalog_entries_build():
    for name in ("abelian", "heisenberg", "osc", "sl2", "graph-radical"):
        assert name in CATALOG
    assert CATALOG["graph-radical"].builder().dim == 9


def test_every_catalog_instance_is_a_valid_metric_algebra():
    for m in catalog_instances():
        assert m.form.gram.is_symmetric()
        assert m.form.dim == m.dim


# --------------------------------------------------------- classification


@pytest.mark.parametrize("label, m", classification_cases(), ids=[c for c, _ in classification_cases()])
def test_classification_labels(label, m):
    report = classify_low_index(m)
    assert report.case_label == label
    assert all(report.checks.values())


def test_out_of_range_and_semidefinite():
    assert classify_low_index(build_nil_not_invariant()).case_label == "OUT_OF_RANGE"
    assert classify_low_index(build_abelian(3)).case_label == "SEMIDEFINITE"


def test_classification_requires_effective_input():
    with pytest.raises(UsageError, match="effective"):
        classify_low_index(build_heisenberg(1))


def test_report_label_must_match_index():
    with pytest.raises(InvariantViolation):
        ClassificationReport(3, "C-I")


# ------------------------------------------------------- strong invariance


@pytest.mark.parametrize(
    "m", [build_nil_not_invariant(), build_torus_pairing(), build_cotangent(sl2())], ids=lambda m: m.name
)
def test_strong_invariance(m):
    report = verify_strong_invariance(m)
    assert report.passed, report.checks


# ----------------------------------------------------------- abelian split


def test_abelian_radical_split_values():
    cot = abelian_radical_decomposition(build_cotangent(sl2()))
    assert (cot.g1.dim, cot.g2.dim, cot.g3.dim) == (0, 0, 6)
    assert cot.passed
    ex = abelian_radical_decomposition(build_graph_radical())
    assert (ex.g1.dim, ex.g2.dim, ex.g3.dim) == (9, 0, 0)
    assert ex.passed


def test_abelian_split_with_invariant_semisimple_factor():
    m = direct_product([with_killing(sl2()), build_abelian(2)])
    split = abelian_radical_decomposition(m)
    assert (split.g1.dim, split.g2.dim, split.g3.dim) == (2, 3, 0)
    assert split.passed


def test_abelian_split_rejects_nonabelian_radical():
    with pytest.raises(UsageError, match="abelian radical"):
        abelian_radical_decomposition(build_heisenberg(1))


# ---------------------------------------------------------------- pairings


def test_symmetric_power_dimensions():
    std = sl2_standard_module(sl2())
    assert [symmetric_power_module(std, k).module_dim for k in range(1, 5)] == [2, 3, 4, 5]


def test_symmetric_square_pairing_is_killing_multiple():
    s = sl2()
    mod = symmetric_power_module(sl2_standard_module(s), 2)
    (pairing,) = skew_pairing_space(s, mod)
    assert killing_multiple(s, mod, pairing) is not None


def test_adjoint_pairing_is_killing():
    s = sl2()
    (pairing,) = skew_pairing_space(s, adjoint_module(s))
    ratio = killing_multiple(s, adjoint_module(s), pairing)
    assert ratio is not None
    assert pairing == killing_form(s).gram.scale(ratio)


def test_so3_irreducibles():
    k = so3()
    dims = [len(skew_pairing_space(k, so3_irreducible_module(k, d))) for d in (3, 5, 7)]
    assert dims == [1, 0, 0]
    space = skew_pairing_space(k, so3_irreducible_module(k, 3))
    assert pairing_left_kernel(k, space).is_zero()


def test_trivial_module_has_left_kernel_everything_when_zero():
    s = sl2()
    space = skew_pairing_space(s, trivial_module(s, 1))
    assert len(space) == 3
    assert pairing_left_kernel(s, space).is_zero()
    assert pairing_left_kernel(s, []).is_full()


def test_module_action_validates_homomorphism():
    s = sl2()
    with pytest.raises(UsageError):
        ModuleAction(s, 2, [Matrix.identity(2)] * 3)


# ------------------------------------------------------------------ tower


def test_isotropic_tower_of_nil_not_invariant_example():
    m = build_nil_not_invariant()
    assert is_effective(m)
    tower = isotropic_tower(m)
    assert tower
    assert all(m.form.is_totally_isotropic(b) for b in tower)
