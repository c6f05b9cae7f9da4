"""Acceptance checks, all exact.

Each criterion is a function returning ``(passed, detail)``. Under pytest every
criterion is its own test and a summary line per criterion is written to the
terminal. Running the file directly prints the same lines.
"""

from __future__ import annotations

import random
import sys

import pytest

from metric_lie.catalog import (
    build_cotangent,
    build_euclidean,
    build_graph_radical,
    build_nil_not_invariant,
    build_osc_alpha,
    build_oscillator,
    build_standard_oscillator,
    catalog_instances,
    classification_cases,
    nilpotent_so21,
    sl2,
    so3,
    solvable_members,
)
from metric_lie.forms import (
    MetricLieAlgebra,
    complete_reduction,
    index_and_relative_index,
    invariance_subalgebra,
    is_effective,
    is_invariant,
    metric_radical,
    nil_invariance_check,
    nilinvariant_form_space,
)
from metric_lie.lie import fitting_decomposition, is_abelian, killing_form, levi_decomposition
from metric_lie.linalg import (
    Matrix,
    Subspace,
    inverse,
    is_nilpotent,
    jordan_chevalley,
    minimal_polynomial,
    poly_is_squarefree,
    rank,
    rat,
)
from metric_lie.structure import (
    abelian_radical_decomposition,
    classify_low_index,
    killing_multiple,
    radical_containments,
    skew_pairing_space,
    sl2_standard_module,
    so3_irreducible_module,
    structure_checks,
    symmetric_power_module,
    transporter_checks,
)

SEED = 20240611


def nil_not_invariant_end_to_end():
    m = build_nil_not_invariant()
    mu, ell = index_and_relative_index(m)
    diagonal = Subspace.span(
        [[0, 0, 0] + [int(a == i) for a in range(3)] * 2 for i in range(3)], 9
    )
    perp = metric_radical(m)
    nil = nil_invariance_check(m).passed
    inv = is_invariant(m)
    eff = is_effective(m)
    ok = (mu, ell) == (6, 3) and perp == diagonal and perp.dim == 3 and nil and not inv and eff
    return ok, f"mu={mu} ell={ell} radical dim {perp.dim} diagonal={perp == diagonal} nil={nil} invariant={inv} effective={eff}"


def euclidean_nonexistence():
    parts, ok = [], True
    for n in (4, 5):
        g = build_euclidean(n)
        translations = Subspace.coordinate(range(g.dim - n, g.dim), g.dim)
        forms = nilinvariant_form_space(g)
        good = bool(forms) and all(f.radical().contains_subspace(translations) for f in forms)
        ok &= good
        parts.append(f"e{n}: {len(forms)} forms, R^{n} in every kernel={good}")
    return ok, "; ".join(parts)


def skew_pairing_dimensions():
    s = sl2()
    std = sl2_standard_module(s)
    dims, ratio = [], None
    for k in range(1, 7):
        mod = symmetric_power_module(std, k)
        space = skew_pairing_space(s, mod)
        dims.append(len(space))
        if k == 2 and len(space) == 1:
            ratio = killing_multiple(s, mod, space[0])
    k3 = so3()
    so3_dims = [len(skew_pairing_space(k3, so3_irreducible_module(k3, d))) for d in (3, 5, 7)]
    ok = dims == [0, 1, 0, 0, 0, 0] and ratio is not None and so3_dims == [1, 0, 0]
    return ok, f"sl2 dims {dims}, k=2 pairing = {ratio} * Killing, so3 dims {so3_dims}"


STRUCTURE_KEYS = (
    "[k,r] = 0",
    "[s,r] = 0",
    "s orthogonal to k x r",
    "k orthogonal to [r,r]",
    "metric radical meets r trivially",
)


def classification_table():
    wrong = []
    cases = classification_cases()
    for label, m in cases:
        got = classify_low_index(m).case_label
        checks = structure_checks(m, levi_decomposition(m.algebra))
        failed = [k for k in STRUCTURE_KEYS if not checks[k]]
        if got != label or failed:
            wrong.append(f"{m.name}: expected {label}, got {got}, failed {failed}")
    labels = sorted(label for label, _ in cases)
    return (not wrong and len(cases) == 9), f"{len(cases)} cases {labels}" + (f"; {wrong}" if wrong else "")


def solvable_invariance():
    rng = random.Random(SEED)
    bad, members = [], solvable_members()
    for m in members:
        g = m.algebra
        basis = nilinvariant_form_space(g)
        fit = fitting_decomposition(g)
        for _ in range(200):
            form = basis[0].scale(0)
            for f in basis:
                form = form + f.scale(rng.randint(-3, 3))
            mm = MetricLieAlgebra(g, form)
            if not invariance_subalgebra(mm).is_full() or not form.vanishes_between(
                fit.fitting_zero, fit.fitting_one
            ):
                bad.append(m.name)
                break
    return not bad, f"{len(members)} solvable members x 200 forms" + (f"; failures {bad}" if bad else "")


def reduction_members():
    return [
        build_standard_oscillator(0),
        build_standard_oscillator(1),
        build_oscillator(nilpotent_so21(), 1),
        build_osc_alpha([], []),
        build_osc_alpha([1], [0]),
        build_osc_alpha([1], [2]),
        build_osc_alpha([], [], "one"),
        build_osc_alpha([1], [2], "one"),
    ]


def reduction_terminates():
    parts, ok = [], True
    for m in reduction_members():
        trace = complete_reduction(m)
        indices = [index_and_relative_index(m)[0]] + [
            index_and_relative_index(s.quotient)[0] for s in trace.steps
        ]
        good = (
            is_abelian(trace.final.algebra)
            and len(trace.steps) <= indices[0]
            and all(a > b for a, b in zip(indices, indices[1:]))
        )
        ok &= good
        parts.append(f"{m.name} {indices}")
    return ok, "index traces " + ", ".join(parts)


def random_rational_matrix(rng: random.Random) -> Matrix:
    n = rng.randint(1, 6)
    kind = rng.randrange(3)
    if kind == 0:
        return Matrix([[rat(f"{rng.randint(-4, 4)}/{rng.randint(1, 3)}") for _ in range(n)] for _ in range(n)])
    # conjugate a block matrix with repeated eigenvalues, so N is often nonzero
    diag = [[0] * n for _ in range(n)]
    for i in range(n):
        diag[i][i] = rng.choice([-1, 0, 1, 2])
        if i + 1 < n and rng.random() < 0.6:
            diag[i][i + 1] = 1
            diag[i + 1][i + 1] = diag[i][i]
    while True:
        p = Matrix([[rng.randint(-2, 2) for _ in range(n)] for _ in range(n)])
        if rank(p) == n:
            break
    return p @ Matrix(diag) @ inverse(p)


def jordan_chevalley_random():
    rng = random.Random(SEED)
    bad = 0
    for _ in range(100):
        m = random_rational_matrix(rng)
        jc = jordan_chevalley(m)
        s, nil = jc.semisimple, jc.nilpotent
        good = (
            (s + nil) == m
            and (s @ nil - nil @ s).is_zero()
            and is_nilpotent(nil)
            and poly_is_squarefree(minimal_polynomial(s))
        )
        bad += not good
    return bad == 0, f"100 matrices of dim <= 6, {bad} failures"


def radical_containment():
    checked, bad = 0, []
    for m in catalog_instances():
        if not is_effective(m) or not nil_invariance_check(m).passed:
            continue
        checked += 1
        failed = [k for k, v in radical_containments(m).items() if not v]
        if failed:
            bad.append(f"{m.name}: {failed}")
    return (checked > 0 and not bad), f"{checked} effective nil-invariant instances" + (f"; {bad}" if bad else "")


def transporter_identity():
    ideals, bad = 0, []
    for m in catalog_instances():
        if not nil_invariance_check(m).passed:
            continue
        for entry in transporter_checks(m):
            ideals += 1
            failed = [k for k, v in entry.items() if k != "ideal_dim" and not v]
            if failed:
                bad.append(f"{m.name}: {failed}")
    return (ideals > 0 and not bad), f"{ideals} tower ideals checked" + (f"; {bad}" if bad else "")


def abelian_radical_split():
    parts, ok = [], True
    for m, expect in ((build_cotangent(sl2()), (0, 0, 6)), (build_graph_radical(), (9, 0, 0))):
        split = abelian_radical_decomposition(m)
        dims = (split.g1.dim, split.g2.dim, split.g3.dim)
        good = dims == expect and split.passed
        ok &= good
        parts.append(f"{m.name} {dims} checks={split.passed}")
    return ok, "; ".join(parts)


CRITERIA = [
    ("nil-invariant non-invariant so3 algebra end to end", nil_not_invariant_end_to_end),
    ("Euclidean algebras force R^n into the form kernel", euclidean_nonexistence),
    ("skew pairing dimensions and Killing proportionality", skew_pairing_dimensions),
    ("low relative index classification table", classification_table),
    ("solvable invariance and Fitting orthogonality", solvable_invariance),
    ("reduction to an abelian metric algebra", reduction_terminates),
    ("Jordan-Chevalley decomposition", jordan_chevalley_random),
    ("metric radical containments", radical_containment),
    ("transporter identity and codimension bound", transporter_identity),
    ("abelian-radical split", abelian_radical_split),
]

_summary: dict[int, str] = {}


def _line(number: int, title: str, ok: bool, detail: str) -> str:
    return f"criterion {number:2d} {'PASS' if ok else 'FAIL'}: {title} ({detail})"


@pytest.fixture(scope="module", autouse=True)
def print_summary(request):
    yield
    reporter = request.config.pluginmanager.getplugin("terminalreporter")
    if reporter is None:
        return
    reporter.write_line("")
    reporter.write_sep("-", "acceptance")
    for number in sorted(_summary):
        reporter.write_line(_summary[number])


@pytest.mark.parametrize("number", range(1, len(CRITERIA) + 1))
def test_criterion(number):
    title, fn = CRITERIA[number - 1]
    ok, detail = fn()
    _summary[number] = _line(number, title, ok, detail)
    print(_summary[number])
    assert ok, detail


def test_k2_pairing_is_killing_multiple():
    s = sl2()
    mod = symmetric_power_module(sl2_standard_module(s), 2)
    (pairing,) = skew_pairing_space(s, mod)
    ratio = killing_multiple(s, mod, pairing)
    assert ratio is not None and ratio != 0
    assert killing_form(s).gram.rows[2][2] == 8


def main() -> int:
    failures = 0
    for number, (title, fn) in enumerate(CRITERIA, 1):
        ok, detail = fn()
        failures += not ok
        print(_line(number, title, ok, detail), flush=True)
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
