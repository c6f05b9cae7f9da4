"""Property suites run over the construction catalog by ``metric-lie verify``."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable

from metric_lie.catalog import (
    build_cotangent,
    build_euclidean,
    build_graph_radical,
    catalog_instances,
    classification_cases,
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
    nil_invariance_check,
    nilinvariant_form_space,
)
from metric_lie.lie import fitting_decomposition, is_abelian, levi_decomposition
from metric_lie.linalg import Subspace, SymBilinearForm
from metric_lie.structure import (
    abelian_radical_decomposition,
    adjoint_module,
    classify_low_index,
    killing_multiple,
    pairing_left_kernel,
    radical_containments,
    sl2_standard_module,
    so3_irreducible_module,
    skew_pairing_space,
    structure_checks,
    symmetric_power_module,
    transporter_checks,
    trivial_module,
    verify_strong_invariance,
)

__all__ = ["SuiteResult", "SUITES", "run_suite", "random_form"]


@dataclass
class SuiteResult:
    name: str
    lines: list = field(default_factory=list)
    counterexample: str | None = None

    @property
    def passed(self) -> bool:
        return self.counterexample is None

    def check(self, ok: bool, instance: str, detail: str) -> None:
        self.lines.append(f"{'ok  ' if ok else 'FAIL'} {instance}: {detail}")
        if not ok and self.counterexample is None:
            self.counterexample = f"{instance}: {detail}"


def _nil_invariant(ms):
    return [m for m in ms if nil_invariance_check(m).passed]


def strong_invariance_suite() -> SuiteResult:
    res = SuiteResult("strong-invariance")
    for m in _nil_invariant(catalog_instances()):
        report = verify_strong_invariance(m)
        failed = [k for k, v in report.checks.items() if not v]
        res.check(report.passed, m.name, "all hold" if not failed else ", ".join(failed))
    return res


def structure_suite() -> SuiteResult:
    res = SuiteResult("structure")
    for label, m in classification_cases():
        checks = structure_checks(m, levi_decomposition(m.algebra))
        failed = [k for k, v in checks.items() if not v]
        res.check(not failed, f"{label} {m.name}", "all hold" if not failed else ", ".join(failed))
    return res


def _classification_suite(name: str, prefix: str) -> SuiteResult:
    res = SuiteResult(name)
    for label, m in classification_cases():
        if label.startswith(prefix):
            got = classify_low_index(m).case_label
            res.check(got == label, m.name, f"expected {label}, got {got}")
    return res


def reduction_suite() -> SuiteResult:
    res = SuiteResult("reduction")
    for m in solvable_members():
        trace = complete_reduction(m)
        indices = [index_and_relative_index(m)[0]] + [
            index_and_relative_index(s.quotient)[0] for s in trace.steps
        ]
        ok = (
            is_abelian(trace.final.algebra)
            and len(trace.steps) <= indices[0]
            and all(a > b for a, b in zip(indices, indices[1:]))
        )
        res.check(ok, m.name, f"{len(trace.steps)} steps, indices {indices}")
    return res


def pairing_suite() -> SuiteResult:
    res = SuiteResult("pairings")
    s = sl2()
    std = sl2_standard_module(s)
    dims = []
    for k in range(1, 7):
        mod = symmetric_power_module(std, k)
        space = skew_pairing_space(s, mod)
        dims.append(len(space))
        if len(space) == 1:
            c = killing_multiple(s, mod, space[0])
            res.check(c is not None, f"sl2 on S^{k}", f"pairing = {c} * Killing")
    res.check(dims == [0, 1, 0, 0, 0, 0], "sl2 symmetric powers k=1..6", f"dims {dims}")
    adj = skew_pairing_space(s, adjoint_module(s))
    res.check(
        len(adj) == 1 and killing_multiple(s, adjoint_module(s), adj[0]) is not None,
        "sl2 adjoint", f"dim {len(adj)}, proportional to Killing",
    )
    k = so3()
    so3_dims = []
    for d in (3, 5, 7):
        mod = so3_irreducible_module(k, d)
        space = skew_pairing_space(k, mod)
        so3_dims.append(len(space))
        left = pairing_left_kernel(k, space)
        res.check(left.is_zero() or left.is_full(), f"so3 dim {d}", "left kernel is 0 or everything")
    res.check(so3_dims == [1, 0, 0], "so3 irreducibles dims 3,5,7", f"dims {so3_dims}")
    triv = skew_pairing_space(s, trivial_module(s, 2))
    res.check(len(triv) == 6, "sl2 trivial module dim 2", f"dim {len(triv)}")
    return res


def euclidean_suite() -> SuiteResult:
    res = SuiteResult("euclidean")
    for n in (4, 5):
        g = build_euclidean(n)
        translations = Subspace.coordinate(range(g.dim - n, g.dim), g.dim)
        forms = nilinvariant_form_space(g)
        ok = all(f.radical().contains_subspace(translations) for f in forms)
        res.check(ok, f"e{n}", f"{len(forms)} basis forms, R^{n} in every kernel")
    for m, expect in (
        (build_cotangent(sl2()), (0, 0, 6)),
        (build_graph_radical(), (9, 0, 0)),
    ):
        split = abelian_radical_decomposition(m)
        dims = (split.g1.dim, split.g2.dim, split.g3.dim)
        ok = dims == expect and split.passed
        res.check(ok, m.name, f"split dims {dims}")
    return res


def random_form(basis: list[SymBilinearForm], rng: random.Random) -> SymBilinearForm:
    n = basis[0].dim
    total = SymBilinearForm.zero(n)
    for f in basis:
        total = total + f.scale(rng.randint(-3, 3))
    return total


def solvable_invariance_suite(samples: int = 20, seed: int = 0) -> SuiteResult:
    res = SuiteResult("solvable-invariance")
    rng = random.Random(seed)
    for m in solvable_members():
        g = m.algebra
        basis = nilinvariant_form_space(g)
        fit = fitting_decomposition(g)
        bad = 0
        for _ in range(samples):
            form = random_form(basis, rng)
            mm = MetricLieAlgebra(g, form)
            if not invariance_subalgebra(mm).is_full() or not form.vanishes_between(
                fit.fitting_zero, fit.fitting_one
            ):
                bad += 1
        res.check(bad == 0, m.name, f"{samples} forms, {bad} failures")
    return res


def radical_suite() -> SuiteResult:
    res = SuiteResult("radical")
    for m in _nil_invariant(catalog_instances()):
        if not is_effective(m):
            continue
        checks = radical_containments(m)
        failed = [k for k, v in checks.items() if not v]
        res.check(not failed, m.name, "all hold" if not failed else ", ".join(failed))
    return res


def transporter_suite() -> SuiteResult:
    res = SuiteResult("transporter")
    for m in _nil_invariant(catalog_instances()):
        for entry in transporter_checks(m):
            failed = [k for k, v in entry.items() if k != "ideal_dim" and not v]
            res.check(
                not failed, m.name,
                f"ideal of dim {entry['ideal_dim']}: " + ("all hold" if not failed else ", ".join(failed)),
            )
    return res


SUITES: dict[str, Callable[[], SuiteResult]] = {
    "strong-invariance": strong_invariance_suite,
    "structure": structure_suite,
    "index-one": lambda: _classification_suite("index-one", "C-"),
    "index-two": lambda: _classification_suite("index-two", "D-"),
    "reduction": reduction_suite,
    "pairings": pairing_suite,
    "euclidean": euclidean_suite,
    "solvable-invariance": solvable_invariance_suite,
    "radical": radical_suite,
    "transporter": transporter_suite,
}



def run_suite(name: str) -> SuiteResult:
    return SUITES[name]()
