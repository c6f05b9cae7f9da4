"""Symmetric bilinear forms on Lie algebras.

Invariance and nil-invariance tests, form spaces, effectivization and the
reduction by totally isotropic ideals.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Sequence

from metric_lie.errors import InvariantViolation, UsageError
from metric_lie.lie import (
    LieAlgebra,
    _factor_rational,
    bracket_space,
    center,
    centralizer,
    is_abelian,
    is_ideal,
    is_solvable,
    is_subalgebra,
    largest_ideal_within,
    levi_decomposition,
    nilradical,
    quotient_algebra,
    subalgebra,
    subalgebra_generated,
    transporter,
)
from metric_lie.linalg import (
    ONE,
    ZERO,
    Matrix,
    RowReducer,
    Subspace,
    SymBilinearForm,
    charpoly,
    jordan_chevalley,
    kernel,
    kernel_of_rows,
)

__all__ = [
    "MetricLieAlgebra",
    "NilInvarianceCertificate",
    "ReductionStep",
    "ReductionTrace",
    "metric_radical",
    "index_and_relative_index",
    "skew_defect",
    "invariance_subalgebra",
    "is_invariant",
    "is_invariant_under",
    "nil_test_operators",
    "nil_invariance_check",
    "nilinvariant_form_space",
    "is_effective",
    "effectivize",
    "transporter",
    "reduce_by_isotropic_ideal",
    "characteristic_isotropic_ideal",
    "complete_reduction",
]


@dataclass(frozen=True)
class MetricLieAlgebra:
    algebra: LieAlgebra
    form: SymBilinearForm
    name: str = ""

    def __post_init__(self):
        if self.algebra.dim != self.form.dim:
            raise UsageError(
                f"form has size {self.form.dim} but the algebra has dimension {self.algebra.dim}"
            )

    @property
    def dim(self) -> int:
        return self.algebra.dim

    @property
    def labels(self) -> tuple:
        return self.algebra.labels

    def with_form(self, form: SymBilinearForm) -> "MetricLieAlgebra":
        return MetricLieAlgebra(self.algebra, form, self.name)


def metric_radical(m: MetricLieAlgebra) -> Subspace:
    return m.form.radical()


def index_and_relative_index(m: MetricLieAlgebra) -> tuple[int, int]:
    sig = m.form.signature()
    return sig.index, sig.relative_index


def skew_defect(gram: Matrix, phi: Matrix) -> Matrix:
    """phi^T G + G phi; zero exactly when phi is skew for the form."""
    return phi.T @ gram + gram @ phi


def _skewness_rows(g: LieAlgebra, gram: Matrix, vectors: Sequence) -> list[list]:
    """Rows of the linear system in the coefficients of ``vectors`` for skew ad."""
    n = g.dim
    defects = [skew_defect(gram, g.ad(v)) for v in vectors]
    return [
        [d.rows[p][q] for d in defects]
        for p in range(n)
        for q in range(p, n)
    ]


def invariance_subalgebra(m: MetricLieAlgebra) -> Subspace:
    g = m.algebra
    full = Subspace.full(g.dim)
    coeffs = kernel_of_rows(_skewness_rows(g, m.form.gram, full.vectors), g.dim)
    inv = Subspace.span(coeffs, g.dim)
    if not is_subalgebra(g, inv):
        raise InvariantViolation("invariance set is not a subalgebra")
    return inv


def is_invariant(m: MetricLieAlgebra) -> bool:
    return is_invariant_under(m, Subspace.full(m.dim))


def is_invariant_under(m: MetricLieAlgebra, w: Subspace) -> bool:
    """True when ad(x) is skew for every x in w."""
    gram = m.form.gram
    return all(skew_defect(gram, m.algebra.ad(v)).is_zero() for v in w.vectors)


# ------------------------------------------------------------ nil-invariance


def _operator_closure(g: LieAlgebra) -> list[Matrix]:
    """Spanning set of the closure of ad(g) under brackets and Jordan parts."""
    n = g.dim
    red = RowReducer(n * n)
    basis: list[Matrix] = []
    queue: list[Matrix] = []

    def push(a: Matrix) -> None:
        if not a.is_zero() and red.add(a.flatten()):
            basis.append(a)
            queue.append(a)

    for i in range(n):
        push(g.ad_basis(i))
    while queue:
        a = queue.pop(0)
        for b in list(basis):
            push(a.commutator(b))
        jp = jordan_chevalley(a)
        push(jp.semisimple)
        push(jp.nilpotent)
    return basis


def _root_vectors(g: LieAlgebra, s: Subspace, seed: int = 0) -> tuple[list[tuple], bool]:
    """Nilpotent elements of s that generate it, from rational eigenspaces of ad_s(h)."""
    if s.is_zero():
        return [], True
    alg = subalgebra(g, s)
    m = alg.dim
    rng = random.Random(seed)
    candidates = alg.basis_vectors() + [
        tuple(rng.randint(-2, 2) for _ in range(m)) for _ in range(24)
    ]
    found: list[tuple] = []
    for h in candidates:
        a = alg.ad(h)
        for f in _factor_rational(charpoly(a)):
            if len(f) == 2 and f[0]:
                lam = -f[0]
                shifted = a - Matrix.identity(m).scale(lam)
                found.extend(kernel(shifted.power(m)).vectors)
        if found and subalgebra_generated(alg, found).is_full():
            return [s.combine(v) for v in found], True
    return [s.combine(v) for v in found], False


@dataclass(frozen=True)
class NilWitness:
    operator: Matrix
    x: tuple
    y: tuple
    defect: object


@dataclass(frozen=True)
class NilInvarianceCertificate:
    passed: bool
    tested_operators: tuple
    witness: NilWitness | None = None
    levi_generated: bool = True

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"


def nil_test_operators(g: LieAlgebra) -> tuple[list[Matrix], bool]:
    """Nilpotent operators tested for skewness, and whether s was fully generated."""
    ops: list[Matrix] = []
    for a in _operator_closure(g):
        nil = jordan_chevalley(a).nilpotent
        if not nil.is_zero():
            ops.append(nil)
    for v in nilradical(g).vectors:
        ops.append(g.ad(v))
    s = levi_decomposition(g).noncompact_part
    roots, complete = _root_vectors(g, s)
    ops.extend(g.ad(v) for v in roots)
    # keep a linearly independent subset: skewness is linear in the operator
    red = RowReducer(g.dim * g.dim)
    return [a for a in ops if red.add(a.flatten())], complete


def nil_invariance_check(m: MetricLieAlgebra) -> NilInvarianceCertificate:
    ops, complete = nil_test_operators(m.algebra)
    gram = m.form.gram
    n = m.dim
    for op in ops:
        d = skew_defect(gram, op)
        if not d.is_zero():
            p, q = next((p, q) for p in range(n) for q in range(n) if d.rows[p][q])
            w = NilWitness(op, m.algebra.unit(p), m.algebra.unit(q), d.rows[p][q])
            return NilInvarianceCertificate(False, tuple(ops), w, complete)
    return NilInvarianceCertificate(True, tuple(ops), None, complete)


def nilinvariant_form_space(g: LieAlgebra) -> list[SymBilinearForm]:
    """Basis of symmetric forms for which every tested nilpotent operator is skew."""
    n = g.dim
    ops, _ = nil_test_operators(g)
    var = {}
    for p in range(n):
        for q in range(p, n):
            var[(p, q)] = len(var)
    rows = []
    for phi in ops:
        ph = phi.rows
        for a in range(n):
            for b in range(a, n):
                row = [ZERO] * len(var)
                for c in range(n):
                    if ph[c][a]:
                        row[var[(min(c, b), max(c, b))]] += ph[c][a]
                    if ph[c][b]:
                        row[var[(min(a, c), max(a, c))]] += ph[c][b]
                if any(row):
                    rows.append(row)
    forms = []
    for sol in kernel_of_rows(rows, len(var)):
        gram = [[ZERO] * n for _ in range(n)]
        for (p, q), k in var.items():
            gram[p][q] = gram[q][p] = sol[k]
        forms.append(SymBilinearForm(Matrix(gram, n)))
    return forms


# ------------------------------------------------------------- effectivity


def is_effective(m: MetricLieAlgebra) -> bool:
    return largest_ideal_within(m.algebra, metric_radical(m)).is_zero()


def _pushforward(m: MetricLieAlgebra, ideal: Subspace) -> MetricLieAlgebra:
    q, _ = quotient_algebra(m.algebra, ideal)
    comp = ideal.complement_indices()
    g = m.form.gram.rows
    gram = Matrix([[g[a][b] for b in comp] for a in comp], len(comp))
    return MetricLieAlgebra(q, SymBilinearForm(gram), m.name)


def effectivize(m: MetricLieAlgebra) -> MetricLieAlgebra:
    ideal = largest_ideal_within(m.algebra, metric_radical(m))
    if ideal.is_zero():
        return m
    out = _pushforward(m, ideal)
    if not is_effective(out):
        raise InvariantViolation("quotient by the largest ideal in the radical is not effective")
    return out


# --------------------------------------------------------------- reduction


@dataclass(frozen=True)
class ReductionStep:
    isotropic_ideal: Subspace
    quotient: MetricLieAlgebra


@dataclass(frozen=True)
class ReductionTrace:
    initial: MetricLieAlgebra
    steps: tuple = field(default_factory=tuple)

    @property
    def final(self) -> MetricLieAlgebra:
        return self.steps[-1].quotient if self.steps else self.initial


def reduce_by_isotropic_ideal(m: MetricLieAlgebra, j: Subspace) -> MetricLieAlgebra:
    g, form = m.algebra, m.form
    if not is_ideal(g, j):
        raise UsageError("reduction subspace is not an ideal")
    if not form.is_totally_isotropic(j):
        raise UsageError("reduction ideal is not totally isotropic")
    jp = form.perp(j)
    if not is_subalgebra(g, jp):
        raise UsageError("orthogonal complement of the ideal is not a subalgebra")
    if j.is_zero():
        return m
    inner = subalgebra(g, jp)
    j_inner = Subspace.span([jp.coordinates(v) for v in j.vectors], jp.dim)
    q, _ = quotient_algebra(inner, j_inner)
    comp = j_inner.complement_indices()
    reps = [jp.vectors[c] for c in comp]
    gram = Matrix([[form.value(a, b) for b in reps] for a in reps], len(reps))
    out = MetricLieAlgebra(q, SymBilinearForm(gram), m.name)
    if index_and_relative_index(out)[0] >= index_and_relative_index(m)[0]:
        raise InvariantViolation("reduction by a nonzero isotropic ideal did not lower the index")
    return out


def characteristic_isotropic_ideal(m: MetricLieAlgebra) -> Subspace:
    """Center of the nilradical intersected with [g, nilradical]."""
    g = m.algebra
    if not is_solvable(g):
        raise UsageError("characteristic isotropic ideal needs a solvable algebra")
    if not is_invariant(m):
        raise UsageError("characteristic isotropic ideal needs an invariant form")
    n = nilradical(g)
    zn = centralizer(g, n).intersect(n)
    return zn.intersect(bracket_space(g, Subspace.full(g.dim), n))


def _central_isotropic(m: MetricLieAlgebra) -> Subspace:
    z = center(m.algebra)
    zz = z.intersect(m.form.perp(z))
    if not zz.is_zero():
        return zz
    vs = list(z.vectors)
    trials = vs + [
        tuple(a + s * b for a, b in zip(u, w))
        for i, u in enumerate(vs)
        for w in vs[i + 1:]
        for s in (ONE, -ONE)
    ]
    for v in trials:
        if any(v) and not m.form.value(v, v):
            return Subspace.span([v], m.dim)
    raise InvariantViolation("no rational central isotropic vector found for the reduction step")


def _reduction_ideal(m: MetricLieAlgebra) -> Subspace:
    j0 = characteristic_isotropic_ideal(m)
    if not j0.is_zero() and m.form.is_totally_isotropic(j0):
        return j0
    j1 = j0.intersect(m.form.perp(j0))
    if not j1.is_zero():
        return j1
    return _central_isotropic(m)


def complete_reduction(m: MetricLieAlgebra) -> ReductionTrace:
    g = m.algebra
    if not is_solvable(g):
        raise UsageError("complete reduction needs a solvable algebra")
    cert = nil_invariance_check(m)
    if not cert.passed:
        raise UsageError("complete reduction needs a nil-invariant form")
    if not is_invariant(m):
        raise InvariantViolation("solvable algebra with a nil-invariant but non-invariant form")
    mu0 = index_and_relative_index(m)[0]
    steps: list[ReductionStep] = []
    cur = m
    while not is_abelian(cur.algebra):
        j = _reduction_ideal(cur)
        cur = reduce_by_isotropic_ideal(cur, j)
        steps.append(ReductionStep(j, cur))
        if len(steps) > mu0:
            raise InvariantViolation("reduction needed more steps than the initial index")
    return ReductionTrace(m, tuple(steps))
