"""Structure theory of nil-invariant metric Lie algebras.

Strong-invariance verification, the low-index classifier, the split for
abelian radicals, and skew pairings between an algebra and a module.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from typing import Sequence

from metric_lie.errors import InvariantViolation, UsageError
from metric_lie.forms import (
    MetricLieAlgebra,
    index_and_relative_index,
    is_effective,
    is_invariant_under,
    metric_radical,
    nil_invariance_check,
)
from metric_lie.lie import (
    LeviDecomposition,
    LieAlgebra,
    bracket_space,
    centralizer,
    is_abelian,
    is_ideal,
    killing_form,
    levi_decomposition,
    nilradical,
    subalgebra,
    transporter,
)
from metric_lie.linalg import (
    ZERO,
    Matrix,
    Subspace,
    SymBilinearForm,
    kernel_of_rows,
)

__all__ = [
    "CASE_LABELS",
    "StrongInvarianceReport",
    "ClassificationReport",
    "ModuleAction",
    "AbelianRadicalSplit",
    "semisimple_and_solvable_part",
    "verify_strong_invariance",
    "structure_checks",
    "classify_low_index",
    "abelian_radical_decomposition",
    "adjoint_module",
    "trivial_module",
    "sl2_standard_module",
    "so3_irreducible_module",
    "submodule",
    "symmetric_power_module",
    "skew_pairing_space",
    "killing_multiple",
    "pairing_left_kernel",
    "isotropic_tower",
    "transporter_checks",
    "radical_containments",
]

CASE_LABELS = (
    "C-I", "C-II", "C-III",
    "D-I-a", "D-I-b", "D-I-c", "D-II", "D-III-a", "D-III-b",
    "SEMIDEFINITE", "OUT_OF_RANGE",
)


def semisimple_and_solvable_part(g: LieAlgebra, levi: LeviDecomposition) -> Subspace:
    """g_s = s ⋉ r."""
    return levi.noncompact_part + levi.radical


def _require_nil_invariant(m: MetricLieAlgebra) -> None:
    cert = nil_invariance_check(m)
    if not cert.passed:
        w = cert.witness
        raise UsageError(
            f"form is not nil-invariant: witness pair ({_name(m, w.x)}, {_name(m, w.y)}) "
            f"has defect {w.defect}"
        )


def _name(m: MetricLieAlgebra, v: Sequence) -> str:
    nz = [k for k, a in enumerate(v) if a]
    if len(nz) == 1 and v[nz[0]] == 1:
        return m.labels[nz[0]]
    return "(" + ", ".join(str(a) for a in v) + ")"


# ----------------------------------------------------------- strong invariance


@dataclass(frozen=True)
class StrongInvarianceReport:
    checks: dict

    @property
    def passed(self) -> bool:
        return all(self.checks.values())


def verify_strong_invariance(m: MetricLieAlgebra) -> StrongInvarianceReport:
    _require_nil_invariant(m)
    g, form = m.algebra, m.form
    levi = levi_decomposition(g)
    gs = semisimple_and_solvable_part(g, levi)
    adjoint_on_gs = all(
        not (form.value(g.bracket(x, y), z) + form.value(y, g.bracket(x, z)))
        for x in g.basis_vectors()
        for y in gs.vectors
        for z in gs.vectors
    )
    full = Subspace.full(g.dim)
    k, s = levi.compact_part, levi.noncompact_part
    factors = levi.noncompact_factors
    checks = {
        "g acts skew on g_s": adjoint_on_gs,
        "g_s acts skew on g": is_invariant_under(m, gs),
        "s orthogonal to [k,g]": form.vanishes_between(s, bracket_space(g, k, full)),
        "k orthogonal to [s,g]": form.vanishes_between(k, bracket_space(g, s, full)),
        "simple factors of s pairwise orthogonal": all(
            form.vanishes_between(a, b)
            for i, a in enumerate(factors)
            for b in factors[i + 1:]
        ),
    }
    return StrongInvarianceReport(checks)


# -------------------------------------------------------------- classification


@dataclass(frozen=True)
class ClassificationReport:
    ell: int
    case_label: str
    witnesses: dict = field(default_factory=dict)
    checks: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.case_label not in CASE_LABELS:
            raise InvariantViolation(f"unknown case label {self.case_label}")
        if (self.case_label == "OUT_OF_RANGE") != (self.ell >= 3):
            raise InvariantViolation("OUT_OF_RANGE must coincide with relative index >= 3")


def structure_checks(m: MetricLieAlgebra, levi: LeviDecomposition) -> dict:
    """Direct-product and orthogonality statements for relative index at most two."""
    g, form = m.algebra, m.form
    k, s, r = levi.compact_part, levi.noncompact_part, levi.radical
    perp = metric_radical(m)
    zr = centralizer(g, r).intersect(r)
    return {
        "[k,r] = 0": bracket_space(g, k, r).is_zero(),
        "[s,r] = 0": bracket_space(g, s, r).is_zero(),
        "[k,s] = 0": bracket_space(g, k, s).is_zero(),
        "s orthogonal to k x r": form.vanishes_between(s, k + r),
        "k orthogonal to [r,r]": form.vanishes_between(k, bracket_space(g, r, r)),
        "metric radical inside k x z(r)": (k + zr).contains_subspace(perp),
        "metric radical meets r trivially": perp.intersect(r).is_zero(),
    }


def _relative_index_on(form: SymBilinearForm, w: Subspace) -> int:
    return form.restrict(w).signature().relative_index if w.dim else 0


def _is_oscillator_type(g: LieAlgebra, form: SymBilinearForm, r: Subspace) -> bool:
    """Solvable, non-abelian, and Lorentzian modulo its own null part."""
    if r.is_zero() or is_abelian(g, r):
        return False
    sig = form.restrict(r).signature()
    return min(sig.positives, sig.negatives) == 1


def classify_low_index(m: MetricLieAlgebra) -> ClassificationReport:
    if not is_effective(m):
        raise UsageError("metric algebra is not effective; apply effectivize first")
    _require_nil_invariant(m)
    g, form = m.algebra, m.form
    _, ell = index_and_relative_index(m)
    levi = levi_decomposition(g)
    k, s, r = levi.compact_part, levi.noncompact_part, levi.radical
    witnesses = {"k": k, "s": s, "r": r, "metric_radical": metric_radical(m)}
    if ell >= 3:
        return ClassificationReport(ell, "OUT_OF_RANGE", witnesses, {})
    checks = structure_checks(m, levi)
    if ell == 0:
        rsig = form.restrict(r).signature() if r.dim else None
        checks.update({
            "s = 0": s.is_zero(),
            "r abelian": is_abelian(g, r),
            "r definite": rsig is None or (
                rsig.zeros == 0 and min(rsig.positives, rsig.negatives) == 0
            ),
        })
        label = "SEMIDEFINITE"
    else:
        label = _case_label(g, form, ell, s, r)
    failed = [name for name, ok in checks.items() if not ok]
    if failed:
        raise InvariantViolation(f"structure statements fail: {', '.join(failed)}")
    if label is None:
        raise InvariantViolation(f"no case matches relative index {ell}")
    return ClassificationReport(ell, label, witnesses, checks)


def _case_label(g, form, ell, s, r) -> str | None:
    r_abelian = is_abelian(g, r)
    if ell == 1:
        if not s.is_zero():
            return "C-III" if s.dim == 3 else None
        if r_abelian:
            return "C-I"
        return "C-II" if _is_oscillator_type(g, form, r) else None
    ell_s = _relative_index_on(form, s)
    if not s.is_zero():
        if ell_s == 2:
            return "D-II"
        if ell_s == 1:
            if r_abelian:
                return "D-III-a"
            return "D-III-b" if _is_oscillator_type(g, form, r) else None
        return None
    if r_abelian:
        return "D-I-a"
    ell_r = _relative_index_on(form, r)
    if ell_r == 1 and _is_oscillator_type(g, form, r):
        return "D-I-b"
    if ell_r == 2:
        return "D-I-c"
    return None


# ---------------------------------------------------------- abelian radical


@dataclass(frozen=True)
class AbelianRadicalSplit:
    g1: Subspace
    g2: Subspace
    g3: Subspace
    checks: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())


def _nondegenerate_on(form: SymBilinearForm, w: Subspace) -> bool:
    return w.is_zero() or form.restrict(w).signature().zeros == 0


def _invariant_on(g: LieAlgebra, form: SymBilinearForm, w: Subspace) -> bool:
    return all(
        not (form.value(g.bracket(x, y), z) + form.value(y, g.bracket(x, z)))
        for x in w.vectors
        for y in w.vectors
        for z in w.vectors
    )


def abelian_radical_decomposition(m: MetricLieAlgebra) -> AbelianRadicalSplit:
    g, form = m.algebra, m.form
    levi = levi_decomposition(g)
    k, s, r = levi.compact_part, levi.noncompact_part, levi.radical
    if not is_abelian(g, r):
        raise UsageError("abelian-radical split needs an abelian radical")
    if not is_effective(m):
        raise UsageError("abelian-radical split needs an effective metric algebra")
    _require_nil_invariant(m)
    a = centralizer(g, s).intersect(r)
    b = bracket_space(g, s, r)
    s0 = centralizer(g, b).intersect(s)
    if s.is_zero():
        s1 = s
    else:
        # Killing complement of s0 inside s, computed with the Killing form of s
        ks = killing_form(subalgebra(g, s))
        s0_coords = Subspace.span([s.coordinates(v) for v in s0.vectors], s.dim)
        s1 = Subspace.span([s.combine(v) for v in ks.perp(s0_coords).vectors], g.dim)
    g1, g2, g3 = k + a, s0, s1 + b
    pairing = form.gram_between(s1, b)
    checks = {
        "pieces are ideals": all(is_ideal(g, p) for p in (g1, g2, g3)),
        "direct sum spans g": (g1 + g2 + g3).is_full() and g1.dim + g2.dim + g3.dim == g.dim,
        "pairwise orthogonal": form.vanishes_between(g1, g2)
        and form.vanishes_between(g1, g3)
        and form.vanishes_between(g2, g3),
        "g2 nondegenerate and invariant": _nondegenerate_on(form, g2) and _invariant_on(g, form, g2),
        "g3 nondegenerate and invariant": _nondegenerate_on(form, g3) and _invariant_on(g, form, g3),
        "metric radical inside g1": g1.contains_subspace(metric_radical(m)),
        "b totally isotropic": form.is_totally_isotropic(b),
        "s1 and b dually paired": s1.dim == b.dim
        and (s1.is_zero() or _nondegenerate_square(pairing)),
    }
    return AbelianRadicalSplit(g1, g2, g3, checks)


def _nondegenerate_square(mat: Matrix) -> bool:
    return mat.is_square() and not kernel_of_rows(mat.rows, mat.ncols)


# ------------------------------------------------------------------- modules


@dataclass(frozen=True)
class ModuleAction:
    algebra: LieAlgebra
    module_dim: int
    action: tuple

    def __post_init__(self):
        g = self.algebra
        if len(self.action) != g.dim:
            raise UsageError("need one action matrix per basis element")
        for a in self.action:
            if a.shape != (self.module_dim, self.module_dim):
                raise UsageError("action matrix has the wrong size")
        for i in range(g.dim):
            for j in range(i + 1, g.dim):
                expected = Matrix.zeros(self.module_dim, self.module_dim)
                for k, c in enumerate(g.bracket(g.unit(i), g.unit(j))):
                    if c:
                        expected = expected + self.action[k].scale(c)
                if self.action[i].commutator(self.action[j]) != expected:
                    raise UsageError(f"action is not a representation on the pair ({i},{j})")

    def rho(self, x: Sequence) -> Matrix:
        out = Matrix.zeros(self.module_dim, self.module_dim)
        for c, a in zip(x, self.action):
            if c:
                out = out + a.scale(c)
        return out


def adjoint_module(g: LieAlgebra) -> ModuleAction:
    return ModuleAction(g, g.dim, tuple(g.ad_basis(i) for i in range(g.dim)))


def trivial_module(g: LieAlgebra, m: int) -> ModuleAction:
    return ModuleAction(g, m, tuple(Matrix.zeros(m, m) for _ in range(g.dim)))


def sl2_standard_module(g: LieAlgebra) -> ModuleAction:
    """Standard 2-dim module for sl2 in the X, Y, H basis."""
    return ModuleAction(
        g,
        2,
        (Matrix([[0, 1], [0, 0]]), Matrix([[0, 0], [1, 0]]), Matrix([[1, 0], [0, -1]])),
    )


def _monomials(n: int, k: int) -> list[tuple]:
    out = []
    for combo in combinations_with_replacement(range(n), k):
        e = [0] * n
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    return out


def _symmetric_power_matrix(a: Matrix, monos: list[tuple]) -> Matrix:
    index = {m: t for t, m in enumerate(monos)}
    n = a.nrows
    size = len(monos)
    cols = []
    for mono in monos:
        col = [ZERO] * size
        for b in range(n):
            if not mono[b]:
                continue
            for c in range(n):
                coef = a.rows[c][b]
                if coef:
                    new = list(mono)
                    new[b] -= 1
                    new[c] += 1
                    col[index[tuple(new)]] += mono[b] * coef
        cols.append(col)
    return Matrix.from_columns(cols, size)


def symmetric_power_module(base: ModuleAction, k: int) -> ModuleAction:
    """Induced action on degree-k polynomials in the monomial basis."""
    if k < 1:
        raise UsageError("symmetric power degree must be at least 1")
    monos = _monomials(base.module_dim, k)
    return ModuleAction(
        base.algebra, len(monos), tuple(_symmetric_power_matrix(a, monos) for a in base.action)
    )


def submodule(mod: ModuleAction, w: Subspace) -> ModuleAction:
    """Restriction of the action to an invariant subspace, in its canonical basis."""
    mats = []
    for a in mod.action:
        cols = []
        for v in w.vectors:
            image = a.apply(v)
            if not w.contains(image):
                raise UsageError("subspace is not invariant")
            cols.append(w.coordinates(image))
        mats.append(Matrix.from_columns(cols, w.dim))
    return ModuleAction(mod.algebra, w.dim, tuple(mats))


def so3_irreducible_module(g: LieAlgebra, dim: int) -> ModuleAction:
    """Harmonic polynomials of degree (dim-1)/2 on R^3 under rotations."""
    if dim < 1 or dim % 2 == 0:
        raise UsageError("real irreducible so3 modules have odd dimension")
    l = (dim - 1) // 2
    natural = adjoint_module(g)
    if l == 0:
        return trivial_module(g, 1)
    power = symmetric_power_module(natural, l)
    monos = _monomials(3, l)
    if l == 1:
        return power
    lower = {m: t for t, m in enumerate(_monomials(3, l - 2))}
    # Laplacian on monomials: d^2/dx_i^2
    rows = [[ZERO] * len(monos) for _ in lower]
    for t, mono in enumerate(monos):
        for i in range(3):
            if mono[i] >= 2:
                new = list(mono)
                new[i] -= 2
                rows[lower[tuple(new)]][t] += mono[i] * (mono[i] - 1)
    harmonic = Subspace.span(kernel_of_rows(rows, len(monos)), len(monos))
    if harmonic.dim != dim:
        raise InvariantViolation("harmonic polynomial space has the wrong dimension")
    return submodule(power, harmonic)


def skew_pairing_space(f: LieAlgebra, mod: ModuleAction) -> list[Matrix]:
    """Bilinear B: f x V -> Q with B(X, Yv) = -B(Y, Xv); B[i][a] = B(e_i, v_a)."""
    n, d = f.dim, mod.module_dim
    rows = []
    for i in range(n):
        for j in range(i, n):
            for a in range(d):
                row = [ZERO] * (n * d)
                # B(e_i, rho_j v_a) + B(e_j, rho_i v_a)
                for b in range(d):
                    c = mod.action[j].rows[b][a]
                    if c:
                        row[i * d + b] += c
                    c = mod.action[i].rows[b][a]
                    if c:
                        row[j * d + b] += c
                if any(row):
                    rows.append(row)
    return [
        Matrix([sol[i * d:(i + 1) * d] for i in range(n)], d)
        for sol in kernel_of_rows(rows, n * d)
    ]


def killing_multiple(f: LieAlgebra, mod: ModuleAction, pairing: Matrix):
    """Rational c with pairing(X, v) = c * kappa(X, phi(v)) for an intertwiner phi: V -> f.

    Returns None when V admits no unique intertwiner to the adjoint module or
    the pairing is not of that shape.
    """
    n, d = f.dim, mod.module_dim
    # unknown phi (n x d): phi rho(e_i) = ad(e_i) phi
    rows = []
    for i in range(n):
        rho, ad = mod.action[i], f.ad_basis(i)
        for p in range(n):
            for q in range(d):
                row = [ZERO] * (n * d)
                for t in range(d):
                    if rho.rows[t][q]:
                        row[p * d + t] += rho.rows[t][q]
                for t in range(n):
                    if ad.rows[p][t]:
                        row[t * d + q] -= ad.rows[p][t]
                if any(row):
                    rows.append(row)
    sols = kernel_of_rows(rows, n * d)
    if len(sols) != 1:
        return None
    phi = Matrix([sols[0][p * d:(p + 1) * d] for p in range(n)], d)
    model = killing_form(f).gram @ phi
    ratio = None
    for a, b in zip(pairing.flatten(), model.flatten()):
        if not b:
            if a:
                return None
            continue
        if ratio is None:
            ratio = a / b
        elif a != ratio * b:
            return None
    return ratio


def pairing_left_kernel(f: LieAlgebra, pairings: Sequence[Matrix]) -> Subspace:
    """{X : B(X, .) = 0 for all B in the list}."""
    rows = []
    for b in pairings:
        for col in b.columns():
            rows.append(col)
    return Subspace.span(kernel_of_rows(rows, f.dim), f.dim)


# ------------------------------------------------------- radical properties


def isotropic_tower(m: MetricLieAlgebra, levi: LeviDecomposition | None = None) -> list[Subspace]:
    """The witness ideals g_s ∩ g_s^⊥, r ∩ r^⊥, n ∩ n^⊥ (zero ones dropped)."""
    g, form = m.algebra, m.form
    levi = levi or levi_decomposition(g)
    gs = semisimple_and_solvable_part(g, levi)
    n = nilradical(g)
    out = []
    for w in (gs, levi.radical, n):
        b = w.intersect(form.perp(w))
        if not b.is_zero() and b not in out:
            out.append(b)
    return out


def transporter_checks(m: MetricLieAlgebra) -> list[dict]:
    """Transporter identity and codimension bound on each tower ideal."""
    g, form = m.algebra, m.form
    levi = levi_decomposition(g)
    gs = semisimple_and_solvable_part(g, levi)
    perp = metric_radical(m)
    _, ell = index_and_relative_index(m)
    full = Subspace.full(g.dim)
    results = []
    for b in isotropic_tower(m, levi):
        b0 = b.intersect(perp)
        gb_perp = form.perp(bracket_space(g, full, b))
        entry = {
            "ideal_dim": b.dim,
            "is totally isotropic ideal in g_s": is_ideal(g, b)
            and form.is_totally_isotropic(b)
            and gs.contains_subspace(b),
        }
        for qname, q in (("g", full), ("k", levi.compact_part), ("g_s", gs)):
            nq = transporter(g, q, b, b0)
            entry[f"identity on {qname}"] = nq == q.intersect(gb_perp)
            entry[f"codim bound on {qname}"] = q.dim - nq.dim <= ell
        if ell <= 2:
            entry["compact part transports fully"] = (
                transporter(g, levi.compact_part, b, b0) == levi.compact_part
            )
        results.append(entry)
    return results


def radical_containments(m: MetricLieAlgebra) -> dict:
    """Containments of the metric radical for effective nil-invariant algebras."""
    g = m.algebra
    levi = levi_decomposition(g)
    gs = semisimple_and_solvable_part(g, levi)
    zgs = centralizer(g, gs).intersect(gs)
    perp = metric_radical(m)
    commutator = bracket_space(g, perp, gs)
    out = {
        "radical inside k + z(g_s)": (levi.compact_part + zgs).contains_subspace(perp),
        "[radical, g_s] inside z(g_s) and radical": zgs.intersect(perp).contains_subspace(commutator),
    }
    if is_invariant_under(m, perp):
        out["[radical, g_s] = 0 under radical-invariance"] = commutator.is_zero()
    return out

