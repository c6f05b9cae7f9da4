"""Builders for the standard families of metric Lie algebras."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence

from metric_lie.errors import UsageError
from metric_lie.forms import MetricLieAlgebra, is_invariant
from metric_lie.lie import (
    LieAlgebra,
    abelian_algebra,
    direct_sum,
    from_structure_constants,
    killing_form,
    linear_lie_algebra,
    semidirect_product,
)
from metric_lie.linalg import ONE, ZERO, Matrix, SymBilinearForm, rat

__all__ = [
    "so3",
    "sl2",
    "so_n",
    "so_n_natural",
    "build_abelian",
    "build_heisenberg",
    "build_standard_oscillator",
    "build_oscillator",
    "build_osc_alpha",
    "build_cotangent",
    "build_nil_not_invariant",
    "build_euclidean",
    "build_graph_radical",
    "build_torus_pairing",
    "direct_product",
    "with_killing",
    "nilpotent_so21",
    "rotation_so2",
    "CatalogEntry",
    "CATALOG",
    "classification_cases",
    "solvable_members",
    "catalog_instances",
]


def _block_diag(blocks: Sequence[Matrix]) -> Matrix:
    n = sum(b.nrows for b in blocks)
    rows = []
    offset = 0
    for b in blocks:
        for r in b.rows:
            rows.append((ZERO,) * offset + r + (ZERO,) * (n - offset - b.ncols))
        offset += b.ncols
    return Matrix(rows, n)


def _gram(n: int, entries: dict) -> Matrix:
    g = [[ZERO] * n for _ in range(n)]
    for (i, j), v in entries.items():
        g[i][j] = g[j][i] = rat(v)
    return Matrix(g, n)


# ------------------------------------------------------------ basic algebras


def so3() -> LieAlgebra:
    """so(3) in the cyclic basis [e1,e2]=e3, [e2,e3]=e1, [e3,e1]=e2."""
    return from_structure_constants(
        3, ("e1", "e2", "e3"), [(0, 1, 2, 1), (1, 2, 0, 1), (2, 0, 1, 1)]
    )


def sl2() -> LieAlgebra:
    """sl(2) with [X,Y]=H, [H,X]=2X, [H,Y]=-2Y."""
    return from_structure_constants(
        3, ("X", "Y", "H"), [(0, 1, 2, 1), (2, 0, 0, 2), (2, 1, 1, -2)]
    )


def so_n_natural(n: int) -> tuple[list[Matrix], list[str]]:
    """Matrices L_ij = E_ij - E_ji (i < j) and their labels."""
    mats, labels = [], []
    for i in range(n):
        for j in range(i + 1, n):
            m = [[ZERO] * n for _ in range(n)]
            m[i][j] = -ONE
            m[j][i] = ONE
            mats.append(Matrix(m, n))
            labels.append(f"L{i + 1}{j + 1}")
    return mats, labels


def so_n(n: int) -> LieAlgebra:
    mats, labels = so_n_natural(n)
    return linear_lie_algebra(mats, labels)


def with_killing(g: LieAlgebra, scale=1, name: str = "") -> MetricLieAlgebra:
    return MetricLieAlgebra(g, killing_form(g).scale(scale), name)


def rotation_so2() -> Matrix:
    return Matrix([[0, -1], [1, 0]])


def nilpotent_so21() -> Matrix:
    """A nonzero nilpotent element of so(2,1) for the form diag(1,1,-1)."""
    return Matrix([[0, 1, 0], [-1, 0, 1], [0, 1, 0]])


# ------------------------------------------------------------------ families


def build_abelian(n: int, s: int = 0) -> MetricLieAlgebra:
    if n < 0 or s < 0 or s > n - s:
        raise UsageError(f"abelian family needs 0 <= s <= n - s, got n={n}, s={s}")
    gram = Matrix.diagonal([ONE] * (n - s) + [-ONE] * s)
    return MetricLieAlgebra(abelian_algebra(n), SymBilinearForm(gram), f"ab({n},{s})")


def _hermitian_signs(n: int, negatives: int) -> list:
    if not 0 <= negatives <= n:
        raise UsageError(f"Hermitian signature needs 0 <= negatives <= {n}")
    return [ONE] * (n - negatives) + [-ONE] * negatives


def build_heisenberg(n: int, negatives: int = 0) -> MetricLieAlgebra:
    """Heisenberg algebra of C^n with the real part of a Hermitian form; Z is null."""
    if n < 1:
        raise UsageError("Heisenberg family needs n >= 1")
    eps = _hermitian_signs(n, negatives)
    labels = [lab for k in range(n) for lab in (f"X{k + 1}", f"Y{k + 1}")] + ["Z"]
    z = 2 * n
    entries = [(2 * k, 2 * k + 1, z, eps[k]) for k in range(n)]
    g = from_structure_constants(2 * n + 1, labels, entries)
    gram = Matrix.diagonal([e for e in eps for _ in range(2)] + [ZERO])
    return MetricLieAlgebra(g, SymBilinearForm(gram), f"heisenberg({n},{negatives})")


def build_standard_oscillator(n: int, negatives: int = 0) -> MetricLieAlgebra:
    """J acting as multiplication by i on a Heisenberg algebra, with <J,Z> = 1."""
    if n < 0:
        raise UsageError("oscillator family needs n >= 0")
    eps = _hermitian_signs(n, negatives)
    labels = ["J"] + [lab for k in range(n) for lab in (f"X{k + 1}", f"Y{k + 1}")] + ["Z"]
    dim = 2 * n + 2
    z = dim - 1
    entries = []
    for k in range(n):
        x, y = 1 + 2 * k, 2 + 2 * k
        entries += [(0, x, y, 1), (0, y, x, -1), (x, y, z, eps[k])]
    g = from_structure_constants(dim, labels, entries)
    gram = {(0, z): 1}
    for k in range(n):
        gram[(1 + 2 * k, 1 + 2 * k)] = eps[k]
        gram[(2 + 2 * k, 2 + 2 * k)] = eps[k]
    return MetricLieAlgebra(g, SymBilinearForm(_gram(dim, gram)), f"osc({n},{negatives})")


def build_oscillator(psi: Matrix, s: int = 0) -> MetricLieAlgebra:
    """osc(psi): [D,X] = psi X, [X,Y] = <psi X, Y> Z, <D,Z> = 1."""
    if not isinstance(psi, Matrix):
        psi = Matrix(psi)
    n = psi.nrows
    if not psi.is_square() or not 0 <= s <= n - s:
        raise UsageError("psi must be square and the form signature must satisfy s <= n - s")
    metric = Matrix.diagonal([ONE] * (n - s) + [-ONE] * s)
    if not (psi.T @ metric + metric @ psi).is_zero():
        raise UsageError("psi is not skew for diag(I, -I)")
    labels = ["D"] + [f"X{k + 1}" for k in range(n)] + ["Z"]
    dim = n + 2
    z = dim - 1
    entries = []
    for a in range(n):
        for b in range(n):
            if psi.rows[b][a]:
                entries.append((0, 1 + a, 1 + b, psi.rows[b][a]))
    pg = psi.T @ metric
    for a in range(n):
        for b in range(a + 1, n):
            if pg.rows[a][b]:
                entries.append((1 + a, 1 + b, z, pg.rows[a][b]))
    g = from_structure_constants(dim, labels, entries)
    gram = {(0, z): 1}
    for k in range(n):
        gram[(1 + k, 1 + k)] = metric.rows[k][k]
    return MetricLieAlgebra(g, SymBilinearForm(_gram(dim, gram)), "osc(psi)")


def build_osc_alpha(
    alpha1: Sequence, alpha2: Sequence, variant: str = "plain"
) -> MetricLieAlgebra:
    """Index-two oscillator family with two derivations D1, D2 and centre Z1, Z2."""
    a1 = [rat(a) for a in alpha1]
    a2 = [rat(a) for a in alpha2]
    if len(a1) != len(a2):
        raise UsageError("alpha tuples must have equal length")
    if variant not in ("plain", "one"):
        raise UsageError("variant must be 'plain' or 'one'")
    n = len(a1)
    labels = ["D1", "D2"] + [f"X{k + 1}" for k in range(n)] + [f"Y{k + 1}" for k in range(n)]
    if variant == "one":
        labels.append("W")
    labels += ["Z1", "Z2"]
    dim = len(labels)
    d1, d2 = 0, 1
    x = lambda k: 2 + k  # noqa: E731
    y = lambda k: 2 + n + k  # noqa: E731
    z1, z2 = dim - 2, dim - 1
    entries = []
    for k in range(n):
        entries += [(x(k), y(k), z1, a1[k]), (x(k), y(k), z2, a2[k])]
        for d, alpha in ((d1, a1), (d2, a2)):
            entries += [(d, x(k), y(k), alpha[k]), (d, y(k), x(k), -alpha[k])]
    gram = {(d1, z1): 1, (d2, z2): 1}
    for k in range(n):
        gram[(x(k), x(k))] = 1
        gram[(y(k), y(k))] = 1
    if variant == "one":
        w = dim - 3
        entries += [(d1, d2, w, 1), (d1, w, z2, -1), (d2, w, z1, 1)]
        gram[(w, w)] = 1
    entries = [e for e in entries if e[3]]
    g = from_structure_constants(dim, labels, entries)
    m = MetricLieAlgebra(g, SymBilinearForm(_gram(dim, gram)), f"osc-alpha-{variant}({n})")
    if not is_invariant(m):
        raise UsageError("alpha parameters produced a non-invariant form")
    return m


def build_cotangent(g: LieAlgebra) -> MetricLieAlgebra:
    """g ⋉ g* under the coadjoint action, with the dual pairing."""
    coadjoint = [-(g.ad_basis(i).T) for i in range(g.dim)]
    dual = abelian_algebra(g.dim, [f"{lab}*" for lab in g.labels])
    alg = semidirect_product(g, dual, coadjoint)
    n = g.dim
    gram = _gram(2 * n, {(i, n + i): 1 for i in range(n)})
    return MetricLieAlgebra(alg, SymBilinearForm(gram), "cotangent")


def build_nil_not_invariant() -> MetricLieAlgebra:
    """so3 acting on the left copy of so3 x so3 (abelian); nil-invariant, not invariant."""
    k = so3()
    labels = ["T1", "T2", "T3", "L1", "L2", "L3", "R1", "R2", "R3"]
    entries = [(i, j, k_, c) for i, j, k_, c in k.entries()]
    for i in range(3):
        for j in range(3):
            for t, c in k._pair(i, j).items():
                entries.append((i, 3 + j, 3 + t, c))
    g = from_structure_constants(9, labels, entries)
    kappa = killing_form(k).gram
    gram = {}
    for i in range(3):
        for j in range(3):
            if kappa.rows[i][j]:
                gram[(i, 3 + j)] = kappa.rows[i][j]
                gram[(i, 6 + j)] = -kappa.rows[i][j]
    return MetricLieAlgebra(g, SymBilinearForm(_gram(9, gram)), "nil-not-invariant")


def build_euclidean(n: int) -> LieAlgebra:
    if n < 2:
        raise UsageError("Euclidean algebra needs n >= 2")
    mats, labels = so_n_natural(n)
    return semidirect_product(
        linear_lie_algebra(mats, labels), abelian_algebra(n, [f"v{i + 1}" for i in range(n)]), mats
    )


def _so3_on_r3() -> LieAlgebra:
    k = so3()
    return semidirect_product(
        k, abelian_algebra(3, ["v1", "v2", "v3"]), [k.ad_basis(i) for i in range(3)],
        labels=["K1", "K2", "K3", "v1", "v2", "v3"],
    )


def build_graph_radical() -> MetricLieAlgebra:
    """(so3 ⋉ V1) x V0 with <K_i, v_j> = δ_ij and <K_i, w_j> = -δ_ij."""
    base = _so3_on_r3()
    g = direct_sum([base, abelian_algebra(3, ["w1", "w2", "w3"])])
    gram = {}
    for i in range(3):
        gram[(i, 3 + i)] = 1
        gram[(i, 6 + i)] = -1
    return MetricLieAlgebra(g, SymBilinearForm(_gram(9, gram)), "graph-radical")


def build_torus_pairing() -> MetricLieAlgebra:
    """(so3 ⋉ R3) x so6, pairing so3 with R3 and with a maximal torus of so6."""
    base = _so3_on_r3()
    s6 = so_n(6)
    g = direct_sum([base, s6])
    torus = [s6.labels.index(lab) for lab in ("L12", "L34", "L56")]
    gram = {}
    for i in range(3):
        gram[(i, 3 + i)] = 1
        gram[(i, 6 + torus[i])] = -1
    for t in range(15):
        if t not in torus:
            gram[(6 + t, 6 + t)] = 1
    return MetricLieAlgebra(g, SymBilinearForm(_gram(21, gram)), "torus-pairing")


def direct_product(ms: Sequence[MetricLieAlgebra], name: str = "") -> MetricLieAlgebra:
    ms = [m for m in ms if m.dim]
    if not ms:
        return MetricLieAlgebra(abelian_algebra(0), SymBilinearForm.zero(0), name)
    alg = direct_sum([m.algebra for m in ms])
    gram = _block_diag([m.form.gram for m in ms])
    return MetricLieAlgebra(
        alg, SymBilinearForm(gram), name or " x ".join(m.name or "?" for m in ms)
    )


# ------------------------------------------------------------------- catalog


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    parameters: dict
    summary: str
    builder: Callable[..., MetricLieAlgebra] = field(compare=False)


def _so3_form(kind: str) -> MetricLieAlgebra:
    if kind == "definite":
        return with_killing(so3(), -1, "so3(-kappa)")
    if kind == "lorentzian":
        return MetricLieAlgebra(so3(), SymBilinearForm(Matrix.diagonal([1, 1, -1])), "so3(lorentz)")
    raise UsageError("so3 form must be 'definite' or 'lorentzian'")


def _case(label: str) -> MetricLieAlgebra:
    return dict(classification_cases())[label]


def classification_cases() -> list[tuple[str, MetricLieAlgebra]]:
    """One instance per case label of the low-index classification."""
    neg_so3 = _so3_form("definite")
    sl2k = with_killing(sl2(), 1, "sl2(kappa)")
    osc = build_standard_oscillator(1)
    return [
        ("C-I", direct_product([build_abelian(2, 1), neg_so3])),
        ("C-II", direct_product([osc, neg_so3])),
        ("C-III", sl2k),
        ("D-I-a", direct_product([build_abelian(4, 2), neg_so3])),
        ("D-I-b", direct_product([osc, _so3_form("lorentzian")])),
        ("D-I-c", build_osc_alpha([1, 0], [0, 1])),
        ("D-II", direct_product([sl2k, sl2k])),
        ("D-III-a", direct_product([sl2k, build_abelian(2, 1)])),
        ("D-III-b", direct_product([sl2k, osc])),
    ]


def _parse_psi(text: str) -> Matrix:
    try:
        return Matrix([[rat(a) for a in row.split(",")] for row in text.split(";")])
    except (ValueError, IndexError):
        raise UsageError(f"cannot parse matrix {text!r}; use rows 'a,b;c,d'") from None


def _parse_tuple(text: str) -> list:
    text = text.strip()
    return [rat(a) for a in text.split(",")] if text else []


_BASES = {
    "sl2": sl2,
    "so3": so3,
    "line": lambda: abelian_algebra(1),
    "heisenberg3": lambda: build_heisenberg(1).algebra,
}


def _cotangent_by_name(base: str) -> MetricLieAlgebra:
    if base not in _BASES:
        raise UsageError(f"unknown base algebra {base!r}; choose from {sorted(_BASES)}")
    m = build_cotangent(_BASES[base]())
    return MetricLieAlgebra(m.algebra, m.form, f"cotangent({base})")


def _euclidean_identity(n: int) -> MetricLieAlgebra:
    g = build_euclidean(n)
    return MetricLieAlgebra(g, SymBilinearForm(Matrix.identity(g.dim)), f"e{n}(identity)")


CATALOG: dict[str, CatalogEntry] = {
    e.name: e
    for e in [
        CatalogEntry("abelian", {"n": int, "s": int}, "abelian with diag(I, -I)",
                     lambda n=2, s=0: build_abelian(n, s)),
        CatalogEntry("heisenberg", {"n": int, "neg": int}, "Heisenberg, real part of a Hermitian form",
                     lambda n=1, neg=0: build_heisenberg(n, neg)),
        CatalogEntry("osc", {"n": int, "neg": int}, "standard oscillator",
                     lambda n=1, neg=0: build_standard_oscillator(n, neg)),
        CatalogEntry("oscillator", {"psi": _parse_psi, "s": int}, "oscillator of a skew operator psi",
                     lambda psi=None, s=0: build_oscillator(psi if psi is not None else rotation_so2(), s)),
        CatalogEntry("osc-alpha", {"alpha1": _parse_tuple, "alpha2": _parse_tuple, "variant": str},
                     "index-two oscillator family",
                     lambda alpha1=(1,), alpha2=(0,), variant="plain": build_osc_alpha(alpha1, alpha2, variant)),
        CatalogEntry("cotangent", {"base": str}, "cotangent algebra with dual pairing",
                     lambda base="sl2": _cotangent_by_name(base)),
        CatalogEntry("nil-not-invariant", {}, "nil-invariant, non-invariant so3 example",
                     build_nil_not_invariant),
        CatalogEntry("graph-radical", {}, "(so3 ⋉ R3) x R3 with graph radical", build_graph_radical),
        CatalogEntry("torus-pairing", {}, "(so3 ⋉ R3) x so6 with torus pairing", build_torus_pairing),
        CatalogEntry("euclidean", {"n": int}, "so(n) ⋉ R^n with the identity Gram",
                     lambda n=3: _euclidean_identity(n)),
        CatalogEntry("sl2", {}, "sl2 with its Killing form", lambda: with_killing(sl2(), 1, "sl2(kappa)")),
        CatalogEntry("so3", {"form": str}, "so3, definite or Lorentzian",
                     lambda form="definite": _so3_form(form)),
        CatalogEntry("case", {"label": str}, "classification table instance",
                     lambda label="C-I": _case(label)),
    ]
}


def solvable_members() -> list[MetricLieAlgebra]:
    return [
        build_abelian(3, 1),
        build_heisenberg(1),
        build_heisenberg(2, 1),
        build_standard_oscillator(1),
        build_standard_oscillator(2, 1),
        build_oscillator(rotation_so2()),
        build_oscillator(nilpotent_so21(), 1),
        build_osc_alpha([1], [0]),
        build_osc_alpha([1, 0], [0, 1]),
        build_osc_alpha([], [], "one"),
        build_osc_alpha([1], [2], "one"),
    ]


def catalog_instances() -> list[MetricLieAlgebra]:
    cases = [m for _, m in classification_cases()]
    return solvable_members() + cases + [
        build_nil_not_invariant(),
        build_graph_radical(),
        build_torus_pairing(),
        _cotangent_by_name("sl2"),
        _cotangent_by_name("so3"),
        with_killing(sl2(), 1, "sl2(kappa)"),
        _so3_form("definite"),
    ]
