"""Lie algebras given by structure constants and their structural decompositions."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Sequence

import sympy

from metric_lie.errors import InvariantViolation, StructureError, UsageError
from metric_lie.linalg import (
    ONE,
    ZERO,
    Matrix,
    Rational,
    RowReducer,
    Subspace,
    SymBilinearForm,
    charpoly,
    image,
    kernel,
    kernel_of_rows,
    poly_eval_matrix,
    rank,
    rat,
    solve_linear,
)

__all__ = [
    "LieAlgebra",
    "LeviDecomposition",
    "FittingDecomposition",
    "from_structure_constants",
    "abelian_algebra",
    "linear_lie_algebra",
    "direct_sum",
    "semidirect_product",
    "killing_form",
    "bracket_space",
    "is_subalgebra",
    "is_ideal",
    "is_abelian",
    "is_solvable",
    "is_nilpotent_algebra",
    "derived_subalgebra",
    "derived_series",
    "lower_central_series",
    "center",
    "centralizer",
    "normalizer",
    "transporter",
    "largest_ideal_within",
    "ideal_generated",
    "subalgebra_generated",
    "subalgebra",
    "quotient_algebra",
    "solvable_radical",
    "nilradical",
    "levi_subalgebra",
    "simple_ideals",
    "split_compact_noncompact",
    "levi_decomposition",
    "fitting_decomposition",
]


def _unit(i: int, n: int) -> tuple:
    return tuple(ONE if k == i else ZERO for k in range(n))


class LieAlgebra:
    """A Lie algebra over Q presented by structure constants.

    ``table[(i, j)]`` for ``i < j`` is a sparse dict ``{k: c}`` with
    ``[e_i, e_j] = sum_k c e_k``. Instances are validated on construction.
    """

    __slots__ = ("dim", "labels", "_table", "_ad")

    def __init__(self, dim: int, labels: Sequence[str], table: dict, *, validate: bool = True):
        labels = tuple(labels)
        if len(labels) != dim:
            raise StructureError(f"{len(labels)} labels given for dimension {dim}")
        clean = {}
        for (i, j), row in table.items():
            if not (0 <= i < j < dim):
                raise StructureError(f"bracket index pair ({i},{j}) must satisfy 0 <= i < j < {dim}")
            row = {k: rat(c) for k, c in row.items() if rat(c)}
            if any(not 0 <= k < dim for k in row):
                raise StructureError(f"bracket [{i},{j}] has an out-of-range component")
            if row:
                clean[(i, j)] = row
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "_table", clean)
        ads = []
        for i in range(dim):
            cols = [[ZERO] * dim for _ in range(dim)]
            for j in range(dim):
                for k, c in self._pair(i, j).items():
                    cols[k][j] = c
            ads.append(Matrix._raw(tuple(tuple(r) for r in cols), dim))
        object.__setattr__(self, "_ad", tuple(ads))
        if validate:
            self._check_jacobi()

    def __setattr__(self, key, value):
        raise AttributeError("LieAlgebra is immutable")

    def _pair(self, i: int, j: int) -> dict:
        if i < j:
            return self._table.get((i, j), {})
        if i > j:
            return {k: -c for k, c in self._table.get((j, i), {}).items()}
        return {}

    def _check_jacobi(self) -> None:
        n = self.dim
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(j + 1, n):
                    ei, ej, ek = _unit(i, n), _unit(j, n), _unit(k, n)
                    total = [
                        a + b + c
                        for a, b, c in zip(
                            self.bracket(ei, self.bracket(ej, ek)),
                            self.bracket(ej, self.bracket(ek, ei)),
                            self.bracket(ek, self.bracket(ei, ej)),
                        )
                    ]
                    if any(total):
                        raise StructureError(
                            f"Jacobi identity fails on basis triple ({i},{j},{k}) "
                            f"= ({self.labels[i]},{self.labels[j]},{self.labels[k]})"
                        )

    @property
    def table(self) -> dict:
        return {key: dict(row) for key, row in self._table.items()}

    def structure_constants(self) -> tuple:
        """Dense tensor c[i][j][k]."""
        n = self.dim
        return tuple(
            tuple(tuple(self._pair(i, j).get(k, ZERO) for k in range(n)) for j in range(n))
            for i in range(n)
        )

    def entries(self) -> list[tuple[int, int, int, Rational]]:
        """Sparse (i, j, k, c) list with i < j."""
        return [
            (i, j, k, c)
            for (i, j), row in sorted(self._table.items())
            for k, c in sorted(row.items())
        ]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LieAlgebra)
            and self.dim == other.dim
            and self.labels == other.labels
            and self._table == other._table
        )

    def __hash__(self) -> int:
        return hash((self.dim, self.labels, tuple(self.entries())))

    def __repr__(self) -> str:
        return f"LieAlgebra(dim={self.dim}, labels={list(self.labels)})"

    def unit(self, i: int) -> tuple:
        return _unit(i, self.dim)

    def basis_vectors(self) -> list[tuple]:
        return [self.unit(i) for i in range(self.dim)]

    def ad_basis(self, i: int) -> Matrix:
        return self._ad[i]

    def ad(self, x: Sequence) -> Matrix:
        n = self.dim
        acc = [[ZERO] * n for _ in range(n)]
        for i, a in enumerate(x):
            if a:
                for p, row in enumerate(self._ad[i].rows):
                    accp = acc[p]
                    for q, b in enumerate(row):
                        if b:
                            accp[q] += a * b
        return Matrix._raw(tuple(tuple(r) for r in acc), n)

    def bracket(self, x: Sequence, y: Sequence) -> tuple:
        n = self.dim
        out = [ZERO] * n
        xs = [(i, a) for i, a in enumerate(x) if a]
        ys = [(j, b) for j, b in enumerate(y) if b]
        for i, a in xs:
            for j, b in ys:
                if i != j:
                    for k, c in self._pair(i, j).items():
                        out[k] += a * b * c
        return tuple(out)

    def is_abelian(self) -> bool:
        return not self._table


def from_structure_constants(
    dim: int, labels: Sequence[str] | None, entries: Iterable[tuple]
) -> LieAlgebra:
    """Build and validate an algebra from (i, j, k, coeff) entries.

    Both orders of a pair may be given; they must agree up to sign.
    """
    if dim < 0:
        raise StructureError("dimension must be non-negative")
    labels = tuple(labels) if labels is not None else tuple(f"e{i + 1}" for i in range(dim))
    ordered: dict[tuple[int, int], dict[int, Rational]] = {}
    seen = set()
    for entry in entries:
        i, j, k, c = entry
        i, j, k = int(i), int(j), int(k)
        c = rat(c)
        if not (0 <= i < dim and 0 <= j < dim and 0 <= k < dim):
            raise StructureError(f"entry ({i},{j},{k}) out of range for dimension {dim}")
        if (i, j, k) in seen:
            raise StructureError(f"duplicate entry ({i},{j},{k})")
        seen.add((i, j, k))
        if i == j:
            if c:
                raise StructureError(f"antisymmetry violated: [e{i},e{i}] must vanish")
            continue
        ordered.setdefault((i, j), {})[k] = c
    table: dict[tuple[int, int], dict[int, Rational]] = {}
    for (i, j), row in ordered.items():
        if i > j and (j, i) in ordered:
            continue
        if i < j:
            mine = {k: c for k, c in row.items() if c}
            other = ordered.get((j, i))
            if other is not None:
                neg = {k: -c for k, c in other.items() if c}
                if neg != mine:
                    raise StructureError(
                        f"antisymmetry violated: entries for ({i},{j}) and ({j},{i}) disagree"
                    )
            table[(i, j)] = mine
        else:
            table[(j, i)] = {k: -c for k, c in row.items() if c}
    return LieAlgebra(dim, labels, table)


def abelian_algebra(n: int, labels: Sequence[str] | None = None) -> LieAlgebra:
    return LieAlgebra(n, labels or tuple(f"e{i + 1}" for i in range(n)), {})


def linear_lie_algebra(matrices: Sequence[Matrix], labels: Sequence[str]) -> LieAlgebra:
    """Structure constants of the span of a bracket-closed family of matrices."""
    n = len(matrices)
    flat = [m.flatten() for m in matrices]
    coeff_matrix = Matrix.from_columns(flat, len(flat[0]) if flat else 0)
    table = {}
    for i in range(n):
        for j in range(i + 1, n):
            c = matrices[i].commutator(matrices[j])
            if c.is_zero():
                continue
            x, _ = solve_linear(coeff_matrix, c.flatten())
            if x is None:
                raise StructureError(f"commutator of generators {i},{j} leaves their span")
            table[(i, j)] = {k: a for k, a in enumerate(x) if a}
    return LieAlgebra(n, labels, table)


def direct_sum(algebras: Sequence[LieAlgebra]) -> LieAlgebra:
    labels: list[str] = []
    table = {}
    offset = 0
    for g in algebras:
        for (i, j), row in g._table.items():
            table[(i + offset, j + offset)] = {k + offset: c for k, c in row.items()}
        labels.extend(g.labels)
        offset += g.dim
    return LieAlgebra(offset, labels, table, validate=False)


def semidirect_product(
    f: LieAlgebra, v: LieAlgebra, action: Sequence[Matrix], labels: Sequence[str] | None = None
) -> LieAlgebra:
    """f ⋉ v where ``action[i]`` is the derivation of v by the i-th basis element of f."""
    if len(action) != f.dim:
        raise StructureError("need one action matrix per basis element of the acting algebra")
    for i, a in enumerate(action):
        if a.shape != (v.dim, v.dim):
            raise StructureError(f"action matrix {i} has shape {a.shape}, expected {(v.dim, v.dim)}")
        for p in range(v.dim):
            for q in range(p + 1, v.dim):
                ep, eq = v.unit(p), v.unit(q)
                lhs = a.apply(v.bracket(ep, eq))
                rhs = [
                    s + t
                    for s, t in zip(v.bracket(a.apply(ep), eq), v.bracket(ep, a.apply(eq)))
                ]
                if tuple(lhs) != tuple(rhs):
                    raise StructureError(f"action of basis element {i} is not a derivation")
    for i in range(f.dim):
        for j in range(i + 1, f.dim):
            expected = Matrix.zeros(v.dim, v.dim)
            for k, c in f._pair(i, j).items():
                expected = expected + action[k].scale(c)
            if action[i].commutator(action[j]) != expected:
                raise StructureError(f"action is not a representation on the pair ({i},{j})")
    m = f.dim
    table = {}
    for (i, j), row in f._table.items():
        table[(i, j)] = dict(row)
    for i in range(f.dim):
        for b in range(v.dim):
            col = action[i].col(b)
            row = {m + k: c for k, c in enumerate(col) if c}
            if row:
                table[(i, m + b)] = row
    for (a, b), row in v._table.items():
        table[(m + a, m + b)] = {m + k: c for k, c in row.items()}
    return LieAlgebra(
        m + v.dim, labels or tuple(f.labels) + tuple(v.labels), table, validate=False
    )


def killing_form(g: LieAlgebra) -> SymBilinearForm:
    ads = [g.ad_basis(i) for i in range(g.dim)]
    n = g.dim
    gram = [[ZERO] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            v = (ads[i] @ ads[j]).trace()
            gram[i][j] = gram[j][i] = v
    return SymBilinearForm(Matrix._raw(tuple(tuple(r) for r in gram), n))


# ------------------------------------------------------------ subspace algebra


def bracket_space(g: LieAlgebra, a: Subspace, b: Subspace) -> Subspace:
    return Subspace.span(
        [g.bracket(x, y) for x in a.vectors for y in b.vectors], g.dim
    )


def is_subalgebra(g: LieAlgebra, w: Subspace) -> bool:
    return w.contains_subspace(bracket_space(g, w, w))


def is_ideal(g: LieAlgebra, w: Subspace) -> bool:
    return w.contains_subspace(bracket_space(g, Subspace.full(g.dim), w))


def is_abelian(g: LieAlgebra, w: Subspace | None = None) -> bool:
    w = w if w is not None else Subspace.full(g.dim)
    return bracket_space(g, w, w).is_zero()


def derived_subalgebra(g: LieAlgebra, w: Subspace | None = None) -> Subspace:
    w = w if w is not None else Subspace.full(g.dim)
    return bracket_space(g, w, w)


def derived_series(g: LieAlgebra, w: Subspace | None = None) -> list[Subspace]:
    w = w if w is not None else Subspace.full(g.dim)
    series = [w]
    while True:
        nxt = bracket_space(g, series[-1], series[-1])
        if nxt == series[-1]:
            return series
        series.append(nxt)


def lower_central_series(g: LieAlgebra, w: Subspace | None = None) -> list[Subspace]:
    w = w if w is not None else Subspace.full(g.dim)
    series = [w]
    while True:
        nxt = bracket_space(g, w, series[-1])
        if nxt == series[-1]:
            return series
        series.append(nxt)


def is_solvable(g: LieAlgebra, w: Subspace | None = None) -> bool:
    return derived_series(g, w)[-1].is_zero()


def is_nilpotent_algebra(g: LieAlgebra, w: Subspace | None = None) -> bool:
    return lower_central_series(g, w)[-1].is_zero()


def centralizer(g: LieAlgebra, w: Subspace) -> Subspace:
    rows = [r for v in w.vectors for r in g.ad(v).rows]
    return Subspace.span(kernel_of_rows(rows, g.dim), g.dim)


def center(g: LieAlgebra) -> Subspace:
    return centralizer(g, Subspace.full(g.dim))


def transporter(g: LieAlgebra, q: Subspace, v: Subspace, u: Subspace) -> Subspace:
    """{x in q : [x, v] ⊆ u}."""
    ann = u.annihilator()
    rows = []
    for y in v.vectors:
        images = [g.bracket(x, y) for x in q.vectors]
        for f in ann:
            rows.append([sum((a * b for a, b in zip(f, im) if b), ZERO) for im in images])
    coeffs = kernel_of_rows(rows, q.dim)
    return Subspace.span([q.combine(c) for c in coeffs], g.dim)


def normalizer(g: LieAlgebra, w: Subspace) -> Subspace:
    return transporter(g, Subspace.full(g.dim), w, w)


def _ad_preimage(g: LieAlgebra, w: Subspace) -> Subspace:
    """{x : [e_i, x] ∈ w for every basis element e_i}."""
    ann = w.annihilator()
    rows = []
    for i in range(g.dim):
        a = g.ad_basis(i)
        for f in ann:
            rows.append(
                [sum((f[p] * a.rows[p][q] for p in range(g.dim) if f[p]), ZERO) for q in range(g.dim)]
            )
    return Subspace.span(kernel_of_rows(rows, g.dim), g.dim)


def largest_ideal_within(g: LieAlgebra, w: Subspace) -> Subspace:
    current = w
    while True:
        nxt = current.intersect(_ad_preimage(g, current))
        if nxt == current:
            return current
        current = nxt


def ideal_generated(g: LieAlgebra, vectors: Iterable[Sequence]) -> Subspace:
    n = g.dim
    red = RowReducer(n)
    queue = [tuple(v) for v in vectors if red.add(v)]
    while queue:
        v = queue.pop()
        for i in range(n):
            w = g.ad_basis(i).apply(v)
            if red.add(w):
                queue.append(w)
    return Subspace(n, red.rref_rows())


def subalgebra_generated(g: LieAlgebra, vectors: Iterable[Sequence]) -> Subspace:
    n = g.dim
    red = RowReducer(n)
    found: list[tuple] = []
    queue = []
    for v in vectors:
        v = tuple(rat(a) for a in v)
        if red.add(v):
            queue.append(v)
    while queue:
        v = queue.pop()
        for u in list(found):
            w = g.bracket(u, v)
            if red.add(w):
                queue.append(w)
        found.append(v)
    return Subspace(n, red.rref_rows())


def subalgebra(g: LieAlgebra, w: Subspace, labels: Sequence[str] | None = None) -> LieAlgebra:
    """The subalgebra w as an algebra in its canonical basis."""
    if not is_subalgebra(g, w):
        raise UsageError("subspace is not closed under the bracket")
    if labels is None:
        labels = []
        for v in w.vectors:
            nz = [k for k, a in enumerate(v) if a]
            labels.append(g.labels[nz[0]] if len(nz) == 1 and v[nz[0]] == 1 else f"w{len(labels) + 1}")
    piv = w.pivots
    table = {}
    for a in range(w.dim):
        for b in range(a + 1, w.dim):
            br = g.bracket(w.vectors[a], w.vectors[b])
            row = {t: br[p] for t, p in enumerate(piv) if br[p]}
            if row:
                table[(a, b)] = row
    return LieAlgebra(w.dim, labels, table, validate=False)


def quotient_algebra(g: LieAlgebra, ideal: Subspace) -> tuple[LieAlgebra, Matrix]:
    """g / ideal on the canonical complement, with the projection matrix."""
    if not is_ideal(g, ideal):
        raise UsageError("quotient requires an ideal")
    comp = ideal.complement_indices()
    n = g.dim
    red = ideal._reducer()
    proj_cols = []
    for j in range(n):
        r = red.residue(g.unit(j))
        proj_cols.append(tuple(r.get(c, ZERO) for c in comp))
    proj = Matrix.from_columns(proj_cols, len(comp))
    table = {}
    for a in range(len(comp)):
        for b in range(a + 1, len(comp)):
            br = proj.apply(g.bracket(g.unit(comp[a]), g.unit(comp[b])))
            row = {k: c for k, c in enumerate(br) if c}
            if row:
                table[(a, b)] = row
    q = LieAlgebra(len(comp), [g.labels[c] for c in comp], table, validate=False)
    return q, proj


# ---------------------------------------------------------- radicals and Levi


def solvable_radical(g: LieAlgebra) -> Subspace:
    kappa = killing_form(g)
    r = kappa.perp(derived_subalgebra(g))
    if not (is_ideal(g, r) and is_solvable(g, r)):
        raise InvariantViolation("Killing-orthogonal of the derived algebra is not a solvable ideal")
    return r


def _trace_product(a: Matrix, b: Matrix) -> Rational:
    n = a.nrows
    return sum(
        (a.rows[p][q] * b.rows[q][p] for p in range(n) for q in range(n) if a.rows[p][q]),
        ZERO,
    )


def nilradical(g: LieAlgebra) -> Subspace:
    """Largest nilpotent ideal, via Dickson's trace criterion inside the radical."""
    r = solvable_radical(g)
    if r.is_zero():
        return r
    rg = subalgebra(g, r)
    m = rg.dim
    gens = [rg.ad_basis(i) for i in range(m)]
    # associative algebra generated by ad_r(r) and the identity
    red = RowReducer(m * m)
    assoc = []
    queue = [Matrix.identity(m)] + gens
    while queue:
        a = queue.pop()
        if red.add(a.flatten()):
            assoc.append(a)
            queue.extend(a @ h for h in gens)
    rows = [[_trace_product(gens[i], b) for i in range(m)] for b in assoc]
    coeffs = kernel_of_rows(rows, m)
    nil = Subspace.span([r.combine(c) for c in coeffs], g.dim)
    if not (is_ideal(g, nil) and is_nilpotent_algebra(g, nil)):
        raise InvariantViolation("computed nilradical is not a nilpotent ideal")
    return nil


def levi_subalgebra(g: LieAlgebra, radical: Subspace | None = None) -> Subspace:
    """A Levi subalgebra, lifted linearly along the derived series of the radical."""
    n = g.dim
    r = radical if radical is not None else solvable_radical(g)
    if r.is_zero():
        return Subspace.full(n)
    if r.is_full():
        return Subspace.zero(n)
    comp = r.complement_indices()
    m = len(comp)
    red_r = r._reducer()

    def quotient_coords(v):
        res = red_r.residue(v)
        return [res.get(c, ZERO) for c in comp]

    struct = {}
    for a in range(m):
        for b in range(a + 1, m):
            struct[(a, b)] = quotient_coords(g.bracket(g.unit(comp[a]), g.unit(comp[b])))
    lifts = [list(g.unit(c)) for c in comp]
    series = derived_series(g, r)
    for k in range(len(series) - 1):
        rk, rk1 = series[k], series[k + 1]
        red_next = rk1._reducer()
        keep = rk1.complement_indices()
        t = rk.dim
        # unknown u[a][s]: correction a_a = sum_s u[a][s] * rk_s
        nvars = m * t
        rows, rhs = [], []
        for (a, b), c in struct.items():
            # [x_a + u_a, x_b + u_b] = sum_d c_d (x_d + u_d)  modulo the next term
            base = list(g.bracket(lifts[a], lifts[b]))
            for d, cd in enumerate(c):
                if cd:
                    base = [p - cd * q for p, q in zip(base, lifts[d])]
            images: dict[int, list] = {}

            def add(var, vec, scale=ONE):
                acc = images.setdefault(var, [ZERO] * n)
                for p, val in enumerate(vec):
                    if val:
                        acc[p] += scale * val

            for s_idx, w in enumerate(rk.vectors):
                add(b * t + s_idx, g.bracket(lifts[a], w))
                add(a * t + s_idx, g.bracket(w, lifts[b]))
                for d, cd in enumerate(c):
                    if cd:
                        add(d * t + s_idx, w, -cd)
            residues = {var: red_next.residue(vec) for var, vec in images.items()}
            base_res = red_next.residue(base)
            for col in keep:
                row = [ZERO] * nvars
                for var, res in residues.items():
                    row[var] = res.get(col, ZERO)
                rows.append(row)
                rhs.append(-base_res.get(col, ZERO))
        if not rows:
            continue
        sol, _ = solve_linear(Matrix(rows, nvars), rhs)
        if sol is None:
            raise InvariantViolation("Levi lifting system is inconsistent")
        for a in range(m):
            corr = rk.combine(sol[a * t:(a + 1) * t])
            lifts[a] = [x + y for x, y in zip(lifts[a], corr)]
    levi = Subspace.span(lifts, n)
    if levi.dim != m or not is_subalgebra(g, levi):
        raise InvariantViolation("lifted complement is not a Levi subalgebra")
    return levi


def _factor_rational(coeffs: list) -> list[list]:
    """Distinct monic irreducible factors over Q of a polynomial (low degree first)."""
    x = sympy.Symbol("x")
    expr = sum(
        sympy.Rational(int(c.numerator), int(c.denominator)) * x**i for i, c in enumerate(coeffs)
    )
    _, factors = sympy.factor_list(sympy.Poly(expr, x, domain="QQ"))
    out = []
    for f, _mult in factors:
        cs = [rat(f"{sympy.Rational(c).p}/{sympy.Rational(c).q}") for c in reversed(f.all_coeffs())]
        out.append([c / cs[-1] for c in cs])
    return out


def simple_ideals(g: LieAlgebra, s: Subspace, seed: int = 0) -> list[Subspace]:
    """Decompose a semisimple subalgebra into simple ideals via its centroid."""
    if s.is_zero():
        return []
    alg = subalgebra(g, s)
    m = alg.dim
    ads = [alg.ad_basis(i) for i in range(m)]
    # centroid: T commuting with every ad(e_i); unknown T[p][q] at index p*m+q
    rows = []
    for a in ads:
        for p in range(m):
            for q in range(m):
                row = [ZERO] * (m * m)
                for k in range(m):
                    if a.rows[k][q]:
                        row[p * m + k] += a.rows[k][q]
                    if a.rows[p][k]:
                        row[k * m + q] -= a.rows[p][k]
                if any(row):
                    rows.append(row)
    centroid = [
        Matrix._raw(tuple(tuple(v[p * m:(p + 1) * m]) for p in range(m)), m)
        for v in kernel_of_rows(rows, m * m)
    ]
    pieces = [Subspace.full(m)]
    if len(centroid) > 1:
        rng = random.Random(seed)
        probes = list(centroid) + [
            sum((c.scale(rng.randint(-5, 5)) for c in centroid), Matrix.zeros(m, m))
            for _ in range(4)
        ]
        for c in probes:
            if c.is_zero():
                continue
            factors = _factor_rational(charpoly(c))
            if len(factors) < 2:
                continue
            parts = [kernel(poly_eval_matrix(f, c)) for f in factors]
            new = []
            for piece in pieces:
                for part in parts:
                    cut = piece.intersect(part)
                    if not cut.is_zero():
                        new.append(cut)
            pieces = new
            if len(pieces) == len(centroid):
                break
    out = [Subspace.span([s.combine(v) for v in p.vectors], g.dim) for p in pieces]
    for p in out:
        if not is_ideal_of(g, s, p):
            raise InvariantViolation("centroid splitting produced a non-ideal")
    return sorted(out, key=lambda p: p.pivots)


def is_ideal_of(g: LieAlgebra, s: Subspace, p: Subspace) -> bool:
    return p.contains_subspace(bracket_space(g, s, p))


def _is_negative_definite_killing(g: LieAlgebra, p: Subspace) -> bool:
    sig = killing_form(subalgebra(g, p)).signature()
    return sig.negatives == p.dim


def split_compact_noncompact(levi: Subspace, g: LieAlgebra) -> tuple[Subspace, Subspace]:
    k, s, _, _ = _split_factors(levi, g)
    return k, s


def _split_factors(levi: Subspace, g: LieAlgebra):
    if not levi.is_zero():
        if not is_subalgebra(g, levi):
            raise UsageError("Levi factor must be a subalgebra")
        sig = killing_form(subalgebra(g, levi)).signature()
        if sig.zeros:
            raise UsageError("subalgebra is not semisimple (degenerate Killing form)")
    compact, noncompact = [], []
    for p in simple_ideals(g, levi):
        (compact if _is_negative_definite_killing(g, p) else noncompact).append(p)
    zero = Subspace.zero(g.dim)
    k = sum(compact[1:], compact[0]) if compact else zero
    s = sum(noncompact[1:], noncompact[0]) if noncompact else zero
    return k, s, tuple(compact), tuple(noncompact)


@dataclass(frozen=True)
class LeviDecomposition:
    compact_part: Subspace
    noncompact_part: Subspace
    radical: Subspace
    compact_factors: tuple = ()
    noncompact_factors: tuple = ()

    @property
    def levi(self) -> Subspace:
        return self.compact_part + self.noncompact_part


def levi_decomposition(g: LieAlgebra) -> LeviDecomposition:
    r = solvable_radical(g)
    levi = levi_subalgebra(g, r)
    k, s, kf, sf = _split_factors(levi, g)
    if (k + s + r).dim != g.dim or k.dim + s.dim + r.dim != g.dim:
        raise InvariantViolation("Levi pieces do not form a direct sum")
    if not bracket_space(g, k, s).is_zero():
        raise InvariantViolation("compact and non-compact Levi parts do not commute")
    return LeviDecomposition(k, s, r, kf, sf)


# ------------------------------------------------------------------- Fitting


@dataclass(frozen=True)
class FittingDecomposition:
    regular_element: tuple
    fitting_zero: Subspace
    fitting_one: Subspace


def _fitting_null_dim(a: Matrix) -> tuple[int, Matrix]:
    n = a.nrows
    p = a.power(n) if n else a
    return n - rank(p), p


DEFAULT_SEED = 20240611


def fitting_decomposition(
    g: LieAlgebra, seed: int = DEFAULT_SEED, regular_element: Sequence | None = None, samples: int = 64
) -> FittingDecomposition:
    n = g.dim
    if regular_element is not None:
        best = tuple(rat(a) for a in regular_element)
        best_dim, best_pow = _fitting_null_dim(g.ad(best))
    else:
        rng = random.Random(seed)
        best, best_dim, best_pow = None, n + 1, None
        for _ in range(samples):
            x = tuple(rat(rng.randint(-3, 3)) for _ in range(n))
            d, p = _fitting_null_dim(g.ad(x))
            if d < best_dim:
                best, best_dim, best_pow = x, d, p
        if best is None:
            best, best_pow, best_dim = tuple(ZERO for _ in range(n)), Matrix.zeros(n, n), n
    g0 = kernel(best_pow)
    g1 = image(best_pow)
    if g0.dim != best_dim or (g0 + g1).dim != n or g0.dim + g1.dim != n:
        raise InvariantViolation("Fitting components do not split the algebra")
    if not (is_subalgebra(g, g0) and is_nilpotent_algebra(g, g0)):
        raise InvariantViolation("Fitting null component is not a nilpotent subalgebra")
    return FittingDecomposition(best, g0, g1)
