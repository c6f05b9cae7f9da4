"""Exact rational linear algebra.

Everything here works over ``gmpy2.mpq``. Matrices and subspaces are
immutable; subspaces carry a canonical reduced echelon basis so that two
equal subspaces compare equal.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from gmpy2 import mpq

from metric_lie.errors import InvariantViolation, UsageError

Rational = type(mpq())
ZERO = mpq(0)
ONE = mpq(1)

__all__ = [
    "Rational",
    "rat",
    "fmt",
    "Matrix",
    "Subspace",
    "RowReducer",
    "Signature",
    "JordanPair",
    "SymBilinearForm",
    "kernel",
    "image",
    "rank",
    "solve_linear",
    "inverse",
    "jordan_chevalley",
    "signature",
    "charpoly",
    "minimal_polynomial",
    "is_nilpotent",
    "poly_is_squarefree",
]


def rat(x) -> Rational:
    """Coerce ints, strings like ``"3/2"``, Fractions and mpqs to mpq."""
    if isinstance(x, Rational):
        return x
    if isinstance(x, bool):
        return mpq(int(x))
    if isinstance(x, int):
        return mpq(x)
    if isinstance(x, Fraction):
        return mpq(x.numerator, x.denominator)
    if isinstance(x, str):
        s = x.strip()
        try:
            if "/" in s:
                p, q = s.split("/")
                if int(q) == 0:
                    raise ZeroDivisionError
                return mpq(int(p), int(q))
            return mpq(int(s))
        except (ValueError, ZeroDivisionError):
            raise UsageError(f"not an exact rational: {x!r}") from None
    if isinstance(x, float):
        raise UsageError("floats are not accepted; pass an exact rational")
    try:
        return mpq(x)
    except (TypeError, ValueError):
        raise UsageError(f"not an exact rational: {x!r}") from None


def fmt(x: Rational) -> str:
    """Canonical ``p/q`` string (``p`` when integral)."""
    return str(x)


def _vec(v: Iterable) -> tuple:
    return tuple(rat(a) for a in v)


class Matrix:
    """Dense immutable rational matrix."""

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows: Iterable[Iterable], ncols: int | None = None):
        data = tuple(_vec(r) for r in rows)
        if ncols is None:
            if not data:
                raise UsageError("empty matrix needs an explicit column count")
            ncols = len(data[0])
        for r in data:
            if len(r) != ncols:
                raise UsageError("ragged matrix rows")
        object.__setattr__(self, "rows", data)
        object.__setattr__(self, "nrows", len(data))
        object.__setattr__(self, "ncols", ncols)

    def __setattr__(self, key, value):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def _raw(cls, rows: tuple, ncols: int) -> "Matrix":
        m = object.__new__(cls)
        object.__setattr__(m, "rows", rows)
        object.__setattr__(m, "nrows", len(rows))
        object.__setattr__(m, "ncols", ncols)
        return m

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "Matrix":
        z = (ZERO,) * ncols
        return cls._raw((z,) * nrows, ncols)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls._raw(
            tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)), n
        )

    @classmethod
    def diagonal(cls, entries: Sequence) -> "Matrix":
        d = _vec(entries)
        n = len(d)
        return cls._raw(
            tuple(tuple(d[i] if i == j else ZERO for j in range(n)) for i in range(n)), n
        )

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence], nrows: int) -> "Matrix":
        cols = [_vec(c) for c in cols]
        return cls._raw(tuple(tuple(c[i] for c in cols) for i in range(nrows)), len(cols))

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def __getitem__(self, ij: tuple[int, int]) -> Rational:
        i, j = ij
        return self.rows[i][j]

    def col(self, j: int) -> tuple:
        return tuple(r[j] for r in self.rows)

    def columns(self) -> list[tuple]:
        return [self.col(j) for j in range(self.ncols)]

    @property
    def T(self) -> "Matrix":
        return Matrix._raw(
            tuple(tuple(r[j] for r in self.rows) for j in range(self.ncols)), self.nrows
        )

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def is_zero(self) -> bool:
        return all(not a for r in self.rows for a in r)

    def is_symmetric(self) -> bool:
        return self.is_square() and all(
            self.rows[i][j] == self.rows[j][i]
            for i in range(self.nrows)
            for j in range(i + 1, self.nrows)
        )

    def trace(self) -> Rational:
        return sum((self.rows[i][i] for i in range(min(self.nrows, self.ncols))), ZERO)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.ncols, self.rows))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(fmt(a) for a in r) for r in self.rows)
        return f"Matrix({self.nrows}x{self.ncols}: [{body}])"

    def _check_same(self, other: "Matrix") -> None:
        if self.shape != other.shape:
            raise UsageError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_same(other)
        return Matrix._raw(
            tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)),
            self.ncols,
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_same(other)
        return Matrix._raw(
            tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)),
            self.ncols,
        )

    def __neg__(self) -> "Matrix":
        return Matrix._raw(tuple(tuple(-a for a in r) for r in self.rows), self.ncols)

    def scale(self, c) -> "Matrix":
        c = rat(c)
        return Matrix._raw(tuple(tuple(c * a for a in r) for r in self.rows), self.ncols)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise UsageError(f"cannot multiply {self.shape} by {other.shape}")
        n = other.ncols
        sparse_b = [[(j, b) for j, b in enumerate(r) if b] for r in other.rows]
        out = []
        for r in self.rows:
            acc = [ZERO] * n
            for k, a in enumerate(r):
                if a:
                    for j, b in sparse_b[k]:
                        acc[j] += a * b
            out.append(tuple(acc))
        return Matrix._raw(tuple(out), n)

    def apply(self, v: Sequence) -> tuple:
        if len(v) != self.ncols:
            raise UsageError("vector length mismatch")
        nz = [(k, a) for k, a in enumerate(v) if a]
        return tuple(sum((r[k] * a for k, a in nz), ZERO) for r in self.rows)

    def power(self, k: int) -> "Matrix":
        result = Matrix.identity(self.nrows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            k >>= 1
            if k:
                base = base @ base
        return result

    def commutator(self, other: "Matrix") -> "Matrix":
        return self @ other - other @ self

    def flatten(self) -> tuple:
        return tuple(a for r in self.rows for a in r)

    def to_strings(self) -> list[list[str]]:
        return [[fmt(a) for a in r] for r in self.rows]


class RowReducer:
    """Incremental Gauss-Jordan elimination over sparse rows.

    Pivot rows are kept fully reduced against each other, so reducing a new
    vector by them in any order yields its canonical residue.
    """

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.pivots: dict[int, dict[int, Rational]] = {}

    def __len__(self) -> int:
        return len(self.pivots)

    def _sparse(self, v) -> dict:
        if isinstance(v, dict):
            return {k: a for k, a in v.items() if a}
        return {k: a for k, a in enumerate(v) if a}

    def residue(self, v) -> dict:
        r = self._sparse(v)
        for c in [c for c in r if c in self.pivots]:
            a = r.get(c)
            if not a:
                continue
            for k, b in self.pivots[c].items():
                x = r.get(k, ZERO) - a * b
                if x:
                    r[k] = x
                else:
                    r.pop(k, None)
        return r

    def add(self, v) -> bool:
        """Insert a row; return True if it enlarged the span."""
        r = self.residue(v)
        if not r:
            return False
        c = min(r)
        inv = 1 / r[c]
        r = {k: a * inv for k, a in r.items()}
        for p in self.pivots.values():
            a = p.get(c)
            if a:
                for k, b in r.items():
                    x = p.get(k, ZERO) - a * b
                    if x:
                        p[k] = x
                    else:
                        p.pop(k, None)
        self.pivots[c] = r
        return True

    def contains(self, v) -> bool:
        return not self.residue(v)

    def rref_rows(self) -> tuple:
        n = self.ncols
        out = []
        for c in sorted(self.pivots):
            row = [ZERO] * n
            for k, a in self.pivots[c].items():
                row[k] = a
            out.append(tuple(row))
        return tuple(out)

    def null_space(self) -> list[tuple]:
        """Canonical kernel basis of the accumulated constraint rows."""
        free = [j for j in range(self.ncols) if j not in self.pivots]
        basis = []
        for f in free:
            x = [ZERO] * self.ncols
            x[f] = ONE
            for c, row in self.pivots.items():
                a = row.get(f)
                if a:
                    x[c] = -a
            basis.append(tuple(x))
        return basis


def _rref_basis(vectors: Iterable, n: int) -> tuple:
    red = RowReducer(n)
    for v in vectors:
        red.add(v)
    return red.rref_rows()


@dataclass(frozen=True)
class Subspace:
    """Linear subspace of Q^n with a canonical reduced echelon basis."""

    ambient_dim: int
    vectors: tuple

    @classmethod
    def span(cls, vectors: Iterable[Sequence], ambient_dim: int) -> "Subspace":
        vs = []
        for v in vectors:
            v = _vec(v)
            if len(v) != ambient_dim:
                raise UsageError("vector length does not match ambient dimension")
            vs.append(v)
        return cls(ambient_dim, _rref_basis(vs, ambient_dim))

    @classmethod
    def zero(cls, n: int) -> "Subspace":
        return cls(n, ())

    @classmethod
    def full(cls, n: int) -> "Subspace":
        return cls(n, Matrix.identity(n).rows)

    @classmethod
    def coordinate(cls, indices: Iterable[int], n: int) -> "Subspace":
        return cls.span(
            [tuple(ONE if k == i else ZERO for k in range(n)) for i in indices], n
        )

    @property
    def dim(self) -> int:
        return len(self.vectors)

    @property
    def basis(self) -> Matrix:
        """Basis vectors as matrix columns."""
        return Matrix.from_columns(self.vectors, self.ambient_dim)

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(next(k for k, a in enumerate(v) if a) for v in self.vectors)

    def _reducer(self) -> RowReducer:
        red = RowReducer(self.ambient_dim)
        for v in self.vectors:
            red.pivots[next(k for k, a in enumerate(v) if a)] = {
                k: a for k, a in enumerate(v) if a
            }
        return red

    def is_zero(self) -> bool:
        return not self.vectors

    def is_full(self) -> bool:
        return self.dim == self.ambient_dim

    def contains(self, v: Sequence) -> bool:
        return self._reducer().contains(v)

    def contains_subspace(self, other: "Subspace") -> bool:
        red = self._reducer()
        return all(red.contains(v) for v in other.vectors)

    def __le__(self, other: "Subspace") -> bool:
        return other.contains_subspace(self)

    def __add__(self, other: "Subspace") -> "Subspace":
        return Subspace.span(self.vectors + other.vectors, self.ambient_dim)

    def intersect(self, other: "Subspace") -> "Subspace":
        # x = sum a_i u_i = sum b_j w_j  ->  kernel of [U | -W]
        if self.is_zero() or other.is_zero():
            return Subspace.zero(self.ambient_dim)
        annihilator = other.annihilator()
        if not annihilator:
            return self
        coeffs = kernel_of_rows(
            [[sum((f[k] * u[k] for k in range(self.ambient_dim)), ZERO) for u in self.vectors]
             for f in annihilator],
            self.dim,
        )
        return Subspace.span([self.combine(c) for c in coeffs], self.ambient_dim)

    def annihilator(self) -> list[tuple]:
        """Basis of linear functionals vanishing on the subspace."""
        red = self._reducer()
        return red.null_space()

    def residue(self, v: Sequence) -> dict:
        """Sparse residue of v modulo the subspace (zero at pivot columns)."""
        return self._reducer().residue(v)

    def coordinates(self, v: Sequence) -> tuple:
        """Coefficients of v in the canonical basis; v must lie in the span."""
        if not self.contains(v):
            raise UsageError("vector is not in the subspace")
        return tuple(v[p] for p in self.pivots)

    def combine(self, coeffs: Sequence) -> tuple:
        out = [ZERO] * self.ambient_dim
        for c, v in zip(coeffs, self.vectors):
            if c:
                for k, a in enumerate(v):
                    if a:
                        out[k] += c * a
        return tuple(out)

    def complement_indices(self) -> tuple[int, ...]:
        """Non-pivot coordinates; their unit vectors span a canonical complement."""
        piv = set(self.pivots)
        return tuple(k for k in range(self.ambient_dim) if k not in piv)

    def image_under(self, m: Matrix) -> "Subspace":
        return Subspace.span([m.apply(v) for v in self.vectors], m.nrows)

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim} in Q^{self.ambient_dim})"


def kernel_of_rows(rows: Iterable[Sequence], ncols: int) -> list[tuple]:
    red = RowReducer(ncols)
    for r in rows:
        red.add(r)
    return red.null_space()


def kernel(m: Matrix) -> Subspace:
    return Subspace.span(kernel_of_rows(m.rows, m.ncols), m.ncols)


def image(m: Matrix) -> Subspace:
    return Subspace.span(m.columns(), m.nrows)


def rank(m: Matrix) -> int:
    red = RowReducer(m.ncols)
    for r in m.rows:
        red.add(r)
    return len(red)


def solve_linear(a: Matrix, b: Sequence) -> tuple[tuple | None, Subspace]:
    """One particular solution of a x = b (or None) together with ker a."""
    b = _vec(b)
    if len(b) != a.nrows:
        raise UsageError(f"right-hand side has length {len(b)}, expected {a.nrows}")
    n = a.ncols
    red = RowReducer(n + 1)
    for row, bi in zip(a.rows, b):
        red.add(row + (bi,))
    ker = Subspace.span(_kernel_prefix(red, n), n)
    if n in red.pivots:
        return None, ker
    x = [ZERO] * n
    for c, row in red.pivots.items():
        x[c] = row.get(n, ZERO)
    return tuple(x), ker


def _kernel_prefix(red: RowReducer, n: int) -> list[tuple]:
    out = []
    for f in range(n):
        if f in red.pivots:
            continue
        x = [ZERO] * n
        x[f] = ONE
        for c, row in red.pivots.items():
            if c < n:
                a = row.get(f)
                if a:
                    x[c] = -a
        out.append(tuple(x))
    return out


def inverse(m: Matrix) -> Matrix:
    if not m.is_square():
        raise UsageError("only square matrices are invertible")
    n = m.nrows
    red = RowReducer(2 * n)
    for i, r in enumerate(m.rows):
        red.add(r + tuple(ONE if j == i else ZERO for j in range(n)))
    if any(c not in red.pivots for c in range(n)):
        raise UsageError("matrix is singular")
    return Matrix._raw(
        tuple(tuple(red.pivots[i].get(n + j, ZERO) for j in range(n)) for i in range(n)), n
    )


# ---------------------------------------------------------------- polynomials
# Coefficient lists, lowest degree first, no trailing zeros.


def _trim(p: list) -> list:
    p = list(p)
    while p and not p[-1]:
        p.pop()
    return p


def poly_divmod(a: list, b: list) -> tuple[list, list]:
    a, b = _trim(a), _trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [ZERO] * max(len(a) - len(b) + 1, 0)
    r = list(a)
    lead = b[-1]
    while len(r) >= len(b) and r:
        c = r[-1] / lead
        shift = len(r) - len(b)
        q[shift] = c
        for i, bc in enumerate(b):
            r[shift + i] -= c * bc
        r = _trim(r)
    return _trim(q), r


def poly_gcd(a: list, b: list) -> list:
    a, b = _trim(a), _trim(b)
    while b:
        a, b = b, poly_divmod(a, b)[1]
    if not a:
        return a
    lead = a[-1]
    return [c / lead for c in a]


def poly_derivative(p: list) -> list:
    return _trim([i * p[i] for i in range(1, len(p))])


def poly_is_squarefree(p: list) -> bool:
    return len(poly_gcd(p, poly_derivative(p))) <= 1


def poly_eval_matrix(p: list, m: Matrix) -> Matrix:
    n = m.nrows
    acc = Matrix.zeros(n, n)
    ident = Matrix.identity(n)
    for c in reversed(_trim(p)):
        acc = acc @ m + ident.scale(c)
    return acc


def charpoly(m: Matrix) -> list:
    """Characteristic polynomial det(xI - m) via Hessenberg reduction."""
    if not m.is_square():
        raise UsageError("characteristic polynomial needs a square matrix")
    n = m.nrows
    h = [list(r) for r in m.rows]
    for k in range(n - 2):
        piv = next((i for i in range(k + 1, n) if h[i][k]), None)
        if piv is None:
            continue
        if piv != k + 1:
            h[piv], h[k + 1] = h[k + 1], h[piv]
            for row in h:
                row[piv], row[k + 1] = row[k + 1], row[piv]
        p = h[k + 1][k]
        for i in range(k + 2, n):
            f = h[i][k] / p
            if f:
                ri, rk = h[i], h[k + 1]
                for j in range(n):
                    ri[j] -= f * rk[j]
                for row in h:
                    row[k + 1] += f * row[i]
    # recurrence on leading principal minors of the Hessenberg form
    polys = [[ONE]]
    for k in range(n):
        # p_{k+1} = (x - h_kk) p_k - sum_{i<k} h_ik * prod_{j=i+1..k} h_{j,j-1} * p_i
        pk = polys[k]
        nxt = [ZERO] + list(pk)
        for i, c in enumerate(pk):
            nxt[i] -= h[k][k] * c
        prod = ONE
        for i in range(k - 1, -1, -1):
            prod *= h[i + 1][i]
            if not prod:
                break
            coef = h[i][k] * prod
            for t, c in enumerate(polys[i]):
                nxt[t] -= coef * c
        polys.append(nxt)
    return polys[n]


def minimal_polynomial(m: Matrix) -> list:
    """Monic minimal polynomial via the first linear dependency among powers."""
    n = m.nrows
    red = RowReducer(n * n + n + 1)
    # track combinations: augment each flattened power with a unit marker
    power = Matrix.identity(n)
    for d in range(n + 1):
        marker = [ZERO] * (n + 1)
        marker[d] = ONE
        red.add(list(power.flatten()) + marker)
        # a dependency among powers surfaces as a pivot in the marker columns
        dep = [c for c in red.pivots if c >= n * n]
        if dep:
            row = red.pivots[dep[0]]
            coeffs = _trim([row.get(n * n + t, ZERO) for t in range(n + 1)])
            return [a / coeffs[-1] for a in coeffs]
        power = power @ m
    raise InvariantViolation("minimal polynomial search did not terminate")


def is_nilpotent(m: Matrix) -> bool:
    p = m
    for _ in range(m.nrows):
        if p.is_zero():
            return True
        p = p @ m
    return p.is_zero()


@dataclass(frozen=True)
class JordanPair:
    semisimple: Matrix
    nilpotent: Matrix


def jordan_chevalley(m: Matrix) -> JordanPair:
    """Additive Jordan decomposition by Newton iteration on the squarefree part."""
    if not m.is_square():
        raise UsageError("Jordan-Chevalley decomposition needs a square matrix")
    n = m.nrows
    if n == 0 or m.is_zero():
        return JordanPair(m, Matrix.zeros(n, n))
    p = charpoly(m)
    g = poly_gcd(p, poly_derivative(p))
    q = poly_divmod(p, g)[0] if len(g) > 1 else _trim(p)
    dq = poly_derivative(q)
    s = m
    for _ in range(2 * n + 2):
        qs = poly_eval_matrix(q, s)
        if qs.is_zero():
            return JordanPair(s, m - s)
        s = s - qs @ inverse(poly_eval_matrix(dq, s))
    raise InvariantViolation("Newton iteration for the semisimple part did not converge")


@dataclass(frozen=True)
class Signature:
    positives: int
    negatives: int
    zeros: int

    @property
    def dim(self) -> int:
        return self.positives + self.negatives + self.zeros

    @property
    def index(self) -> int:
        """Dimension of a maximal totally isotropic subspace."""
        return self.zeros + min(self.positives, self.negatives)

    @property
    def relative_index(self) -> int:
        return min(self.positives, self.negatives)

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.positives, self.negatives, self.zeros)


def signature(g: Matrix) -> Signature:
    """Sylvester signature by symmetric congruence diagonalization."""
    if not g.is_symmetric():
        raise UsageError("signature requires a symmetric matrix")
    n = g.nrows
    a = [list(r) for r in g.rows]
    active = list(range(n))
    pos = neg = 0
    while active:
        i = next((k for k in active if a[k][k]), None)
        if i is None:
            pair = next(
                ((k, l) for k in active for l in active if k != l and a[k][l]), None
            )
            if pair is None:
                break
            i, j = pair
            # e_i <- e_i + e_j makes the diagonal entry 2 a_ij
            for k in range(n):
                a[i][k] += a[j][k]
            for k in range(n):
                a[k][i] += a[k][j]
        d = a[i][i]
        if d > 0:
            pos += 1
        else:
            neg += 1
        active.remove(i)
        for k in active:
            f = a[k][i] / d
            if f:
                rk, ri = a[k], a[i]
                for t in range(n):
                    rk[t] -= f * ri[t]
                for row in a:
                    row[k] -= f * row[i]
    return Signature(pos, neg, n - pos - neg)


class SymBilinearForm:
    """Symmetric bilinear form given by its Gram matrix."""

    __slots__ = ("gram",)

    def __init__(self, gram: Matrix):
        if not isinstance(gram, Matrix):
            gram = Matrix(gram)
        if not gram.is_symmetric():
            raise UsageError("Gram matrix must be symmetric")
        object.__setattr__(self, "gram", gram)

    def __setattr__(self, key, value):
        raise AttributeError("SymBilinearForm is immutable")

    @classmethod
    def zero(cls, n: int) -> "SymBilinearForm":
        return cls(Matrix.zeros(n, n))

    @property
    def dim(self) -> int:
        return self.gram.nrows

    def __eq__(self, other) -> bool:
        return isinstance(other, SymBilinearForm) and self.gram == other.gram

    def __hash__(self) -> int:
        return hash(self.gram)

    def __repr__(self) -> str:
        return f"SymBilinearForm({self.gram!r})"

    def value(self, x: Sequence, y: Sequence) -> Rational:
        gy = self.gram.apply(y)
        return sum((a * b for a, b in zip(x, gy) if a), ZERO)

    def signature(self) -> Signature:
        return signature(self.gram)

    def radical(self) -> Subspace:
        return kernel(self.gram)

    def perp(self, w: Subspace) -> Subspace:
        """{x : <x, w> = 0 for all w in W}."""
        rows = [self.gram.apply(v) for v in w.vectors]
        return Subspace.span(kernel_of_rows(rows, self.dim), self.dim)

    def gram_between(self, u: Subspace, w: Subspace) -> Matrix:
        return Matrix._raw(
            tuple(tuple(self.value(a, b) for b in w.vectors) for a in u.vectors), w.dim
        )

    def vanishes_between(self, u: Subspace, w: Subspace) -> bool:
        return all(not self.value(a, b) for a in u.vectors for b in w.vectors)

    def is_totally_isotropic(self, w: Subspace) -> bool:
        return self.vanishes_between(w, w)

    def restrict(self, w: Subspace) -> "SymBilinearForm":
        return SymBilinearForm(self.gram_between(w, w))

    def scale(self, c) -> "SymBilinearForm":
        return SymBilinearForm(self.gram.scale(c))

    def __add__(self, other: "SymBilinearForm") -> "SymBilinearForm":
        return SymBilinearForm(self.gram + other.gram)
