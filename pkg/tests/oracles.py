"""Independent reference computations used to cross-check the library.

Written with plain ``fractions.Fraction`` lists and textbook algorithms so
they share no code with the package under test.
"""

from __future__ import annotations

import itertools
from fractions import Fraction


def F(x) -> Fraction:
    return Fraction(int(x.numerator), int(x.denominator)) if hasattr(x, "numerator") else Fraction(x)


def to_lists(m) -> list[list[Fraction]]:
    return [[F(a) for a in row] for row in m.rows]


def rref(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    a = [list(r) for r in rows]
    if not a:
        return [], []
    ncols = len(a[0])
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return a[:r], pivots


def rank(rows) -> int:
    return len(rref([list(r) for r in rows])[1])


def null_space(rows: list[list[Fraction]], ncols: int) -> list[list[Fraction]]:
    red, piv = rref(rows) if rows else ([], [])
    out = []
    for f in range(ncols):
        if f in piv:
            continue
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, c in zip(red, piv):
            v[c] = -row[f]
        out.append(v)
    return out


def same_span(u: list, w: list) -> bool:
    ru, rw = rank(u) if u else 0, rank(w) if w else 0
    both = rank(list(u) + list(w)) if (u or w) else 0
    return ru == rw == both


def matmul(a, b):
    return [[sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))] for i in range(len(a))]


def structure_tensor(g) -> list:
    """c[i][j][k] from the library's public entries() list."""
    n = g.dim
    c = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
    for i, j, k, v in g.entries():
        c[i][j][k] = F(v)
        c[j][i][k] = -F(v)
    return c


def killing_by_trace(c) -> list[list[Fraction]]:
    """kappa(e_i, e_j) = sum_{k,l} c[i][l][k] c[j][k][l]."""
    n = len(c)
    return [
        [sum(c[i][l][k] * c[j][k][l] for k in range(n) for l in range(n)) for j in range(n)]
        for i in range(n)
    ]


def bracket(c, x, y):
    n = len(c)
    return [sum(x[i] * y[j] * c[i][j][k] for i in range(n) for j in range(n)) for k in range(n)]


def ideal_generated(c, v) -> list:
    n = len(c)
    basis = [list(v)]
    changed = True
    while changed:
        changed = False
        for b in list(basis):
            for i in range(n):
                e = [Fraction(int(t == i)) for t in range(n)]
                w = bracket(c, e, b)
                if rank(basis + [w]) > rank(basis):
                    basis.append(w)
                    changed = True
    return basis


def is_nilpotent_span(c, basis) -> bool:
    n = len(c)
    term = basis
    for _ in range(n + 1):
        if rank(term) == 0:
            return True
        term = [bracket(c, a, b) for a in basis for b in term]
        if term:
            red, _ = rref(term)
            term = red
    return rank(term) == 0 if term else True


def nilradical_bruteforce(g) -> list:
    """Span of all v in {-1,0,1}^n whose generated ideal is nilpotent."""
    c = structure_tensor(g)
    n = g.dim
    found = []
    for v in itertools.product((-1, 0, 1), repeat=n):
        if not any(v):
            continue
        v = [Fraction(a) for a in v]
        if found and rank(found + [v]) == rank(found):
            continue
        if is_nilpotent_span(c, ideal_generated(c, v)):
            found.append(v)
    return found


def _sign_changes(coeffs) -> int:
    signs = [c > 0 for c in coeffs if c != 0]
    return sum(a != b for a, b in zip(signs, signs[1:]))


def signature_by_descartes(g) -> tuple[int, int, int]:
    """Signature of a symmetric rational matrix from its characteristic polynomial.

    All roots are real, so Descartes' rule of signs counts them exactly.
    """
    import sympy

    x = sympy.Symbol("x")
    m = sympy.Matrix([[sympy.Rational(int(a.numerator), int(a.denominator)) for a in row] for row in g.rows])
    coeffs = [Fraction(str(c)) for c in sympy.Poly(m.charpoly(x).as_expr(), x).all_coeffs()][::-1]
    zeros = next(i for i, c in enumerate(coeffs) if c != 0)
    rest = coeffs[zeros:]
    pos = _sign_changes(rest)
    neg = _sign_changes([c * (-1) ** i for i, c in enumerate(rest)])
    return pos, neg, zeros
