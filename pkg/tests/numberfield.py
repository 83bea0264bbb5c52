"""Tiny Q[t]/(p) arithmetic used as an oracle for the structure-constant tables."""

from fractions import Fraction


def polymulmod(u, v, p):
    """u*v mod p; all lists are coefficients by increasing power, p of full degree."""
    n = len(p) - 1
    prod = [Fraction(0)] * (len(u) + len(v) - 1)
    for i, x in enumerate(u):
        for j, y in enumerate(v):
            prod[i + j] += Fraction(x) * y
    lead = Fraction(p[-1])
    for k in range(len(prod) - 1, n - 1, -1):
        c = prod[k] / lead
        if c:
            for i in range(n + 1):
                prod[k - n + i] -= c * p[i]
    return (prod + [Fraction(0)] * n)[:n]


def solve(basis, target):
    """Coordinates of target in the given basis (columns = basis vectors), exactly."""
    n = len(basis)
    m = [[Fraction(basis[j][i]) for j in range(n)] + [Fraction(target[i])] for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if m[r][col] != 0)
        m[col], m[piv] = m[piv], m[col]
        for r in range(n):
            if r != col and m[r][col]:
                k = m[r][col] / m[col][col]
                m[r] = [a - k * b for a, b in zip(m[r], m[col])]
    return [m[i][n] / m[i][i] for i in range(n)]


def table_from_field(p, basis):
    """Structure constants of the lattice spanned by ``basis`` inside Q[t]/(p)."""
    n = len(basis)
    out = {}
    for i in range(1, n):
        for j in range(i, n):
            coords = solve(basis, polymulmod(basis[i], basis[j], p))
            out[(i, j)] = coords
    return out


def quartic_basis(f):
    f0, f1, f2, f3, f4 = f
    # 1, z1 = f0 t, z2 = f0 t^2 + f1 t, z3' = f0 t^3 + f1 t^2 + f2 t + f3
    return [(1, 0, 0, 0), (0, f0, 0, 0), (0, f1, f0, 0), (f3, f2, f1, f0)], (f4, f3, f2, f1, f0)


def cubic_basis(f):
    a, b, c, d = f
    # 1, w = -a t, t' = -(a t^2 + b t + c)
    return [(1, 0, 0), (0, -a, 0), (-c, -b, -a)], (d, c, b, a)
