"""Exact integer/rational helpers for the small matrices used throughout.

Matrices are tuples of row tuples. Entries are ``int`` or ``fractions.Fraction``;
nothing here ever touches floating point.
"""

from fractions import Fraction
from itertools import permutations
from math import gcd

Rat = Fraction


def rat(x):
    """Coerce to an exact rational; integers stay integers."""
    if type(x) is int:
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, int):
        return x
    raise TypeError(f"not an exact number: {x!r}")


def as_matrix(rows):
    return tuple(tuple(r) for r in rows)


def identity(n):
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def transpose(m):
    return tuple(zip(*m))


def _perm_sign(p):
    sign = 1
    seen = [False] * len(p)
    for i in range(len(p)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


_PERMS = {n: [(p, _perm_sign(p)) for p in permutations(range(n))] for n in range(1, 5)}


def det(m):
    """Exact determinant by permutation-sum expansion (n <= 4)."""
    n = len(m)
    if n == 0:
        return 1
    if any(len(row) != n for row in m):
        raise ValueError("matrix is not square")
    if n > 4:
        raise ValueError("only matrices up to 4x4 are supported")
    if n == 3:
        (a, b, c), (d, e, f), (g, h, i) = m
        return rat(a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g))
    total = 0
    for p, s in _PERMS[n]:
        term = s
        for i in range(n):
            term *= m[i][p[i]]
            if term == 0:
                break
        total += term
    return rat(total)


def mat_mul(a, b):
    if len(a[0]) != len(b):
        raise ValueError("incompatible dimensions")
    bt = transpose(b)
    return tuple(tuple(rat(sum(x * y for x, y in zip(row, col))) for col in bt) for row in a)


def vec_mat(v, m):
    """Row vector times matrix."""
    return tuple(rat(sum(v[i] * m[i][j] for i in range(len(v)))) for j in range(len(m[0])))


def is_integral(m):
    return all(isinstance(rat(x), int) for row in m for x in row)


def is_unimodular(m):
    return is_integral(m) and det(m) in (1, -1)


def adjugate(m):
    n = len(m)
    if n == 1:
        return ((1,),)
    if n == 2:
        (a, b), (c, d) = m
        return ((d, -b), (-c, a))
    cof = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = tuple(
                tuple(m[r][c] for c in range(n) if c != j) for r in range(n) if r != i
            )
            cof[i][j] = (-1) ** (i + j) * det(minor)
    return transpose(cof)


def inverse(m):
    """Exact inverse; integral whenever ``m`` is unimodular."""
    d = det(m)
    if d == 0:
        raise ZeroDivisionError("singular matrix")
    return tuple(tuple(rat(Fraction(x) / d) for x in row) for row in adjugate(m))


def ext_gcd(a, b):
    """Return (g, s, t) with s*a + t*b = g = gcd(a, b) >= 0."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        a, s0, t0 = -a, -s0, -t0
    return a, s0, t0


def vec_gcd(v):
    g = 0
    for x in v:
        g = gcd(g, x)
    return g


def unimodular_completion(v):
    """Integer matrix of determinant 1 whose first row is the primitive vector ``v``."""
    v = tuple(int(x) for x in v)
    n = len(v)
    if vec_gcd(v) != 1:
        raise ValueError(f"vector {v} is not primitive")
    # Column operations U with v·U = e1; then U^-1 has first row v.
    u = [list(r) for r in identity(n)]
    w = list(v)

    def col_op(j, k, q):
        # column j -= q * column k
        w[j] -= q * w[k]
        for row in u:
            row[j] -= q * row[k]

    def col_swap(j, k):
        w[j], w[k] = w[k], w[j]
        for row in u:
            row[j], row[k] = row[k], row[j]

    while sum(1 for x in w if x) > 1 or w[0] == 0:
        nz = [i for i in range(n) if w[i]]
        if len(nz) == 1:
            col_swap(0, nz[0])
            continue
        k = min(nz, key=lambda i: abs(w[i]))
        for j in nz:
            if j != k:
                col_op(j, k, w[j] // w[k])
    if w[0] == -1:
        for row in u:
            row[0] = -row[0]
        w[0] = 1
    m = [list(r) for r in inverse(as_matrix(u))]
    if det(as_matrix(m)) == -1:
        m[-1] = [-x for x in m[-1]]
    return as_matrix(m)
