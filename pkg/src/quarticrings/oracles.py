"""Independent discriminant oracle: resultant of p and p' via a Sylvester matrix.

Deliberately shares nothing with the invariant-theoretic formulas in ``forms``.
"""


def bareiss_det(m):
    """Fraction-free Gaussian elimination; exact for integer matrices of any size."""
    a = [list(r) for r in m]
    n = len(a)
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def sylvester(p, q):
    """Sylvester matrix of p and q given as coefficient lists, highest degree first."""
    m, n = len(p) - 1, len(q) - 1
    size = m + n
    rows = []
    for i in range(n):
        rows.append([0] * i + list(p) + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + list(q) + [0] * (size - n - 1 - i))
    return rows


def resultant(p, q):
    return bareiss_det(sylvester(p, q))


def poly_discriminant(p):
    """disc(p) = (-1)^(n(n-1)/2) Res(p, p') / lead(p), p highest degree first."""
    if not p or p[0] == 0:
        raise ValueError("leading coefficient must be nonzero")
    n = len(p) - 1
    dp = [c * (n - i) for i, c in enumerate(p[:-1])]
    res = resultant(p, dp)
    q, r = divmod(res, p[0])
    assert r == 0
    return (-1) ** (n * (n - 1) // 2) * q


def binary_form_discriminant(coeffs):
    """Discriminant of a binary form with nonzero x^n coefficient."""
    return poly_discriminant(list(coeffs))
