"""Binary quartic/cubic forms, ternary quadratic forms and their group actions.

Coefficient conventions:

* ``BinaryQuarticForm(f0, ..., f4)`` is f0 x^4 + f1 x^3 y + f2 x^2 y^2 + f3 x y^3 + f4 y^4.
* ``BinaryCubicForm(a, b, c, d)`` is a x^3 + b x^2 y + c x y^2 + d y^3.
* ``TernaryQuadraticForm(a11, a22, a33, a12, a13, a23)`` is
  a11 x^2 + a22 y^2 + a33 z^2 + a12 xy + a13 xz + a23 yz, whose Gram matrix carries
  the cross coefficients halved.

A matrix ``g = ((a, b), (c, d))`` acts on binary forms by substitution
``F(ax + cy, bx + dy)``; this is a left action.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from . import exact
from .exact import rat


class DomainError(ValueError):
    """An input violates the precondition of an operation."""


def _coerce(x):
    if type(x) is int:
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not coefficients")
    return rat(x)


@dataclass(frozen=True)
class BinaryQuarticForm:
    f0: int
    f1: int
    f2: int
    f3: int
    f4: int

    def __post_init__(self):
        for name in ("f0", "f1", "f2", "f3", "f4"):
            object.__setattr__(self, name, _coerce(getattr(self, name)))

    @property
    def coeffs(self):
        return (self.f0, self.f1, self.f2, self.f3, self.f4)

    def __iter__(self):
        return iter(self.coeffs)

    def __call__(self, x, y):
        return sum(c * x ** (4 - i) * y**i for i, c in enumerate(self.coeffs))

    def __str__(self):
        return _poly_str(self.coeffs)


@dataclass(frozen=True)
class BinaryCubicForm:
    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        for name in ("a", "b", "c", "d"):
            object.__setattr__(self, name, _coerce(getattr(self, name)))

    @property
    def coeffs(self):
        return (self.a, self.b, self.c, self.d)

    def __iter__(self):
        return iter(self.coeffs)

    def __call__(self, x, y):
        return sum(c * x ** (3 - i) * y**i for i, c in enumerate(self.coeffs))

    def __str__(self):
        return _poly_str(self.coeffs)


@dataclass(frozen=True)
class TernaryQuadraticForm:
    a11: int
    a22: int
    a33: int
    a12: int
    a13: int
    a23: int

    def __post_init__(self):
        for name in ("a11", "a22", "a33", "a12", "a13", "a23"):
            object.__setattr__(self, name, _coerce(getattr(self, name)))

    @property
    def coeffs(self):
        return (self.a11, self.a22, self.a33, self.a12, self.a13, self.a23)

    def __iter__(self):
        return iter(self.coeffs)

    def __add__(self, other):
        return TernaryQuadraticForm(*(x + y for x, y in zip(self, other)))

    def __sub__(self, other):
        return TernaryQuadraticForm(*(x - y for x, y in zip(self, other)))

    def __neg__(self):
        return TernaryQuadraticForm(*(-x for x in self))

    def scale(self, k):
        return TernaryQuadraticForm(*(k * x for x in self))

    @property
    def is_integral(self):
        return all(isinstance(x, int) for x in self)

    def gram(self):
        """Symmetric Gram matrix (half-integral off the diagonal)."""
        a11, a22, a33, a12, a13, a23 = self.coeffs
        h = Fraction(1, 2)
        return exact.as_matrix(
            [
                [a11, rat(a12 * h), rat(a13 * h)],
                [rat(a12 * h), a22, rat(a23 * h)],
                [rat(a13 * h), rat(a23 * h), a33],
            ]
        )

    def doubled_gram(self):
        a11, a22, a33, a12, a13, a23 = self.coeffs
        return ((2 * a11, a12, a13), (a12, 2 * a22, a23), (a13, a23, 2 * a33))

    @classmethod
    def from_doubled_gram(cls, m):
        d = (m[0][0], m[1][1], m[2][2])
        if all(type(x) is int and x % 2 == 0 for x in d):
            return cls(d[0] // 2, d[1] // 2, d[2] // 2, m[0][1], m[0][2], m[1][2])
        return cls(
            rat(Fraction(m[0][0]) / 2),
            rat(Fraction(m[1][1]) / 2),
            rat(Fraction(m[2][2]) / 2),
            m[0][1],
            m[0][2],
            m[1][2],
        )

    def __str__(self):
        names = ("x^2", "y^2", "z^2", "xy", "xz", "yz")
        return _terms_str(zip(self.coeffs, names))


@dataclass(frozen=True)
class TQFPair:
    A: TernaryQuadraticForm
    B: TernaryQuadraticForm

    def __iter__(self):
        return iter((self.A, self.B))


@dataclass(frozen=True)
class GL2Elem:
    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.det not in (1, -1):
            raise DomainError(f"matrix ({self.a} {self.b}; {self.c} {self.d}) is not in GL2(Z)")

    @classmethod
    def from_matrix(cls, m):
        (a, b), (c, d) = m
        return cls(a, b, c, d)

    @property
    def det(self):
        return self.a * self.d - self.b * self.c

    @property
    def matrix(self):
        return ((self.a, self.b), (self.c, self.d))

    def __matmul__(self, other):
        return GL2Elem.from_matrix(exact.mat_mul(self.matrix, other.matrix))

    def inverse(self):
        return GL2Elem.from_matrix(exact.inverse(self.matrix))


A0 = TernaryQuadraticForm(0, 0, 1, -1, 0, 0)
ZERO_TQF = TernaryQuadraticForm(0, 0, 0, 0, 0, 0)

# Generators of GL2(Z): swap, reflection, upper unipotent.
GENERATORS = {
    "s": GL2Elem(0, 1, 1, 0),
    "r": GL2Elem(1, 0, 0, -1),
    "t": GL2Elem(1, 1, 0, 1),
}
IDENTITY = GL2Elem(1, 0, 0, 1)


def word_element(word):
    """Product of generator letters, left to right."""
    g = IDENTITY
    for letter in word:
        try:
            g = g @ GENERATORS[letter]
        except KeyError:
            raise DomainError(f"unknown generator letter {letter!r}") from None
    return g


def _poly_mul(p, q):
    out = [0] * (len(p) + len(q) - 1)
    for i, x in enumerate(p):
        if x:
            for j, y in enumerate(q):
                out[i + j] += x * y
    return out


def _poly_pow(p, n):
    out = [1]
    for _ in range(n):
        out = _poly_mul(out, p)
    return out


def substitute(coeffs, a, b, c, d):
    """Coefficients of F(ax + cy, bx + dy) for F with x^n, x^(n-1)y, ... coefficients.

    Polynomials in the single variable t = y/x (index = power of y).
    """
    n = len(coeffs) - 1
    lin1 = [a, c]
    lin2 = [b, d]
    out = [0] * (n + 1)
    for i, f in enumerate(coeffs):
        if f:
            term = _poly_mul(_poly_pow(lin1, n - i), _poly_pow(lin2, i))
            for k, t in enumerate(term):
                out[k] += f * t
    return [rat(x) for x in out]


def _as_gl2(g):
    if isinstance(g, GL2Elem):
        return g
    return GL2Elem.from_matrix(g)


def act_gl2_quartic(g, f):
    """g∘f = F(ax + cy, bx + dy)."""
    g = _as_gl2(g)
    return BinaryQuarticForm(*substitute(f.coeffs, g.a, g.b, g.c, g.d))


def act_gl2_cubic_twisted(g, f):
    """g∘f = F(ax + cy, bx + dy) / det(g)."""
    g = _as_gl2(g)
    return BinaryCubicForm(*(x * g.det for x in substitute(f.coeffs, g.a, g.b, g.c, g.d)))


def quartic_invariants(f):
    """The SL2 invariants (I, J); disc = (4 I^3 - J^2) / 27."""
    f0, f1, f2, f3, f4 = f.coeffs
    i = 12 * f0 * f4 - 3 * f1 * f3 + f2 * f2
    j = (
        72 * f0 * f2 * f4
        - 2 * f2**3
        - 27 * f0 * f3 * f3
        - 27 * f4 * f1 * f1
        + 9 * f1 * f2 * f3
    )
    return i, j


def disc_quartic(f):
    i, j = quartic_invariants(f)
    num = 4 * i**3 - j * j
    q, r = divmod(num, 27)
    if r:
        raise AssertionError(f"27 does not divide 4I^3 - J^2 for {f}")
    return q


def disc_cubic(f):
    a, b, c, d = f.coeffs
    return b * b * c * c - 4 * a * c**3 - 4 * b**3 * d - 27 * a * a * d * d + 18 * a * b * c * d


def rho(g):
    """The homomorphism GL2(Z) -> SL3(Z) stabilising A0."""
    g = _as_gl2(g)
    a, b, c, d = g.a, g.b, g.c, g.d
    s = g.det  # 1/det == det for det = +-1
    return (
        (s * d * d, s * c * c, s * d * c),
        (s * b * b, s * a * a, s * a * b),
        (s * 2 * b * d, s * 2 * a * c, s * (a * d + b * c)),
    )


def act_gl3_form(h, q):
    """The form whose Gram matrix is h·Gram(q)·h^t, i.e. x -> q(x h)."""
    D = q.doubled_gram()
    hd = [[h[i][0] * D[0][j] + h[i][1] * D[1][j] + h[i][2] * D[2][j] for j in range(3)] for i in range(3)]
    m = [[hd[i][0] * h[j][0] + hd[i][1] * h[j][1] + hd[i][2] * h[j][2] for j in range(3)] for i in range(3)]
    return TernaryQuadraticForm.from_doubled_gram(m)


def act_gl3_pair(h, p):
    if not exact.is_unimodular(h):
        raise DomainError("GL3 element must be a unimodular integer matrix")
    return TQFPair(act_gl3_form(h, p.A), act_gl3_form(h, p.B))


def act_gl2_pair(g, p):
    """(A, B) -> (aA + bB, cA + dB)."""
    g = _as_gl2(g)
    A, B = p
    return TQFPair(A.scale(g.a) + B.scale(g.b), A.scale(g.c) + B.scale(g.d))


def _det_with_columns(cols):
    return exact.det(exact.transpose(cols))


def det_cubic_of_pair(p):
    """The binary cubic 4·Det(Ax - By), with rational coefficients if the pair is rational."""
    ga = exact.transpose(p.A.gram())
    gb = exact.transpose(p.B.gram())
    coeffs = [0, 0, 0, 0]
    # multilinear in columns: choose which columns come from -B y
    for k in range(4):
        for cols_b in combinations(range(3), k):
            cols = [gb[j] if j in cols_b else ga[j] for j in range(3)]
            coeffs[k] += (-1) ** k * _det_with_columns(cols)
    out = [rat(4 * Fraction(x)) for x in coeffs]
    if p.A.is_integral and p.B.is_integral:
        assert all(isinstance(x, int) for x in out), "4Det of an integral pair must be integral"
    return BinaryCubicForm(*out)


def eval_ternary(q, v):
    x, y, z = v
    a11, a22, a33, a12, a13, a23 = q.coeffs
    return a11 * x * x + a22 * y * y + a33 * z * z + a12 * x * y + a13 * x * z + a23 * y * z


def polar_ternary(q, v, w):
    """Bilinear form q(v + w) - q(v) - q(w)."""
    m = q.doubled_gram()
    return sum(v[i] * m[i][j] * w[j] for i in range(3) for j in range(3))


def _terms_str(pairs):
    parts = []
    for c, mono in pairs:
        if c == 0:
            continue
        if mono == "":
            s = f"{c}"
        elif c == 1:
            s = mono
        elif c == -1:
            s = f"-{mono}"
        else:
            s = f"{c}{mono}" if isinstance(c, int) else f"({c}){mono}"
        parts.append(s)
    if not parts:
        return "0"
    return " + ".join(parts).replace("+ -", "- ")


def _poly_str(coeffs):
    n = len(coeffs) - 1

    def mono(i):
        px, py = n - i, i
        s = ""
        if px:
            s += "x" if px == 1 else f"x^{px}"
        if py:
            s += "y" if py == 1 else f"y^{py}"
        return s

    return _terms_str((c, mono(i)) for i, c in enumerate(coeffs))
