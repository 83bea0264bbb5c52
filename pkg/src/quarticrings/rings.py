"""Based rings of rank 3 and 4 given by integer structure constants.

A based ring of rank n has basis (1, e1, ..., e_{n-1}). ``mult[i][j]`` (0-based over
e1..e_{n-1}) is the coordinate vector of e_{i+1} e_{j+1} in the full basis, constant
term first. Elements are coordinate tuples of length n.
"""

from dataclasses import dataclass, field

from . import exact
from .forms import BinaryCubicForm, DomainError, act_gl2_cubic_twisted, GL2Elem


@dataclass(frozen=True)
class BasedRing:
    rank: int
    mult: tuple

    def __post_init__(self):
        m = tuple(tuple(tuple(int(c) for c in v) for v in row) for row in self.mult)
        n = self.rank
        if n < 2 or len(m) != n - 1 or any(len(r) != n - 1 for r in m):
            raise DomainError(f"structure table has the wrong shape for rank {n}")
        if any(len(v) != n for r in m for v in r):
            raise DomainError("each product must have one coordinate per basis element")
        for i in range(n - 1):
            for j in range(i):
                if m[i][j] != m[j][i]:
                    raise DomainError(f"table is not symmetric at (e{j + 1}, e{i + 1})")
        object.__setattr__(self, "mult", m)

    @classmethod
    def from_products(cls, rank, products):
        """Build from a dict {(i, j): coords} over 1-based i <= j."""
        m = [[None] * (rank - 1) for _ in range(rank - 1)]
        for (i, j), v in products.items():
            m[i - 1][j - 1] = m[j - 1][i - 1] = tuple(v)
        return cls(rank, tuple(tuple(r) for r in m))

    def products(self):
        """Upper-triangular products in row-major order: ((i, j), coords)."""
        n = self.rank
        return [((i + 1, j + 1), self.mult[i][j]) for i in range(n - 1) for j in range(i, n - 1)]

    def basis(self, i):
        v = [0] * self.rank
        v[i] = 1
        return tuple(v)

    def mul(self, x, y):
        n = self.rank
        out = [0] * n
        x0, y0 = x[0], y[0]
        for k in range(n):
            out[k] += x0 * y[k]
        for k in range(1, n):
            out[k] += y0 * x[k]
        for i in range(1, n):
            xi = x[i]
            if not xi:
                continue
            row = self.mult[i - 1]
            for j in range(1, n):
                c = xi * y[j]
                if c:
                    v = row[j - 1]
                    for k in range(n):
                        out[k] += c * v[k]
        return tuple(out)

    def __str__(self):
        return " ".join(f"e{i}*e{j}={_elem_str(v)}" for (i, j), v in self.products())


def _elem_str(v, names=None):
    names = names or ["1"] + [f"e{i}" for i in range(1, len(v))]
    parts = []
    for c, name in zip(v, names):
        if c == 0:
            continue
        if name == "1":
            parts.append(str(c))
        elif c == 1:
            parts.append(name)
        elif c == -1:
            parts.append("-" + name)
        else:
            parts.append(f"{c}{name}")
    if not parts:
        return "0"
    return "+".join(parts).replace("+-", "-")


QUARTIC_NAMES = ("1", "z1", "z2", "z3'")
CUBIC_NAMES = ("1", "w", "t")


def format_elem(v, names):
    return _elem_str(v, list(names))


@dataclass(frozen=True)
class MonogenizedCubic:
    form: BinaryCubicForm
    ring: BasedRing = field(compare=False)

    def __post_init__(self):
        if self.form.a != -1:
            raise DomainError("a monogenized cubic needs x^3 coefficient -1")


def quartic_ring_from_bqf(f):
    """The based quartic ring R_f on (1, z1, z2, z3'), z3' = z3 + f3."""
    f0, f1, f2, f3, f4 = f.coeffs
    return BasedRing.from_products(
        4,
        {
            (1, 1): (0, -f1, f0, 0),
            (1, 2): (-f0 * f3, -f2, 0, f0),
            (1, 3): (-f0 * f4, 0, 0, 0),
            (2, 2): (-f1 * f3 - f0 * f4, -f3, -f2, f1),
            (2, 3): (-f1 * f4, -f4, 0, 0),
            (3, 3): (-f2 * f4, 0, -f4, f3),
        },
    )


def cubic_ring_from_bcf(f):
    """The based cubic ring on (1, w, t) with wt = -ad, w^2 = -ac + bw - at, t^2 = -bd + dw - ct."""
    a, b, c, d = f.coeffs
    return BasedRing.from_products(
        3,
        {
            (1, 1): (-a * c, b, -a),
            (1, 2): (-a * d, 0, 0),
            (2, 2): (-b * d, d, -c),
        },
    )


def associativity_defects(r):
    """All basis triples (i, j, k) with (e_i e_j) e_k != e_i (e_j e_k)."""
    n = r.rank
    defects = []
    for i in range(1, n):
        for j in range(1, n):
            eij = r.mult[i - 1][j - 1]
            for k in range(1, n):
                ek = r.basis(k)
                ejk = r.mult[j - 1][k - 1]
                if r.mul(eij, ek) != r.mul(r.basis(i), ejk):
                    defects.append((i, j, k))
    return defects


@dataclass
class Report:
    """Outcome of a verification: empty ``violations`` means pass."""

    name: str
    cases: int = 0
    violations: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.violations

    def __bool__(self):
        return self.ok


def verify_ring_axioms(r):
    rep = Report("ring-axioms", cases=(r.rank - 1) ** 3)
    for i, j, k in associativity_defects(r):
        rep.violations.append(f"(e{i}e{j})e{k} != e{i}(e{j}e{k})")
    return rep


def rebase(r, matrix, shifts=None):
    """The same ring on the basis e'_i = sum_j matrix[i][j] e_j + shifts[i].

    ``matrix`` is a unimodular (n-1)x(n-1) integer matrix acting on R/Z.
    """
    n = r.rank
    shifts = shifts or (0,) * (n - 1)
    if not exact.is_unimodular(matrix):
        raise DomainError("change of basis must be unimodular")
    inv = exact.inverse(matrix)
    new = [(shifts[i],) + tuple(matrix[i]) for i in range(n - 1)]

    def to_new(v):
        d = exact.vec_mat(v[1:], inv)
        c0 = v[0] - sum(d[k] * shifts[k] for k in range(n - 1))
        return (c0,) + tuple(d)

    products = {}
    for i in range(n - 1):
        for j in range(i, n - 1):
            products[(i + 1, j + 1)] = to_new(r.mul(new[i], new[j]))
    return BasedRing.from_products(n, products)


def multiplication_matrix(r, x):
    """Rows are the coordinates of x·b for each basis element b."""
    return tuple(r.mul(x, r.basis(i)) for i in range(r.rank))


def trace(r, x):
    m = multiplication_matrix(r, x)
    return sum(m[i][i] for i in range(r.rank))


def disc_ring(r):
    n = r.rank
    basis_traces = [trace(r, r.basis(i)) for i in range(n)]

    def tr(v):
        return sum(c * t for c, t in zip(v, basis_traces))

    gram = [[tr(r.mul(r.basis(i), r.basis(j))) for j in range(n)] for i in range(n)]
    return exact.det(exact.as_matrix(gram))


def normalize_cubic_lifts(r):
    """Translate the lifts of (w, t) so that w·t lies in Z."""
    if r.rank != 3:
        raise DomainError("expected a rank-3 ring")
    _, p, q = r.mult[0][1]
    return rebase(r, exact.identity(2), (-q, -p))


def bcf_from_cubic_ring(r):
    """Inverse of cubic_ring_from_bcf on based cubic rings."""
    if r.rank != 3:
        raise DomainError("expected a rank-3 ring")
    defects = associativity_defects(r)
    if defects:
        raise DomainError(f"table is not associative; first failing triple {defects[0]}")
    n = normalize_cubic_lifts(r)
    (c_ww, b, minus_a), (c_wt, _, _), (c_tt, d, minus_c) = n.mult[0][0], n.mult[0][1], n.mult[1][1]
    a, c = -minus_a, -minus_c
    f = BinaryCubicForm(a, b, c, d)
    if (c_ww, c_wt, c_tt) != (-a * c, -a * d, -b * d):
        raise DomainError("normalized table does not come from a binary cubic form")
    return f


def canonicalize_monogenized(f):
    """Representative of the N-orbit of f with x^2y coefficient in {0, 1, 2}.

    Returns (form, n) with (1 0; n 1)∘f equal to the representative.
    """
    if f.a != -1:
        raise DomainError(f"x^3 coefficient must be -1, got {f.a}")
    # (1 0; n 1) shifts b by -3n
    n = (f.b - f.b % 3) // 3
    return act_gl2_cubic_twisted(GL2Elem(1, 0, n, 1), f), n


def is_monogenized_based(f):
    return f.a == -1


def monogenized_cubic(f):
    return MonogenizedCubic(f, cubic_ring_from_bcf(f))

