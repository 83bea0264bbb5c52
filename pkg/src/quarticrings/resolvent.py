"""Binary quartic forms <-> pairs (A0, B) of ternary quadratic forms, and resolvent data.

The quartic ring of ``psi(f)`` is R_f with its R/Z basis reordered as
(a1, a2, a3) = (z3', z1, z2); ternary forms attached to it are written in those
a-coordinates. The resolvent quadratic map sends x in R_f/Z to
``B(x)·w + A0(x)·t`` in C/Z (see ``RESOLVENT_CONVENTION``).
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import isqrt

from . import exact, kernels
from .forms import (
    A0,
    BinaryCubicForm,
    BinaryQuarticForm,
    DomainError,
    GL2Elem,
    TernaryQuadraticForm,
    TQFPair,
    act_gl2_cubic_twisted,
    act_gl2_quartic,
    act_gl3_form,
    act_gl3_pair,
    det_cubic_of_pair,
    eval_ternary,
    quartic_invariants,
    rho,
)
from .rings import (
    Report,
    bcf_from_cubic_ring,
    monogenized_cubic,
    quartic_ring_from_bqf,
)


def psi(f):
    f0, f1, f2, f3, f4 = f.coeffs
    return TQFPair(A0, TernaryQuadraticForm(f4, f0, f2, 0, f3, f1))


@dataclass(frozen=True)
class PsiBarClass:
    """A class (A0, B + Z·A0), stored by its unique member with b12 = 0."""

    rep: TQFPair

    def __post_init__(self):
        if self.rep.A != A0:
            raise DomainError("class representative must have first form A0")
        if self.rep.B.a12 != 0:
            raise DomainError("class representative must have b12 = 0")


def psi_bar_class(pair):
    """Canonical class of a pair (A0, B) modulo B -> B + n·A0."""
    if pair.A != A0:
        raise DomainError("first form must be A0; use normalize_pair for general pairs")
    # adding n·A0 shifts b12 by -n
    return PsiBarClass(TQFPair(A0, pair.B + A0.scale(pair.B.a12)))


def psi_bar(f):
    return PsiBarClass(psi(f))


def pullback(B):
    """Restrict B to the conic A0 = 0 parametrised by [u:v] -> [v^2 : u^2 : uv]."""
    b11, b22, b33, b12, b13, b23 = B.coeffs
    return BinaryQuarticForm(b22, b23, b12 + b33, b13, b11)


def psi_prime(f):
    """The GL2-equivariant rational lift: B_f - (f2/3)·A0."""
    _, B = psi(f)
    return TQFPair(A0, B - A0.scale(Fraction(f.f2, 3)))


def resolvent_det_of_psi_prime(f):
    cubic = det_cubic_of_pair(psi_prime(f))
    i, j = quartic_invariants(f)
    expected = BinaryCubicForm(-1, 0, Fraction(i, 3), Fraction(-j, 27))
    assert cubic == expected, f"4Det(psi'(f)) = {cubic}, expected {expected}"
    return cubic


# a-coordinates (z3', z1, z2) as a function of z-coordinates (z1, z2, z3'): x_a = x_z · P
ALPHA_FROM_ZETA = ((0, 1, 0), (0, 0, 1), (1, 0, 0))


def to_alpha(v):
    """R/Z coordinates over (z1, z2, z3') -> coordinates over (z3', z1, z2)."""
    return exact.vec_mat(v, ALPHA_FROM_ZETA)


def form_in_zeta(q):
    """Rewrite a form in a-coordinates as a form in z-coordinates."""
    return act_gl3_form(ALPHA_FROM_ZETA, q)


@dataclass(frozen=True)
class ResolventConvention:
    """Where the A- and B-values of phi land in C/Z = Z·w + Z·t, and the orientation.

    ``a_axis`` is 0 (w) or 1 (t); the other axis receives ``b_sign * B(x)``.
    ``delta`` is the sign with delta(1^z1^z2^z3') = delta · (1^w^t).
    """

    a_axis: int
    a_sign: int
    b_sign: int
    delta: int

    def split(self, a_val, b_val):
        first = self.a_sign * a_val
        second = self.b_sign * b_val
        return (first, second) if self.a_axis == 0 else (second, first)

    def unsplit(self, w, t):
        """Inverse of split: (A-part, B-part) from (w, t) coordinates."""
        first, second = (w, t) if self.a_axis == 0 else (t, w)
        return first * self.a_sign, second * self.b_sign


ALL_CONVENTIONS = tuple(
    ResolventConvention(axis, sa, sb, d)
    for axis, sa, sb, d in product((0, 1), (1, -1), (1, -1), (1, -1))
)

# Frozen by derive_convention (see tests/test_resolvent.py): the only choice
# satisfying both resolvent conditions on the derivation corpus.
RESOLVENT_CONVENTION = ResolventConvention(a_axis=1, a_sign=1, b_sign=1, delta=1)


def phi_det_cubic(phi_w, phi_t):
    """Det(phi) = 4Det(phi_t·x - phi_w·y) for phi = phi_w·w + phi_t·t.

    This is the reading under which a change of basis [w'; t'] = g[w; t] of C/Z turns
    Det(phi) into the twisted action g∘Det(phi).
    """
    return det_cubic_of_pair(TQFPair(phi_t, phi_w))


@dataclass(frozen=True)
class ResolventData:
    Q: object
    C: object
    pair: TQFPair
    convention: ResolventConvention = RESOLVENT_CONVENTION
    phi_forms: tuple = field(init=False, compare=False)

    def __post_init__(self):
        A, B = self.pair
        c = self.convention
        # forms in a-coordinates for the w and t components
        if c.a_axis == 0:
            w, t = A.scale(c.a_sign), B.scale(c.b_sign)
        else:
            w, t = B.scale(c.b_sign), A.scale(c.a_sign)
        object.__setattr__(self, "phi_forms", (w, t))

    @property
    def delta(self):
        return self.convention.delta

    def phi(self, x):
        """phi(x) in (w, t) coordinates, for x given in R/Z z-coordinates (or full coords)."""
        if len(x) == 4:
            x = x[1:]
        xa = to_alpha(x)
        return tuple(eval_ternary(q, xa) for q in self.phi_forms)

    def phi_forms_zeta(self):
        return tuple(form_in_zeta(q) for q in self.phi_forms)


def resolvent_data(f, convention=RESOLVENT_CONVENTION):
    pair = psi(f)
    return ResolventData(
        Q=quartic_ring_from_bqf(f),
        C=monogenized_cubic(det_cubic_of_pair(pair)),
        pair=pair,
        convention=convention,
    )


def check_resolvent_conditions(rd, bound=2, limit=10, impl=None):
    """Check delta(1^x^y^xy) = 1^phi(x)^phi(y) on the box and C = Det(phi)."""
    rep = Report("resolvent-conditions")
    phi_w, phi_t = rd.phi_forms_zeta()
    count, examples = kernels.resolvent_violations(
        rd.Q.mult, phi_w.coeffs, phi_t.coeffs, rd.delta, bound, limit, impl=impl
    )
    rep.cases = (2 * bound + 1) ** 6 + 1
    for x, y in examples:
        rep.violations.append(f"condition1 x={x} y={y}")
    if count > len(examples):
        rep.violations.append(f"condition1 {count - len(examples)} further violations")
    form_c = bcf_from_cubic_ring(rd.C.ring)
    form_phi = phi_det_cubic(*rd.phi_forms)
    if form_c != form_phi:
        rep.violations.append(f"condition2 C={form_c} Det(phi)={form_phi}")
    return rep


def derive_convention(forms, bound=1):
    """All sign/axis conventions under which both resolvent conditions hold on ``forms``."""
    passing = []
    for conv in ALL_CONVENTIONS:
        if all(check_resolvent_conditions(resolvent_data(f, conv), bound=bound).ok for f in forms):
            passing.append(conv)
    return passing


class SearchBoundExceeded(RuntimeError):
    """No isotropic vector was found within the search bound; retry with a larger one."""


def find_isotropic(q, max_bound=200):
    """A primitive integral v != 0 with q(v) = 0, searching |v_x|, |v_y| <= growing box."""
    a11, a22, a33, a12, a13, a23 = q.coeffs
    if a33 == 0:
        return (0, 0, 1)
    bound = 1
    while bound <= max_bound:
        for x in range(-bound, bound + 1):
            for y in range(-bound, bound + 1):
                if max(abs(x), abs(y)) != bound:
                    continue
                # a33 z^2 + (a13 x + a23 y) z + (a11 x^2 + a12 xy + a22 y^2) = 0
                lin = a13 * x + a23 * y
                const = a11 * x * x + a12 * x * y + a22 * y * y
                disc = lin * lin - 4 * a33 * const
                if disc < 0:
                    continue
                s = isqrt(disc)
                if s * s != disc:
                    continue
                for root in (-lin + s, -lin - s):
                    if root % (2 * a33) == 0:
                        v = (x, y, root // (2 * a33))
                        g = exact.vec_gcd(v)
                        return tuple(c // g for c in v)
        bound += 1
    raise SearchBoundExceeded(f"no isotropic vector with |x|,|y| <= {max_bound}")


def reduce_to_A0(A, max_bound=200):
    """h in SL3(Z) with h·Gram(A)·h^t = Gram(A0), for any form with 4·Det = -1."""
    if 4 * exact.det(A.gram()) != -1:
        raise DomainError(f"4·Det of {A} is not -1")
    if A == A0:
        return exact.identity(3)
    v = find_isotropic(A, max_bound)
    h = exact.unimodular_completion(v)
    B = act_gl3_form(h, A)
    # first row isotropic; its pairing with rows 2, 3 is (a12, a13)/2 with gcd 1
    g, s, t = exact.ext_gcd(B.a12, B.a13)
    assert g == 1, "pairing of an isotropic vector must be primitive when 4Det = -1"
    u = ((1, 0, 0), (0, -s, -t), (0, B.a13, -B.a12))
    h = exact.mat_mul(u, h)
    B = act_gl3_form(h, A)
    # now a12 = -1, a13 = 0 and a33 = 1; clear a22 then a23
    h = exact.mat_mul(((1, 0, 0), (B.a22, 1, 0), (0, 0, 1)), h)
    B = act_gl3_form(h, A)
    h = exact.mat_mul(((1, 0, 0), (0, 1, 0), (B.a23, 0, 1)), h)
    if act_gl3_form(h, A) != A0 or exact.det(h) != 1:
        raise AssertionError(f"reduction of {A} did not reach A0")
    return h


def normalize_pair(pair):
    """(h, class) with h·pair = (A0, B) for pairs whose first form has 4·Det = -1."""
    h = reduce_to_A0(pair.A)
    return h, psi_bar_class(act_gl3_pair(h, pair))


def quartic_of_pair(pair):
    """The binary quartic form whose Psi-bar class is GL3-equivalent to ``pair``."""
    _, cls = normalize_pair(pair)
    return pullback(cls.rep.B)


def stabilizer_elements(bound):
    """Integer 3x3 matrices with entries in [-bound, bound], det 1, fixing Gram(A0).

    Rows are filtered by the values the congruence forces on them before combining.
    """
    rng = range(-bound, bound + 1)
    vecs = list(product(rng, repeat=3))
    iso = [v for v in vecs if eval_ternary(A0, v) == 0]
    ones = [v for v in vecs if eval_ternary(A0, v) == 1]
    D = A0.doubled_gram()

    def pair2(r, s):
        return sum(r[i] * D[i][j] * s[j] for i in range(3) for j in range(3))

    out = []
    for r0 in iso:
        for r1 in iso:
            if pair2(r0, r1) != -1:
                continue
            for r2 in ones:
                if pair2(r0, r2) or pair2(r1, r2):
                    continue
                m = (r0, r1, r2)
                if exact.det(m) == 1:
                    out.append(m)
    return out


def gl2_elements(bound):
    rng = range(-bound, bound + 1)
    return [
        GL2Elem(a, b, c, d)
        for a, b, c, d in product(rng, repeat=4)
        if a * d - b * c in (1, -1)
    ]


def stabilizer_scan(bound):
    """Match every bounded element of Stab(A0) ∩ SL3(Z) with some rho(g)."""
    if bound < 1:
        raise DomainError("bound must be >= 1")
    images = {}
    for g in gl2_elements(bound + 1):
        images.setdefault(rho(g), g)
    rep = Report("stab-scan")
    rep.matches = []
    for m in stabilizer_elements(bound):
        rep.cases += 1
        g = images.get(m)
        if g is None:
            rep.violations.append(f"unmatched {m}")
        else:
            rep.matches.append((m, g))
    return rep


def equivariance_check(g, f, rho_g=None):
    """psi_bar(g∘f) == class of rho(g)·psi(f)."""
    lhs = psi_bar(act_gl2_quartic(g, f))
    rhs = psi_bar_class(act_gl3_pair(rho_g or rho(g), psi(f)))
    return lhs == rhs


def n13_integral_shifts(f, kmax=15):
    """Integers k in [-kmax, kmax] with (1 0; k/3 1)∘f integral."""
    out = []
    for k in range(-kmax, kmax + 1):
        t = Fraction(k, 3)
        # (1 0; t 1) acts as F(x + t y, y); det 1
        a, b, c, d = f.coeffs
        coeffs = (
            a,
            b + 3 * a * t,
            c + 2 * b * t + 3 * a * t * t,
            d + c * t + b * t * t + a * t**3,
        )
        if all(Fraction(x).denominator == 1 for x in coeffs):
            out.append(k)
    return out


def shifted_cubic(f, n):
    """(1 0; n 1)∘f under the twisted action."""
    return act_gl2_cubic_twisted(GL2Elem(1, 0, n, 1), f)
