"""Certificates that f and g∘f give isomorphic (Q, C) with the same monogenization.

``orbit_witness`` assembles the explicit bases; ``check_witness`` rebuilds every ring
from the forms and re-verifies each claim without reusing the witness' arithmetic.
"""

from dataclasses import dataclass
from itertools import product

from . import exact
from .forms import (
    A0,
    act_gl2_quartic,
    act_gl3_form,
    det_cubic_of_pair,
    word_element,
    rho,
)
from .records import format_record
from .resolvent import ALPHA_FROM_ZETA, psi, resolvent_data
from .rings import (
    Report,
    cubic_ring_from_bcf,
    quartic_ring_from_bqf,
    rebase,
)


@dataclass(frozen=True)
class OrbitWitness:
    f: object
    word: str
    g: object
    f_image: object
    h: tuple  # rho(g), acting on a-coordinates
    shift: int  # h·B_f·h^t = B_{g∘f} + shift·A0
    quartic_matrix: tuple  # basis of Q(g∘f)/Z inside Q(f)/Z, z-coordinates
    quartic_shifts: tuple
    cubic_matrix: tuple  # [w'; t'] = N [w; t]
    cubic_shifts: tuple

    def lines(self):
        def flat(m):
            return " ".join(str(x) for r in m for x in r)

        return [
            f"f={format_record(self.f)}",
            f"word={self.word or '-'}",
            f"g={format_record(self.g)}",
            f"f_image={format_record(self.f_image)}",
            f"rho={format_record(self.h)}",
            f"a0_shift={self.shift}",
            f"quartic_basis={flat(self.quartic_matrix)}",
            f"quartic_lifts={' '.join(map(str, self.quartic_shifts))}",
            f"cubic_basis={flat(self.cubic_matrix)}",
            f"cubic_lifts={' '.join(map(str, self.cubic_shifts))}",
        ]


def _zeta_matrix(h):
    p = ALPHA_FROM_ZETA
    return exact.mat_mul(exact.mat_mul(p, h), exact.inverse(p))


def _lift_shifts(base, target, matrix):
    """Constants c with rebase(base, matrix, c) == target, read off mixed products."""
    r0 = rebase(base, matrix)
    n = base.rank - 1
    shifts = []
    for j in range(n):
        i = (j + 1) % n
        # coefficient of e'_i in e'_i e'_j gains c_j
        shifts.append(target.mult[i][j][i + 1] - r0.mult[i][j][i + 1])
    return tuple(shifts)


def orbit_witness(f, word=""):
    g = word_element(word)
    f_image = act_gl2_quartic(g, f)
    h = rho(g)
    B, B_img = psi(f).B, psi(f_image).B
    moved = act_gl3_form(h, B)
    shift = -moved.a12  # B_img has a12 = 0 and A0 has a12 = -1
    assert moved == B_img + A0.scale(shift)

    hz = _zeta_matrix(h)
    Q, Q_img = quartic_ring_from_bqf(f), quartic_ring_from_bqf(f_image)
    q_shifts = _lift_shifts(Q, Q_img, hz)

    N = ((1, 0), (shift, 1))
    C = cubic_ring_from_bcf(det_cubic_of_pair(psi(f)))
    C_img = cubic_ring_from_bcf(det_cubic_of_pair(psi(f_image)))
    c_shifts = _lift_shifts(C, C_img, N)
    return OrbitWitness(f, word, g, f_image, h, shift, hz, q_shifts, N, c_shifts)


def check_witness(w, box=1):
    """Re-derive both sides from the forms and check every claim of the certificate."""
    rep = Report("orbit-witness")

    def need(cond, msg):
        rep.cases += 1
        if not cond:
            rep.violations.append(msg)

    g = word_element(w.word)
    need(g == w.g, "g is not the product of the word")
    f_img = act_gl2_quartic(w.g, w.f)
    need(f_img == w.f_image, "f_image != g∘f")
    need(w.h == rho(w.g), "h != rho(g)")
    need(exact.det(w.quartic_matrix) == 1, "quartic change of basis is not in SL3")
    need(
        w.quartic_matrix == _zeta_matrix(w.h),
        "quartic change of basis is not rho(g) in z-coordinates",
    )
    need(w.cubic_matrix[0] == (1, 0), "cubic change of basis moves the generator w")

    Q_f = quartic_ring_from_bqf(w.f)
    Q_img = quartic_ring_from_bqf(f_img)
    need(rebase(Q_f, w.quartic_matrix, w.quartic_shifts) == Q_img, "Q(g∘f) is not the rebased Q(f)")

    C_f = cubic_ring_from_bcf(det_cubic_of_pair(psi(w.f)))
    C_img = cubic_ring_from_bcf(det_cubic_of_pair(psi(f_img)))
    need(rebase(C_f, w.cubic_matrix, w.cubic_shifts) == C_img, "C(g∘f) is not the rebased C(f)")

    # the quadratic maps commute with the two isomorphisms
    rd, rd_img = resolvent_data(w.f), resolvent_data(f_img)
    n_inv = exact.inverse(w.cubic_matrix)
    for x in product(range(-box, box + 1), repeat=3):
        x_in_f = exact.vec_mat(x, w.quartic_matrix)
        lhs = rd_img.phi(x)
        rhs = exact.vec_mat(rd.phi(x_in_f), n_inv)
        need(lhs == rhs, f"phi mismatch at x={x}")
    return rep
