"""Pure-Python hot kernels; same algorithms and signatures as ``_ckernels.pyx``."""

from itertools import product


def _box(bound):
    return list(product(range(-bound, bound + 1), repeat=3))


def _form(q, v):
    x, y, z = v
    return q[0] * x * x + q[1] * y * y + q[2] * z * z + q[3] * x * y + q[4] * x * z + q[5] * y * z


def resolvent_violations(mult, phi_omega, phi_theta, delta, bound, limit=10):
    """Count (x, y) in the coordinate box with delta·det(x, y, xy) != det(phi(x), phi(y)).

    ``mult`` is the rank-4 structure table (3x3 products, constant first), ``x`` and
    ``y`` range over R/Z coordinates in [-bound, bound]^3. Returns (count, examples).
    """
    box = _box(bound)
    pw = [_form(phi_omega, v) for v in box]
    pt = [_form(phi_theta, v) for v in box]
    m = [[mult[i][j][1:] for j in range(3)] for i in range(3)]
    count = 0
    examples = []
    for ix, x in enumerate(box):
        x0, x1, x2 = x
        # xy = y·L with L[j][k] = sum_i x_i m[i][j][k]
        L = [
            [x0 * m[0][j][k] + x1 * m[1][j][k] + x2 * m[2][j][k] for k in range(3)]
            for j in range(3)
        ]
        (l00, l01, l02), (l10, l11, l12), (l20, l21, l22) = L
        pwx = pw[ix]
        ptx = pt[ix]
        for iy, (y0, y1, y2) in enumerate(box):
            p0 = y0 * l00 + y1 * l10 + y2 * l20
            p1 = y0 * l01 + y1 * l11 + y2 * l21
            p2 = y0 * l02 + y1 * l12 + y2 * l22
            lhs = (
                p0 * (x1 * y2 - x2 * y1)
                + p1 * (x2 * y0 - x0 * y2)
                + p2 * (x0 * y1 - x1 * y0)
            )
            rhs = pwx * pt[iy] - ptx * pw[iy]
            if delta * lhs != rhs:
                count += 1
                if len(examples) < limit:
                    examples.append((x, (y0, y1, y2)))
    return count, examples


def stabilizer_bruteforce(bound):
    """All 3x3 integer matrices, entries in [-bound, bound], det 1, fixing Gram(A0)."""
    rng = range(-bound, bound + 1)
    rows = list(product(rng, repeat=3))

    def q(r):
        # doubled A0 form: r·D·r^t with D = [[0,-1,0],[-1,0,0],[0,0,2]]
        return -2 * r[0] * r[1] + 2 * r[2] * r[2]

    def b(r, s):
        return -(r[0] * s[1] + r[1] * s[0]) + 2 * r[2] * s[2]

    found = []
    for r0 in rows:
        q0 = q(r0)
        for r1 in rows:
            if q0 != 0 or q(r1) != 0 or b(r0, r1) != -1:
                continue
            for r2 in rows:
                if q(r2) != 2 or b(r0, r2) != 0 or b(r1, r2) != 0:
                    continue
                d = (
                    r0[0] * (r1[1] * r2[2] - r1[2] * r2[1])
                    - r0[1] * (r1[0] * r2[2] - r1[2] * r2[0])
                    + r0[2] * (r1[0] * r2[1] - r1[1] * r2[0])
                )
                if d == 1:
                    found.append(r0 + r1 + r2)
    return found
