# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels. Fixed-width arithmetic: callers must respect ``SAFE_MAGNITUDE``."""

from libc.stdlib cimport malloc, free

# Largest |intermediate| a caller may feed in; see kernels.resolvent_bound_ok.
SAFE_MAGNITUDE = 2 ** 60


cdef inline long long _form(long long* q, long long x, long long y, long long z) nogil:
    return q[0] * x * x + q[1] * y * y + q[2] * z * z + q[3] * x * y + q[4] * x * z + q[5] * y * z


def resolvent_violations(mult, phi_omega, phi_theta, long long delta, long long bound, int limit=10):
    cdef long long m[3][3][3]
    cdef long long qw[6]
    cdef long long qt[6]
    cdef int i, j, k, ix, iy
    cdef long long n = 2 * bound + 1
    cdef int size = <int>(n * n * n)
    cdef long long x0, x1, x2, y0, y1, y2, p0, p1, p2, lhs, rhs, pwx, ptx
    cdef long long L[3][3]
    cdef long long count = 0
    examples = []

    for i in range(3):
        for j in range(3):
            for k in range(3):
                m[i][j][k] = mult[i][j][k + 1]
    for i in range(6):
        qw[i] = phi_omega[i]
        qt[i] = phi_theta[i]

    cdef long long* bx = <long long*>malloc(3 * size * sizeof(long long))
    cdef long long* pw = <long long*>malloc(size * sizeof(long long))
    cdef long long* pt = <long long*>malloc(size * sizeof(long long))
    if bx == NULL or pw == NULL or pt == NULL:
        free(bx); free(pw); free(pt)
        raise MemoryError()
    try:
        i = 0
        for x0 in range(-bound, bound + 1):
            for x1 in range(-bound, bound + 1):
                for x2 in range(-bound, bound + 1):
                    bx[3 * i] = x0
                    bx[3 * i + 1] = x1
                    bx[3 * i + 2] = x2
                    pw[i] = _form(qw, x0, x1, x2)
                    pt[i] = _form(qt, x0, x1, x2)
                    i += 1

        for ix in range(size):
            x0 = bx[3 * ix]
            x1 = bx[3 * ix + 1]
            x2 = bx[3 * ix + 2]
            for j in range(3):
                for k in range(3):
                    L[j][k] = x0 * m[0][j][k] + x1 * m[1][j][k] + x2 * m[2][j][k]
            pwx = pw[ix]
            ptx = pt[ix]
            for iy in range(size):
                y0 = bx[3 * iy]
                y1 = bx[3 * iy + 1]
                y2 = bx[3 * iy + 2]
                p0 = y0 * L[0][0] + y1 * L[1][0] + y2 * L[2][0]
                p1 = y0 * L[0][1] + y1 * L[1][1] + y2 * L[2][1]
                p2 = y0 * L[0][2] + y1 * L[1][2] + y2 * L[2][2]
                lhs = (p0 * (x1 * y2 - x2 * y1)
                       + p1 * (x2 * y0 - x0 * y2)
                       + p2 * (x0 * y1 - x1 * y0))
                rhs = pwx * pt[iy] - ptx * pw[iy]
                if delta * lhs != rhs:
                    count += 1
                    if len(examples) < limit:
                        examples.append(((x0, x1, x2), (y0, y1, y2)))
    finally:
        free(bx)
        free(pw)
        free(pt)
    return count, examples


def stabilizer_bruteforce(long long bound):
    cdef long long a, b, c, d, e, f, g, h, k
    found = []
    for a in range(-bound, bound + 1):
        for b in range(-bound, bound + 1):
            for c in range(-bound, bound + 1):
                if -2 * a * b + 2 * c * c != 0:
                    continue
                for d in range(-bound, bound + 1):
                    for e in range(-bound, bound + 1):
                        for f in range(-bound, bound + 1):
                            if -2 * d * e + 2 * f * f != 0:
                                continue
                            if -(a * e + b * d) + 2 * c * f != -1:
                                continue
                            for g in range(-bound, bound + 1):
                                for h in range(-bound, bound + 1):
                                    for k in range(-bound, bound + 1):
                                        if -2 * g * h + 2 * k * k != 2:
                                            continue
                                        if -(a * h + b * g) + 2 * c * k != 0:
                                            continue
                                        if -(d * h + e * g) + 2 * f * k != 0:
                                            continue
                                        if (a * (e * k - f * h) - b * (d * k - f * g)
                                                + c * (d * h - e * g)) == 1:
                                            found.append((a, b, c, d, e, f, g, h, k))
    return found
