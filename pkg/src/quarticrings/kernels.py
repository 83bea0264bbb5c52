"""Hot-kernel dispatch: the compiled extension when importable, else pure Python.

Set ``QUARTICRINGS_PURE=1`` to force the Python kernels. The compiled kernels use
64-bit arithmetic, so calls whose worst-case intermediates could overflow are routed
to the arbitrary-precision Python versions.
"""

import os

from . import _pykernels

try:
    if os.environ.get("QUARTICRINGS_PURE"):
        raise ImportError("pure kernels requested")
    from . import _ckernels
except ImportError:
    _ckernels = None

IMPLEMENTATION = "compiled" if _ckernels is not None else "python"
_SAFE = 2**60


def resolvent_bound_ok(mult, phi_omega, phi_theta, bound):
    """Worst-case magnitude of every intermediate in resolvent_violations stays < 2^60."""
    c = max((abs(v) for row in mult for vec in row for v in vec), default=0)
    q = max((abs(v) for v in (*phi_omega, *phi_theta)), default=0)
    b = bound
    prod = 9 * b * b * c  # |xy| coordinates
    lhs = 6 * b * b * prod
    phi = 6 * q * b * b
    return max(lhs, 2 * phi * phi, 2 * lhs) < _SAFE


def resolvent_violations(mult, phi_omega, phi_theta, delta, bound, limit=10, impl=None):
    impl = impl or IMPLEMENTATION
    if impl == "compiled" and _ckernels is not None and resolvent_bound_ok(
        mult, phi_omega, phi_theta, bound
    ):
        return _ckernels.resolvent_violations(mult, phi_omega, phi_theta, delta, bound, limit)
    return _pykernels.resolvent_violations(mult, phi_omega, phi_theta, delta, bound, limit)


def stabilizer_bruteforce(bound, impl=None):
    impl = impl or IMPLEMENTATION
    if impl == "compiled" and _ckernels is not None and bound < 2**10:
        return _ckernels.stabilizer_bruteforce(bound)
    return _pykernels.stabilizer_bruteforce(bound)
