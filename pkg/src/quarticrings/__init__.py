"""Binary quartic forms, quartic rings and their monogenic cubic resolvents.

All arithmetic is exact (Python integers and ``fractions.Fraction``).
"""

from .forms import (
    A0,
    GENERATORS,
    BinaryCubicForm,
    BinaryQuarticForm,
    DomainError,
    GL2Elem,
    TernaryQuadraticForm,
    TQFPair,
    act_gl2_cubic_twisted,
    act_gl2_pair,
    act_gl2_quartic,
    act_gl3_pair,
    det_cubic_of_pair,
    disc_cubic,
    disc_quartic,
    eval_ternary,
    quartic_invariants,
    rho,
    word_element,
)
from .kernels import IMPLEMENTATION
from .records import RecordError, format_record, parse_record
from .resolvent import (
    RESOLVENT_CONVENTION,
    check_resolvent_conditions,
    equivariance_check,
    psi,
    psi_bar,
    psi_prime,
    pullback,
    reduce_to_A0,
    resolvent_data,
    resolvent_det_of_psi_prime,
    stabilizer_scan,
)
from .rings import (
    BasedRing,
    Report,
    bcf_from_cubic_ring,
    canonicalize_monogenized,
    cubic_ring_from_bcf,
    disc_ring,
    is_monogenized_based,
    quartic_ring_from_bqf,
    trace,
    verify_ring_axioms,
)
from .sweeps import SuiteReport, enumerate_forms, run_suite
from .witness import check_witness, orbit_witness

__all__ = [
    "A0",
    "GENERATORS",
    "BinaryCubicForm",
    "BinaryQuarticForm",
    "DomainError",
    "GL2Elem",
    "TernaryQuadraticForm",
    "TQFPair",
    "act_gl2_cubic_twisted",
    "act_gl2_pair",
    "act_gl2_quartic",
    "act_gl3_pair",
    "det_cubic_of_pair",
    "disc_cubic",
    "disc_quartic",
    "eval_ternary",
    "quartic_invariants",
    "rho",
    "word_element",
    "RESOLVENT_CONVENTION",
    "check_resolvent_conditions",
    "equivariance_check",
    "psi",
    "psi_bar",
    "psi_prime",
    "pullback",
    "reduce_to_A0",
    "resolvent_data",
    "resolvent_det_of_psi_prime",
    "stabilizer_scan",
    "BasedRing",
    "Report",
    "bcf_from_cubic_ring",
    "canonicalize_monogenized",
    "cubic_ring_from_bcf",
    "disc_ring",
    "is_monogenized_based",
    "quartic_ring_from_bqf",
    "trace",
    "verify_ring_axioms",
    "IMPLEMENTATION",
    "RecordError",
    "format_record",
    "parse_record",
    "SuiteReport",
    "enumerate_forms",
    "run_suite",
    "check_witness",
    "orbit_witness",
]

__version__ = "0.1.0"
