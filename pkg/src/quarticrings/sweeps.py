"""Exhaustive and seeded sweeps over desk-scale boxes, with optional sharded workers.

Each suite is a list of items plus a check that returns failure messages for one item.
Items are split into contiguous shards, so the merged report is identical for any
``jobs``.
"""

import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from itertools import product

from . import exact
from .forms import (
    A0,
    GENERATORS,
    BinaryCubicForm,
    BinaryQuarticForm,
    DomainError,
    TernaryQuadraticForm,
    act_gl2_cubic_twisted,
    act_gl2_quartic,
    act_gl3_form,
    act_gl3_pair,
    det_cubic_of_pair,
    disc_cubic,
    disc_quartic,
    quartic_invariants,
    rho,
    word_element,
)
from .oracles import binary_form_discriminant
from .records import format_record
from .resolvent import (
    check_resolvent_conditions,
    equivariance_check,
    gl2_elements,
    n13_integral_shifts,
    psi,
    psi_prime,
    pullback,
    reduce_to_A0,
    resolvent_data,
    stabilizer_elements,
)
from .rings import (
    bcf_from_cubic_ring,
    cubic_ring_from_bcf,
    disc_ring,
    normalize_cubic_lifts,
    quartic_ring_from_bqf,
    rebase,
    verify_ring_axioms,
)
from .witness import check_witness, orbit_witness

_KINDS = {"bqf": (BinaryQuarticForm, 5), "bcf": (BinaryCubicForm, 4), "tqf": (TernaryQuadraticForm, 6)}
_ALIASES = {"quartic": "bqf", "quartics": "bqf", "cubic": "bcf", "cubics": "bcf", "ternary": "tqf"}


def enumerate_forms(kind, bound):
    """All integral forms of ``kind`` with |coeff| <= bound, in lexicographic order."""
    kind = _ALIASES.get(kind, kind)
    if kind not in _KINDS:
        raise DomainError(f"unknown form kind {kind!r}")
    if bound < 0:
        raise DomainError("bound must be >= 0")
    cls, n = _KINDS[kind]
    for coeffs in product(range(-bound, bound + 1), repeat=n):
        yield cls(*coeffs)


def load_bounds(path=None):
    """Pinned bounds from the packaged config, with RESOLVENT_SEED overriding ``seed``."""
    if path is None:
        text = resources.files(__package__).joinpath("pinned_bounds.cfg").read_text()
    else:
        with open(path) as fh:
            text = fh.read()
    out = {}
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, _, value = line.partition("=")
        out[key.strip()] = int(value)
    if os.environ.get("RESOLVENT_SEED"):
        out["seed"] = int(os.environ["RESOLVENT_SEED"])
    return out


PINNED = load_bounds()


def gl2_words(max_len, alphabet=tuple(GENERATORS)):
    """All words over the generators of length <= max_len, shortest first."""
    out = []
    for n in range(max_len + 1):
        out.extend("".join(w) for w in product(alphabet, repeat=n))
    return out


@dataclass
class SuiteReport:
    suite: str
    cases: int = 0
    failures: list = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self):
        return not self.failures

    def lines(self):
        head = [f"suite={self.suite}", f"cases={self.cases}", f"failures={len(self.failures)}"]
        return head + [f"failure={msg}" for msg in self.failures]


def _fail(item, msg):
    return f"{format_record(item)} :: {msg}"


# suite bodies: items(bounds) -> list, check(item, bounds, ctx) -> list of failures


def _quartics(b):
    return list(enumerate_forms("bqf", b["box"]))


def _check_disc_chain(f, b, ctx):
    d_ring = disc_ring(quartic_ring_from_bqf(f))
    d_form = disc_quartic(f)
    d_cubic = disc_cubic(det_cubic_of_pair(psi(f)))
    if d_ring == d_form == d_cubic:
        return []
    return [_fail(f, f"disc ring={d_ring} form={d_form} cubic={d_cubic}")]


def _check_ring_validity(f, b, ctx):
    rep = verify_ring_axioms(quartic_ring_from_bqf(f))
    return [_fail(f, v) for v in rep.violations]


def _equivariance_ctx(b):
    return [(w, word_element(w)) for w in gl2_words(b["words"])]


@lru_cache(maxsize=None)
def _rho_cached(g):
    return rho(g)


def _check_equivariance(f, b, words):
    out = []
    for w, g in words:
        if not equivariance_check(g, f, _rho_cached(g)):
            out.append(_fail(f, f"word={w or '-'}"))
    return out


def _rho_items(b):
    return gl2_elements(b["rho_entries"])


def _check_rho(g1, b, elems):
    out = []
    r1 = rho(g1)
    if exact.det(r1) != 1:
        out.append(_fail(g1, "det rho(g) != 1"))
    if act_gl3_form(r1, A0) != A0:
        out.append(_fail(g1, "rho(g) does not fix A0"))
    for g2 in elems:
        if rho(g1 @ g2) != exact.mat_mul(r1, rho(g2)):
            out.append(_fail(g1, f"rho(g1 g2) != rho(g1) rho(g2) for g2={format_record(g2)}"))
    return out


def _stab_items(b):
    return stabilizer_elements(b["stab_bound"])


def _stab_ctx(b):
    images = {}
    for g in gl2_elements(b["stab_bound"] + 1):
        images.setdefault(rho(g), g)
    return images


def _check_stab(m, b, images):
    return [] if m in images else [f"{format_record(m)} :: not rho(g) for any bounded g"]


def _check_inverse(f, b, ctx):
    out = []
    B = psi(f).B
    if pullback(B) != f:
        out.append(_fail(f, f"pullback(B_f) = {pullback(B)}"))
    for n in range(-b["shift_range"], b["shift_range"] + 1):
        if pullback(B + A0.scale(n)) != f:
            out.append(_fail(f, f"pullback(B_f + {n} A0) != f"))
    if pullback(A0) != BinaryQuarticForm(0, 0, 0, 0, 0):
        out.append(_fail(f, "pullback(A0) != 0"))
    return out


def _check_psi_prime_det(f, b, ctx):
    I, J = quartic_invariants(f)
    want = BinaryCubicForm(-1, 0, Fraction(I, 3), Fraction(-J, 27))
    got = det_cubic_of_pair(psi_prime(f))
    return [] if got == want else [_fail(f, f"4Det(A0 x - B' y) = {got}, expected {want}")]


def _cubics(b):
    return list(enumerate_forms("bcf", b["cubic_box"]))


def _check_round_trip(f, b, ctx):
    back = bcf_from_cubic_ring(cubic_ring_from_bcf(f))
    return [] if back == f else [_fail(f, f"round trip gave {format_record(back)}")]


def _check_resolvent(f, b, ctx):
    rep = check_resolvent_conditions(resolvent_data(f), bound=b["coord_box"])
    return [_fail(f, v) for v in rep.violations]


def _mono_items(b):
    box = [("box", f) for f in enumerate_forms("bqf", b["box"])]
    r = range(-b["family_box"], b["family_box"] + 1)
    fam = [("family", BinaryQuarticForm(0, -1, x, y, z)) for x, y, z in product(r, repeat=3)]
    return box + fam


def _check_mono(item, b, ctx):
    kind, f = item
    cubic = det_cubic_of_pair(psi(f))
    if kind == "box":
        return [] if cubic.a == -1 else [_fail(f, f"det cubic {format_record(cubic)} has a != -1")]
    want = BinaryCubicForm(-1, f.f2, f.f3, f.f4)
    return [] if cubic == want else [_fail(f, f"det cubic {format_record(cubic)} != {format_record(want)}")]


def _oracle_items(b):
    return [f for f in enumerate_forms("bqf", b["box"]) if f.f0 != 0]


def _check_oracle(f, b, ctx):
    d, o = disc_quartic(f), binary_form_discriminant(f.coeffs)
    return [] if d == o else [_fail(f, f"disc={d} oracle={o}")]


def random_unimodular(rng, entries, n=3):
    """Uniform rejection sample of an integer matrix with det +-1; det -1 is flipped to 1."""
    r = range(-entries, entries + 1)
    while True:
        m = tuple(tuple(rng.choice(r) for _ in range(n)) for _ in range(n))
        d = exact.det(m)
        if d == 1:
            return m
        if d == -1:
            return (tuple(-x for x in m[0]),) + m[1:]


def _reduce_items(b):
    rng = random.Random(b["seed"])
    return [random_unimodular(rng, b["reduce_entries"]) for _ in range(b["reduce_samples"])]


def _check_reduce(m, b, ctx):
    A = act_gl3_form(m, A0)
    try:
        h = reduce_to_A0(A)
    except Exception as exc:  # report, do not abort the sweep
        return [f"{format_record(A)} :: {type(exc).__name__}: {exc}"]
    if act_gl3_form(h, A) != A0 or exact.det(h) != 1:
        return [f"{format_record(A)} :: h·A·h^t != A0"]
    return []


def _check_psi_prime_equiv(f, b, ctx):
    out = []
    for name, g in GENERATORS.items():
        lhs = act_gl3_pair(rho(g), psi_prime(f))
        rhs = psi_prime(act_gl2_quartic(g, f))
        if lhs != rhs:
            out.append(_fail(f, f"generator {name}"))
    return out


def _check_invariants(f, b, ctx):
    out = []
    ij = quartic_invariants(f)
    for name, g in GENERATORS.items():
        if quartic_invariants(act_gl2_quartic(g, f)) != ij:
            out.append(_fail(f, f"(I, J) moved by generator {name}"))
    return out


def _n13_items(b):
    r = range(-b["family_box"], b["family_box"] + 1)
    return [BinaryCubicForm(-1, x, y, z) for x, y, z in product(r, repeat=3)]


def _check_n13(f, b, ctx):
    ks = n13_integral_shifts(f, b["n13_kmax"])
    if any(k % 3 for k in ks):
        return [_fail(f, f"non-integral shift keeps the form integral: {ks}")]
    return []


def _check_cubic_equiv(f, b, ctx):
    out = []
    ring = cubic_ring_from_bcf(f)
    for name, g in GENERATORS.items():
        moved = normalize_cubic_lifts(rebase(ring, g.matrix))
        if moved != cubic_ring_from_bcf(act_gl2_cubic_twisted(g, f)):
            out.append(_fail(f, f"generator {name}"))
    return out


def _witness_items(b):
    rng = random.Random(b["seed"] + 1)
    forms = list(enumerate_forms("bqf", b["box"]))
    alphabet = tuple(GENERATORS)
    out = []
    for _ in range(b["witness_samples"]):
        f = rng.choice(forms)
        word = "".join(rng.choice(alphabet) for _ in range(b["witness_word_length"]))
        out.append((f, word))
    return out


def _check_witness(item, b, ctx):
    f, word = item
    rep = check_witness(orbit_witness(f, word))
    return [_fail(f, f"word={word}: {v}") for v in rep.violations]


@dataclass(frozen=True)
class Suite:
    items: object
    check: object
    context: object = None
    description: str = ""


SUITES = {
    "discriminant-chain": Suite(_quartics, _check_disc_chain, None, "disc R_f = disc f = disc of the determinant cubic"),
    "ring-validity": Suite(_quartics, _check_ring_validity, None, "R_f is associative"),
    "equivariance": Suite(_quartics, _check_equivariance, _equivariance_ctx, "psi_bar(g∘f) = rho(g)·psi_bar(f)"),
    "rho-homomorphism": Suite(_rho_items, _check_rho, _rho_items, "rho is a homomorphism into Stab(A0)"),
    "stab-scan": Suite(_stab_items, _check_stab, _stab_ctx, "bounded Stab(A0) lies in the image of rho"),
    "inverse-law": Suite(_quartics, _check_inverse, None, "pullback inverts psi modulo A0"),
    "psi-prime-det": Suite(_quartics, _check_psi_prime_det, None, "4Det(A0 x - B' y) = -x^3 + I/3 xy^2 - J/27 y^3"),
    "cubic-round-trip": Suite(_cubics, _check_round_trip, None, "based cubic rings <-> binary cubic forms"),
    "resolvent-axioms": Suite(_quartics, _check_resolvent, None, "resolvent conditions (1) and (2)"),
    "monogenicity": Suite(_mono_items, _check_mono, None, "the determinant cubic is monogenized"),
    "disc-oracle": Suite(_oracle_items, _check_oracle, None, "disc_quartic against a resultant oracle"),
    "reduce-a0": Suite(_reduce_items, _check_reduce, None, "reduce_to_A0 on random conjugates of A0"),
    "psi-prime-equivariance": Suite(_quartics, _check_psi_prime_equiv, None, "psi' is GL2-equivariant on the nose"),
    "invariants": Suite(_quartics, _check_invariants, None, "I and J are GL2(Z)-invariant"),
    "n13-injectivity": Suite(_n13_items, _check_n13, None, "only integral N-shifts keep a monogenized cubic integral"),
    "cubic-equivariance": Suite(_cubics, _check_cubic_equiv, None, "cubic rings follow the twisted action"),
    "orbit-witness": Suite(_witness_items, _check_witness, None, "random orbit certificates re-validate"),
}

ACCEPTANCE_SUITES = (
    "discriminant-chain",
    "ring-validity",
    "equivariance",
    "rho-homomorphism",
    "stab-scan",
    "inverse-law",
    "psi-prime-det",
    "cubic-round-trip",
    "resolvent-axioms",
    "monogenicity",
    "disc-oracle",
    "reduce-a0",
)


def _run_shard(name, bounds, start, stop):
    suite = SUITES[name]
    items = suite.items(bounds)[start:stop]
    ctx = suite.context(bounds) if suite.context else None
    failures = []
    for item in items:
        failures.extend(suite.check(item, bounds, ctx))
    return len(items), failures


def run_suite(name, bounds=None, jobs=1):
    """Run one named sweep; ``bounds`` overrides individual pinned values."""
    if name not in SUITES:
        raise DomainError(f"unknown suite {name!r}; known: {', '.join(SUITES)}")
    b = dict(PINNED)
    b.update({k: v for k, v in (bounds or {}).items() if v is not None})
    if jobs < 1:
        raise DomainError("jobs must be >= 1")
    t0 = time.perf_counter()
    n = len(SUITES[name].items(b))
    jobs = min(jobs, max(n, 1))
    step = -(-n // jobs) if n else 0
    ranges = [(i * step, min(n, (i + 1) * step)) for i in range(jobs)]
    if jobs == 1:
        results = [_run_shard(name, b, 0, n)]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [pool.submit(_run_shard, name, b, lo, hi) for lo, hi in ranges]
            results = [fut.result() for fut in futures]  # shard order
    rep = SuiteReport(name)
    for cases, failures in results:
        rep.cases += cases
        rep.failures.extend(failures)
    rep.seconds = time.perf_counter() - t0
    return rep
