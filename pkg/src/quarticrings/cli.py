"""Command-line front end.

Every command reads records from its positional arguments, or from stdin when none are
given or the argument is ``-``. Results go to stdout as ``key=value`` lines (a few
scalar results such as ``I=12 J=0 disc=256`` share one line) or, with ``--format tsv``,
as a header row plus one tab-separated row per record. Timings go to stderr so stdout
is byte-for-byte reproducible.

Exit codes: 0 success, 1 domain error or malformed input, 2 a verification failed.
"""

import argparse
import sys
import time

from . import kernels
from .forms import (
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
    quartic_invariants,
    rho,
    word_element,
)
from .records import RecordError, format_record, parse_record
from .resolvent import psi, psi_prime, pullback, reduce_to_A0, stabilizer_scan
from .rings import (
    CUBIC_NAMES,
    QUARTIC_NAMES,
    BasedRing,
    bcf_from_cubic_ring,
    canonicalize_monogenized,
    cubic_ring_from_bcf,
    disc_ring,
    format_elem,
    quartic_ring_from_bqf,
)
from .sweeps import PINNED, SUITES, enumerate_forms, run_suite
from .witness import check_witness, orbit_witness


class Failure(Exception):
    """A verification ran to completion and found violations."""


def _expect(obj, *types):
    if not isinstance(obj, types):
        names = " or ".join(t.__name__ for t in types)
        raise DomainError(f"expected {names}, got {type(obj).__name__}")
    return obj


def _products(ring, names):
    return [
        (f"{names[i]}*{names[j]}", format_elem(v, names))
        for (i, j), v in ring.products()
    ]


def _group_element(args):
    if args.g and args.word is not None:
        raise DomainError("give either --g or --word, not both")
    if args.g:
        return _expect(parse_record(args.g), GL2Elem)
    if args.word is not None:
        return word_element(args.word)
    raise DomainError("a group element is required (--g 'gl2 a b c d' or --word over s, r, t)")


# single-record commands: record -> list of fields; a field is (key, value) on its own
# line, or a list of them sharing a line


def cmd_ring_from_bqf(rec, args):
    ring = quartic_ring_from_bqf(_expect(rec, BinaryQuarticForm))
    return [("ring", format_record(ring))] + _products(ring, QUARTIC_NAMES)


def cmd_ring_from_bcf(rec, args):
    ring = cubic_ring_from_bcf(_expect(rec, BinaryCubicForm))
    return [("ring", format_record(ring))] + _products(ring, CUBIC_NAMES)


def cmd_bcf_from_ring(rec, args):
    ring = _expect(rec, BasedRing)
    if ring.rank != 3:
        raise DomainError("bcf-from-ring needs a rank-3 ring")
    return [("bcf", format_record(bcf_from_cubic_ring(ring)))]


def cmd_psi(rec, args):
    return [("pair", format_record(psi(_expect(rec, BinaryQuarticForm))))]


def cmd_psi_prime(rec, args):
    return [("pair", format_record(psi_prime(_expect(rec, BinaryQuarticForm))))]


def cmd_pullback(rec, args):
    return [("bqf", format_record(pullback(_expect(rec, TernaryQuadraticForm))))]


def cmd_detcubic(rec, args):
    return [("bcf", format_record(det_cubic_of_pair(_expect(rec, TQFPair))))]


def cmd_act_quartic(rec, args):
    g = _group_element(args)
    return [("bqf", format_record(act_gl2_quartic(g, _expect(rec, BinaryQuarticForm))))]


def cmd_act_cubic(rec, args):
    g = _group_element(args)
    return [("bcf", format_record(act_gl2_cubic_twisted(g, _expect(rec, BinaryCubicForm))))]


def cmd_rho(rec, args):
    return [("rho", format_record(rho(_expect(rec, GL2Elem))))]


def cmd_act_pair(rec, args):
    pair = _expect(rec, TQFPair)
    if args.h:
        if args.g or args.word is not None:
            raise DomainError("give either --h or a GL2 element, not both")
        h = parse_record(args.h)
        if not isinstance(h, tuple):
            raise DomainError("--h must be a gl3 record")
        return [("pair", format_record(act_gl3_pair(h, pair)))]
    return [("pair", format_record(act_gl2_pair(_group_element(args), pair)))]


def cmd_invariants(rec, args):
    f = _expect(rec, BinaryQuarticForm)
    i, j = quartic_invariants(f)
    return [[("I", str(i)), ("J", str(j)), ("disc", str(disc_quartic(f)))]]


def cmd_disc(rec, args):
    rec = _expect(rec, BinaryQuarticForm, BinaryCubicForm, BasedRing)
    if isinstance(rec, BinaryQuarticForm):
        return [("disc", str(disc_quartic(rec)))]
    if isinstance(rec, BinaryCubicForm):
        return [("disc", str(disc_cubic(rec)))]
    return [("disc", str(disc_ring(rec)))]


def cmd_canonicalize(rec, args):
    form, n = canonicalize_monogenized(_expect(rec, BinaryCubicForm))
    return [("bcf", format_record(form)), ("n", str(n))]


def cmd_reduce_to_a0(rec, args):
    h = reduce_to_A0(_expect(rec, TernaryQuadraticForm))
    return [("h", format_record(h))]


def cmd_orbit_witness(rec, args):
    f = _expect(rec, BinaryQuarticForm)
    w = orbit_witness(f, args.word or "")
    rep = check_witness(w)
    lines = [tuple(line.split("=", 1)) for line in w.lines()]
    lines.append(("check", "pass" if rep.ok else "fail"))
    if not rep.ok:
        lines += [("violation", v) for v in rep.violations]
        args._failed = True
    return lines


RECORD_COMMANDS = {
    "ring-from-bqf": (cmd_ring_from_bqf, "quartic ring R_f of a binary quartic form"),
    "ring-from-bcf": (cmd_ring_from_bcf, "based cubic ring of a binary cubic form"),
    "bcf-from-ring": (cmd_bcf_from_ring, "binary cubic form of a based cubic ring"),
    "psi": (cmd_psi, "the pair (A0, B_f)"),
    "psi-prime": (cmd_psi_prime, "the rational lift (A0, B_f - f2/3 A0)"),
    "pullback": (cmd_pullback, "binary quartic B(v^2, u^2, uv) of a ternary form"),
    "detcubic": (cmd_detcubic, "determinant cubic 4 Det(Ax - By) of a pair"),
    "act-quartic": (cmd_act_quartic, "g∘f = F(ax + cy, bx + dy)"),
    "act-cubic": (cmd_act_cubic, "twisted action F(ax + cy, bx + dy)/det g"),
    "rho": (cmd_rho, "the SL3 matrix rho(g)"),
    "act-pair": (cmd_act_pair, "GL3 (--h) or GL2 (--g/--word) action on a pair"),
    "invariants": (cmd_invariants, "I, J and the discriminant of a quartic"),
    "disc": (cmd_disc, "discriminant of a bqf, bcf or ring"),
    "canonicalize": (cmd_canonicalize, "N-orbit representative of a monogenized cubic"),
    "reduce-to-a0": (cmd_reduce_to_a0, "h in SL3(Z) with h A h^t = A0"),
    "orbit-witness": (cmd_orbit_witness, "certificate that f and word∘f give isomorphic (Q, C)"),
}


def _flatten(fields):
    out = []
    for f in fields:
        out.extend(f if isinstance(f, list) else [f])
    return out


def _emit_kv(fields, out):
    for f in fields:
        group = f if isinstance(f, list) else [f]
        out.write(" ".join(f"{k}={v}" for k, v in group) + "\n")


class _Emitter:
    def __init__(self, fmt, out):
        self.fmt, self.out, self.header = fmt, out, None

    def __call__(self, fields):
        if self.fmt == "kv":
            _emit_kv(fields, self.out)
            return
        fields = _flatten(fields)
        keys = [k for k, _ in fields]
        if keys != self.header:
            self.out.write("\t".join(keys) + "\n")
            self.header = keys
        self.out.write("\t".join(v for _, v in fields) + "\n")


def _records(args, stdin):
    """(line number, text) for each input record."""
    sources = args.records or ["-"]
    n = 0
    for src in sources:
        if src == "-":
            for text in stdin:
                n += 1
                if text.strip() and not text.lstrip().startswith("#"):
                    yield n, text.rstrip("\n")
        else:
            n += 1
            yield n, src


def run_records(args, out, stdin):
    fn = RECORD_COMMANDS[args.command][0]
    emit = _Emitter(args.format, out)
    for line, text in _records(args, stdin):
        emit(fn(parse_record(text, line), args))


def run_stab_scan(args, out):
    bound = args.bound if args.bound is not None else PINNED["stab_bound"]
    rep = stabilizer_scan(bound)
    emit = _Emitter(args.format, out)
    for m, g in rep.matches:
        emit([("element", format_record(m)), ("g", format_record(g))])
    for v in rep.violations:
        emit([("unmatched", v)])
    emit([[("elements", str(rep.cases)), ("unmatched", str(len(rep.violations)))]])
    if not rep.ok:
        raise Failure(f"{len(rep.violations)} stabilizer elements unmatched")


_CUBIC_SUITES = ("cubic-round-trip", "cubic-equivariance")
_BOUND_KEYS = {"stab-scan": "stab_bound", "resolvent-axioms": "coord_box", "rho-homomorphism": "rho_entries"}


def suite_bounds(name, args):
    b = {}
    for item in args.set or []:
        key, sep, value = item.partition("=")
        if not sep or key not in PINNED:
            raise DomainError(f"--set expects key=value with key in {sorted(PINNED)}")
        try:
            b[key] = int(value)
        except ValueError:
            raise DomainError(f"--set {key}: not an integer: {value!r}") from None
    if args.box is not None:
        b["cubic_box" if name in _CUBIC_SUITES else "box"] = args.box
    if args.bound is not None and name in _BOUND_KEYS:
        b[_BOUND_KEYS[name]] = args.bound
    if args.words is not None:
        b["words"] = args.words
    return b


def run_verify(args, out, err):
    names = list(SUITES) if args.suite == "all" else [args.suite]
    if args.suite not in SUITES and args.suite != "all":
        raise DomainError(f"unknown suite {args.suite!r}; known: all, {', '.join(SUITES)}")
    emit = _Emitter(args.format, out)
    failed = []
    for name in names:
        rep = run_suite(name, suite_bounds(name, args), jobs=args.jobs)
        status = "pass" if rep.ok else "fail"
        emit([[("suite", name), ("cases", str(rep.cases)), ("failures", str(len(rep.failures))), ("status", status)]])
        for msg in rep.failures:
            emit([("failure", msg)])
        err.write(f"{name}: {rep.seconds:.2f}s (kernels={kernels.IMPLEMENTATION}, jobs={args.jobs})\n")
        if not rep.ok:
            failed.append(name)
    if failed:
        raise Failure(f"suites failed: {', '.join(failed)}")


def run_enumerate(args, out):
    bound = args.bound if args.bound is not None else args.box
    if bound is None:
        raise DomainError("enumerate needs --bound")
    for f in enumerate_forms(args.kind, bound):
        out.write(format_record(f) + "\n")


def build_parser():
    p = argparse.ArgumentParser(prog="quarticrings", description=__doc__.split("\n\n")[0])
    sub = p.add_subparsers(dest="command", required=True, metavar="command")

    def common(sp):
        sp.add_argument("--format", choices=("kv", "tsv"), default="kv")

    for name, (_, help_text) in RECORD_COMMANDS.items():
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("records", nargs="*", help="records, or - for stdin (default)")
        common(sp)
        if name in ("act-quartic", "act-cubic", "act-pair"):
            sp.add_argument("--g", help="group element as a gl2 record")
            sp.add_argument("--word", help="group element as a word over s, r, t")
        elif name == "orbit-witness":
            sp.add_argument("--word", default="", help="word over s, r, t (default: empty)")
            sp.set_defaults(g=None)
        if name == "act-pair":
            sp.add_argument("--h", help="GL3 element as a gl3 record")

    sp = sub.add_parser("stab-scan", help="match bounded Stab(A0) against the image of rho")
    sp.add_argument("--bound", type=int)
    common(sp)

    sp = sub.add_parser("verify", help="run a named sweep (or 'all')")
    sp.add_argument("suite")
    sp.add_argument("--box", type=int)
    sp.add_argument("--bound", type=int)
    sp.add_argument("--words", type=int)
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--set", action="append", metavar="KEY=VALUE", help="override a pinned bound")
    common(sp)

    sp = sub.add_parser("enumerate", help="all forms of a kind with |coeff| <= bound")
    sp.add_argument("kind", choices=("bqf", "bcf", "tqf", "quartic", "cubic", "ternary"))
    sp.add_argument("--bound", type=int)
    sp.add_argument("--box", type=int)
    return p


def main(argv=None, stdout=None, stderr=None, stdin=None):
    out = stdout or sys.stdout
    err = stderr or sys.stderr
    inp = stdin or sys.stdin
    args = build_parser().parse_args(argv)
    t0 = time.perf_counter()
    try:
        if args.command in RECORD_COMMANDS:
            args._failed = False
            run_records(args, out, inp)
            if args._failed:
                raise Failure("certificate did not validate")
        elif args.command == "stab-scan":
            run_stab_scan(args, out)
        elif args.command == "verify":
            run_verify(args, out, err)
        elif args.command == "enumerate":
            run_enumerate(args, out)
    except Failure as exc:
        err.write(f"failed: {exc}\n")
        return 2
    except RecordError as exc:
        err.write(f"error: malformed record, {exc}\n")
        return 1
    except DomainError as exc:
        err.write(f"error: {exc}\n")
        return 1
    finally:
        if args.command in ("stab-scan", "enumerate"):
            err.write(f"time={time.perf_counter() - t0:.3f}s\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
