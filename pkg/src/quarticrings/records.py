"""Line-oriented record grammar shared by the library and the CLI.

    bqf f0 f1 f2 f3 f4
    bcf a b c d
    tqf a11 a22 a33 a12 a13 a23
    pair <tqf>|<tqf>
    gl2 a b c d
    gl3 m11 m12 m13 m21 m22 m23 m31 m32 m33
    ring <rank> c[i][j][k] ...      (products e_i e_j, i <= j, row-major, constant first)

Fields are base-10 integers separated by single spaces. Rational values (only produced
for the psi-prime lift) are written ``p/q``.
"""

from fractions import Fraction

from .forms import (
    BinaryCubicForm,
    BinaryQuarticForm,
    DomainError,
    GL2Elem,
    TernaryQuadraticForm,
    TQFPair,
)
from .rings import BasedRing


class RecordError(DomainError):
    def __init__(self, message, line=None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def _num(tok):
    if "/" in tok:
        p, q = tok.split("/", 1)
        if _int(q) == 0:
            raise RecordError(f"zero denominator in {tok!r}")
        v = Fraction(_int(p), _int(q))
        return v.numerator if v.denominator == 1 else v
    return _int(tok)


def _int(tok):
    body = tok[1:] if tok[:1] == "-" else tok
    if not body.isdigit() or not body.isascii():
        raise RecordError(f"not a base-10 integer: {tok!r}")
    return int(tok)


def _fields(text, kind, n):
    toks = text.split(" ")
    if "" in toks:
        raise RecordError("fields must be separated by single spaces")
    if toks[0] != kind:
        raise RecordError(f"expected a {kind!r} record, got {toks[0]!r}")
    vals = toks[1:]
    if len(vals) != n:
        raise RecordError(f"{kind} needs {n} fields, got {len(vals)}")
    return [_num(t) for t in vals]


def parse_record(text, line=None):
    text = text.strip()
    try:
        if not text:
            raise RecordError("empty record")
        kind = text.split(" ", 1)[0]
        if kind == "bqf":
            return BinaryQuarticForm(*_fields(text, "bqf", 5))
        if kind == "bcf":
            return BinaryCubicForm(*_fields(text, "bcf", 4))
        if kind == "tqf":
            return TernaryQuadraticForm(*_fields(text, "tqf", 6))
        if kind == "gl2":
            return GL2Elem(*_fields(text, "gl2", 4))
        if kind == "gl3":
            v = _fields(text, "gl3", 9)
            return (tuple(v[0:3]), tuple(v[3:6]), tuple(v[6:9]))
        if kind == "pair":
            body = text[len("pair "):]
            parts = body.split("|")
            if len(parts) != 2:
                raise RecordError("pair needs two tqf records separated by '|'")
            return TQFPair(parse_record(parts[0]), parse_record(parts[1]))
        if kind == "ring":
            toks = text.split(" ")
            if "" in toks:
                raise RecordError("fields must be separated by single spaces")
            if len(toks) < 2:
                raise RecordError("ring needs a rank")
            rank = _int(toks[1])
            if rank not in (3, 4):
                raise RecordError(f"unsupported rank {rank}")
            npairs = rank * (rank - 1) // 2
            vals = [_int(t) for t in toks[2:]]
            if len(vals) != npairs * rank:
                raise RecordError(f"ring {rank} needs {npairs * rank} constants, got {len(vals)}")
            products = {}
            it = iter(range(0, len(vals), rank))
            for i in range(1, rank):
                for j in range(i, rank):
                    k = next(it)
                    products[(i, j)] = vals[k : k + rank]
            return BasedRing.from_products(rank, products)
        raise RecordError(f"unknown record kind {kind!r}")
    except RecordError as exc:
        if line is not None and exc.line is None:
            raise RecordError(str(exc), line) from None
        raise
    except DomainError as exc:
        raise RecordError(str(exc), line) from None


def _tok(x):
    if isinstance(x, Fraction) and x.denominator != 1:
        return f"{x.numerator}/{x.denominator}"
    return str(int(x))


def format_record(obj):
    if isinstance(obj, BinaryQuarticForm):
        return "bqf " + " ".join(map(_tok, obj.coeffs))
    if isinstance(obj, BinaryCubicForm):
        return "bcf " + " ".join(map(_tok, obj.coeffs))
    if isinstance(obj, TernaryQuadraticForm):
        return "tqf " + " ".join(map(_tok, obj.coeffs))
    if isinstance(obj, TQFPair):
        return f"pair {format_record(obj.A)}|{format_record(obj.B)}"
    if isinstance(obj, GL2Elem):
        return f"gl2 {obj.a} {obj.b} {obj.c} {obj.d}"
    if isinstance(obj, BasedRing):
        consts = [c for _, v in obj.products() for c in v]
        return f"ring {obj.rank} " + " ".join(map(str, consts))
    if isinstance(obj, tuple) and len(obj) == 3 and all(len(r) == 3 for r in obj):
        return "gl3 " + " ".join(_tok(x) for r in obj for x in r)
    raise TypeError(f"no record format for {type(obj).__name__}")
