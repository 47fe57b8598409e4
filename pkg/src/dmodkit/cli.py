"""Command-line front end.

One command per invocation; deterministic text output (canonical reduced
bases, roots ascending) or a structured JSON encoding behind --format json.
Exit codes: 0 success, 1 usage or input error, 2 computation failure (degree
cap, unsupported branch) with a machine-readable reason.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from gmpy2 import mpq

from . import dmodcore as dm
from .corpus import run_corpus
from .errors import ComputationError
from .galgebra import commutative, weyl
from .groebner import buchberger, lt_dimension, reduce_gb, GBasis
from .parsing import ParseError, parse_op, parse_poly, validate_ring_names
from .polyarith import (
    BFunction,
    MonOrder,
    degrevlex,
    lex,
    unipoly_rational_roots,
    weight_order,
)

COMMANDS = (
    "annfs", "annfs-log", "ann-k", "ann-poly", "ann-rat", "ann-falpha",
    "bfct", "bfct-ann", "bfct-ideal", "check-root", "min-int-root",
    "operator", "bs-ideal", "annfs-var", "bfct-var", "gkdim", "gb",
    "principal-intersect", "solve0", "verify",
)

_OPERATOR_INPUT = {"bfct-ideal", "gkdim", "gb", "principal-intersect"}


class UsageError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse default exits 2; usage errors are 1
        raise UsageError(message)


_NEGATIVE_RATIONAL = re.compile(r"^-\d+(/\d+)?$")


def _build_parser():
    p = _Parser(prog="dmodkit", description=__doc__.splitlines()[0])
    p._negative_number_matcher = _NEGATIVE_RATIONAL
    sub = p.add_subparsers(dest="command", metavar="command")
    for name in COMMANDS:
        c = sub.add_parser(name, add_help=True)
        c._negative_number_matcher = _NEGATIVE_RATIONAL
        c.add_argument("--ring", help="comma-separated input-ring variables")
        c.add_argument("--poly", action="append", default=[],
                       help="input polynomial (repeatable)")
        c.add_argument("--ideal", help="ideal file: 'ring: x,y' then one polynomial per line")
        c.add_argument("--ord", default="dp",
                       help="ordering: dp | lp | wp:<w1,w2,..> | elim:<v1,v2,..>")
        c.add_argument("--alpha", help="rational exponent, e.g. -1/2")
        c.add_argument("--weights", help="comma-separated weight vector")
        c.add_argument("--k", type=int, help="order bound for ann-k")
        c.add_argument("--cap", type=int, default=None,
                       help="degree cap (default: 60 for principal intersections, "
                            "none for basis runs)")
        c.add_argument("--sigma", help="principal-intersect subalgebra generator")
        c.add_argument("--format", choices=("text", "json"), default="text")
        c.add_argument("--stretch", action="store_true",
                       help="include the long reproduction cases")
        c.add_argument("--engine", choices=("normal", "slim"), default="normal")
        c.add_argument("--shifted", action="store_true",
                       help="bfct-var: apply the codimension shift")
    return p


def _read_ideal_file(path):
    ring_names = None
    polys = []
    with open(path, encoding="utf-8") as fh:
        for raw in fh:
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if ring_names is None:
                m = re.match(r"^ring\s*:\s*(.+)$", line)
                if not m:
                    raise UsageError(
                        f"first line of {path} must declare 'ring: x,y,..'")
                ring_names = [v.strip() for v in m.group(1).split(",") if v.strip()]
                continue
            polys.append(line)
    if ring_names is None:
        raise UsageError(f"ideal file {path} declares no ring")
    return ring_names, polys


def _infer_ring(texts):
    seen = []
    for t in texts:
        for m in re.finditer(r"[A-Za-z][A-Za-z0-9]*", t):
            nm = m.group(0)
            if nm not in seen:
                seen.append(nm)
    if not seen:
        raise UsageError("cannot infer ring variables; pass --ring")
    return seen


def _session_ring(args):
    texts = list(args.poly)
    if args.ideal:
        names, more = _read_ideal_file(args.ideal)
        texts = more + texts
    elif args.ring:
        names = [v.strip() for v in args.ring.split(",") if v.strip()]
    else:
        names = _infer_ring(texts)
    validate_ring_names(names)
    if not texts:
        raise UsageError("no input polynomials (use --poly or --ideal)")
    return names, texts


def _parse_order(spec, alg):
    if spec == "dp":
        return degrevlex()
    if spec == "lp":
        return lex()
    if spec.startswith("wp:"):
        w = [int(x) for x in spec[3:].split(",")]
        if len(w) != alg.n:
            raise UsageError(f"wp: needs {alg.n} weights")
        return weight_order(w)
    if spec.startswith("elim:"):
        names = [v.strip() for v in spec[5:].split(",")]
        w = [0] * alg.n
        for nm in names:
            if nm not in alg._index:
                raise UsageError(f"elim: unknown variable {nm!r}")
            w[alg.index(nm)] = 1
        return weight_order(w)
    raise UsageError(f"unknown ordering {spec!r}")


def _rational(text):
    try:
        return mpq(text)
    except (ValueError, ZeroDivisionError) as e:
        raise UsageError(f"bad rational {text!r}: {e}")


def _fmt_root(r, m):
    return f"({r}, {m})"


def _roots_payload(b: BFunction):
    return [[int(r.numerator), int(r.denominator), m] for r, m in b.roots]


class _Out:
    def __init__(self, command, names, fmt):
        self.fmt = fmt
        self.payload = {"command": command, "ring": list(names)}
        self.lines = []

    def gens(self, basis, key="generators"):
        gens = list(basis.gens) if isinstance(basis, GBasis) else list(basis)
        strs = [g.render() for g in gens]
        self.payload[key] = strs
        self.lines += [f"{key}:"] + [f"  {s}" for s in strs]

    def bfunction(self, b: BFunction, key="roots", label="roots"):
        self.payload[key] = _roots_payload(b)
        self.lines.append(label + ": " + " ".join(_fmt_root(r, m) for r, m in b.roots))
        if b.remainder.degree > 0:
            self.payload["remainder"] = b.remainder.render()
            self.lines.append("remainder: " + b.remainder.render())

    def value(self, key, val, rendered=None):
        self.payload[key] = val
        self.lines.append(f"{key}: {rendered if rendered is not None else val}")

    def emit(self):
        if self.fmt == "json":
            print(json.dumps(self.payload, sort_keys=True))
        else:
            print("\n".join(self.lines))


def _dispatch(args):
    names, texts = _session_ring(args)
    ring = commutative(names)
    out = _Out(args.command, names, args.format)
    strategy = args.engine
    cap = args.cap if args.cap is not None else 60  # principal intersections
    gb_cap = args.cap  # basis runs stay uncapped unless asked

    if args.command in _OPERATOR_INPUT:
        W = weyl(len(names), names)
        order = _parse_order(args.ord, W)
        W = W.with_order(order)
        ops = [parse_op(t, W) for t in texts]
    else:
        fs = [parse_poly(t, ring) for t in texts]

    if args.command == "annfs":
        ann = dm.sannfs_bm(fs, cap=gb_cap, strategy=strategy)
        out.value("algebra", " ".join(ann.algebra.names))
        out.gens(ann.gens)
    elif args.command == "annfs-log":
        ann = dm.sannfs_log(fs[0])
        out.gens(ann.gens)
    elif args.command == "ann-k":
        if args.k is None:
            raise UsageError("ann-k needs --k")
        ann = dm.ann_upto_k(fs[0], args.k)
        out.gens(ann.gens)
    elif args.command == "ann-poly":
        out.gens(dm.ann_poly(fs[0]))
    elif args.command == "ann-rat":
        if len(fs) != 2:
            raise UsageError("ann-rat needs two --poly: numerator, denominator")
        out.gens(dm.ann_rat(fs[0], fs[1]))
    elif args.command == "ann-falpha":
        if args.alpha is None:
            raise UsageError("ann-falpha needs --alpha")
        out.gens(dm.ann_falpha(fs[0], _rational(args.alpha)))
    elif args.command == "bfct":
        u = None
        if args.weights:
            u = tuple(int(x) for x in args.weights.split(","))
        out.bfunction(dm.bfct(fs[0], u, cap=cap, strategy=strategy))
    elif args.command == "bfct-ann":
        out.bfunction(dm.bfct_ann(fs[0], cap=cap, strategy=strategy))
    elif args.command == "bfct-ideal":
        if not args.weights:
            raise UsageError("bfct-ideal needs --weights (one per ring variable)")
        w = tuple(int(x) for x in args.weights.split(","))
        b = dm.bfct_ideal(ops, w, cap=cap, strategy=strategy)
        out.value("b", b.poly.render())
        out.bfunction(b)
    elif args.command == "check-root":
        if args.alpha is None:
            raise UsageError("check-root needs --alpha")
        alpha = _rational(args.alpha)
        if alpha < 0:
            alpha = -alpha  # accept roots of b(s) by negating
        ann = dm.sannfs_bm(fs, strategy=strategy)
        m = dm.root_multiplicity(ann, fs[0], alpha)
        out.value("root", bool(m))
        out.value("multiplicity", m)
    elif args.command == "min-int-root":
        ann = dm.sannfs_bm(fs, strategy=strategy)
        out.value("min-integer-root", dm.min_integer_root(ann, fs[0]))
    elif args.command == "operator":
        data = dm.bernstein_data(fs[0], cap=cap)
        out.bfunction(data.b)
        out.value("operator", data.operator.render())
    elif args.command == "bs-ideal":
        out.gens(dm.bs_ideal(fs, cap=gb_cap, strategy=strategy))
    elif args.command == "annfs-var":
        ann = dm.sannfs_var(fs, cap=gb_cap, strategy=strategy)
        out.value("algebra", " ".join(ann.algebra.names))
        out.gens(ann.gens)
    elif args.command == "bfct-var":
        cod = dm.variety_codim(fs)
        b = dm.bfct_var(fs, cap=cap, strategy=strategy)
        out.value("codim", cod)
        out.bfunction(b)
        if args.shifted:
            shifted = BFunction.from_poly(b.poly.shift_arg(1 - cod))
            out.bfunction(shifted, key="shifted-roots", label="shifted roots")
    elif args.command == "gkdim":
        G = buchberger(ops, strategy=strategy)
        out.value("gkdim", lt_dimension(G))
    elif args.command == "gb":
        G = buchberger(ops, strategy=strategy)
        out.gens(G)
    elif args.command == "principal-intersect":
        if not args.sigma:
            raise UsageError("principal-intersect needs --sigma")
        sigma = parse_op(args.sigma, ops[0].alg)
        b = dm.principal_intersect(buchberger(ops, strategy=strategy), sigma,
                                   cap=cap)
        out.value("b", b.render())
        out.bfunction(unipoly_rational_roots(b))
    elif args.command == "solve0":
        G = buchberger([parse_poly(t, ring) for t in texts], strategy=strategy)
        sols = {}
        for i, nm in enumerate(names):
            b = dm.principal_intersect(G, ring.gen(nm), cap=cap, var=nm)
            fac = unipoly_rational_roots(b)
            sols[nm] = {
                "minimal-polynomial": b.render(),
                "rational-roots": _roots_payload(fac),
            }
            out.lines.append(
                f"{nm}: {b.render()}  roots: "
                + " ".join(_fmt_root(r, m) for r, m in fac.roots))
        out.payload["solutions"] = sols
    else:  # pragma: no cover - argparse restricts the choices
        raise UsageError(f"unknown command {args.command!r}")
    out.emit()
    return 0


def _verify(args):
    results = run_corpus(stretch=args.stretch)
    if args.format == "json":
        print(json.dumps({
            "command": "verify",
            "cases": [{"name": r.name, "ok": r.ok, "detail": r.detail,
                       "seconds": round(r.seconds, 3)} for r in results],
            "ok": all(r.ok for r in results),
        }, sort_keys=True))
    else:
        for r in results:
            print(f"{'PASS' if r.ok else 'FAIL'} {r.name} ({r.seconds:.2f}s): {r.detail}")
        n_ok = sum(r.ok for r in results)
        print(f"{n_ok}/{len(results)} cases pass")
    return 0 if all(r.ok for r in results) else 2


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if not args.command:
            raise UsageError("no command given; see --help")
        if args.command == "verify":
            return _verify(args)
        return _dispatch(args)
    except (UsageError, ParseError, ValueError) as exc:
        _fail(argv, exc, 1, "usage-error")
        return 1
    except ComputationError as exc:
        _fail(argv, exc, 2, exc.reason)
        return 2


def _fail(argv, exc, code, reason):
    words = list(argv) if argv is not None else sys.argv[1:]
    fmt = "json" if ("--format" in words and "json" in words) else "text"
    if fmt == "json":
        print(json.dumps({"error": {"code": reason, "message": str(exc)}}))
    else:
        print(f"error ({reason}): {exc}", file=sys.stderr)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
