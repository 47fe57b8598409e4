"""Exact coefficient arithmetic, exponent vectors, monomial orderings and
univariate polynomials.

Coefficients are arbitrary-precision rationals (``gmpy2.mpq``): everything in
the toolkit is exact, there is no floating point anywhere.  Exponent vectors
are plain tuples of non-negative ints, one slot per ring variable.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from typing import Callable

from gmpy2 import mpq

Rational = mpq


def rational(x, y=None):
    """Coerce to an exact rational (normalized, denominator > 0)."""
    return mpq(x) if y is None else mpq(x, y)


QQ0 = mpq(0)
QQ1 = mpq(1)


# ---------------------------------------------------------------------------
# exponent vectors


def exp_add(a, b):
    return tuple(map(operator.add, a, b))


def exp_sub(a, b):
    """Componentwise difference; only defined when the result is non-negative."""
    c = tuple(map(operator.sub, a, b))
    if any(e < 0 for e in c):
        raise ValueError(f"exponent subtraction {a} - {b} is negative")
    return c


def exp_divides(a, b):
    """True when the monomial with exponent ``a`` divides the one with ``b``."""
    return all(map(operator.le, a, b))


def exp_lcm(a, b):
    return tuple(map(max, a, b))


def exp_deg(a):
    return sum(a)


def exp_support(a):
    return tuple(i for i, e in enumerate(a) if e)


def exp_suppmask(a):
    m = 0
    for i, e in enumerate(a):
        if e:
            m |= 1 << i
    return m


# ---------------------------------------------------------------------------
# monomial orderings
#
# An ordering is described declaratively and compiled (for a fixed variable
# count) into a key function mapping exponent vectors to tuples; Python's
# native tuple comparison then realizes the ordering.  Larger key = larger
# monomial.


@dataclass(frozen=True)
class MonOrder:
    kind: str  # "degrevlex" | "lex" | "weight" | "block"
    weights: tuple = ()
    tie: "MonOrder | None" = None
    blocks: tuple = ()  # tuple of (variable-index-tuple, MonOrder)

    def key_func(self, n: int) -> Callable[[tuple], tuple]:
        return _compile_key(self, n)

    def __repr__(self):
        if self.kind == "weight":
            return f"wp{list(self.weights)}>{self.tie!r}"
        if self.kind == "block":
            return "block(" + ",".join(f"{list(i)}:{o!r}" for i, o in self.blocks) + ")"
        return self.kind


def degrevlex() -> MonOrder:
    return MonOrder("degrevlex")


def lex() -> MonOrder:
    return MonOrder("lex")


def weight_order(weights, tie: MonOrder | None = None) -> MonOrder:
    """Compare by weighted degree first, break ties with ``tie`` (degrevlex)."""
    return MonOrder("weight", weights=tuple(weights), tie=tie or degrevlex())


def block_order(blocks) -> MonOrder:
    """Compare block by block on the restrictions to each variable subset."""
    return MonOrder("block", blocks=tuple((tuple(i), o) for i, o in blocks))


def elim_order(drop, n: int, tie: MonOrder | None = None) -> MonOrder:
    """Elimination ordering for the variables ``drop`` (weight 1 there, 0
    elsewhere, global tie-break).

    Realized as a weight-first ordering rather than block-lex so that
    lower-order relation tails stay admissible in the extended algebras.
    """
    w = [0] * n
    for i in drop:
        w[i] = 1
    return weight_order(w, tie)


def _compile_key(order: MonOrder, n: int) -> Callable[[tuple], tuple]:
    """Compile to a key function returning a flat tuple of numbers, so keys
    of one ordering compare natively and negate for max-heaps."""
    if order.kind == "degrevlex":
        def key(e):
            return (sum(e), *map(operator.neg, reversed(e)))
        return key
    if order.kind == "lex":
        def key(e):
            return tuple(e)
        return key
    if order.kind == "weight":
        w = order.weights
        if len(w) != n:
            raise ValueError(f"weight vector has {len(w)} entries, ring has {n}")
        tie = _compile_key(order.tie, n)
        def key(e):
            return (sum(map(operator.mul, w, e)), *tie(e))
        return key
    if order.kind == "block":
        subs = []
        for idx, sub in order.blocks:
            if any(i >= n for i in idx):
                raise ValueError("block ordering index out of range")
            subs.append((idx, _compile_key(sub, len(idx))))
        def key(e):
            out = []
            for idx, k in subs:
                out.extend(k(tuple(e[i] for i in idx)))
            return tuple(out)
        return key
    raise ValueError(f"unknown ordering kind {order.kind!r}")


def cmp_monomials(a, b, order: MonOrder) -> int:
    """Total comparison of exponent vectors: -1, 0 or 1 for less/equal/greater."""
    if len(a) != len(b):
        raise ValueError(f"exponent lengths differ: {len(a)} vs {len(b)}")
    k = order.key_func(len(a))
    ka, kb = k(a), k(b)
    return -1 if ka < kb else (0 if ka == kb else 1)


def is_global(order: MonOrder, n: int) -> bool:
    """Check the well-ordering requirement: every variable exceeds 1."""
    key = order.key_func(n)
    one = key((0,) * n)
    for i in range(n):
        e = [0] * n
        e[i] = 1
        if not key(tuple(e)) > one:
            return False
    return True


# ---------------------------------------------------------------------------
# univariate polynomials over Q


class UniPoly:
    """Dense univariate polynomial over the rationals.

    ``coeffs[i]`` is the coefficient of degree ``i``; the zero polynomial has
    an empty coefficient tuple, otherwise the last entry is non-zero.
    """

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs=(), var="s"):
        cs = [mpq(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "var", var)

    # -- constructors

    @classmethod
    def variable(cls, var="s"):
        return cls((0, 1), var)

    @classmethod
    def constant(cls, c, var="s"):
        return cls((c,), var)

    @classmethod
    def from_roots(cls, pairs, var="s"):
        """Monic product of (s - r)^m over (root, multiplicity) pairs."""
        p = cls((1,), var)
        for r, m in pairs:
            for _ in range(m):
                p = p * cls((-mpq(r), 1), var)
        return p

    # -- basic structure

    @property
    def degree(self):
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def lead(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if not self.coeffs:
            return other == 0
        return len(self.coeffs) == 1 and self.coeffs[0] == other

    def __hash__(self):
        return hash(self.coeffs)

    # -- arithmetic

    def __add__(self, other):
        other = self._coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UniPoly(out, self.var)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs], self.var)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, UniPoly):
            c = mpq(other)
            return UniPoly([c * x for x in self.coeffs], self.var)
        out = [mpq(0)] * (len(self.coeffs) + len(other.coeffs))
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UniPoly(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, k):
        out = UniPoly((1,), self.var)
        for _ in range(k):
            out = out * self
        return out

    def _coerce(self, other):
        return other if isinstance(other, UniPoly) else UniPoly((mpq(other),), self.var)

    # -- evaluation / substitution

    def eval_at(self, x):
        x = mpq(x)
        acc = mpq(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose(self, inner: "UniPoly") -> "UniPoly":
        """Horner composition self(inner(s))."""
        acc = UniPoly((), self.var)
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def shift_arg(self, c) -> "UniPoly":
        """self(s + c)."""
        return self.compose(UniPoly((mpq(c), 1), self.var))

    def monic(self) -> "UniPoly":
        if not self.coeffs:
            return self
        lead = self.coeffs[-1]
        if lead == 1:
            return self
        return UniPoly([c / lead for c in self.coeffs], self.var)

    def divexact_linear(self, root):
        """Exact synthetic division by (s - root); None if the remainder is non-zero."""
        root = mpq(root)
        acc = mpq(0)
        out = []
        for c in reversed(self.coeffs):
            acc = acc * root + c
            out.append(acc)
        rem = out.pop()
        if rem != 0:
            return None
        out.reverse()
        return UniPoly(out, self.var)

    def __repr__(self):
        return f"UniPoly({self.render()})"

    def render(self):
        if not self.coeffs:
            return "0"
        parts = []
        for d in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[d]
            if c == 0:
                continue
            mono = "1" if d == 0 else (self.var if d == 1 else f"{self.var}^{d}")
            if d == 0:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)


# ---------------------------------------------------------------------------
# b-function presentation


@dataclass(frozen=True)
class BFunction:
    """A univariate b-function with its rational-root factorization.

    ``poly`` is monic and equals ``remainder * prod (s - r)^m`` exactly.
    """

    poly: UniPoly
    roots: tuple  # sorted tuple of (root, multiplicity), ascending by root
    remainder: UniPoly

    @classmethod
    def from_poly(cls, p: UniPoly) -> "BFunction":
        return unipoly_rational_roots(p)

    @classmethod
    def bernstein_sato(cls, p: UniPoly) -> "BFunction":
        """Factor and enforce the shape of a hypersurface Bernstein-Sato
        polynomial: fully rational roots, all negative."""
        b = unipoly_rational_roots(p)
        if b.remainder.degree > 0:
            raise ValueError(
                f"not a Bernstein-Sato polynomial: non-linear factor {b.remainder.render()}")
        if any(r >= 0 for r, _ in b.roots):
            raise ValueError("not a Bernstein-Sato polynomial: non-negative root")
        return b

    def root_dict(self):
        return dict(self.roots)

    def multiplicity(self, r) -> int:
        return self.root_dict().get(mpq(r), 0)

    def __eq__(self, other):
        if isinstance(other, BFunction):
            return self.poly == other.poly
        return NotImplemented

    def __hash__(self):
        return hash(self.poly)

    def render_roots(self):
        return " ".join(f"({r},{m})" for r, m in self.roots)

    def __repr__(self):
        extra = "" if self.remainder.degree <= 0 else f" * ({self.remainder.render()})"
        return f"BFunction[{self.render_roots()}{extra}]"


def _int_divisors(n: int):
    n = abs(int(n))
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def unipoly_rational_roots(p: UniPoly) -> BFunction:
    """Factor out all rational roots of ``p``.

    Candidates come from the rational-root theorem applied to the
    content-cleared polynomial; multiplicities by repeated exact division.
    The remainder has no rational root.
    """
    if p.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    work = p.monic()
    roots = {}
    # roots at 0 first
    while len(work.coeffs) > 1 and work.coeffs[0] == 0:
        roots[mpq(0)] = roots.get(mpq(0), 0) + 1
        work = UniPoly(work.coeffs[1:], work.var)
    if work.degree > 0:
        den_lcm = 1
        for c in work.coeffs:
            den_lcm = den_lcm * c.denominator // __import__("math").gcd(
                int(den_lcm), int(c.denominator))
        ints = [int(c * den_lcm) for c in work.coeffs]
        g = 0
        for c in ints:
            g = __import__("math").gcd(g, c)
        ints = [c // g for c in ints]
        lead, const = ints[-1], ints[0]
        cands = set()
        for pnum in _int_divisors(const):
            for qden in _int_divisors(lead):
                cands.add(mpq(pnum, qden))
                cands.add(mpq(-pnum, qden))
        for r in sorted(cands):
            while work.degree > 0 and work.eval_at(r) == 0:
                roots[r] = roots.get(r, 0) + 1
                work = work.divexact_linear(r)
            if work.degree == 0:
                break
    return BFunction(
        poly=p.monic(),
        roots=tuple(sorted(roots.items())),
        remainder=work.monic(),
    )


def unipoly_bs_transform(b: UniPoly) -> UniPoly:
    """Map an untransformed weight b-function to Bernstein-Sato normal form:
    the monic polynomial (-1)^deg * b(-s-1)."""
    if b.is_zero():
        raise ValueError("cannot transform the zero polynomial")
    bm = b.monic()
    t = bm.compose(UniPoly((-1, -1), b.var))
    if bm.degree % 2:
        t = -t
    return t


def symbolic_binomial(k: int, var="s") -> UniPoly:
    """The binomial coefficient C(s, k) = s(s-1)...(s-k+1)/k! as a polynomial."""
    if k < 0:
        raise ValueError("binomial index must be non-negative")
    p = UniPoly((1,), var)
    fact = 1
    for t in range(k):
        p = p * UniPoly((-t, 1), var)
        fact *= t + 1
    return p * mpq(1, fact)
