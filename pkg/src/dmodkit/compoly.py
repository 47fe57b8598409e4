"""Commutative polynomial calculus on top of the algebra layer.

These helpers operate on elements of commutative presets (or on central
variables of a noncommutative algebra): derivatives, substitution, exact
division, weighted degrees.  They back the fraction-free action oracle and
the syzygy-based annihilator constructions.
"""

from __future__ import annotations

from gmpy2 import mpq

from .galgebra import GAlgebra, OpPoly, star_mul


def differentiate(p: OpPoly, var) -> OpPoly:
    """Formal partial derivative with respect to one variable."""
    alg = p.alg
    v = var if isinstance(var, int) else alg.index(var)
    out = {}
    for e, c in p.terms:
        if e[v]:
            ee = list(e)
            ee[v] -= 1
            ee = tuple(ee)
            out[ee] = out.get(ee, 0) + c * e[v]
    return alg.poly(out)


def subst_central(p: OpPoly, var, value) -> OpPoly:
    """Substitute a central variable by a scalar or a central element.

    Centrality makes the substitution a homomorphism regardless of the
    ambient relations; the target algebra is ``value``'s (or ``p``'s for a
    scalar), matched by variable names.
    """
    alg = p.alg
    v = var if isinstance(var, int) else alg.index(var)
    if alg.core.noncomm[v]:
        raise ValueError(f"variable {alg.names[v]} is not central")
    if isinstance(value, OpPoly):
        target = value.alg
    else:
        target = alg
        value = target.scalar(value)
    slot = [target._index.get(nm) for nm in alg.names]
    pow_cache = {0: target.one()}

    def vpow(k):
        got = pow_cache.get(k)
        if got is None:
            got = vpow(k - 1) * value
            pow_cache[k] = got
        return got

    out = target.zero()
    for e, c in p.terms:
        ee = [0] * target.n
        for i, pw in enumerate(e):
            if pw and i != v:
                if slot[i] is None:
                    raise ValueError(
                        f"variable {alg.names[i]} does not exist in the target")
                ee[slot[i]] = pw
        base = target.poly({tuple(ee): c})
        k = e[v]
        out = out + (base if k == 0 else star_mul(base, vpow(k)))
    return out


def exact_div(p: OpPoly, q: OpPoly):
    """Exact quotient p / q in a commutative algebra, or None."""
    alg = p.alg
    if alg.core.rel:
        raise ValueError("exact division requires a commutative algebra")
    if q.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if p.is_zero():
        return alg.zero()
    rem = dict(p.terms)
    qlm, qlc = q.terms[0]
    key = alg.key
    quot = {}
    while rem:
        e = max(rem, key=key)
        c = rem[e]
        try:
            m = tuple(a - b for a, b in zip(e, qlm))
        except TypeError:  # pragma: no cover
            return None
        if any(x < 0 for x in m):
            return None
        f = c / qlc
        quot[m] = quot.get(m, 0) + f
        for qe, qc in q.terms:
            me = tuple(a + b for a, b in zip(m, qe))
            v = rem.get(me, 0) - f * qc
            if v == 0:
                rem.pop(me, None)
            else:
                rem[me] = v
    return alg.poly(quot)


def weighted_degree(p: OpPoly, weights) -> int:
    """Maximal weighted total degree over the terms of a non-zero element."""
    if p.is_zero():
        raise ValueError("the zero polynomial has no degree")
    if len(weights) != p.alg.n:
        raise ValueError("need one weight per variable")
    return max(sum(w * e for w, e in zip(weights, t)) for t, _ in p.terms)


def partitions_of(beta, length=None):
    """Multiset partitions of the exponent vector ``beta`` into non-zero
    vectors, optionally of a fixed length.

    Parts are produced in a canonical non-increasing (lexicographic) order;
    yields tuples of parts."""
    beta = tuple(beta)
    if not any(beta):
        raise ValueError("the zero vector has no partitions")

    def smaller(bound, limit):
        # all non-zero vectors <= limit componentwise and <= bound lexicographically
        out = []
        def rec(i, cur):
            if i == len(limit):
                v = tuple(cur)
                if any(v) and v <= bound:
                    out.append(v)
                return
            for x in range(limit[i], -1, -1):
                rec(i + 1, cur + [x])
        rec(0, [])
        out.sort(reverse=True)
        return out

    results = []

    def rec(remaining, bound, acc):
        if not any(remaining):
            if length is None or len(acc) == length:
                results.append(tuple(acc))
            return
        if length is not None and len(acc) >= length:
            return
        for part in smaller(bound, remaining):
            rec(tuple(a - b for a, b in zip(remaining, part)), part, acc + [part])

    rec(beta, beta, [])
    return results


def multiplicity_factorial(parts) -> int:
    """Product of factorials of the repetition counts of the distinct parts."""
    from collections import Counter
    from math import factorial
    out = 1
    for c in Counter(parts).values():
        out *= factorial(c)
    return out
