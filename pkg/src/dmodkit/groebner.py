"""Left Groebner bases over G-algebras of Lie type.

Buchberger's algorithm with the generalized product and chain criteria, left
normal forms, elimination, kernels of module homomorphisms (Modulo), lifts,
K-linear reduction and the dimension of a leading-term ideal.  Ideals and
free-module submodules share one pair-driven completion loop; module
monomials are (component, exponent) pairs.
"""

from __future__ import annotations

import heapq
import operator
from bisect import bisect_right
from dataclasses import dataclass

from gmpy2 import mpq

_neg = operator.neg

from .errors import CapExceeded
from .galgebra import GAlgebra, OpPoly, lie_bracket, star_mul
from .polyarith import (
    degrevlex,
    elim_order,
    exp_deg,
    exp_divides,
    exp_lcm,
    exp_sub,
    exp_suppmask,
)


# ---------------------------------------------------------------------------
# containers


class VecPoly:
    """An element of a free module A^m over one algebra."""

    __slots__ = ("alg", "rank", "components")

    def __init__(self, components):
        comps = tuple(components)
        if not comps:
            raise ValueError("rank must be positive")
        self.alg = comps[0].alg
        if any(c.alg.core is not self.alg.core for c in comps):
            raise ValueError("components belong to different algebras")
        self.components = comps
        self.rank = len(comps)

    @classmethod
    def unit(cls, alg, rank, j, value=None):
        comps = [alg.zero()] * rank
        comps[j] = value if value is not None else alg.one()
        return cls(comps)

    def is_zero(self):
        return all(c.is_zero() for c in self.components)

    def __eq__(self, other):
        if not isinstance(other, VecPoly):
            return NotImplemented
        return self.rank == other.rank and all(
            a == b for a, b in zip(self.components, other.components))

    def __hash__(self):
        return hash(tuple(self.components))

    def __repr__(self):
        return "(" + ", ".join(c.render() for c in self.components) + ")"


@dataclass(frozen=True)
class ModuleRule:
    """Module monomial ordering: position-over-term with a component priority
    list, or term-over-position (earlier components win ties)."""

    kind: str  # "pot" | "top"
    priority: tuple = ()

    def key_func(self, ring_key, rank):
        if self.kind == "pot":
            prio = self.priority or tuple(range(rank))
            rankof = {c: -i for i, c in enumerate(prio)}
            def key(comp, e):
                return (rankof[comp], *ring_key(e))
            return key
        if self.kind == "elim":
            # the priority components dominate positionally (in order); the
            # remaining components compare term-over-position below them
            prio = self.priority
            rankof = {c: -i for i, c in enumerate(prio)}
            rest = -len(prio)
            def key(comp, e):
                return (rankof.get(comp, rest), *ring_key(e), -comp)
            return key
        if self.kind == "top":
            def key(comp, e):
                return (*ring_key(e), -comp)
            return key
        raise ValueError(f"unknown module rule {self.kind!r}")


def pot(priority=()):
    return ModuleRule("pot", tuple(priority))


def pot_first(priority=(0,)):
    """Positional elimination of the listed components, term-over-position
    among the rest."""
    return ModuleRule("elim", tuple(priority))


def top():
    return ModuleRule("top")


@dataclass(frozen=True)
class GBasis:
    """A (left) Groebner basis together with its algebra.  When ``reduced``,
    the generators are monic, pairwise lm-irreducible, tail-reduced and
    sorted ascending by leading monomial: the canonical form used for
    regression comparisons."""

    gens: tuple
    alg: GAlgebra
    reduced: bool = False
    rank: int | None = None  # None for ideals, module rank otherwise
    rule: ModuleRule | None = None

    def __iter__(self):
        return iter(self.gens)

    def __len__(self):
        return len(self.gens)

    def __getitem__(self, i):
        return self.gens[i]


def _as_polys(gens):
    out = [g for g in gens if not g.is_zero()]
    if not out:
        raise ValueError("need at least one non-zero generator")
    alg = out[0].alg
    if any(g.alg.core is not alg.core for g in out):
        raise ValueError("generators belong to different algebras")
    return [alg.poly(dict(g.terms)) if g.alg is not alg else g for g in out], alg


def _require_global(alg):
    if not alg.is_global_order():
        raise ValueError(f"ordering {alg.order!r} is not a well-ordering")


# ---------------------------------------------------------------------------
# the completion engine (ideals and submodules)
#
# Internally an element is a tuple of ((comp, exp), coeff) sorted descending
# by the module key; ideals run with rank 1 and the trivial rule, which keeps
# a single code path.


class _Engine:
    def __init__(self, alg: GAlgebra, rank=1, rule: ModuleRule | None = None, cap=None):
        self.alg = alg
        self.rank = rank
        self.rule = rule or top()
        ring_key = alg.key
        self.mkey = self.rule.key_func(ring_key, rank)
        self.cap = cap
        self.mono_mul = alg.core.mono_mul
        # basis storage, sorted ascending by leading module key
        self.keys = []       # leading keys
        self.entries = []    # (lm=(comp,exp), lc, terms, suppmask, id)
        self._nextid = 0
        self._shiftprod = {}  # (entry id, shift) -> expanded product terms
        self._masks = {}

    # -- element plumbing

    def element(self, terms):
        """Normalize {(comp, exp): coeff} or pair iterable to internal form."""
        if not isinstance(terms, dict):
            acc = {}
            for m, c in terms:
                acc[m] = acc.get(m, 0) + c
            terms = acc
        mkey = self.mkey
        items = [(m, c) for m, c in terms.items() if c != 0]
        items.sort(key=lambda t: mkey(*t[0]), reverse=True)
        return tuple(items)

    def from_vec(self, v):
        if isinstance(v, OpPoly):
            return self.element({(0, e): c for e, c in v.terms})
        acc = {}
        for j, comp in enumerate(v.components):
            for e, c in comp.terms:
                acc[(j, e)] = c
        return self.element(acc)

    def to_vec(self, terms, components=None):
        comps = {}
        for (j, e), c in terms:
            comps.setdefault(j, {})[e] = c
        rng = components if components is not None else range(self.rank)
        polys = [self.alg.poly(comps.get(j, {})) for j in rng]
        if self.rank == 1 and components is None:
            return polys[0]
        return VecPoly(polys)

    def primitive(self, terms):
        import math
        if not terms:
            return terms
        den = 1
        for _, c in terms:
            den = den * int(c.denominator) // math.gcd(den, int(c.denominator))
        num = 0
        for _, c in terms:
            num = math.gcd(num, abs(int(c.numerator * den // c.denominator)))
        f = mpq(den, num)
        if terms[0][1] < 0:
            f = -f
        return tuple((m, c * f) for m, c in terms)

    def monic(self, terms):
        lead = terms[0][1]
        if lead == 1:
            return terms
        inv = 1 / lead
        return tuple((m, c * inv) for m, c in terms)

    # -- basis bookkeeping

    def suppmask(self, e):
        return self.alg.core.suppmask(e)

    def add_entry(self, terms, prune=False):
        (comp, e), lc = terms[0]
        k = self.mkey(comp, e)
        pos = bisect_right(self.keys, k)
        if prune:
            # entries whose leading monomial the new one divides are redundant
            # as reducers (anything they reduce, the new entry reduces)
            for i in range(pos, len(self.entries)):
                ent = self.entries[i]
                if ent[5] and ent[0][0] == comp and exp_divides(e, ent[0][1]):
                    ent[5] = False
        self.keys.insert(pos, k)
        self.entries.insert(pos, [(comp, e), lc, terms, self.suppmask(e),
                                  self._nextid, True])
        self._nextid += 1
        return pos

    def find_divisor(self, comp, e, ekey):
        """The dividing entry with the fewest terms (ties to the smallest
        leading monomial): short reducers keep the fill-in down."""
        hi = bisect_right(self.keys, ekey)
        emask = self.suppmask(e)
        best = None
        entries = self.entries
        for i in range(hi):
            ent = entries[i]
            (gcomp, ge), lc, terms, mask, _, alive = ent
            if alive and gcomp == comp and not (mask & ~emask) and exp_divides(ge, e):
                if best is None or len(terms) < len(best[2]):
                    best = ent
        return best

    def shifted_product(self, gid, shift, gterms):
        """x^shift * g, expanded once and reused across reductions."""
        cached = self._shiftprod.get((gid, shift))
        if cached is not None:
            return cached
        mono_mul = self.mono_mul
        acc = {}
        for (tcomp, te), tc in gterms:
            for pe, pc in mono_mul(shift, te).items():
                pm = (tcomp, pe)
                v = acc.get(pm, 0) + tc * pc
                if v == 0:
                    acc.pop(pm, None)
                else:
                    acc[pm] = v
        prod = tuple(acc.items())
        if len(self._shiftprod) < 200_000:
            self._shiftprod[(gid, shift)] = prod
        return prod

    # -- reduction

    def normal_form(self, terms, tail=True, scale_free=False):
        """Left normal form against the current basis; with ``tail`` False
        only the leading monomial is made irreducible.

        The work polynomial is a dict plus a min-heap of negated keys, so
        the largest remaining monomial pops in O(log n).  With ``scale_free``
        (basis building, where results are renormalized anyway) the work
        polynomial is periodically stripped to primitive integer form, which
        tames rational coefficient swell."""
        mkey = self.mkey
        cap = self.cap
        acc = {}
        for m, c in terms:
            v = acc.get(m, 0) + c
            if v == 0:
                acc.pop(m, None)
            else:
                acc[m] = v
        heap = [(tuple(map(_neg, mkey(*m))), m) for m in acc]
        heapq.heapify(heap)
        hpush = heapq.heappush
        hpop = heapq.heappop
        out = []
        acc_get = acc.get
        acc_pop = acc.pop
        steps = 0
        while heap:
            nk, m = hpop(heap)
            c = acc_get(m, 0)
            if c == 0:
                acc_pop(m, None)
                continue
            comp, e = m
            hit = self.find_divisor(comp, e, tuple(map(_neg, nk)))
            if hit is None:
                acc_pop(m)
                out.append((m, c))
                if not tail:
                    rest = sorted(acc.items(), key=lambda t: mkey(*t[0]),
                                  reverse=True)
                    out.extend(rest)
                    return tuple(out)
                continue
            (gcomp, ge), glc, gterms, _, gid, _ = hit
            shift = exp_sub(e, ge)
            prod = self.shifted_product(gid, shift, gterms)
            f = c / glc
            steps += 1
            if scale_free and steps % 16 == 0 and acc:
                scale = _content_scale(acc.values())
                if scale != 1:
                    for k2 in acc:
                        acc[k2] *= scale
                    out = [(m2, c2 * scale) for m2, c2 in out]
                    f = c * scale / glc
            for pm, pc in prod:
                old = acc_get(pm)
                if old is None:
                    if cap is not None and sum(pm[1]) > cap:
                        raise CapExceeded(
                            f"degree cap {cap} exceeded during reduction")
                    acc[pm] = -f * pc
                    hpush(heap, (tuple(map(_neg, mkey(*pm))), pm))
                else:
                    v = old - f * pc
                    if v == 0:
                        acc_pop(pm)
                    else:
                        acc[pm] = v
        if scale_free and out:
            scale = _content_scale(c for _, c in out)
            if scale != 1:
                out = [(m, c * scale) for m, c in out]
        return tuple(out)

    def spoly(self, a, b):
        (comp, ea), ca = a[0]
        (_, eb), cb = b[0]
        lcm = exp_lcm(ea, eb)
        acc = {}
        self._axpy(acc, exp_sub(lcm, ea), 1 / ca, a)
        self._axpy(acc, exp_sub(lcm, eb), -1 / cb, b)
        return self.element(acc)

    def _axpy(self, acc, shift, f, terms):
        mono_mul = self.mono_mul
        for (tcomp, te), tc in terms:
            c = f * tc
            for pe, pc in mono_mul(shift, te).items():
                m = (tcomp, pe)
                v = acc.get(m, 0) + c * pc
                if v == 0:
                    acc.pop(m, None)
                else:
                    acc[m] = v

    # -- completion

    def run(self, inputs, product_criterion=True, chain_criterion=True,
            strategy="normal", tail_reduce=True):
        basis = []
        for g in inputs:
            t = self.normal_form(g, scale_free=True)
            if t:
                t = self.primitive(t)
                basis.append(t)
                self.add_entry(t, prune=True)
        pairheap = []
        pending = {}  # (i, j) -> lcm exponent, the alive pair set
        wlen = [_weighted_len(b) for b in basis]
        key = self.alg.key

        def push(i, j, lcm):
            if strategy == "slim":
                sel = (wlen[i] + wlen[j], exp_deg(lcm), key(lcm))
            else:
                sel = (exp_deg(lcm), key(lcm), 0)
            heapq.heappush(pairheap, (sel, i, j))
            pending[(i, j)] = lcm

        def update_pairs(t):
            """Gebauer-Moeller update for the new element basis[t]."""
            (ct, et) = basis[t][0][0]
            cand = {}
            for i in range(t):
                (ci, ei) = basis[i][0][0]
                if ci == ct:
                    cand[i] = exp_lcm(ei, et)
            if chain_criterion:
                # criterion M: drop (i,t) when another lcm(j,t) properly divides
                drop = set()
                for i, li in cand.items():
                    for j, lj in cand.items():
                        if i != j and lj != li and exp_divides(lj, li):
                            drop.add(i)
                            break
                for i in drop:
                    cand.pop(i)
                # criterion F: one representative per lcm value
                seen = {}
                for i in sorted(cand):
                    seen.setdefault(cand[i], i)
                cand = {i: l for l, i in seen.items()}
                # criterion B: prune old pairs whose lcm the new leading
                # monomial divides strictly inside both triangle lcms
                for (i, j), lij in list(pending.items()):
                    (ci, _) = basis[i][0][0]
                    if ci != ct:
                        continue
                    if (exp_divides(et, lij)
                            and exp_lcm(basis[i][0][0][1], et) != lij
                            and exp_lcm(basis[j][0][0][1], et) != lij):
                        del pending[(i, j)]
            for i, lcm in sorted(cand.items()):
                push(i, t, lcm)

        for t in range(len(basis)):
            update_pairs(t)

        noncomm = self.alg.core.noncomm

        while pairheap:
            _, i, j = heapq.heappop(pairheap)
            if (i, j) not in pending:
                continue
            del pending[(i, j)]
            (ci, ei) = basis[i][0][0]
            (cj, ej) = basis[j][0][0]
            coprime = all(a == 0 or b == 0 for a, b in zip(ei, ej))
            todo = None
            if product_criterion and coprime and self.rank == 1:
                # coprime leading monomials: the s-polynomial reduces to the
                # commutator, which vanishes outright when the two supports
                # commute inside the algebra
                mask_i = 0
                for (_, te), _ in basis[i]:
                    mask_i |= self.suppmask(te)
                mask_j = 0
                for (_, te), _ in basis[j]:
                    mask_j |= self.suppmask(te)
                if self._masks_commute(mask_i, mask_j, noncomm):
                    continue
                todo = self._bracket(basis[i], basis[j])
            if todo is None:
                todo = self.spoly(basis[i], basis[j])
            r = self.normal_form(todo, tail=tail_reduce, scale_free=True)
            if not r:
                continue
            if self.cap is not None and sum(r[0][0][1]) > self.cap:
                raise CapExceeded(f"degree cap {self.cap} exceeded")
            r = self.primitive(r)
            basis.append(r)
            wlen.append(_weighted_len(r))
            self.add_entry(r, prune=True)
            update_pairs(len(basis) - 1)
        return basis

    @staticmethod
    def _masks_commute(ma, mb, noncomm):
        m = ma
        while m:
            v = (m & -m).bit_length() - 1
            if noncomm[v] & mb:
                return False
            m &= m - 1
        return True

    def _bracket(self, a, b):
        acc = {}
        mono_mul = self.mono_mul
        for (_, ea), ca in a:
            for (_, eb), cb in b:
                c = ca * cb
                for e, k in mono_mul(ea, eb).items():
                    m = (0, e)
                    v = acc.get(m, 0) + c * k
                    if v == 0:
                        acc.pop(m, None)
                    else:
                        acc[m] = v
                for e, k in mono_mul(eb, ea).items():
                    m = (0, e)
                    v = acc.get(m, 0) - c * k
                    if v == 0:
                        acc.pop(m, None)
                    else:
                        acc[m] = v
        return self.element(acc)

    # -- canonical form

    def reduce_basis(self, basis):
        mkey = self.mkey
        order = sorted(range(len(basis)), key=lambda i: mkey(*basis[i][0][0]))
        kept = []
        for i in order:
            (c, e) = basis[i][0][0]
            if any(kc == c and exp_divides(ke, e) for (kc, ke) in
                   (k[0][0] for k in kept)):
                continue
            kept.append(basis[i])
        out = []
        for i, g in enumerate(kept):
            self.keys, self.entries = [], []
            for j, other in enumerate(kept):
                if j != i:
                    self.add_entry(other)
            out.append(self.monic(self.normal_form(g)))
        self.keys, self.entries = [], []
        for g in out:
            self.add_entry(g)
        out.sort(key=lambda t: mkey(*t[0][0]))
        return out


def _content_scale(values):
    """The factor turning the values into coprime integers."""
    import math
    den = 1
    num = 0
    for c in values:
        den = den * int(c.denominator) // math.gcd(den, int(c.denominator))
    for c in values:
        num = math.gcd(num, int(c.numerator * den // c.denominator))
    if num == 0:
        return mpq(1)
    return mpq(den, num)


def _weighted_len(terms):
    """Length measure for the slim selection strategy: term count plus total
    degree (a proxy for intermediate expression swell)."""
    return len(terms) + max(sum(m[0][1]) for m in terms)


# ---------------------------------------------------------------------------
# public ideal-level interface


def normal_form(f, G, cap=None) -> OpPoly:
    """The left normal form of ``f`` with respect to the Groebner basis ``G``."""
    gens, alg = _as_polys(list(G.gens) if isinstance(G, GBasis) else list(G))
    _require_global(alg)
    eng = _Engine(alg, cap=cap)
    for g in gens:
        eng.add_entry(eng.from_vec(g))
    if isinstance(f, VecPoly):
        raise TypeError("use normal_form_vec for module elements")
    fterms = eng.from_vec(alg.poly(dict(f.terms)) if f.alg is not alg else f)
    return eng.to_vec(eng.normal_form(fterms))


def normal_form_vec(v: VecPoly, G: GBasis, cap=None) -> VecPoly:
    alg = G.alg
    eng = _Engine(alg, rank=G.rank, rule=G.rule, cap=cap)
    for g in G.gens:
        eng.add_entry(eng.from_vec(g))
    return eng.to_vec(eng.normal_form(eng.from_vec(v)))


def spoly(f: OpPoly, g: OpPoly) -> OpPoly:
    gens, alg = _as_polys([f, g])
    eng = _Engine(alg)
    return eng.to_vec(eng.spoly(eng.from_vec(gens[0]), eng.from_vec(gens[1])))


def buchberger(gens, *, cap=None, product_criterion=True, chain_criterion=True,
               strategy="normal", reduced=True) -> GBasis:
    """Left Groebner basis of the ideal generated by ``gens``.

    ``strategy`` selects the pair queue: "normal" picks minimal lcm degree
    first, "slim" prefers pairs with short, low-degree parents.  Both yield
    the same reduced basis.  ``cap`` bounds the total degree of any
    intermediate normal form and raises ``CapExceeded`` cleanly.
    """
    polys, alg = _as_polys(gens)
    _require_global(alg)
    eng = _Engine(alg, cap=cap)
    basis = eng.run([eng.from_vec(p) for p in polys],
                    product_criterion=product_criterion,
                    chain_criterion=chain_criterion,
                    strategy=strategy)
    if reduced:
        basis = eng.reduce_basis(basis)
    return GBasis(tuple(eng.to_vec(t) for t in basis), alg, reduced=reduced)


def buchberger_module(rows, rank, rule: ModuleRule | None = None, *, cap=None,
                      chain_criterion=True, reduced=True) -> GBasis:
    """Left Groebner basis of the submodule of A^rank generated by ``rows``."""
    rows = [r for r in rows if not r.is_zero()]
    if not rows:
        raise ValueError("need at least one non-zero row")
    alg = rows[0].alg
    _require_global(alg)
    rule = rule or pot()
    eng = _Engine(alg, rank=rank, rule=rule, cap=cap)
    basis = eng.run([eng.from_vec(r) for r in rows],
                    product_criterion=False, chain_criterion=chain_criterion)
    if reduced:
        basis = eng.reduce_basis(basis)
    return GBasis(tuple(eng.to_vec(t) for t in basis), alg, reduced=reduced,
                  rank=rank, rule=rule)


def reduce_gb(G) -> GBasis:
    """The unique reduced Groebner basis for (ideal, ordering); idempotent."""
    if isinstance(G, GBasis) and G.rank is not None:
        eng = _Engine(G.alg, rank=G.rank, rule=G.rule)
        basis = eng.reduce_basis([eng.from_vec(r) for r in G.gens])
        return GBasis(tuple(eng.to_vec(t) for t in basis), G.alg, reduced=True,
                      rank=G.rank, rule=G.rule)
    gens, alg = _as_polys(list(G.gens) if isinstance(G, GBasis) else list(G))
    eng = _Engine(alg)
    basis = eng.reduce_basis([eng.from_vec(g) for g in gens])
    return GBasis(tuple(eng.to_vec(t) for t in basis), alg, reduced=True)


# ---------------------------------------------------------------------------
# elimination


def _subalgebra(alg: GAlgebra, keep):
    keep = list(keep)
    pos = {v: i for i, v in enumerate(keep)}
    rel = {}
    for (i, j), d in alg.core.rel.items():
        if i in pos and j in pos:
            dd = {}
            for e, c in d.items():
                ee = [0] * len(keep)
                for v, p in enumerate(e):
                    if p:
                        ee[pos[v]] = p  # support inside keep, checked by caller
                dd[tuple(ee)] = c
            rel[(pos[i], pos[j])] = dd
    pairs = [(pos[a], pos[b]) for a, b in alg.pairs if a in pos and b in pos]
    sub = GAlgebra([alg.names[v] for v in keep], rel,
                   roles=[alg.roles[v] for v in keep], pairs=pairs,
                   _check_ndc=False)
    sub.gl_index = {pos[v]: ij for v, ij in alg.gl_index.items() if v in pos}
    return sub


def eliminate(gens, drop, *, cap=None, strategy="normal",
              product_criterion=True, chain_criterion=True) -> GBasis:
    """Generators of the intersection of the ideal with the subalgebra on the
    remaining variables, via a weight-first elimination ordering."""
    polys, alg = _as_polys(gens)
    drop_idx = sorted(alg.index(v) if not isinstance(v, int) else v for v in drop)
    keep = [v for v in range(alg.n) if v not in set(drop_idx)]
    for (i, j), d in alg.core.rel.items():
        if i in set(keep) and j in set(keep):
            for e in d:
                if any(e[v] for v in drop_idx):
                    raise ValueError(
                        f"remaining variables do not span a subalgebra: relation "
                        f"({alg.names[i]},{alg.names[j]}) involves eliminated variables")
    elim_alg = alg.with_order(elim_order(drop_idx, alg.n))  # re-checks admissibility
    G = buchberger([elim_alg.poly(dict(p.terms)) for p in polys], cap=cap,
                   strategy=strategy, product_criterion=product_criterion,
                   chain_criterion=chain_criterion)
    sub = _subalgebra(alg, keep)
    kept = []
    dropset = set(drop_idx)
    for g in G.gens:
        if g.support_vars() & dropset:
            continue
        kept.append(sub.poly({tuple(e[v] for v in keep): c for e, c in g.terms}))
    if not kept:
        return GBasis((), sub, reduced=True)
    return reduce_gb(GBasis(tuple(kept), sub))


# ---------------------------------------------------------------------------
# Modulo, Lift, syzygies


def modulo_kernel(F, G=(), *, cap=None) -> GBasis:
    """Kernel of the module map A^k -> A/<G>, e_j -> F_j.

    Computed from a module Groebner basis of {(F_j, e_j)} u {(G_i, 0)} in
    A^(1+k) under an ordering eliminating the first component; rows with
    vanishing first slot, projected to the last k slots, generate the kernel
    (and already form a Groebner basis there, term-over-position).
    """
    F = list(F)
    k = len(F)
    alg = F[0].alg
    rank = 1 + k
    rows = []
    for j, f in enumerate(F):
        comps = [alg.zero()] * rank
        comps[0] = f
        comps[1 + j] = alg.one()
        rows.append(VecPoly(comps))
    for g in G:
        if g.is_zero():
            continue
        comps = [alg.zero()] * rank
        comps[0] = g
        rows.append(VecPoly(comps))
    GB = buchberger_module(rows, rank, pot_first((0,)), cap=cap)
    kernel = [VecPoly(r.components[1:]) for r in GB.gens
              if r.components[0].is_zero()]
    return GBasis(tuple(kernel), alg, reduced=True, rank=k, rule=top())


def syzygies(F, *, cap=None) -> GBasis:
    """The syzygy module of F: all (a_j) with sum a_j * F_j = 0."""
    return modulo_kernel(F, (), cap=cap)


def lift(F, target, *, cap=None):
    """Cofactors (a_1..a_k) with sum a_i * F_i = target; raises if target is
    not in the left ideal generated by F."""
    F = list(F)
    k = len(F)
    alg = F[0].alg
    rank = 1 + k
    rows = []
    for j, f in enumerate(F):
        comps = [alg.zero()] * rank
        comps[0] = f
        comps[1 + j] = alg.one()
        rows.append(VecPoly(comps))
    GB = buchberger_module(rows, rank, pot_first((0,)), cap=cap)
    eng = _Engine(alg, rank=rank, rule=pot_first((0,)), cap=cap)
    for r in GB.gens:
        eng.add_entry(eng.from_vec(r))
    tvec = VecPoly([target] + [alg.zero()] * k)
    nf = eng.to_vec(eng.normal_form(eng.from_vec(tvec)))
    if not nf.components[0].is_zero():
        raise ValueError("target does not lie in the ideal generated by F")
    return tuple(-c for c in nf.components[1:])


# ---------------------------------------------------------------------------
# K-linear reduction


class LinearReducer:
    """Incremental Gaussian elimination over the coefficient field, tracking
    how each residue decomposes over the inserted elements.  No monomial
    multiplication happens here."""

    def __init__(self, alg: GAlgebra):
        self.alg = alg
        self.pivots = {}  # pivot exponent -> (row dict, combo dict tag->coeff)
        self.ntags = 0

    def _reduce_dict(self, cur, combo):
        key = self.alg.key
        pivots = self.pivots
        while True:
            hits = [e for e in cur if e in pivots]
            if not hits:
                return cur, combo
            top = max(hits, key=key)
            rowdict, rowcombo = pivots[top]
            f = cur[top] / rowdict[top]
            for e, c in rowdict.items():
                v = cur.get(e, 0) - f * c
                if v == 0:
                    cur.pop(e, None)
                else:
                    cur[e] = v
            for t, c in rowcombo.items():
                v = combo.get(t, 0) + f * c
                if v == 0:
                    combo.pop(t, None)
                else:
                    combo[t] = v

    def add(self, p: OpPoly, tag=None):
        """Insert an element; returns True when it enlarges the span."""
        if tag is None:
            tag = self.ntags
        self.ntags += 1
        cur = dict(p.terms)
        combo = {}
        cur, combo = self._reduce_dict(cur, combo)
        if not cur:
            return False
        key = self.alg.key
        pe = max(cur, key=key)
        own = {tag: mpq(1)}
        for t, c in combo.items():
            own[t] = own.get(t, 0) - c
        self.pivots[pe] = (cur, own)
        return True

    def express(self, p: OpPoly):
        """Coefficients writing ``p`` over the inserted elements, or None."""
        cur = dict(p.terms)
        combo = {}
        cur, combo = self._reduce_dict(cur, combo)
        if cur:
            return None
        return combo

    def reduce(self, p: OpPoly):
        cur = dict(p.terms)
        combo = {}
        cur, combo = self._reduce_dict(cur, combo)
        return self.alg.poly(cur), combo


def lin_reduce(f: OpPoly, basis):
    """K-linear Gaussian reduction of ``f`` against a list of elements.

    Returns (residue, coefficients) with f = residue + sum c_i * basis_i;
    no monomial of the residue equals a pivot monomial of the basis list.
    """
    basis = list(basis)
    red = LinearReducer(f.alg)
    for i, b in enumerate(basis):
        if not b.is_zero():
            red.add(b, i)
    residue, combo = red.reduce(f)
    return residue, tuple(mpq(combo.get(i, 0)) for i in range(len(basis)))


# ---------------------------------------------------------------------------
# leading-term dimension and ideal comparison


def lt_dimension(G) -> int:
    """Krull dimension of the leading-monomial ideal, all variables treated
    commutatively: the maximal size of a variable subset S such that no
    leading monomial has support inside S.  For a G-algebra quotient this is
    the Gel'fand-Kirillov dimension.  The unit ideal gives -1."""
    gens = list(G.gens) if isinstance(G, GBasis) else list(G)
    if not gens:
        raise ValueError("empty generating set; dimension is the variable count")
    alg = gens[0].alg
    masks = set()
    for g in gens:
        if g.is_zero():
            continue
        masks.add(exp_suppmask(g.lm()))
    masks = [m for m in masks if not any(o != m and (o & ~m) == 0 for o in masks)]
    full = (1 << alg.n) - 1
    memo = {}

    def best(cand):
        got = memo.get(cand)
        if got is not None:
            return got
        inside = None
        for m in masks:
            if not (m & ~cand):
                inside = m
                break
        if inside is None:
            r = bin(cand).count("1")
        elif inside == 0:
            r = -1
        else:
            r = -1
            m = inside
            while m:
                v = m & -m
                r = max(r, best(cand & ~v))
                m &= m - 1
        memo[cand] = r
        return r

    return best(full)


def lt_dimension_of(gens) -> int:
    return lt_dimension(buchberger(list(gens)))


def ideal_equal(A, B, *, cap=None) -> bool:
    """Mutual normal-form-to-zero comparison of two generating sets."""
    A = list(A.gens) if isinstance(A, GBasis) else list(A)
    B = list(B.gens) if isinstance(B, GBasis) else list(B)
    nzA = [g for g in A if not g.is_zero()]
    nzB = [g for g in B if not g.is_zero()]
    if not nzA or not nzB:
        return not nzA and not nzB
    GA = buchberger(nzA, cap=cap)
    GB = buchberger(nzB, cap=cap)
    return (all(normal_form(b, GA).is_zero() for b in nzB)
            and all(normal_form(a, GB).is_zero() for a in nzA))
