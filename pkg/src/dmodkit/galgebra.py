"""Presentations of G-algebras of Lie type and their arithmetic.

An algebra is given by variable names and the rewriting data d_ij of the
relations x_j * x_i = x_i * x_j + d_ij (i < j).  Multiplication is generic
relation rewriting with a per-algebra memo table of power-pair products;
nothing here is specific to the Weyl algebra, so one engine serves Weyl,
shift, homogenized and gl-extended algebras uniformly.
"""

from __future__ import annotations

from dataclasses import dataclass

from gmpy2 import mpq

from .polyarith import (
    MonOrder,
    cmp_monomials,
    degrevlex,
    block_order,
    exp_add,
    exp_deg,
    exp_sub,
    exp_suppmask,
    is_global,
    weight_order,
)


_MPQ = type(mpq(0))


class AdmissibilityError(ValueError):
    """The ordering does not dominate a relation tail (lm(d_ij) >= x_i*x_j)."""


class NondegeneracyError(ValueError):
    """A triple of relations fails the Jacobi-type compatibility condition."""


class _RelationCore:
    """Relation data and multiplication caches shared by all orderings of one
    algebra.  The memo tables only grow; concurrent readers see either a miss
    or a finished entry, so sharing between computations is safe."""

    __slots__ = ("names", "n", "rel", "noncomm", "lowmask", "_mul_memo",
                 "_pow_memo", "_masks")

    def __init__(self, names, rel):
        self.names = tuple(names)
        self.n = len(self.names)
        self.rel = rel  # dict[(i, j)] -> dict[exp -> mpq], i < j, omitted = commute
        self.noncomm = [0] * self.n
        for (i, j) in rel:
            self.noncomm[i] |= 1 << j
            self.noncomm[j] |= 1 << i
        self.lowmask = [(1 << i) - 1 for i in range(self.n)]
        self._mul_memo = {}
        self._pow_memo = {}
        self._masks = {}

    def suppmask(self, e):
        m = self._masks.get(e)
        if m is None:
            m = exp_suppmask(e)
            self._masks[e] = m
        return m

    def commutes(self, amask, bmask):
        """No variable of a (mask) needs to move past a noncommuting lower
        variable of b (mask)."""
        m = amask
        while m:
            v = (m & -m).bit_length() - 1
            if self.noncomm[v] & self.lowmask[v] & bmask:
                return False
            m &= m - 1
        return True

    def mono_mul(self, a, b):
        """Canonical product x^a * x^b as a dict {exponent: coefficient}."""
        memo = self._mul_memo
        out = memo.get((a, b))
        if out is not None:
            return out
        out = self._mono_mul(a, b)
        memo[(a, b)] = out
        return out

    def _mono_mul(self, a, b):
        if self.commutes(self.suppmask(a), self.suppmask(b)):
            return {exp_add(a, b): 1}
        j = max(i for i, e in enumerate(a) if e)
        i = min(k for k, e in enumerate(b) if e)
        if j <= i:
            return {exp_add(a, b): 1}
        a1 = list(a)
        p = a1[j]
        a1[j] = 0
        a1 = tuple(a1)
        b1 = list(b)
        q = b1[i]
        b1[i] = 0
        b1 = tuple(b1)
        mid = self.pow_pair(j, p, i, q)
        out = {}
        a1_trivial = not any(a1)
        b1_trivial = not any(b1)
        for g, cg in mid.items():
            if a1_trivial:
                left = {g: cg}
            else:
                left = {}
                for d1, c1 in self.mono_mul(a1, g).items():
                    left[d1] = left.get(d1, 0) + cg * c1
            for d1, c1 in left.items():
                if b1_trivial:
                    out[d1] = out.get(d1, 0) + c1
                else:
                    for d2, c2 in self.mono_mul(d1, b1).items():
                        out[d2] = out.get(d2, 0) + c1 * c2
        return {e: c for e, c in out.items() if c != 0}

    def pow_pair(self, j, p, i, q):
        """x_j^p * x_i^q for j > i, the memoized rewriting kernel."""
        d = self.rel.get((i, j))
        if d is None:
            e = [0] * self.n
            e[i] = q
            e[j] = p
            return {tuple(e): 1}
        key = (j, p, i, q)
        memo = self._pow_memo
        out = memo.get(key)
        if out is not None:
            return out
        if p == 1 and q == 1:
            e = [0] * self.n
            e[i] = 1
            e[j] = 1
            out = {tuple(e): 1}
            for g, c in d.items():
                out[g] = out.get(g, 0) + c
        elif q == 1:
            # x_j^p x_i = x_j^{p-1} (x_j x_i)
            prev = self.pow_pair(j, 1, i, 1)
            ej = [0] * self.n
            ej[j] = p - 1
            ej = tuple(ej)
            out = {}
            for g, c in prev.items():
                for e2, c2 in self.mono_mul(ej, g).items():
                    out[e2] = out.get(e2, 0) + c * c2
        else:
            # x_j^p x_i^q = (x_j^p x_i^{q-1}) x_i
            prev = self.pow_pair(j, p, i, q - 1)
            ei = [0] * self.n
            ei[i] = 1
            ei = tuple(ei)
            out = {}
            for g, c in prev.items():
                for e2, c2 in self.mono_mul(g, ei).items():
                    out[e2] = out.get(e2, 0) + c * c2
        out = {e: c for e, c in out.items() if c != 0}
        memo[key] = out
        return out


class GAlgebra:
    """A G-algebra of Lie type equipped with an admissible monomial ordering.

    ``roles`` tags every variable ('x', 'd', 't', 'dt', 's', 'h' or 'c') and
    ``pairs`` lists the (position, momentum) variable pairs that weight
    vectors act on; both are preset metadata used by the weight-filtration
    operations.  Instances are immutable; re-equipping with another ordering
    shares the multiplication caches.
    """

    def __init__(self, names, relations, order=None, roles=None, pairs=None,
                 _core=None, check=True, _check_ndc=True):
        if _core is not None:
            self.core = _core
        else:
            names = tuple(names)
            if len(set(names)) != len(names):
                raise ValueError("duplicate variable names")
            rel = {}
            for (i, j), d in relations.items():
                if not (0 <= i < j < len(names)):
                    raise ValueError(f"bad relation pair ({i},{j})")
                dd = {tuple(e): mpq(c) for e, c in d.items() if c != 0}
                if dd:
                    rel[(i, j)] = dd
            self.core = _RelationCore(names, rel)
        self.names = self.core.names
        self.n = self.core.n
        self.order = order or degrevlex()
        self.roles = tuple(roles) if roles else ("c",) * self.n
        self.pairs = tuple(tuple(p) for p in pairs) if pairs else ()
        self.gl_index = {}  # var index -> (i, j) for gl generators, set by presets
        self._key_fn = self.order.key_func(self.n)
        self._keys = {}
        self._index = {nm: i for i, nm in enumerate(self.names)}
        if check:
            self._check_admissible()
            if _check_ndc:
                self._check_nondegenerate()

    # -- construction helpers

    def with_order(self, order: MonOrder) -> "GAlgebra":
        """Re-equip with another ordering (sharing the multiplication caches);
        the admissibility check runs again, the order-independent
        nondegeneracy check does not."""
        alg = GAlgebra(None, None, order=order, roles=self.roles, pairs=self.pairs,
                       _core=self.core, _check_ndc=False)
        alg.gl_index = self.gl_index
        return alg

    def _check_admissible(self):
        key = self.key
        for (i, j), d in self.core.rel.items():
            e = [0] * self.n
            e[i] += 1
            e[j] += 1
            prod_key = key(tuple(e))
            top = max(d, key=key)
            if not key(top) < prod_key:
                raise AdmissibilityError(
                    f"relation tail for ({self.names[i]},{self.names[j]}) has "
                    f"leading monomial {self.render_exp(top)} not below "
                    f"{self.names[i]}*{self.names[j]} under {self.order!r}")

    def _check_nondegenerate(self):
        rel = self.core.rel
        if not rel:
            return
        for a in range(self.n):
            for b in range(a + 1, self.n):
                for c in range(b + 1, self.n):
                    if (a, b) not in rel and (a, c) not in rel and (b, c) not in rel:
                        continue
                    expr = (self._ndc_bracket(rel.get((a, b)), c)
                            + self._ndc_bracket_right(b, rel.get((a, c)))
                            + self._ndc_bracket(rel.get((b, c)), a))
                    if not expr.is_zero():
                        raise NondegeneracyError(
                            f"relations of ({self.names[a]},{self.names[b]},"
                            f"{self.names[c]}) are incompatible")

    def _ndc_bracket(self, d, k):
        # [d, x_k] for a relation tail d (dict form)
        if not d:
            return self.zero()
        p = self.poly(d)
        return p * self.gen(k) - self.gen(k) * p

    def _ndc_bracket_right(self, k, d):
        # [x_k, d]
        if not d:
            return self.zero()
        p = self.poly(d)
        return self.gen(k) * p - p * self.gen(k)

    # -- monomial services

    def key(self, e):
        k = self._keys.get(e)
        if k is None:
            k = self._key_fn(e)
            self._keys[e] = k
        return k

    def is_global_order(self):
        return is_global(self.order, self.n)

    def index(self, name: str) -> int:
        return self._index[name]

    def unit_exp(self, i, power=1):
        e = [0] * self.n
        e[i] = power
        return tuple(e)

    # -- element constructors

    def zero(self):
        return OpPoly(self, ())

    def one(self):
        return self.poly({(0,) * self.n: 1})

    def gen(self, i_or_name):
        i = i_or_name if isinstance(i_or_name, int) else self._index[i_or_name]
        return self.poly({self.unit_exp(i): 1})

    def scalar(self, c):
        c = mpq(c)
        return self.zero() if c == 0 else self.poly({(0,) * self.n: c})

    def poly(self, terms) -> "OpPoly":
        """Build an element from a {exponent: coefficient} mapping or an
        iterable of (exponent, coefficient) pairs."""
        if not isinstance(terms, dict):
            acc = {}
            for e, c in terms:
                acc[tuple(e)] = acc.get(tuple(e), 0) + mpq(c)
            terms = acc
        key = self.key
        items = [(tuple(e), mpq(c)) for e, c in terms.items() if c != 0]
        items.sort(key=lambda t: key(t[0]), reverse=True)
        return OpPoly(self, tuple(items))

    def monomial(self, **powers):
        e = [0] * self.n
        for nm, p in powers.items():
            e[self._index[nm]] = p
        return self.poly({tuple(e): 1})

    # -- rendering

    def render_exp(self, e):
        parts = []
        for i, p in enumerate(e):
            if p == 1:
                parts.append(self.names[i])
            elif p > 1:
                parts.append(f"{self.names[i]}^{p}")
        return "*".join(parts) if parts else "1"

    def __repr__(self):
        return f"GAlgebra({','.join(self.names)}; {self.order!r})"


class OpPoly:
    """An element of a G-algebra: terms sorted descending in the algebra's
    ordering, no zero coefficients."""

    __slots__ = ("alg", "terms")

    def __init__(self, alg: GAlgebra, terms):
        self.alg = alg
        self.terms = terms

    # -- structure

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def lm(self):
        if not self.terms:
            raise ValueError("zero element has no leading monomial")
        return self.terms[0][0]

    def lc(self):
        if not self.terms:
            raise ValueError("zero element has no leading coefficient")
        return self.terms[0][1]

    def degree(self):
        return max((exp_deg(e) for e, _ in self.terms), default=-1)

    def constant_part(self):
        zero = (0,) * self.alg.n
        for e, c in self.terms:
            if e == zero:
                return c
        return mpq(0)

    def is_constant(self):
        return all(not any(e) for e, _ in self.terms)

    def support_vars(self):
        s = set()
        for e, _ in self.terms:
            s.update(i for i, p in enumerate(e) if p)
        return s

    def as_dict(self):
        return dict(self.terms)

    def __eq__(self, other):
        if isinstance(other, OpPoly):
            if self.alg.core is not other.alg.core:
                return NotImplemented
            return dict(self.terms) == dict(other.terms)
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms))

    # -- arithmetic

    def _require_same(self, other):
        if self.alg is not other.alg:
            if self.alg.core is other.alg.core:
                other = self.alg.poly(dict(other.terms))
            else:
                raise ValueError("operands belong to different algebras")
        return other

    def __add__(self, other):
        if isinstance(other, (int, _MPQ)):
            other = self.alg.scalar(other)
        other = self._require_same(other)
        acc = dict(self.terms)
        for e, c in other.terms:
            v = acc.get(e, 0) + c
            if v == 0:
                acc.pop(e, None)
            else:
                acc[e] = v
        return self.alg.poly(acc)

    __radd__ = __add__

    def __neg__(self):
        return OpPoly(self.alg, tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other):
        if isinstance(other, (int, _MPQ)):
            other = self.alg.scalar(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        c = mpq(c)
        if c == 0:
            return self.alg.zero()
        return OpPoly(self.alg, tuple((e, c * v) for e, v in self.terms))

    def __mul__(self, other):
        if isinstance(other, OpPoly):
            return star_mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        if isinstance(other, OpPoly):
            return star_mul(other, self)
        return self.scale(other)

    def __pow__(self, k):
        out = self.alg.one()
        for _ in range(k):
            out = star_mul(out, self)
        return out

    def monic(self):
        if not self.terms:
            return self
        lead = self.terms[0][1]
        if lead == 1:
            return self
        inv = 1 / lead
        return OpPoly(self.alg, tuple((e, c * inv) for e, c in self.terms))

    def primitive(self):
        """Scale to coprime integer coefficients with positive lead."""
        if not self.terms:
            return self
        import math
        den = 1
        for _, c in self.terms:
            den = den * int(c.denominator) // math.gcd(den, int(c.denominator))
        num = 0
        for _, c in self.terms:
            num = math.gcd(num, abs(int(c.numerator * den // c.denominator)))
        f = mpq(den, num)
        if self.terms[0][1] < 0:
            f = -f
        return OpPoly(self.alg, tuple((e, c * f) for e, c in self.terms))

    def __repr__(self):
        return self.render()

    def render(self):
        if not self.terms:
            return "0"
        alg = self.alg
        parts = []
        for e, c in self.terms:
            mono = alg.render_exp(e)
            if mono == "1":
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
# multiplication


def star_mul(a: OpPoly, b: OpPoly) -> OpPoly:
    """Product in the G-algebra, by relation rewriting."""
    if a.alg.core is not b.alg.core:
        raise ValueError("operands belong to different algebras")
    core = a.alg.core
    mono_mul = core.mono_mul
    out = {}
    for ea, ca in a.terms:
        for eb, cb in b.terms:
            c = ca * cb
            for e, k in mono_mul(ea, eb).items():
                v = out.get(e, 0) + c * k
                if v == 0:
                    out.pop(e, None)
                else:
                    out[e] = v
    return a.alg.poly(out)


def lie_bracket(a: OpPoly, b: OpPoly, k=None) -> OpPoly:
    """[a, b] = a*b - b*a, or the skew variant a*b - k*b*a.

    The top term a.lm()*b.lm() of both products cancels for k = 1, which the
    dict-based accumulation exploits automatically."""
    ab = star_mul(a, b)
    ba = star_mul(b, a)
    if k is None or k == 1:
        return ab - ba
    return ab - ba.scale(k)


# ---------------------------------------------------------------------------
# presets


def weyl(n, names=None) -> GAlgebra:
    """The n-th Weyl algebra with variables (x_1..x_n, D_1..D_n)."""
    xs = list(names) if names else [f"x{i+1}" for i in range(n)]
    if len(xs) != n:
        raise ValueError("need one name per variable")
    ds = ["D" + nm for nm in xs]
    rel = {(i, n + i): {(0,) * (2 * n): mpq(1)} for i in range(n)}
    return GAlgebra(xs + ds, rel,
                    roles=("x",) * n + ("d",) * n,
                    pairs=[(i, n + i) for i in range(n)])


def weyl_t(p, n, names=None) -> GAlgebra:
    """Weyl algebra in (t_1..t_p, x_1..x_n, Dt_1..Dt_p, D_1..D_n); the
    ambient of the Malgrange construction, with the (t, Dt) pairs first."""
    xs = list(names) if names else [f"x{i+1}" for i in range(n)]
    ts = ["t"] if p == 1 else [f"t{j+1}" for j in range(p)]
    all_names = ts + xs + ["D" + nm for nm in ts + xs]
    m = p + n
    rel = {(i, m + i): {(0,) * (2 * m): mpq(1)} for i in range(m)}
    return GAlgebra(all_names, rel,
                    roles=("t",) * p + ("x",) * n + ("dt",) * p + ("d",) * n,
                    pairs=[(i, m + i) for i in range(m)])


def _snames(p):
    return ["s"] if p == 1 else [f"s{j+1}" for j in range(p)]


def weyl_s(n, p=1, names=None) -> GAlgebra:
    """D_n[s_1..s_p]: the Weyl algebra with central polynomial variables s_j."""
    xs = list(names) if names else [f"x{i+1}" for i in range(n)]
    all_names = xs + ["D" + nm for nm in xs] + _snames(p)
    nn = 2 * n + p
    rel = {(i, n + i): {(0,) * nn: mpq(1)} for i in range(n)}
    return GAlgebra(all_names, rel,
                    roles=("x",) * n + ("d",) * n + ("s",) * p,
                    pairs=[(i, n + i) for i in range(n)])


def weyl_shift(n, p=1, names=None) -> GAlgebra:
    """D_n tensor the p-th shift algebra: variables (x, D, Dt_j, s_j) with
    Dt_j s_j = s_j Dt_j - Dt_j; the Briancon-Maisonobe ambient."""
    xs = list(names) if names else [f"x{i+1}" for i in range(n)]
    dts = ["Dt"] if p == 1 else [f"Dt{j+1}" for j in range(p)]
    all_names = xs + ["D" + nm for nm in xs] + dts + _snames(p)
    nn = 2 * n + 2 * p
    rel = {(i, n + i): {(0,) * nn: mpq(1)} for i in range(n)}
    for j in range(p):
        dt = 2 * n + j
        s = 2 * n + p + j
        e = [0] * nn
        e[dt] = 1
        rel[(dt, s)] = {tuple(e): mpq(1)}  # s*Dt = Dt*s + Dt
    return GAlgebra(all_names, rel,
                    roles=("x",) * n + ("d",) * n + ("dt",) * p + ("s",) * p,
                    pairs=[(i, n + i) for i in range(n)])


def weyl_t_shift(n, p=1, names=None) -> GAlgebra:
    """The extended algebra containing both t_j and the shift part:
    (t, x, Dt, D, s) with [Dt_j, t_j] = 1, [t_k, s_j] = delta_jk t_j and
    [Dt_k, s_j] = -delta_jk Dt_j.  Used for structural invariant tests."""
    xs = list(names) if names else [f"x{i+1}" for i in range(n)]
    ts = ["t"] if p == 1 else [f"t{j+1}" for j in range(p)]
    dts = ["D" + t for t in ts]
    all_names = ts + xs + dts + ["D" + nm for nm in xs] + _snames(p)
    nn = 2 * n + 3 * p
    rel = {}
    for j in range(p):
        rel[(j, p + n + j)] = {(0,) * nn: mpq(1)}  # Dt_j t_j = t_j Dt_j + 1
    for i in range(n):
        rel[(p + i, 2 * p + n + i)] = {(0,) * nn: mpq(1)}
    for j in range(p):
        s = 2 * p + 2 * n + j
        e = [0] * nn
        e[j] = 1
        rel[(j, s)] = {tuple(e): mpq(-1)}  # s*t = t*s - t
        e = [0] * nn
        e[p + n + j] = 1
        rel[(p + n + j, s)] = {tuple(e): mpq(1)}  # s*Dt = Dt*s + Dt
    return GAlgebra(all_names, rel,
                    roles=("t",) * p + ("x",) * n + ("dt",) * p + ("d",) * n + ("s",) * p,
                    pairs=[(j, p + n + j) for j in range(p)]
                    + [(p + i, 2 * p + n + i) for i in range(n)])


def homog_order(u, v, base: MonOrder | None = None) -> MonOrder:
    """The homogenized global ordering: compare by (u, v, 1)-degree (h has
    weight 1), then by the base ordering on the dehomogenized monomials."""
    n = len(u)
    dehom = block_order([(tuple(range(2 * n)), base or degrevlex())])
    return weight_order(tuple(u) + tuple(v) + (1,), dehom)


def homog_initial_order(u, v, w, base: MonOrder | None = None) -> MonOrder:
    """The (-w, w) refinement of the homogenized ordering used to compute
    initial ideals: (u, v, 1)-degree first, then the (-w, w, 0)-weight, then
    the base ordering on the dehomogenized monomials."""
    n = len(u)
    dehom = block_order([(tuple(range(2 * n)), base or degrevlex())])
    ww = tuple(-x for x in w) + tuple(w) + (0,)
    return weight_order(tuple(u) + tuple(v) + (1,), weight_order(ww, dehom))


def weyl_homog(n, u=None, v=None, names=None) -> GAlgebra:
    """Weighted homogenized Weyl algebra: D x = x D + h^(u_i+v_i), h central."""
    u = tuple(u) if u is not None else (1,) * n
    v = tuple(v) if v is not None else (1,) * n
    if len(u) != n or len(v) != n or any(x <= 0 for x in u + v):
        raise ValueError("homogenization weights must be positive, one per pair")
    xs = list(names) if names else [f"x{i+1}" for i in range(n)]
    all_names = xs + ["D" + nm for nm in xs] + ["h"]
    nn = 2 * n + 1
    rel = {}
    for i in range(n):
        e = [0] * nn
        e[2 * n] = u[i] + v[i]
        rel[(i, n + i)] = {tuple(e): mpq(1)}
    return GAlgebra(all_names, rel, order=homog_order(u, v),
                    roles=("x",) * n + ("d",) * n + ("h",),
                    pairs=[(i, n + i) for i in range(n)])


def _gl_names(r):
    return [f"s{i+1}{j+1}" for i in range(r) for j in range(r)]


def _gl_relations(rel, nn, off, r):
    """[s_ij, s_kl] = delta_jk s_il - delta_il s_kj, written as rewriting data
    for index pairs a < b (a = s_ij, b = s_kl)."""
    def idx(i, j):
        return off + i * r + j

    svars = [(i, j) for i in range(r) for j in range(r)]
    for a_pos, (i, j) in enumerate(svars):
        for b_pos, (k, l) in enumerate(svars):
            if b_pos <= a_pos:
                continue
            d = {}
            if j == k:
                e = [0] * nn
                e[idx(i, l)] = 1
                d[tuple(e)] = d.get(tuple(e), mpq(0)) - 1
            if i == l:
                e = [0] * nn
                e[idx(k, j)] = 1
                d[tuple(e)] = d.get(tuple(e), mpq(0)) + 1
            d = {e: c for e, c in d.items() if c != 0}
            if d:
                rel[(idx(i, j), idx(k, l))] = d
    return rel


def weyl_gl(n, r, names=None) -> GAlgebra:
    """D_n extended by the gl_r generators s_ij (s_ii are the s-parameters)."""
    xs = list(names) if names else [f"x{i+1}" for i in range(n)]
    all_names = xs + ["D" + nm for nm in xs] + _gl_names(r)
    nn = 2 * n + r * r
    rel = {(i, n + i): {(0,) * nn: mpq(1)} for i in range(n)}
    _gl_relations(rel, nn, 2 * n, r)
    alg = GAlgebra(all_names, rel,
                   roles=("x",) * n + ("d",) * n + ("s",) * (r * r),
                   pairs=[(i, n + i) for i in range(n)])
    alg.gl_index = {2 * n + i * r + j: (i, j) for i in range(r) for j in range(r)}
    return alg


def weyl_dt_gl(n, r, names=None) -> GAlgebra:
    """D_n extended by Dt_1..Dt_r and gl_r, with [s_ij, Dt_k] = delta_jk Dt_i;
    the elimination ambient for annihilators over a variety."""
    xs = list(names) if names else [f"x{i+1}" for i in range(n)]
    dts = [f"Dt{j+1}" for j in range(r)]
    all_names = xs + ["D" + nm for nm in xs] + dts + _gl_names(r)
    nn = 2 * n + r + r * r
    rel = {(i, n + i): {(0,) * nn: mpq(1)} for i in range(n)}
    off = 2 * n + r
    _gl_relations(rel, nn, off, r)
    for i in range(r):
        for j in range(r):
            # s_ij * Dt_j = Dt_j * s_ij + Dt_i
            e = [0] * nn
            e[2 * n + i] = 1
            rel[(2 * n + j, off + i * r + j)] = {tuple(e): mpq(1)}
    alg = GAlgebra(all_names, rel,
                   roles=("x",) * n + ("d",) * n + ("dt",) * r + ("s",) * (r * r),
                   pairs=[(i, n + i) for i in range(n)])
    alg.gl_index = {off + i * r + j: (i, j) for i in range(r) for j in range(r)}
    return alg


def commutative(names) -> GAlgebra:
    """A commutative polynomial ring as a degenerate G-algebra."""
    names = list(names)
    return GAlgebra(names, {}, roles=("c",) * len(names))


def make_galgebra(names, relations, order=None, roles=None, pairs=None) -> GAlgebra:
    """Construct a G-algebra of Lie type from named relation data.

    ``relations`` maps variable-name pairs to {exponent: coefficient} tails;
    admissibility and the Jacobi-type compatibility of the relations are
    verified and violations raise with the offending pair or triple.
    """
    names = tuple(names)
    index = {nm: i for i, nm in enumerate(names)}
    rel = {}
    for (a, b), d in relations.items():
        i, j = index[a], index[b]
        if i > j:
            raise ValueError(f"relation pair ({a},{b}) must be given with i < j")
        rel[(i, j)] = d
    return GAlgebra(names, rel, order=order, roles=roles, pairs=pairs)


_PRESETS = {
    "weyl": weyl,
    "weyl_s": weyl_s,
    "weyl_shift": weyl_shift,
    "weyl_homog": weyl_homog,
    "weyl_gl": weyl_gl,
    "weyl_dt_gl": weyl_dt_gl,
    "weyl_t": weyl_t,
    "weyl_t_shift": weyl_t_shift,
    "commutative": commutative,
}


def preset(kind: str, *args, **kwargs) -> GAlgebra:
    try:
        builder = _PRESETS[kind]
    except KeyError:
        raise ValueError(f"unknown preset {kind!r}; choose from {sorted(_PRESETS)}")
    return builder(*args, **kwargs)


# ---------------------------------------------------------------------------
# weight filtrations and homogenization


def _pair_weight(alg: GAlgebra, w):
    if not alg.pairs:
        raise ValueError("algebra has no (position, momentum) pair metadata")
    if len(w) != len(alg.pairs):
        raise ValueError(f"weight vector needs {len(alg.pairs)} entries")
    def wt(e):
        acc = 0
        for wk, (xi, di) in zip(w, alg.pairs):
            if wk:
                acc += wk * (e[di] - e[xi])
        return acc
    return wt


def initial_form(p: OpPoly, w) -> OpPoly:
    """The terms of highest (-w, w)-weight of ``p``; 0 maps to 0."""
    w = tuple(w)
    if any(x < 0 for x in w) or not any(w):
        raise ValueError("weight vector must be non-negative and non-zero")
    if p.is_zero():
        return p
    wt = _pair_weight(p.alg, w)
    best = max(wt(e) for e, _ in p.terms)
    return p.alg.poly({e: c for e, c in p.terms if wt(e) == best})


def weight_of(p: OpPoly, w) -> int:
    """The (-w, w)-weight of a (-w, w)-homogeneous element."""
    wt = _pair_weight(p.alg, w)
    vals = {wt(e) for e, _ in p.terms}
    if len(vals) != 1:
        raise ValueError("element is not (-w,w)-homogeneous")
    return vals.pop()


def homogenized_algebra(alg: GAlgebra, u, v, order: MonOrder | None = None) -> GAlgebra:
    """The weighted homogenization target of a Weyl-type algebra."""
    if any(r not in ("x", "t", "d", "dt") for r in alg.roles):
        raise ValueError("homogenization needs a pure Weyl-type algebra")
    npairs = len(alg.pairs)
    u, v = tuple(u), tuple(v)
    if len(u) != npairs or len(v) != npairs or any(x <= 0 for x in u + v):
        raise ValueError("homogenization weights must be positive, one per pair")
    nn = alg.n + 1
    rel = {}
    for k, (xi, di) in enumerate(alg.pairs):
        e = [0] * nn
        e[alg.n] = u[k] + v[k]
        rel[(xi, di)] = {tuple(e): mpq(1)}
    H = GAlgebra(alg.names + ("h",), rel,
                 order=order or homog_order(u, v),
                 roles=alg.roles + ("h",),
                 pairs=alg.pairs)
    return H


def _uv_degree(alg: GAlgebra, u, v, e):
    acc = 0
    for k, (xi, di) in enumerate(alg.pairs):
        acc += u[k] * e[xi] + v[k] * e[di]
    return acc


def homogenize_weighted(p: OpPoly, u, v, target: GAlgebra | None = None) -> OpPoly:
    """Weighted homogenization: pad every term with the h-power that lifts it
    to the maximal (u, v)-degree.  Dehomogenizing recovers ``p`` exactly."""
    alg = p.alg
    H = target if target is not None else homogenized_algebra(alg, u, v)
    if p.is_zero():
        return H.zero()
    u, v = tuple(u), tuple(v)
    degs = [(_uv_degree(alg, u, v, e), e, c) for e, c in p.terms]
    m = max(d for d, _, _ in degs)
    out = {}
    for d, e, c in degs:
        out[e + (m - d,)] = c
    return H.poly(out)


def dehomogenize(p: OpPoly, target: GAlgebra) -> OpPoly:
    """Substitute h = 1, mapping back to the unhomogenized algebra."""
    out = {}
    for e, c in p.terms:
        base = e[:-1]
        out[base] = out.get(base, 0) + c
    return target.poly(out)


def transfer(p: OpPoly, target: GAlgebra, rename=None) -> OpPoly:
    """Re-express an element in another algebra by matching variable names.

    Any variable with a non-zero exponent must exist in the target (after
    ``rename``); monomials are taken over verbatim, so source and target must
    agree on the relations among the transferred variables.
    """
    rename = rename or {}
    src = p.alg
    slot = []
    for i, nm in enumerate(src.names):
        nm = rename.get(nm, nm)
        slot.append(target._index.get(nm))
    out = {}
    for e, c in p.terms:
        ee = [0] * target.n
        for i, pw in enumerate(e):
            if pw:
                if slot[i] is None:
                    raise ValueError(
                        f"variable {src.names[i]} does not exist in the target algebra")
                ee[slot[i]] = pw
        ee = tuple(ee)
        out[ee] = out.get(ee, 0) + c
    return target.poly(out)


# ---------------------------------------------------------------------------
# generator-substitution homomorphisms


@dataclass(frozen=True)
class AlgebraMap:
    """A homomorphism given by per-generator images; applied by expanding
    monomials left-to-right with the target multiplication."""

    source: GAlgebra
    target: GAlgebra
    images: tuple  # one OpPoly in the target per source variable

    def __post_init__(self):
        if len(self.images) != self.source.n:
            raise ValueError("need one image per source variable")

    def check(self) -> bool:
        """Verify that images of commuting source pairs commute."""
        rel = self.source.core.rel
        for i in range(self.source.n):
            for j in range(i + 1, self.source.n):
                if (i, j) in rel:
                    continue
                if lie_bracket(self.images[i], self.images[j]):
                    return False
        return True

    def __call__(self, p: OpPoly) -> OpPoly:
        if p.alg.core is not self.source.core:
            raise ValueError("element does not belong to the source algebra")
        pow_cache = {}
        def img_pow(i, k):
            got = pow_cache.get((i, k))
            if got is None:
                got = self.images[i] ** k
                pow_cache[(i, k)] = got
            return got
        out = self.target.zero()
        for e, c in p.terms:
            acc = self.target.scalar(c)
            for i, pw in enumerate(e):
                if pw:
                    acc = star_mul(acc, img_pow(i, pw))
            out = out + acc
        return out


def substitution_map(alg: GAlgebra, assignments, target: GAlgebra | None = None) -> AlgebraMap:
    """Map that replaces the named variables by target elements (or scalars),
    sending every other variable to its namesake."""
    target = target or alg
    images = []
    for i, nm in enumerate(alg.names):
        if nm in assignments:
            val = assignments[nm]
            images.append(val if isinstance(val, OpPoly) else target.scalar(val))
        else:
            images.append(target.gen(nm))
    return AlgebraMap(alg, target, tuple(images))


def apply_map(m: AlgebraMap, p: OpPoly) -> OpPoly:
    return m(p)
