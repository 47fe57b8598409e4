"""Annihilators, b-functions, Bernstein-Sato polynomials, operators and
ideals over the Weyl algebra, built on the Groebner engine.

Inputs are commutative polynomials (elements of a ``commutative`` preset over
the input ring); results live in the appropriate operator algebras.  All
pipelines are exact; long-running ones accept degree caps and fail cleanly.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from math import factorial

from gmpy2 import mpq

from .action import annihilates, annihilates_power, apply_to_fs
from .compoly import (
    differentiate,
    multiplicity_factorial,
    partitions_of,
    subst_central,
    weighted_degree,
)
from .errors import CapExceeded, UnsupportedBranch, ZeroIntersection
from .galgebra import (
    GAlgebra,
    OpPoly,
    commutative,
    dehomogenize,
    homog_initial_order,
    homogenize_weighted,
    homogenized_algebra,
    initial_form,
    star_mul,
    transfer,
    weyl,
    weyl_dt_gl,
    weyl_gl,
    weyl_s,
    weyl_shift,
    weyl_t,
)
from .groebner import (
    GBasis,
    LinearReducer,
    buchberger,
    eliminate,
    ideal_equal,
    lift,
    lt_dimension,
    modulo_kernel,
    normal_form,
    reduce_gb,
)
from .polyarith import (
    BFunction,
    UniPoly,
    symbolic_binomial,
    unipoly_bs_transform,
    unipoly_rational_roots,
)


# ---------------------------------------------------------------------------
# result containers


@dataclass(frozen=True)
class SParamAnnihilator:
    """An annihilator of f^s: the ambient operator algebra, a Groebner basis
    of the ideal, and the input polynomials."""

    algebra: GAlgebra
    gens: GBasis
    f_list: tuple

    def __iter__(self):
        return iter(self.gens.gens)

    def verify(self) -> bool:
        """Certify every generator against the direct action oracle."""
        return all(annihilates(g, self.f_list) for g in self.gens.gens)


@dataclass(frozen=True)
class BernsteinData:
    """A Bernstein-Sato polynomial with an optional certified operator."""

    b: BFunction
    operator: OpPoly | None
    method: str


# ---------------------------------------------------------------------------
# input plumbing


def _input_ring(f_list):
    f_list = list(f_list)
    if not f_list:
        raise ValueError("need at least one polynomial")
    ring = f_list[0].alg
    if ring.core.rel:
        raise ValueError("input polynomials must live in a commutative ring")
    if any(f.alg.core is not ring.core for f in f_list):
        raise ValueError("input polynomials live in different rings")
    if any(f.is_zero() or f.is_constant() for f in f_list):
        raise ValueError("input polynomials must be non-constant")
    return f_list, ring


def unipoly_to_op(b: UniPoly, alg: GAlgebra, var="s") -> OpPoly:
    v = alg.index(var)
    return alg.poly({alg.unit_exp(v, d): c
                     for d, c in enumerate(b.coeffs) if c != 0})


# ---------------------------------------------------------------------------
# Malgrange construction and the s-parametric annihilator


def malgrange_ideal(f_list):
    """Generators of the Malgrange ideal of (f_1..f_p): t_j - f_j and
    D_i + sum_j d(f_j)/d(x_i) Dt_j, in the Weyl algebra on (t, x, Dt, D).

    Returns (algebra, generators)."""
    f_list, ring = _input_ring(f_list)
    p, n = len(f_list), ring.n
    W = weyl_t(p, n, ring.names)
    tnames = W.names[:p]
    dtnames = ["D" + t for t in tnames]
    gens = []
    for j, f in enumerate(f_list):
        gens.append(W.gen(tnames[j]) - transfer(f, W))
    for i in range(n):
        g = W.gen("D" + ring.names[i])
        for j, f in enumerate(f_list):
            df = differentiate(f, i)
            if not df.is_zero():
                g = g + transfer(df, W) * W.gen(dtnames[j])
        gens.append(g)
    return W, gens


def sannfs_bm(f_list, *, cap=None, strategy="normal") -> SParamAnnihilator:
    """Ann_{D_n[s_1..s_p]}(f^s) by elimination of the Dt_j from the ideal
    generated by {s_j + f_j Dt_j} and {D_i + sum_j d(f_j)/d(x_i) Dt_j} in the
    tensor product of D_n with the shift algebra."""
    f_list, ring = _input_ring(f_list)
    p, n = len(f_list), ring.n
    S = weyl_shift(n, p, ring.names)
    dtnames = S.names[2 * n:2 * n + p]
    snames = S.names[2 * n + p:]
    gens = []
    for j, f in enumerate(f_list):
        gens.append(S.gen(snames[j]) + transfer(f, S) * S.gen(dtnames[j]))
    for i in range(n):
        g = S.gen("D" + ring.names[i])
        for j, f in enumerate(f_list):
            df = differentiate(f, i)
            if not df.is_zero():
                g = g + transfer(df, S) * S.gen(dtnames[j])
        gens.append(g)
    E = eliminate(gens, dtnames, cap=cap, strategy=strategy)
    A = weyl_s(n, p, ring.names)
    out = reduce_gb(GBasis(tuple(transfer(g, A) for g in E.gens), A))
    return SParamAnnihilator(A, out, tuple(f_list))


# ---------------------------------------------------------------------------
# initial ideals and principal intersections


def initial_ideal(gens, w, u=None, v=None, *, cap=None, strategy="normal") -> GBasis:
    """Groebner basis of the (-w, w)-initial ideal, via weighted
    homogenization: homogenize the generators, compute a basis under the
    homogenized (-w, w)-refined ordering, take initial forms, set h = 1."""
    gens = list(gens.gens) if isinstance(gens, GBasis) else list(gens)
    alg = gens[0].alg
    npairs = len(alg.pairs)
    w = tuple(w)
    if len(w) != npairs or any(x < 0 for x in w) or not any(w):
        raise ValueError("w must be non-negative, non-zero, one entry per pair")
    u = tuple(u) if u is not None else (1,) * npairs
    v = tuple(v) if v is not None else (1,) * npairs
    H = homogenized_algebra(alg, u, v, order=homog_initial_order(u, v, w))
    hgens = [homogenize_weighted(g, u, v, H) for g in gens]
    G = buchberger(hgens, cap=cap, strategy=strategy)
    out = [dehomogenize(initial_form(g, w), alg) for g in G.gens]
    return buchberger(out, cap=cap)


def principal_intersect(J, sigma: OpPoly, cap: int = 60, var="s") -> UniPoly:
    """The monic generator of J intersected with K[sigma], of minimal degree.

    Powers of sigma are reduced incrementally (r_{i+1} = NF(sigma * r_i))
    and a K-linear dependency is detected with the linear reducer; ``cap``
    bounds the degree searched.  A divisibility pre-check raises early when
    no leading monomial can ever divide a power of sigma (the intersection
    is then provably zero)."""
    alg = sigma.alg
    if isinstance(J, GBasis) and J.alg is alg and J.reduced:
        G = J
    else:
        gens = list(J.gens) if isinstance(J, GBasis) else list(J)
        G = buchberger([transfer(g, alg) if g.alg is not alg else g for g in gens])
    if sigma.is_zero() or sigma.is_constant():
        raise ValueError("sigma must be non-constant")
    lm_s = sigma.lm()
    supp = set(i for i, e in enumerate(lm_s) if e)
    if not any(set(i for i, e in enumerate(g.lm()) if e) <= supp for g in G.gens):
        raise ZeroIntersection(
            "no leading monomial divides any power of sigma: the intersection is zero")
    red = LinearReducer(alg)
    r = normal_form(alg.one(), G)
    if r.is_zero():
        return UniPoly((1,), var)
    red.add(r, 0)
    for i in range(1, cap + 1):
        r = normal_form(star_mul(sigma, r), G)
        combo = red.express(r)
        if combo is not None:
            coeffs = [-combo.get(j, mpq(0)) for j in range(i)] + [mpq(1)]
            return UniPoly(coeffs, var)
        red.add(r, i)
    raise CapExceeded(
        f"principal intersection not found up to degree {cap}; "
        "the intersection may be zero")


# ---------------------------------------------------------------------------
# b-functions


def bfct(f, u=None, *, cap=60, gb_cap=None, strategy="normal") -> BFunction:
    """Global Bernstein-Sato polynomial through the initial ideal of the
    Malgrange ideal: weighted homogenization with the Noro weights, principal
    intersection with t*Dt, then the sign-and-shift normalization."""
    (f,), ring = _input_ring([f])
    n = ring.n
    u = tuple(u) if u is not None else (1,) * n
    if len(u) != n or any(x <= 0 for x in u):
        raise ValueError("u must be positive, one entry per ring variable")
    degu = weighted_degree(f, u)
    u_hat = (degu,) + u
    v_hat = (1,) + tuple(degu - ui + 1 for ui in u)
    if any(x <= 0 for x in v_hat):
        raise ValueError("weights u are too uneven for this f (non-positive v-hat)")
    W, gens = malgrange_ideal([f])
    w = (1,) + (0,) * n
    Gini = initial_ideal(gens, w, u_hat, v_hat, cap=gb_cap, strategy=strategy)
    sigma = W.monomial(**{W.names[0]: 1, "D" + W.names[0]: 1})
    b = principal_intersect(Gini, sigma, cap=cap)
    return BFunction.bernstein_sato(unipoly_bs_transform(b))


def bfct_ann(f, *, cap=60, gb_cap=None, strategy="normal",
             ann: SParamAnnihilator | None = None) -> BFunction:
    """Global Bernstein-Sato polynomial as the monic generator of
    (Ann(f^s) + <f>) intersected with K[s]; no sign transform is needed."""
    (f,), ring = _input_ring([f])
    if ann is None:
        ann = sannfs_bm([f], cap=gb_cap, strategy=strategy)
    A = ann.algebra
    J = list(ann.gens.gens) + [transfer(f, A)]
    G = buchberger(J, cap=gb_cap, strategy=strategy)
    b = principal_intersect(G, A.gen("s"), cap=cap)
    return BFunction.bernstein_sato(b)


def bfct_ideal(gens, w, *, cap=60, gb_cap=None, strategy="normal") -> BFunction:
    """b-function of an ideal with respect to a weight vector: the monic
    generator of ini_(-w,w)(I) intersected with K[s], s = sum w_i x_i D_i.
    Returned untransformed (this is b_{I,w}, not a Bernstein-Sato polynomial)."""
    gens = list(gens.gens) if isinstance(gens, GBasis) else list(gens)
    alg = gens[0].alg
    Gini = initial_ideal(gens, w, cap=gb_cap, strategy=strategy)
    sigma = alg.zero()
    for wk, (xi, di) in zip(w, alg.pairs):
        if wk:
            e = [0] * alg.n
            e[xi] = 1
            e[di] = 1
            sigma = sigma + alg.poly({tuple(e): wk})
    b = principal_intersect(Gini, sigma, cap=cap)
    return BFunction.from_poly(b)


# ---------------------------------------------------------------------------
# partial root knowledge


def _weyl_of(ann: SParamAnnihilator) -> GAlgebra:
    ring = ann.f_list[0].alg
    return weyl(ring.n, ring.names)


def check_root(ann: SParamAnnihilator, f, alpha, *, cap=None) -> bool:
    """Is alpha a root of b_f(-s)?  One Groebner basis in D_n: substitute
    s = -alpha into Ann(f^s), add f, and test whether 1 lies in the ideal."""
    alpha = mpq(alpha)
    if alpha <= 0:
        warnings.warn("roots of b_f(-s) are positive; testing anyway")
    W = _weyl_of(ann)
    gens0 = [subst_central(g, "s", W.scalar(-alpha)) for g in ann.gens.gens]
    gens0 = [g for g in gens0 if not g.is_zero()]
    G = buchberger(gens0 + [transfer(f, W)], cap=cap)
    has_one = any(g.is_constant() for g in G.gens)
    return not has_one


def root_multiplicity(ann: SParamAnnihilator, f, alpha, *, cap=None) -> int:
    """Multiplicity of alpha as a root of b_f(-s), by the membership ladder
    (s + alpha)^i in Ann(f^s) + <f, (s + alpha)^{i+1}>."""
    alpha = mpq(alpha)
    if not check_root(ann, f, alpha, cap=cap):
        return 0
    A = ann.algebra
    s = A.gen("s")
    fa = transfer(f, A)
    n = ann.f_list[0].alg.n
    base = list(ann.gens.gens) + [fa]
    for i in range(1, n + 1):
        G = buchberger(base + [(s + alpha) ** (i + 1)], cap=cap)
        if normal_form((s + alpha) ** i, G).is_zero():
            return i
    raise ValueError("multiplicity exceeds the variable count; inconsistent input")


def min_integer_root(ann: SParamAnnihilator, f, *, cap=None) -> int:
    """Minimal integer root of the Bernstein-Sato polynomial, located with
    at most n-2 root checks: an integer root lies in [-n+1, -1] and -1 is
    always a root."""
    n = ann.f_list[0].alg.n
    if n == 1:
        return -1
    for a in range(-n + 1, -1):
        if check_root(ann, f, -a, cap=cap):
            return a
    return -1


# ---------------------------------------------------------------------------
# annihilators of functions


def ann_poly(g) -> GBasis:
    """Ann_{D_n}(g) for a polynomial g: the kernel of D_n -> D_n/<D_1..D_n>,
    1 -> g, one module Groebner basis and no elimination."""
    (g,), ring = _input_ring([g])
    W = weyl(ring.n, ring.names)
    ds = [W.gen("D" + nm) for nm in ring.names]
    K = modulo_kernel([transfer(g, W)], ds)
    return reduce_gb(GBasis(tuple(v.components[0] for v in K.gens), W))


def ann_trivial(ring) -> GBasis:
    """Ann(1) = <D_1, .., D_n>."""
    W = weyl(ring.n, ring.names)
    return reduce_gb(GBasis(tuple(W.gen("D" + nm) for nm in ring.names), W))


def _subst_annihilator(ann: SParamAnnihilator, alpha) -> GBasis:
    W = _weyl_of(ann)
    gens = [subst_central(g, "s", W.scalar(mpq(alpha))) for g in ann.gens.gens]
    gens = [g for g in gens if not g.is_zero()]
    return buchberger(gens)


def ann_falpha(f, alpha, *, cap=None, ann: SParamAnnihilator | None = None) -> GBasis:
    """Heuristic dispatch for Ann_{D_n}(f^alpha), rational alpha.

    alpha = 0 gives <D_i>; positive integers go through the polynomial
    kernel; non-integers and integers <= -n substitute s = alpha into
    Ann(f^s).  For integers in [-n+1, -1]: substitution is valid down from
    the minimal integer root mu of b_f; the remaining window (mu < alpha)
    needs a syzygy construction this toolkit does not provide, and raises.
    """
    (f,), ring = _input_ring([f])
    alpha = mpq(alpha)
    n = ring.n
    if alpha == 0:
        return ann_trivial(ring)
    if alpha.denominator == 1 and alpha > 0:
        g = f ** int(alpha)
        return ann_poly(g)
    if alpha.denominator != 1 or alpha <= -n:
        ann = ann or sannfs_bm([f], cap=cap)
        return _subst_annihilator(ann, alpha)
    # integer window -n+1 <= alpha <= -1
    ann = ann or sannfs_bm([f], cap=cap)
    mu = min_integer_root(ann, f, cap=cap)
    if alpha <= mu:
        return _subst_annihilator(ann, alpha)
    raise UnsupportedBranch(
        f"Ann(f^{alpha}) with {mu} < {alpha} <= -1 requires the syzygy-based "
        "construction for integer powers above the minimal root; not provided")


def ann_rat(g, f, *, cap=None) -> GBasis:
    """Ann_{D_n}(g/f): the kernel of q -> q*g into D_n/Ann(f^{-1}).

    Requires the minimal integer root of b_f to be -1 so that Ann(f^{-1}) is
    a plain substitution; otherwise raises."""
    (g, f), ring = _input_ring([g, f])
    ann = sannfs_bm([f], cap=cap)
    mu = min_integer_root(ann, f, cap=cap)
    if mu < -1:
        raise UnsupportedBranch(
            f"denominator has minimal integer root {mu} < -1; Ann(f^-1) would "
            "need the syzygy-based construction")
    inv = _subst_annihilator(ann, mpq(-1))
    W = inv.alg
    K = modulo_kernel([transfer(g, W)], list(inv.gens))
    return reduce_gb(GBasis(tuple(v.components[0] for v in K.gens), W))


# ---------------------------------------------------------------------------
# Bernstein operators


def ann_shifted_gb(ann: SParamAnnihilator, shift=1, *, cap=None) -> GBasis:
    """Groebner basis of Ann(f^{s+shift}): substitute s -> s + shift in the
    generators (the substituted set is no longer a basis) and recompute."""
    A = ann.algebra
    s = A.gen("s")
    gens = [subst_central(g, "s", s + shift) for g in ann.gens.gens]
    return buchberger(gens, cap=cap)


def is_b_operator(P: OpPoly, f, b: UniPoly, ann: SParamAnnihilator) -> bool:
    """Functional identity at ideal level: P*f - b(s) lies in Ann(f^s)."""
    A = ann.algebra
    expr = star_mul(P, transfer(f, A)) - unipoly_to_op(b, A)
    return normal_form(expr, ann.gens).is_zero()


def operator_modulo(f, ann: SParamAnnihilator, b: UniPoly, *, cap=None) -> OpPoly:
    """B-operator from the kernel of (u, v) -> u b_f(s) + v f modulo Ann(f^s):
    the reduced kernel basis, under a first-component-preferring ordering,
    contains a single element (k, v) with constant k; P = -v/k up to the sign
    fixed a posteriori by the functional identity."""
    A = ann.algebra
    bop = unipoly_to_op(b, A)
    fop = transfer(f, A)
    K = modulo_kernel([bop, fop], list(ann.gens.gens), cap=cap)
    from .groebner import buchberger_module, pot
    K2 = buchberger_module(list(K.gens), 2, pot((0, 1)), cap=cap)
    cand = None
    for row in K2.gens:
        u = row.components[0]
        if not u.is_zero() and u.is_constant():
            cand = row
            break
    if cand is None:
        raise ValueError(
            "no kernel element with constant first slot: b is not the "
            "b-function of f (or a cap truncated the basis)")
    k = cand.components[0].constant_part()
    P = cand.components[1].scale(-1 / k)
    if is_b_operator(P, f, b, ann):
        return P
    P = -P
    if is_b_operator(P, f, b, ann):
        return P
    raise ValueError("kernel element does not satisfy the functional identity")


def operator_lift(f, ann: SParamAnnihilator, b: UniPoly, *, cap=None) -> OpPoly:
    """B-operator by lifting b_f through {f} u Ann(f^s) and reducing the
    f-cofactor.  Complete but expensive compared to the kernel method."""
    A = ann.algebra
    F = [transfer(f, A)] + list(ann.gens.gens)
    cof = lift(F, unipoly_to_op(b, A), cap=cap)
    P = normal_form(cof[0], ann.gens)
    if not is_b_operator(P, f, b, ann):
        raise ValueError("lift cofactor does not satisfy the functional identity")
    return P


def operator_search(f, b: UniPoly, *, ann: SParamAnnihilator | None = None,
                    max_degree=12, cap=None) -> OpPoly:
    """Groebner-free B-operator search: enumerate monomials irreducible
    modulo Ann(f^{s+1}) degree by degree and look for a K-linear combination
    with b = sum a_m NF(m*f, Ann(f^s))."""
    (f,), _ = _input_ring([f])
    ann = ann or sannfs_bm([f])
    A = ann.algebra
    G1 = ann_shifted_gb(ann, 1, cap=cap)
    lms = [g.lm() for g in G1.gens]
    fop = transfer(f, A)
    btarget = normal_form(unipoly_to_op(b, A), ann.gens)
    red = LinearReducer(A)
    monos = []

    def mono_candidates(d):
        out = []
        def rec(i, left, cur):
            if i == A.n:
                e = tuple(cur)
                if any(all(x >= y for x, y in zip(e, lm)) for lm in lms):
                    return
                out.append(e)
                return
            for k in range(left + 1):
                rec(i + 1, left - k, cur + [k])
        rec(0, d, [])
        return sorted(out, key=A.key)

    for d in range(max_degree + 1):
        for e in mono_candidates(d):
            if sum(e) != d:
                continue
            m = A.poly({e: 1})
            nf = normal_form(star_mul(m, fop), ann.gens)
            monos.append((e, m))
            red.add(nf, len(monos) - 1)
        combo = red.express(btarget)
        if combo is not None:
            P = A.zero()
            for idx, c in combo.items():
                P = P + monos[idx][1].scale(c)
            return P
    raise CapExceeded(f"no B-operator of degree <= {max_degree} found")


def bernstein_operator_nf(P: OpPoly, ann: SParamAnnihilator, *, cap=None) -> OpPoly:
    """The canonical Bernstein operator: the reduced normal form of a
    B-operator modulo Ann(f^{s+1}) (unique for a fixed ordering)."""
    return normal_form(P, ann_shifted_gb(ann, 1, cap=cap))


def bernstein_data(f, *, method="modulo", cap=60, gb_cap=None,
                   ann: SParamAnnihilator | None = None) -> BernsteinData:
    """Bernstein-Sato polynomial plus a certified canonical operator."""
    (f,), _ = _input_ring([f])
    if ann is None:
        ann = sannfs_bm([f], cap=gb_cap)
    b = bfct_ann(f, cap=cap, gb_cap=gb_cap, ann=ann)
    if method == "modulo":
        P = operator_modulo(f, ann, b.poly, cap=gb_cap)
    elif method == "lift":
        P = operator_lift(f, ann, b.poly, cap=gb_cap)
    elif method == "search":
        P = operator_search(f, b.poly, ann=ann, cap=gb_cap)
    else:
        raise ValueError(f"unknown method {method!r}")
    return BernsteinData(b=b, operator=bernstein_operator_nf(P, ann), method=method)


# ---------------------------------------------------------------------------
# logarithmic annihilators and the order filtration


def _ops_from_syzygy(rows, A: GAlgebra, ring, betas):
    """Assemble operators sum a_beta D^beta from syzygy rows over K[x, s]."""
    n = ring.n
    ops = []
    for row in rows:
        acc = {}
        for col, a in enumerate(row.components):
            beta = betas[col]
            for e, c in a.terms:
                # e over (x_1..x_n, s); target over (x.., D.., s)
                ee = e[:n] + tuple(beta) + (e[n],)
                acc[ee] = acc.get(ee, 0) + c
        ops.append(A.poly(acc))
    return ops


def sannfs_log(f, *, cap=None) -> SParamAnnihilator:
    """The logarithmic annihilator Ann^(1)(f^s): operators of order <= 1,
    from the commutative syzygies of (f, s df/dx_1, .., s df/dx_n)."""
    (f,), ring = _input_ring([f])
    n = ring.n
    R = commutative(list(ring.names) + ["s"])
    s = R.gen("s")
    fR = transfer(f, R)
    cols = [fR] + [s * differentiate(fR, i) for i in range(n)]
    syz = modulo_kernel(cols, (), cap=cap)
    A = weyl_s(n, 1, ring.names)
    betas = [(0,) * n] + [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]
    ops = _ops_from_syzygy(syz.gens, A, ring, betas)
    G = buchberger(ops, cap=cap)
    return SParamAnnihilator(A, G, (f,))


def fs_diff_coefficient(f, beta, ring_s: GAlgebra | None = None) -> OpPoly:
    """The coefficient g with Delta^beta (f^s) = g * f^{s - |beta|}, where
    Delta^beta is the divided-power derivative: a finite sum over the
    multiset partitions of beta weighted by binomials C(s, k)."""
    (f,), ring = _input_ring([f])
    n = ring.n
    beta = tuple(beta)
    R = ring_s if ring_s is not None else commutative(list(ring.names) + ["s"])
    fR = transfer(f, R)
    if not any(beta):
        raise ValueError("beta must be non-zero")
    size = sum(beta)

    def delta(sigma):
        g = fR
        scale = 1
        for i, k in enumerate(sigma):
            for _ in range(k):
                g = differentiate(g, i)
            scale *= factorial(k)
        return g.scale(mpq(1, scale))

    total = R.zero()
    for k in range(1, size + 1):
        binom = symbolic_binomial(k)
        binom_op = R.poly({tuple([0] * n + [d]): c
                           for d, c in enumerate(binom.coeffs) if c != 0})
        inner = R.zero()
        for parts in partitions_of(beta, k):
            prod = R.one()
            for sigma in parts:
                prod = prod * delta(sigma)
            # a multiset of k parts stands for k!/l(sigma)! ordered expansions
            inner = inner + prod.scale(mpq(factorial(k),
                                           multiplicity_factorial(parts)))
        if not inner.is_zero():
            total = total + binom_op * inner * fR ** (size - k)
    return total


def _betas_upto(n, k):
    out = []
    def rec(i, left, cur):
        if i == n:
            out.append(tuple(cur))
            return
        for x in range(left + 1):
            rec(i + 1, left - x, cur + [x])
    rec(0, k, [])
    out.sort(key=lambda b: (sum(b), b))
    return out


def ann_upto_k(f, k, *, cap=None) -> SParamAnnihilator:
    """Ann^(k)(f^s): the sub-annihilator generated by operators of total
    order <= k in the partials, from one commutative syzygy of the family
    g_beta f^{k - |beta|} (g_beta defined by D^beta f^s = g_beta f^{s-|beta|})."""
    (f,), ring = _input_ring([f])
    if k < 1:
        raise ValueError("k must be at least 1")
    if k >= 3:
        warnings.warn("order-3 and higher annihilator towers grow quickly")
    n = ring.n
    R = commutative(list(ring.names) + ["s"])
    fR = transfer(f, R)
    betas = _betas_upto(n, k)
    cols = []
    for beta in betas:
        if not any(beta):
            cols.append(fR ** k)
            continue
        gb = fs_diff_coefficient(f, beta, R)
        bfact = 1
        for x in beta:
            bfact *= factorial(x)
        cols.append(gb.scale(bfact) * fR ** (k - sum(beta)))
    syz = modulo_kernel(cols, (), cap=cap)
    A = weyl_s(n, 1, ring.names)
    ops = _ops_from_syzygy(syz.gens, A, ring, betas)
    G = buchberger(ops, cap=cap)
    return SParamAnnihilator(A, G, (f,))


# ---------------------------------------------------------------------------
# Bernstein-Sato ideals (several factors)


def bs_ideal(f_list, *, cap=None, strategy="normal",
             ann: SParamAnnihilator | None = None) -> GBasis:
    """The Bernstein-Sato ideal of (f_1..f_p) in K[s_1..s_p]: eliminate the
    x_i and D_i from Ann(f^s) + <f_1 ... f_p>.  Need not be principal, so a
    full basis is returned."""
    f_list, ring = _input_ring(f_list)
    if ann is None:
        ann = sannfs_bm(f_list, cap=cap, strategy=strategy)
    A = ann.algebra
    prod = A.one()
    for f in f_list:
        prod = prod * transfer(f, A)
    gens = list(ann.gens.gens) + [prod]
    drop = [nm for nm, role in zip(A.names, A.roles) if role in ("x", "d")]
    return eliminate(gens, drop, cap=cap, strategy=strategy)


# ---------------------------------------------------------------------------
# varieties: gl-extended annihilators and their b-functions


def sannfs_var(f_list, *, cap=None, strategy="normal") -> SParamAnnihilator:
    """Annihilator of f^s in D_n<S> for an r-tuple defining a variety:
    eliminate the Dt_i from <s_ij + Dt_i f_j, D_m + sum_k d(f_k)/d(x_m) Dt_k>
    in D_n<Dt, S>."""
    f_list, ring = _input_ring(f_list)
    r, n = len(f_list), ring.n
    E = weyl_dt_gl(n, r, ring.names)
    gens = []
    for i in range(r):
        for j in range(r):
            gens.append(E.gen(f"s{i+1}{j+1}")
                        + transfer(f_list[j], E) * E.gen(f"Dt{i+1}"))
    for m in range(n):
        g = E.gen("D" + ring.names[m])
        for kk, f in enumerate(f_list):
            df = differentiate(f, m)
            if not df.is_zero():
                g = g + transfer(df, E) * E.gen(f"Dt{kk+1}")
        gens.append(g)
    dtnames = [f"Dt{i+1}" for i in range(r)]
    El = eliminate(gens, dtnames, cap=cap, strategy=strategy)
    A = weyl_gl(n, r, ring.names)
    out = reduce_gb(GBasis(tuple(transfer(g, A) for g in El.gens), A))
    return SParamAnnihilator(A, out, tuple(f_list))


def variety_codim(f_list) -> int:
    """Codimension of V(f_1..f_r): n minus the leading-term dimension of a
    commutative basis of <f_1..f_r>."""
    f_list, ring = _input_ring(f_list)
    C = commutative(ring.names)
    G = buchberger([transfer(f, C) for f in f_list])
    return ring.n - lt_dimension(G)


def bfct_var(f_list, *, codim=None, shifted=False, cap=60, gb_cap=None,
             strategy="normal", ann: SParamAnnihilator | None = None) -> BFunction:
    """Bernstein-Sato polynomial of a variety: the monic generator of
    (Ann_{D_n<S>}(f^s) + <f_1..f_r>) intersected with K[s_1+..+s_r].

    With ``shifted`` the result is b_Z(sigma) = b_f(sigma - codim + 1), the
    variety-intrinsic normalization."""
    f_list, ring = _input_ring(f_list)
    if ann is None:
        ann = sannfs_var(f_list, cap=gb_cap, strategy=strategy)
    A = ann.algebra
    r = len(f_list)
    gens = list(ann.gens.gens) + [transfer(f, A) for f in f_list]
    G = buchberger(gens, cap=gb_cap, strategy=strategy)
    sigma = A.zero()
    for i in range(r):
        sigma = sigma + A.gen(f"s{i+1}{i+1}")
    b = principal_intersect(G, sigma, cap=cap)
    if shifted:
        cod = codim if codim is not None else variety_codim(f_list)
        return BFunction.from_poly(b.shift_arg(1 - cod))
    return BFunction.bernstein_sato(b)


__all__ = [name for name in dir() if not name.startswith("_")]
