"""The built-in regression corpus: published outputs frozen as test data.

Each case replays one documented computation and compares exactly (roots as
rationals, annihilators by mutual normal-form membership).  The stretch
cases reproduce the long examples and are gated behind a flag.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from gmpy2 import mpq

from . import dmodcore as dm
from .galgebra import commutative, transfer, weyl, weyl_gl
from .groebner import buchberger, ideal_equal, lt_dimension, normal_form
from .parsing import parse_op, parse_poly
from .polyarith import UniPoly


@dataclass(frozen=True)
class Case:
    name: str
    run: "callable"
    stretch: bool = False


@dataclass
class CaseResult:
    name: str
    ok: bool
    detail: str
    seconds: float


def _ring(names):
    return commutative(list(names))


def _roots(pairs):
    return tuple(sorted((mpq(n, d), m) for n, d, m in pairs))


# -- frozen data ------------------------------------------------------------

SANNFS_INPUT = ("x^3 + y^2 + x*y^2", ("x", "y"))
SANNFS_BASIS = (
    "2*x*y*Dx - 3*x^2*Dy - y^2*Dy + 2*y*Dx",
    "2*x^2*Dx + 2*x*y*Dy + 2*x*Dx + 3*y*Dy - 6*x*s - 6*s",
    "x^2*y*Dy + y^3*Dy - 2*x^2*Dx - 3*x*y*Dy - 2*y^2*s + 6*x*s",
    "x^3*Dy + x*y^2*Dy + y^2*Dy - 2*x*y*s - 2*y*s",
    "2*y^3*Dx*Dy + 3*x^3*Dy^2 + x*y^2*Dy^2 - 4*x^2*Dx^2 - 8*x*y*Dx*Dy"
    " - 2*x^2*Dx - 4*y^2*Dx*s + 6*x*y*Dy + 12*x*Dx*s - 10*x*Dx - 6*y*Dy + 12*s",
)

ANN2XY_BASIS = ("y*Dy - s", "x*Dx - s")
ANN2XY_ROOTS = _roots([(-1, 1, 2)])
ANNPOLY_2XY = ("Dy^2", "y*Dy - 1", "Dx^2", "x*Dx - 1")

ANNRAT_INPUT = ("2*x*y", "x^2 - y^3")
ANNRAT_BASIS = (
    "3*x*Dx + 2*y*Dy + 1",
    "y^3*Dy^2 - x^2*Dy^2 + 6*y^2*Dy + 6*y",
    "9*y^2*Dx^2*Dy - 4*y*Dy^3 + 27*y*Dx^2 + 2*Dy^2",
    "y^4*Dy - x^2*y*Dy + 2*y^3 + x^2",
    "9*y^3*Dx^2 - 4*y^2*Dy^2 + 10*y*Dy - 10",
)

ARRANGEMENT = ("x*y*z*(z - y)*(y + z)", ("x", "y", "z"))
ARRANGEMENT_ROOTS = _roots([(-1, 1, 3), (-1, 2, 1), (-3, 4, 1), (-5, 4, 1), (-3, 2, 1)])

OPERATOR_INPUT = ("x^2 - x", ("x",))
OPERATOR_EXPECTED = "2*x*Dx - Dx - 4*s - 4"   # (2x-1)Dx - 4(s+1)
OPERATOR_B_ROOTS = _roots([(-1, 1, 1)])

LOGANN_INPUT = ("x^4 + y^5 + x*y^4", ("x", "y"))
LOGANN_BASIS = (
    "4*x^2*Dx + 5*x*Dx*y + 3*x*y*Dy - 16*x*s + 4*y^2*Dy - 20*y*s",
    "16*x*Dx*y^2 - 125*x*Dx*y - 4*x^2*Dy + 4*Dx*y^3 + 5*x*y*Dy + 12*y^3*Dy"
    " - 100*y^2*Dy - 64*y^2*s + 500*y*s",
)

BFCT_IDEAL_SHIFT = 2  # I = <t*Dt + k> has b-function s + k

# stretch data --------------------------------------------------------------

CURVE_PRODUCT = ("(x^3 - y^2)*(3*x - 2*y - 1)*(x + 2*y)", ("x", "y"))
CURVE_PRODUCT_ROOTS = _roots([
    (-1, 1, 2), (-2, 3, 1), (-5, 8, 1), (-3, 4, 1), (-7, 8, 1),
    (-4, 3, 1), (-5, 4, 1), (-9, 8, 1), (-11, 8, 1),
])

TANGENT_BUNDLE = (("x0^2 + y0^3", "2*x0*x1 + 3*y0^2*y1"), ("x0", "x1", "y0", "y1"))
TANGENT_BUNDLE_ROOTS = _roots([
    (-1, 1, 2), (-1, 3, 2), (-2, 3, 2), (-1, 2, 1), (-5, 6, 1), (-7, 6, 1),
])
TANGENT_BUNDLE_BASIS = (
    "3*y0^2*Dx1 - 2*x0*Dy1",
    "3*y0^2*Dx0 + 6*y0*y1*Dx1 - 2*x0*Dy0 - 2*x1*Dy1",
    "x0*y0*Dx1*Dy0 - x0*y0*Dx0*Dy1 + x1*y0*Dx1*Dy1 - 2*x0*y1*Dx1*Dy1",
    "3*y0*y1*Dx1^2 - x0*Dx1*Dy0 + x0*Dx0*Dy1 - x1*Dx1*Dy1",
    "3*x0*y0*y1*Dx0*Dx1*Dy1 + 6*x0*y1^2*Dx1^2*Dy1 - x0^2*Dx1*Dy0^2"
    " + x0^2*Dx0*Dy0*Dy1 - 2*x0*x1*Dx1*Dy0*Dy1 + x0*x1*Dx0*Dy1^2"
    " - x1^2*Dx1*Dy1^2 + 3*x1*y0*Dx1^2 + 3*x0*y1*Dx1^2 - 3*y0*y1*Dx1*Dy1",
    "6*x0*y1^2*Dx1^2*Dy0*Dy1 + 3*x0*y0*y1*Dx0^2*Dy1^2 - 3*x1*y0*y1*Dx0*Dx1*Dy1^2"
    " + 6*x0*y1^2*Dx0*Dx1*Dy1^2 - x0^2*Dx1*Dy0^3 + x0^2*Dx0*Dy0^2*Dy1"
    " - 2*x0*x1*Dx1*Dy0^2*Dy1 + x0*x1*Dx0*Dy0*Dy1^2 - x1^2*Dx1*Dy0*Dy1^2"
    " + 3*x1*y0*Dx1^2*Dy0 + 3*x0*y1*Dx1^2*Dy0 + 9*x0*y1*Dx0*Dx1*Dy1"
    " - 6*y0*y1*Dx1*Dy0*Dy1 + 3*y0*y1*Dx0*Dy1^2 + 6*y1^2*Dx1*Dy1^2"
    " + 3*x1*Dx1^2 + 3*y1*Dx1*Dy1",
    "6*x0*y1^2*Dx1^3*Dy1 - x0^2*Dx1^2*Dy0^2 + 2*x0^2*Dx0*Dx1*Dy0*Dy1"
    " - 2*x0*x1*Dx1^2*Dy0*Dy1 - x0^2*Dx0^2*Dy1^2 + 2*x0*x1*Dx0*Dx1*Dy1^2"
    " - x1^2*Dx1^2*Dy1^2 - 3*x0*y0*Dx0*Dx1^2 + 3*x1*y0*Dx1^3 + 3*x0*y1*Dx1^3"
    " - 2*x0*Dx1*Dy0*Dy1 + x0*Dx0*Dy1^2 - 3*x1*Dx1*Dy1^2 + 6*y0*Dx1^2",
    "s22 - x1*Dx1 - y1*Dy1",
    "6*s21 - 3*x0*Dx1 - 2*y0*Dy1",
    "6*s11 - 3*x0*Dx0 + 3*x1*Dx1 - 2*y0*Dy0 + 4*y1*Dy1",
    "s12*x0 + 3*y0*y1^2*Dx1 - x0*x1*Dx0 + x1^2*Dx1 - x0*y1*Dy0",
    "s12*y0*Dy1 - x1*y0*Dx1*Dy0 + 2*x1*y1*Dx1*Dy1 - y0*y1*Dy0*Dy1"
    " + 2*y1^2*Dy1^2 - y0*Dy0 + 4*y1*Dy1",
    "3*s12*y0^2 + 6*x1*y0*y1*Dx1 - 3*y0^2*y1*Dy0 + 6*y0*y1^2*Dy1 - 2*x0*x1*Dy0",
    "s12*x1*Dy1^2 - 3*s12*y0*Dx1 + 3*x1*y0*y1*Dx0*Dx1*Dy1 + 6*x1*y1^2*Dx1^2*Dy1"
    " - 3*y0*y1^2*Dx1*Dy0*Dy1 + 3*y0*y1^2*Dx0*Dy1^2 + 6*y1^3*Dx1*Dy1^2"
    " - x0*x1*Dx1*Dy0^2 + x0*x1*Dx0*Dy0*Dy1 - 2*x1^2*Dx1*Dy0*Dy1"
    " - x1*y1*Dy0*Dy1^2 + 3*x1*y0*Dx0*Dx1 + 3*x1*y1*Dx1^2 - 6*y0*y1*Dx1*Dy0"
    " + 9*y0*y1*Dx0*Dy1 + 18*y1^2*Dx1*Dy1 - 2*x1*Dy0*Dy1 + 3*y0*Dx0",
    "3*s12*y0*y1*Dx1 - s12*x1*Dy1 - 3*x1*y0*y1*Dx0*Dx1 - 3*y0*y1^2*Dx0*Dy1"
    " + x1^2*Dx1*Dy0 + x1*y1*Dy0*Dy1 - 3*y0*y1*Dx0 + x1*Dy0",
)
TANGENT_BUNDLE_CENTRAL = "s12*s21 - s11*s22 - s11"
TANGENT_BUNDLE_GKDIM = 6

BS_IDEAL_STRETCH = (("z", "x^5 + y^5 + x^2*y^3*z"), ("x", "y", "z"))
BS_IDEAL_STRETCH_LEADS = ("s1*s2^8", "s1^2*s2^7", "s1^5*s2^6")


# -- case implementations ---------------------------------------------------


def _parse_f(text, names):
    ring = _ring(names)
    return parse_poly(text, ring), ring


def _expected_ideal(strings, alg):
    return [parse_op(s, alg) for s in strings]


def case_sannfs():
    f, _ = _parse_f(*SANNFS_INPUT)
    ann = dm.sannfs_bm([f])
    expect = _expected_ideal(SANNFS_BASIS, ann.algebra)
    ok = ideal_equal(ann.gens, expect)
    return ok, f"{len(ann.gens.gens)} generators, ideal comparison {ok}"


def case_ann_2xy():
    f, _ = _parse_f("2*x*y", ("x", "y"))
    ann = dm.sannfs_bm([f])
    expect = _expected_ideal(ANN2XY_BASIS, ann.algebra)
    if not ideal_equal(ann.gens, expect):
        return False, "annihilator differs"
    b1 = dm.bfct(f)
    b2 = dm.bfct_ann(f, ann=ann)
    ok = b1.roots == ANN2XY_ROOTS and b2.roots == ANN2XY_ROOTS
    return ok, f"roots {b1.render_roots()}"


def case_ann_poly_2xy():
    f, _ = _parse_f("2*x*y", ("x", "y"))
    out = dm.ann_poly(f)
    expect = _expected_ideal(ANNPOLY_2XY, out.alg)
    ok = ideal_equal(out, expect)
    return ok, f"{len(out.gens)} generators"


def case_ann_falpha_2xy():
    f, _ = _parse_f("2*x*y", ("x", "y"))
    out = dm.ann_falpha(f, 1)
    expect = _expected_ideal(ANNPOLY_2XY, out.alg)
    return ideal_equal(out, expect), "f^1 route through the polynomial kernel"


def case_arrangement():
    f, _ = _parse_f(*ARRANGEMENT)
    b = dm.bfct(f)
    ok = b.roots == ARRANGEMENT_ROOTS
    return ok, f"roots {b.render_roots()}"


def case_ann_rat():
    ring = _ring(("x", "y"))
    g = parse_poly(ANNRAT_INPUT[0], ring)
    f = parse_poly(ANNRAT_INPUT[1], ring)
    out = dm.ann_rat(g, f)
    expect = _expected_ideal(ANNRAT_BASIS, out.alg)
    return ideal_equal(out, expect), f"{len(out.gens)} generators"


def case_operator():
    f, _ = _parse_f(*OPERATOR_INPUT)
    ann = dm.sannfs_bm([f])
    b = dm.bfct_ann(f, ann=ann)
    if b.roots != OPERATOR_B_ROOTS:
        return False, f"b-function roots {b.render_roots()}"
    expect = parse_op(OPERATOR_EXPECTED, ann.algebra)
    details = []
    for method in ("modulo", "search", "lift"):
        data = dm.bernstein_data(f, method=method, ann=ann)
        canonical = dm.bernstein_operator_nf(expect, ann)
        if data.operator != canonical:
            return False, f"{method} operator differs from the published one"
        if not dm.is_b_operator(data.operator, f, b.poly, ann):
            return False, f"{method} operator fails the functional identity"
        details.append(method)
    return True, "methods " + ", ".join(details)


def case_sannfs_log():
    f, _ = _parse_f(*LOGANN_INPUT)
    ann = dm.sannfs_log(f)
    expect = _expected_ideal(LOGANN_BASIS, ann.algebra)
    return ideal_equal(ann.gens, expect), f"{len(ann.gens.gens)} generators"


def case_ann_tower():
    f, _ = _parse_f(*LOGANN_INPUT)
    full = dm.sannfs_bm([f])
    a2 = dm.ann_upto_k(f, 2)
    return ideal_equal(a2.gens, full.gens), "order-2 operators already generate"


def case_bfct_ideal_shift():
    W = weyl(1, ["t"])
    op = W.gen("t") * W.gen("Dt") + BFCT_IDEAL_SHIFT
    b = dm.bfct_ideal([op], (1,))
    expect = UniPoly((BFCT_IDEAL_SHIFT, 1))
    return b.poly == expect, f"b = {b.poly.render()}"


def case_check_root():
    f, _ = _parse_f("2*x*y", ("x", "y"))
    ann = dm.sannfs_bm([f])
    ok = (dm.check_root(ann, f, 1)
          and dm.root_multiplicity(ann, f, 1) == 2
          and not dm.check_root(ann, f, 2)
          and dm.min_integer_root(ann, f) == -1)
    return ok, "root 1 double, root 2 absent, minimal integer root -1"


def case_bs_ideal_single():
    f, _ = _parse_f("2*x*y", ("x", "y"))
    out = dm.bs_ideal([f])
    expect = [parse_op("s^2 + 2*s + 1", out.alg)]
    return ideal_equal(out, expect), "principal, (s+1)^2"


def case_bs_ideal_pair():
    ring = _ring(("x", "y"))
    out = dm.bs_ideal([ring.gen("x"), ring.gen("y")])
    expect = [parse_op("s1*s2 + s1 + s2 + 1", out.alg)]
    return ideal_equal(out, expect), "(s1+1)(s2+1)"


def case_variety_consistency():
    ring = _ring(("x", "y"))
    f = parse_poly("2*x*y", ring)
    b1 = dm.bfct_var([f])
    b2 = dm.bfct_ann(f)
    return b1.poly == b2.poly, f"roots {b1.render_roots()}"


# stretch cases -------------------------------------------------------------


def case_curve_product():
    f, _ = _parse_f(*CURVE_PRODUCT)
    b = dm.bfct(f, cap=20)
    ok = b.roots == CURVE_PRODUCT_ROOTS
    return ok, f"roots {b.render_roots()}"


def case_tangent_bundle():
    texts, names = TANGENT_BUNDLE
    ring = _ring(names)
    fs = [parse_poly(t, ring) for t in texts]
    ann = dm.sannfs_var(fs)
    A = ann.algebra
    expect = _expected_ideal(TANGENT_BUNDLE_BASIS, A)
    if len(ann.gens.gens) != 15:
        return False, f"{len(ann.gens.gens)} generators in the reduced basis"
    if not ideal_equal(ann.gens, expect):
        return False, "annihilator differs from the published basis"
    central = parse_op(TANGENT_BUNDLE_CENTRAL, A)
    if not normal_form(central, ann.gens).is_zero():
        return False, "central element does not reduce to zero"
    if lt_dimension(ann.gens) != TANGENT_BUNDLE_GKDIM:
        return False, "Gel'fand-Kirillov dimension differs"
    b = dm.bfct_var(fs, ann=ann)
    ok = b.roots == TANGENT_BUNDLE_ROOTS
    return ok, f"roots {b.render_roots()}"


def case_bs_ideal_stretch():
    texts, names = BS_IDEAL_STRETCH
    ring = _ring(names)
    fs = [parse_poly(t, ring) for t in texts]
    out = dm.bs_ideal(fs)
    if len(out.gens) != 3:
        return False, f"{len(out.gens)} generators"
    leads = tuple(sorted(g.alg.render_exp(g.lm()) for g in out.gens))
    expect = tuple(sorted(BS_IDEAL_STRETCH_LEADS))
    return leads == expect, f"leading monomials {', '.join(leads)}"


CASES = (
    Case("ann-2xy", case_ann_2xy),
    Case("sannfs-reiffen32", case_sannfs),
    Case("ann-poly-2xy", case_ann_poly_2xy),
    Case("ann-falpha-2xy", case_ann_falpha_2xy),
    Case("bfct-arrangement", case_arrangement),
    Case("ann-rat", case_ann_rat),
    Case("bernstein-operator", case_operator),
    Case("sannfs-log-quartic", case_sannfs_log),
    Case("ann-tower-k2", case_ann_tower),
    Case("bfct-ideal-shift", case_bfct_ideal_shift),
    Case("check-root-2xy", case_check_root),
    Case("bs-ideal-2xy", case_bs_ideal_single),
    Case("bs-ideal-xy", case_bs_ideal_pair),
    Case("variety-r1-consistency", case_variety_consistency),
    Case("curve-product-bfct", case_curve_product, stretch=True),
    Case("tangent-bundle", case_tangent_bundle, stretch=True),
    Case("bs-ideal-two-factors", case_bs_ideal_stretch, stretch=True),
)


def run_corpus(stretch=False, names=None):
    """Execute the corpus; returns a list of CaseResult."""
    results = []
    for case in CASES:
        if case.stretch and not stretch:
            continue
        if names and case.name not in names:
            continue
        t0 = time.time()
        try:
            ok, detail = case.run()
        except Exception as exc:  # noqa: BLE001 - reported per case
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        results.append(CaseResult(case.name, ok, detail, time.time() - t0))
    return results
