"""dmodkit: exact Groebner bases over G-algebras of Lie type, with the
algorithms for annihilators, b-functions, Bernstein-Sato polynomials,
operators and ideals built on top."""

from .action import ActionValue, annihilates, annihilates_power, apply_to_fs
from .dmodcore import (
    BernsteinData,
    SParamAnnihilator,
    ann_falpha,
    ann_poly,
    ann_rat,
    ann_upto_k,
    bernstein_data,
    bernstein_operator_nf,
    bfct,
    bfct_ann,
    bfct_ideal,
    bfct_var,
    bs_ideal,
    check_root,
    fs_diff_coefficient,
    initial_ideal,
    is_b_operator,
    malgrange_ideal,
    min_integer_root,
    operator_lift,
    operator_modulo,
    operator_search,
    principal_intersect,
    root_multiplicity,
    sannfs_bm,
    sannfs_log,
    sannfs_var,
    variety_codim,
)
from .errors import CapExceeded, ComputationError, UnsupportedBranch, ZeroIntersection
from .galgebra import (
    AdmissibilityError,
    AlgebraMap,
    GAlgebra,
    NondegeneracyError,
    OpPoly,
    apply_map,
    commutative,
    dehomogenize,
    homogenize_weighted,
    initial_form,
    lie_bracket,
    make_galgebra,
    preset,
    star_mul,
    substitution_map,
    transfer,
    weyl,
    weyl_dt_gl,
    weyl_gl,
    weyl_homog,
    weyl_s,
    weyl_shift,
    weyl_t,
    weyl_t_shift,
)
from .groebner import (
    GBasis,
    VecPoly,
    buchberger,
    buchberger_module,
    eliminate,
    ideal_equal,
    lift,
    lin_reduce,
    lt_dimension,
    modulo_kernel,
    normal_form,
    reduce_gb,
    spoly,
    syzygies,
)
from .parsing import ParseError, parse_op, parse_poly, render_poly, validate_ring_names
from .polyarith import (
    BFunction,
    MonOrder,
    Rational,
    UniPoly,
    block_order,
    cmp_monomials,
    degrevlex,
    elim_order,
    lex,
    rational,
    symbolic_binomial,
    unipoly_bs_transform,
    unipoly_rational_roots,
    weight_order,
)

__version__ = "0.1.0"
