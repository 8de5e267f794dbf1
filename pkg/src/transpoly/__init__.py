"""Exact arithmetic on polynomials with transfinite exponents.

The exponents are surintegers (finite sums of ordinal powers of omega with
integer coefficients), coefficients are rationals, and supports may be
infinite descending runs. The package provides the ring operations, a
transfinite long division with limit steps, quotient rings, a text/JSON
format and a small REPL.
"""

from transpoly.config import DivisionConfig, Limits, get_limits, using_limits
from transpoly.errors import (
    BudgetExhausted,
    InfiniteTailUnderflow,
    ModulusMismatch,
    NonDescendingInput,
    NotInvertible,
    ParseError,
    RepresentationLimit,
    SchemaError,
    TranspolyError,
    ZeroDivisorError,
    ZeroPolyError,
)
from transpoly.exponents import (
    OMEGA,
    ArchOrdering,
    Ordering,
    Ordinal,
    Surinteger,
    below_gamma,
    ord_cmp,
    si_add,
    si_arch_cmp,
    si_cmp,
    si_neg,
)
from transpoly.napoly import (
    ONE,
    ZERO,
    NakedPoly,
    RecurrentRun,
    TermCursor,
    TermFamily,
    X,
    family,
    from_terms,
    monomial,
)
from transpoly.division import (
    DivisionTrace,
    divmod_trace,
    ext_gcd,
    ideal_member,
    is_root_poly,
    norm,
    verify_division,
    verify_factor,
    verify_split,
)
from transpoly.quotient import Modulus, QuotElem, congruent, reduce, root_adjoin
from transpoly.textio import (
    from_json,
    parse_ordinal,
    parse_poly,
    parse_surint,
    print_ordinal,
    print_poly,
    print_surint,
    to_json,
)

__all__ = [name for name in dir() if not name.startswith("_")]
