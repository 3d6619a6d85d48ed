"""Exact arithmetic for the torus orders of the twisted groups of Lie type
2B2, 2G2 and 2F4: square-root cyclotomic factorizations, primitive prime
divisors, and independence numbers of the associated prime graphs.
"""

from suzree.arith import (
    BudgetExceeded,
    Factorization,
    divisors,
    factorize,
    is_prime,
    largest_prime_divisor,
    mobius,
    multiplicative_order,
)
from suzree.aurifeuille import (
    BoundCheck,
    CycInt,
    Family,
    ProjectionError,
    QuadInt,
    QuadPoly,
    RootChoice,
    Sign,
    Verdict,
    build_factor_poly,
    check_factor_bound,
    check_gcd_identity,
    eval_factor_direct,
    eval_factor_poly,
    gcd_cyclotomic_psi,
    induced_sign,
    is_known_exception,
    psi_eval,
    psi_pair_check,
    psi_poly,
    verify_psi_ppd,
)
from suzree.cyclotomic import (
    IntPoly,
    cyclotomic_poly,
    eval_cyclotomic,
    is_ppd,
    primitive_part,
    primitive_prime_divisors,
    zsigmondy_exists,
)
from suzree.primegraph import (
    DataValidationError,
    GKGraph,
    GroupSpec,
    IndependenceReport,
    PrimeClass,
    build_gk,
    group_order,
    independence_number,
    independence_of_extension,
    independence_with_vertex,
    load_adjacency,
    pi_of_group,
    to_dot,
)

__all__ = [
    "BoundCheck",
    "BudgetExceeded",
    "CycInt",
    "DataValidationError",
    "Factorization",
    "Family",
    "GKGraph",
    "GroupSpec",
    "IndependenceReport",
    "IntPoly",
    "PrimeClass",
    "ProjectionError",
    "QuadInt",
    "QuadPoly",
    "RootChoice",
    "Sign",
    "Verdict",
    "build_factor_poly",
    "build_gk",
    "check_factor_bound",
    "check_gcd_identity",
    "cyclotomic_poly",
    "divisors",
    "eval_cyclotomic",
    "eval_factor_direct",
    "eval_factor_poly",
    "factorize",
    "gcd_cyclotomic_psi",
    "group_order",
    "independence_number",
    "independence_of_extension",
    "independence_with_vertex",
    "induced_sign",
    "is_known_exception",
    "is_ppd",
    "is_prime",
    "largest_prime_divisor",
    "load_adjacency",
    "mobius",
    "multiplicative_order",
    "pi_of_group",
    "primitive_part",
    "primitive_prime_divisors",
    "psi_eval",
    "psi_pair_check",
    "psi_poly",
    "to_dot",
    "verify_psi_ppd",
    "zsigmondy_exists",
]

__version__ = "0.1.0"
