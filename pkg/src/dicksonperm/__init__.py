"""Dickson permutation maps on Z_n: evaluation, criteria, kernels, group orders."""

from .congruence import Congruence, CongruenceSolution, solve_chain, solve_pair
from .criteria import (
    ModuliProfile,
    brute_perm_flags,
    is_perm_brute,
    is_perm_v,
    is_perm_w,
    profile,
)
from .dickson import (
    COEFF_DEGREE_CAP,
    DicksonCoeffs,
    DicksonParams,
    coeffs,
    compose_check,
    eval_fast,
    eval_map,
    eval_recurrence,
)
from .errors import (
    CapExceededError,
    DegreeTooLargeError,
    KernelConsistencyError,
    UnsolvableTupleError,
)
from .group import (
    GroupOrderReport,
    KernelComponent,
    KernelResult,
    enumerate_kernel,
    group_order,
    group_order_closed_pe,
    group_order_oracle,
    kernel_component,
    kernel_oracle,
    order_report,
    rho,
)
from .numth import Factorization, euler_phi, ext_gcd, factorize, is_prime, lcm_list
from .oracle import InducedMapTable, build_table, distinct_maps

__version__ = "0.1.0"

__all__ = [
    "COEFF_DEGREE_CAP",
    "CapExceededError",
    "Congruence",
    "CongruenceSolution",
    "DegreeTooLargeError",
    "DicksonCoeffs",
    "DicksonParams",
    "Factorization",
    "GroupOrderReport",
    "InducedMapTable",
    "KernelComponent",
    "KernelConsistencyError",
    "KernelResult",
    "ModuliProfile",
    "UnsolvableTupleError",
    "brute_perm_flags",
    "build_table",
    "coeffs",
    "compose_check",
    "distinct_maps",
    "enumerate_kernel",
    "euler_phi",
    "eval_fast",
    "eval_map",
    "eval_recurrence",
    "ext_gcd",
    "factorize",
    "group_order",
    "group_order_closed_pe",
    "group_order_oracle",
    "is_perm_brute",
    "is_perm_v",
    "is_perm_w",
    "is_prime",
    "kernel_component",
    "kernel_oracle",
    "lcm_list",
    "order_report",
    "profile",
    "rho",
    "solve_chain",
    "solve_pair",
]
