"""Exact Grothendieck-group calculus for representation stability of free VI-modules."""

from .grothendieck import VirtualRep, h_invariants, times_trivial, vr_dim, vr_dim_symbolic
from .irreps import (
    IOTA,
    CuspidalSymbol,
    IrrepLabel,
    cuspidal_count,
    dim,
    dim_at,
    enumerate_irrep_types,
    enumerate_irreps,
    norm,
    pad,
    unpad,
)
from .partitions import (
    Partition,
    add_horizontal_strip,
    epsilon,
    hook_lengths,
    make_partition,
    remove_horizontal_strip,
    size,
)
from .qfunc import QPoly, QRatFunc, as_polynomial, eval_at, phi, psi, substitute_power
from .vimodules import (
    StabilityReport,
    StabilizationError,
    VIModuleSpec,
    dim_polynomial_irrep,
    dim_polynomial_module,
    free_module_level,
    injection_count_formula,
    module_level,
    regular_rep,
    stable_multiplicities,
)

__version__ = "0.1.0"
