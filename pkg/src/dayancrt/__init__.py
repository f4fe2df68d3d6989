"""Sign-aware modular inverses, the generalized Dayan division engine and
Chinese Remainder solvers for co-prime and non-co-prime moduli."""

from .modmath import (
    ModInverseOutcome,
    ModInverseStatus,
    NotCoprimeError,
    ZeroModulusError,
    floor_mod,
    inv,
    inverse_mod_shifted,
    mod_inverse,
    reciprocity_residual,
    shifted_inverse,
)
from .dayan import (
    DayanStep,
    DayanTrace,
    ExtInverseOutcome,
    ExtInverseStatus,
    SignStrategy,
    Termination,
    convergent_inverse_check,
    ext_inverse_sum_f,
    ext_inverse_sum_fraction,
    ext_mod_inverse,
    extended_reciprocity,
    inverse_series_first_type,
    inverse_series_first_type_condensed,
    inverse_series_second_type,
    run_trace,
)
from .crt import (
    Congruence,
    CrtSolution,
    IncompatibleCongruencesError,
    NonCoprimeModuliError,
    solve_coprime,
    solve_general,
    solve_pair,
)

__version__ = "0.1.0"
