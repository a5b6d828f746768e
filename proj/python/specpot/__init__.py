"""Half-line Jacobi operators, Herglotz boundary behaviour, and logarithmic
potential theory.

Models are passed as descriptor strings (``free``, ``periodic:a=1,1;b=1,-1``,
``qp:lambda=0.5``, ``random:seed=7,a_lo=0.5,a_hi=1.5``, ``table:a=...;b=...``)
and interval unions as lists of ``(lo, hi)`` pairs.
"""

from ._core import (
    __version__,
    atom_constructor,
    boundary_phase,
    capacity,
    check_capacity_bounds,
    check_dap_gamma,
    check_dos_equilibrium,
    check_identities,
    coefficients,
    dos,
    eigenvalues,
    equilibrium,
    free_m,
    gap_integral,
    green_avg,
    is_reflectionless,
    krein_eval,
    lyapunov,
    m_plus,
    parse_set,
    point_mass,
    pointmass_possible,
    thouless_rhs,
    w_pair,
    xi_naught,
)

__all__ = [
    "__version__",
    "atom_constructor",
    "boundary_phase",
    "capacity",
    "check_capacity_bounds",
    "check_dap_gamma",
    "check_dos_equilibrium",
    "check_identities",
    "coefficients",
    "dos",
    "eigenvalues",
    "equilibrium",
    "free_m",
    "gap_integral",
    "green_avg",
    "is_reflectionless",
    "krein_eval",
    "lyapunov",
    "m_plus",
    "parse_set",
    "point_mass",
    "pointmass_possible",
    "thouless_rhs",
    "w_pair",
    "xi_naught",
]
