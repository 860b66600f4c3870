"""Steady-state noise amplification analysis of stable linear dynamical networks."""

from netperf._netperf import (  # noqa: F401
    NetperfError,
    NotHurwitzError,
    UnstableError,
    analyze,
    asymptotic_approximation,
    build_state_matrix,
    closed_form_eigenvalues,
    closed_form_lower_bound,
    output_dispersion_bound,
    cyclic_derive,
    is_hurwitz,
    is_normal,
    kron_oracle_solve,
    performance_measure,
    restricted_dispersion,
    secant_criterion,
    simulate_dispersion,
    solve_lyapunov,
    spectral_summary,
    sweep,
    symmetric_part,
)

__all__ = [
    "NetperfError",
    "NotHurwitzError",
    "UnstableError",
    "analyze",
    "asymptotic_approximation",
    "build_state_matrix",
    "closed_form_eigenvalues",
    "closed_form_lower_bound",
    "output_dispersion_bound",
    "cyclic_derive",
    "is_hurwitz",
    "is_normal",
    "kron_oracle_solve",
    "performance_measure",
    "restricted_dispersion",
    "secant_criterion",
    "simulate_dispersion",
    "solve_lyapunov",
    "spectral_summary",
    "sweep",
    "symmetric_part",
]
