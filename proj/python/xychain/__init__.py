"""Exact diagonalization of periodic XY chains and their genuine correlations."""

from ._core import (
    MAX_SITES,
    ContractViolation,
    NumericalError,
    analytic_crossings,
    analytic_sector_ground_energy,
    build_hamiltonian,
    build_parity,
    check_factorization,
    detect_minima,
    dispersion,
    eigh,
    factorized_state,
    factorizing_field,
    find_parity_crossings,
    genuine_classical_quantum,
    genuine_total,
    gibbs_state,
    run_sweep,
    sector_ground_energies,
    total_information,
    von_neumann_entropy,
)

__all__ = [name for name in dir() if not name.startswith("_")]
