"""Partial-state fidelity across ground-state level crossings.

Single-site fidelity and its susceptibility for two models with exactly
solvable magnetization sectors: the isotropic Lipkin-Meshkov-Glick model
(closed forms throughout) and the antiferromagnetic spin-1/2 Heisenberg ring
(Bethe-Ansatz sector solver, cross-checked by dense exact diagonalization).
"""

from .analysis import (
    PowerLawFit,
    chi_max_scan,
    fit_power_law,
    heisenberg_first_crossings,
    min_fidelity,
)
from .bethe import (
    BetheRoots,
    ConvergenceError,
    bethe_quantum_numbers,
    bethe_residual,
    h1_closed_form,
    heisenberg_crossings,
    heisenberg_curve,
    sector_energy,
    sector_epsilon,
    solve_bethe,
)
from .ed import (
    SectorBasis,
    ValidationReport,
    ed_sector_ground_energy,
    sector_basis,
    sector_hamiltonian,
    validate_bethe,
)
from .fidelity import (
    CrossingPoint,
    CurvePoint,
    DiagonalState,
    bhattacharyya_fidelity,
    crossing_fidelity,
    crossing_susceptibility,
    global_sector_overlap,
    single_site_state,
)
from .lmg import (
    LmgSector,
    lmg_chi_max,
    lmg_crossings,
    lmg_curve,
    lmg_energy,
    lmg_fidelity,
    lmg_ground_magnetization,
)

__version__ = "0.1.0"

__all__ = [
    "BetheRoots",
    "ConvergenceError",
    "CrossingPoint",
    "CurvePoint",
    "DiagonalState",
    "LmgSector",
    "PowerLawFit",
    "SectorBasis",
    "ValidationReport",
    "bethe_quantum_numbers",
    "bethe_residual",
    "bhattacharyya_fidelity",
    "chi_max_scan",
    "crossing_fidelity",
    "crossing_susceptibility",
    "ed_sector_ground_energy",
    "fit_power_law",
    "global_sector_overlap",
    "h1_closed_form",
    "heisenberg_crossings",
    "heisenberg_curve",
    "heisenberg_first_crossings",
    "lmg_chi_max",
    "lmg_crossings",
    "lmg_curve",
    "lmg_energy",
    "lmg_fidelity",
    "lmg_ground_magnetization",
    "min_fidelity",
    "sector_basis",
    "sector_energy",
    "sector_epsilon",
    "sector_hamiltonian",
    "single_site_state",
    "solve_bethe",
    "validate_bethe",
]
