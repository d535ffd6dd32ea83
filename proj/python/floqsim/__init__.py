"""Steady-state entanglement in strongly driven, dissipatively coupled qubits.

Thin Python layer over the C++ core: model construction, Floquet
quasienergies, transition rates, concurrence, and the single-point
steady-state pipeline.
"""

from ._core import (
    BathParams,
    DriveParams,
    ModelParams,
    __version__,
    concurrence,
    coupling_operator,
    eigensystem,
    fgr_rates,
    fgr_rates_perturbative,
    hamiltonian,
    quasienergies,
    run_point,
    spectral_density,
    thermal_weight,
)

__all__ = [
    "BathParams",
    "DriveParams",
    "ModelParams",
    "__version__",
    "concurrence",
    "coupling_operator",
    "eigensystem",
    "fgr_rates",
    "fgr_rates_perturbative",
    "hamiltonian",
    "quasienergies",
    "run_point",
    "spectral_density",
    "thermal_weight",
]
