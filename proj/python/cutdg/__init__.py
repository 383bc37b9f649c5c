"""Ghost-penalty stabilized cut DG for 1D scalar conservation laws."""

from ._cutdg import (
    CutMesh,
    SpectrumReport,
    StabilizationParams,
    assemble_mass,
    boundary_cut_mesh,
    burgers_presock_exact,
    burgers_riemann_exact,
    converge,
    convergence_rates,
    interior_cut_mesh,
    random_cut_mesh,
    run,
    spectrum_report,
    total_variation,
    tvd_timestep_bound,
    uniform_mesh,
)

__version__ = "0.1.0"

__all__ = [
    "CutMesh",
    "SpectrumReport",
    "StabilizationParams",
    "assemble_mass",
    "boundary_cut_mesh",
    "burgers_presock_exact",
    "burgers_riemann_exact",
    "converge",
    "convergence_rates",
    "interior_cut_mesh",
    "random_cut_mesh",
    "run",
    "spectrum_report",
    "total_variation",
    "tvd_timestep_bound",
    "uniform_mesh",
]
