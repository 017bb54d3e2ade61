from src.modevol.antinode import find_antinode
from src.modevol.purcell import (
    effective_length_from_ldos,
    effective_volume_from_ldos,
    ldos_factors,
    purcell_factor,
    purcell_factor_2d_single_mode,
)
from src.modevol.report import ModeVolumeReport, mode_volume_report
from src.modevol.sweep import SWEEP_COLUMNS, convergence_sweep, default_sweep_radii
from src.modevol.volumes import (
    complex_mode_volume,
    effective_volume,
    hermitian_inner_product,
    normal_mode_volume,
    quadrature_grid,
    quasinormal_mode_volume,
)

__all__ = [
    "find_antinode",
    "effective_length_from_ldos",
    "effective_volume_from_ldos",
    "ldos_factors",
    "purcell_factor",
    "purcell_factor_2d_single_mode",
    "ModeVolumeReport",
    "mode_volume_report",
    "SWEEP_COLUMNS",
    "convergence_sweep",
    "default_sweep_radii",
    "complex_mode_volume",
    "effective_volume",
    "hermitian_inner_product",
    "normal_mode_volume",
    "quadrature_grid",
    "quasinormal_mode_volume",
]
