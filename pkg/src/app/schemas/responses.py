from typing import List, Optional

from pydantic import Field

from src.app.schemas.common import FrequencyInfo, ModeVolumeInfo, ResultDocument


class QnmReport(ResultDocument, FrequencyInfo, ModeVolumeInfo):
    """Contents of qnm.json."""
    l_eff: Optional[float] = Field(default=None, description="effective mode length (stacks only)")
    helmholtz_residual: Optional[float] = Field(default=None, description="relative residual of the field equation")
    mesh_cells: Optional[int] = Field(default=None, description="scatterer cells (crystallites only)")
    near_degenerate: Optional[bool] = Field(default=None, description="second eigenvalue close to 1")
    artifacts: List[str] = Field(default_factory=list, description="files written next to this document")


class SweepSummary(ResultDocument, FrequencyInfo, ModeVolumeInfo):
    """Contents of summary.json written next to sweep.csv."""
    radii: List[float] = Field(description="domain sizes of the sweep")
    v_eff_tot: Optional[float] = Field(default=None, description="V_eff^Q F_single / F_full")
    purcell_single: Optional[float] = Field(default=None, description="single-mode LDOS enhancement at r_c")
    purcell_full: Optional[float] = Field(default=None, description="full LDOS enhancement at r_c")
    purcell_estimate: Optional[float] = Field(default=None, description="4Q / (omega_R^2 n_c^2 V_eff^Q), 2D only")
    artifacts: List[str] = Field(default_factory=list)


class LdosReport(ResultDocument):
    """Contents of ldos.json written next to ldos.csv."""
    probe: List[float] = Field(description="emitter position")
    points: int = Field(description="number of frequencies")
    omega_min: float
    omega_max: float
    peak_omega: float = Field(description="frequency of the largest full LDOS enhancement")
    peak_enhancement: float
    fwhm: Optional[float] = Field(description="full width at half maximum of the full LDOS peak")
    mode_omega_re: Optional[float] = Field(default=None, description="real part of the mode used for F_single")
    mode_omega_im: Optional[float] = Field(default=None)
    artifacts: List[str] = Field(default_factory=list)
