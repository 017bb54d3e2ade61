from datetime import datetime, timezone
from typing import List, Literal, Optional

from pydantic import BaseModel, Field


UNITS_1D = "omega L / c"
UNITS_2D = "omega a / 2 pi c"


class ResultDocument(BaseModel):
    """Fields shared by every JSON document a command emits."""
    command: str = Field(description="CLI command that produced the document")
    structure: str = Field(description="name of the structure or preset")
    dimension: Literal[1, 2] = Field(description="1 for layered stacks, 2 for rod crystallites")
    units: str = Field(description="frequency units of every omega_* field")
    timestamp: datetime = Field(default_factory=lambda: datetime.now(timezone.utc))


class FrequencyInfo(BaseModel):
    omega_re: float = Field(description="real part of the complex eigenfrequency")
    omega_im: float = Field(description="imaginary part of the complex eigenfrequency, negative")
    q_factor: float = Field(description="-Re omega / (2 Im omega)")


class ModeVolumeInfo(BaseModel):
    antinode: List[float] = Field(description="reference point r_c")
    n_c: float = Field(description="refractive index at r_c")
    v_q_re: float = Field(description="Re of the complex mode volume v_Q")
    v_q_im: float = Field(description="Im of the complex mode volume v_Q")
    v_eff_q: Optional[float] = Field(default=None, description="V_eff^Q; null when Re(v_Q) <= 0")
    v_eff_q_reduced: Optional[float] = Field(default=None, description="V_eff^Q in units of (lambda_c / n_c)^d")
