import json
import os
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from src.app.core.config import settings
from src.app.core.exceptions import ConfigurationError, InvalidRadiiError
from src.structures.models import LayeredStack1D, RodLattice2D, StructureSpec
from src.structures.presets import get_preset


def _split_numbers(value: Any, name: str) -> Any:
    """Accept "1.5,-0.2" style strings next to JSON lists."""
    if not isinstance(value, str):
        return value
    try:
        return [float(part) for part in value.split(",") if part.strip()]
    except ValueError:
        raise ConfigurationError(f"{name} must be a comma separated list of numbers, got '{value}'")


class RunConfig(BaseModel):
    """
    Everything a command needs: the structure (inline or as preset names)
    and the solver and output options. CLI flags override the config file.
    """
    model_config = ConfigDict(extra="forbid")

    structure: Optional[StructureSpec] = Field(default=None, description="inline structure document")
    presets: List[str] = Field(default_factory=list, description="bundled structure names")
    guess: Optional[Tuple[float, float]] = Field(
        default=None,
        description="initial frequency RE,IM: omega L/c for stacks, omega a/2 pi c for crystallites",
    )
    resolution: Optional[int] = Field(default=None, ge=1, description="mesh cells across a rod diameter")
    radii: Optional[List[float]] = Field(default=None, description="sweep radii (half-widths for stacks)")
    probe: Tuple[float, float] = Field(default=(0.0, 0.0), description="emitter position for LDOS spectra")
    reference: Optional[List[float]] = Field(default=None, description="reference point r_c; antinode if unset")
    out: Path = Field(default_factory=lambda: settings.output_path, description="output directory")
    threads: Optional[int] = Field(default=None, ge=1, description="worker threads; QNMLAB_THREADS if unset")
    compute_ldos: bool = Field(default=True, description="compare against the full LDOS in sweeps")
    spectrum_points: Optional[int] = Field(default=None, ge=3, description="frequencies in an LDOS spectrum")
    spectrum_half_width: Optional[float] = Field(default=None, gt=0, description="spectrum half width in |Im w|")

    @field_validator("presets", mode="before")
    def split_presets(cls, v):
        return [v] if isinstance(v, str) else v

    @field_validator("presets")
    def validate_presets(cls, v):
        for name in v:
            get_preset(name)
        return v

    @field_validator("guess", "probe", mode="before")
    def parse_pair(cls, v, info):
        v = _split_numbers(v, info.field_name)
        if v is not None and len(v) != 2:
            raise ConfigurationError(f"{info.field_name} needs exactly two numbers, got {v}")
        return v

    @field_validator("radii", "reference", mode="before")
    def parse_list(cls, v, info):
        return _split_numbers(v, info.field_name)

    @field_validator("radii")
    def validate_radii(cls, v):
        if v is None:
            return v
        if len(v) == 0:
            raise InvalidRadiiError("radii list is empty")
        if any(b <= a for a, b in zip(v, v[1:])) or v[0] <= 0:
            raise InvalidRadiiError(f"radii must be positive and strictly increasing, got {v}")
        return v

    @field_validator("out")
    def validate_out(cls, v):
        existing = Path(v).absolute()
        while not existing.exists():
            existing = existing.parent
        if not existing.is_dir() or not os.access(existing, os.W_OK):
            raise ConfigurationError(f"output directory {v} is not writable")
        return v

    @model_validator(mode="after")
    def check_structure_source(self):
        if self.structure is None and not self.presets:
            raise ConfigurationError("no structure given: use a structure document or --preset")
        if self.structure is not None and self.presets:
            raise ConfigurationError("give either an inline structure or presets, not both")
        return self

    @property
    def guess_complex(self) -> Optional[complex]:
        return None if self.guess is None else complex(*self.guess)

    def structures(self) -> List[Tuple[str, Union[LayeredStack1D, RodLattice2D]]]:
        """(name, structure) pairs in the order they were requested."""
        if self.structure is not None:
            return [(self.structure.name, self.structure)]
        return [(name, get_preset(name)) for name in self.presets]

    def single_structure(self) -> Union[LayeredStack1D, RodLattice2D]:
        entries = self.structures()
        if len(entries) != 1:
            raise ConfigurationError(f"this command takes one structure, got {len(entries)}")
        return entries[0][1]

    @classmethod
    def from_sources(cls, config_path: Optional[Path] = None, overrides: Optional[Dict[str, Any]] = None) -> "RunConfig":
        """
        Merge a JSON config file with CLI overrides. A bare structure document
        (one with a "type" key) is accepted as the config file too.
        """
        data: Dict[str, Any] = {}
        if config_path is not None:
            try:
                data = json.loads(Path(config_path).read_text(encoding="utf-8"))
            except OSError as e:
                raise ConfigurationError(f"cannot read config {config_path}: {e}")
            if not isinstance(data, dict):
                raise ConfigurationError(f"config {config_path} must hold a JSON object")
            if "type" in data:
                data = {"structure": data}
        for key, value in (overrides or {}).items():
            if value is not None and value != []:
                data[key] = value
        if data.get("presets") and "structure" in data and (overrides or {}).get("presets"):
            data.pop("structure")
        return cls.model_validate(data)
