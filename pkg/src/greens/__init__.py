from src.greens.background import greens_background_1d, greens_background_2d
from src.greens.full import FullGreensSolver, greens_full_1d, greens_full_2d
from src.greens.ldos import (
    LdosSpectrum,
    check_probe,
    ldos_enhancement,
    ldos_enhancement_1d,
    ldos_spectrum,
    spectrum_frequencies,
)
from src.greens.single_mode import greens_single_mode, single_mode_ldos

__all__ = [
    "greens_background_1d",
    "greens_background_2d",
    "FullGreensSolver",
    "greens_full_1d",
    "greens_full_2d",
    "LdosSpectrum",
    "check_probe",
    "ldos_enhancement",
    "ldos_enhancement_1d",
    "ldos_spectrum",
    "spectrum_frequencies",
    "greens_single_mode",
    "single_mode_ldos",
]
