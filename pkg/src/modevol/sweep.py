from typing import Optional, Sequence, Union

import numpy as np
import pandas as pd

from src.app.core.config import settings
from src.app.core.exceptions import InvalidRadiiError, NonPositiveVolumeError
from src.app.core.logging import get_logger
from src.app.core.utils import parallel_map
from src.modevol.volumes import _reference_intensity, effective_volume
from src.qnm1d.field import Qnm1D
from src.qnm1d.inner_product import interval_rule, qnm_inner_product_1d
from src.qnm2d.field import Qnm2D
from src.qnm2d.inner_product import check_radii, disk_rule_for, epsilon_weighted_integrals, surface_term_2d
from src.structures.models import LayeredStack1D, RodLattice2D
from src.structures.permittivity import epsilon_at, epsilon_map

logger = get_logger()

SWEEP_COLUMNS = ["radius", "Veff_N", "Veff_Q", "vQ_re", "vQ_im"]


def default_sweep_radii(spec: Union[RodLattice2D, LayeredStack1D]) -> np.ndarray:
    """SWEEP_POINTS radii from just outside the structure to SWEEP_MAX_RADIUS."""
    inner = spec.circumradius if isinstance(spec, RodLattice2D) else spec.length / 2
    return np.linspace(inner + settings.SWEEP_START_MARGIN, settings.SWEEP_MAX_RADIUS, settings.SWEEP_POINTS)


def _volume_q(v_q: complex, n_c: float) -> float:
    try:
        return effective_volume(v_q, n_c)
    except NonPositiveVolumeError:
        logger.warning(f"Re v_Q = {v_q.real:.3e} at one sweep radius; V_eff^Q left undefined")
        return float("nan")


def _sweep_2d(mode: Qnm2D, spec: RodLattice2D, radii: np.ndarray, r_c, threads) -> pd.DataFrame:
    radii = check_radii(spec, radii)
    rule = disk_rule_for(mode, radii)
    values = mode.field_at(rule.points)
    energy = epsilon_weighted_integrals(mode, mode, radii, conjugate=True, rule=rule, fields=(values, values)).real
    volume = epsilon_weighted_integrals(mode, mode, radii, rule=rule, fields=(values, values))
    surface = np.array(parallel_map(lambda r: surface_term_2d(mode, mode, r), radii, threads))
    return _table(mode, spec, radii, r_c, energy, volume + surface)


def _sweep_1d(mode: Qnm1D, spec: LayeredStack1D, radii: np.ndarray, r_c) -> pd.DataFrame:
    radii = np.atleast_1d(np.asarray(radii, dtype=float))
    center = spec.length / 2
    if radii.size == 0 or np.any(np.diff(radii) <= 0) or radii[0] < center:
        raise InvalidRadiiError(f"half-widths must increase and enclose the stack, got {radii.tolist()}")

    energy, norms = [], []
    for radius in radii:
        x, w = interval_rule(mode, center - radius, center + radius)
        energy.append(np.sum(w * epsilon_map(spec, x) * np.abs(mode.field_at(x)) ** 2))
        norms.append(qnm_inner_product_1d(mode, mode, (center - radius, center + radius)))
    return _table(mode, spec, radii, r_c, np.asarray(energy), np.asarray(norms))


def _table(mode, spec, radii, r_c, energy, norms) -> pd.DataFrame:
    f_c = _reference_intensity(mode, spec, r_c)
    eps_c = epsilon_at(spec, r_c)
    n_c = np.sqrt(eps_c)
    v_q = norms / f_c ** 2
    return pd.DataFrame({
        "radius": radii,
        "Veff_N": energy / (eps_c * abs(f_c) ** 2),
        "Veff_Q": [_volume_q(complex(v), n_c) for v in v_q],
        "vQ_re": v_q.real,
        "vQ_im": v_q.imag,
    }, columns=SWEEP_COLUMNS)


def convergence_sweep(
    mode: Union[Qnm1D, Qnm2D],
    spec=None,
    radii: Optional[Sequence[float]] = None,
    r_c=None,
    threads: Optional[int] = None,
) -> pd.DataFrame:
    """
    V_eff^N and V_eff^Q against the size of the calculation domain: disk
    radius for a crystallite, half-width about the stack center in 1D. The
    quasinormal norm is recomputed at every radius.
    """
    spec = (mode.stack if isinstance(mode, Qnm1D) else mode.lattice) if spec is None else spec
    radii = default_sweep_radii(spec) if radii is None else np.asarray(radii, dtype=float)
    if r_c is None:
        r_c = spec.length / 2 if isinstance(spec, LayeredStack1D) else np.zeros(2)

    logger.info(f"Mode volume sweep of '{spec.name}' over {len(radii)} radii")
    if isinstance(mode, Qnm2D):
        return _sweep_2d(mode, spec, radii, r_c, threads)
    return _sweep_1d(mode, spec, radii, r_c)
