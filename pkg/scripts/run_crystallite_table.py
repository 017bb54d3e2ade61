import os
import time

import pandas as pd

from src.app.core.config import settings
from src.app.core.logging import get_logger
from src.app.services.mode_service import ModeService
from src.structures.presets import get_preset

logger = get_logger()

RESULT_DIR = os.path.join(os.path.dirname(__file__), "..", settings.OUTPUT_DIR)
TABLE_FILE = "crystallite_table.csv"

# reference defect-mode frequencies, omega a / 2 pi c
REFERENCE_FREQUENCIES = {
    "paper-2d-crystallite-N1": 0.4259 - 0.0135j,
    "paper-2d-crystallite-N2": 0.4218 - 0.0013j,
    "paper-2d-crystallite-N3": 0.4216 - 0.0001j,
}


class CrystalliteTable:
    def __init__(self, result_dir: str = RESULT_DIR, resolution: int = settings.MESH_RESOLUTION):
        self.result_dir = result_dir
        os.makedirs(self.result_dir, exist_ok=True)
        self.resolution = resolution
        self.modes = ModeService()

    def run(self) -> pd.DataFrame:
        rows = []
        for name, reference in REFERENCE_FREQUENCIES.items():
            start = time.perf_counter()
            mode = self.modes.solve_crystallite(get_preset(name), guess=reference, resolution=self.resolution)
            nu = mode.normalized_omega
            rows.append({
                "structure": name,
                "nu_re": nu.real,
                "nu_im": nu.imag,
                "reference_re": reference.real,
                "reference_im": reference.imag,
                "q_factor": mode.omega.q_factor,
                "cells": mode.mesh.size,
                "seconds": time.perf_counter() - start,
            })
            logger.info(f"{name}: {nu:.5f} against {reference:.4f}")
        table = pd.DataFrame(rows)
        table.to_csv(os.path.join(self.result_dir, TABLE_FILE), index=False, float_format=settings.CSV_FLOAT_FORMAT)
        return table


if __name__ == "__main__":
    table = CrystalliteTable().run()
    print(table.to_string(index=False))
