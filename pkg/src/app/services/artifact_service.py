import json
from functools import lru_cache
from pathlib import Path
from typing import Dict

import jsonschema
import pandas as pd
from pydantic import BaseModel

from src.app.core.config import settings
from src.app.core.logging import get_logger

logger = get_logger()

SCHEMA_DIR = Path(__file__).resolve().parents[1] / "schemas" / "json"


@lru_cache(maxsize=None)
def load_schema(name: str) -> Dict:
    """Shipped JSON schema for an emitted document, e.g. "qnm" or "summary"."""
    return json.loads((SCHEMA_DIR / f"{name}.schema.json").read_text(encoding="utf-8"))


class ArtifactService:
    """
    Writes command outputs into one directory: CSV tables in fixed scientific
    notation and JSON documents checked against their schema.
    """

    def __init__(self, out_dir: Path, float_format: str = settings.CSV_FLOAT_FORMAT):
        self.out_dir = Path(out_dir)
        self.float_format = float_format

    def path(self, name: str) -> Path:
        self.out_dir.mkdir(parents=True, exist_ok=True)
        return self.out_dir / name

    def write_csv(self, frame: pd.DataFrame, name: str) -> Path:
        path = self.path(name)
        try:
            frame.to_csv(path, index=False, float_format=self.float_format, na_rep="nan", lineterminator="\n")
        except OSError as e:
            logger.error(f"Error writing {path}: {e}")
            raise
        logger.info(f"Wrote {path} ({len(frame)} rows)")
        return path

    def write_json(self, document: BaseModel, name: str, schema: str) -> Path:
        path = self.path(name)
        payload = json.loads(document.model_dump_json())
        try:
            jsonschema.validate(payload, load_schema(schema))
        except jsonschema.ValidationError as e:
            logger.error(f"{name} does not match the {schema} schema: {e.message}")
            raise
        path.write_text(json.dumps(payload, indent=2) + "\n", encoding="utf-8")
        logger.info(f"Wrote {path}")
        return path
