from pathlib import Path
from typing import Any, Callable, Dict, Optional

import numpy as np
import typer
from pydantic import ValidationError

from src.app.core.exceptions import ConfigurationError, NumericalError
from src.app.core.logging import get_logger
from src.app.core.utils import create_all_directories
from src.app.schemas.requests import RunConfig

logger = get_logger()

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_NUMERICAL = 2


def exit_code_for(error: Exception) -> int:
    """Numerical failures exit with 2, every input problem with 1."""
    if isinstance(error, (NumericalError, np.linalg.LinAlgError)):
        return EXIT_NUMERICAL
    return EXIT_CONFIG


def execute(
    command: str,
    service_factory: Callable[[RunConfig], Any],
    config_path: Optional[Path],
    overrides: Dict[str, Any],
):
    """
    Build the run config, run the command's service and translate failures
    into exit codes with a one-line message on standard error.
    """
    try:
        config = RunConfig.from_sources(config_path, overrides)
        create_all_directories(extra=[config.out])
        logger.info(f"{command}: writing into {config.out}")
        return service_factory(config).run()
    except (NumericalError, np.linalg.LinAlgError) as e:
        logger.error(f"{command} failed: {e}")
        typer.echo(f"error: {e}", err=True)
        raise typer.Exit(code=exit_code_for(e))
    except ValidationError as e:
        logger.error(f"{command}: invalid configuration: {e}")
        typer.echo(f"error: invalid configuration\n{e}", err=True)
        raise typer.Exit(code=EXIT_CONFIG)
    except (ConfigurationError, ValueError, OSError) as e:
        logger.error(f"{command}: {e}")
        typer.echo(f"error: {e}", err=True)
        raise typer.Exit(code=EXIT_CONFIG)
