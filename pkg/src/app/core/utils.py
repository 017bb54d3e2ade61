from pathlib import Path
from typing import Callable, Iterable, List, Optional, TypeVar

from joblib import Parallel, delayed

from src.app.core.config import settings, Settings
from src.app.core.logging import get_logger

logger = get_logger()

T = TypeVar("T")
R = TypeVar("R")


def create_all_directories(settings: Settings = settings, extra: Iterable[Path] = ()) -> None:
    """
    Create the output and log directories, plus any command-specific ones.
    """
    try:
        for path in [settings.OUTPUT_DIR, settings.LOGS_DIR, *extra]:
            Path(path).mkdir(parents=True, exist_ok=True)
            logger.debug(f"Ensured directory: {path}")
    except Exception as e:
        logger.error(f"Error creating directories: {e}")
        raise e


def resolve_threads(threads: Optional[int]) -> int:
    """
    Worker count: explicit value first, QNMLAB_THREADS otherwise.
    """
    return threads if threads is not None and threads > 0 else settings.QNMLAB_THREADS


def parallel_map(func: Callable[[T], R], items: Iterable[T], threads: Optional[int] = None) -> List[R]:
    """
    Map over independent work items on threads, keeping input order.
    """
    items = list(items)
    n_jobs = resolve_threads(threads)
    if n_jobs == 1 or len(items) < 2:
        return [func(item) for item in items]
    logger.debug(f"Dispatching {len(items)} tasks on {n_jobs} threads")
    return Parallel(n_jobs=n_jobs, prefer="threads")(delayed(func)(item) for item in items)
