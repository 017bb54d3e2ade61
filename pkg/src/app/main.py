from src.app.cli.main import main
from src.app.core.config import settings
from src.app.core.logging import get_logger

logger = get_logger()


if __name__ == "__main__":
    logger.debug(f"Starting {settings.PROJECT_NAME} in {settings.ENVIRONMENT} mode")
    main()
