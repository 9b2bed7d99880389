import logging
import sys
from datetime import datetime, timezone
from pathlib import Path
from logging.handlers import RotatingFileHandler
import json
from typing import Optional, Dict, Any


class AlgebraLogger:
    """
    Structured logging for hopfcase computations, with a console handler
    and optional rotating file handlers.
    """

    def __init__(
        self,
        name: str = "hopfcase",
        log_level: int = logging.INFO,
        log_file: Optional[str] = None,
        max_bytes: int = 10 * 1024 * 1024,  # 10MB
        backup_count: int = 5
    ):
        self.logger = logging.getLogger(name)
        self.logger.setLevel(log_level)

        # Remove any existing handlers
        self.logger.handlers = []

        console_handler = logging.StreamHandler(sys.stderr)
        console_handler.setFormatter(self._get_formatter())
        self.logger.addHandler(console_handler)

        if log_file:
            log_path = Path(log_file)
            log_path.parent.mkdir(parents=True, exist_ok=True)

            main_handler = RotatingFileHandler(
                filename=log_path,
                maxBytes=max_bytes,
                backupCount=backup_count
            )
            main_handler.setFormatter(self._get_formatter())
            self.logger.addHandler(main_handler)

            error_handler = RotatingFileHandler(
                filename=log_path.with_name(log_path.stem + "_errors.log"),
                maxBytes=max_bytes,
                backupCount=backup_count
            )
            error_handler.setLevel(logging.ERROR)
            error_handler.setFormatter(self._get_formatter())
            self.logger.addHandler(error_handler)

    @staticmethod
    def _get_formatter() -> logging.Formatter:
        """Create a detailed log formatter."""
        return logging.Formatter(
            "[%(asctime)s] %(levelname)s [%(name)s.%(funcName)s:%(lineno)d] %(message)s"
        )

    def _log_structured(
        self,
        level: int,
        message: str,
        event_type: str,
        additional_data: Optional[Dict[str, Any]] = None
    ) -> None:
        """Log a structured message with additional metadata."""
        structured_data = {
            "timestamp": datetime.now(timezone.utc).isoformat(),
            "event_type": event_type,
            "message": message,
            "data": additional_data or {}
        }
        self.logger.log(level, json.dumps(structured_data, default=str))

    def log_computation(self, operation: str, **quantities: Any) -> None:
        """Log a finished computation together with the dimensions it produced."""
        self._log_structured(
            logging.INFO,
            f"{operation} done",
            "computation",
            {"operation": operation, **quantities}
        )

    def log_rule(self, rule_id: str, fires: bool, values: Dict[str, Any]) -> None:
        """Log an exclusion-rule verdict."""
        self._log_structured(
            logging.DEBUG,
            f"rule {rule_id}: {'fires' if fires else 'silent'}",
            "rule_verdict",
            {"rule": rule_id, "fires": fires, "values": values}
        )

    def log_error(
        self,
        error: Exception,
        context: str,
        additional_data: Optional[Dict[str, Any]] = None
    ) -> None:
        """Log detailed error information."""
        error_data = {
            "error_type": type(error).__name__,
            "error_message": str(error),
            "context": context,
            **(additional_data or {})
        }
        self._log_structured(
            logging.ERROR,
            f"Error in {context}: {str(error)}",
            "error",
            error_data
        )


_algebra_logger: Optional[AlgebraLogger] = None


def get_algebra_logger() -> AlgebraLogger:
    """Return the shared structured logger, creating a console-only one on first use."""
    global _algebra_logger
    if _algebra_logger is None:
        _algebra_logger = AlgebraLogger(log_level=logging.WARNING)
    return _algebra_logger


def configure_algebra_logger(settings: Dict[str, Any]) -> AlgebraLogger:
    """Rebuild the shared logger from the ``logging`` section of the config."""
    global _algebra_logger
    level = getattr(logging, str(settings.get("level", "INFO")).upper(), logging.INFO)
    _algebra_logger = AlgebraLogger(
        log_level=level,
        log_file=settings.get("file_path"),
        max_bytes=int(settings.get("max_file_size", 10 * 1024 * 1024)),
        backup_count=int(settings.get("backup_count", 5))
    )
    return _algebra_logger
