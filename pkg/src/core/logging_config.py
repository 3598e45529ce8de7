"""Logging setup: stderr console plus a rotating file under logs/app."""

from __future__ import annotations

import json
import logging
import logging.config
from pathlib import Path
from typing import Any, Dict, Optional

from .settings import get_settings

BASE_LOGGER = "cauchykit"

# Attributes every LogRecord carries; anything else arrived through `extra=`.
_RECORD_FIELDS = set(vars(logging.LogRecord("", 0, "", 0, "", None, None))) | {"message", "asctime"}


def record_context(record: logging.LogRecord) -> Dict[str, Any]:
    return {key: value for key, value in vars(record).items() if key not in _RECORD_FIELDS}


class ContextFormatter(logging.Formatter):
    """Text lines with the `extra=` context appended as key=value pairs."""

    def format(self, record: logging.LogRecord) -> str:
        line = super().format(record)
        context = record_context(record)
        if context:
            line += " | " + " ".join(f"{key}={value}" for key, value in sorted(context.items()))
        return line


class JsonFormatter(logging.Formatter):
    """One JSON object per line; context fields become top-level keys."""

    def format(self, record: logging.LogRecord) -> str:
        payload = {
            "ts": self.formatTime(record),
            "level": record.levelname,
            "logger": record.name,
            "message": record.getMessage(),
        }
        payload.update(record_context(record))
        if record.exc_info:
            payload["exc"] = self.formatException(record.exc_info)
        return json.dumps(payload, default=str, sort_keys=True)


def _logging_dict(name: str, level: str, log_file: Path, file_format: str) -> Dict[str, Any]:
    return {
        "version": 1,
        "disable_existing_loggers": False,
        "formatters": {
            "text": {
                "()": ContextFormatter,
                "fmt": "%(asctime)s | %(levelname)8s | %(name)s | %(message)s",
            },
            "json": {"()": JsonFormatter},
        },
        "handlers": {
            # stdout is reserved for reports
            "console": {
                "class": "logging.StreamHandler",
                "level": level,
                "formatter": "text",
                "stream": "ext://sys.stderr",
            },
            "file": {
                "class": "logging.handlers.RotatingFileHandler",
                "level": level,
                "formatter": file_format,
                "filename": str(log_file),
                "maxBytes": 5 * 1024 * 1024,
                "backupCount": 5,
                "encoding": "utf-8",
            },
        },
        "loggers": {
            name: {"handlers": ["console", "file"], "level": level, "propagate": False},
        },
    }


def configure_logging(name: str = BASE_LOGGER, level: Optional[str] = None) -> logging.Logger:
    """Install handlers on the base logger; safe to call more than once."""
    settings = get_settings()
    level = (level or settings.log_level).upper()
    log_dir: Path = settings.paths.log_dir
    log_dir.mkdir(parents=True, exist_ok=True)
    log_file = log_dir / "cauchykit.log"

    logging.config.dictConfig(_logging_dict(name, level, log_file, settings.log_format))
    logger = logging.getLogger(name)
    logger.debug("Logging initialized", extra={"log_file": str(log_file), "file_format": settings.log_format})
    return logger


def get_logger(name: Optional[str] = None) -> logging.Logger:
    """Child of the base logger, configuring it on first use."""
    base = logging.getLogger(BASE_LOGGER)
    if not base.handlers:
        configure_logging()
    return base if name is None else base.getChild(name)
