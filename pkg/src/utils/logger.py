#!/usr/bin/env python3
"""
Structured logging configuration.
"""

import logging
import re
import sys
from typing import Any, Dict

import structlog

from ..config.env import get_settings

settings = get_settings()

# Rationals from deep refinements can run to thousands of digits
_LONG_INTEGER = re.compile(r"\d{40,}")


def shorten_numbers(logger, method_name: str, event_dict: Dict[str, Any]) -> Dict[str, Any]:
    """Abbreviate very long integer literals in log messages."""
    if "event" in event_dict:
        message = str(event_dict["event"])
        message = _LONG_INTEGER.sub(
            lambda m: f"{m.group(0)[:8]}...({len(m.group(0))} digits)",
            message,
        )
        event_dict["event"] = message

    return event_dict


def configure_logging() -> None:
    """Configure structured logging."""
    level = getattr(logging, settings.MULTIBASE_LOG_LEVEL)

    structlog.configure(
        processors=[
            structlog.contextvars.merge_contextvars,
            structlog.processors.add_log_level,
            structlog.processors.StackInfoRenderer(),
            structlog.dev.set_exc_info,
            structlog.processors.TimeStamper(fmt="ISO"),
            shorten_numbers,
            structlog.dev.ConsoleRenderer() if settings.MULTIBASE_DEBUG else structlog.processors.JSONRenderer(),
        ],
        wrapper_class=structlog.make_filtering_bound_logger(level),
        # stdout carries command output
        logger_factory=structlog.PrintLoggerFactory(file=sys.stderr),
        cache_logger_on_first_use=True,
    )

    logging.basicConfig(
        format="%(message)s",
        stream=sys.stderr,
        level=level,
    )


def get_logger(name: str) -> structlog.BoundLogger:
    """Get structured logger instance."""
    return structlog.get_logger(name)


# Configure logging on import
configure_logging()
