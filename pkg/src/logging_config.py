"""Logging helpers for the workbench.

Wires structlog onto the standard library logger. Everything goes to
standard error so that command output on standard out stays byte-stable.
"""
import logging
import sys

import structlog


def configure_logging(level: str = 'WARNING', json: bool = False) -> None:
    """Configure structlog and the root logger.

    Args:
        level: logging level name (INFO, DEBUG, etc.)
        json: render events as JSON lines instead of console text
    """
    root = logging.getLogger()
    root.setLevel(getattr(logging, level.upper(), logging.WARNING))

    # If handlers already exist (e.g., in tests), avoid adding duplicates
    if not any(isinstance(h, logging.StreamHandler) for h in root.handlers):
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter('%(message)s'))
        root.addHandler(handler)

    renderer = (
        structlog.processors.JSONRenderer()
        if json
        else structlog.dev.ConsoleRenderer(colors=False)
    )
    structlog.configure(
        processors=[
            structlog.stdlib.filter_by_level,
            structlog.stdlib.add_log_level,
            structlog.stdlib.PositionalArgumentsFormatter(),
            structlog.processors.TimeStamper(fmt="iso"),
            structlog.processors.StackInfoRenderer(),
            structlog.processors.format_exc_info,
            structlog.processors.UnicodeDecoder(),
            renderer,
        ],
        context_class=dict,
        logger_factory=structlog.stdlib.LoggerFactory(),
        cache_logger_on_first_use=True,
    )
