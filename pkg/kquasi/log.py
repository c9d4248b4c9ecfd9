import enum
import logging

logger = logging.getLogger('kquasi')
logger.addHandler(logging.NullHandler())


class LogLevel(enum.IntEnum):
    Trace = 5
    Debug = logging.DEBUG
    Info = logging.INFO
    Warn = logging.WARNING
    Error = logging.ERROR


def Log(level: LogLevel, message: str):
    """Emit ``message`` on the ``kquasi`` logger."""
    logger.log(int(level), message)


def set_log_level(level: LogLevel):
    """Route ``kquasi`` messages of at least ``level`` to stderr."""
    logger.setLevel(int(level))
    if not any(isinstance(h, logging.StreamHandler) and not isinstance(h, logging.NullHandler)
               for h in logger.handlers):
        handler = logging.StreamHandler()
        handler.setFormatter(logging.Formatter('[%(levelname)s] %(message)s'))
        logger.addHandler(handler)
