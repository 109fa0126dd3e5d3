"""
Colorized logging for the multibgg kernel. Every module asks for its own
logger through `get_logger` so that the level can be switched from `Config`.
"""

import logging

from colorama import Fore, Style, init

from multibgg.config import Config

init(autoreset=True)


class ColoredFormatter(logging.Formatter):
    COLORS = {
        logging.DEBUG: Fore.GREEN,
        logging.INFO: Fore.CYAN,
        logging.WARNING: Fore.YELLOW,
        logging.ERROR: Fore.RED,
        logging.CRITICAL: Fore.MAGENTA,
    }

    def format(self, record):
        log_color = self.COLORS.get(record.levelno, Fore.WHITE)
        log_message = super().format(record)
        return f"{log_color}{log_message}{Style.RESET_ALL}"


def get_logger(name):
    logger = logging.getLogger(name)
    if not any(isinstance(h.formatter, ColoredFormatter) for h in logger.handlers):
        handler = logging.StreamHandler()
        handler.setFormatter(ColoredFormatter("%(asctime)s - %(name)s - %(levelname)s - %(message)s"))
        logger.addHandler(handler)
        logger.propagate = False
    logger.setLevel(Config.log_level)
    return logger


def set_level(level: str):
    """Apply a new level to every multibgg logger created so far."""
    Config.log_level = level.upper()
    for name, logger in logging.root.manager.loggerDict.items():
        if name.startswith("multibgg") and isinstance(logger, logging.Logger):
            logger.setLevel(Config.log_level)
