import logging

from utils.config import SETTINGS


def setup_logger(level=None):
    logger = logging.getLogger("normdisk")
    logger.setLevel(level or SETTINGS["LOG_LEVEL"])

    if not logger.handlers:
        handler = logging.StreamHandler()
        handler.setFormatter(logging.Formatter("[%(levelname)s] %(message)s"))
        logger.addHandler(handler)

    return logger

logger = setup_logger()
