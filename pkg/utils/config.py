"""Runtime settings for normdisk.

Values are read from the environment (a local ``.env`` file is loaded first)
and fall back to the built-in defaults below. CLI flags override them.
"""
import os

from dotenv import load_dotenv

load_dotenv()


def _float(name, default):
    raw = os.getenv(name)
    if raw is None or not raw.strip():
        return default
    try:
        return float(raw)
    except ValueError:
        raise ValueError(f"{name} must be a number, got {raw!r}")


def _int(name, default):
    return int(_float(name, default))


SETTINGS = {
    "TOL": _float("NORMDISK_TOL", 1e-9),
    "LOG_LEVEL": os.getenv("NORMDISK_LOG_LEVEL", "WARNING").upper(),
    "CONVEXITY_SAMPLES": _int("NORMDISK_CONVEXITY_SAMPLES", 720),
    "MAX_SITES": _int("NORMDISK_MAX_SITES", 60),
    "MAX_ORACLE_POINTS": _int("NORMDISK_MAX_ORACLE_POINTS", 400),
}
