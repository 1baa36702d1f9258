# ---------------- Configuration ----------------
# Values come from the environment, optionally seeded from a .env file.
import os
from dotenv import load_dotenv

from app.errors import ConfigError

load_dotenv()


def _int_setting(name, default):
    raw = os.getenv(name)
    if raw is None or not raw.strip():
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ConfigError(f"{name} must be an integer, got {raw!r}")
    if value <= 0:
        raise ConfigError(f"{name} must be positive, got {value}")
    return value


LOG_LEVEL = os.getenv("OPAQUE_LOG_LEVEL", "WARNING").upper()
if LOG_LEVEL not in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"):
    raise ConfigError(f"OPAQUE_LOG_LEVEL must be a logging level name, got {LOG_LEVEL!r}")
HISTORY_DB = os.getenv("OPAQUE_HISTORY_DB", "").strip()   # empty disables run history
SVG_SIZE = _int_setting("OPAQUE_SVG_SIZE", 600)
# Marker radius in pixels for isolated points; a display constant only.
SVG_MARKER_RADIUS = _int_setting("OPAQUE_SVG_MARKER_RADIUS", 4)
SELFTEST_SAMPLES = _int_setting("OPAQUE_SELFTEST_SAMPLES", 100)
