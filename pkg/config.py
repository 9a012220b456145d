import os
from dataclasses import dataclass


@dataclass(frozen=True)
class Config:
    threads: int = 1
    max_entry: int = 4
    float_tolerance: float = 1e-12
    database_url: str | None = None
    api_token: str | None = None
    log_level: str = "INFO"


_LEVELS = {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}


def load_config() -> Config:
    invalid = []

    def number(key: str, default, kind, check):
        raw = os.environ.get(key)
        if not raw:
            return default
        try:
            value = kind(raw)
        except ValueError:
            invalid.append(f"{key}={raw!r}")
            return default
        if not check(value):
            invalid.append(f"{key}={raw!r}")
        return value

    threads = number("TABLEAUX_THREADS", 1, int, lambda v: v >= 1)
    max_entry = number("TABLEAUX_MAX_ENTRY", 4, int, lambda v: v >= 1)
    tolerance = number("TABLEAUX_FLOAT_TOLERANCE", 1e-12, float, lambda v: v > 0)
    log_level = os.environ.get("LOG_LEVEL", "INFO").upper()
    if log_level not in _LEVELS:
        invalid.append(f"LOG_LEVEL={log_level!r}")
    if invalid:
        raise ValueError(f"Invalid environment variables: {', '.join(invalid)}")

    return Config(
        threads=threads,
        max_entry=max_entry,
        float_tolerance=tolerance,
        database_url=os.environ.get("DATABASE_URL") or None,
        api_token=os.environ.get("TABLEAUX_API_TOKEN") or None,
        log_level=log_level,
    )
