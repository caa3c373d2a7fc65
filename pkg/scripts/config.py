import os
from dataclasses import dataclass
from functools import lru_cache

from dotenv import load_dotenv

load_dotenv()


def _env_int(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{name} must be an integer, got {raw!r}")


def _env_bool(name: str, default: bool) -> bool:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    value = raw.strip().lower()
    if value in ("1", "true", "yes", "on"):
        return True
    if value in ("0", "false", "no", "off"):
        return False
    raise ValueError(f"{name} must be a boolean, got {raw!r}")


@dataclass(frozen=True)
class Settings:
    class_edge_bound: int = 12
    closure_node_bound: int = 6
    triplet_node_bound: int = 8
    slide_includes_terminal: bool = True
    strict_subsets: bool = False
    log_level: str = "WARNING"


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    return Settings(
        class_edge_bound=_env_int("CHAINGRAPH_CLASS_EDGE_BOUND", 12),
        closure_node_bound=_env_int("CHAINGRAPH_CLOSURE_NODE_BOUND", 6),
        triplet_node_bound=_env_int("CHAINGRAPH_TRIPLET_NODE_BOUND", 8),
        slide_includes_terminal=_env_bool("CHAINGRAPH_SLIDE_INCLUDES_TERMINAL", True),
        strict_subsets=_env_bool("CHAINGRAPH_STRICT_SUBSETS", False),
        log_level=os.getenv("CHAINGRAPH_LOG_LEVEL", "WARNING").upper(),
    )


def pick(value, name):
    """Explicit keyword value, or the configured default when it is None."""
    if value is not None:
        return value
    return getattr(get_settings(), name)
