"""Size guards for the exhaustive routines.

``POLYCLAR_MAX_VERTICES`` in the environment overrides both vertex guards.
"""
import os

DEFAULT_MAX_VERTICES = 64
DEFAULT_MAX_PROFILE = 12


def _env():
    env = os.environ.get("POLYCLAR_MAX_VERTICES")
    return int(env) if env else None


def max_vertices(override=None):
    if override is not None:
        return override
    env = _env()
    return DEFAULT_MAX_VERTICES if env is None else env


DEFAULT_MAX_CYCLE_VERTICES = 40


def max_cycle_vertices(override=None):
    """Guard for simple-cycle enumeration, which grows much faster than the
    matching count."""
    if override is not None:
        return override
    env = _env()
    return DEFAULT_MAX_CYCLE_VERTICES if env is None else env
