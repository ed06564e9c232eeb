"""Run configuration: user defaults file, CLI overrides and the resource guard."""

import json
import logging
from pathlib import Path

from pydantic import ValidationError

from bosonise.errors import BosonisationError, ResourceCapError
from bosonise.fock import ShellSpec, shell_dimension
from bosonise.models import Defaults, RunConfig

logger = logging.getLogger(__name__)

CONFIG_DIR = Path.home() / ".bosonise"
CONFIG_FILE = CONFIG_DIR / "config.json"


def load_defaults(path: Path | None = None) -> Defaults:
    """Reads the optional defaults file; a missing file means built-in defaults."""
    config_file = path or CONFIG_FILE
    if not config_file.exists():
        return Defaults()

    try:
        with open(config_file) as f:
            data = json.load(f)
        return Defaults.model_validate(data)
    except (json.JSONDecodeError, ValidationError) as e:
        raise BosonisationError(
            f"Invalid defaults file {config_file}: {e}",
            hint="fix or delete the file to fall back to built-in defaults",
        ) from e


def build_config(defaults: Defaults | None = None, **overrides: object) -> RunConfig:
    """Merges file defaults with the CLI flags that were actually given."""
    base = (defaults or load_defaults()).model_dump()
    base.update({k: v for k, v in overrides.items() if v is not None})
    return RunConfig.model_validate(base)


def enforce_cap(spec: ShellSpec, cap: int) -> int:
    """Refuses shells larger than ``cap`` before any polynomial is built; returns the dimension."""
    size = shell_dimension(spec)
    logger.debug("shell N=%d d=%d s=%d has %d states (cap %d)", spec.particles, spec.dims, spec.shell, size, cap)
    if size > cap:
        raise ResourceCapError(
            f"shell {spec.shell} of N={spec.particles}, d={spec.dims} has {size} states, cap is {cap}",
            size=size,
            cap=cap,
            hint="raise --cap if you really want this",
        )
    return size
