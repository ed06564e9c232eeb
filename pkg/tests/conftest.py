"""Shared test fixtures for the bosonise test suite."""

from pathlib import Path

import pytest

from bosonise import config
from bosonise.fock import ShellSpec
from bosonise.multiplets import resolve_shell
from bosonise.shapes import complete_shape_basis


@pytest.fixture(autouse=True)
def mock_config_dir(tmp_path: Path, monkeypatch):
    """Redirects the defaults file to a temporary directory."""
    monkeypatch.setattr(config, "CONFIG_DIR", tmp_path / ".bosonise")
    monkeypatch.setattr(config, "CONFIG_FILE", tmp_path / ".bosonise" / "config.json")
    return tmp_path / ".bosonise"


@pytest.fixture(scope="session")
def shell2():
    """Multiplet resolution of the second two-particle shell."""
    return resolve_shell(ShellSpec(2, 3, 2))


@pytest.fixture(scope="session")
def pair_basis():
    """The four shapes of two particles in three dimensions."""
    return complete_shape_basis(2, 3)


@pytest.fixture(scope="session")
def planar_triple_basis():
    """The six shapes of three particles in the plane."""
    return complete_shape_basis(3, 2)
