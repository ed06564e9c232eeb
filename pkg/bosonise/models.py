"""Pydantic v2 models for run configuration and the JSON reports."""

from __future__ import annotations

from enum import Enum
from pathlib import Path

from pydantic import BaseModel, Field, field_validator


class OutputFormat(str, Enum):
    JSON = "json"
    TEXT = "text"


class Defaults(BaseModel):
    """Optional overrides read from ~/.bosonise/config.json."""

    cap: int = Field(default=10000, ge=1)
    shell_ceiling: int = Field(default=4, ge=0)
    workers: int | None = Field(default=None, ge=1)


class RunConfig(BaseModel):
    """Validated settings of one CLI invocation."""

    particles: int = Field(default=2, ge=1)
    dims: int = Field(default=3, ge=1)
    shell: int | None = Field(default=None, ge=0)
    max_shell: int | None = Field(default=None, ge=0)
    output: OutputFormat = OutputFormat.JSON
    golden: Path | None = None
    cap: int = Field(default=10000, ge=1)
    shell_ceiling: int = Field(default=4, ge=0)
    workers: int | None = Field(default=None, ge=1)

    @field_validator("golden")
    @classmethod
    def validate_golden(cls, v: Path | None) -> Path | None:
        if v is not None and v.suffix != ".json":
            raise ValueError("Golden files must be JSON documents")
        return v


class ShellReport(BaseModel):
    particles: int
    dims: int
    shell: int
    total_degree: int
    dimension: int
    oracle_dimension: int
    basis: list[str]


class ShapeEntry(BaseModel):
    index: int
    shell: int
    degree: int
    polynomial: str
    norm_sq: str


class ShapesReport(BaseModel):
    particles: int
    dims: int
    expected: int
    complete: bool
    shapes: list[ShapeEntry]


class StateEntry(BaseModel):
    label: str
    m: int
    spherical: str
    norm_sq: str


class MultipletEntry(BaseModel):
    label: str
    l: int  # noqa: E741
    states: list[StateEntry]


class MultipletsReport(BaseModel):
    shell: int
    dimension: int
    l_content: list[int]
    multiplets: list[MultipletEntry]
    highest_weight_check: bool | None = None


class Table1Entry(BaseModel):
    label: str
    spherical: str
    polynomial: str
    norm_sq: str
    matches_paper: bool
    in_reference_span: bool


class DecompositionReport(BaseModel):
    input: str
    coefficients: list[str]
    support: list[int]
    reconstructs: bool


class RmReport(BaseModel):
    state: str
    pure_rm: bool
    band: str
    n_r: int | None = None
    l: int | None = None  # noqa: E741
    phi_support: list[int]
    rm_form: dict[str, str] | None = None


class LaughlinReport(BaseModel):
    shape_count: int
    complete: bool
    shape_degrees: list[int]
    shape_holomorphic: list[bool]
    holomorphic_dimension: int
    holomorphic_combination: str
    vandermonde: str
    vandermonde_match: bool
    determinant_match: bool
    antisymmetric: bool
