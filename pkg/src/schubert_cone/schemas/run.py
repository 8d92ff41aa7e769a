"""Validated run configuration and the shared report envelope."""

from functools import cached_property
from pathlib import Path
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from schubert_cone.services.combinatorics import GrassmannIndex, require_leq
from shared.constants import DEFAULT_MAX_DEGREE, ORDER_FAMILIES, REPORT_SCHEMA_VERSION
from shared.errors import InvalidInputError

Command = Literal["hilbert", "multiplicity", "paths", "bijection", "groebner"]
OutputFormat = Literal["json", "table", "ascii", "svg"]


class RunInput(BaseModel):
    """The ``input`` block every report carries."""

    d: int
    n: int
    v: list[int]
    w: list[int] | None = None


class RunConfig(BaseModel):
    """One CLI invocation after parsing.

    ``v`` and ``w`` arrive as comma-separated entry lists and are checked against ``d`` and
    ``n``; ``w`` must sit Bruhat-above ``v`` whenever it is given.
    """

    model_config = ConfigDict(frozen=True)

    command: Command
    d: int = Field(ge=1)
    n: int = Field(ge=1)
    v: str
    w: str | None = None
    output_format: OutputFormat = "json"
    verify: bool = False

    # per-command options
    max_degree: int = Field(default=DEFAULT_MAX_DEGREE, ge=0)
    degree: int = Field(default=2, ge=0)
    list_faces: bool = False
    count_only: bool = False
    render: Literal["ascii", "svg"] | None = None
    out: Path | None = None
    sheet: bool = False
    families: tuple[int, ...] = ORDER_FAMILIES
    reduction: bool = False

    @field_validator("families", mode="before")
    @classmethod
    def parse_families(cls, value: str | tuple[int, ...] | list[int]) -> tuple[int, ...]:
        if isinstance(value, str):
            try:
                value = [int(part) for part in value.split(",") if part.strip()]
            except ValueError:
                raise ValueError(f"cannot parse order families {value!r}") from None
        families = tuple(sorted(set(value)))
        unknown = [f for f in families if f not in ORDER_FAMILIES]
        if unknown or not families:
            raise ValueError(f"order families must be drawn from {ORDER_FAMILIES}, got {list(value)}")
        return families

    @model_validator(mode="after")
    def check_indices(self) -> "RunConfig":
        if self.d > self.n:
            raise ValueError(f"need d <= n, got d={self.d}, n={self.n}")
        if self.output_format in ("ascii", "svg") and self.command != "paths":
            raise ValueError(f"--format {self.output_format} only applies to the paths command")
        v = GrassmannIndex.parse(self.v, self.n, self.d)
        if self.w is not None:
            require_leq(v, GrassmannIndex.parse(self.w, self.n, self.d))
        elif self.command != "groebner":
            raise ValueError(f"{self.command} needs --w")
        elif self.verify or self.reduction:
            raise ValueError("groebner --verify and --reduction need --w")
        return self

    @cached_property
    def v_index(self) -> GrassmannIndex:
        return GrassmannIndex.parse(self.v, self.n, self.d)

    @cached_property
    def w_index(self) -> GrassmannIndex | None:
        return GrassmannIndex.parse(self.w, self.n, self.d) if self.w is not None else None

    def require_w(self) -> GrassmannIndex:
        w = self.w_index
        if w is None:
            raise InvalidInputError(f"{self.command} needs --w")
        return w

    def to_input(self) -> RunInput:
        w = self.w_index
        return RunInput(
            d=self.d,
            n=self.n,
            v=list(self.v_index.entries),
            w=list(w.entries) if w is not None else None,
        )


class Report(BaseModel):
    """Fields common to every command's JSON report."""

    schema_version: str = REPORT_SCHEMA_VERSION
    command: Command
    input: RunInput
    ok: bool = True
