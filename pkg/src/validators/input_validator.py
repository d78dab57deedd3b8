"""Pydantic models for validating command inputs."""

from typing import Literal

from pydantic import BaseModel, Field, field_validator, model_validator

MAX_SEED = (1 << 64) - 1

MOVE_KINDS = ("proper", "generalized", "single-column", "minimal", "none")
ORDER_KINDS = ("lex", "deglex", "degrevlex")
CORPUS_SUITES = (
    "white",
    "sep-veronese",
    "power-sep",
    "product-polymatroidal",
    "symmetric-exchange",
    "generalized-moves",
    "shortcut",
    "column-permutation",
    "groebner-oracle",
)


class InputFile(BaseModel):
    """Validates a single input path."""
    path: str = Field(..., description="Basis, product or transversal file")

    @field_validator("path")
    @classmethod
    def validate_path(cls, v: str) -> str:
        v = v.strip()
        if not v:
            raise ValueError("Input path must not be empty.")
        return v


class Caps(BaseModel):
    """Resource caps shared by the fiber and Groebner commands."""
    d_max: int = Field(3, ge=1, le=12, description="Fiber truncation degree")
    fiber_cap: int = Field(1_000_000, ge=1, description="Largest fiber enumerated")
    step_cap: int = Field(1_000_000, ge=1, description="Buchberger reduction cap")


class CheckInput(InputFile):
    pass


class ExchangeInput(InputFile):
    generalized: bool = Field(False, description="Drop the degree-inequality conditions")


class VeroneseInput(BaseModel):
    """Validates the veronese command: n, d and the two bound vectors."""
    n: int = Field(..., ge=1, le=64)
    d: int = Field(..., ge=0)
    lower: list[int]
    upper: list[int]

    @field_validator("lower", "upper")
    @classmethod
    def validate_bounds(cls, v: list[int]) -> list[int]:
        if any(a < 0 for a in v):
            raise ValueError("Bounds must be non-negative.")
        return v

    @model_validator(mode="after")
    def validate_lengths(self) -> "VeroneseInput":
        if len(self.lower) != self.n or len(self.upper) != self.n:
            raise ValueError(f"lower and upper must each have {self.n} entries.")
        return self


class ProductInput(BaseModel):
    paths: list[str] = Field(..., min_length=1, description="One basis file per factor")


class PowerInput(InputFile):
    k: int = Field(..., ge=1, le=12, description="Exponent of the power")


class ToricInput(InputFile, Caps):
    pass


class WhiteInput(InputFile, Caps):
    moves: Literal["proper", "generalized", "single-column", "minimal", "none"] = Field("proper", description="Move family, always joined with the linear relations")
    single_column_degree: int = Field(3, ge=2, le=6)

    @field_validator("d_max")
    @classmethod
    def validate_d_max(cls, v: int) -> int:
        if v < 2:
            raise ValueError("d_max must be at least 2 for a White check.")
        return v


class GroebnerInput(InputFile, Caps):
    order: Literal["lex", "deglex", "degrevlex"] = Field("lex", description="Monomial order kind")
    ranking: list[str] | None = Field(None, description="Variable labels from largest to smallest")
    search: bool = Field(False, description="Try several orders and report which is quadratic")
    search_limit: int = Field(24, ge=0, le=10_000)

    @field_validator("order", mode="before")
    @classmethod
    def validate_order(cls, v: str) -> str:
        return v.strip().lower()


class TransversalInput(InputFile):
    hibi_variable_cap: int = Field(10_000, ge=1)
    step_cap: int = Field(1_000_000, ge=1)
    d_max: int = Field(2, ge=1, le=12)
    fiber_cap: int = Field(1_000_000, ge=1)


class HilbertInput(InputFile):
    max_degree: int | None = Field(None, ge=0, le=64, description="Largest degree computed")
    allow_unstable: bool = Field(False, description="Report a non-terminated h-vector instead of failing")


class GorensteinInput(InputFile):
    max_degree: int | None = Field(None, ge=0, le=64)


class ReesInput(InputFile):
    cap_x: int = Field(2, ge=1, le=8)
    cap_y: int = Field(3, ge=1, le=8)
    fiber_cap: int = Field(1_000_000, ge=1)


class RandomInput(BaseModel):
    """Validates the random-instance generator."""
    seed: int = Field(1, ge=0, le=MAX_SEED)
    n: int = Field(..., ge=1, le=12)
    d: int = Field(..., ge=1, le=8)
    s: int = Field(..., ge=1, le=6)
    count: int = Field(..., ge=0, le=100_000)
    directory: str = Field("instances", description="Directory receiving the instance files")


class CorpusInput(BaseModel):
    """Validates a corpus run."""
    seed: int = Field(1, ge=0, le=MAX_SEED)
    count: int = Field(100, ge=0, le=100_000)
    suites: list[str] = Field(default_factory=lambda: list(CORPUS_SUITES))
    n_max: int = Field(5, ge=1, le=8)
    d_max_factor: int = Field(3, ge=1, le=6, description="Largest factor degree")
    s_max: int = Field(3, ge=1, le=4)
    fiber_d_max: int = Field(3, ge=2, le=6, description="Fiber truncation degree inside suites")
    max_variables: int = Field(60, ge=1, description="Instances with more presentation variables are redrawn")
    jobs: int = Field(1, ge=1, le=256)
    reproducer: str | None = Field(None, description="Where to write the first failing instance")
    fiber_cap: int = Field(1_000_000, ge=1)
    step_cap: int = Field(1_000_000, ge=1)

    @field_validator("suites")
    @classmethod
    def validate_suites(cls, v: list[str]) -> list[str]:
        v = [name.strip().lower() for name in v]
        for name in v:
            if name not in CORPUS_SUITES:
                raise ValueError(f"Invalid suite: '{name}'. Valid suites: {', '.join(CORPUS_SUITES)}")
        return sorted(set(v), key=CORPUS_SUITES.index)
