"""Request/response contracts for the HTTP service.

Counts can exceed 64-bit range quickly (4^n walks), so every count in a
response body is a decimal string; exponents stay plain ints. Caps are
part of the request so a client can consciously raise them.
"""
from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, Field, field_validator, model_validator

from .oracle import DEFAULT_BRUTE_CAP, DEFAULT_DP_CAP, STEP_ORDER

DEFAULT_FORMULA_CAP = 28   # composition sums: 2^(n/2 - 1) terms
DEFAULT_COUNT_CAP = 16     # literal binomial multi-sums grow much faster


class GfRequest(BaseModel):
    n_steps: int = Field(ge=1)
    line: int | None = None
    raw: bool = False
    formula_cap: int = Field(default=DEFAULT_FORMULA_CAP, ge=1)

    @model_validator(mode="after")
    def _within_cap(self) -> "GfRequest":
        if self.n_steps > self.formula_cap:
            raise ValueError(
                f"n_steps={self.n_steps} exceeds the composition-sum cap {self.formula_cap}"
            )
        return self


class GfResponse(BaseModel):
    length: int
    line: int | None
    coeffs: dict[str, str]
    total: str


class CountRequest(BaseModel):
    n_steps: int = Field(ge=1)
    only_t: int | None = None
    formula_cap: int = Field(default=DEFAULT_COUNT_CAP, ge=1)

    @model_validator(mode="after")
    def _within_cap(self) -> "CountRequest":
        if self.n_steps > self.formula_cap:
            raise ValueError(
                f"n_steps={self.n_steps} exceeds the counting-sum cap {self.formula_cap}"
            )
        return self


class CountRow(BaseModel):
    t: int
    count: str


class CountResponse(BaseModel):
    length: int
    rows: list[CountRow]


class VerifyRequest(BaseModel):
    suites: list[str] | None = None
    max_n: int | None = Field(default=None, ge=1)
    ps: list[tuple[int, int]] | None = None
    threads: int = Field(default=1, ge=1)


class CheckRow(BaseModel):
    name: str
    status: Literal["pass", "fail"]
    residual: float
    detail: str


class VerifyResponse(BaseModel):
    passed: bool
    checks: list[CheckRow]


BenchMethod = Literal["brute", "dp", "formula"]


class BenchRequest(BaseModel):
    min_n: int = Field(default=1, ge=1)
    max_n: int = Field(ge=1)
    methods: list[BenchMethod] = Field(default=["brute", "dp", "formula"])
    brute_cap: int = Field(default=DEFAULT_BRUTE_CAP, ge=1)
    dp_cap: int = Field(default=DEFAULT_DP_CAP, ge=1)
    formula_cap: int = Field(default=DEFAULT_FORMULA_CAP, ge=1)
    threads: int = Field(default=1, ge=1)

    @model_validator(mode="after")
    def _ordered_range(self) -> "BenchRequest":
        if self.max_n < self.min_n:
            raise ValueError(f"max_n={self.max_n} is below min_n={self.min_n}")
        return self


class BenchRow(BaseModel):
    n: int
    method: BenchMethod
    millis: float
    terms: int


class BenchResponse(BaseModel):
    rows: list[BenchRow]


class HistogramRequest(BaseModel):
    n_steps: int = Field(ge=1)
    method: Literal["dp", "brute"] = "dp"
    threads: int = Field(default=1, ge=1)
    brute_cap: int = Field(default=DEFAULT_BRUTE_CAP, ge=1)
    dp_cap: int = Field(default=DEFAULT_DP_CAP, ge=1)

    @model_validator(mode="after")
    def _within_cap(self) -> "HistogramRequest":
        cap = self.brute_cap if self.method == "brute" else self.dp_cap
        if self.n_steps > cap:
            raise ValueError(f"n_steps={self.n_steps} exceeds the {self.method} cap {cap}")
        return self


class HistogramEndpoint(BaseModel):
    k: int
    l: int
    coeffs: dict[str, str]


class HistogramResponse(BaseModel):
    length: int
    endpoints: list[HistogramEndpoint]


CasimirLabel = Literal["0", "pi/q"]


class RepRequest(BaseModel):
    p: int = Field(ge=1)
    kind: Literal["q", "2q", "even_sector"] = "q"
    s: int | None = Field(default=None, ge=1)
    q: int | None = Field(default=None, ge=1)
    casimir_x: CasimirLabel = "0"
    casimir_y: CasimirLabel = "0"

    @model_validator(mode="after")
    def _kind_parameters(self) -> "RepRequest":
        if self.kind == "q":
            if self.s is None:
                raise ValueError("kind 'q' requires s (dimension q = 2s+1)")
        else:
            if self.q is None:
                raise ValueError(f"kind {self.kind!r} requires q")
            if self.kind == "2q" and (self.casimir_x != "0" or self.casimir_y != "0"):
                raise ValueError("the doubled representation is built at zero casimirs")
        return self


class WalkRequest(BaseModel):
    steps: str = Field(max_length=10_000)

    @field_validator("steps")
    @classmethod
    def _alphabet(cls, value: str) -> str:
        bad = set(value) - set(STEP_ORDER)
        if bad:
            raise ValueError(f"steps must use only {STEP_ORDER}, found {sorted(bad)}")
        return value


class WalkResponse(BaseModel):
    steps: str
    endpoint_k: int
    endpoint_l: int
    double_area: int
    positions: list[tuple[int, int]]
