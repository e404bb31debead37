"""Pydantic request/response models shared by the service and the CLI's
JSON output."""

from __future__ import annotations

from typing import Any, Optional

from pydantic import BaseModel, Field


class BaseRequest(BaseModel):
    field: str = Field(description="coefficient field, e.g. GF(2) or GF(3^2)")
    poly: str = Field(description="monic separable polynomial in T over k[x]")
    place: Optional[str] = Field(default=None, description="override place, alpha=<elem>@GF(p^e)")
    seed: int = Field(default=0, description="PRNG seed for constant-field factorization")
    trace: bool = Field(default=False, description="include the elimination trace")


class FactorRequest(BaseRequest):
    pass


class IrreducibleRequest(BaseRequest):
    pass


class RootsRequest(BaseRequest):
    basis: str = Field(description="comma-separated basis of the root space, e.g. 1,x,x^2")


class RestrictedRequest(BaseRequest):
    r: int = Field(description="prescribed factor degree")
    spaces: str = Field(description="semicolon-separated bases V_0;..;V_{r-1}, each comma-separated")


class PlaceInfo(BaseModel):
    alpha: str
    field: str
    degree: int
    min_poly: str


class FactorEntry(BaseModel):
    poly: str
    field_of_definition: str
    summand_path: str


class BaseResponse(BaseModel):
    input: str
    field: str
    mode: str
    place: Optional[PlaceInfo] = None
    delta: Optional[int] = None
    q: Optional[int] = None
    factors: list[FactorEntry] = []
    certificates: list[dict[str, Any]] = []
    trace: Optional[list[dict[str, Any]]] = None


class FactorResponse(BaseResponse):
    product_check: bool


class IrreducibleResponse(BaseResponse):
    absolutely_irreducible: bool
    witness: Optional[FactorEntry] = None


class RootsResponse(BaseResponse):
    roots: list[str]


class RestrictedResponse(BaseResponse):
    outcome: str
    m: Optional[int] = None
    spaces: list[list[str]] = []
    deferred: list[dict[str, Any]] = []
