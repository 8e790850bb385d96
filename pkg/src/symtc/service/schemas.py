"""Pydantic request/response models for the service API.

Reports are schema-versioned; every response is an envelope carrying the
command echo, the inputs, the result payload and the wall time.  Nested
certificate and witness payloads follow the library's stable to_json shapes.
"""

from __future__ import annotations

from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field

SCHEMA_VERSION = 1


class SpaceRequest(BaseModel):
    space: str = Field(..., description="space expression, e.g. 'SP(2, M(1)) x S(3)'")


class RingRequest(SpaceRequest):
    up_to: Optional[int] = Field(None, description="dump bases up to this degree")


class CatRequest(SpaceRequest):
    require_exact: bool = False


class TcRequest(SpaceRequest):
    m: int = Field(2, ge=2)
    require_exact: bool = False
    strategy: str = "auto"


class SzclRequest(SpaceRequest):
    m: int = Field(2, ge=2)
    strategy: str = "auto"
    convention: str = "koszul"


class ZclRequest(SpaceRequest):
    m: int = Field(2, ge=2)
    size_limit: int = 4096


class GenfunRequest(SpaceRequest):
    horizon: int = Field(..., ge=1)


class EssentialRequest(SpaceRequest):
    pass


class LucasRequest(BaseModel):
    k: int = Field(..., ge=0)
    i: Optional[int] = Field(None, ge=0)


class VerifyRequest(BaseModel):
    suite: str = "paper"
    nmax: int = Field(3, ge=1)
    gmax: int = Field(3, ge=0)
    mmax: int = Field(3, ge=2)
    require_exact: bool = False
    workers: Optional[int] = Field(None, ge=1)


class BoundReportModel(BaseModel):
    invariant: str
    space: str
    lower: int
    upper: int
    exact: bool
    m: Optional[int] = None
    lower_reason: str = ""
    upper_reason: str = ""
    citations: List[str] = []
    notes: List[str] = []
    certificate: Optional[Dict[str, Any]] = None
    witness: Optional[List[str]] = None


class Envelope(BaseModel):
    schema_version: int = SCHEMA_VERSION
    command: str
    inputs: Dict[str, Any]
    result: Dict[str, Any]
    wall_ms: float
