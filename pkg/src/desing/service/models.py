"""Request and response schemas for the HTTP service.

Every ideal-taking endpoint accepts the text of an ideal file and answers
with an envelope describing the parsed input (ring with its ordering,
canonical generator texts) plus one payload field per command. Numbers
that can outgrow native integer ranges in consumers, such as weighted
orders and the factorial exponents of coefficient ideals, are carried as
decimal strings; an infinite order is the string "infinite".
"""

from __future__ import annotations

from pydantic import BaseModel, Field

OrderValue = int | str


class IdealRequest(BaseModel):
    source: str = Field(description="ideal file text (ring:/order:/gen: lines)")


class DeltaRequest(IdealRequest):
    iterate: int = 1


class HsRequest(IdealRequest):
    max_degree: int = 3
    point: list[str] | None = None
    cumulative: bool = False


class CoeffRequest(IdealRequest):
    var: str
    order: int | None = None


class HybridRequest(IdealRequest):
    center_only: bool = False


class BlowupRequest(IdealRequest):
    center: list[str]
    chart: str | None = None
    transform: str = "strict"
    via_sb: bool = False


class InvariantRequest(IdealRequest):
    max_depth: int = 8


class RingInfo(BaseModel):
    variables: list[str]
    order: str


class IdealEnvelope(BaseModel):
    ring: RingInfo
    generators: list[str]


class OrderResponse(IdealEnvelope):
    order: OrderValue


class SbResponse(IdealEnvelope):
    sb: list[str]


class DeltaResponse(IdealEnvelope):
    delta: list[str]


class HsResponse(IdealEnvelope):
    hs: list[int]
    cumulative: bool


class CoeffComponent(BaseModel):
    level: int
    exponent: str
    generators: list[str]


class CoeffPayload(BaseModel):
    ring: RingInfo
    variable: str
    reference_order: int
    weighted_order: str
    components: list[CoeffComponent]


class CoeffResponse(IdealEnvelope):
    coeff: CoeffPayload


class HybridPayload(BaseModel):
    degrees: list[int]
    frame: list[str]
    working: list[str]
    working_order: OrderValue
    final_degree: int
    center: list[str]


class CenterPayload(BaseModel):
    center: list[str]


class HybridResponse(IdealEnvelope):
    hybrid: HybridPayload | CenterPayload


class ChartPayload(BaseModel):
    chart: str
    kind: str
    generators: list[str]
    order: OrderValue
    hs: list[int] | None = None
    exceptional_exponent: int | None = None


class BlowupResponse(IdealEnvelope):
    charts: list[ChartPayload]


class InvariantEntry(BaseModel):
    order: str
    ambient: int


class InvariantPayload(BaseModel):
    entries: list[InvariantEntry]
    descent: list[str]


class InvariantResponse(IdealEnvelope):
    invariant: InvariantPayload


class DemoResponse(BaseModel):
    name: str
    report: str


class HealthResponse(BaseModel):
    status: str
