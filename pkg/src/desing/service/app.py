"""HTTP service exposing the library, one endpoint per command.

Errors map to stable payloads: malformed input answers 400 with
``{"error": "parse"}``, mathematically meaningless requests answer 400
with ``{"error": "domain"}``, and anything else from the library answers
500 with ``{"error": "internal"}``.
"""

from __future__ import annotations

from fractions import Fraction

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from ..blowup import Center, ranked_charts, transform
from ..coeff import coeff_ideal_villamayor, weighted_order
from ..demo import demo_report
from ..errors import DesingError, DomainError, InputError
from ..fixtures import EXAMPLE_NAMES
from ..hybrid import hybrid_invariant, staged_build, suggest_center
from ..idealfile import describe_order, loads_ideal
from ..ideals import Ideal, reduced_standard_basis
from ..invariants import delta_ideal, hs_sequence, order_of_ideal
from ..parsing import format_polynomial
from ..rings import INFINITE_ORDER, Point
from .models import (
    BlowupRequest,
    BlowupResponse,
    CenterPayload,
    ChartPayload,
    CoeffComponent,
    CoeffPayload,
    CoeffRequest,
    CoeffResponse,
    DeltaRequest,
    DeltaResponse,
    DemoResponse,
    HealthResponse,
    HsRequest,
    HsResponse,
    HybridPayload,
    HybridRequest,
    HybridResponse,
    IdealRequest,
    InvariantEntry,
    InvariantPayload,
    InvariantRequest,
    InvariantResponse,
    OrderResponse,
    RingInfo,
    SbResponse,
)

app = FastAPI(title="desing", description="local resolution toolbox")


def _num(value):
    return "infinite" if value == INFINITE_ORDER else int(value)


def _big(value) -> str:
    return "infinite" if value == INFINITE_ORDER else str(value)


def _texts(ideal: Ideal) -> list[str]:
    return [format_polynomial(g, ideal.order) for g in ideal.generators]


def _ring_info(ideal: Ideal) -> RingInfo:
    return RingInfo(variables=list(ideal.context.variables),
                    order=describe_order(ideal.context, ideal.order))


def _envelope(ideal: Ideal) -> dict:
    return {"ring": _ring_info(ideal), "generators": _texts(ideal)}


@app.exception_handler(InputError)
async def _on_input_error(request: Request, exc: InputError):
    return JSONResponse(status_code=400,
                        content={"error": "parse", "detail": str(exc)})


@app.exception_handler(DomainError)
async def _on_domain_error(request: Request, exc: DomainError):
    return JSONResponse(status_code=400,
                        content={"error": "domain", "detail": str(exc)})


@app.exception_handler(DesingError)
async def _on_library_error(request: Request, exc: DesingError):
    return JSONResponse(status_code=500,
                        content={"error": "internal", "detail": str(exc)})


@app.get("/health", response_model=HealthResponse)
def health() -> HealthResponse:
    return HealthResponse(status="ok")


@app.post("/order", response_model=OrderResponse)
def order_endpoint(req: IdealRequest) -> OrderResponse:
    ideal = loads_ideal(req.source)
    return OrderResponse(**_envelope(ideal), order=_num(order_of_ideal(ideal)))


@app.post("/sb", response_model=SbResponse)
def sb_endpoint(req: IdealRequest) -> SbResponse:
    ideal = loads_ideal(req.source)
    basis = ideal.with_generators(reduced_standard_basis(ideal))
    return SbResponse(**_envelope(ideal), sb=_texts(basis))


@app.post("/delta", response_model=DeltaResponse)
def delta_endpoint(req: DeltaRequest) -> DeltaResponse:
    if req.iterate < 0:
        raise DomainError("iteration count must be non-negative")
    ideal = loads_ideal(req.source)
    current = ideal
    for _ in range(req.iterate):
        current = delta_ideal(current)
    return DeltaResponse(**_envelope(ideal), delta=_texts(current))


def _parse_point(ideal: Ideal, raw: list[str] | None) -> Point | None:
    if raw is None:
        return None
    if len(raw) != ideal.context.nvars:
        raise InputError("point needs one coordinate per variable, "
                         f"got {len(raw)} for {ideal.context.nvars}")
    try:
        return Point.of(*[Fraction(c) for c in raw])
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad point coordinate: {exc}") from exc


@app.post("/hs", response_model=HsResponse)
def hs_endpoint(req: HsRequest) -> HsResponse:
    ideal = loads_ideal(req.source)
    point = _parse_point(ideal, req.point)
    seq = hs_sequence(ideal, req.max_degree, point=point, cumulative=req.cumulative)
    return HsResponse(**_envelope(ideal), hs=list(seq.values), cumulative=req.cumulative)


@app.post("/coeff", response_model=CoeffResponse)
def coeff_endpoint(req: CoeffRequest) -> CoeffResponse:
    ideal = loads_ideal(req.source)
    ws = coeff_ideal_villamayor(ideal, req.var, order_bound=req.order)
    if ws.context is None:
        ring = RingInfo(variables=[], order="")
    else:
        ring = RingInfo(variables=list(ws.context.variables),
                        order=describe_order(ws.context, ws.order))
    reference = req.order if req.order is not None else int(order_of_ideal(ideal))
    components = [
        CoeffComponent(level=comp.level, exponent=str(comp.exponent),
                       generators=_texts(comp.ideal))
        for comp in ws.components
    ]
    payload = CoeffPayload(ring=ring, variable=req.var, reference_order=reference,
                           weighted_order=_big(weighted_order(ws)),
                           components=components)
    return CoeffResponse(**_envelope(ideal), coeff=payload)


@app.post("/hybrid", response_model=HybridResponse)
def hybrid_endpoint(req: HybridRequest) -> HybridResponse:
    ideal = loads_ideal(req.source)
    center = suggest_center(ideal)
    if req.center_only:
        return HybridResponse(**_envelope(ideal),
                              hybrid=CenterPayload(center=list(center)))
    staged = staged_build(ideal)
    payload = HybridPayload(degrees=list(staged.degrees), frame=list(staged.flag),
                            working=_texts(staged.jk),
                            working_order=_num(order_of_ideal(staged.jk)),
                            final_degree=staged.final_degree, center=list(center))
    return HybridResponse(**_envelope(ideal), hybrid=payload)


def _chart_payload(ideal: Ideal, center: Center, chart: str, kind: str,
                   via_sb: bool, depth: int = 3) -> ChartPayload:
    result = transform(ideal, center, chart, kind, via_sb=via_sb)
    chart_order = order_of_ideal(result.ideal)
    hs = None
    if chart_order != 0:
        hs = list(hs_sequence(result.ideal, depth).values)
    return ChartPayload(chart=chart, kind=kind, generators=_texts(result.ideal),
                        order=_num(chart_order), hs=hs,
                        exceptional_exponent=result.controlled_exponent)


@app.post("/blowup", response_model=BlowupResponse)
def blowup_endpoint(req: BlowupRequest) -> BlowupResponse:
    ideal = loads_ideal(req.source)
    center = Center.of(*req.center)
    center.validate(ideal.context)
    if req.chart is not None:
        charts = [req.chart]
    else:
        charts = list(ranked_charts(ideal, center))
    payloads = [_chart_payload(ideal, center, c, req.transform, req.via_sb)
                for c in charts]
    return BlowupResponse(**_envelope(ideal), charts=payloads)


@app.post("/invariant", response_model=InvariantResponse)
def invariant_endpoint(req: InvariantRequest) -> InvariantResponse:
    ideal = loads_ideal(req.source)
    result = hybrid_invariant(ideal, max_depth=req.max_depth)
    entries = [InvariantEntry(order=_big(e.order), ambient=e.ambient)
               for e in result.entries]
    payload = InvariantPayload(entries=entries,
                               descent=list(result.descent_variables))
    return InvariantResponse(**_envelope(ideal), invariant=payload)


@app.get("/demo/{name}", response_model=DemoResponse)
def demo_endpoint(name: str):
    if name not in EXAMPLE_NAMES:
        return JSONResponse(status_code=404,
                            content={"error": "usage",
                                     "detail": f"unknown demo scenario {name!r}"})
    return DemoResponse(name=name, report=demo_report(name))
