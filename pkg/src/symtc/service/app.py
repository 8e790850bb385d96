"""FastAPI service wrapping the library.

Rings and their per-degree bases are memoized process-wide, so a
long-running service answers repeated invariant queries over the same
spaces without recomputing quotients.  All endpoints are POST with JSON
bodies and return versioned envelopes.
"""

from __future__ import annotations

import time
from typing import Any, Dict

from fastapi import FastAPI, HTTPException

from .. import __version__
from ..binomials import binom_big, binom_parity, odd_count_row
from ..catalog import ring_of
from ..errors import (
    InexactValue,
    MixedFields,
    NoTopDegree,
    ParseError,
    SizeLimitExceeded,
    SymtcError,
    UnsupportedSpace,
)
from ..invariants import cat_bounds, essential, genfun, tcm_bounds, zcl_bruteforce
from ..spaceexpr import parse_space
from ..verify import run_paper_suite
from ..zerodiv import szcl_lower
from .schemas import (
    CatRequest,
    Envelope,
    EssentialRequest,
    GenfunRequest,
    LucasRequest,
    RingRequest,
    SCHEMA_VERSION,
    SpaceRequest,
    SzclRequest,
    TcRequest,
    VerifyRequest,
    ZclRequest,
)

USAGE_ERRORS = (ParseError, UnsupportedSpace, MixedFields, ValueError, NoTopDegree)


def _envelope(command: str, inputs: Dict[str, Any], result: Dict[str, Any], t0: float) -> Envelope:
    return Envelope(
        schema_version=SCHEMA_VERSION,
        command=command,
        inputs=inputs,
        result=result,
        wall_ms=round((time.time() - t0) * 1000, 3),
    )


def create_app() -> FastAPI:
    app = FastAPI(
        title="symtc",
        version=__version__,
        description=(
            "Exact cohomology of symmetric products of surfaces: cup-lengths, "
            "certified category and sequential topological complexity bounds."
        ),
    )

    def guard(fn, *args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except USAGE_ERRORS as exc:
            raise HTTPException(status_code=422, detail=str(exc)) from exc
        except InexactValue as exc:
            raise HTTPException(status_code=409, detail=str(exc)) from exc
        except SizeLimitExceeded as exc:
            raise HTTPException(status_code=413, detail=str(exc)) from exc
        except SymtcError as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from exc

    @app.get("/healthz")
    def healthz() -> dict:
        return {"status": "ok", "version": __version__}

    @app.post("/parse", response_model=Envelope)
    def parse(req: SpaceRequest) -> Envelope:
        t0 = time.time()
        space = guard(parse_space, req.space)
        return _envelope("parse", req.model_dump(), {"canonical": str(space)}, t0)

    @app.post("/ring", response_model=Envelope)
    def ring(req: RingRequest) -> Envelope:
        t0 = time.time()

        def run():
            space = parse_space(req.space)
            r = ring_of(space)
            up_to = req.up_to if req.up_to is not None else r.top_degree
            if up_to is None:
                raise ValueError("specify up_to for a ring without top degree")
            if hasattr(r, "dump"):
                return r.dump(up_to)
            return {
                "ring": r.name,
                "field": r.field.name,
                "top_degree": r.top_degree,
                "dimensions": r.poincare_polynomial(up_to),
            }

        return _envelope("ring", req.model_dump(), guard(run), t0)

    @app.post("/cat", response_model=Envelope)
    def cat(req: CatRequest) -> Envelope:
        t0 = time.time()

        def run():
            rep = cat_bounds(parse_space(req.space))
            if req.require_exact and not rep.exact:
                raise InexactValue(
                    f"cat of {req.space} certified only within [{rep.lower}, {rep.upper}]"
                )
            return rep.to_json()

        return _envelope("cat", req.model_dump(), guard(run), t0)

    @app.post("/tc", response_model=Envelope)
    def tc(req: TcRequest) -> Envelope:
        t0 = time.time()

        def run():
            rep = tcm_bounds(parse_space(req.space), req.m, strategy=req.strategy)
            if req.require_exact and not rep.exact:
                raise InexactValue(
                    f"TC_{req.m} of {req.space} certified only within "
                    f"[{rep.lower}, {rep.upper}]"
                )
            return rep.to_json()

        return _envelope("tc", req.model_dump(), guard(run), t0)

    @app.post("/szcl", response_model=Envelope)
    def szcl(req: SzclRequest) -> Envelope:
        t0 = time.time()

        def run():
            space = parse_space(req.space)
            length, cert = szcl_lower(
                ring_of(space, convention=req.convention),
                req.m,
                strategy=req.strategy,
                convention=req.convention,
            )
            out = {"space": str(space), "m": req.m, "length": length,
                   "convention": req.convention, "strategy": req.strategy}
            if cert is not None:
                out["verified"] = cert.verify()
                out["certificate"] = cert.to_json()
            return out

        return _envelope("szcl", req.model_dump(), guard(run), t0)

    @app.post("/zcl", response_model=Envelope)
    def zcl(req: ZclRequest) -> Envelope:
        t0 = time.time()

        def run():
            space = parse_space(req.space)
            value = zcl_bruteforce(ring_of(space), req.m, size_limit=req.size_limit)
            return {"space": str(space), "m": req.m, "zcl": value}

        return _envelope("zcl", req.model_dump(), guard(run), t0)

    @app.post("/genfun", response_model=Envelope)
    def genfun_endpoint(req: GenfunRequest) -> Envelope:
        t0 = time.time()

        def run():
            return genfun(parse_space(req.space), req.horizon).to_json()

        return _envelope("genfun", req.model_dump(), guard(run), t0)

    @app.post("/essential", response_model=Envelope)
    def essential_endpoint(req: EssentialRequest) -> Envelope:
        t0 = time.time()

        def run():
            space = parse_space(req.space)
            return {"space": str(space), "essential": essential(space)}

        return _envelope("essential", req.model_dump(), guard(run), t0)

    @app.post("/lucas", response_model=Envelope)
    def lucas(req: LucasRequest) -> Envelope:
        t0 = time.time()

        def run():
            out: Dict[str, Any] = {"k": req.k, "odd_count_row": odd_count_row(req.k)}
            if req.i is not None:
                out["i"] = req.i
                out["parity"] = binom_parity(req.k, req.i)
                out["binomial"] = str(binom_big(req.k, req.i))
            return out

        return _envelope("lucas", req.model_dump(), guard(run), t0)

    @app.post("/verify", response_model=Envelope)
    def verify(req: VerifyRequest) -> Envelope:
        t0 = time.time()
        if req.suite != "paper":
            raise HTTPException(status_code=422, detail=f"unknown suite {req.suite!r}")
        report = run_paper_suite(
            nmax=req.nmax,
            gmax=req.gmax,
            mmax=req.mmax,
            require_exact=req.require_exact,
            workers=req.workers,
        )
        return _envelope("verify", req.model_dump(), report, t0)

    return app


app = create_app()
