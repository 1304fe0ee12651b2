"""HTTP surface: one POST endpoint per command, JSON in, CommandResponse out."""
from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from . import service
from .errors import InternalInconsistency

app = FastAPI(title="mockrational", version="0.1.0")


@app.exception_handler(ValueError)
async def _value_error(request: Request, exc: ValueError) -> JSONResponse:
    return JSONResponse(status_code=400, content={"detail": str(exc)})


@app.exception_handler(InternalInconsistency)
async def _inconsistency(request: Request, exc: InternalInconsistency) -> JSONResponse:
    return JSONResponse(status_code=500, content={"detail": str(exc)})


@app.get("/healthz")
async def healthz() -> dict:
    return {"status": "ok"}


@app.post("/expand", response_model=service.CommandResponse,
          response_model_exclude_none=True)
async def expand(req: service.ExpandRequest) -> service.CommandResponse:
    return service.expand(req)


@app.post("/predict", response_model=service.CommandResponse,
          response_model_exclude_none=True)
async def predict(req: service.PredictRequest) -> service.CommandResponse:
    return service.predict(req)


@app.post("/verify", response_model=service.CommandResponse,
          response_model_exclude_none=True)
async def verify(req: service.VerifyRequest) -> service.CommandResponse:
    return service.verify(req)


@app.post("/sequence", response_model=service.CommandResponse,
          response_model_exclude_none=True)
async def sequence(req: service.SequenceRequest) -> service.CommandResponse:
    return service.sequence(req)


@app.post("/convert", response_model=service.CommandResponse,
          response_model_exclude_none=True)
async def convert(req: service.ConvertRequest) -> service.CommandResponse:
    return service.convert(req)
