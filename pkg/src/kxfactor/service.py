"""FastAPI service wrapping the factorization core.

Stateless compute endpoints; input-contract violations map to 400 with the
violated assumption named.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from . import __version__
from .errors import InputError, KxError
from .models import (
    FactorRequest,
    FactorResponse,
    IrreducibleRequest,
    IrreducibleResponse,
    RestrictedRequest,
    RestrictedResponse,
    RootsRequest,
    RootsResponse,
)
from .modes import run_factor, run_irreducible, run_restricted, run_roots

app = FastAPI(title="kxfactor", version=__version__,
              description="Factorization of separable polynomials over rational function fields")


def _guarded(fn, *args, **kwargs):
    try:
        return fn(*args, **kwargs)
    except InputError as exc:
        raise HTTPException(status_code=400, detail=f"{type(exc).__name__}: {exc}") from exc
    except KxError as exc:
        raise HTTPException(status_code=500, detail=f"{type(exc).__name__}: {exc}") from exc


@app.get("/healthz")
def healthz():
    return {"status": "ok", "version": __version__}


@app.post("/factor", response_model=FactorResponse, response_model_exclude_none=True)
def factor(req: FactorRequest):
    return _guarded(run_factor, req.field, req.poly, req.place, req.seed, req.trace)


@app.post("/irreducible", response_model=IrreducibleResponse, response_model_exclude_none=True)
def irreducible(req: IrreducibleRequest):
    return _guarded(run_irreducible, req.field, req.poly, req.place, req.seed, req.trace)


@app.post("/roots", response_model=RootsResponse, response_model_exclude_none=True)
def roots(req: RootsRequest):
    return _guarded(run_roots, req.field, req.poly, req.basis, req.place, req.seed, req.trace)


@app.post("/restricted", response_model=RestrictedResponse, response_model_exclude_none=True)
def restricted(req: RestrictedRequest):
    return _guarded(run_restricted, req.field, req.poly, req.r, req.spaces, req.place, req.seed, req.trace)
