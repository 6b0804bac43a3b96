"""HTTP service exposing the allocation engine to the explorer UI.

Stateless: every request carries the full instance; the only server-side
data are the read-only bundled presets.
"""

from __future__ import annotations

from typing import Optional

from fastapi import FastAPI
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from . import datasets
from .core import ApportionmentParams, MemberState, RoundingRule, as_fraction, feasible_house_range
from .degressive import dp_report
from .divisor import evaluate_at_divisor, solve
from .errors import ApportionmentError, DatasetParseError, InfeasibleError, TieError
from .report import allocation_json, fraction_json


class StateIn(BaseModel):
    name: str
    population: int


class ParamsIn(BaseModel):
    base: str | int | float = 5
    max_cap: Optional[int] = 96
    house_size: Optional[int] = 751
    divisor: Optional[str | int | float] = None
    rounding: str = "up"
    tie_policy: Optional[str] = None


class AllocateRequest(BaseModel):
    states: list[StateIn] = Field(min_length=1)
    params: ParamsIn = ParamsIn()


def _error_response(status: int, code: str, message: str, **extra) -> JSONResponse:
    return JSONResponse({"code": code, "message": message, **extra}, status_code=status)


def create_app() -> FastAPI:
    app = FastAPI(title="apportion", docs_url=None, redoc_url=None)

    @app.get("/api/health")
    def health():
        return {"status": "ok"}

    @app.get("/api/presets")
    def presets():
        out = []
        for preset_id, factory in datasets.PRESETS.items():
            ds = factory()
            out.append({
                "id": preset_id,
                "label": ds.source_label,
                "snapshot_date": ds.snapshot_date,
                "states": [
                    {"name": st.name, "population": st.population}
                    for st in ds.states
                ],
                "status_quo_seats": ds.status_quo_seats,
            })
        return {"presets": out}

    @app.post("/api/allocate")
    def allocate(request: AllocateRequest):
        p = request.params
        try:
            rounding = RoundingRule(p.rounding.lower())
        except ValueError:
            return _error_response(400, "PARSE", f"unknown rounding rule {p.rounding!r}")
        try:
            states = [MemberState(s.name, s.population) for s in request.states]
            params = ApportionmentParams(as_fraction(p.base), p.max_cap,
                                         p.house_size, rounding)
            if p.divisor is not None:
                allocation = evaluate_at_divisor(states, params, as_fraction(p.divisor))
            else:
                if p.house_size is None:
                    return _error_response(400, "PARSE", "need house_size or divisor")
                allocation = solve(states, params, tie_policy=p.tie_policy)
        except TieError as exc:
            return _error_response(
                409, "TIE", str(exc),
                tied_states=sorted(exc.report.tied_states),
                boundary_divisor=fraction_json(exc.report.boundary_divisor),
                seats_contested=exc.report.seats_contested,
            )
        except InfeasibleError as exc:
            fr = exc.feasible_range
            return _error_response(
                422, "INFEASIBLE", str(exc),
                feasible_house={"lo": fr.lo, "hi": fr.hi} if fr else None,
            )
        except (DatasetParseError, ApportionmentError, ValueError, ZeroDivisionError) as exc:
            return _error_response(400, "PARSE", str(exc))

        fr = feasible_house_range(len(states), params)
        body = allocation_json(allocation, dp_report(allocation))
        body["feasible_house"] = {"lo": fr.lo, "hi": fr.hi}
        return body

    return app


app = create_app()


def main(argv=None):
    import argparse

    import uvicorn

    parser = argparse.ArgumentParser(description="run the apportionment service")
    parser.add_argument("--host", default="127.0.0.1")
    parser.add_argument("--port", type=int, default=8000)
    args = parser.parse_args(argv)
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")


if __name__ == "__main__":
    main()
