"""HTTP service exposing the enumeration library.

Thin handlers over the pure modules: requests validate caps and
parameters (422 on violation), responses carry counts as decimal
strings. The /count route recomputes every row through the literal
binomial sums and fails loudly (500 with a diagnostic body) if the two
routes ever disagree.
"""
from __future__ import annotations

import time

from fastapi import FastAPI, HTTPException

from . import __version__, enumeration, oracle, restricted, torus, verification
from .laurent import ZERO, AreaPolynomial
from .schemas import (
    BenchRequest,
    BenchResponse,
    BenchRow,
    CheckRow,
    CountRequest,
    CountResponse,
    CountRow,
    GfRequest,
    GfResponse,
    HistogramRequest,
    HistogramResponse,
    RepRequest,
    VerifyRequest,
    VerifyResponse,
    WalkRequest,
    WalkResponse,
)


def _line_poly(n_steps: int, line: int, raw: bool) -> AreaPolynomial:
    """Restricted polynomial for the line k + l = line, using |line| by symmetry."""
    if abs(line) > n_steps:
        return ZERO
    if (line - n_steps) % 2 != 0:
        raise HTTPException(
            status_code=422,
            detail=f"line {line} has the wrong parity for length {n_steps}",
        )
    c = abs(line)
    if c % 2 == 0:
        return restricted.gf_paradiagonal_even(n_steps // 2, c // 2, raw=raw)
    return restricted.gf_paradiagonal_odd((n_steps + 1) // 2, (c - 1) // 2, raw=raw)


def _literal_count(n_steps: int, t: int) -> int:
    if n_steps % 2 == 0:
        return enumeration.count_open_even(n_steps // 2, t)
    if t % 2 != 0:
        return 0
    return enumeration.count_open_odd((n_steps + 1) // 2, t // 2)


def create_app() -> FastAPI:
    app = FastAPI(
        title="areawalks",
        version=__version__,
        description="Exact enumeration of open square-lattice walks by length and algebraic area.",
    )

    @app.get("/health")
    def health() -> dict:
        return {"status": "ok", "version": __version__}

    @app.post("/gf", response_model=GfResponse)
    def gf(req: GfRequest) -> GfResponse:
        if req.line is None:
            poly = enumeration.gf_open(req.n_steps)
        else:
            poly = _line_poly(req.n_steps, req.line, req.raw)
        return GfResponse(
            length=req.n_steps,
            line=req.line,
            coeffs=poly.to_json_dict()["coeffs"],
            total=str(poly.eval_at_one()),
        )

    @app.post("/count", response_model=CountResponse)
    def count(req: CountRequest) -> CountResponse:
        poly = enumeration.gf_open(req.n_steps)
        if req.only_t is not None:
            t_values = [req.only_t]
        else:
            t_values = poly.support()
        rows = []
        for t in t_values:
            coeff = poly.coefficient(t)
            literal = _literal_count(req.n_steps, t)
            if literal != coeff:
                raise HTTPException(
                    status_code=500,
                    detail={
                        "error": "count routes disagree",
                        "n_steps": req.n_steps,
                        "t": t,
                        "coefficient_route": str(coeff),
                        "literal_sum_route": str(literal),
                    },
                )
            rows.append(CountRow(t=t, count=str(coeff)))
        return CountResponse(length=req.n_steps, rows=rows)

    @app.post("/verify", response_model=VerifyResponse)
    def verify(req: VerifyRequest) -> VerifyResponse:
        try:
            results = verification.run_suites(
                suites=req.suites, max_n=req.max_n, ps=req.ps, threads=req.threads
            )
        except ValueError as exc:
            raise HTTPException(status_code=422, detail=str(exc)) from None
        checks = [
            CheckRow(name=r.name, status=r.status, residual=r.residual, detail=r.detail)
            for r in results
        ]
        return VerifyResponse(passed=all(r.passed for r in results), checks=checks)

    @app.post("/bench", response_model=BenchResponse)
    def bench(req: BenchRequest) -> BenchResponse:
        rows = []
        for n in range(req.min_n, req.max_n + 1):
            for method in req.methods:
                if method == "brute":
                    if n > req.brute_cap:
                        continue
                    start = time.perf_counter()
                    hist = oracle.brute_force(n, cap=req.brute_cap, threads=req.threads)
                    elapsed = time.perf_counter() - start
                    terms = sum(len(p) for p in hist.by_endpoint.values())
                elif method == "dp":
                    if n > req.dp_cap:
                        continue
                    start = time.perf_counter()
                    hist = oracle.dp_enumerate(n, cap=req.dp_cap)
                    elapsed = time.perf_counter() - start
                    terms = sum(len(p) for p in hist.by_endpoint.values())
                else:
                    if n > req.formula_cap:
                        continue
                    start = time.perf_counter()
                    poly = enumeration.gf_open(n)
                    elapsed = time.perf_counter() - start
                    terms = len(poly)
                rows.append(
                    BenchRow(n=n, method=method, millis=round(elapsed * 1000.0, 3), terms=terms)
                )
        return BenchResponse(rows=rows)

    @app.post("/oracle/histogram", response_model=HistogramResponse)
    def histogram(req: HistogramRequest) -> HistogramResponse:
        if req.method == "brute":
            hist = oracle.brute_force(req.n_steps, cap=req.brute_cap, threads=req.threads)
        else:
            hist = oracle.dp_enumerate(req.n_steps, cap=req.dp_cap)
        return HistogramResponse(**hist.to_json_dict())

    @app.post("/torus/representation")
    def representation(req: RepRequest) -> dict:
        try:
            if req.kind == "q":
                rep = torus.build_rep_q(req.p, req.s, req.casimir_x, req.casimir_y)
            elif req.kind == "2q":
                rep = torus.build_rep_2q(req.p, req.q)
            else:
                rep = torus.build_rep_even_sector(req.p, req.q, req.casimir_x, req.casimir_y)
        except ValueError as exc:
            raise HTTPException(status_code=422, detail=str(exc)) from None
        return torus.diagnostics(rep)

    @app.post("/walk/area", response_model=WalkResponse)
    def walk_area(req: WalkRequest) -> WalkResponse:
        positions = oracle.walk_positions(req.steps)
        k, l = positions[-1]
        return WalkResponse(
            steps=req.steps,
            endpoint_k=k,
            endpoint_l=l,
            double_area=oracle.radial_double_area(req.steps),
            positions=positions,
        )

    return app


app = create_app()
