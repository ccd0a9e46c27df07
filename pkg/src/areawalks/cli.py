"""Command-line front end: tables, verification sweeps, benchmarks.

Every command is a thin client of the HTTP service. By default requests
run against an in-process app instance; --server (or AREAWALKS_SERVER)
points them at a running deployment instead, so the CLI output is
identical either way.

Exit codes: 0 success, 1 verification/cross-check failure, 2 usage or
configuration error (bad flags, caps exceeded, parity mismatch).
"""
from __future__ import annotations

import csv as csv_mod
import io
import json
import os
import sys
from pathlib import Path

import click
import httpx

from . import __version__
from .oracle import DEFAULT_BRUTE_CAP, DEFAULT_DP_CAP
from .schemas import DEFAULT_COUNT_CAP, DEFAULT_FORMULA_CAP
from .verification import SUITES

_FORMATS = ("csv", "json", "pretty")


def _fail(code: int, message: str) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


class _Client:
    """HTTP access to the service, in-process unless a base URL is given."""

    def __init__(self, server: str | None):
        if server:
            self._http = httpx.Client(base_url=server, timeout=600.0)
        else:
            import warnings

            with warnings.catch_warnings():
                # some starlette builds warn about their httpx backend on import
                warnings.simplefilter("ignore")
                from fastapi.testclient import TestClient

            from .service import app

            self._http = TestClient(app)

    def post(self, path: str, payload: dict) -> httpx.Response:
        try:
            return self._http.post(path, json=payload)
        except httpx.HTTPError as exc:
            _fail(2, f"cannot reach service: {exc}")


def _detail(response: httpx.Response) -> str:
    try:
        detail = response.json().get("detail")
    except ValueError:
        detail = response.text
    if isinstance(detail, str):
        return detail
    if isinstance(detail, list):
        # pydantic validation errors: surface just the messages
        msgs = [entry.get("msg", "") for entry in detail if isinstance(entry, dict)]
        if any(msgs):
            return "; ".join(msg for msg in msgs if msg)
    return json.dumps(detail)


def _checked(response: httpx.Response) -> dict:
    if response.status_code == 422:
        _fail(2, _detail(response))
    if response.status_code >= 400:
        _fail(1, _detail(response))
    return response.json()


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text + "\n")
    else:
        click.echo(text)


def _csv(header: tuple, rows: list[tuple]) -> str:
    buf = io.StringIO()
    writer = csv_mod.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue().rstrip("\n")


def _q_power(e: int) -> str:
    return "Q" if e == 1 else f"Q^{e}"


def _pretty_poly(coeffs: dict[str, str]) -> str:
    items = sorted((int(t), int(c)) for t, c in coeffs.items())
    if not items:
        return "0"
    lookup = dict(items)
    if any(lookup.get(-t) != c for t, c in items):
        return " + ".join(f"{c}*{_q_power(t)}" if t else str(c) for t, c in items)
    parts = []
    if 0 in lookup:
        parts.append(str(lookup[0]))
    parts.extend(f"{c}({_q_power(-t)}+{_q_power(t)})" for t, c in items if t > 0)
    return " + ".join(parts)


def _sorted_coeffs(coeffs: dict[str, str]) -> list[tuple[int, str]]:
    return sorted((int(t), c) for t, c in coeffs.items())


def _client_options(fn):
    fn = click.option(
        "--out", type=click.Path(dir_okay=False, writable=True), default=None,
        help="Write output to a file instead of stdout.",
    )(fn)
    fn = click.option(
        "--format", "fmt", type=click.Choice(_FORMATS), default=None,
        help="Output format (per-command default).",
    )(fn)
    fn = click.option(
        "--server", envvar="AREAWALKS_SERVER", default=None,
        help="Base URL of a running service; in-process app by default.",
    )(fn)
    return fn


def _threads_option(fn):
    return click.option(
        "--threads", type=int, envvar="AREAWALKS_THREADS",
        default=lambda: os.cpu_count() or 1, show_default="cpu count",
        help="Worker threads for the brute-force sweep.",
    )(fn)


@click.group()
@click.version_option(__version__, prog_name="areawalks")
def main() -> None:
    """Exact tables of open square-lattice walks by length and algebraic area."""


@main.command()
@click.option("--length", "-n", "n_steps", type=int, required=True, help="Walk length.")
@click.option("--line", type=int, default=None, help="Restrict endpoints to k + l = LINE.")
@click.option("--raw", is_flag=True, help="Unhalved mirror-pair sum for restricted lines.")
@click.option("--formula-cap", type=int, default=DEFAULT_FORMULA_CAP, show_default=True)
@_client_options
def gf(n_steps, line, raw, formula_cap, server, fmt, out):
    """Area generating function of a given length (optionally line-restricted)."""
    body = _checked(
        _Client(server).post(
            "/gf",
            {"n_steps": n_steps, "line": line, "raw": raw, "formula_cap": formula_cap},
        )
    )
    fmt = fmt or "pretty"
    if fmt == "json":
        text = json.dumps(body)
    elif fmt == "csv":
        line_field = "" if body["line"] is None else body["line"]
        rows = [(body["length"], line_field, t, c) for t, c in _sorted_coeffs(body["coeffs"])]
        text = _csv(("length", "line", "t", "count"), rows)
    else:
        text = _pretty_poly(body["coeffs"])
    _emit(text, out)


@main.command()
@click.option("--length", "-n", "n_steps", type=int, required=True, help="Walk length.")
@click.option("--only-t", type=int, default=None, help="Report a single doubled-area value.")
@click.option("--formula-cap", type=int, default=DEFAULT_COUNT_CAP, show_default=True)
@_client_options
def count(n_steps, only_t, formula_cap, server, fmt, out):
    """Exact walk counts per doubled area, cross-checked through two routes."""
    body = _checked(
        _Client(server).post(
            "/count", {"n_steps": n_steps, "only_t": only_t, "formula_cap": formula_cap}
        )
    )
    fmt = fmt or "csv"
    rows = body["rows"]
    if fmt == "json":
        text = json.dumps(body)
    elif fmt == "csv":
        text = _csv(("n", "t", "count"), [(body["length"], r["t"], r["count"]) for r in rows])
    elif only_t is not None and rows:
        text = rows[0]["count"]
    else:
        text = "\n".join(f"t={r['t']}: {r['count']}" for r in rows)
    _emit(text, out)


@main.command()
@click.option(
    "--suite", "suites", multiple=True, type=click.Choice(sorted(SUITES)),
    help="Suites to run (default: all).",
)
@click.option("--max-n", type=int, default=None, help="Largest walk length per suite.")
@click.option("--ps", default=None, help="Comma list of p:s pairs, e.g. 1:1,1:2.")
@_threads_option
@_client_options
def verify(suites, max_n, ps, threads, server, fmt, out):
    """Run cross-validation suites; exit 0 only if every check passes."""
    pairs = None
    if ps:
        pairs = []
        for chunk in ps.split(","):
            left, sep, right = chunk.partition(":")
            if not sep or not left.strip().isdigit() or not right.strip().isdigit():
                raise click.UsageError(f"--ps expects comma-separated p:s pairs, got {chunk!r}")
            pairs.append((int(left), int(right)))
    body = _checked(
        _Client(server).post(
            "/verify",
            {"suites": list(suites) or None, "max_n": max_n, "ps": pairs, "threads": threads},
        )
    )
    lines = [json.dumps(check) for check in body["checks"]]
    _emit("\n".join(lines), out)
    if not body["passed"]:
        sys.exit(1)


@main.command()
@click.option("--min-n", type=int, default=1, show_default=True)
@click.option("--max-n", type=int, required=True)
@click.option(
    "--method", "methods", multiple=True, type=click.Choice(["brute", "dp", "formula"]),
    help="Methods to time (default: all).",
)
@click.option("--brute-cap", type=int, default=DEFAULT_BRUTE_CAP, show_default=True)
@click.option("--dp-cap", type=int, default=DEFAULT_DP_CAP, show_default=True)
@click.option("--formula-cap", type=int, default=DEFAULT_FORMULA_CAP, show_default=True)
@_threads_option
@_client_options
def bench(min_n, max_n, methods, brute_cap, dp_cap, formula_cap, threads, server, fmt, out):
    """Time each computation route over a range of lengths."""
    body = _checked(
        _Client(server).post(
            "/bench",
            {
                "min_n": min_n,
                "max_n": max_n,
                "methods": list(methods) or ["brute", "dp", "formula"],
                "brute_cap": brute_cap,
                "dp_cap": dp_cap,
                "formula_cap": formula_cap,
                "threads": threads,
            },
        )
    )
    fmt = fmt or "csv"
    rows = [(r["n"], r["method"], r["millis"], r["terms"]) for r in body["rows"]]
    if fmt == "json":
        text = json.dumps(body)
    elif fmt == "csv":
        text = _csv(("n", "method", "millis", "terms"), rows)
    else:
        text = "\n".join(f"n={n:3d} {method:8s} {millis:10.3f} ms {terms:8d} terms"
                         for n, method, millis, terms in rows)
    _emit(text, out)


@main.command()
@click.option("--length", "-n", "n_steps", type=int, required=True, help="Walk length.")
@click.option("--method", type=click.Choice(["dp", "brute"]), default="dp", show_default=True)
@click.option("--brute-cap", type=int, default=DEFAULT_BRUTE_CAP, show_default=True)
@click.option("--dp-cap", type=int, default=DEFAULT_DP_CAP, show_default=True)
@_threads_option
@_client_options
def histogram(n_steps, method, brute_cap, dp_cap, threads, server, fmt, out):
    """Per-endpoint area polynomials from the enumeration oracle."""
    body = _checked(
        _Client(server).post(
            "/oracle/histogram",
            {
                "n_steps": n_steps,
                "method": method,
                "brute_cap": brute_cap,
                "dp_cap": dp_cap,
                "threads": threads,
            },
        )
    )
    fmt = fmt or "csv"
    if fmt == "json":
        text = json.dumps(body)
    elif fmt == "csv":
        rows = [
            (body["length"], ep["k"], ep["l"], t, c)
            for ep in body["endpoints"]
            for t, c in _sorted_coeffs(ep["coeffs"])
        ]
        text = _csv(("length", "k", "l", "t", "count"), rows)
    else:
        text = "\n".join(
            f"({ep['k']},{ep['l']}): {_pretty_poly(ep['coeffs'])}" for ep in body["endpoints"]
        )
    _emit(text, out)


@main.command()
@click.option("--p", type=int, required=True)
@click.option("--s", type=int, default=None, help="q = 2s+1 for kind 'q'.")
@click.option("--q", type=int, default=None, help="Modulus for kinds '2q' and 'even-sector'.")
@click.option(
    "--kind", type=click.Choice(["q", "2q", "even-sector"]), default="q", show_default=True
)
@click.option("--casimir-x", type=click.Choice(["0", "pi/q"]), default="0", show_default=True)
@click.option("--casimir-y", type=click.Choice(["0", "pi/q"]), default="0", show_default=True)
@_client_options
def rep(p, s, q, kind, casimir_x, casimir_y, server, fmt, out):
    """Build a representation and dump parameters, residuals, and traces."""
    body = _checked(
        _Client(server).post(
            "/torus/representation",
            {
                "p": p,
                "s": s,
                "q": q,
                "kind": kind.replace("-", "_"),
                "casimir_x": casimir_x,
                "casimir_y": casimir_y,
            },
        )
    )
    text = json.dumps(body, indent=2) if (fmt or "pretty") == "pretty" else json.dumps(body)
    _emit(text, out)


@main.command()
@click.argument("steps")
@_client_options
def walk(steps, server, fmt, out):
    """Endpoint and doubled algebraic area of one walk over R, L, U, D."""
    body = _checked(_Client(server).post("/walk/area", {"steps": steps}))
    fmt = fmt or "pretty"
    if fmt == "json":
        text = json.dumps(body)
    elif fmt == "csv":
        text = _csv(
            ("steps", "k", "l", "double_area"),
            [(body["steps"], body["endpoint_k"], body["endpoint_l"], body["double_area"])],
        )
    else:
        text = (
            f"endpoint ({body['endpoint_k']},{body['endpoint_l']}), "
            f"doubled area {body['double_area']}"
        )
    _emit(text, out)


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
def serve(host, port):
    """Run the HTTP service."""
    import uvicorn

    from .service import app

    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    main()
