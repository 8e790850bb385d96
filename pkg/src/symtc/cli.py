"""Command-line interface: a thin client over the service API.

By default requests run against the FastAPI app in-process (no network);
``--server URL`` points the same commands at a running service instead.
Exit codes: 0 success, 1 failed assertion or exactness demand, 2 usage error.
"""

from __future__ import annotations

import json
import sys
from typing import Any, Dict, Optional

import click
import httpx


class ServiceClient:
    """HTTP-shaped access to the service, in-process unless a URL is given."""

    def __init__(self, server: Optional[str] = None):
        if server:
            self._client = httpx.Client(base_url=server, timeout=None)
        else:
            from starlette.testclient import TestClient

            from .service.app import app

            self._client = TestClient(app, base_url="http://symtc.internal")

    def post(self, path: str, payload: Dict[str, Any]) -> Dict[str, Any]:
        response = self._client.post(path, json=payload)
        if response.status_code >= 400:
            try:
                detail = response.json().get("detail", response.text)
            except Exception:
                detail = response.text
            raise CommandError(str(detail), usage=response.status_code == 422)
        return response.json()


class CommandError(Exception):
    def __init__(self, message: str, usage: bool = False, failure: bool = False):
        super().__init__(message)
        self.usage = usage
        self.failure = failure


def _emit(envelope: Dict[str, Any], json_path: Optional[str]) -> None:
    if json_path:
        with open(json_path, "w") as fh:
            json.dump(envelope, fh, indent=2, sort_keys=False)
            fh.write("\n")


def _print_bound_report(rep: Dict[str, Any]) -> None:
    name = rep["invariant"]
    shape = f"= {rep['lower']}" if rep["exact"] else f"in [{rep['lower']}, {rep['upper']}]"
    click.echo(f"{name}({rep['space']}) {shape}   exact: {'yes' if rep['exact'] else 'no'}")
    click.echo(f"  lower bound: {rep['lower']} via {rep['lower_reason']}")
    click.echo(f"  upper bound: {rep['upper']} via {rep['upper_reason']}")
    cert = rep.get("certificate")
    if cert:
        click.echo(
            f"  certificate: {cert['length']} zero-divisor factors, "
            f"leading coefficient {cert['product']['leading_coefficient']}"
        )
    for note in rep.get("notes", []):
        click.echo(f"  note: {note}")
    for cite in rep.get("citations", []):
        click.echo(f"  cite: {cite}")


@click.group()
@click.option("--server", default=None, help="base URL of a running symtc service")
@click.pass_context
def main(ctx: click.Context, server: Optional[str]) -> None:
    """Exact invariants of symmetric products of surfaces."""
    ctx.obj = ServiceClient(server)


def _run(ctx: click.Context, path: str, payload: Dict[str, Any], json_path: Optional[str]):
    try:
        envelope = ctx.obj.post(path, payload)
    except CommandError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(2 if exc.usage else 1)
    except httpx.HTTPError as exc:
        click.echo(f"transport error: {exc}", err=True)
        sys.exit(2)
    _emit(envelope, json_path)
    return envelope


@main.command()
@click.argument("space")
@click.option("--up-to", type=int, default=None, help="dump bases up to this degree")
@click.option("--json", "json_path", type=click.Path(), default=None)
@click.pass_context
def ring(ctx, space: str, up_to: Optional[int], json_path: Optional[str]) -> None:
    """Show generators and per-degree bases of the cohomology ring."""
    env = _run(ctx, "/ring", {"space": space, "up_to": up_to}, json_path)
    result = env["result"]
    if "generators" in result:
        click.echo(f"{result['ring']}  (field {result['field']}, top degree {result['top_degree']})")
        gens = ", ".join(f"{g['name']} (deg {g['degree']})" for g in result["generators"])
        click.echo(f"  generators: {gens}")
        for d, basis in result["basis"].items():
            click.echo(f"  degree {d}: dim {len(basis)}: {', '.join(basis) if basis else '-'}")
    else:
        click.echo(f"{result['ring']}  (field {result['field']})")
        click.echo(f"  dimensions: {result['dimensions']}")


@main.command()
@click.argument("space")
@click.option("--require-exact", is_flag=True, default=False)
@click.option("--json", "json_path", type=click.Path(), default=None)
@click.pass_context
def cat(ctx, space: str, require_exact: bool, json_path: Optional[str]) -> None:
    """Lusternik-Schnirelmann category bounds."""
    env = _run(ctx, "/cat", {"space": space, "require_exact": require_exact}, json_path)
    _print_bound_report(env["result"])
    if require_exact and not env["result"]["exact"]:
        sys.exit(1)


@main.command()
@click.argument("space")
@click.option("-m", "m", type=int, default=2, show_default=True)
@click.option("--strategy", default="auto", show_default=True)
@click.option("--require-exact", is_flag=True, default=False)
@click.option("--json", "json_path", type=click.Path(), default=None)
@click.pass_context
def tc(ctx, space: str, m: int, strategy: str, require_exact: bool, json_path) -> None:
    """Sequential topological complexity bounds."""
    env = _run(
        ctx, "/tc",
        {"space": space, "m": m, "strategy": strategy, "require_exact": require_exact},
        json_path,
    )
    _print_bound_report(env["result"])
    if require_exact and not env["result"]["exact"]:
        sys.exit(1)


@main.command()
@click.argument("space")
@click.option("-m", "m", type=int, default=2, show_default=True)
@click.option("--strategy", default="auto", show_default=True)
@click.option("--convention", default="koszul", show_default=True,
              help="interchange sign rule: koszul (topological) or plain (unsigned reproduction)")
@click.option("--json", "json_path", type=click.Path(), default=None)
@click.pass_context
def szcl(ctx, space: str, m: int, strategy: str, convention: str, json_path) -> None:
    """Certified special-zero-divisor cup-length lower bound."""
    env = _run(
        ctx, "/szcl",
        {"space": space, "m": m, "strategy": strategy, "convention": convention},
        json_path,
    )
    r = env["result"]
    click.echo(f"szcl_{r['m']}({r['space']}) >= {r['length']}  [{r['convention']} convention]")
    if "certificate" in r:
        cert = r["certificate"]
        click.echo(
            f"  certificate: {cert['length']} factors, verified={r['verified']}, "
            f"leading coefficient {cert['product']['leading_coefficient']}"
        )


@main.command()
@click.argument("space")
@click.option("-m", "m", type=int, default=2, show_default=True)
@click.option("--size-limit", type=int, default=4096, show_default=True)
@click.option("--json", "json_path", type=click.Path(), default=None)
@click.pass_context
def zcl(ctx, space: str, m: int, size_limit: int, json_path) -> None:
    """Exact zero-divisor cup-length by brute force (small spaces only)."""
    env = _run(ctx, "/zcl", {"space": space, "m": m, "size_limit": size_limit}, json_path)
    r = env["result"]
    click.echo(f"zcl_{r['m']}({r['space']}) = {r['zcl']}")


@main.command()
@click.argument("space")
@click.option("--horizon", type=int, required=True)
@click.option("--json", "json_path", type=click.Path(), default=None)
@click.pass_context
def genfun(ctx, space: str, horizon: int, json_path) -> None:
    """TC-generating-function coefficients and the rational-form check."""
    env = _run(ctx, "/genfun", {"space": space, "horizon": horizon}, json_path)
    r = env["result"]
    click.echo(f"TC_(m+1)({r['space']}) for m=1..{r['horizon']}: {r['tc_values']}")
    click.echo(
        f"  cat = {r['cat']}; arithmetic progression: {r['progression_ok']}; "
        f"series form: {r['series_ok']}; numerator {r['numerator']} with value "
        f"{r['numerator_at_one']} at t=1"
    )
    if not (r["progression_ok"] and r["series_ok"]):
        sys.exit(1)


@main.command()
@click.argument("space")
@click.option("--json", "json_path", type=click.Path(), default=None)
@click.pass_context
def essential(ctx, space: str, json_path) -> None:
    """Whether the symmetric product is an essential manifold."""
    env = _run(ctx, "/essential", {"space": space}, json_path)
    r = env["result"]
    click.echo(f"essential({r['space']}) = {r['essential']}")


@main.command()
@click.argument("k", type=int)
@click.argument("i", type=int, required=False)
@click.option("--json", "json_path", type=click.Path(), default=None)
@click.pass_context
def lucas(ctx, k: int, i: Optional[int], json_path) -> None:
    """Binomial parity data for row k (optionally a single entry C(k, i))."""
    env = _run(ctx, "/lucas", {"k": k, "i": i}, json_path)
    r = env["result"]
    click.echo(f"row {r['k']}: {r['odd_count_row']} odd entries")
    if "parity" in r:
        click.echo(f"C({r['k']}, {r['i']}) = {r['binomial']}  (parity {r['parity']})")


@main.command()
@click.option("--suite", default="paper", show_default=True)
@click.option("--grid", nargs=3, type=int, default=(3, 3, 3), show_default=True,
              metavar="NMAX GMAX MMAX")
@click.option("--require-exact", is_flag=True, default=False)
@click.option("--workers", type=int, default=None)
@click.option("--json", "json_path", type=click.Path(), default=None)
@click.pass_context
def verify(ctx, suite: str, grid, require_exact: bool, workers, json_path) -> None:
    """Run the reproduction suite; nonzero exit on any failed assertion."""
    nmax, gmax, mmax = grid
    env = _run(
        ctx, "/verify",
        {"suite": suite, "nmax": nmax, "gmax": gmax, "mmax": mmax,
         "require_exact": require_exact, "workers": workers},
        json_path,
    )
    r = env["result"]
    counts = r["counts"]
    for cell in r["cells"]:
        mark = {"pass": "ok  ", "uncertified": "open", "fail": "FAIL"}[cell["status"]]
        click.echo(f"[{mark}] {cell['key']}: {cell['description']} -- {cell['detail']}")
    click.echo(
        f"suite '{r['suite']}': {counts.get('pass', 0)} passed, "
        f"{counts.get('uncertified', 0)} uncertified, {counts.get('fail', 0)} failed "
        f"({r['wall_seconds']}s)"
    )
    if not r["ok"]:
        sys.exit(1)


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
def serve(host: str, port: int) -> None:
    """Run the service with uvicorn (requires the 'server' extra)."""
    try:
        import uvicorn
    except ImportError:
        click.echo("uvicorn is not installed; pip install 'symtc[server]'", err=True)
        sys.exit(2)
    uvicorn.run("symtc.service.app:app", host=host, port=port)


if __name__ == "__main__":
    main()
