"""Command line client for the kirwanlab service.

The CLI is a thin client: every command builds a request, sends it to the
HTTP API, and prints the response.  By default requests are dispatched to the
application in-process (no server or network needed); ``--url`` targets a
running server instead, and ``serve`` starts one.
"""

from __future__ import annotations

import asyncio
import json
import re
import sys
from decimal import Decimal, getcontext

import click
import httpx


def _request(ctx, method: str, path: str, payload=None, params=None):
    url = ctx.obj.get("url")
    if url:
        with httpx.Client(base_url=url, timeout=120) as client:
            response = client.request(method, path, json=payload, params=params)
            return response.status_code, response
    from .service.app import app

    async def go():
        transport = httpx.ASGITransport(app=app)
        async with httpx.AsyncClient(
            transport=transport, base_url="http://kirwanlab.internal", timeout=None
        ) as client:
            return await client.request(method, path, json=payload, params=params)

    response = asyncio.run(go())
    return response.status_code, response


_FRACTION_RE = re.compile(r"^-?\d+/\d+$")


def _decimalize(obj, places: int):
    if isinstance(obj, str) and _FRACTION_RE.match(obj):
        num, den = obj.split("/")
        getcontext().prec = places + 16
        value = Decimal(num) / Decimal(den)
        return str(round(value, places))
    if isinstance(obj, list):
        return [_decimalize(v, places) for v in obj]
    if isinstance(obj, dict):
        return {k: _decimalize(v, places) for k, v in obj.items()}
    return obj


def _emit(ctx, status: int, response, exit_on_error: bool = True) -> dict:
    try:
        data = response.json()
    except ValueError:
        click.echo(response.text)
        data = {}
    else:
        decimal_places = ctx.obj.get("decimal")
        shown = _decimalize(data, decimal_places) if decimal_places else data
        click.echo(json.dumps(shown, indent=2))
    if status >= 400 and exit_on_error:
        sys.exit(1)
    return data


def _load_json(path: str):
    with open(path, "r", encoding="utf-8") as handle:
        try:
            return json.load(handle)
        except json.JSONDecodeError as exc:
            raise click.ClickException(
                f"{path}: invalid JSON at line {exc.lineno}, column {exc.colno}"
            ) from exc


def _spec_payload(path: str) -> dict:
    return _load_json(path)


def _chamber_selector(chamber: str | None, chamber_index: int | None) -> dict:
    if (chamber is None) == (chamber_index is None):
        raise click.UsageError("pass exactly one of --chamber or --chamber-index")
    if chamber is not None:
        return {"rep": chamber}
    return {"index": chamber_index}


@click.group()
@click.option("--url", default=None, help="Base URL of a running server (default: in-process).")
@click.option(
    "--decimal",
    type=int,
    default=None,
    help="Render rationals as decimals with N places (display only; machine output stays exact).",
)
@click.pass_context
def main(ctx, url, decimal):
    """Exact equivariant-cohomology computations for circle actions."""
    ctx.ensure_object(dict)
    ctx.obj["url"] = url
    ctx.obj["decimal"] = decimal


@main.command()
@click.option("--spec", "spec_path", required=True, type=click.Path(exists=True))
@click.pass_context
def ring(ctx, spec_path):
    """Print the equivariant cohomology ring of a manifold spec."""
    status, r = _request(ctx, "POST", "/ring", {"spec": _spec_payload(spec_path)})
    _emit(ctx, status, r)


@main.command("fixed-points")
@click.option("--spec", "spec_path", required=True, type=click.Path(exists=True))
@click.pass_context
def fixed_points(ctx, spec_path):
    """List fixed points with moment values and weight products."""
    status, r = _request(ctx, "POST", "/fixed-points", {"spec": _spec_payload(spec_path)})
    _emit(ctx, status, r)


@main.command()
@click.option("--spec", "spec_path", required=True, type=click.Path(exists=True))
@click.pass_context
def chambers(ctx, spec_path):
    """List chambers of regular values."""
    status, r = _request(ctx, "POST", "/chambers", {"spec": _spec_payload(spec_path)})
    _emit(ctx, status, r)


@main.command()
@click.option("--spec", "spec_path", required=True, type=click.Path(exists=True))
@click.option("--alpha", required=True, help='Class expression, e.g. "t^2" or "x0*x1".')
@click.option("--c", "level", required=True, help='Regular value, e.g. "9/2".')
@click.pass_context
def integrate(ctx, spec_path, alpha, level):
    """Integrate a top-pairing-degree class over the quotient at a regular value."""
    payload = {"spec": _spec_payload(spec_path), "alpha": alpha, "c": level}
    status, r = _request(ctx, "POST", "/integrate", payload)
    _emit(ctx, status, r)


@main.command()
@click.option("--spec", "spec_path", required=True, type=click.Path(exists=True))
@click.option("--degree", required=True, type=int)
@click.option("--basis-file", type=click.Path(exists=True), default=None)
@click.pass_context
def basis(ctx, spec_path, degree, basis_file):
    """Show (or validate) a graded basis."""
    payload = {"spec": _spec_payload(spec_path), "degree": degree}
    if basis_file:
        payload["custom"] = _load_json(basis_file)
    status, r = _request(ctx, "POST", "/basis", payload)
    _emit(ctx, status, r)


@main.command()
@click.option("--spec", "spec_path", required=True, type=click.Path(exists=True))
@click.option("--basis-file", type=click.Path(exists=True), default=None)
@click.option("--format", "fmt", type=click.Choice(["json", "csv", "text"]), default="json")
@click.pass_context
def tables(ctx, spec_path, basis_file, fmt):
    """Emit the contribution and chamber tables."""
    payload = {"spec": _spec_payload(spec_path), "format": fmt}
    if basis_file:
        payload["basis"] = _load_json(basis_file)
    status, r = _request(ctx, "POST", "/tables", payload)
    if status >= 400 or fmt == "json":
        _emit(ctx, status, r)
        return
    data = r.json()
    click.echo(data["rendered"]["contribution"])
    click.echo(data["rendered"]["chamber"], nl=False)


@main.command()
@click.option("--spec", "spec_path", required=True, type=click.Path(exists=True))
@click.option("--q", required=True, type=int, help="Even degree of the row basis.")
@click.option("--chamber", default=None, help='Interior value of a chamber, e.g. "9/2".')
@click.option("--chamber-index", default=None, type=int, help="1-based chamber index.")
@click.option("--basis-file", type=click.Path(exists=True), default=None)
@click.pass_context
def pairing(ctx, spec_path, q, chamber, chamber_index, basis_file):
    """Print one pairing matrix."""
    payload = {
        "spec": _spec_payload(spec_path),
        "q": q,
        "chamber": _chamber_selector(chamber, chamber_index),
    }
    if basis_file:
        payload["custom_bases"] = _load_json(basis_file)
    status, r = _request(ctx, "POST", "/pairing", payload)
    _emit(ctx, status, r)


@main.command()
@click.option("--spec", "spec_path", required=True, type=click.Path(exists=True))
@click.option("--chambers", "chamber_list", default="all", help='"all" or comma list like "1,3,5".')
@click.option("--basis-file", type=click.Path(exists=True), default=None)
@click.option("--out", "out_path", type=click.Path(), default=None,
              help="Also write the representative class file here.")
@click.pass_context
def bdc(ctx, spec_path, chamber_list, basis_file, out_path):
    """Solve for the affine family of global diagonal classes."""
    if chamber_list == "all":
        selector = "all"
    else:
        try:
            selector = [int(x) for x in chamber_list.split(",") if x.strip()]
        except ValueError as exc:
            raise click.UsageError("--chambers must be 'all' or a comma list of indices") from exc
    payload = {"spec": _spec_payload(spec_path), "chambers": selector}
    if basis_file:
        payload["custom_bases"] = _load_json(basis_file)
    status, r = _request(ctx, "POST", "/bdc", payload)
    data = _emit(ctx, status, r)
    if out_path and status < 400:
        with open(out_path, "w", encoding="utf-8") as handle:
            json.dump(data["representative"], handle, indent=2)


@main.command()
@click.option("--spec", "spec_path", required=True, type=click.Path(exists=True))
@click.option("--class", "class_path", required=True, type=click.Path(exists=True))
@click.option("--chamber", default=None)
@click.option("--chamber-index", default=None, type=int)
@click.pass_context
def verify(ctx, spec_path, class_path, chamber, chamber_index):
    """Check a class file at one chamber; exit 0 iff it is a diagonal class."""
    payload = {
        "spec": _spec_payload(spec_path),
        "class_file": _load_json(class_path),
        "chamber": _chamber_selector(chamber, chamber_index),
    }
    status, r = _request(ctx, "POST", "/verify", payload)
    data = _emit(ctx, status, r)
    if not data.get("is_bdc", False):
        sys.exit(1)


@main.command()
@click.option("--spec", "spec_path", required=True, type=click.Path(exists=True))
@click.option("--class", "class_path", required=True, type=click.Path(exists=True))
@click.option("--alpha", required=True)
@click.option("--chamber", default=None)
@click.option("--chamber-index", default=None, type=int)
@click.pass_context
def rinv(ctx, spec_path, class_path, alpha, chamber, chamber_index):
    """Apply the induced right inverse of the quotient restriction to a class."""
    payload = {
        "spec": _spec_payload(spec_path),
        "class_file": _load_json(class_path),
        "alpha": alpha,
        "chamber": _chamber_selector(chamber, chamber_index),
    }
    status, r = _request(ctx, "POST", "/rinv", payload)
    _emit(ctx, status, r)


@main.command("diagonal-cp1")
@click.option("--truncate", "truncation", type=int, default=None)
@click.pass_context
def diagonal_cp1(ctx, truncation):
    """Print the fiber-integral matrix and the diagonal push-forward images."""
    params = {"truncation": truncation} if truncation is not None else None
    status, r = _request(ctx, "GET", "/diagonal-cp1", params=params)
    _emit(ctx, status, r)


@main.command()
@click.option("--m-spec", "m_spec", required=True, type=click.Path(exists=True))
@click.option("--n-spec", "n_spec", required=True, type=click.Path(exists=True))
@click.option("--lm1", required=True, type=click.Path(exists=True))
@click.option("--lmu", required=True, type=click.Path(exists=True))
@click.option("--ln1", required=True, type=click.Path(exists=True))
@click.option("--lnu", required=True, type=click.Path(exists=True))
@click.option("--out1", required=True, type=click.Path())
@click.option("--out2", required=True, type=click.Path())
@click.pass_context
def compose(ctx, m_spec, n_spec, lm1, lmu, ln1, lnu, out1, out2):
    """Compose diagonal-class data of two actions into that of their product."""
    payload = {
        "spec_m": _spec_payload(m_spec),
        "spec_n": _spec_payload(n_spec),
        "lm1": _load_json(lm1),
        "lmu": _load_json(lmu),
        "ln1": _load_json(ln1),
        "lnu": _load_json(lnu),
    }
    status, r = _request(ctx, "POST", "/compose", payload)
    data = _emit(ctx, status, r)
    if status < 400:
        with open(out1, "w", encoding="utf-8") as handle:
            json.dump(data["out1"], handle, indent=2)
        with open(out2, "w", encoding="utf-8") as handle:
            json.dump(data["out2"], handle, indent=2)


@main.group()
def traintrack():
    """Weighted train track commands."""


@traintrack.command("verify")
@click.option("--track", "track_path", required=True, type=click.Path(exists=True))
@click.pass_context
def traintrack_verify(ctx, track_path):
    """Verify a weighting; exit 0 iff it is a conserved positive flow."""
    status, r = _request(ctx, "POST", "/traintrack/verify", _load_json(track_path))
    data = _emit(ctx, status, r)
    if not data.get("valid_weighting", False):
        sys.exit(1)


@traintrack.command("line-weight")
@click.option("--orders", required=True, help='Comma list of stabilizer orders, e.g. "2,2,2".')
@click.pass_context
def traintrack_line_weight(ctx, orders):
    """Weight of a perturbed line from its stabilizer orders."""
    try:
        parsed = [int(x) for x in orders.split(",") if x.strip()]
    except ValueError as exc:
        raise click.UsageError("--orders must be a comma list of integers") from exc
    status, r = _request(ctx, "POST", "/traintrack/line-weight", {"orders": parsed})
    _emit(ctx, status, r)


@main.command("paper-check")
@click.pass_context
def paper_check_cmd(ctx):
    """Recompute the bundled reference examples and diff against expected tables."""
    status, r = _request(ctx, "POST", "/paper-check")
    data = _emit(ctx, status, r)
    if not data.get("ok", False):
        sys.exit(1)


@main.command()
@click.option("--host", default="127.0.0.1")
@click.option("--port", default=8000, type=int)
def serve(host, port):
    """Run the HTTP service."""
    import uvicorn

    uvicorn.run("kirwanlab.service.app:app", host=host, port=port)


if __name__ == "__main__":
    main()
