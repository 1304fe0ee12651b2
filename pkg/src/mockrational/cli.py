"""Command-line front end.

Each subcommand builds a typed request, runs it in-process (or POSTs it to a
running server when --server is given), and renders the CommandResponse as
grouped-digit text or as one JSON document.  Exit status: 0 success (and, for
verify, all blocks matched), 1 bad input or mismatch, 2 internal
inconsistency.
"""
from __future__ import annotations

import sys

import click
from pydantic import ValidationError

from . import service
from .errors import InternalInconsistency
from .expansion import parse, render
from .service import CommandResponse

_ENDPOINT = {
    "expand": "/expand",
    "predict": "/predict",
    "verify": "/verify",
    "sequence": "/sequence",
    "convert": "/convert",
}


def _dispatch(command: str, request, server: str | None) -> CommandResponse:
    if server is None:
        return getattr(service, command)(request)
    import httpx

    resp = httpx.post(
        server.rstrip("/") + _ENDPOINT[command],
        json=request.model_dump(mode="json"),
        timeout=120.0,
    )
    if resp.status_code in (400, 422):
        detail = resp.json().get("detail", resp.text)
        raise ValueError(f"server rejected request: {detail}")
    if resp.status_code >= 500:
        raise InternalInconsistency(f"server error: {resp.text}")
    resp.raise_for_status()
    return CommandResponse.model_validate(resp.json())


def _emit_structured(resp: CommandResponse) -> None:
    click.echo(resp.model_dump_json(by_alias=True, exclude_none=True, indent=2))


def _emit_warnings(resp: CommandResponse) -> None:
    for w in resp.warnings:
        click.echo(f"warning: {w}", err=True)


def _block_table(resp: CommandResponse, with_match: bool) -> None:
    header = f"{'l':>2}  {'start':>6}  {'nonrep':>6}  {'rep':>5}  {'lambda':>6}  period"
    if with_match:
        header += "  status"
    click.echo(header)
    for b in resp.blocks:
        line = (f"{b.l:>2}  {b.start:>6}  {b.nonrep_len:>6}  {b.rep_len:>5}  "
                f"{b.length:>6}  {b.period}")
        if with_match:
            line += "  " + ("match" if b.matched else "MISMATCH")
        click.echo(line)


server_option = click.option("--server", default=None, metavar="URL",
                             help="send the request to a running server")
format_option = click.option("--format", "fmt",
                             type=click.Choice(["text", "structured"]),
                             default="text", help="output format")
base_option = click.option("--base", "-b", type=int, required=True,
                           help="recurrence base (>= 2)")


def nk_options(f):
    f = click.option("--n", type=int, default=None,
                     help="odd sequence index n = 2k-1")(f)
    f = click.option("--k", type=int, default=None,
                     help="half-index k (n = 2k-1)")(f)
    return f


def grouping_options(f):
    f = click.option("--group", type=int, default=10,
                     help="digits per group in text output")(f)
    f = click.option("--rows", type=int, default=5,
                     help="groups per row in text output")(f)
    return f


@click.group()
def cli() -> None:
    """Schizophrenic-number toolkit: digit expansion, block prediction,
    detection, verification, and base-power regrouping for sqrt(f(2k-1))
    with f(n) = base*f(n-1) + n."""


@cli.command()
@base_option
@nk_options
@click.option("--precision", type=int, default=191,
              help="significand digits to compute")
@click.option("--display-base", type=int, default=None,
              help="render the same number in a different base")
@grouping_options
@format_option
@server_option
def expand(base, n, k, precision, display_base, group, rows, fmt, server):
    """Print the expansion of sqrt(f(2k-1)) in grouped digit rows."""
    req = service.ExpandRequest(base=base, n=n, k=k, precision=precision,
                                display_base=display_base)
    resp = _dispatch("expand", req, server)
    if fmt == "structured":
        _emit_structured(resp)
        return
    ds = parse(resp.digits, resp.display_base or resp.base)
    click.echo(render(ds, group=group, groups_per_row=rows, scientific=True))


@cli.command()
@base_option
@nk_options
@click.option("--terms", type=int, default=3,
              help="highest block index to predict")
@format_option
@server_option
def predict(base, n, k, terms, fmt, server):
    """Print the predicted block table from the length theorems."""
    req = service.PredictRequest(base=base, n=n, k=k, terms=terms)
    resp = _dispatch("predict", req, server)
    if fmt == "structured":
        _emit_structured(resp)
        return
    _block_table(resp, with_match=False)
    if resp.truncated:
        click.echo(f"(prediction truncated after block {len(resp.blocks) - 1})")
    _emit_warnings(resp)


@cli.command()
@base_option
@nk_options
@click.option("--terms", type=int, default=3,
              help="highest block index to verify")
@click.option("--precision", type=int, default=None,
              help="significand digits to examine (default 2k(terms+2))")
@click.option("--min-reps", type=int, default=4,
              help="copies required before the detector accepts a run")
@click.option("--max-period", type=int, default=8,
              help="longest period the detector tries")
@format_option
@server_option
def verify(base, n, k, terms, precision, min_reps, max_period, fmt, server):
    """Compare predicted blocks against detection; exit 0 iff all match."""
    req = service.VerifyRequest(base=base, n=n, k=k, terms=terms,
                                precision=precision, min_reps=min_reps,
                                max_period=max_period)
    resp = _dispatch("verify", req, server)
    if fmt == "structured":
        _emit_structured(resp)
    else:
        _block_table(resp, with_match=True)
        if resp.truncated:
            click.echo(f"(prediction truncated after block {len(resp.blocks) - 1})")
        if resp.all_matched:
            click.echo(f"all {len(resp.blocks)} blocks match")
        elif resp.first_divergence_pos is not None:
            click.echo(f"MISMATCH: first divergence at position "
                       f"{resp.first_divergence_pos}")
        else:
            click.echo("MISMATCH")
        _emit_warnings(resp)
    if not resp.all_matched:
        sys.exit(1)


@cli.command()
@base_option
@click.option("--n", "n_range", required=True, metavar="START[..STOP]",
              help="odd n, or an inclusive range like 7..23")
@click.option("--precision", type=int, default=50,
              help="significand digits per row")
@format_option
@server_option
def sequence(base, n_range, precision, fmt, server):
    """Print one expansion per odd n in a range (the growing-pattern table)."""
    if ".." in n_range:
        start_text, stop_text = n_range.split("..", 1)
    else:
        start_text = stop_text = n_range
    try:
        start, stop = int(start_text), int(stop_text)
    except ValueError:
        raise ValueError(f"cannot parse range {n_range!r}") from None
    req = service.SequenceRequest(base=base, start=start, stop=stop,
                                  precision=precision)
    resp = _dispatch("sequence", req, server)
    if fmt == "structured":
        _emit_structured(resp)
        return
    for row in resp.rows:
        click.echo(row)


@cli.command()
@base_option
@nk_options
@click.option("--power", "powers", type=int, multiple=True, default=(2,),
              help="regrouping power m (repeatable); target base is base**m")
@click.option("--precision", type=int, default=100,
              help="significand digits in the target base")
@click.option("--detect/--no-detect", default=False,
              help="run the block detector on the regrouped digits")
@click.option("--min-reps", type=int, default=4)
@click.option("--max-period", type=int, default=8)
@grouping_options
@format_option
@server_option
def convert(base, n, k, powers, precision, detect, min_reps, max_period,
            group, rows, fmt, server):
    """Regroup the expansion into base**m and optionally re-detect blocks."""
    req = service.ConvertRequest(base=base, n=n, k=k, powers=list(powers),
                                 precision=precision, detect=detect,
                                 min_reps=min_reps, max_period=max_period)
    resp = _dispatch("convert", req, server)
    if fmt == "structured":
        _emit_structured(resp)
        return
    for conv in resp.conversions:
        click.echo(f"base {conv.base} (m={conv.power}):")
        ds = parse(conv.digits, conv.base)
        click.echo(render(ds, group=group, groups_per_row=rows, scientific=True))
        if conv.dropped:
            click.echo(f"({conv.dropped} trailing source digits dropped)")
        if conv.runs is not None:
            click.echo(f"repeating runs detected: {conv.runs} -> pattern "
                       f"{'present' if conv.present else 'absent'}")
        click.echo("")


@cli.command()
@click.option("--host", default="127.0.0.1")
@click.option("--port", type=int, default=8000)
def serve(host, port):
    """Run the HTTP API."""
    import uvicorn

    uvicorn.run("mockrational.api:app", host=host, port=port)


def _first_error_line(exc: Exception) -> str:
    if isinstance(exc, ValidationError):
        err = exc.errors()[0]
        loc = ".".join(str(p) for p in err["loc"]) or "request"
        return f"{loc}: {err['msg']}"
    return str(exc)


def main(argv: list[str] | None = None) -> None:
    try:
        cli.main(args=argv, standalone_mode=False)
    except click.exceptions.Exit as exc:
        sys.exit(exc.exit_code)
    except click.ClickException as exc:
        click.echo(f"error: {exc.format_message()}", err=True)
        sys.exit(1)
    except click.exceptions.Abort:
        sys.exit(1)
    except InternalInconsistency as exc:
        click.echo(f"internal inconsistency: {exc}", err=True)
        sys.exit(2)
    except (ValidationError, ValueError, OverflowError) as exc:
        click.echo(f"error: {_first_error_line(exc)}", err=True)
        sys.exit(1)


if __name__ == "__main__":
    main()
