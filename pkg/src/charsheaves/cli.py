"""Command-line front end: ``charsheaves {orbits,strata,classify,cuspidal,fourier,levi,verify}``.

Exit codes: 0 success, 1 verification failure, 2 usage or input error.
"""

from __future__ import annotations

import json
import sys
from typing import Any

import click

from . import records
from .classify import (
    character_sheaves,
    cuspidal_sheaves,
    fourier_forward,
    fourier_inverse,
    induction_datum_for_sheaf,
)
from .combinat import divisors
from .orbits import DiagramParseError, PairContext, SignatureMismatch, enumerate_orbits
from .strata import cs_orbits, is_valid_for
from .verify import N_MAX_BOUND, run_checks

FORMATS = click.Choice(["json", "csv", "pretty"])


def _ctx(p: int, q: int) -> PairContext:
    if p < 0 or q < 0 or p + q < 1:
        raise click.UsageError(f"need p, q >= 0 and p + q >= 1, got p={p}, q={q}")
    return PairContext(p, q)


def _pretty(rows: list[dict], fields: list[str]) -> str:
    def cell(v: Any) -> str:
        if v is None:
            return "-"
        if isinstance(v, bool):
            return "yes" if v else "no"
        if isinstance(v, dict):
            return f"{v['exponent']}/{v['modulus']}"
        if isinstance(v, list):
            return json.dumps(v, separators=(",", ":"))
        return str(v)

    table = [[cell(r.get(f)) for f in fields] for r in rows]
    widths = [max([len(f)] + [len(t[i]) for t in table]) for i, f in enumerate(fields)]
    lines = ["  ".join(f.ljust(w) for f, w in zip(fields, widths)).rstrip()]
    lines += ["  ".join(c.ljust(w) for c, w in zip(t, widths)).rstrip() for t in table]
    return "\n".join(lines)


def _emit(kind: str, rows: list[dict], fmt: str, csv_fields: list[str], pretty_fields: list[str] | None = None) -> None:
    if fmt == "json":
        for r in rows:
            click.echo(json.dumps(records.tag(kind, r), separators=(",", ":")))
    elif fmt == "csv":
        click.echo(records.to_csv([records.tag(kind, r) for r in rows], ["kind", *csv_fields]), nl=False)
    else:
        click.echo(_pretty(rows, pretty_fields or csv_fields))


def _pq_options(fn):
    fn = click.option("--q", "q", type=int, required=True, help="dim V-")(fn)
    fn = click.option("--p", "p", type=int, required=True, help="dim V+")(fn)
    return fn


@click.group()
@click.version_option(package_name="artifact")
def main() -> None:
    """Character sheaves for (SL_n, S(GL_p x GL_q)) as exact combinatorics."""


@main.command()
@_pq_options
@click.option("--format", "fmt", type=FORMATS, default="pretty", show_default=True)
def orbits(p: int, q: int, fmt: str) -> None:
    """Nilpotent K-orbits (signed Young diagrams of signature (p, q))."""
    ctx = _ctx(p, q)
    rows = [records.orbit_record(lam, ctx) for lam in enumerate_orbits(ctx)]
    _emit("orbit", rows, fmt, records.ORBIT_FIELDS)


@main.command()
@_pq_options
@click.option("--format", "fmt", type=FORMATS, default="pretty", show_default=True)
def strata(p: int, q: int, fmt: str) -> None:
    """Strata (m, l, mu) that support character sheaves, with fundamental-group data."""
    ctx = _ctx(p, q)
    rows = [records.stratum_listing_record(s) for s in cs_orbits(ctx)]
    _emit("stratum", rows, fmt, records.STRATUM_FIELDS)


def _sheaf_rows(ctx: PairContext, sheaves) -> list[dict]:
    return [records.sheaf_record(s, ctx) for s in sheaves]


_PRETTY_SHEAF = ["type", "m", "l", "mu", "tau", "rho", "psi", "cuspidal", "nilpotent_support"]


@main.command()
@_pq_options
@click.option("--m", "m", type=int, default=None, help="central character order (default: all)")
@click.option("--format", "fmt", type=FORMATS, default="pretty", show_default=True)
def classify(p: int, q: int, m: int | None, fmt: str) -> None:
    """Character sheaves, grouped by central character order."""
    ctx = _ctx(p, q)
    if m is not None and m < 1:
        raise click.UsageError(f"--m must be positive, got {m}")
    orders = [m] if m is not None else divisors(ctx.n)
    sheaves = [s for k in orders for s in character_sheaves(ctx, k)]
    _emit("sheaf", _sheaf_rows(ctx, sheaves), fmt, records.SHEAF_FIELDS, _PRETTY_SHEAF)


@main.command()
@_pq_options
@click.option("--format", "fmt", type=FORMATS, default="pretty", show_default=True)
def cuspidal(p: int, q: int, fmt: str) -> None:
    """Cuspidal character sheaves."""
    ctx = _ctx(p, q)
    _emit("sheaf", _sheaf_rows(ctx, cuspidal_sheaves(ctx)), fmt, records.SHEAF_FIELDS, _PRETTY_SHEAF)


def _read_record(text: str) -> dict:
    if text == "-":
        text = sys.stdin.read()
    try:
        value = json.loads(text)
    except json.JSONDecodeError as exc:
        raise click.UsageError(f"record is not valid JSON: {exc.msg} (at position {exc.pos})")
    if not isinstance(value, dict):
        raise click.UsageError("record must be a JSON object")
    return value


@main.command()
@_pq_options
@click.option("--direction", type=click.Choice(["forward", "inverse"]), required=True)
@click.option("--record", "record_text", required=True, help="JSON record, or '-' for stdin")
def fourier(p: int, q: int, direction: str, record_text: str) -> None:
    """Apply the Fourier bijection to one record.

    forward: orbital-complex record {"orbit": ..., "character": {"modulus": ..., "exponent": ...}}
    -> sheaf record.  inverse: sheaf record -> orbital-complex record.
    """
    ctx = _ctx(p, q)
    record = _read_record(record_text)
    try:
        if direction == "forward":
            c = records.parse_complex_record(record)
            if c.orbit.signature != (ctx.p, ctx.q):
                raise SignatureMismatch(f"orbit has signature {c.orbit.signature}, expected {(ctx.p, ctx.q)}")
            out = records.tag("sheaf", records.sheaf_record(fourier_forward(c), ctx))
        else:
            s = records.parse_sheaf_record(record)
            if not is_valid_for(s.stratum, ctx):
                raise SignatureMismatch(f"stratum {s.stratum} does not support sheaves for {ctx}")
            out = records.tag("orbital-complex", records.complex_record(fourier_inverse(s, ctx)))
    except DiagramParseError as exc:
        raise click.UsageError(f"bad diagram: {exc}")
    except (records.RecordError, SignatureMismatch) as exc:
        raise click.UsageError(str(exc))
    click.echo(json.dumps(out, separators=(",", ":")))


@main.command()
@_pq_options
@click.option("--format", "fmt", type=click.Choice(["json", "pretty"]), default="pretty", show_default=True)
def levi(p: int, q: int, fmt: str) -> None:
    """Induction data (theta-stable Levi and source) for every character sheaf."""
    ctx = _ctx(p, q)
    rows = []
    for k in divisors(ctx.n):
        for s in character_sheaves(ctx, k):
            datum = induction_datum_for_sheaf(s, ctx)
            rows.append(records.tag("levi", {"sheaf": records.sheaf_record(s, ctx), "levi": records.levi_record(datum)}))
    if fmt == "json":
        for r in rows:
            click.echo(json.dumps(r, separators=(",", ":")))
        return
    flat = []
    for r in rows:
        sh, lv = r["sheaf"], r["levi"]
        flat.append(
            {
                "type": sh["type"],
                "m": sh["m"],
                "l": sh["l"],
                "mu": sh["mu"],
                "label": sh["tau"] if sh["tau"] is not None else sh["rho"],
                "psi": sh["psi"],
                "levi": lv.get("block_sizes", "not-induced"),
                "theta": lv.get("theta_blocks"),
                "source": " x ".join(lv.get("source_orbits", [])) or None,
            }
        )
    click.echo(_pretty(flat, list(flat[0].keys()) if flat else ["type"]))


@main.command()
@click.option("--n-max", "n_max", type=int, default=8, show_default=True)
@click.option("--format", "fmt", type=click.Choice(["json", "pretty"]), default="pretty", show_default=True)
def verify(n_max: int, fmt: str) -> None:
    """Run every consistency check for all pairs with p + q <= n-max."""
    if not 1 <= n_max <= N_MAX_BOUND:
        raise click.UsageError(f"--n-max must lie in [1, {N_MAX_BOUND}]")
    results = run_checks(n_max)
    for r in results:
        if fmt == "json":
            click.echo(json.dumps(records.tag("verification", r.record()), separators=(",", ":")))
        else:
            status = "PASS" if r.passed else "FAIL"
            line = f"{status}  {r.name:<26} {r.seconds:7.2f}s  {r.detail}"
            if r.counterexample:
                line += f"  counterexample={json.dumps(r.counterexample)}"
            click.echo(line)
    if not all(r.passed for r in results):
        sys.exit(1)


if __name__ == "__main__":
    main()
