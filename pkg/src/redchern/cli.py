"""Command-line surface: formula and universal-polynomial emission, suite
execution and regression tables.

Exit codes: 0 success, 1 identity failure, 2 usage error, 3 I/O failure.
Relative --out paths resolve under $REDCHERN_OUT_DIR when it is set.
"""

from __future__ import annotations

import json
import os
import sys
from pathlib import Path

import click

from redchern import chern, universal, verify
from redchern.poly import format_rational, render_latex, render_text

RANK_CAP = 6


def _resolve_out(out: str | None) -> Path | None:
    if out is None:
        return None
    path = Path(out)
    base = os.environ.get("REDCHERN_OUT_DIR")
    if base and not path.is_absolute():
        path = Path(base) / path
    return path


def _check_rank(n: int, allow_large: bool, floor: int = 2) -> None:
    if n < floor:
        raise click.UsageError(f"rank must be >= {floor}")
    if n > RANK_CAP and not allow_large:
        raise click.UsageError(
            f"rank {n} exceeds {RANK_CAP}; pass --allow-large-rank to acknowledge"
            " the cost"
        )
    if n > chern.MAX_EXPANSION_RANK:
        chern.MAX_EXPANSION_RANK = n


def _emit(text: str, out: Path | None) -> None:
    if out is None:
        click.echo(text)
        return
    try:
        out.parent.mkdir(parents=True, exist_ok=True)
        out.write_text(text + "\n", encoding="utf-8")
    except OSError as exc:
        click.echo(f"error: cannot write {out}: {exc}", err=True)
        sys.exit(3)


@click.group()
def main():
    """Exact reduced Chern class calculus."""


@main.command()
@click.option("--rank", "-n", type=int, required=True, help="Bundle rank n.")
@click.option("--index", "-r", type=int, required=True, help="Class index r.")
@click.option(
    "--format",
    "fmt",
    type=click.Choice(["text", "latex", "json"]),
    default="text",
    show_default=True,
)
@click.option("--out", type=str, default=None, help="Output path (default stdout).")
@click.option("--allow-large-rank", is_flag=True, help="Permit ranks above 6.")
def formula(rank, index, fmt, out, allow_large_rank):
    """Emit the reduced class of one rank and index."""
    _check_rank(rank, allow_large_rank)
    if not 1 <= index <= rank:
        raise click.UsageError(f"index must be in 1..{rank}")
    p = chern.reduced_chern_formula(rank, index)
    if fmt == "text":
        text = render_text(p)
    elif fmt == "latex":
        text = render_latex(p)
    else:
        text = p.dumps()
    _emit(text, _resolve_out(out))


def _universal_text(ups, latex: bool) -> str:
    lines = [f"n = {ups.rank}", f"N = {ups.count}"]
    render = render_latex if latex else render_text
    psi_name = "\\psi" if latex else "psi"
    phi_name = "\\phi" if latex else "phi"
    for i, p in enumerate(ups.psi, start=1):
        lines.append(f"{psi_name}_{i} = {render(p)}")
    for i, p in enumerate(ups.phi, start=2):
        lines.append(f"{phi_name}_{i} = {render(p)}")
    lines.append("lead = " + ", ".join(format_rational(c) for c in ups.lead))
    return "\n".join(lines)


@main.command("universal")
@click.option("--rank", "-n", type=int, required=True, help="Bundle rank n.")
@click.option(
    "--format",
    "fmt",
    type=click.Choice(["text", "latex", "json"]),
    default="text",
    show_default=True,
)
@click.option("--out", type=str, default=None, help="Output path (default stdout).")
@click.option("--allow-large-rank", is_flag=True, help="Permit ranks above 6.")
def universal_cmd(rank, fmt, out, allow_large_rank):
    """Emit psi, phi, the leading coefficients and the root count."""
    _check_rank(rank, allow_large_rank)
    ups = universal.compute_phi(rank)
    if fmt == "json":
        text = json.dumps(ups.to_json_obj(), separators=(",", ":"))
    else:
        text = _universal_text(ups, fmt == "latex")
    _emit(text, _resolve_out(out))


@main.command()
@click.option(
    "--suite",
    type=click.Choice(list(verify.SUITE_NAMES) + ["all"]),
    default="all",
    show_default=True,
)
@click.option("--max-rank", type=int, default=4, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--out", type=str, default=None, help="Report path (default stdout).")
@click.option("--allow-large-rank", is_flag=True, help="Permit ranks above 6.")
def verify_cmd(suite, max_rank, seed, out, allow_large_rank):
    """Run a verification suite; exit 1 on any identity failure."""
    _check_rank(max_rank, allow_large_rank)
    results = verify.run_suite(suite, max_rank=max_rank, seed=seed)
    lines = "\n".join(
        json.dumps(r.to_json_obj(), separators=(",", ":")) for r in results
    )
    _emit(lines, _resolve_out(out))
    failures = sum(1 for r in results if not r.passed)
    click.echo(
        f"{len(results) - failures}/{len(results)} checks passed", err=True
    )
    if failures:
        sys.exit(1)


main.add_command(verify_cmd, name="verify")


def table_json_obj(max_rank: int) -> dict:
    """The regression table for ranks 2..max_rank, in canonical JSON form."""
    ranks = []
    for n in range(2, max_rank + 1):
        ups = universal.compute_phi(n)
        entry = ups.to_json_obj()
        entry["reduced"] = [
            chern.reduced_chern_formula(n, r).to_json_obj() for r in range(1, n + 1)
        ]
        ranks.append(entry)
    return {"max_rank": max_rank, "ranks": ranks}


@main.command()
@click.option("--max-rank", type=int, default=4, show_default=True)
@click.option("--out", type=str, default=None, help="Output path (default stdout).")
@click.option("--allow-large-rank", is_flag=True, help="Permit ranks above 6.")
def table(max_rank, out, allow_large_rank):
    """Write the regression table of classes and universal polynomials."""
    _check_rank(max_rank, allow_large_rank)
    text = json.dumps(table_json_obj(max_rank), indent=2)
    _emit(text, _resolve_out(out))


if __name__ == "__main__":
    main()
