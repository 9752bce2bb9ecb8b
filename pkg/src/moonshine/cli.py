"""Command-line interface.

All orders, subscript ranges and exponent labels on this surface are in
plain q-exponents 2n, always even. Internally series are
truncated at n and the conversion happens here. Big integers are
printed as decimal strings in every format.

Exit codes: 0 success (including verification failures without
--strict); 1 verification failures under --strict; 2 unknown form or
usage error; 3 truncation exceeded; 4 x-dependent coefficient; 5
negative value in a decomposition; 6 malformed identity; 7 non-unit or
non-integral solve.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from . import extremal, forms, identities, monster, serialize
from .errors import MoonshineError, exit_code


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text + "\n")
    else:
        click.echo(text)


def _json(payload) -> str:
    return json.dumps(payload, indent=2)


def _internal_order(q_exponent: int) -> int:
    if q_exponent < 2:
        raise click.BadParameter("order must be an even q-exponent >= 2")
    return q_exponent // 2


_FORMAT = click.option(
    "--format", "fmt", type=click.Choice(["json", "csv", "text"]), default="text",
    show_default=True, help="Output format.",
)
_OUT = click.option("--out", type=click.Path(dir_okay=False), default=None,
                    help="Write output to a file instead of stdout.")
_ORDER = click.option("--order", type=int, default=20, show_default=True,
                      help="Truncation order as a q-exponent.")


def _run(fn):
    try:
        fn()
    except MoonshineError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(exit_code(exc))


@click.group()
@click.version_option(package_name="moonshine")
def main():
    """Exact q-series tools: modular forms, extremal partition-function
    families, coefficient identities and Monster decompositions."""


@main.command()
@click.option("--form", required=True,
              help="delta, e4, j, J, or niemeier:<name> (see 'niemeier --list').")
@_ORDER
@_FORMAT
@_OUT
def expand(form, order, fmt, out):
    """Print the q-expansion of a modular form or lattice theta series."""
    def go():
        series = forms.by_name(form, _internal_order(order))
        if fmt == "json":
            _emit(_json(serialize.series_payload(series)), out)
        elif fmt == "csv":
            _emit(serialize.series_csv(series), out)
        else:
            _emit(serialize.series_text(series), out)
    _run(go)


@main.command("extremal")
@click.option("--k", "k", type=int, required=True, help="Central charge multiple, 1..6.")
@click.option("--x", "x_value", type=str, default=None,
              help="Specialize the free parameter to this integer.")
@click.option("--solve-g0", "g0_target", type=str, default=None,
              help="Find integer x with constant term equal to this target.")
@_ORDER
@_FORMAT
@_OUT
def extremal_cmd(k, x_value, g0_target, order, fmt, out):
    """Build the one-parameter extremal family for central charge 24k."""
    if x_value is not None and g0_target is not None:
        raise click.UsageError("--x and --solve-g0 are mutually exclusive")
    def go():
        fam = extremal.build_family(k, _internal_order(order))
        if g0_target is not None:
            roots = extremal.solve_g0(fam, int(g0_target))
            payload = serialize.roots_payload(fam, int(g0_target), roots)
            if fmt == "json":
                _emit(_json(payload), out)
            elif fmt == "csv":
                _emit("root\n" + "\n".join(str(r) for r in roots), out)
            else:
                shown = ", ".join(str(r) for r in roots) if roots else "(none)"
                _emit(f"g0(x) = {fam.g0_poly}\nroots of g0(x) = {g0_target}: {shown}", out)
        elif x_value is not None:
            series = extremal.specialize(fam, int(x_value))
            if fmt == "json":
                _emit(_json(serialize.series_payload(series)), out)
            elif fmt == "csv":
                _emit(serialize.series_csv(series), out)
            else:
                _emit(serialize.series_text(series), out)
        else:
            if fmt == "json":
                _emit(_json(serialize.family_payload(fam)), out)
            elif fmt == "csv":
                _emit(serialize.series_csv(fam.series), out)
            else:
                _emit(serialize.family_text(fam), out)
    _run(go)


@main.command()
@click.option("--value", type=str, default=None, help="Decompose one non-negative integer.")
@click.option("--form", type=str, default=None, help="Decompose coefficients of this form.")
@click.option("--from", "n_from", type=int, default=2,
              help="First q-exponent.  [default: 2]")
@click.option("--to", "n_to", type=int, default=20, show_default=True,
              help="Last q-exponent.")
@_FORMAT
@_OUT
def decompose(value, form, n_from, n_to, fmt, out):
    """Write values as non-negative combinations of Monster
    representation dimensions (greedy, largest first)."""
    if (value is None) == (form is None):
        raise click.UsageError("exactly one of --value or --form is required")
    def go():
        if value is not None:
            d = monster.greedy_decompose(int(value))
            if fmt == "json":
                _emit(_json(serialize.decomposition_payload(d)), out)
            else:
                _emit(str(d), out)
            return
        lo = max((n_from + 1) // 2, 0)
        hi = n_to // 2
        series = forms.by_name(form, hi)
        pairs = monster.decompose_series(series, lo, hi)
        if fmt == "json":
            _emit(_json(serialize.decompositions_payload(pairs)), out)
        elif fmt == "csv":
            _emit(serialize.decompositions_csv(pairs), out)
        else:
            _emit(serialize.decompositions_text(pairs), out)
    _run(go)


@main.command()
@click.option("--builtin", "use_builtin", is_flag=True, help="Run the built-in identity table.")
@click.option("--file", "path", type=click.Path(exists=True, dir_okay=False), default=None,
              help="Identity file: one identity per line, '#' comments.")
@click.option("--imax", type=int, default=5, show_default=True, help="Check i = 0..imax.")
@click.option("--strict", is_flag=True, help="Exit nonzero when any identity fails.")
@_FORMAT
@_OUT
def verify(use_builtin, path, imax, strict, fmt, out):
    """Check coefficient identities against exact computation."""
    if not use_builtin and path is None:
        raise click.UsageError("one of --builtin or --file is required")
    def go():
        if path is not None:
            asts = identities.parse_lines(Path(path).read_text())
        else:
            asts = identities.builtin_table1()
        reports = identities.run_suite(imax, asts)
        if fmt == "json":
            _emit(_json(serialize.reports_payload(reports)), out)
        elif fmt == "csv":
            _emit(serialize.reports_csv(reports), out)
        else:
            _emit(serialize.reports_text(reports), out)
        if strict and not all(r.all_pass for r in reports):
            sys.exit(1)
    _run(go)


@main.command()
@click.option("--list", "list_all", is_flag=True, default=False,
              help="List all 24 lattices (default).")
@click.option("--name", type=str, default=None, help="Show a single record.")
@_FORMAT
@_OUT
def niemeier(list_all, name, fmt, out):
    """The 24 even self-dual 24-dimensional lattices."""
    def go():
        records = forms.catalog() if name is None else (forms.lookup(name),)
        if fmt == "json":
            _emit(_json(serialize.catalog_payload(records)), out)
        elif fmt == "csv":
            _emit(serialize.catalog_csv(records), out)
        else:
            _emit(serialize.catalog_text(records), out)
    _run(go)


if __name__ == "__main__":
    main()
