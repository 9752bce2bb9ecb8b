"""Rendering of package values to JSON-ready objects, CSV and text.

External outputs label exponents as plain q-exponents, 2n for internal
exponent n, and all big integers are decimal strings so
any JSON consumer survives them.
"""

from __future__ import annotations

import io
import csv

from .extremal import ExtremalFamily
from .forms import NiemeierRecord
from .identities import IdentityReport
from .monster import Decomposition
from .series import IntPoly, LaurentSeries


def poly_payload(p: IntPoly) -> dict:
    """Degree-ascending decimal strings: {"poly": ["c0", "c1", ...]}."""
    return {"poly": [str(c) for c in p.coeffs]}


def coeff_payload(c) -> str | dict:
    return poly_payload(c) if isinstance(c, IntPoly) else str(c)


def coeff_text(c) -> str:
    return str(c)


def series_payload(s: LaurentSeries) -> dict:
    return {
        "variable": "q",
        "unit": 2,
        "terms": [[2 * n, coeff_payload(c)] for n, c in s.terms()],
        "order": 2 * s.order,
    }


def series_text(s: LaurentSeries) -> str:
    lines = [f"{'q^' + str(2 * n):>10}  {coeff_text(c)}" for n, c in s.terms()]
    lines.append(f"{'':>10}  O(q^{2 * (s.order + 1)})")
    return "\n".join(lines)


def series_csv(s: LaurentSeries) -> str:
    return _csv(["exponent", "coefficient"], [[2 * n, coeff_text(c)] for n, c in s.terms()])


def family_payload(fam: ExtremalFamily) -> dict:
    return {
        "k": fam.k,
        "order": 2 * fam.order,
        "g0_poly": poly_payload(fam.g0_poly),
        "symfuncs": [poly_payload(p) for p in fam.symfuncs],
        "series": series_payload(fam.series),
    }


def family_text(fam: ExtremalFamily) -> str:
    head = [f"k = {fam.k}", f"g0(x) = {fam.g0_poly}"]
    for m, p in enumerate(fam.symfuncs, start=1):
        head.append(f"e{m} = {p}")
    return "\n".join(head) + "\n" + series_text(fam.series)


def roots_payload(fam: ExtremalFamily, target: int, roots: list[int]) -> dict:
    return {"k": fam.k, "target": str(target), "roots": [str(r) for r in roots]}


def decomposition_payload(d: Decomposition) -> dict:
    return {
        "coefficient": str(d.target),
        "terms": [[str(dim), str(mult)] for dim, mult in d.multiplicities],
    }


def decompositions_payload(pairs: list[tuple[int, Decomposition]]) -> list[dict]:
    return [{"exponent": 2 * n, **decomposition_payload(d)} for n, d in pairs]


def decompositions_text(pairs: list[tuple[int, Decomposition]]) -> str:
    return "\n".join(f"q^{2 * n}: {d}" for n, d in pairs)


def decompositions_csv(pairs: list[tuple[int, Decomposition]]) -> str:
    rows = [
        [2 * n, str(d.target), " + ".join(f"{m}*{dim}" for dim, m in d.multiplicities)]
        for n, d in pairs
    ]
    return _csv(["exponent", "coefficient", "decomposition"], rows)


def report_payload(rep: IdentityReport) -> dict:
    return {
        "k": rep.identity.k,
        "identity": rep.identity.render(),
        "all_pass": rep.all_pass,
        "rows": [
            {
                "i": r.i,
                "subscript": r.subscript,
                "lhs": str(r.lhs),
                "rhs": str(r.rhs),
                "pass": r.passed,
            }
            for r in rep.rows
        ],
    }


def reports_payload(reports: list[IdentityReport]) -> dict:
    return {
        "all_pass": all(r.all_pass for r in reports),
        "reports": [report_payload(r) for r in reports],
    }


def reports_text(reports: list[IdentityReport]) -> str:
    lines = []
    for rep in reports:
        verdict = "PASS" if rep.all_pass else "FAIL"
        lines.append(f"[{verdict}] {rep.identity.render()}")
        for r in rep.rows:
            mark = "ok" if r.passed else "MISMATCH"
            lines.append(
                f"    i={r.i:<3d} g_{r.subscript:<4d} lhs={r.lhs} rhs={r.rhs} {mark}"
            )
    total = sum(1 for r in reports if r.all_pass)
    lines.append(f"{total}/{len(reports)} identities pass")
    return "\n".join(lines)


def reports_csv(reports: list[IdentityReport]) -> str:
    rows = []
    for rep in reports:
        for r in rep.rows:
            rows.append(
                [
                    rep.identity.k,
                    rep.identity.render(),
                    r.i,
                    r.subscript,
                    str(r.lhs),
                    str(r.rhs),
                    "pass" if r.passed else "fail",
                ]
            )
    return _csv(["k", "identity", "i", "subscript", "lhs", "rhs", "status"], rows)


def catalog_payload(records: tuple[NiemeierRecord, ...]) -> list[dict]:
    return [
        {"name": r.name, "coxeter_h": r.coxeter_h, "massless": r.massless}
        for r in records
    ]


def catalog_text(records: tuple[NiemeierRecord, ...]) -> str:
    width = max(len(r.name) for r in records)
    lines = [f"{'name':<{width}}  {'h':>3}  massless"]
    for r in records:
        lines.append(f"{r.name:<{width}}  {r.coxeter_h:>3}  {r.massless:>8}")
    return "\n".join(lines)


def catalog_csv(records: tuple[NiemeierRecord, ...]) -> str:
    return _csv(
        ["name", "coxeter_h", "massless"],
        [[r.name, r.coxeter_h, r.massless] for r in records],
    )


def _csv(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue().rstrip("\n")
