"""Consolidated verification report.

Assembles four sections: the gcd identity grid (lemma1), the factor growth
bound (lemma2), the torus primitive-divisor sweep (theorem2), and the
extension independence numbers checked against their generic bounds
(theorem3).  The document is pure data, canonically serialized: integers are
decimal strings so nothing depends on native number width, keys are sorted,
and the bytes are reproducible for any worker count.
"""

from __future__ import annotations

import csv
import io
import json
import math
import multiprocessing
from typing import Any

from suzree.arith import DEFAULT_BUDGET, largest_prime_divisor
from suzree.aurifeuille import (
    BoundCheck,
    Family,
    RootChoice,
    Sign,
    build_factor_poly,
    check_factor_bound,
    eval_factor_direct,
    eval_factor_poly,
    gcd_cyclotomic_psi,
    induced_sign,
    verify_psi_ppd,
)
from suzree.primegraph import (
    GroupSpec,
    build_gk,
    independence_number,
    independence_of_extension,
)

SWEEP_LIMITS = {Family.SUZUKI: 299, Family.REE_G2: 199, Family.REE_F4: 99}

GCD_GRID_LIMITS = {Family.SUZUKI: 15, Family.REE_G2: 15, Family.REE_F4: 9}

BOUND_LIMIT = 99

EXTENSION_LIMIT = 27

SECTION_COLUMNS = {
    "lemma1": ("family", "m", "s", "eps", "gcd", "factor_value", "pass"),
    "lemma2": ("family", "m", "bound", "value_first", "value_second",
               "result", "pass"),
    "theorem2": ("family", "m", "eps", "holds", "gcd", "exception", "pass"),
    "theorem3": ("family", "m", "ext", "t", "t2", "case", "t_simple",
                 "t2_simple", "pass"),
}


def _coprime_ms(family: Family, limit: int) -> list[int]:
    return [
        m for m in range(1, limit + 1)
        if math.gcd(m, family.psi_index) == 1
    ]


def _gcd_identity_rows() -> list[dict[str, Any]]:
    rows = []
    for family in Family:
        for m in _coprime_ms(family, GCD_GRID_LIMITS[family]):
            for s in (1, 3):
                per_sign = {}
                for root in RootChoice:
                    sign = induced_sign(family, m, root)
                    value = abs(eval_factor_poly(
                        build_factor_poly(family, m, root), s
                    ))
                    per_sign[sign] = value
                for sign in (Sign.PLUS, Sign.MINUS):
                    value = per_sign[sign]
                    g = gcd_cyclotomic_psi(family, m, s, sign)
                    rows.append({
                        "family": family.value,
                        "m": str(m),
                        "s": str(s),
                        "eps": sign.value,
                        "gcd": str(g),
                        "factor_value": str(value),
                        "pass": g == value,
                    })
    return rows


def _bound_rows() -> list[dict[str, Any]]:
    rows = []
    for family in (Family.SUZUKI, Family.REE_G2):
        for m in _coprime_ms(family, BOUND_LIMIT):
            if m < 2:
                continue
            result = check_factor_bound(family, m)
            values = sorted(
                abs(eval_factor_direct(family, m, root, 1))
                for root in RootChoice
            )
            rows.append({
                "family": family.value,
                "m": str(m),
                "bound": str(largest_prime_divisor(m)),
                "value_first": str(values[0]),
                "value_second": str(values[1]),
                "result": result.value,
                "pass": result is not BoundCheck.FAIL,
            })
    return rows


def _sweep_task(args: tuple[str, int, str]) -> dict[str, Any]:
    family_key, m, sign_key = args
    verdict = verify_psi_ppd(Family(family_key), m, Sign(sign_key))
    return {
        "family": family_key,
        "m": str(m),
        "eps": sign_key,
        "holds": verdict.holds,
        "gcd": str(verdict.gcd),
        "exception": not verdict.holds and verdict.known_exception,
        "pass": verdict.holds or verdict.known_exception,
    }


def _sweep_rows(workers: int) -> list[dict[str, Any]]:
    tasks = [
        (family.value, m, sign.value)
        for family in Family
        for m in range(3, SWEEP_LIMITS[family] + 1, 2)
        for sign in (Sign.PLUS, Sign.MINUS)
    ]
    if workers <= 1:
        return [_sweep_task(t) for t in tasks]
    with multiprocessing.Pool(workers) as pool:
        return pool.map(_sweep_task, tasks, chunksize=16)


def _extension_rows(budget: int) -> list[dict[str, Any]]:
    rows = []
    for family in Family:
        simple_cache: dict[int, tuple[int, int]] = {}
        for m in range(3, EXTENSION_LIMIT + 1, 2):
            exts = [d for d in range(2, m + 1) if m % d == 0]
            if not exts:
                continue
            if m not in simple_cache:
                graph = build_gk(GroupSpec(family, m), budget=budget)
                simple = independence_number(graph)
                simple_cache[m] = (simple.t, simple.t2)
            t_simple, t2_simple = simple_cache[m]
            for ext in exts:
                report = independence_of_extension(GroupSpec(family, m, ext=ext))
                rows.append({
                    "family": family.value,
                    "m": str(m),
                    "ext": str(ext),
                    "t": str(report.t),
                    "t2": str(report.t2),
                    "case": report.case,
                    "t_simple": str(t_simple),
                    "t2_simple": str(t2_simple),
                    "pass": report.t <= t_simple + 1 and report.t2 <= t2_simple,
                })
    return rows


def build_report_document(
    workers: int = 1, budget: int = DEFAULT_BUDGET
) -> dict[str, Any]:
    """The full verification document; identical for every worker count."""
    sections = {
        "lemma1": _gcd_identity_rows(),
        "lemma2": _bound_rows(),
        "theorem2": _sweep_rows(workers),
        "theorem3": _extension_rows(budget),
    }
    fail_count = sum(
        1 for rows in sections.values() for row in rows if not row["pass"]
    )
    return {
        "budget": str(budget),
        "sections": {
            name: {"rows": rows, "pass": all(r["pass"] for r in rows)}
            for name, rows in sections.items()
        },
        "summary": {
            "fail_count": str(fail_count),
            "pass": fail_count == 0,
        },
    }


def render_json(doc: dict[str, Any]) -> str:
    """Canonical serialization: sorted keys, two-space indent, one trailing
    newline.  Parsing and re-rendering is byte-stable.
    """
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def render_section_csv(doc: dict[str, Any], name: str) -> str:
    columns = SECTION_COLUMNS[name]
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(columns)
    for row in doc["sections"][name]["rows"]:
        writer.writerow(
            [_csv_cell(row[c]) for c in columns]
        )
    return buffer.getvalue()


def _csv_cell(value: Any) -> str:
    if value is True:
        return "true"
    if value is False:
        return "false"
    return str(value)


def write_report(
    doc: dict[str, Any], outdir: str, with_figures: bool = True
) -> list[str]:
    """Write report.json, one CSV per section, and the figures; returns the
    paths written, in a fixed order.
    """
    import os

    os.makedirs(outdir, exist_ok=True)
    paths = []
    json_path = os.path.join(outdir, "report.json")
    with open(json_path, "w", encoding="utf-8", newline="") as handle:
        handle.write(render_json(doc))
    paths.append(json_path)
    for name in SECTION_COLUMNS:
        csv_path = os.path.join(outdir, f"{name}.csv")
        with open(csv_path, "w", encoding="utf-8", newline="") as handle:
            handle.write(render_section_csv(doc, name))
        paths.append(csv_path)
    if with_figures:
        from suzree import figures

        paths.extend(figures.render_all(doc, outdir))
    return paths


def graph_record(spec: GroupSpec, budget: int = DEFAULT_BUDGET,
                 data_path: str | None = None) -> dict[str, Any]:
    """JSON-shaped record for one prime graph (and extension verdict when
    the spec names one).
    """
    graph = build_gk(GroupSpec(spec.family, spec.m), budget=budget,
                     data_path=data_path)
    report = independence_number(graph)
    record: dict[str, Any] = {
        "family": spec.family.value,
        "m": str(spec.m),
        "ext": str(spec.ext),
        "vertices": [str(v) for v in graph.vertices()],
        "classes": [
            {
                "label": c.label,
                "defining": str(c.defining),
                "primes": [str(p) for p in c.primes],
                "unfactored": [str(u) for u in c.unfactored],
            }
            for c in graph.classes
        ],
        "edges": [[str(p), str(r)] for p, r in graph.edges()],
        "t": str(report.t),
        "t2": str(report.t2),
        "case": report.case,
        "max_class_sets": [list(cs) for cs in report.max_class_sets],
        "max_sets": (
            None if report.max_sets is None
            else [[str(v) for v in s] for s in report.max_sets]
        ),
    }
    if spec.ext > 1:
        ext_report = independence_of_extension(spec)
        record["t"] = str(ext_report.t)
        record["t2"] = str(ext_report.t2)
        record["case"] = ext_report.case
        record["simple_t"] = str(report.t)
        record["simple_t2"] = str(report.t2)
        record["max_class_sets"] = []
        record["max_sets"] = None
    return record
