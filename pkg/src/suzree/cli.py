"""Command line interface.

Exit codes: 0 success, 1 verification discrepancy or failed report row,
2 usage error, 3 factoring budget exhausted, 4 adjacency data rejected.
"""

from __future__ import annotations

import argparse
import json
import multiprocessing
import sys
from typing import Any

from suzree.arith import DEFAULT_BUDGET, BudgetExceeded
from suzree.aurifeuille import Family, Sign, Verdict, verify_psi_ppd
from suzree.cyclotomic import (
    primitive_part,
    primitive_prime_divisors,
    zsigmondy_exists,
)
from suzree.primegraph import (
    DataValidationError,
    GroupSpec,
    build_gk,
    independence_number,
    independence_of_extension,
    to_dot,
)
from suzree.report import (
    SWEEP_LIMITS,
    build_report_document,
    graph_record,
    render_json,
    write_report,
)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3
EXIT_DATA = 4


class UsageError(Exception):
    """Bad argument values caught after argparse."""


def _parse_m_spec(text: str) -> list[int]:
    """Accept a single odd index or an inclusive range "a..b"."""
    try:
        if ".." in text:
            lo_text, hi_text = text.split("..", 1)
            lo, hi = int(lo_text), int(hi_text)
        else:
            lo = hi = int(text)
    except ValueError:
        raise UsageError(f"cannot parse m value {text!r}") from None
    if lo % 2 == 0 or hi % 2 == 0:
        raise UsageError(
            f"even m in {text!r}: the torus index is always odd here"
        )
    if lo < 3:
        raise UsageError("m must be at least 3")
    if hi < lo:
        raise UsageError(f"empty range {text!r}")
    return list(range(lo, hi + 1, 2))


def _parse_families(text: str) -> list[Family]:
    if text == "all":
        return list(Family)
    out = []
    for chunk in text.split(","):
        try:
            out.append(Family.from_name(chunk))
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    return out


def _parse_eps(text: str) -> list[Sign]:
    normalized = {"plus": "+", "minus": "-"}.get(text, text)
    if normalized == "both":
        return [Sign.PLUS, Sign.MINUS]
    try:
        return [Sign(normalized)]
    except ValueError:
        raise UsageError(f"unknown sign {text!r}") from None


def _emit_json(payload: dict[str, Any]) -> None:
    sys.stdout.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")


def cmd_ppd(ns: argparse.Namespace) -> int:
    if ns.q < 2:
        raise UsageError("q must be at least 2")
    if ns.m < 3:
        raise UsageError("m must be at least 3")
    k = primitive_part(ns.m, ns.q)
    exception = k == 1
    assert exception == (not zsigmondy_exists(ns.m, ns.q))
    ppds: list[int] | None = None
    if ns.factor:
        try:
            ppds = sorted(primitive_prime_divisors(ns.m, ns.q, budget=ns.budget))
        except BudgetExceeded as exc:
            print(
                "factoring budget exhausted; unfactored: "
                + ", ".join(str(u) for u in exc.unfactored),
                file=sys.stderr,
            )
            return EXIT_BUDGET
    if ns.json:
        payload: dict[str, Any] = {
            "q": str(ns.q),
            "m": str(ns.m),
            "primitive_part": str(k),
            "zsigmondy_exception": exception,
        }
        if ppds is not None:
            payload["ppds"] = [str(p) for p in ppds]
        _emit_json(payload)
    else:
        print(f"primitive part of Phi_{ns.m}({ns.q}): {k}")
        if exception:
            print("note: no primitive prime divisors (Zsigmondy exception)")
        if ppds is not None:
            print("ppds: " + (", ".join(str(p) for p in ppds) or "none"))
    return EXIT_OK


def _verify_worker(args: tuple[str, int, str, bool, int]) -> Verdict:
    family_key, m, sign_key, witness, budget = args
    return verify_psi_ppd(
        Family(family_key), m, Sign(sign_key),
        want_witness=witness, budget=budget,
    )


def _verdict_line(v: Verdict) -> str:
    parts = [f"{v.family.value} m={v.m} eps={v.sign.value} gcd={v.gcd}"]
    parts.append("holds" if v.holds else "fails")
    if v.witness is not None:
        parts.append(f"witness={v.witness}")
    if v.known_exception and not v.holds:
        parts.append("(known exception)")
    return " ".join(parts)


def cmd_verify(ns: argparse.Namespace) -> int:
    families = _parse_families(ns.family)
    signs = _parse_eps(ns.eps)
    tasks = []
    for family in families:
        ms = (
            _parse_m_spec(ns.m)
            if ns.m is not None
            else list(range(3, SWEEP_LIMITS[family] + 1, 2))
        )
        for m in ms:
            for sign in signs:
                tasks.append(
                    (family.value, m, sign.value, ns.witness, ns.budget)
                )
    if ns.workers > 1:
        with multiprocessing.Pool(ns.workers) as pool:
            verdicts = pool.map(_verify_worker, tasks, chunksize=16)
    else:
        verdicts = [_verify_worker(t) for t in tasks]
    ok = all(v.holds or v.known_exception for v in verdicts)
    if ns.json:
        records = []
        for v in verdicts:
            record: dict[str, Any] = {
                "family": v.family.value,
                "m": str(v.m),
                "eps": v.sign.value,
                "holds": v.holds,
                "gcd": str(v.gcd),
                "known_exception": v.known_exception,
            }
            if v.witness is not None:
                record["witness"] = str(v.witness)
            records.append(record)
        _emit_json({"records": records, "ok": ok})
    else:
        for v in verdicts:
            print(_verdict_line(v))
        held = sum(1 for v in verdicts if v.holds)
        known = sum(1 for v in verdicts if not v.holds and v.known_exception)
        bad = len(verdicts) - held - known
        print(
            f"verified {len(verdicts)} records: {held} hold, "
            f"{known} known exceptions, {bad} unexplained failures"
        )
    return EXIT_OK if ok else EXIT_FAIL


def cmd_graph(ns: argparse.Namespace) -> int:
    families = _parse_families(ns.family)
    if len(families) != 1:
        raise UsageError("graph takes exactly one family")
    ms = _parse_m_spec(ns.m)
    if len(ms) != 1:
        raise UsageError("graph takes a single m, not a range")
    try:
        spec = GroupSpec(families[0], ms[0], ext=ns.ext)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if ns.json:
        _emit_json(graph_record(spec, budget=ns.budget, data_path=ns.data))
        return EXIT_OK
    graph = build_gk(
        GroupSpec(spec.family, spec.m), budget=ns.budget, data_path=ns.data
    )
    report = independence_number(graph)
    if ns.dot:
        sys.stdout.write(to_dot(graph, report))
        return EXIT_OK
    print(f"family {spec.family.value}, m={spec.m}, "
          f"q={spec.family.char}^{spec.m}")
    for cls in graph.classes:
        members = ", ".join(str(v) for v in cls.vertices)
        print(f"  {cls.label}: {cls.defining} = {{{members}}}")
    edges = graph.edges()
    if edges:
        print("edges: " + "; ".join(f"{p} -- {r}" for p, r in edges))
    else:
        print("edges: none")
    if spec.ext > 1:
        ext_report = independence_of_extension(spec)
        print(
            f"extension degree {spec.ext}: t={ext_report.t} "
            f"t2={ext_report.t2} case={ext_report.case}"
        )
    else:
        print(f"t={report.t}, t2={report.t2}")
        for vertex_set in report.max_sets:
            print("max independent set: {"
                  + ", ".join(str(v) for v in vertex_set) + "}")
    return EXIT_OK


def cmd_report(ns: argparse.Namespace) -> int:
    doc = build_report_document(workers=ns.workers, budget=ns.budget)
    paths = write_report(doc, ns.out, with_figures=not ns.no_figures)
    if ns.json:
        sys.stdout.write(render_json(doc))
    else:
        for path in paths:
            print(f"wrote {path}")
        summary = doc["summary"]
        print(
            f"report: {'PASS' if summary['pass'] else 'FAIL'} "
            f"({summary['fail_count']} failing rows)"
        )
    return EXIT_OK if doc["summary"]["pass"] else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--json", action="store_true",
                        default=argparse.SUPPRESS,
                        help="emit canonical JSON instead of text")
    shared.add_argument("--budget", type=int, default=argparse.SUPPRESS,
                        metavar="N", help="factoring work budget per integer")
    shared.add_argument("--workers", type=int, default=argparse.SUPPRESS,
                        metavar="N",
                        help="parallel workers for sweeps (output-identical)")
    shared.add_argument("--data", default=argparse.SUPPRESS, metavar="FILE",
                        help="alternative adjacency data file")

    parser = argparse.ArgumentParser(
        prog="suzree",
        description="Primitive prime divisors, torus factor splittings, and "
                    "prime graphs for the three twisted families.",
        parents=[shared],
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_ppd = sub.add_parser(
        "ppd", parents=[shared],
        help="primitive part and primitive prime divisors of Phi_m(q)",
    )
    p_ppd.add_argument("q", type=int)
    p_ppd.add_argument("m", type=int)
    p_ppd.add_argument("--factor", action="store_true",
                       help="factor the primitive part into ppds")
    p_ppd.set_defaults(func=cmd_ppd)

    p_verify = sub.add_parser(
        "verify", parents=[shared],
        help="check which sign of the torus factor carries a ppd",
    )
    p_verify.add_argument("--family", default="all",
                          help="sz, g2 (alias ree), f4, a comma list, or all")
    p_verify.add_argument("--m", default=None,
                          help="odd index or inclusive range a..b")
    p_verify.add_argument("--eps", default="both",
                          help="+, -, or both")
    p_verify.add_argument("--witness", action="store_true",
                          help="also report the smallest witnessing prime")
    p_verify.set_defaults(func=cmd_verify)

    p_graph = sub.add_parser(
        "graph", parents=[shared],
        help="prime graph, its independence numbers, or the extension case",
    )
    p_graph.add_argument("--family", required=True)
    p_graph.add_argument("--m", required=True)
    p_graph.add_argument("--ext", type=int, default=1,
                         help="field-automorphism extension degree")
    p_graph.add_argument("--dot", action="store_true",
                         help="emit Graphviz DOT")
    p_graph.set_defaults(func=cmd_graph)

    p_report = sub.add_parser(
        "report", parents=[shared],
        help="full verification document, CSV tables, and figures",
    )
    p_report.add_argument("--out", default="suzree-report", metavar="DIR")
    p_report.add_argument("--no-figures", action="store_true")
    p_report.set_defaults(func=cmd_report)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    ns.json = getattr(ns, "json", False)
    ns.budget = getattr(ns, "budget", DEFAULT_BUDGET)
    ns.workers = getattr(ns, "workers", 1)
    ns.data = getattr(ns, "data", None)
    if ns.budget < 1:
        print("error: budget must be positive", file=sys.stderr)
        return EXIT_USAGE
    if ns.workers < 1:
        print("error: workers must be positive", file=sys.stderr)
        return EXIT_USAGE
    try:
        return ns.func(ns)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DataValidationError as exc:
        print(f"error: adjacency data rejected: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
