"""Prime graphs of the simple Suzuki and Ree groups.

Vertices are the primes dividing the group order, joined when the group has
an element of order the product.  For these families the graph is organised
by a handful of prime classes (supports of torus-order factors), each of
which is a clique, so independence numbers are computed exactly by
exhaustive search over the class-level graph.

The Suzuki graph is self-computing from the classical element-order
generators.  The two Ree families ship a class-adjacency table in a data
file which is validated, on every load, against all constraints the
independent-set characterizations force.
"""

from __future__ import annotations

import enum
import itertools
import json
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from math import prod

from suzree.arith import DEFAULT_BUDGET, BudgetExceeded, factorize
from suzree.aurifeuille import Family, Sign, psi_eval

SUZUKI_LABELS = ("CHAR", "R1", "R4P", "R4M")
G2_LABELS = ("CHAR", "TWO", "R1", "R2", "R6P", "R6M")
F4_LABELS = ("CHAR", "THREE", "R1", "R2", "R4", "R6", "R12P", "R12M")

EXPANSION_CAP = 200


class DataValidationError(Exception):
    """The adjacency data file is malformed or contradicts a forced constraint."""


@dataclass(frozen=True)
class GroupSpec:
    """A simple group (ext = 1) or its extension by a field automorphism.

    ext = k > 1 selects the unique index-k cyclic extension inside the full
    automorphism group: the outer automorphism group is cyclic of order m,
    so a divisor pins the group down.
    """

    family: Family
    m: int
    ext: int = 1

    def __post_init__(self) -> None:
        if self.m < 3 or self.m % 2 == 0:
            raise ValueError(f"m must be odd and > 1, got {self.m}")
        if self.ext < 1 or self.m % self.ext != 0:
            raise ValueError(f"ext must be a divisor of m, got {self.ext}")

    @property
    def q(self) -> int:
        return self.family.char**self.m


@dataclass(frozen=True)
class PrimeClass:
    """One clique of the prime graph: the support of a torus-order factor.

    ``unfactored`` holds composite cofactors the factorization budget could
    not split; they sit in the class as opaque vertices and never change
    independence numbers, a class contributing at most one vertex to an
    independent set either way.
    """

    label: str
    defining: int
    primes: tuple[int, ...]
    unfactored: tuple[int, ...] = ()

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted(self.primes + self.unfactored))

    @property
    def size(self) -> int:
        return len(self.primes) + len(self.unfactored)


@dataclass(frozen=True)
class GKGraph:
    family: Family
    m: int
    classes: tuple[PrimeClass, ...]
    class_adj: frozenset[frozenset[str]]

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(c.label for c in self.classes)

    def class_by_label(self, label: str) -> PrimeClass:
        for c in self.classes:
            if c.label == label:
                return c
        raise KeyError(label)

    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted(v for c in self.classes for v in c.vertices))

    def class_of(self, vertex: int) -> PrimeClass:
        for c in self.classes:
            if vertex in c.vertices:
                return c
        raise ValueError(f"{vertex} is not a vertex of this graph")

    def classes_adjacent(self, a: str, b: str) -> bool:
        return frozenset((a, b)) in self.class_adj

    def adjacent(self, p: int, r: int) -> bool:
        """Prime-level adjacency: same clique-class, or adjacent classes."""
        if p == r:
            return False
        cp, cr = self.class_of(p), self.class_of(r)
        if cp.label == cr.label:
            return True
        return self.classes_adjacent(cp.label, cr.label)

    def edges(self) -> tuple[tuple[int, int], ...]:
        out = []
        verts = self.vertices()
        for i, p in enumerate(verts):
            for r in verts[i + 1 :]:
                if self.adjacent(p, r):
                    out.append((p, r))
        return tuple(out)


@dataclass(frozen=True)
class IndependenceReport:
    """Independence numbers, witness sets, and the extension case label.

    For a simple group the case is "simple" and witnesses are enumerated:
    ``max_class_sets`` lists every maximum independent set as a tuple of
    class labels, and ``max_sets`` expands them to concrete vertex sets
    unless the expansion would exceed the cap (then None).  Extension
    reports come from the decision procedure and carry no witnesses.
    """

    t: int
    t2: int
    case: str
    max_class_sets: tuple[tuple[str, ...], ...] = ()
    max_sets: tuple[tuple[int, ...], ...] | None = ()


def _support(n: int, budget: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    try:
        return factorize(n, budget).primes(), ()
    except BudgetExceeded as err:
        return tuple(sorted(err.partial)), err.unfactored


def _strip(n: int, removals: tuple[int, ...]) -> int:
    for p in removals:
        while n % p == 0:
            n //= p
    return n


def _make_class(label: str, defining: int, budget: int) -> PrimeClass | None:
    if defining == 1:
        return None
    primes, unfactored = _support(defining, budget)
    return PrimeClass(label, defining, primes, unfactored)


def _class_definitions(family: Family, m: int) -> list[tuple[str, int]]:
    """Label and defining integer per class, removals already applied.

    2 and 3 are kept in singleton classes for the Ree families, so the odd
    torus-order factors are stripped of them; that keeps distinct classes
    coprime and clique-compression sound.
    """
    q = family.char**m
    plus = psi_eval(family, Sign.PLUS, m)
    minus = psi_eval(family, Sign.MINUS, m)
    if family is Family.SUZUKI:
        return [
            ("CHAR", 4),
            ("R1", q - 1),
            ("R4P", plus),
            ("R4M", minus),
        ]
    if family is Family.REE_G2:
        return [
            ("CHAR", 3),
            ("TWO", 2),
            ("R1", _strip(q - 1, (2,))),
            ("R2", _strip(q + 1, (2,))),
            ("R6P", plus),
            ("R6M", minus),
        ]
    return [
        ("CHAR", 2),
        ("THREE", 3),
        ("R1", q - 1),
        ("R2", _strip(q + 1, (3,))),
        ("R4", q * q + 1),
        ("R6", _strip(q * q - q + 1, (3,))),
        ("R12P", plus),
        ("R12M", minus),
    ]


def _suzuki_class_adjacency(
    classes: tuple[PrimeClass, ...], m: int
) -> frozenset[frozenset[str]]:
    """Adjacency generated by the classical element-order set.

    Two vertices are adjacent iff their product divides one of 4, q-1,
    or the two factors of q^2+1; class pairs inherit any vertex-level edge.
    """
    q = 2**m
    spectrum = (4, q - 1, psi_eval(Family.SUZUKI, Sign.PLUS, m),
                psi_eval(Family.SUZUKI, Sign.MINUS, m))
    pairs = set()
    for ca, cb in itertools.combinations(classes, 2):
        hit = any(
            any((a * b) and top % (a * b) == 0 for top in spectrum)
            for a in ca.vertices
            for b in cb.vertices
        )
        if hit:
            pairs.add(frozenset((ca.label, cb.label)))
    return frozenset(pairs)


@dataclass(frozen=True)
class FamilyAdjacency:
    labels: tuple[str, ...]
    pairs: frozenset[frozenset[str]]
    provenance: dict[frozenset, str] = field(hash=False, compare=False, default_factory=dict)
    source: str = ""


def _pair_order(labels: tuple[str, ...]) -> list[tuple[str, str]]:
    return list(itertools.combinations(labels, 2))


_REQUIRED = {
    # (family key) -> (required edges, required non-edges); everything the
    # independent-set characterizations force, re-checked on every load.
    "g2": (
        {("TWO", "CHAR"), ("TWO", "R1"), ("TWO", "R2")},
        {("CHAR", "R1"), ("CHAR", "R2"), ("CHAR", "R6P"), ("CHAR", "R6M"),
         ("R1", "R2"), ("R1", "R6P"), ("R1", "R6M"), ("R2", "R6P"),
         ("R2", "R6M"), ("R6P", "R6M"), ("TWO", "R6P"), ("TWO", "R6M")},
    ),
    "f4": (
        {("CHAR", "R2"), ("CHAR", "R4")},
        {("CHAR", "R6"), ("CHAR", "R12P"), ("CHAR", "R12M"),
         ("R2", "R4"), ("R2", "R6"), ("R2", "R12P"), ("R2", "R12M"),
         ("R4", "R6"), ("R4", "R12P"), ("R4", "R12M"),
         ("R6", "R12P"), ("R6", "R12M"), ("R12P", "R12M"),
         ("THREE", "R12P"), ("THREE", "R12M"),
         ("R1", "R12P"), ("R1", "R12M")},
    ),
}

_EXPECTED_LABELS = {"g2": G2_LABELS, "f4": F4_LABELS}


def _validate_family(key: str, record: object) -> FamilyAdjacency:
    if not isinstance(record, dict):
        raise DataValidationError(f"{key}: record must be an object")
    labels = record.get("labels")
    expected = _EXPECTED_LABELS[key]
    if tuple(labels or ()) != expected:
        raise DataValidationError(
            f"{key}: labels must be {list(expected)}, got {labels}"
        )
    order = _pair_order(expected)
    bits = record.get("bits")
    if not isinstance(bits, list) or len(bits) != len(order):
        raise DataValidationError(
            f"{key}: need {len(order)} adjacency bits, got {bits!r:.60}"
        )
    if any(b not in (0, 1) for b in bits):
        raise DataValidationError(f"{key}: adjacency bits must be 0 or 1")
    provenance_list = record.get("provenance")
    if not isinstance(provenance_list, list) or len(provenance_list) != len(order):
        raise DataValidationError(f"{key}: provenance list must match bit list")
    if any(p not in ("derived", "table") for p in provenance_list):
        raise DataValidationError(f"{key}: provenance must be 'derived' or 'table'")
    pairs = frozenset(
        frozenset(pair) for pair, bit in zip(order, bits) if bit
    )
    required_edges, required_nonedges = _REQUIRED[key]
    for a, b in required_edges:
        if frozenset((a, b)) not in pairs:
            raise DataValidationError(f"{key}: forced edge {a}-{b} is missing")
    for a, b in required_nonedges:
        if frozenset((a, b)) in pairs:
            raise DataValidationError(f"{key}: forbidden edge {a}-{b} is present")
    provenance = {
        frozenset(pair): p for pair, p in zip(order, provenance_list)
    }
    return FamilyAdjacency(
        labels=expected,
        pairs=pairs,
        provenance=provenance,
        source=str(record.get("source", "")),
    )


def _parse_adjacency(text: str) -> dict[Family, FamilyAdjacency]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as err:
        raise DataValidationError(f"adjacency data is not valid JSON: {err}") from err
    if not isinstance(doc, dict) or doc.get("schema_version") != "1":
        raise DataValidationError("adjacency data must declare schema_version '1'")
    families = doc.get("families")
    if not isinstance(families, dict):
        raise DataValidationError("adjacency data must carry a 'families' object")
    out = {}
    for key, fam in (("g2", Family.REE_G2), ("f4", Family.REE_F4)):
        if key not in families:
            raise DataValidationError(f"adjacency data is missing family {key!r}")
        out[fam] = _validate_family(key, families[key])
    return out


@lru_cache(maxsize=8)
def load_adjacency(path: str | None = None) -> dict[Family, FamilyAdjacency]:
    """The validated Ree class-adjacency tables, from ``path`` or the
    packaged data file.  Raises DataValidationError on any defect.
    """
    if path is None:
        text = (
            resources.files("suzree.data")
            .joinpath("gk_adjacency.json")
            .read_text(encoding="utf-8")
        )
    else:
        with open(path, encoding="utf-8") as handle:
            text = handle.read()
    return _parse_adjacency(text)


def build_gk(
    spec: GroupSpec,
    budget: int = DEFAULT_BUDGET,
    data_path: str | None = None,
) -> GKGraph:
    """The prime graph of the simple group named by ``spec`` (ext must be 1)."""
    if spec.ext != 1:
        raise ValueError("build_gk handles the simple group; use the extension evaluator")
    classes = tuple(
        c
        for label, defining in _class_definitions(spec.family, spec.m)
        if (c := _make_class(label, defining, budget)) is not None
    )
    if spec.family is Family.SUZUKI:
        class_adj = _suzuki_class_adjacency(classes, spec.m)
    else:
        table = load_adjacency(data_path)[spec.family]
        present = {c.label for c in classes}
        class_adj = frozenset(p for p in table.pairs if p <= present)
    return GKGraph(spec.family, spec.m, classes, class_adj)


def _independent_class_sets(graph: GKGraph) -> dict[int, list[tuple[str, ...]]]:
    labels = graph.labels
    by_size: dict[int, list[tuple[str, ...]]] = {}
    for r in range(1, len(labels) + 1):
        for combo in itertools.combinations(labels, r):
            ok = all(
                not graph.classes_adjacent(a, b)
                for a, b in itertools.combinations(combo, 2)
            )
            if ok:
                by_size.setdefault(r, []).append(combo)
    return by_size


def _expand(graph: GKGraph, class_sets: list[tuple[str, ...]]):
    total = sum(
        prod(graph.class_by_label(label).size for label in cs)
        for cs in class_sets
    )
    if total > EXPANSION_CAP:
        return None
    out = []
    for cs in class_sets:
        pools = [graph.class_by_label(label).vertices for label in cs]
        for choice in itertools.product(*pools):
            out.append(tuple(sorted(choice)))
    return tuple(sorted(out))


def independence_number(graph: GKGraph) -> IndependenceReport:
    """Exact t and t2 with all maximum independent sets, by exhaustive
    search over the class-level graph (at most 8 classes)."""
    by_size = _independent_class_sets(graph)
    t = max(by_size)
    top = sorted(by_size[t])
    char_label = graph.class_of(2).label
    t2 = max(
        (size for size, sets in by_size.items()
         if any(char_label in cs for cs in sets)),
        default=0,
    )
    return IndependenceReport(
        t=t,
        t2=t2,
        case="simple",
        max_class_sets=tuple(top),
        max_sets=_expand(graph, top),
    )


def independence_with_vertex(graph: GKGraph, vertex: int) -> int:
    """Largest independent set through one vertex (its class, practically)."""
    label = graph.class_of(vertex).label
    by_size = _independent_class_sets(graph)
    return max(
        size
        for size, sets in by_size.items()
        if any(label in cs for cs in sets)
    )


def group_order(family: Family, m: int) -> int:
    """Order of the simple group, from the classical factored formulas."""
    q = family.char**m
    if family is Family.SUZUKI:
        return q**2 * (q**2 + 1) * (q - 1)
    if family is Family.REE_G2:
        return q**3 * (q**3 + 1) * (q - 1)
    return q**12 * (q**6 + 1) * (q**4 - 1) * (q**3 + 1) * (q - 1)


def pi_of_group(spec: GroupSpec, budget: int = DEFAULT_BUDGET) -> frozenset[int]:
    """Primes dividing the group order, including the extension part.

    Budget exhaustion leaves composite cofactors in the result as opaque
    markers; they are composite, not prime, and are documented as such by
    being composite.
    """
    out: set[int] = set()
    for label, defining in _class_definitions(spec.family, spec.m):
        if defining == 1:
            continue
        primes, unfactored = _support(defining, budget)
        out.update(primes)
        out.update(unfactored)
    if spec.ext > 1:
        primes, unfactored = _support(spec.ext, budget)
        out.update(primes)
        out.update(unfactored)
    return frozenset(out)


def _ext_prime_outside_group(spec: GroupSpec) -> bool:
    order = group_order(spec.family, spec.m)
    return any(order % p for p in factorize(spec.ext).primes())


def independence_of_extension(spec: GroupSpec) -> IndependenceReport:
    """Independence numbers of the extension of the simple group by a field
    automorphism of order ext > 1, via the published decision procedure.
    """
    if spec.ext == 1:
        raise ValueError("extension evaluator requires ext > 1")
    family = spec.family
    if family is Family.SUZUKI:
        if spec.m == 5:
            return IndependenceReport(t=3, t2=3, case="b", max_sets=None)
        return IndependenceReport(t=4, t2=4, case="a", max_sets=None)
    if family is Family.REE_G2:
        if spec.ext % 3 == 0 and not _ext_prime_outside_group(spec):
            return IndependenceReport(t=4, t2=3, case="d", max_sets=None)
        return IndependenceReport(t=5, t2=3, case="a", max_sets=None)
    if spec.m == 3:
        return IndependenceReport(t=4, t2=4, case="a", max_sets=None)
    if _ext_prime_outside_group(spec):
        return IndependenceReport(t=6, t2=4, case="c", max_sets=None)
    return IndependenceReport(t=5, t2=4, case="a", max_sets=None)


def to_dot(graph: GKGraph, report: IndependenceReport | None = None) -> str:
    """DOT text: primes as nodes, classes as clusters, deterministic order."""
    lines = [f'graph "{graph.family.value}_m{graph.m}" {{']
    lines.append("  node [shape=ellipse];")
    if report is not None:
        lines.append(f'  label="t={report.t}, t2={report.t2}";')
    for cls in graph.classes:
        lines.append(f"  subgraph cluster_{cls.label} {{")
        lines.append(f'    label="{cls.label}: {cls.defining}";')
        for v in cls.vertices:
            lines.append(f'    "{v}";')
        lines.append("  }")
    for p, r in graph.edges():
        lines.append(f'  "{p}" -- "{r}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
