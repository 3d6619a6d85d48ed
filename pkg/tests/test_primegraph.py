import json
import math

import pytest

from suzree.arith import BudgetExceeded, factorize
from suzree.aurifeuille import Family, Sign, psi_eval
from suzree.primegraph import (
    DataValidationError,
    GKGraph,
    GroupSpec,
    IndependenceReport,
    build_gk,
    group_order,
    independence_number,
    independence_of_extension,
    independence_with_vertex,
    load_adjacency,
    pi_of_group,
    to_dot,
)


def classes_as_dict(graph):
    return {c.label: set(c.vertices) for c in graph.classes}


def test_group_spec_validation():
    GroupSpec(Family.SUZUKI, 5)
    GroupSpec(Family.REE_G2, 9, ext=3)
    with pytest.raises(ValueError):
        GroupSpec(Family.SUZUKI, 4)
    with pytest.raises(ValueError):
        GroupSpec(Family.SUZUKI, 1)
    with pytest.raises(ValueError):
        GroupSpec(Family.SUZUKI, 9, ext=2)
    with pytest.raises(ValueError):
        GroupSpec(Family.SUZUKI, 9, ext=5)


def test_group_order_small_values():
    # |Sz(8)| = 29120 = 2^6 * 5 * 7 * 13
    assert group_order(Family.SUZUKI, 3) == 29120
    assert factorize(29120).to_dict() == {2: 6, 5: 1, 7: 1, 13: 1}
    # |2G2(27)| = 27^3 * (27^3 + 1) * 26
    assert group_order(Family.REE_G2, 3) == 27**3 * 19684 * 26
    assert group_order(Family.REE_F4, 3) % (2**36) == 0


def test_suzuki_graph_m5():
    graph = build_gk(GroupSpec(Family.SUZUKI, 5))
    assert classes_as_dict(graph) == {
        "CHAR": {2},
        "R1": {31},
        "R4P": {41},
        "R4M": {5},
    }
    assert graph.class_adj == frozenset()
    assert graph.edges() == ()
    report = independence_number(graph)
    assert (report.t, report.t2) == (4, 4)
    assert report.max_class_sets == (("CHAR", "R1", "R4P", "R4M"),)
    assert report.max_sets == ((2, 5, 31, 41),)


def test_suzuki_graph_m7():
    graph = build_gk(GroupSpec(Family.SUZUKI, 7))
    assert classes_as_dict(graph) == {
        "CHAR": {2},
        "R1": {127},
        "R4P": {5, 29},
        "R4M": {113},
    }
    # four mutually disconnected cliques; the only edge is inside R4P
    assert graph.class_adj == frozenset()
    assert graph.edges() == ((5, 29),)
    assert graph.adjacent(5, 29)
    assert not graph.adjacent(2, 127)
    report = independence_number(graph)
    assert (report.t, report.t2) == (4, 4)
    assert report.max_sets == ((2, 5, 113, 127), (2, 29, 113, 127))


def test_ree_g2_graph_m3():
    graph = build_gk(GroupSpec(Family.REE_G2, 3))
    assert classes_as_dict(graph) == {
        "CHAR": {3},
        "TWO": {2},
        "R1": {13},
        "R2": {7},
        "R6P": {37},
        "R6M": {19},
    }
    assert graph.adjacent(2, 3)
    assert graph.adjacent(2, 13)
    assert graph.adjacent(2, 7)
    assert not graph.adjacent(2, 37)
    assert not graph.adjacent(3, 13)
    report = independence_number(graph)
    assert (report.t, report.t2) == (5, 3)
    assert report.max_class_sets == (("CHAR", "R1", "R2", "R6P", "R6M"),)
    assert report.max_sets == ((3, 7, 13, 19, 37),)
    assert independence_with_vertex(graph, 2) == 3


def test_ree_f4_graph_m3():
    graph = build_gk(GroupSpec(Family.REE_F4, 3))
    # (q + 1)/3 = 3 collapses into the THREE singleton, so no R2 class
    assert classes_as_dict(graph) == {
        "CHAR": {2},
        "THREE": {3},
        "R1": {7},
        "R4": {5, 13},
        "R6": {19},
        "R12P": {109},
        "R12M": {37},
    }
    vertices = set(graph.vertices())
    assert {2, 3, 5, 7, 13, 19, 37, 109} == vertices
    independent = {2, 19, 37, 109}
    for p in independent:
        for r in independent:
            assert not graph.adjacent(p, r)
    report = independence_number(graph)
    assert (report.t, report.t2) == (4, 4)
    assert (2, 19, 37, 109) in report.max_sets
    assert len(report.max_sets) == 6


def test_ree_f4_graph_m5():
    graph = build_gk(GroupSpec(Family.REE_F4, 5))
    report = independence_number(graph)
    assert (report.t, report.t2) == (5, 4)
    assert report.max_class_sets == (("R2", "R4", "R6", "R12P", "R12M"),)
    assert independence_with_vertex(graph, 2) == 4


@pytest.mark.parametrize("family,expected", [
    (Family.SUZUKI, (4, 4)),
    (Family.REE_G2, (5, 3)),
    (Family.REE_F4, (5, 4)),
])
def test_independence_grid(family, expected):
    for m in range(5, 100, 2):
        if family is not Family.SUZUKI and m % 3 == 0:
            # graphs exist for these m too; only the class content changes
            pass
        graph = build_gk(GroupSpec(family, m), budget=20_000)
        report = independence_number(graph)
        assert (report.t, report.t2) == expected, (family, m)


def test_suzuki_m3_graph():
    graph = build_gk(GroupSpec(Family.SUZUKI, 3))
    assert classes_as_dict(graph) == {
        "CHAR": {2},
        "R1": {7},
        "R4P": {13},
        "R4M": {5},
    }
    report = independence_number(graph)
    assert (report.t, report.t2) == (4, 4)


def test_max_set_shapes():
    for m in (5, 7, 11, 13):
        report = independence_number(build_gk(GroupSpec(Family.SUZUKI, m)))
        assert report.max_class_sets == (("CHAR", "R1", "R4P", "R4M"),)
        report = independence_number(build_gk(GroupSpec(Family.REE_G2, m)))
        assert report.max_class_sets == (("CHAR", "R1", "R2", "R6P", "R6M"),)
    for m in (5, 7, 11, 13):
        report = independence_number(build_gk(GroupSpec(Family.REE_F4, m)))
        assert report.max_class_sets == (("R2", "R4", "R6", "R12P", "R12M"),)


def test_class_defining_integers_coprime():
    for family in Family:
        for m in (3, 5, 7, 9, 11):
            graph = build_gk(GroupSpec(family, m))
            defs = [c.defining for c in graph.classes]
            for i, a in enumerate(defs):
                for b in defs[i + 1 :]:
                    assert math.gcd(a, b) == 1, (family, m, a, b)


def test_classes_partition_group_primes():
    for family in Family:
        for m in (3, 5, 7):
            graph = build_gk(GroupSpec(family, m))
            order = group_order(family, m)
            from_classes = {p for c in graph.classes for p in c.primes}
            assert from_classes == set(factorize(order).to_dict())


def test_psi_classes_isolated():
    for family in Family:
        for m in (5, 7, 11):
            graph = build_gk(GroupSpec(family, m))
            psi_labels = {
                Family.SUZUKI: ("R4P", "R4M"),
                Family.REE_G2: ("R6P", "R6M"),
                Family.REE_F4: ("R12P", "R12M"),
            }[family]
            for label in psi_labels:
                for other in graph.labels:
                    if other != label:
                        assert not graph.classes_adjacent(label, other)


def test_unfactored_markers_do_not_change_t():
    # Starve the factorizer: the big torus factors stay composite and sit in
    # their class as opaque vertices.
    spec = GroupSpec(Family.SUZUKI, 41)
    tight = build_gk(spec, budget=10)
    assert any(c.unfactored for c in tight.classes)
    report = independence_number(tight)
    assert (report.t, report.t2) == (4, 4)


def test_budget_markers_composite():
    spec = GroupSpec(Family.SUZUKI, 41)
    graph = build_gk(spec, budget=10)
    for c in graph.classes:
        for marker in c.unfactored:
            assert marker > 1
            assert c.defining % marker == 0


def test_pi_of_group():
    assert pi_of_group(GroupSpec(Family.SUZUKI, 5)) == {2, 5, 31, 41}
    assert pi_of_group(GroupSpec(Family.SUZUKI, 3, ext=3)) == {2, 5, 7, 13, 3}
    f4_pi = pi_of_group(GroupSpec(Family.REE_F4, 3))
    assert {2, 3, 5, 7, 13, 19, 37, 109} <= f4_pi


def test_pi_matches_group_order():
    for family in Family:
        for m in (3, 5, 7):
            expected = set(factorize(group_order(family, m)).to_dict())
            assert pi_of_group(GroupSpec(family, m)) == expected


def test_extension_cases():
    assert independence_of_extension(GroupSpec(Family.SUZUKI, 5, ext=5)) == (
        IndependenceReport(t=3, t2=3, case="b", max_sets=None)
    )
    assert independence_of_extension(GroupSpec(Family.SUZUKI, 3, ext=3)) == (
        IndependenceReport(t=4, t2=4, case="a", max_sets=None)
    )
    assert independence_of_extension(GroupSpec(Family.REE_G2, 9, ext=3)) == (
        IndependenceReport(t=4, t2=3, case="d", max_sets=None)
    )
    assert independence_of_extension(GroupSpec(Family.REE_G2, 15, ext=5)) == (
        IndependenceReport(t=5, t2=3, case="a", max_sets=None)
    )
    assert independence_of_extension(GroupSpec(Family.REE_F4, 7, ext=7)) == (
        IndependenceReport(t=6, t2=4, case="c", max_sets=None)
    )
    assert independence_of_extension(GroupSpec(Family.REE_F4, 3, ext=3)) == (
        IndependenceReport(t=4, t2=4, case="a", max_sets=None)
    )
    with pytest.raises(ValueError):
        independence_of_extension(GroupSpec(Family.SUZUKI, 5))


def test_extension_bounds_against_simple_graph():
    cases = [
        (Family.SUZUKI, 5, 5), (Family.SUZUKI, 3, 3), (Family.SUZUKI, 9, 3),
        (Family.REE_G2, 9, 3), (Family.REE_G2, 15, 5), (Family.REE_G2, 15, 15),
        (Family.REE_F4, 7, 7), (Family.REE_F4, 5, 5), (Family.REE_F4, 9, 3),
    ]
    for family, m, ext in cases:
        simple = independence_number(build_gk(GroupSpec(family, m), budget=20_000))
        extended = independence_of_extension(GroupSpec(family, m, ext=ext))
        assert extended.t <= simple.t + 1
        assert extended.t2 <= simple.t2


def test_ree_g2_extension_needs_triple_field_power():
    # ext coprime to 3 keeps the drop from happening even when every prime
    # of ext divides the group order
    report = independence_of_extension(GroupSpec(Family.REE_G2, 35, ext=7))
    assert (report.t, report.case) == (5, "a")
    # 3 | ext but 5 is outside the group: no drop either
    report = independence_of_extension(GroupSpec(Family.REE_G2, 15, ext=15))
    order = group_order(Family.REE_G2, 15)
    assert order % 5 != 0
    assert (report.t, report.case) == (5, "a")


def test_f4_extension_prime_membership():
    # order of 2 mod 7 is 3, which does not divide 12m for m = 7 in the
    # relevant way: 7 is outside pi(L)
    assert group_order(Family.REE_F4, 7) % 7 != 0
    # but 3 always divides |2F4(2^m)|
    assert group_order(Family.REE_F4, 9) % 3 == 0
    report = independence_of_extension(GroupSpec(Family.REE_F4, 9, ext=3))
    assert (report.t, report.t2, report.case) == (5, 4, "a")


def test_load_adjacency_default_is_valid():
    tables = load_adjacency()
    g2 = tables[Family.REE_G2]
    f4 = tables[Family.REE_F4]
    assert frozenset(("TWO", "CHAR")) in g2.pairs
    assert frozenset(("CHAR", "R2")) in f4.pairs
    assert all(p in ("derived", "table") for p in g2.provenance.values())
    assert g2.source and f4.source


def _write_tampered(tmp_path, mutate):
    import suzree.data

    from importlib import resources

    text = resources.files("suzree.data").joinpath("gk_adjacency.json").read_text()
    doc = json.loads(text)
    mutate(doc)
    out = tmp_path / "tampered.json"
    out.write_text(json.dumps(doc))
    return str(out)


def test_load_adjacency_rejects_forbidden_edge(tmp_path):
    def mutate(doc):
        # connect the two Psi classes of g2: bit index of (R6P, R6M)
        doc["families"]["g2"]["bits"][14] = 1

    path = _write_tampered(tmp_path, mutate)
    with pytest.raises(DataValidationError):
        load_adjacency(path)


def test_load_adjacency_rejects_missing_forced_edge(tmp_path):
    def mutate(doc):
        doc["families"]["g2"]["bits"][0] = 0  # drop TWO-CHAR

    path = _write_tampered(tmp_path, mutate)
    with pytest.raises(DataValidationError):
        load_adjacency(path)


def test_load_adjacency_rejects_bad_schema(tmp_path):
    def mutate(doc):
        doc["schema_version"] = "2"

    path = _write_tampered(tmp_path, mutate)
    with pytest.raises(DataValidationError):
        load_adjacency(path)


def test_load_adjacency_rejects_wrong_label_order(tmp_path):
    def mutate(doc):
        doc["families"]["f4"]["labels"] = list(
            reversed(doc["families"]["f4"]["labels"])
        )

    path = _write_tampered(tmp_path, mutate)
    with pytest.raises(DataValidationError):
        load_adjacency(path)


def test_load_adjacency_rejects_short_bits(tmp_path):
    def mutate(doc):
        doc["families"]["f4"]["bits"] = doc["families"]["f4"]["bits"][:-1]

    path = _write_tampered(tmp_path, mutate)
    with pytest.raises(DataValidationError):
        load_adjacency(path)


def test_build_gk_rejects_extension_spec():
    with pytest.raises(ValueError):
        build_gk(GroupSpec(Family.SUZUKI, 9, ext=3))


def test_independence_with_missing_vertex():
    graph = build_gk(GroupSpec(Family.SUZUKI, 5))
    with pytest.raises(ValueError):
        independence_with_vertex(graph, 11)


def test_to_dot_deterministic_and_structured():
    graph = build_gk(GroupSpec(Family.REE_G2, 3))
    report = independence_number(graph)
    dot = to_dot(graph, report)
    assert dot == to_dot(build_gk(GroupSpec(Family.REE_G2, 3)), report)
    assert dot.startswith('graph "g2_m3" {')
    assert "subgraph cluster_R6P" in dot
    assert '"2" -- "3";' in dot
    assert '"t=5, t2=3"' in dot
    assert dot.endswith("}\n")
