import pytest
from hypothesis import given, settings, strategies as st

from stringdet import parse_algebra, path_in_ideal, serialize, validate
from stringdet.algebra import ParseError, RelationReductionWarning
from stringdet.families import crossing6_algebra, random_tree_algebra
import random


ZIGZAG = """\
# 1 -> 2 <- 3 -> 4
vertices: 4
arrow a1: 1 -> 2
arrow a2: 3 -> 2
arrow a3: 3 -> 4
"""

CROSSING6 = """\
vertices: 6
arrow a1: 1 -> 3
arrow a2: 2 -> 3
arrow a3: 3 -> 4
arrow a4: 3 -> 5
arrow a5: 6 -> 5
relation: a1 a3
relation: a2 a4
"""


def test_parse_zigzag():
    alg = parse_algebra(ZIGZAG)
    assert alg.quiver.vertices == (1, 2, 3, 4)
    assert len(alg.quiver.arrows) == 3
    assert alg.relations.generators == ()
    assert alg.certificate is None


def test_parse_crossing6():
    alg = parse_algebra(CROSSING6)
    assert len(alg.quiver.vertices) == 6
    assert len(alg.quiver.arrows) == 5
    assert alg.relations.generators == (("a1", "a3"), ("a2", "a4"))


def test_parse_empty_document():
    with pytest.raises(ParseError):
        parse_algebra("")
    with pytest.raises(ParseError):
        parse_algebra("# only a comment\n")


def test_parse_errors():
    with pytest.raises(ParseError, match="unknown vertex"):
        parse_algebra("vertices: 2\narrow a: 1 -> 5\n")
    with pytest.raises(ParseError, match="unknown arrow"):
        parse_algebra("vertices: 2\narrow a: 1 -> 2\nrelation: a b\n")
    with pytest.raises(ParseError, match="not composable"):
        parse_algebra("vertices: 3\narrow a: 1 -> 2\narrow b: 3 -> 2\nrelation: a b\n")
    with pytest.raises(ParseError, match="duplicate arrow"):
        parse_algebra("vertices: 2\narrow a: 1 -> 2\narrow a: 2 -> 1\n")
    with pytest.raises(ParseError, match="at least two"):
        parse_algebra("vertices: 2\narrow a: 1 -> 2\nrelation: a\n")


def test_parse_explicit_vertex_ids():
    alg = parse_algebra("vertices: 2, 7, 9\narrow x: 7 -> 2\narrow y: 7 -> 9\n")
    assert alg.quiver.vertices == (2, 7, 9)


def test_relation_reduction_warns():
    doc = ("vertices: 4\narrow a: 1 -> 2\narrow b: 2 -> 3\narrow c: 3 -> 4\n"
           "relation: a b\nrelation: a b c\n")
    with pytest.warns(RelationReductionWarning):
        alg = parse_algebra(doc)
    assert alg.relations.generators == (("a", "b"),)


def test_validate_crossing6_valid():
    alg = validate(parse_algebra(CROSSING6))
    assert alg.is_valid


def test_validate_zigzag_valid():
    alg = validate(parse_algebra(ZIGZAG))
    assert alg.is_valid


def test_validate_triple_out_star():
    doc = ("vertices: 4\narrow a: 1 -> 2\narrow b: 1 -> 3\narrow c: 1 -> 4\n")
    alg = validate(parse_algebra(doc))
    assert not alg.is_valid
    assert any("out-degree 3" in v for v in alg.certificate.violations)


def test_validate_cycle():
    doc = ("vertices: 3\narrow a: 1 -> 2\narrow b: 2 -> 3\narrow c: 3 -> 1\n")
    alg = validate(parse_algebra(doc))
    assert not alg.is_valid
    assert any("tree" in v for v in alg.certificate.violations)


def test_validate_missing_branch_relation():
    # two in, one out, no relation: branching condition fails
    doc = ("vertices: 4\narrow a: 1 -> 3\narrow b: 2 -> 3\narrow c: 3 -> 4\n")
    alg = validate(parse_algebra(doc))
    assert not alg.is_valid
    assert any("needs a zero relation" in v for v in alg.certificate.violations)


def test_path_in_ideal():
    alg = validate(parse_algebra(CROSSING6))
    assert path_in_ideal(alg, ("a1", "a3"))
    assert not path_in_ideal(alg, ("a1",))
    with pytest.raises(ValueError):
        path_in_ideal(alg, ("a1", "a5"))


def test_path_in_ideal_longer_path():
    doc = ("vertices: 4\narrow a1: 1 -> 2\narrow a3: 2 -> 3\narrow a5: 3 -> 4\n"
           "relation: a1 a3\n")
    alg = validate(parse_algebra(doc))
    assert path_in_ideal(alg, ("a1", "a3", "a5"))
    assert not path_in_ideal(alg, ("a3", "a5"))


def test_serialize_round_trip():
    alg = validate(parse_algebra(CROSSING6))
    doc = serialize(alg)
    again = parse_algebra(doc)
    assert serialize(again) == doc
    assert again.quiver == alg.quiver
    assert again.relations == alg.relations


def test_degree_bound_for_valid():
    alg = crossing6_algebra()
    q = alg.quiver
    assert len(q.arrows) == len(q.vertices) - 1
    assert all(q.in_degree(v) + q.out_degree(v) <= 4 for v in q.vertices)


@settings(max_examples=40, deadline=None)
@given(seed=st.integers(0, 10**9), n=st.integers(2, 6))
def test_round_trip_random(seed, n):
    alg = random_tree_algebra(random.Random(seed), n)
    doc = serialize(alg)
    parsed = parse_algebra(doc)
    assert serialize(parsed) == doc
    normalized = parse_algebra(serialize(parsed))
    assert normalized == parsed


@settings(max_examples=30, deadline=None)
@given(seed=st.integers(0, 10**9), n=st.integers(2, 6))
def test_ideal_membership_monotone(seed, n):
    alg = random_tree_algebra(random.Random(seed), n)
    for gen in alg.relations.generators:
        assert path_in_ideal(alg, gen)
        # extend the generator while staying composable: membership persists
        amap = alg.quiver.arrow_map
        last = amap[gen[-1]]
        for a in alg.quiver.out_arrows(last.target):
            assert path_in_ideal(alg, gen + (a.name,))


@settings(max_examples=40, deadline=None)
@given(seed=st.integers(0, 10**9), n=st.integers(2, 7))
def test_relation_free_valid_is_path_graph(seed, n):
    rng = random.Random(seed)
    for _ in range(20):
        alg = random_tree_algebra(rng, n)
        if alg.relations.is_empty:
            assert all(len(alg.quiver.neighbours(v)) <= 2 for v in alg.quiver.vertices)
            return
