import random

import pytest

from stringdet import parse_algebra, serialize, validate
from stringdet.families import (crossing6_algebra, crossing_tree_algebra, fan5_algebra,
                                fork_algebra, generate_example, iter_tree_algebras,
                                linear_algebra, random_tree_algebra, zigzag4_algebra)


def test_fixed_examples_valid():
    for alg in (crossing6_algebra(), zigzag4_algebra(), fan5_algebra("both"),
                fan5_algebra("one"), linear_algebra(5), fork_algebra(5)):
        assert alg.is_valid


def test_crossing_tree_vertex_count():
    for levels in (0, 1, 2, 3):
        alg = crossing_tree_algebra(levels)
        assert alg.is_valid
        assert alg.quiver.vertex_count() == 2 * 3 ** levels - 1


def test_crossing_tree_all_length_two_relations():
    alg = crossing_tree_algebra(2)
    amap = alg.quiver.arrow_map
    expected = sorted(
        (a.name, b.name)
        for a in alg.quiver.arrows for b in alg.quiver.arrows
        if a.target == b.source)
    assert sorted(alg.relations.generators) == expected


def test_generated_documents_reparse():
    for name, params in [("crossing6", {}), ("zigzag4", {}),
                         ("fan5", {"variant": "one"}),
                         ("crossing-tree", {"levels": 2}),
                         ("line", {"n": 6}), ("fork", {"n": 5})]:
        doc = generate_example(name, **params)
        alg = validate(parse_algebra(doc))
        assert alg.is_valid, (name, alg.certificate)
        assert serialize(alg) == doc


def test_generate_example_unknown():
    with pytest.raises(ValueError):
        generate_example("nonesuch")


def test_line_orientation():
    alg = linear_algebra(4, "><>")
    arrows = {a.name: (a.source, a.target) for a in alg.quiver.arrows}
    assert arrows == {"a1": (1, 2), "a2": (3, 2), "a3": (3, 4)}
    assert alg.is_valid


def test_fork_auto_relations():
    alg = fork_algebra(5)
    assert alg.is_valid
    assert alg.relations.generators  # branch vertex forces a relation


def test_iter_tree_algebras_counts():
    assert sum(1 for _ in iter_tree_algebras(2)) == 2
    assert sum(1 for _ in iter_tree_algebras(3)) == 18
    algs4 = list(iter_tree_algebras(4))
    assert len(algs4) == 312
    assert all(a.is_valid for a in algs4)


def test_random_tree_algebra_deterministic():
    a = random_tree_algebra(random.Random(7), 5)
    b = random_tree_algebra(random.Random(7), 5)
    assert serialize(a) == serialize(b)
    assert a.is_valid
