"""Generators for the worked examples and parameterized families, plus
exhaustive/sampled enumeration of small tree algebras for sweep testing."""

from __future__ import annotations

import heapq
import itertools
import random

from .algebra import (Arrow, BoundQuiverAlgebra, Quiver, RelationSet, serialize,
                      validate)


def _algebra(vertices: list[int], arrows: list[tuple[str, int, int]],
             relations: list[tuple[str, ...]]) -> BoundQuiverAlgebra:
    quiver = Quiver(tuple(sorted(vertices)), tuple(Arrow(*a) for a in arrows))
    alg = BoundQuiverAlgebra(quiver, RelationSet(tuple(relations)))
    return validate(alg)


def linear_algebra(n: int, orientation: str | None = None,
                   relations: list[tuple[str, ...]] | None = None) -> BoundQuiverAlgebra:
    """Line on n vertices.  orientation is a string of '>'/'<' per edge
    (default all '>'), edge i joining vertices i and i+1 via arrow a<i>."""
    if n < 1:
        raise ValueError("need at least one vertex")
    orientation = orientation or ">" * (n - 1)
    if len(orientation) != n - 1 or any(c not in "><" for c in orientation):
        raise ValueError("orientation must be '>'/'<' per edge")
    arrows = []
    for i, c in enumerate(orientation, start=1):
        src, tgt = (i, i + 1) if c == ">" else (i + 1, i)
        arrows.append((f"a{i}", src, tgt))
    return _algebra(list(range(1, n + 1)), arrows, relations or [])


def fork_algebra(n: int, orientation: str | None = None,
                 relations: list[tuple[str, ...]] | str = "auto") -> BoundQuiverAlgebra:
    """Fork-ended line on n >= 4 vertices: prongs 1 and 2 joined to 3, then a
    line 3..n.  Arrows a1: 1-3, a2: 2-3, a<i>: i-(i+1) for i >= 3; orientation
    one '>'/'<' per arrow in that order ('>' points toward the larger-numbered
    end).  relations='auto' inserts one zero relation at the branching vertex
    when its degrees require it."""
    if n < 4:
        raise ValueError("fork shape needs at least 4 vertices")
    orientation = orientation or ">" * (n - 1)
    if len(orientation) != n - 1 or any(c not in "><" for c in orientation):
        raise ValueError("orientation must be '>'/'<' per arrow")
    arrows = []
    for k, (lo, hi) in enumerate([(1, 3), (2, 3)] + [(i, i + 1) for i in range(3, n)]):
        src, tgt = (lo, hi) if orientation[k] == ">" else (hi, lo)
        arrows.append((f"a{k + 1}", src, tgt))

    if relations == "auto":
        relations = _auto_branch_relations(arrows)
    return _algebra(list(range(1, n + 1)), arrows, list(relations))


def _auto_branch_relations(arrows: list[tuple[str, int, int]]) -> list[tuple[str, ...]]:
    """One zero relation per forced branching condition, first arrow names
    winning ties."""
    rels: list[tuple[str, ...]] = []
    by_target: dict[int, list[str]] = {}
    by_source: dict[int, list[str]] = {}
    for name, s, t in arrows:
        by_source.setdefault(s, []).append(name)
        by_target.setdefault(t, []).append(name)
    verts = {s for _, s, _ in arrows} | {t for _, _, t in arrows}
    for v in sorted(verts):
        ins = sorted(by_target.get(v, []))
        outs = sorted(by_source.get(v, []))
        if len(ins) == 2 and outs:
            for g in outs:
                rels.append((ins[0], g))
        if len(outs) == 2 and ins:
            for g in ins:
                rels.append((g, outs[0]))
    return sorted(set(rels))


def crossing6_algebra() -> BoundQuiverAlgebra:
    """Six vertices around one crossing: 1 -> 3 <- 2, 3 -> 4, 3 -> 5 <- 6,
    with the straight-through compositions killed."""
    return _algebra(
        [1, 2, 3, 4, 5, 6],
        [("a1", 1, 3), ("a2", 2, 3), ("a3", 3, 4), ("a4", 3, 5), ("a5", 6, 5)],
        [("a1", "a3"), ("a2", "a4")])


def zigzag4_algebra() -> BoundQuiverAlgebra:
    """1 -> 2 <- 3 -> 4, no relations."""
    return _algebra([1, 2, 3, 4],
                    [("a1", 1, 2), ("a2", 3, 2), ("a3", 3, 4)], [])


def fan5_algebra(variant: str = "both") -> BoundQuiverAlgebra:
    """Five vertices: 3 fans out to 1 and 2, fed by 4, which also feeds 5.
    variant 'both' kills both compositions through 3, 'one' only the first."""
    rels = {"both": [("a3", "a1"), ("a3", "a2")], "one": [("a3", "a1")]}
    if variant not in rels:
        raise ValueError("variant must be 'both' or 'one'")
    return _algebra(
        [1, 2, 3, 4, 5],
        [("a1", 3, 1), ("a2", 3, 2), ("a3", 4, 3), ("a4", 4, 5)],
        rels[variant])


def crossing_tree_algebra(levels: int) -> BoundQuiverAlgebra:
    """Tree of crossings: level 0 is a single vertex; each level completes
    every current leaf to a two-in two-out crossing by attaching three fresh
    leaves (four at the first level).  All length-two paths are relations.
    The vertex count at level k is 2 * 3^k - 1."""
    if levels < 0:
        raise ValueError("levels must be non-negative")
    vertices = [1]
    arrows: list[tuple[str, int, int]] = []
    in_deg = {1: 0}
    out_deg = {1: 0}
    frontier = [1]
    next_vertex = 2
    next_arrow = 1

    def attach(child_src: int | None, child_tgt: int | None) -> None:
        nonlocal next_vertex, next_arrow
        v = next_vertex
        next_vertex += 1
        vertices.append(v)
        in_deg[v] = 0
        out_deg[v] = 0
        if child_src is not None:
            arrows.append((f"a{next_arrow}", v, child_src))
            out_deg[v] += 1
            in_deg[child_src] += 1
        else:
            arrows.append((f"a{next_arrow}", child_tgt, v))
            in_deg[v] += 1
            out_deg[child_tgt] += 1
        next_arrow += 1

    for _ in range(levels):
        new_frontier_start = next_vertex
        for leaf in frontier:
            while in_deg[leaf] < 2:
                attach(leaf, None)
            while out_deg[leaf] < 2:
                attach(None, leaf)
        frontier = list(range(new_frontier_start, next_vertex))

    rels = _all_length_two_paths(arrows)
    return _algebra(vertices, arrows, rels)


def _all_length_two_paths(arrows: list[tuple[str, int, int]]) -> list[tuple[str, ...]]:
    by_source: dict[int, list[str]] = {}
    for name, s, _ in arrows:
        by_source.setdefault(s, []).append(name)
    out = []
    for name, _, t in arrows:
        for nxt in by_source.get(t, []):
            out.append((name, nxt))
    return sorted(out)


# --------------------------------------------------------------------------
# enumeration and sampling of small tree algebras

def _prufer_trees(n: int):
    """All labeled trees on vertices 1..n as edge lists (undirected)."""
    if n == 1:
        yield []
        return
    if n == 2:
        yield [(1, 2)]
        return
    for seq in itertools.product(range(1, n + 1), repeat=n - 2):
        yield _tree_from_prufer(list(seq), n)


def _tree_from_prufer(seq: list[int], n: int) -> list[tuple[int, int]]:
    degree = {v: 1 for v in range(1, n + 1)}
    for v in seq:
        degree[v] += 1
    leaves = [v for v in range(1, n + 1) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for v in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return edges


def _directed_paths(arrows: list[tuple[str, int, int]]) -> list[tuple[str, ...]]:
    """All composable directed paths of length >= 2."""
    by_source: dict[int, list[tuple[str, int]]] = {}
    for name, s, t in arrows:
        by_source.setdefault(s, []).append((name, t))
    paths: list[tuple[str, ...]] = []

    def grow(path: list[str], end: int) -> None:
        if len(path) >= 2:
            paths.append(tuple(path))
        for name, t in by_source.get(end, []):
            grow(path + [name], t)

    for name, _, t in arrows:
        grow([name], t)
    return sorted(paths, key=lambda p: (len(p), p))


def _antichains(paths: list[tuple[str, ...]]):
    """All subsets in which no path contains another as a consecutive run."""
    def contains(long: tuple[str, ...], short: tuple[str, ...]) -> bool:
        return any(long[i:i + len(short)] == short
                   for i in range(len(long) - len(short) + 1))

    for r in range(len(paths) + 1):
        for combo in itertools.combinations(paths, r):
            ok = True
            for a, b in itertools.permutations(combo, 2):
                if len(a) > len(b) and contains(a, b):
                    ok = False
                    break
            if ok:
                yield list(combo)


def iter_tree_algebras(n: int):
    """Every validated string algebra on a labeled tree with n vertices: all
    trees, all orientations, all reduced monomial relation sets."""
    for edges in _prufer_trees(n):
        for mask in itertools.product((0, 1), repeat=len(edges)):
            arrows = []
            for k, ((u, w), flip) in enumerate(zip(edges, mask), start=1):
                s, t = (u, w) if not flip else (w, u)
                arrows.append((f"a{k}", s, t))
            paths = _directed_paths(arrows)
            for rels in _antichains(paths):
                alg = _algebra(list(range(1, n + 1)), arrows, rels)
                if alg.is_valid:
                    yield alg


def random_tree_algebra(rng: random.Random, n: int) -> BoundQuiverAlgebra:
    """One validated algebra on n vertices, uniform-ish: random labeled tree,
    random orientation, random admissible relation antichain (rejection
    sampled until valid)."""
    while True:
        seq = [rng.randint(1, n) for _ in range(n - 2)] if n > 2 else []
        edges = _tree_from_prufer(seq, n) if n > 2 else [(1, 2)]
        arrows = []
        for k, (u, w) in enumerate(edges, start=1):
            s, t = (u, w) if rng.random() < 0.5 else (w, u)
            arrows.append((f"a{k}", s, t))
        paths = _directed_paths(arrows)
        rng.shuffle(paths)
        rels: list[tuple[str, ...]] = []
        for p in paths:
            if rng.random() < 0.5:
                partial = rels + [p]
                if not _violates_antichain(partial):
                    rels.append(p)
        alg = _algebra(list(range(1, n + 1)), arrows, rels)
        if alg.is_valid:
            return alg


def _violates_antichain(paths: list[tuple[str, ...]]) -> bool:
    def contains(long, short):
        return any(long[i:i + len(short)] == short
                   for i in range(len(long) - len(short) + 1))
    for a, b in itertools.permutations(paths, 2):
        if len(a) > len(b) and contains(a, b):
            return True
    return False


GENERATORS = {
    "crossing6": lambda **kw: crossing6_algebra(),
    "zigzag4": lambda **kw: zigzag4_algebra(),
    "fan5": lambda variant="both", **kw: fan5_algebra(variant),
    "crossing-tree": lambda levels=1, **kw: crossing_tree_algebra(int(levels)),
    "line": lambda n=4, orientation=None, **kw: linear_algebra(int(n), orientation),
    "fork": lambda n=5, orientation=None, **kw: fork_algebra(int(n), orientation),
}


def generate_example(name: str, **params) -> str:
    if name not in GENERATORS:
        raise ValueError(f"unknown example {name!r}; choose from {sorted(GENERATORS)}")
    alg = GENERATORS[name](**params)
    return serialize(alg)
