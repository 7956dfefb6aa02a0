"""Reduced walks on the quiver and their canonical forms.

A walk alternates arrows traversed forwards (direct letters) and backwards
(inverse letters).  On a tree quiver a walk without immediate backtracking is
a simple path, so the walks here are exactly the simple paths whose maximal
same-direction runs avoid the relation ideal.  A walk and its reverse present
the same module; the lexicographically smaller rendering is the canonical
representative.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import BoundQuiverAlgebra, path_in_ideal
from .treewalk import TreeWalk, walk_between


@dataclass(frozen=True)
class Letter:
    arrow: str
    direct: bool


@dataclass(frozen=True)
class StringWalk:
    start: int
    letters: tuple[Letter, ...]

    @property
    def is_trivial(self) -> bool:
        return not self.letters

    def __len__(self) -> int:
        return len(self.letters)

    def rendering(self) -> tuple:
        return tuple((l.arrow, 0 if l.direct else 1) for l in self.letters)

    def render_text(self) -> str:
        if self.is_trivial:
            return f"({self.start})"
        return " ".join(l.arrow if l.direct else l.arrow + "^-" for l in self.letters)


class InvalidStringError(ValueError):
    pass


def _letter_endpoints(algebra: BoundQuiverAlgebra, letter: Letter) -> tuple[int, int]:
    a = algebra.quiver.arrow_map[letter.arrow]
    return (a.source, a.target) if letter.direct else (a.target, a.source)


def walk_vertices(algebra: BoundQuiverAlgebra, s: StringWalk) -> tuple[int, ...]:
    out = [s.start]
    for letter in s.letters:
        frm, to = _letter_endpoints(algebra, letter)
        if frm != out[-1]:
            raise InvalidStringError(f"letter {letter} does not compose at {out[-1]}")
        out.append(to)
    return tuple(out)


def _inverse(start_of_inverse: int, letters: tuple[Letter, ...]) -> StringWalk:
    inv = tuple(Letter(l.arrow, not l.direct) for l in reversed(letters))
    return StringWalk(start_of_inverse, inv)


def make_string(algebra: BoundQuiverAlgebra, start: int,
                letters: tuple[Letter, ...] | list[Letter]) -> StringWalk:
    """Validate and canonicalize a walk.  Raises InvalidStringError when the
    letters do not compose, backtrack, revisit a vertex, or contain a
    same-direction run lying in the relation ideal."""
    letters = tuple(letters)
    if not algebra.quiver.has_vertex(start):
        raise InvalidStringError(f"unknown vertex {start}")
    walk = StringWalk(start, letters)
    verts = walk_vertices(algebra, walk)
    if len(set(verts)) != len(verts):
        raise InvalidStringError("walk revisits a vertex")
    for a, b in zip(letters, letters[1:]):
        if a.arrow == b.arrow:
            raise InvalidStringError(f"immediate backtrack on {a.arrow}")
    for run in _direction_runs(letters):
        if path_in_ideal(algebra, run):
            raise InvalidStringError(f"run {run} lies in the relation ideal")
    return _canonical(algebra, walk, verts[-1])


def _direction_runs(letters: tuple[Letter, ...]) -> list[tuple[str, ...]]:
    """Maximal same-direction runs, each returned as a composable directed
    path in traversal order (inverse runs are read against the walk)."""
    runs: list[tuple[str, ...]] = []
    i = 0
    while i < len(letters):
        j = i
        while j + 1 < len(letters) and letters[j + 1].direct == letters[i].direct:
            j += 1
        chunk = [l.arrow for l in letters[i:j + 1]]
        runs.append(tuple(chunk) if letters[i].direct else tuple(reversed(chunk)))
        i = j + 1
    return runs


def _canonical(algebra: BoundQuiverAlgebra, walk: StringWalk, end: int) -> StringWalk:
    if walk.is_trivial:
        return walk
    other = _inverse(end, walk.letters)
    return walk if walk.rendering() <= other.rendering() else other


def string_from_tree_walk(algebra: BoundQuiverAlgebra,
                          walk: TreeWalk) -> StringWalk | None:
    """The canonical string along a tree walk, or None when a same-direction
    run hits the relation ideal."""
    letters = tuple(Letter(s.arrow.name, s.forward) for s in walk.steps)
    try:
        return make_string(algebra, walk.start, letters)
    except InvalidStringError:
        return None


def enumerate_strings(algebra: BoundQuiverAlgebra) -> tuple[StringWalk, ...]:
    """All strings up to inversion: one trivial string per vertex plus every
    surviving simple path.  Finite because the quiver is a tree."""
    if not algebra.is_valid:
        raise ValueError("algebra must be validated and valid")
    verts = algebra.quiver.vertices
    found = [StringWalk(v, ()) for v in verts]
    for i, a in enumerate(verts):
        for b in verts[i + 1:]:
            s = string_from_tree_walk(algebra, walk_between(algebra, a, b))
            if s is not None:
                found.append(s)
    found.sort(key=lambda s: (len(s), s.rendering(), s.start))
    return tuple(found)


# --------------------------------------------------------------------------
# distinguished walks: projectives, injectives, radical summands

def _grow_path(algebra: BoundQuiverAlgebra, first: str, outgoing: bool) -> list[str]:
    """Maximal surviving directed path starting (outgoing) or ending
    (incoming) with the given arrow, in traversal order."""
    q = algebra.quiver
    path = [first]
    while True:
        if outgoing:
            tip = q.arrow_map[path[-1]].target
            ext = [a.name for a in q.out_arrows(tip)
                   if not algebra.relations.contains_path(tuple(path) + (a.name,))]
            if not ext:
                return path
            assert len(ext) == 1, "branching continuation survived both relations"
            path.append(ext[0])
        else:
            tip = q.arrow_map[path[0]].source
            ext = [a.name for a in q.in_arrows(tip)
                   if not algebra.relations.contains_path((a.name,) + tuple(path))]
            if not ext:
                return path
            assert len(ext) == 1, "branching continuation survived both relations"
            path.insert(0, ext[0])


def out_arms(algebra: BoundQuiverAlgebra, v: int) -> list[list[str]]:
    """Maximal surviving directed paths out of v (traversal order), one per
    outgoing arrow."""
    return [_grow_path(algebra, a.name, outgoing=True)
            for a in algebra.quiver.out_arrows(v)]


def in_arms(algebra: BoundQuiverAlgebra, v: int) -> list[list[str]]:
    """Maximal surviving directed paths into v (traversal order), one per
    incoming arrow."""
    return [_grow_path(algebra, a.name, outgoing=False)
            for a in algebra.quiver.in_arrows(v)]


def _join_at(algebra: BoundQuiverAlgebra, v: int,
             left_letters: list[Letter], right_letters: list[Letter],
             left_start: int | None) -> StringWalk:
    start = left_start if left_start is not None else v
    return make_string(algebra, start, tuple(left_letters) + tuple(right_letters))


def projective_walk(algebra: BoundQuiverAlgebra, v: int) -> StringWalk:
    """Walk presenting the indecomposable projective at v: the (at most two)
    surviving path arms out of v, glued at v."""
    arms = out_arms(algebra, v)
    amap = algebra.quiver.arrow_map
    if not arms:
        return StringWalk(v, ())
    if len(arms) == 1:
        return _join_at(algebra, v, [], [Letter(a, True) for a in arms[0]], None)
    left, right = arms
    left_letters = [Letter(a, False) for a in reversed(left)]
    left_start = amap[left[-1]].target
    return _join_at(algebra, v, left_letters, [Letter(a, True) for a in right], left_start)


def injective_walk(algebra: BoundQuiverAlgebra, v: int) -> StringWalk:
    """Walk presenting the indecomposable injective at v: the (at most two)
    surviving path arms into v, glued at v."""
    arms = in_arms(algebra, v)
    amap = algebra.quiver.arrow_map
    if not arms:
        return StringWalk(v, ())
    if len(arms) == 1:
        arm = arms[0]
        return _join_at(algebra, v, [Letter(a, True) for a in arm], [],
                        amap[arm[0]].source)
    left, right = arms
    left_letters = [Letter(a, True) for a in left]
    right_letters = [Letter(a, False) for a in reversed(right)]
    return _join_at(algebra, v, left_letters, right_letters, amap[left[0]].source)


def radical_walks(algebra: BoundQuiverAlgebra, v: int) -> list[StringWalk]:
    """Walks of the radical summands of the projective at v: one arm string
    per outgoing arrow, with v itself removed."""
    out = []
    amap = algebra.quiver.arrow_map
    for arm in out_arms(algebra, v):
        start = amap[arm[0]].target
        out.append(make_string(algebra, start, tuple(Letter(a, True) for a in arm[1:])))
    return out
