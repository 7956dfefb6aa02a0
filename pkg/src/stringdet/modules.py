"""Representations of the bound quiver and exact operations on them.

A representation assigns a rational vector space to every vertex and a matrix
to every arrow (source space -> target space) such that the composite along
every relation generator vanishes.  String modules are the special case with
0/1 dimensions and identity linking maps; kernels and cokernels of maps
between them can have arbitrary rational matrices, so everything downstream
stays fully general.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .algebra import BoundQuiverAlgebra
from .linalg import F0, F1, Mat, _eliminate, nullspace, quotient_projection, solve
from .strings import (StringWalk, injective_walk, projective_walk, radical_walks,
                      walk_vertices)


@dataclass(frozen=True)
class Representation:
    algebra: BoundQuiverAlgebra
    dims: dict[int, int]       # every vertex present, zeros included
    maps: dict[str, Mat]       # every arrow present, shape dims[target] x dims[source]

    @property
    def total_dim(self) -> int:
        return sum(self.dims.values())

    def support(self) -> tuple[int, ...]:
        return tuple(v for v in sorted(self.dims) if self.dims[v])


def _check_relations(rep: Representation) -> None:
    amap = rep.algebra.quiver.arrow_map
    for gen in rep.algebra.relations.generators:
        first = amap[gen[0]]
        acc = Mat.identity(rep.dims[first.source])
        for name in gen:
            acc = rep.maps[name] @ acc
        if not acc.is_zero():
            raise ValueError(f"relation {' '.join(gen)} does not vanish")


def representation(algebra: BoundQuiverAlgebra, dims: dict[int, int],
                   maps: dict[str, Mat], check: bool = True) -> Representation:
    full_dims = {v: dims.get(v, 0) for v in algebra.quiver.vertices}
    full_maps = {}
    for a in algebra.quiver.arrows:
        m = maps.get(a.name)
        if m is None:
            m = Mat.zeros(full_dims[a.target], full_dims[a.source])
        if m.shape != (full_dims[a.target], full_dims[a.source]):
            raise ValueError(f"map for {a.name} has shape {m.shape}, "
                             f"expected {(full_dims[a.target], full_dims[a.source])}")
        full_maps[a.name] = m
    rep = Representation(algebra, full_dims, full_maps)
    if check:
        _check_relations(rep)
    return rep


def string_module(algebra: BoundQuiverAlgebra, s: StringWalk) -> Representation:
    """Module of a walk: one basis vector per visited vertex, identity along
    every letter's arrow."""
    verts = set(walk_vertices(algebra, s))
    used = {l.arrow for l in s.letters}
    dims = {v: 1 for v in verts}
    maps = {name: Mat([[1]]) for name in used}
    return representation(algebra, dims, maps)


def simple(algebra: BoundQuiverAlgebra, v: int) -> Representation:
    return string_module(algebra, StringWalk(v, ()))


def projective(algebra: BoundQuiverAlgebra, v: int) -> Representation:
    """Indecomposable projective at v.  The basis is indexed by the surviving
    paths out of v (one basis vector per reachable vertex, paths in a tree
    being unique), which is exactly the string module of the glued arms."""
    return string_module(algebra, projective_walk(algebra, v))


def injective(algebra: BoundQuiverAlgebra, v: int) -> Representation:
    return string_module(algebra, injective_walk(algebra, v))


def radical_summands(algebra: BoundQuiverAlgebra, v: int) -> list[Representation]:
    """Indecomposable summands of the radical of the projective at v: none at
    a sink, one per outgoing arrow otherwise."""
    return [string_module(algebra, w) for w in radical_walks(algebra, v)]


# --------------------------------------------------------------------------
# maps

@dataclass(frozen=True)
class ModuleMap:
    source: Representation
    target: Representation
    blocks: dict[int, Mat]     # vertex -> dims_target[v] x dims_source[v]

    def is_zero(self) -> bool:
        return all(b.is_zero() for b in self.blocks.values())

    def vec(self) -> tuple:
        """Flatten block entries in fixed (sorted vertex, row-major) order."""
        out = []
        for v in sorted(self.blocks):
            for row in self.blocks[v].rows:
                out.extend(row)
        return tuple(out)


def module_map(source: Representation, target: Representation,
               blocks: dict[int, Mat], check: bool = True) -> ModuleMap:
    full = {}
    for v in source.algebra.quiver.vertices:
        b = blocks.get(v)
        if b is None:
            b = Mat.zeros(target.dims[v], source.dims[v])
        if b.shape != (target.dims[v], source.dims[v]):
            raise ValueError(f"block at {v} has shape {b.shape}, "
                             f"expected {(target.dims[v], source.dims[v])}")
        full[v] = b
    f = ModuleMap(source, target, full)
    if check:
        _check_intertwining(f)
    return f


def _check_intertwining(f: ModuleMap) -> None:
    for a in f.source.algebra.quiver.arrows:
        lhs = f.blocks[a.target] @ f.source.maps[a.name]
        rhs = f.target.maps[a.name] @ f.blocks[a.source]
        if lhs != rhs:
            raise ValueError(f"map does not intertwine along arrow {a.name}")


def zero_map(source: Representation, target: Representation) -> ModuleMap:
    return module_map(source, target, {}, check=False)


def identity_map(rep: Representation) -> ModuleMap:
    blocks = {v: Mat.identity(d) for v, d in rep.dims.items()}
    return ModuleMap(rep, rep, blocks)


def compose(g: ModuleMap, f: ModuleMap) -> ModuleMap:
    """g after f."""
    if f.target is not g.source and f.target != g.source:
        raise ValueError("maps do not compose")
    blocks = {v: g.blocks[v] @ f.blocks[v] for v in f.blocks}
    return ModuleMap(f.source, g.target, blocks)


def is_monomorphism(f: ModuleMap) -> bool:
    return all(f.blocks[v].rank() == f.source.dims[v] for v in f.blocks)


def is_epimorphism(f: ModuleMap) -> bool:
    return all(f.blocks[v].rank() == f.target.dims[v] for v in f.blocks)


# --------------------------------------------------------------------------
# hom spaces

def hom_space(source: Representation, target: Representation) -> list[ModuleMap]:
    """Basis of the space of module maps source -> target, from the exact
    nullspace of the intertwining constraints."""
    if source.algebra is not target.algebra and source.algebra != target.algebra:
        raise ValueError("representations live over different algebras")
    verts = sorted(source.dims)
    index: dict[tuple[int, int, int], int] = {}
    for v in verts:
        for r in range(target.dims[v]):
            for c in range(source.dims[v]):
                index[(v, r, c)] = len(index)
    nvars = len(index)
    if nvars == 0:
        return []

    rows = []
    for a in source.algebra.quiver.arrows:
        s, e = a.source, a.target
        ms, mt = source.maps[a.name], target.maps[a.name]
        # block[e] @ ms == mt @ block[s], entry (i, j)
        for i in range(target.dims[e]):
            for j in range(source.dims[s]):
                row = [F0] * nvars
                hit = False
                for k in range(source.dims[e]):
                    cf = ms.rows[k][j]
                    if cf:
                        row[index[(e, i, k)]] += cf
                        hit = True
                for k in range(target.dims[s]):
                    cf = mt.rows[i][k]
                    if cf:
                        row[index[(s, k, j)]] -= cf
                        hit = True
                if hit:
                    rows.append(row)

    if rows:
        basis_vecs = nullspace(Mat(rows, ncols=nvars))
    else:
        basis_vecs = [tuple(1 if i == j else 0 for i in range(nvars)) for j in range(nvars)]

    out = []
    for vecb in basis_vecs:
        blocks = {}
        for v in verts:
            rs = [[vecb[index[(v, r, c)]] for c in range(source.dims[v])]
                  for r in range(target.dims[v])]
            blocks[v] = Mat(rs, ncols=source.dims[v])
        out.append(ModuleMap(source, target, blocks))
    return out


# --------------------------------------------------------------------------
# kernels, cokernels, socle, direct sums

def kernel(f: ModuleMap) -> tuple[Representation, ModuleMap]:
    """Vertex-wise kernel with induced arrow maps and its inclusion."""
    algebra = f.source.algebra
    incl_blocks: dict[int, Mat] = {}
    dims: dict[int, int] = {}
    for v, b in f.blocks.items():
        basis = nullspace(b)
        dims[v] = len(basis)
        incl_blocks[v] = Mat.from_columns(basis, nrows=f.source.dims[v])
    maps = {}
    for a in algebra.quiver.arrows:
        carried = f.source.maps[a.name] @ incl_blocks[a.source]
        maps[a.name] = solve(incl_blocks[a.target], carried) if dims[a.target] else \
            Mat.zeros(0, dims[a.source])
    ker = representation(algebra, dims, maps)
    incl = ModuleMap(ker, f.source, incl_blocks)
    return ker, incl


def cokernel(f: ModuleMap) -> tuple[Representation, ModuleMap]:
    """Vertex-wise cokernel with induced arrow maps and its projection."""
    algebra = f.target.algebra
    proj_blocks: dict[int, Mat] = {}
    dims: dict[int, int] = {}
    for v, b in f.blocks.items():
        proj = quotient_projection(b.columns(), ambient_dim=f.target.dims[v])
        proj_blocks[v] = proj
        dims[v] = proj.nrows
    maps = {}
    for a in algebra.quiver.arrows:
        # induced map: factor proj_e @ target_map through proj_s via a section
        s, e = a.source, a.target
        carried = proj_blocks[e] @ f.target.maps[a.name]
        if dims[s] == 0:
            maps[a.name] = Mat.zeros(dims[e], 0)
            continue
        section = _right_inverse(proj_blocks[s])
        induced = carried @ section
        if induced @ proj_blocks[s] != carried:
            raise ValueError("cokernel maps are not well defined")
        maps[a.name] = induced
    cok = representation(algebra, dims, maps)
    proj = ModuleMap(f.target, cok, proj_blocks)
    return cok, proj


def _right_inverse(p: Mat) -> Mat:
    """Section of a surjective matrix: columns solve p @ x = e_i."""
    return solve_right(p, Mat.identity(p.nrows))


def solve_right(a: Mat, b: Mat) -> Mat:
    """Any solution x of a @ x = b for surjective a (minimal fuss: solve on a
    column basis of a's row space pivots)."""
    aug = a.hstack(b)
    rows, pivots = _eliminate([list(r) for r in aug.rows])
    if any(p >= a.ncols for p in pivots):
        raise ValueError("inconsistent system")
    out = [[F0] * b.ncols for _ in range(a.ncols)]
    for r, pc in enumerate(pivots):
        out[pc] = list(rows[r][a.ncols:])
    return Mat(out, ncols=b.ncols)


def socle(rep: Representation) -> Counter:
    """Multiset of simples in the socle: at each vertex, the joint kernel of
    the outgoing maps (the whole space at a sink)."""
    out: Counter = Counter()
    for v in sorted(rep.dims):
        d = rep.dims[v]
        if d == 0:
            continue
        outgoing = rep.algebra.quiver.out_arrows(v)
        if not outgoing:
            out[v] = d
            continue
        stacked = [list(row) for a in outgoing for row in rep.maps[a.name].rows]
        if not stacked:
            out[v] = d
            continue
        dim = len(nullspace(Mat(stacked, ncols=d)))
        if dim:
            out[v] = dim
    return out


def direct_sum(reps: list[Representation]) -> tuple[Representation, list[ModuleMap]]:
    """Direct sum with the component inclusions."""
    if not reps:
        raise ValueError("empty direct sum")
    algebra = reps[0].algebra
    verts = sorted(reps[0].dims)
    dims = {v: sum(r.dims[v] for r in reps) for v in verts}
    offsets: list[dict[int, int]] = []
    run = {v: 0 for v in verts}
    for r in reps:
        offsets.append(dict(run))
        for v in verts:
            run[v] += r.dims[v]

    maps = {}
    for a in algebra.quiver.arrows:
        s, e = a.source, a.target
        rows = [[F0] * dims[s] for _ in range(dims[e])]
        for r, off in zip(reps, offsets):
            block = r.maps[a.name]
            for i in range(r.dims[e]):
                for j in range(r.dims[s]):
                    rows[off[e] + i][off[s] + j] = block.rows[i][j]
        maps[a.name] = Mat(rows, ncols=dims[s])
    total = representation(algebra, dims, maps, check=False)

    inclusions = []
    for r, off in zip(reps, offsets):
        blocks = {}
        for v in verts:
            rows = [[F1 if i == off[v] + j else F0 for j in range(r.dims[v])]
                    for i in range(dims[v])]
            blocks[v] = Mat(rows, ncols=r.dims[v]) if dims[v] or r.dims[v] else \
                Mat.zeros(0, 0)
        inclusions.append(ModuleMap(r, total, blocks))
    return total, inclusions
