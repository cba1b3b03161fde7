"""Shared fixtures and independent oracles for the test suite.

The oracles here deliberately avoid the rewriting machinery: graded
dimensions are recomputed by spanning the whole path space and quotienting
by the ideal slice, and matchings by exhausting edge subsets.
"""

from __future__ import annotations

import itertools
from pathlib import Path as FsPath

from gradedcy.linalg import SparseEliminator
from gradedcy.quiver import NCPoly, Path, load_presentation

DATA = FsPath(__file__).resolve().parent.parent / "data"


def load(name):
    return load_presentation(DATA / name)


def all_paths(pres, max_len):
    """Every path of length <= max_len, no reduction."""
    ctx = pres.ctx
    out = []
    frontier = [Path(v, ()) for v in pres.quiver.vertices]
    for _ in range(max_len + 1):
        out.extend(frontier)
        nxt = []
        for p in frontier:
            t = ctx.target(p)
            for i in pres.quiver.arrows_by_source[t]:
                nxt.append(Path(p.source, p.arrows + (i,)))
        frontier = nxt
    return out


def brute_force_graded_dimension(pres, degree, cap, source=None, target=None):
    """Span all paths of the degree within the cap and quotient by the
    ideal slice generated within the cap."""
    ctx = pres.ctx
    paths = [p for p in all_paths(pres, cap) if ctx.degree(p) == degree
             and (source is None or p.source == source)
             and (target is None or ctx.target(p) == target)]
    index = {p: i for i, p in enumerate(paths)}
    el = SparseEliminator()
    for rel in pres.relations:
        rel_len = max(len(p) for p in rel.terms)
        rel_deg = ctx.degree(next(iter(rel.terms)))
        some = next(iter(rel.terms))
        rsrc, rtgt = some.source, ctx.target(some)
        for left in all_paths(pres, cap - rel_len):
            if ctx.target(left) != rsrc:
                continue
            for right in all_paths(pres, cap - rel_len - len(left)):
                if right.source != rtgt:
                    continue
                if ctx.degree(left) + rel_deg + ctx.degree(right) != degree:
                    continue
                vec = {}
                for mono, c in rel.terms.items():
                    full = Path(left.source,
                                left.arrows + mono.arrows + right.arrows)
                    idx = index.get(full)
                    if idx is None:
                        continue
                    vec[idx] = vec.get(idx, 0) + c
                if vec:
                    el.add(vec)
    return len(paths) - el.rank


def matchings_by_subsets(dimer):
    """All perfect matchings by exhausting edge subsets."""
    verts = sorted(dimer.colors)
    n = len(verts)
    out = []
    names = [e.name for e in dimer.edges]
    for r in range(n // 2, n // 2 + 1):
        for subset in itertools.combinations(names, r):
            covered = []
            ok = True
            for e in subset:
                b, w = dimer.ends(e)
                covered.extend((b, w))
            if len(set(covered)) == len(covered) == n:
                out.append(tuple(sorted(subset)))
            del ok
    return sorted(out)


def dimension_table_of_algebra(alg):
    """(idempotent slot pair) -> dim e_i A e_j for an FDAlgebra."""
    table = {}
    for i, ei in enumerate(alg.idempotents):
        for j, ej in enumerate(alg.idempotents):
            count = 0
            for b in range(alg.dim):
                v = alg.product(alg.basis_vec(ei),
                                alg.product(alg.basis_vec(b),
                                            alg.basis_vec(ej)))
                if v == {b: v.get(b)} and v.get(b) == 1:
                    count += 1
            table[(i, j)] = count
    return table
