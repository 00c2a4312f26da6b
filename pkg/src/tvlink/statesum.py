#
# statesum.py
#
# Admissible-coloring enumeration and the Turaev-Viro state sums TV_r
# (full palette) and TV'_r (even palette, odd r), in both the quotient
# form ("def27": section-2 thetas in the denominator) and the product
# form ("appendixA1": appendix thetas and 6j as plain factors).

import json
import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from . import skein
from .qarith import Flavor, eta, eta_prime
from .triangulate import TET_FACES


@dataclass
class StateSumResult:
    value: float
    colorings_visited: int
    colorings_admissible: int
    seconds: float

    def to_json(self):
        return json.dumps({"value": self.value,
                           "admissible": self.colorings_admissible,
                           "visited": self.colorings_visited,
                           "seconds": self.seconds})


def _edge_order(tri):
    # Most-constrained-first: color high-valence edges early so face
    # admissibility prunes as soon as possible.
    val = tri.edge_valences()
    return sorted(range(tri.num_edges), key=lambda e: -val[e])


def _pruning_plan(tri, order):
    # For each position in the edge order, the faces that become fully
    # colored exactly when that edge is assigned.
    pos = {e: i for i, e in enumerate(order)}
    plan = [[] for _ in order]
    for f in tri.faces:
        last = max(pos[e] for e in f)
        plan[last].append(f)
    return plan


def enumerate_admissible(tri, ctx, palette, first_edge_colors=None, counter=None):
    """Yield the admissible colorings (tuples mapping edge index -> color).

    Backtracking over edges in descending-valence order, pruning as soon
    as any fully-colored face fails admissibility.  Tetrahedron
    admissibility follows from face admissibility since every tetrahedron
    face is in the face list.  first_edge_colors restricts the choices at
    the first edge (used to split the search across workers); counter, if
    given, is a one-element list accumulating the number of search nodes
    visited (pruned partial assignments included).
    """
    palette = list(palette)
    order = _edge_order(tri)
    plan = _pruning_plan(tri, order)
    coloring = [0] * tri.num_edges
    if counter is None:
        counter = [0]

    def admissible_at(depth):
        for f in plan[depth]:
            if not skein.is_admissible_triple(ctx, tuple(coloring[e] for e in f)):
                return False
        return True

    def walk(depth):
        if depth == len(order):
            counter[0] += 1
            yield tuple(coloring)
            return
        choices = palette
        if depth == 0 and first_edge_colors is not None:
            choices = first_edge_colors
        for c in choices:
            coloring[order[depth]] = c
            if admissible_at(depth):
                yield from walk(depth + 1)
            else:
                counter[0] += 1

    yield from walk(0)


def coloring_weight(tri, ctx, coloring, form="def27"):
    """Weight of one admissible coloring, without the eta^{2|V|} prefactor."""
    w = 1.0
    for e in range(tri.num_edges):
        w *= skein.edge_weight(ctx, coloring[e])
    if form == "def27":
        for tet in tri.tetrahedra:
            w *= skein.sixj(ctx, tuple(coloring[e] for e in tet), "section2")
        for f in tri.faces:
            w /= skein.theta(ctx, tuple(coloring[e] for e in f))
    elif form == "appendixA1":
        for tet in tri.tetrahedra:
            w *= skein.sixj(ctx, tuple(coloring[e] for e in tet), "appendix")
        for f in tri.faces:
            w *= skein.theta_appendix(ctx, tuple(coloring[e] for e in f))
    else:
        raise ValueError("unknown state-sum form %r" % form)
    return w


def _statesum(tri, ctx, palette, prefactor, form, threads):
    start = time.perf_counter()
    palette = list(palette)

    def partial(chunk):
        weights = []
        counter = [0]
        for coloring in enumerate_admissible(tri, ctx, palette,
                                             first_edge_colors=chunk,
                                             counter=counter):
            weights.append(coloring_weight(tri, ctx, coloring, form))
        return weights, counter[0], len(weights)

    if threads and threads > 1 and len(palette) > 1:
        chunks = [palette[i::threads] for i in range(threads)]
        chunks = [c for c in chunks if c]
        with ThreadPoolExecutor(max_workers=len(chunks)) as pool:
            parts = list(pool.map(partial, chunks))
    else:
        parts = [partial(None)]

    weights = [w for p in parts for w in p[0]]
    visited = sum(p[1] for p in parts)
    admissible = sum(p[2] for p in parts)
    value = prefactor * math.fsum(weights)
    return StateSumResult(value, visited, admissible, time.perf_counter() - start)


def tv(tri, ctx, form="def27", threads=1):
    """TV_r over the full palette I_r; the root comes from ctx (4r-th for
    any r, 2r-th allowed for odd r)."""
    prefactor = eta(ctx) ** (2 * tri.num_vertices)
    return _statesum(tri, ctx, skein.colors(ctx), prefactor, form, threads)


def tv_prime(tri, ctx, form="def27", threads=1):
    """TV'_r over the even palette I'_r; requires the SO(3) flavor (odd r)."""
    if ctx.flavor is not Flavor.SO3_2R:
        raise ValueError("TV' requires an SO(3) context (odd r)")
    prefactor = eta_prime(ctx) ** (2 * tri.num_vertices)
    return _statesum(tri, ctx, skein.colors_even(ctx), prefactor, form, threads)
