"""Shared test fixtures: standard domains and exact random sampling."""

from __future__ import annotations

import random
from fractions import Fraction

from hilbertgeom import HPolytope, cone_from_polytope, lift_to_cone, vector

F = Fraction


def unit_square() -> HPolytope:
    return HPolytope(2, [((1, 0), 0), ((-1, 0), -1), ((0, 1), 0), ((0, -1), -1)])


def simplex2() -> HPolytope:
    return HPolytope(2, [((1, 0), 0), ((0, 1), 0), ((-1, -1), -1)])


def interval(lo=0, hi=4) -> HPolytope:
    return HPolytope(1, [((1,), lo), ((-1,), -hi)])


def unit_cube() -> HPolytope:
    halfspaces = []
    for i in range(3):
        plus = tuple(1 if j == i else 0 for j in range(3))
        minus = tuple(-1 if j == i else 0 for j in range(3))
        halfspaces.append((plus, 0))
        halfspaces.append((minus, -1))
    return HPolytope(3, halfspaces)


def polygon(vertices) -> HPolytope:
    """H-representation of a convex polygon from counter-clockwise vertices."""
    pts = [vector(v) for v in vertices]
    halfspaces = []
    m = len(pts)
    for i in range(m):
        p, q = pts[i], pts[(i + 1) % m]
        d = (q[0] - p[0], q[1] - p[1])
        normal = (-d[1], d[0])
        offset = normal[0] * p[0] + normal[1] * p[1]
        halfspaces.append((normal, offset))
    return HPolytope(2, halfspaces)


def pentagon() -> HPolytope:
    return polygon([(0, 0), (2, 0), (3, 2), (1, 4), (-1, 2)])


def interior_sample(polytope: HPolytope, rng: random.Random, hi: int = 12):
    """Exact interior point: positive rational convex combination of the vertices."""
    weights = [F(rng.randint(1, hi)) for _ in polytope.vertices]
    total = sum(weights)
    point = [F(0)] * polytope.dim
    for w, v in zip(weights, polytope.vertices):
        for i, c in enumerate(v):
            point[i] += w * c
    return tuple(c / total for c in point)


def distinct_interior_pair(polytope: HPolytope, rng: random.Random):
    while True:
        x = interior_sample(polytope, rng)
        y = interior_sample(polytope, rng)
        if x != y:
            return x, y


def boundary_sample(polytope: HPolytope, rng: random.Random):
    """Point on the boundary: a vertex or a proper combination of two vertices."""
    verts = list(polytope.vertices)
    if rng.random() < 0.25:
        return rng.choice(verts)
    while True:
        a, b = rng.sample(verts, 2)
        lam = rng.choice([F(1, 4), F(1, 3), F(1, 2), F(2, 3), F(3, 4)])
        p = tuple(lam * x + (1 - lam) * y for x, y in zip(a, b))
        on_facet = any(f(p) == off for f, off in polytope.halfspaces)
        inside = all(f(p) >= off for f, off in polytope.halfspaces)
        if inside and on_facet:
            return p


def cone_and_lift(polytope: HPolytope):
    return cone_from_polytope(polytope), lift_to_cone


def facet_index(cone, coeffs) -> int:
    """Position of a functional (given by raw coefficients) in the canonical list."""
    from hilbertgeom import LinearFunctional

    target = LinearFunctional(vector(coeffs)).canonical()
    for i, f in enumerate(cone.facets):
        if f == target:
            return i
    raise AssertionError(f"functional {coeffs} not a facet of {cone}")


def boundary_face_points(polytope, cone, active, weight_patterns):
    """Boundary points whose active set is exactly `active`.

    Takes strict positive combinations of the polytope vertices lying on the
    face; patterns that land on a smaller face are skipped.
    """
    from hilbertgeom import classify_point

    on_face = [
        v
        for v in polytope.vertices
        if active <= classify_point(cone, lift_to_cone(v)).active
    ]
    points = []
    for weights in weight_patterns:
        ws = [F(w) for w in weights[: len(on_face)]]
        if len(ws) < len(on_face):
            ws += [F(1)] * (len(on_face) - len(ws))
        total = sum(ws)
        combo = [F(0)] * polytope.dim
        for w, v in zip(ws, on_face):
            for i, c in enumerate(v):
                combo[i] += w * c
        z = lift_to_cone(tuple(c / total for c in combo))
        if classify_point(cone, z).active == active:
            points.append(z)
    unique = []
    for p in points:
        if p not in unique:
            unique.append(p)
    return unique


def small_point_in_subcone_outside(cone, index_set):
    """A point satisfying the subset constraints strictly and violating another."""
    from itertools import product as iproduct

    from hilbertgeom import classify_point

    dim = cone.ambient_dim
    others = [i for i in range(cone.num_facets) if i not in index_set]
    for cand in iproduct(range(-2, 3), repeat=dim):
        if all(c == 0 for c in cand):
            continue
        vals = [f(vector(cand)) for f in cone.facets]
        if all(vals[i] > 0 for i in index_set) and any(vals[j] < 0 for j in others):
            return vector(cand)
    return None


def distinct_reference_points(cone, base, x, index_set, count):
    """Reference points in the given funk cone with distinct canonical forms."""
    from hilbertgeom import busemann_point

    # Fixed candidates: the chosen reference points must not depend on the
    # base point, or base-point independence checks would be vacuous.
    candidates = [
        lift_to_cone((F(5, 9), F(4, 9))),
        lift_to_cone((F(1, 3), F(2, 3))),
        lift_to_cone((F(2, 3), F(1, 3))),
        lift_to_cone((F(1, 4), F(1, 2))),
        lift_to_cone((F(1, 2), F(1, 4))),
        lift_to_cone((F(1, 5), F(4, 5))),
    ]
    outside = small_point_in_subcone_outside(cone, index_set)
    if outside is not None:
        candidates.insert(2, outside)
    chosen = []
    seen = set()
    for p in candidates:
        candidate = busemann_point(cone, x, index_set, p, base)
        if candidate.p not in seen:
            seen.add(candidate.p)
            chosen.append(candidate)
        if len(chosen) == count:
            return chosen
    raise AssertionError("could not find enough distinct reference points")


def square_busemann_sample(base=None):
    """A spread of Busemann points on the unit-square cone.

    Three boundary rays per facet part, three reference points per vertex
    part, and one point in each remaining part; 32 points in total.
    """
    from hilbertgeom import busemann_point, cone_from_polytope, face_lattice_active_sets

    polytope = unit_square()
    cone = cone_from_polytope(polytope)
    if base is None:
        base = lift_to_cone((F(1, 2), F(1, 2)))
    points = []
    patterns = [(1, 1), (1, 3), (3, 1)]
    fixed_p = lift_to_cone((F(5, 9), F(4, 9)))
    for active in face_lattice_active_sets(cone):
        xs = boundary_face_points(polytope, cone, active, patterns)
        if len(xs) > 1:
            # facet part: vary the boundary ray, full tangent cone only
            for x in xs:
                points.append(busemann_point(cone, x, active, fixed_p, base))
        else:
            x = xs[0]
            # vertex part: vary the reference point in the full tangent cone
            points.extend(distinct_reference_points(cone, base, x, active, 3))
            # remaining parts: each strict subset of the active pair
            for j in sorted(active):
                points.extend(distinct_reference_points(cone, base, x, frozenset({j}), 1))
    assert len(points) == len(set(points))
    return cone, base, points
