"""Tangent cones and the family of cones generated by facet subsets.

For a canonical cone C with facets psi_1..psi_N, the tangent cone at a
boundary point z is C_I = {x : psi_i(x) > 0 for i in I(z)} with I(z) the
active set of z, and iterating tangent-cone formation never leaves the
family {C_I : I a nonempty facet subset}.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from fractions import Fraction

from .geometry import (
    BOUNDARY,
    ConstructionError,
    DomainError,
    PolyCone,
    classify_point,
)
from .linalg import in_cone, vector

TANGENT_FAMILY_MAX_FACETS = 20


def subcone(cone: PolyCone, indices: Iterable[int]) -> PolyCone:
    """The cone cut out by the facet subset `indices` of `cone`."""
    idx = sorted(set(indices))
    if not idx:
        raise DomainError("facet index set must be nonempty")
    if any(i < 0 or i >= cone.num_facets for i in idx):
        raise DomainError(f"facet index out of range for a cone with {cone.num_facets} facets")
    return PolyCone([cone.facets[i] for i in idx], cone.ambient_dim)


def canonical_index_set(cone: PolyCone, indices: Iterable[int]) -> frozenset[int]:
    """Drop indices whose functionals the rest of the subset already implies.

    For a canonical (irredundant) parent this is the identity; it makes the
    index set of a facet subset a canonical name for the cone it cuts out.
    """
    idx = sorted(set(indices))
    if not idx:
        raise DomainError("facet index set must be nonempty")
    kept = list(idx)
    i = 0
    while i < len(kept):
        others = [cone.facets[j].coeffs for j in kept if j != kept[i]]
        if others and in_cone(cone.facets[kept[i]].coeffs, others):
            del kept[i]
        else:
            i += 1
    return frozenset(kept)


def tangent_cone(cone: PolyCone, z: Sequence[Fraction]) -> PolyCone:
    """Open tangent cone at a point of the closed cone.

    Realised by the active facet subset at z.  At the apex z = 0 every facet
    is active and the tangent cone is the cone itself; at an interior point
    the tangent cone would be the whole space, which is not polyhedral here,
    so that case is rejected.
    """
    z = vector(z)
    loc = classify_point(cone, z)
    if loc.kind != BOUNDARY:
        if loc.is_interior:
            raise DomainError("tangent cone at an interior point is the whole space")
        raise DomainError("point lies outside the closed cone")
    return subcone(cone, loc.active)


@dataclass(frozen=True)
class TangentFamilyEntry:
    """A member cone of the tangent family, named by parent facet indices."""

    index_set: frozenset[int]
    cone: PolyCone


def tangent_family(cone: PolyCone, indices: Iterable[int] | None = None) -> list[TangentFamilyEntry]:
    """All cones cut out by nonempty subsets of the given facet indices.

    Defaults to every facet, which yields the full family of iterated
    tangent cones.  Entries are deduplicated by cone equality and ordered
    by index set.
    """
    pool = sorted(set(range(cone.num_facets) if indices is None else indices))
    if not pool:
        raise DomainError("tangent family over an empty index pool")
    if len(pool) > TANGENT_FAMILY_MAX_FACETS:
        raise ConstructionError(f"tangent family guard: more than {TANGENT_FAMILY_MAX_FACETS} facets")
    entries: dict[frozenset[int], TangentFamilyEntry] = {}
    for r in range(1, len(pool) + 1):
        for subset in combinations(pool, r):
            core = canonical_index_set(cone, subset)
            if core not in entries:
                entries[core] = TangentFamilyEntry(core, subcone(cone, core))
    return sorted(entries.values(), key=lambda e: (len(e.index_set), sorted(e.index_set)))


def hilbert_dimension(cone: PolyCone) -> int:
    """Dimension of the Hilbert geometry on the cone: n minus the lineality."""
    return (cone.ambient_dim - 1) - len(cone.lineality_basis)
