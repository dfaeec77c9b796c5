"""Intersection lattice of a central arrangement.

A flat is a nonempty intersection of some of the hyperplanes (the ambient
space itself is excluded). Flats are identified by the canonical basis of
their normal space: the span of the normals of every hyperplane containing
them. Enumeration works by closure instead of scanning all 2^n subsets:
seed with the hyperplanes, then repeatedly adjoin one more normal to each
frontier flat and deduplicate, so the cost scales with the lattice size.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .arrangement import NormalizedArrangement
from .errors import CentralityError, EmptyArrangementError
from .ratlinalg import IntegerEchelon, RationalMatrix, primitive_int_row, subspace_leq


@dataclass(frozen=True)
class Flat:
    """One element of the intersection lattice.

    normal_space: canonical (RREF) basis of the span of member normals,
        codim rows by dim columns.
    codim: codimension, equal to the rank of normal_space.
    weight: total multiplicity of the hyperplanes containing the flat
        (serialized under the key "s").
    members: indices of exactly those hyperplanes.
    """

    normal_space: RationalMatrix
    codim: int
    weight: int
    members: frozenset[int]

    @property
    def dim_ambient(self) -> int:
        return self.normal_space.cols

    def sort_key(self):
        return (self.codim, self.normal_space.entries)

    def contains(self, other: "Flat") -> bool:
        """True iff `other` is a subflat, tested geometrically on normal spaces."""
        return subspace_leq(other.normal_space, self.normal_space)

    def to_json_dict(self) -> dict:
        return {
            "normal_space": self.normal_space.to_string_lists(),
            "codim": self.codim,
            "s": self.weight,
            "members": sorted(self.members),
        }


@dataclass(frozen=True)
class IntersectionLattice:
    """All flats of a central arrangement, deterministically ordered.

    Flats are sorted by codimension and then lexicographically by their
    canonical normal-space matrix, so output order is reproducible.
    """

    flats: tuple[Flat, ...]
    dim: int
    n_hyperplanes: int

    def __len__(self) -> int:
        return len(self.flats)

    def member_masks(self) -> list[int]:
        masks = []
        for flat in self.flats:
            mask = 0
            for j in flat.members:
                mask |= 1 << j
            masks.append(mask)
        return masks

    @cached_property
    def inclusion(self) -> frozenset[tuple[int, int]]:
        """Strict containment pairs (i, j) meaning flats[i] is a proper subflat of flats[j]."""
        return inclusion_dag(self).pairs


@dataclass(frozen=True)
class InclusionDag:
    """Containment structure over a lattice's flats.

    pairs holds every (i, j) with flats[i] strictly inside flats[j];
    topological_order lists flat indices by decreasing codimension, so
    each flat appears before everything that contains it.
    """

    pairs: frozenset[tuple[int, int]]
    topological_order: tuple[int, ...]

    def less(self, i: int, j: int) -> bool:
        return (i, j) in self.pairs


def build_lattice(arr: NormalizedArrangement) -> IntersectionLattice:
    """Enumerate every flat of a central arrangement with its weight and members.

    Closure by codimension level: a flat of codimension c+1 is always the
    span-closure of a codimension-c flat plus one extra hyperplane, so each
    wave adjoins single normals to the previous wave's flats and dedups on
    the canonical integer echelon form. Member sets come from exact span
    membership tests, and the weight is the sum of member multiplicities.
    """
    if not arr.is_central:
        raise CentralityError(
            "the intersection lattice is defined for central arrangements; localize first"
        )
    n, d = arr.n, arr.dim
    if n == 0:
        raise EmptyArrangementError("arrangement has no hyperplanes")
    int_normals = [primitive_int_row(arr.normals.row(j)) for j in range(n)]

    # (echelon, member bitmask) per flat, keyed by the canonical echelon rows.
    seen: dict[tuple, tuple[IntegerEchelon, int]] = {}
    frontier: list[tuple[IntegerEchelon, int]] = []
    for j in range(n):
        ech = IntegerEchelon(d).inserted(int_normals[j])
        if ech.key() not in seen:  # distinct by normalization, but keep the guard
            entry = (ech, 1 << j)
            seen[ech.key()] = entry
            frontier.append(entry)

    while frontier:
        next_frontier: list[tuple[IntegerEchelon, int]] = []
        for ech, mask in frontier:
            if ech.rank == d:
                continue
            for j in range(n):
                if mask >> j & 1:
                    continue
                bigger = ech.inserted(int_normals[j])
                key = bigger.key()
                if key in seen:
                    continue
                new_mask = mask | 1 << j
                for k in range(n):
                    if not new_mask >> k & 1 and bigger.contains(int_normals[k]):
                        new_mask |= 1 << k
                entry = (bigger, new_mask)
                seen[key] = entry
                next_frontier.append(entry)
        frontier = next_frontier

    mult = arr.multiplicities
    flats = []
    for ech, mask in seen.values():
        members = frozenset(j for j in range(n) if mask >> j & 1)
        flats.append(
            Flat(
                normal_space=ech.to_rational_canonical(),
                codim=ech.rank,
                weight=sum(mult[j] for j in members),
                members=members,
            )
        )
    flats.sort(key=Flat.sort_key)
    return IntersectionLattice(flats=tuple(flats), dim=d, n_hyperplanes=n)


def inclusion_dag(lat: IntersectionLattice) -> InclusionDag:
    """Strict containment between all flat pairs, via member-set reversal.

    Within one lattice, flat_i is contained in flat_j exactly when
    members(flat_j) is a proper subset of members(flat_i); this matches the
    geometric subspace test and is property-checked against it.
    """
    masks = lat.member_masks()
    count = len(masks)
    pairs = set()
    for i in range(count):
        mi = masks[i]
        for j in range(count):
            mj = masks[j]
            if mi != mj and mi & mj == mj:
                pairs.add((i, j))
    order = sorted(range(count), key=lambda i: -lat.flats[i].codim)
    return InclusionDag(pairs=frozenset(pairs), topological_order=tuple(order))


def lattice_to_json_dict(lat: IntersectionLattice) -> dict:
    """Debug/test export: all flats plus the strict containment pairs."""
    dag = inclusion_dag(lat)
    return {
        "dim": lat.dim,
        "n_hyperplanes": lat.n_hyperplanes,
        "flats": [flat.to_json_dict() for flat in lat.flats],
        "containment_pairs": sorted(dag.pairs),
    }
