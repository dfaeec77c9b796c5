"""Real log canonical threshold of an arrangement, with its multiplicity.

For a central arrangement the pair is read off the intersection lattice:
the threshold is the minimum of codim(W)/weight(W) over all flats W, and
the multiplicity is the length of the longest strictly nested chain of
flats achieving that minimum. Affine arrangements reduce to finitely many
central ones, one per maximal set of hyperplanes with a common point, and
the global pair is the minimum of the local pairs in the singularity order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering

from .arrangement import NormalizedArrangement
from .errors import CentralityError, EmptyArrangementError, InvalidMultiplicityError
from .lattice import Flat, IntersectionLattice, build_lattice
from .ratlinalg import IntegerEchelon, RationalMatrix, format_rational, primitive_int_row


@total_ordering
@dataclass(frozen=True)
class RlctPair:
    """(threshold, multiplicity), ordered so that smaller means more singular.

    The order is total: compare thresholds first; on a tie the pair with the
    LARGER multiplicity is the smaller (more singular) one.
    """

    threshold: Fraction
    multiplicity: int

    def __lt__(self, other: "RlctPair") -> bool:
        return pair_less(self, other)

    def astuple(self) -> tuple[Fraction, int]:
        return (self.threshold, self.multiplicity)

    def __str__(self) -> str:
        return f"({self.threshold}, {self.multiplicity})"


def pair_less(p: RlctPair, q: RlctPair) -> bool:
    """Strict singularity order: p < q iff p is more singular than q."""
    if p.threshold != q.threshold:
        return p.threshold < q.threshold
    return p.multiplicity > q.multiplicity


@dataclass(frozen=True)
class RlctResult:
    """Pair plus the evidence: which flats attain the minimum ratio.

    witness_chain is one longest strictly increasing chain of minimizer
    flats (smallest flat first); its length equals the multiplicity.
    """

    pair: RlctPair
    witness_chain: tuple[Flat, ...]
    minimizer_flats: tuple[Flat, ...]
    lattice: IntersectionLattice

    def to_json_dict(self) -> dict:
        return {
            "lambda": format_rational(self.pair.threshold),
            "m": self.pair.multiplicity,
            "minimizer_flats": [flat.to_json_dict() for flat in self.minimizer_flats],
            "witness_chain": [flat.to_json_dict() for flat in self.witness_chain],
        }


def rlct_central(arr: NormalizedArrangement) -> RlctResult:
    """Threshold and multiplicity of a central arrangement, exactly.

    The multiplicity is found by dynamic programming for the longest chain
    in the minimizers' containment order, processing flats by decreasing
    codimension; ties break toward the deterministic lattice order so the
    witness chain is reproducible.
    """
    if not arr.is_central:
        raise CentralityError("rlct_central needs a central arrangement; use rlct_affine")
    lat = build_lattice(arr)
    ratios = [Fraction(flat.codim, flat.weight) for flat in lat.flats]
    threshold = min(ratios)
    minimizer_indices = [i for i, r in enumerate(ratios) if r == threshold]
    minimizers = [lat.flats[i] for i in minimizer_indices]

    multiplicity, chain = _longest_chain(minimizers)
    return RlctResult(
        pair=RlctPair(threshold=threshold, multiplicity=multiplicity),
        witness_chain=tuple(chain),
        minimizer_flats=tuple(minimizers),
        lattice=lat,
    )


def _longest_chain(flats: list[Flat]) -> tuple[int, list[Flat]]:
    """Longest strictly nested chain among `flats`, with one witness.

    Containment reverses member sets (valid because all flats come from one
    lattice): flat j lies strictly inside flat i iff members(i) is a proper
    subset of members(j). Returns (length, chain smallest-flat-first).
    """
    if not flats:
        return 0, []
    masks = []
    for flat in flats:
        mask = 0
        for j in flat.members:
            mask |= 1 << j
        masks.append(mask)
    # Process by decreasing codim; every proper subflat of a flat has
    # strictly larger codim, so predecessors are always processed first.
    # First-wins ties keep the witness deterministic.
    order = sorted(range(len(flats)), key=lambda i: (-flats[i].codim, flats[i].sort_key()))
    best_len = [0] * len(flats)
    parent: list[int | None] = [None] * len(flats)
    for pos, i in enumerate(order):
        best_len[i] = 1
        for j in order[:pos]:
            if best_len[j] + 1 > best_len[i] and masks[i] != masks[j] and masks[i] & masks[j] == masks[i]:
                best_len[i] = best_len[j] + 1
                parent[i] = j
    end = order[0]
    for i in order[1:]:
        if best_len[i] > best_len[end]:
            end = i
    chain = []
    node: int | None = end
    while node is not None:
        chain.append(flats[node])
        node = parent[node]
    chain.reverse()
    return best_len[end], chain


def rlct_line_arrangement_2d(multiplicities) -> RlctPair:
    """Closed form for central line arrangements in the plane.

    With multiplicities sorted ascending and s_n the largest: the threshold
    is 1/s_n when the sum of the others is at most s_n, else 2/(sum of all);
    the multiplicity is 2 exactly when the sum of the others equals s_n.
    """
    s = sorted(multiplicities)
    if not s:
        raise EmptyArrangementError("no lines given")
    for value in s:
        if isinstance(value, bool) or not isinstance(value, int) or value < 1:
            raise InvalidMultiplicityError(f"line multiplicity {value!r} must be a positive integer")
    top = s[-1]
    rest = sum(s[:-1])
    if rest <= top:
        threshold = Fraction(1, top)
    else:
        threshold = Fraction(2, rest + top)
    return RlctPair(threshold=threshold, multiplicity=2 if rest == top else 1)


@dataclass(frozen=True)
class Localization:
    """A maximal central sub-arrangement: the hyperplanes through one point."""

    point: tuple[Fraction, ...]
    arrangement: NormalizedArrangement
    result: RlctResult

    @property
    def pair(self) -> RlctPair:
        return self.result.pair

    def to_json_dict(self) -> dict:
        doc = {"point": [format_rational(x) for x in self.point]}
        doc.update(self.result.to_json_dict())
        doc["normals"] = self.arrangement.normals.to_string_lists()
        doc["multiplicities"] = list(self.arrangement.multiplicities)
        return doc


@dataclass(frozen=True)
class LocalizationReport:
    """All maximal localizations of an affine arrangement plus the global pair."""

    localizations: tuple[Localization, ...]
    global_index: int

    @property
    def global_result(self) -> RlctResult:
        return self.localizations[self.global_index].result

    @property
    def global_pair(self) -> RlctPair:
        return self.global_result.pair

    def to_json_dict(self) -> dict:
        doc = self.global_result.to_json_dict()
        doc["localizations"] = [loc.to_json_dict() for loc in self.localizations]
        doc["global_point"] = [format_rational(x) for x in self.localizations[self.global_index].point]
        return doc


def maximal_central_localizations(
    arr: NormalizedArrangement,
) -> list[tuple[tuple[Fraction, ...], NormalizedArrangement]]:
    """Points where maximal subsets of the hyperplanes meet, with the
    centered sub-arrangements they define.

    Affine flats are enumerated by the same closure idea as the lattice but
    on augmented rows (a | b); a subset has empty intersection exactly when
    elimination pivots in the offset column, and such candidates are
    discarded. Only member sets maximal under inclusion are returned. The
    witness point is the particular solution with free variables at zero.
    """
    n, d = arr.n, arr.dim
    if n == 0:
        raise EmptyArrangementError("arrangement has no hyperplanes")
    augmented = [
        primitive_int_row(tuple(arr.normals.row(j)) + (arr.offsets[j],)) for j in range(n)
    ]

    seen: dict[tuple, tuple[IntegerEchelon, int]] = {}
    frontier: list[tuple[IntegerEchelon, int]] = []
    for j in range(n):
        ech = IntegerEchelon(d + 1).inserted(augmented[j])
        if ech.key() not in seen:
            mask = 1 << j
            for k in range(n):
                if not mask >> k & 1 and ech.contains(augmented[k]):
                    mask |= 1 << k
            entry = (ech, mask)
            seen[ech.key()] = entry
            frontier.append(entry)

    while frontier:
        next_frontier = []
        for ech, mask in frontier:
            if ech.rank == d:
                continue
            for j in range(n):
                if mask >> j & 1:
                    continue
                bigger = ech.inserted(augmented[j])
                if bigger.pivots[-1] == d:
                    # Offset-column pivot: the subset has no common point.
                    continue
                key = bigger.key()
                if key in seen:
                    continue
                new_mask = mask | 1 << j
                for k in range(n):
                    if not new_mask >> k & 1 and bigger.contains(augmented[k]):
                        new_mask |= 1 << k
                entry = (bigger, new_mask)
                seen[key] = entry
                next_frontier.append(entry)
        frontier = next_frontier

    # Keep only member sets maximal under inclusion.
    entries = list(seen.values())
    maximal = []
    for ech, mask in entries:
        if not any(other != mask and other & mask == mask for _, other in entries):
            maximal.append((ech, mask))

    out = []
    for ech, mask in maximal:
        members = sorted(j for j in range(n) if mask >> j & 1)
        point = _particular_solution(ech, d)
        sub = NormalizedArrangement(
            normals=RationalMatrix([arr.normals.row(j) for j in members], cols=d),
            offsets=(Fraction(0),) * len(members),
            multiplicities=tuple(arr.multiplicities[j] for j in members),
            is_central=True,
            variables=arr.variables,
        )
        out.append((point, sub, tuple(members)))
    out.sort(key=lambda item: item[2])
    return [(point, sub) for point, sub, _ in out]


def _particular_solution(ech: IntegerEchelon, d: int) -> tuple[Fraction, ...]:
    """Solve a.x + b = 0 for the augmented echelon, free variables at zero."""
    point = [Fraction(0)] * d
    reduced = ech.to_rational_canonical()
    for i, pc in enumerate(ech.pivots):
        # Consistent systems never pivot in the offset column.
        point[pc] = -reduced[i, d]
    return tuple(point)


def rlct_affine(arr: NormalizedArrangement) -> LocalizationReport:
    """Global pair of an affine arrangement via its maximal localizations.

    Central inputs produce a single localization at the origin, so the
    report then agrees with `rlct_central` exactly.
    """
    localizations = []
    for point, sub in maximal_central_localizations(arr):
        localizations.append(Localization(point=point, arrangement=sub, result=rlct_central(sub)))
    best = 0
    for i in range(1, len(localizations)):
        if pair_less(localizations[i].pair, localizations[best].pair):
            best = i
    return LocalizationReport(localizations=tuple(localizations), global_index=best)
