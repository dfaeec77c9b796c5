"""Naive reference implementations used for cross-checking.

These deliberately mirror the textbook all-subsets construction: every
nonempty subset of hyperplanes contributes the kernel of its stacked
normals, kernels are deduplicated, and membership is re-derived by dot
products against kernel basis vectors. Nothing here shares code paths
with the closure-based production routines, which is the point; the CLI
`--verify` flag and the test suite compare the two.
"""

from __future__ import annotations

from itertools import combinations

from .arrangement import NormalizedArrangement
from .errors import CentralityError, SizeLimitError
from .lattice import Flat, IntersectionLattice
from .ratlinalg import RationalMatrix, kernel_basis, subspace_leq

MAX_BRUTEFORCE_HYPERPLANES = 20
MAX_BRUTEFORCE_CHAIN_FLATS = 50


def lattice_bruteforce(arr: NormalizedArrangement) -> IntersectionLattice:
    """All-subsets intersection lattice; cost grows as 2^n.

    Flats are kernels of stacked normal subsets; the normal space of a flat
    is recovered as the kernel of its kernel basis, which lands in the same
    canonical form the production path uses.
    """
    if not arr.is_central:
        raise CentralityError("the brute-force lattice needs a central arrangement")
    n, d = arr.n, arr.dim
    if n > MAX_BRUTEFORCE_HYPERPLANES:
        raise SizeLimitError(f"brute force is capped at {MAX_BRUTEFORCE_HYPERPLANES} hyperplanes, got {n}")
    kernels: dict[RationalMatrix, None] = {}
    for r in range(1, n + 1):
        for comb in combinations(range(n), r):
            stacked = RationalMatrix([arr.normals.row(j) for j in comb], cols=d)
            kernels.setdefault(kernel_basis(stacked))
    flats = []
    for kernel in kernels:
        members = frozenset(
            j
            for j in range(n)
            if all(
                sum(a * v for a, v in zip(arr.normals.row(j), vec)) == 0 for vec in kernel
            )
        )
        normal_space = kernel_basis(kernel)
        flats.append(
            Flat(
                normal_space=normal_space,
                codim=normal_space.rows,
                weight=sum(arr.multiplicities[j] for j in members),
                members=members,
            )
        )
    flats.sort(key=Flat.sort_key)
    return IntersectionLattice(flats=tuple(flats), dim=d, n_hyperplanes=n)


def longest_chain_bruteforce(flats) -> int:
    """Length of the longest strictly nested chain, by exhaustive extension.

    Containment is tested geometrically on normal spaces (subspace_leq), not
    through member sets, so this really is an independent route.
    """
    flats = list(flats)
    if len(flats) > MAX_BRUTEFORCE_CHAIN_FLATS:
        raise SizeLimitError(
            f"brute-force chain search is capped at {MAX_BRUTEFORCE_CHAIN_FLATS} flats, got {len(flats)}"
        )
    if not flats:
        return 0
    strictly_above: list[list[int]] = []
    for i, low in enumerate(flats):
        above = []
        for j, high in enumerate(flats):
            if i != j and subspace_leq(low.normal_space, high.normal_space):
                if low.normal_space != high.normal_space:
                    above.append(j)
        strictly_above.append(above)

    memo: dict[int, int] = {}

    def extend(i: int) -> int:
        if i not in memo:
            memo[i] = 1 + max((extend(j) for j in strictly_above[i]), default=0)
        return memo[i]

    return max(extend(i) for i in range(len(flats)))
