"""Arrangement data model: validation, normalization, and ingestion.

An arrangement is n affine hyperplanes a_i . x + b_i = 0 in d variables,
each carrying an integer multiplicity s_i, together encoding the product
of linear forms f = L_1^{s_1} ... L_n^{s_n}. Normalization merges rows
that define the same affine hyperplane (summing multiplicities), drops
rows with multiplicity zero, and rescales every normal so its first
nonzero entry is 1, which makes row identity a plain equality test.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .errors import (
    DimensionError,
    EmptyArrangementError,
    InvalidHyperplaneError,
    InvalidMultiplicityError,
)
from .ratlinalg import RationalLike, RationalMatrix, as_rational, format_rational


def _check_multiplicities(multiplicities: Sequence[int]) -> tuple[int, ...]:
    out = []
    for s in multiplicities:
        if isinstance(s, bool) or not isinstance(s, int):
            raise InvalidMultiplicityError(f"multiplicity {s!r} is not an integer")
        if s < 0:
            raise InvalidMultiplicityError(f"multiplicity {s} is negative")
        out.append(s)
    return tuple(out)


@dataclass(frozen=True)
class ArrangementSpec:
    """Raw, possibly redundant arrangement as supplied by the user."""

    normals: RationalMatrix
    offsets: tuple[Fraction, ...]
    multiplicities: tuple[int, ...]
    # Names are presentation only; they do not enter equality or hashing.
    variables: tuple[str, ...] | None = field(default=None, compare=False)

    def __init__(
        self,
        normals,
        multiplicities: Sequence[int],
        offsets: Sequence[RationalLike] | None = None,
        variables: Sequence[str] | None = None,
    ):
        if not isinstance(normals, RationalMatrix):
            normals = RationalMatrix(normals)
        n = normals.rows
        if offsets is None:
            offs = (Fraction(0),) * n
        else:
            offs = tuple(as_rational(b) for b in offsets)
            if len(offs) != n:
                raise DimensionError(f"{len(offs)} offsets for {n} hyperplanes")
        mults = _check_multiplicities(multiplicities)
        if len(mults) != n:
            raise DimensionError(f"{len(mults)} multiplicities for {n} hyperplanes")
        if variables is not None:
            variables = tuple(variables)
            if len(variables) != normals.cols:
                raise DimensionError(f"{len(variables)} variable names for {normals.cols} columns")
        object.__setattr__(self, "normals", normals)
        object.__setattr__(self, "offsets", offs)
        object.__setattr__(self, "multiplicities", mults)
        object.__setattr__(self, "variables", variables)

    @property
    def n(self) -> int:
        return self.normals.rows

    @property
    def dim(self) -> int:
        return self.normals.cols


@dataclass(frozen=True)
class NormalizedArrangement:
    """Deduplicated arrangement: pairwise distinct affine hyperplanes, s_i >= 1.

    Rows are sorted lexicographically by (normal, offset) and every normal
    has first nonzero entry 1, so equal arrangements are equal values.
    """

    normals: RationalMatrix
    offsets: tuple[Fraction, ...]
    multiplicities: tuple[int, ...]
    is_central: bool
    # Names are presentation only; they do not enter equality or hashing.
    variables: tuple[str, ...] | None = field(default=None, compare=False)

    @property
    def n(self) -> int:
        return self.normals.rows

    @property
    def dim(self) -> int:
        return self.normals.cols

    def hyperplane(self, j: int) -> tuple[tuple[Fraction, ...], Fraction, int]:
        return self.normals.row(j), self.offsets[j], self.multiplicities[j]

    def total_multiplicity(self) -> int:
        return sum(self.multiplicities)

    def var_names(self) -> tuple[str, ...]:
        if self.variables is not None:
            return self.variables
        return tuple(f"x{i + 1}" for i in range(self.dim))


def normalize(spec: ArrangementSpec) -> NormalizedArrangement:
    """Validate and canonicalize an arrangement.

    Drops multiplicity-0 rows, rejects zero normals, merges rows whose
    affine forms (a_i, b_i) are proportional, rescales each survivor so the
    first nonzero normal entry is 1, and sorts rows lexicographically.
    """
    if spec.n == 0:
        raise EmptyArrangementError("arrangement has no hyperplanes")
    merged: dict[tuple[tuple[Fraction, ...], Fraction], int] = {}
    for i in range(spec.n):
        s = spec.multiplicities[i]
        if s == 0:
            continue
        normal = spec.normals.row(i)
        lead = next((x for x in normal if x != 0), None)
        if lead is None:
            raise InvalidHyperplaneError(f"row {i} has a zero normal vector with multiplicity {s}")
        scaled = tuple(x / lead for x in normal)
        offset = spec.offsets[i] / lead
        key = (scaled, offset)
        merged[key] = merged.get(key, 0) + s
    if not merged:
        raise EmptyArrangementError("all rows were dropped (every multiplicity is zero)")
    ordered = sorted(merged.items())
    normals = RationalMatrix([key[0] for key, _ in ordered], cols=spec.dim)
    offsets = tuple(key[1] for key, _ in ordered)
    multiplicities = tuple(s for _, s in ordered)
    return NormalizedArrangement(
        normals=normals,
        offsets=offsets,
        multiplicities=multiplicities,
        is_central=all(b == 0 for b in offsets),
        variables=spec.variables,
    )


# ---------------------------------------------------------------------------
# JSON / CSV ingestion
# ---------------------------------------------------------------------------


def arrangement_from_json(document: str | Mapping) -> ArrangementSpec:
    """Read the JSON input document.

    Either {"polynomial": "<factored text>"} or
    {"variables": [...]?, "normals": [[...]], "offsets": [...]?,
     "multiplicities": [...]} with rationals as "p/q" strings or integers.
    """
    data = json.loads(document) if isinstance(document, str) else document
    if not isinstance(data, Mapping):
        raise DimensionError("JSON input must be an object")
    if "polynomial" in data:
        from .parser import parse_factored_product

        return parse_factored_product(data["polynomial"])
    if "normals" not in data:
        raise DimensionError('JSON input needs either "polynomial" or "normals"')
    normals = RationalMatrix(data["normals"])
    if "multiplicities" not in data:
        raise DimensionError('JSON input with "normals" needs "multiplicities"')
    mults = data["multiplicities"]
    offsets = data.get("offsets")
    variables = data.get("variables")
    return ArrangementSpec(normals, mults, offsets=offsets, variables=variables)


def arrangement_to_json_dict(arr: NormalizedArrangement) -> dict:
    """Serializable form of a normalized arrangement; rationals become strings."""
    return {
        "variables": list(arr.var_names()),
        "normals": arr.normals.to_string_lists(),
        "offsets": [format_rational(b) for b in arr.offsets],
        "multiplicities": list(arr.multiplicities),
        "central": arr.is_central,
    }


def arrangement_from_csv(text: str, dim: int | None = None) -> ArrangementSpec:
    """Read the CSV matrix form: one hyperplane per line.

    Columns are d rational normal entries, then the multiplicity, then an
    optional offset. The offset column is only recognizable when `dim` is
    given; without it every line is read as central (d = width - 1).
    Blank lines and lines starting with '#' are skipped.
    """
    rows = []
    for line_no, record in enumerate(csv.reader(io.StringIO(text)), start=1):
        fields = [f.strip() for f in record if f.strip() != ""]
        if not fields or fields[0].startswith("#"):
            continue
        if dim is None:
            d = len(fields) - 1
            has_offset = False
        else:
            d = dim
            if len(fields) == d + 1:
                has_offset = False
            elif len(fields) == d + 2:
                has_offset = True
            else:
                raise DimensionError(f"line {line_no}: expected {d + 1} or {d + 2} fields, got {len(fields)}")
        if d < 1:
            raise DimensionError(f"line {line_no}: too few fields")
        try:
            normal = [as_rational(f) for f in fields[:d]]
            mult = int(fields[d])
            offset = as_rational(fields[d + 1]) if has_offset else Fraction(0)
        except (ValueError, ZeroDivisionError) as exc:
            raise DimensionError(f"line {line_no}: {exc}") from exc
        rows.append((normal, mult, offset))
    if not rows:
        raise EmptyArrangementError("CSV input contains no hyperplane rows")
    widths = {len(r[0]) for r in rows}
    if len(widths) != 1:
        raise DimensionError(f"inconsistent row widths in CSV input: {sorted(widths)}")
    return ArrangementSpec(
        RationalMatrix([r[0] for r in rows]),
        [r[1] for r in rows],
        offsets=[r[2] for r in rows],
    )
