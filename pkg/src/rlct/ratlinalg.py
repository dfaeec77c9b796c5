"""Exact dense linear algebra over the rationals.

Everything here is built on `fractions.Fraction`, so elimination never
rounds and canonical forms are unique per row space: two matrices span the
same row space if and only if `row_space_canonical` returns bit-identical
results for both. That uniqueness is what the lattice code uses to identify
flats.

A faster primitive-integer echelon representation (`IntegerEchelon`) backs
the lattice closure, where rows are inserted one at a time; its canonical
form is the rational RREF with each row rescaled to a primitive integer
vector, so it carries exactly the same identity guarantee.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Iterator, Sequence, Union

from .errors import DimensionError

Rational = Fraction

RationalLike = Union[Fraction, int, str]


def as_rational(value: RationalLike) -> Fraction:
    """Coerce an int, a "p/q" string, or a Fraction to a Fraction.

    Floats are rejected deliberately: all combinatorial computations are
    exact, and a float slipping in would silently poison that.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def format_rational(value: Fraction) -> str:
    """Serialize as "p/q", shortened to "p" for integers."""
    return str(value)


class RationalMatrix:
    """Immutable dense matrix of Fractions, row-major.

    A matrix may have zero rows (e.g. the kernel basis of an injective map),
    so the column count is tracked explicitly. Instances are hashable and
    compare by shape and entries.
    """

    __slots__ = ("_data", "_cols")

    def __init__(self, rows: Iterable[Iterable[RationalLike]] = (), cols: int | None = None):
        data = tuple(tuple(as_rational(x) for x in row) for row in rows)
        if data:
            width = len(data[0])
            if any(len(row) != width for row in data):
                raise DimensionError("rows have inconsistent lengths")
            if cols is not None and cols != width:
                raise DimensionError(f"cols={cols} does not match row width {width}")
            cols = width
        elif cols is None:
            raise DimensionError("a matrix with no rows needs an explicit column count")
        if cols < 1:
            raise DimensionError("matrices must have at least one column")
        self._data = data
        self._cols = cols

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        one, zero = Fraction(1), Fraction(0)
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)])

    @property
    def rows(self) -> int:
        return len(self._data)

    @property
    def cols(self) -> int:
        return self._cols

    @property
    def entries(self) -> tuple[tuple[Fraction, ...], ...]:
        return self._data

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self._data[i]

    def __getitem__(self, index: tuple[int, int]) -> Fraction:
        i, j = index
        return self._data[i][j]

    def __iter__(self) -> Iterator[tuple[Fraction, ...]]:
        return iter(self._data)

    def __len__(self) -> int:
        return len(self._data)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self._cols == other._cols and self._data == other._data

    def __hash__(self) -> int:
        return hash((self._cols, self._data))

    def __repr__(self) -> str:
        body = ", ".join("[" + ", ".join(str(x) for x in row) + "]" for row in self._data)
        return f"RationalMatrix([{body}], cols={self._cols})"

    def stack(self, other: "RationalMatrix") -> "RationalMatrix":
        """Vertical concatenation."""
        if other.cols != self._cols:
            raise DimensionError("cannot stack matrices with different column counts")
        return RationalMatrix(self._data + other._data, cols=self._cols)

    def stack_row(self, row: Sequence[RationalLike]) -> "RationalMatrix":
        return self.stack(RationalMatrix([row]))

    def transpose(self) -> "RationalMatrix":
        if not self._data:
            raise DimensionError("cannot transpose a matrix with no rows into zero columns")
        return RationalMatrix(list(zip(*self._data)), cols=len(self._data))

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self._cols != other.rows:
            raise DimensionError("inner dimensions do not match")
        cols = other.cols
        out = []
        for row in self._data:
            out.append(
                [sum((row[k] * other._data[k][j] for k in range(self._cols)), Fraction(0)) for j in range(cols)]
            )
        return RationalMatrix(out, cols=cols)

    def scale_row(self, i: int, factor: RationalLike) -> "RationalMatrix":
        c = as_rational(factor)
        rows = list(self._data)
        rows[i] = tuple(c * x for x in rows[i])
        return RationalMatrix(rows, cols=self._cols)

    def to_float_lists(self) -> list[list[float]]:
        return [[float(x) for x in row] for row in self._data]

    def to_string_lists(self) -> list[list[str]]:
        return [[format_rational(x) for x in row] for row in self._data]

    @classmethod
    def from_nested(cls, nested: Sequence[Sequence[RationalLike]], cols: int | None = None) -> "RationalMatrix":
        return cls(nested, cols=cols)


def rref(matrix: RationalMatrix) -> tuple[RationalMatrix, int, tuple[int, ...]]:
    """Reduced row echelon form by Gauss-Jordan elimination.

    Returns (R, rank, pivot_columns). R is unique for the row space of the
    input: pivots are 1, pivot columns are otherwise zero, zero rows trail.
    """
    work = [list(row) for row in matrix]
    n_rows, n_cols = matrix.rows, matrix.cols
    pivot_cols: list[int] = []
    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break
        pivot_row = next((i for i in range(r, n_rows) if work[i][c] != 0), None)
        if pivot_row is None:
            continue
        work[r], work[pivot_row] = work[pivot_row], work[r]
        pivot = work[r][c]
        if pivot != 1:
            work[r] = [x / pivot for x in work[r]]
        for i in range(n_rows):
            if i != r and work[i][c] != 0:
                factor = work[i][c]
                work[i] = [a - factor * b for a, b in zip(work[i], work[r])]
        pivot_cols.append(c)
        r += 1
    return RationalMatrix(work, cols=n_cols), r, tuple(pivot_cols)


def rank(matrix: RationalMatrix) -> int:
    return rref(matrix)[1]


def row_space_canonical(matrix: RationalMatrix) -> RationalMatrix:
    """RREF with zero rows removed: the canonical representative of a row space.

    Equal row spaces map to equal (hashable) matrices, so the result doubles
    as a dedup key.
    """
    reduced, rk, _ = rref(matrix)
    return RationalMatrix(reduced.entries[:rk], cols=matrix.cols)


def kernel_basis(matrix: RationalMatrix) -> RationalMatrix:
    """Canonical basis of the right kernel {x : Mx = 0}, one vector per row.

    The result has cols(M) - rank(M) rows and is itself in canonical
    (RREF, no zero rows) form.
    """
    reduced, rk, pivot_cols = rref(matrix)
    n_cols = matrix.cols
    pivot_set = set(pivot_cols)
    free_cols = [c for c in range(n_cols) if c not in pivot_set]
    basis = []
    for f in free_cols:
        vec = [Fraction(0)] * n_cols
        vec[f] = Fraction(1)
        for i, p in enumerate(pivot_cols):
            vec[p] = -reduced[i, f]
        basis.append(vec)
    return row_space_canonical(RationalMatrix(basis, cols=n_cols))


def row_in_row_space(row: Sequence[RationalLike], canonical: RationalMatrix) -> bool:
    """Membership test against a matrix already in canonical (RREF) form."""
    residue = [as_rational(x) for x in row]
    if len(residue) != canonical.cols:
        raise DimensionError("row length does not match matrix width")
    for basis_row in canonical:
        lead = next((c for c, x in enumerate(basis_row) if x != 0), None)
        if lead is None:
            continue
        factor = residue[lead]
        if factor != 0:
            residue = [a - factor * b for a, b in zip(residue, basis_row)]
    return all(x == 0 for x in residue)


def subspace_leq(w1_normals: RationalMatrix, w2_normals: RationalMatrix) -> bool:
    """True iff the flat with normal space w1 lies inside the flat with normal space w2.

    Containment of flats reverses containment of their normal spaces, so this
    checks row_space(w2) <= row_space(w1). Inputs need not be canonical.
    """
    if w1_normals.cols != w2_normals.cols:
        raise DimensionError("normal spaces live in different ambient dimensions")
    canon1 = row_space_canonical(w1_normals)
    return all(row_in_row_space(row, canon1) for row in w2_normals)


# ---------------------------------------------------------------------------
# Primitive-integer echelon forms (fast path for the lattice closure)
# ---------------------------------------------------------------------------


def _primitive(row: Sequence[int]) -> tuple[int, ...]:
    """Divide out the gcd and make the leading nonzero entry positive."""
    g = 0
    for x in row:
        g = gcd(g, x)
        if g == 1:
            break
    if g == 0:
        return tuple(row)
    lead = next(x for x in row if x != 0)
    if lead < 0:
        g = -g
    if g == 1:
        return tuple(row)
    return tuple(x // g for x in row)


def primitive_int_row(row: Sequence[RationalLike]) -> tuple[int, ...]:
    """Rescale a rational row to the primitive integer vector with positive lead."""
    fracs = [as_rational(x) for x in row]
    scale = 1
    for x in fracs:
        scale = scale * x.denominator // gcd(scale, x.denominator)
    return _primitive([int(x * scale) for x in fracs])


class IntegerEchelon:
    """Canonical echelon form of an integer row space, built one row at a time.

    Rows are primitive integer vectors with positive pivots, ordered by pivot
    column, and every pivot column is zero in all other rows. This is the
    rational RREF rescaled row-wise to integers, hence unique per row space;
    `key()` tuples therefore serve as flat identities.
    """

    __slots__ = ("cols", "rows", "pivots")

    def __init__(self, cols: int, rows: tuple[tuple[int, ...], ...] = (), pivots: tuple[int, ...] = ()):
        self.cols = cols
        self.rows = rows
        self.pivots = pivots

    @property
    def rank(self) -> int:
        return len(self.rows)

    def key(self) -> tuple[tuple[int, ...], ...]:
        return self.rows

    def reduce(self, row: Sequence[int]) -> tuple[int, ...]:
        """Eliminate all pivot columns from `row`; zero result means membership."""
        residue = list(row)
        for pivot_row, pc in zip(self.rows, self.pivots):
            c = residue[pc]
            if c:
                p = pivot_row[pc]
                residue = [p * a - c * b for a, b in zip(residue, pivot_row)]
        return _primitive(residue)

    def contains(self, row: Sequence[int]) -> bool:
        residue = self.reduce(row)
        return not any(residue)

    def inserted(self, row: Sequence[int]) -> "IntegerEchelon | None":
        """New echelon with `row` adjoined, or None if the row is already in the span."""
        residue = self.reduce(row)
        new_pivot = next((c for c, x in enumerate(residue) if x != 0), None)
        if new_pivot is None:
            return None
        p_new = residue[new_pivot]
        new_rows = []
        for pivot_row in self.rows:
            c = pivot_row[new_pivot]
            if c:
                pivot_row = _primitive([p_new * a - c * b for a, b in zip(pivot_row, residue)])
            new_rows.append(pivot_row)
        position = sum(1 for pc in self.pivots if pc < new_pivot)
        new_rows.insert(position, residue)
        new_pivots = self.pivots[:position] + (new_pivot,) + self.pivots[position:]
        return IntegerEchelon(self.cols, tuple(new_rows), new_pivots)

    def to_rational_canonical(self) -> RationalMatrix:
        """The canonical rational RREF of the row space (pivot entries 1)."""
        out = []
        for pivot_row, pc in zip(self.rows, self.pivots):
            pivot = Fraction(pivot_row[pc])
            out.append([Fraction(x) / pivot for x in pivot_row])
        return RationalMatrix(out, cols=self.cols)
