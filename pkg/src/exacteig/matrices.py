"""Dense exact matrices and vectors over the Gaussian rationals.

Everything here is immutable and pure: operations return new values and
never mutate their inputs. The :class:`OpCounter` instruments the scalar
field operations (multiplications, additions/subtractions, divisions)
actually performed by the algorithms that accept one — the benchmark
compares extraction methods by these machine-independent counts.

Counting conventions (documented so the reported numbers are meaningful):

* products count one multiplication per scalar pair and one addition per
  accumulation step;
* row reduction counts the divisions used to scale a pivot row and the
  multiply/subtract pairs of each elimination step it actually performs
  (entries already zero are skipped and not counted);
* negations and the cosmetic rescaling of output vectors are not counted.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, lcm

from .errors import (
    DimensionMismatch,
    NotSquare,
    Singular,
    ZeroVector,
)
from .scalars import ONE, ZERO, GaussianRational, Rational, format_scalar, to_scalar

__all__ = [
    "Matrix",
    "OpCounter",
    "Vector",
    "cross3",
    "det",
    "hstack",
    "inverse",
    "is_independent",
    "matmul",
    "matvec",
    "normalize_eigenvector",
    "nullspace_basis",
    "rank",
    "rref",
    "subtract_scalar_diag",
    "trace",
]


@dataclass
class OpCounter:
    """Tally of exact scalar field operations.

    One counter belongs to one computation context; never share an
    instance between concurrent computations.
    """

    scalar_mults: int = 0
    scalar_adds: int = 0
    scalar_divs: int = 0

    def tally(self, mults=0, adds=0, divs=0):
        self.scalar_mults += mults
        self.scalar_adds += adds
        self.scalar_divs += divs

    @property
    def total(self):
        return self.scalar_mults + self.scalar_adds + self.scalar_divs

    def as_dict(self):
        return {
            "scalar_mults": self.scalar_mults,
            "scalar_adds": self.scalar_adds,
            "scalar_divs": self.scalar_divs,
        }


class Vector:
    """Immutable exact vector; ``orientation`` is ``"column"`` or ``"row"``.

    Orientation matters for matrix-vector products and equality; a row
    vector is the carrier for left eigenvectors.
    """

    __slots__ = ("entries", "orientation")

    def __init__(self, entries, orientation="column"):
        data = tuple(to_scalar(e) for e in entries)
        if not data:
            raise DimensionMismatch("empty vector")
        if orientation not in ("column", "row"):
            raise ValueError(f"bad orientation {orientation!r}")
        object.__setattr__(self, "entries", data)
        object.__setattr__(self, "orientation", orientation)

    def __setattr__(self, name, value):
        raise AttributeError("Vector is immutable")

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def is_zero(self):
        return not any(self.entries)

    def first_nonzero_index(self):
        for i, e in enumerate(self.entries):
            if e:
                return i
        return None

    def scaled(self, c):
        c = to_scalar(c)
        return Vector((e * c for e in self.entries), self.orientation)

    def transposed(self):
        flipped = "row" if self.orientation == "column" else "column"
        return Vector(self.entries, flipped)

    def dot(self, other):
        """Bilinear dot product Σ uᵢvᵢ (no conjugation), orientation-blind."""
        if len(self) != len(other):
            raise DimensionMismatch(
                f"dot of lengths {len(self)} and {len(other)}")
        total = ZERO
        for a, b in zip(self.entries, other.entries):
            total = total + a * b
        return total

    def __add__(self, other):
        if not isinstance(other, Vector):
            return NotImplemented
        if self.orientation != other.orientation or len(self) != len(other):
            raise DimensionMismatch("vector shapes differ")
        return Vector((a + b for a, b in zip(self.entries, other.entries)),
                      self.orientation)

    def __sub__(self, other):
        if not isinstance(other, Vector):
            return NotImplemented
        if self.orientation != other.orientation or len(self) != len(other):
            raise DimensionMismatch("vector shapes differ")
        return Vector((a - b for a, b in zip(self.entries, other.entries)),
                      self.orientation)

    def __neg__(self):
        return Vector((-e for e in self.entries), self.orientation)

    def __eq__(self, other):
        if not isinstance(other, Vector):
            return NotImplemented
        return (self.orientation == other.orientation
                and self.entries == other.entries)

    def __hash__(self):
        return hash((self.orientation, self.entries))

    def __repr__(self):
        body = ", ".join(format_scalar(e) for e in self.entries)
        tag = "" if self.orientation == "column" else "^T"
        return f"[{body}]{tag}"


class Matrix:
    """Immutable dense matrix of GaussianRational entries (row-major)."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, entries):
        data = tuple(tuple(to_scalar(e) for e in row) for row in entries)
        if not data or not data[0]:
            raise DimensionMismatch("matrix needs at least one row and column")
        width = len(data[0])
        if any(len(row) != width for row in data):
            raise DimensionMismatch("ragged rows")
        object.__setattr__(self, "rows", len(data))
        object.__setattr__(self, "cols", width)
        object.__setattr__(self, "_data", data)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def _wrap(cls, data):
        self = object.__new__(cls)
        object.__setattr__(self, "rows", len(data))
        object.__setattr__(self, "cols", len(data[0]))
        object.__setattr__(self, "_data", data)
        return self

    @classmethod
    def identity(cls, n):
        return cls._wrap(tuple(
            tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)))

    @classmethod
    def zeros(cls, rows, cols):
        return cls._wrap(tuple(tuple(ZERO for _ in range(cols))
                               for _ in range(rows)))

    @classmethod
    def diagonal(cls, values):
        vals = [to_scalar(v) for v in values]
        n = len(vals)
        return cls._wrap(tuple(
            tuple(vals[i] if i == j else ZERO for j in range(n))
            for i in range(n)))

    @classmethod
    def from_columns(cls, columns):
        cols = [list(c) for c in columns]
        if not cols:
            raise DimensionMismatch("no columns")
        height = len(cols[0])
        if any(len(c) != height for c in cols):
            raise DimensionMismatch("column lengths differ")
        return cls(((col[i] for col in cols) for i in range(height)))

    @classmethod
    def from_rows(cls, rows):
        return cls((tuple(r) for r in rows))

    @property
    def is_square(self):
        return self.rows == self.cols

    def entry(self, i, j):
        return self._data[i][j]

    def row(self, i):
        return Vector(self._data[i], "row")

    def column(self, j):
        return Vector((r[j] for r in self._data), "column")

    def row_entries(self, i):
        return self._data[i]

    def columns(self):
        return [self.column(j) for j in range(self.cols)]

    def transpose(self):
        return Matrix._wrap(tuple(
            tuple(self._data[i][j] for i in range(self.rows))
            for j in range(self.cols)))

    def is_zero(self):
        return all(not e for row in self._data for e in row)

    def scaled(self, c):
        c = to_scalar(c)
        return Matrix._wrap(tuple(tuple(e * c for e in row)
                                  for row in self._data))

    def __add__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatch("matrix shapes differ")
        return Matrix._wrap(tuple(
            tuple(a + b for a, b in zip(r1, r2))
            for r1, r2 in zip(self._data, other._data)))

    def __sub__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatch("matrix shapes differ")
        return Matrix._wrap(tuple(
            tuple(a - b for a, b in zip(r1, r2))
            for r1, r2 in zip(self._data, other._data)))

    def __neg__(self):
        return Matrix._wrap(tuple(tuple(-e for e in row) for row in self._data))

    def __mul__(self, c):
        if isinstance(c, Matrix):
            return NotImplemented
        return self.scaled(c)

    __rmul__ = __mul__

    def __matmul__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return matmul(self, other)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self._data == other._data

    def __hash__(self):
        return hash(self._data)

    def __repr__(self):
        rows = ", ".join(
            "[" + ", ".join(format_scalar(e) for e in row) + "]"
            for row in self._data)
        return f"Matrix([{rows}])"


def _require_square(a):
    if not a.is_square:
        raise NotSquare(f"{a.rows}x{a.cols} matrix where square is required")


def matmul(a, b, counter=None):
    """Exact matrix product A·B."""
    if a.cols != b.rows:
        raise DimensionMismatch(f"{a.rows}x{a.cols} @ {b.rows}x{b.cols}")
    bt = b.transpose()
    out = []
    for arow in a._data:
        out_row = []
        for bcol in bt._data:
            acc = arow[0] * bcol[0]
            for k in range(1, a.cols):
                acc = acc + arow[k] * bcol[k]
            out_row.append(acc)
        out.append(tuple(out_row))
    if counter is not None:
        counter.tally(mults=a.rows * a.cols * b.cols,
                      adds=a.rows * (a.cols - 1) * b.cols)
    return Matrix._wrap(tuple(out))


def matvec(a, v, counter=None):
    """A·v for a column vector, or v·A for a row vector."""
    if v.orientation == "column":
        if len(v) != a.cols:
            raise DimensionMismatch(f"{a.rows}x{a.cols} @ column of {len(v)}")
        ve = v.entries
        result = []
        for arow in a._data:
            acc = arow[0] * ve[0]
            for k in range(1, a.cols):
                acc = acc + arow[k] * ve[k]
            result.append(acc)
        if counter is not None:
            counter.tally(mults=a.rows * a.cols, adds=a.rows * (a.cols - 1))
        return Vector(result, "column")
    if len(v) != a.rows:
        raise DimensionMismatch(f"row of {len(v)} @ {a.rows}x{a.cols}")
    ve = v.entries
    result = []
    for j in range(a.cols):
        acc = ve[0] * a._data[0][j]
        for i in range(1, a.rows):
            acc = acc + ve[i] * a._data[i][j]
        result.append(acc)
    if counter is not None:
        counter.tally(mults=a.rows * a.cols, adds=(a.rows - 1) * a.cols)
    return Vector(result, "row")


def trace(a, counter=None):
    _require_square(a)
    acc = a._data[0][0]
    for i in range(1, a.rows):
        acc = acc + a._data[i][i]
    if counter is not None:
        counter.tally(adds=a.rows - 1)
    return acc


def subtract_scalar_diag(a, lam):
    """The characteristic (shifted) matrix A − λI."""
    _require_square(a)
    lam = to_scalar(lam)
    return Matrix._wrap(tuple(
        tuple(e - lam if i == j else e for j, e in enumerate(row))
        for i, row in enumerate(a._data)))


def hstack(a, b):
    """[A | B] with equal row counts."""
    if a.rows != b.rows:
        raise DimensionMismatch("row counts differ")
    return Matrix._wrap(tuple(ra + rb for ra, rb in zip(a._data, b._data)))


def rref(a, counter=None):
    """Reduced row echelon form.

    Returns ``(R, pivots)`` with pivot column indices ascending. Pivot
    choice is the first nonzero entry down each column — the only
    deterministic rule that makes sense in exact arithmetic.
    """
    m = [list(row) for row in a._data]
    nrows, ncols = a.rows, a.cols
    pivots = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, nrows):
            if m[i][c]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        if pivot_row != r:
            m[r], m[pivot_row] = m[pivot_row], m[r]
        p = m[r][c]
        if p != ONE:
            divs = 0
            for j in range(c, ncols):
                if m[r][j]:
                    m[r][j] = m[r][j] / p
                    divs += 1
            if counter is not None:
                counter.tally(divs=divs)
        for i in range(nrows):
            if i == r or not m[i][c]:
                continue
            f = m[i][c]
            m[i][c] = ZERO
            ops = 0
            for j in range(c + 1, ncols):
                if m[r][j]:
                    m[i][j] = m[i][j] - f * m[r][j]
                    ops += 1
            if counter is not None:
                counter.tally(mults=ops, adds=ops)
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return Matrix._wrap(tuple(tuple(row) for row in m)), tuple(pivots)


def rank(a, counter=None):
    return len(rref(a, counter)[1])


def nullspace_basis(a, counter=None):
    """Exact basis of the null space from the free-variable
    parameterization of the RREF, each vector in canonical normalized
    form. Empty list when the matrix is injective."""
    reduced, pivots = rref(a, counter)
    pivot_set = set(pivots)
    basis = []
    for free_col in range(a.cols):
        if free_col in pivot_set:
            continue
        v = [ZERO] * a.cols
        v[free_col] = ONE
        for k, pivot_col in enumerate(pivots):
            v[pivot_col] = -reduced._data[k][free_col]
        basis.append(normalize_eigenvector(Vector(v)))
    return basis


def det(a, counter=None):
    """Exact determinant via fraction-tracked forward elimination."""
    _require_square(a)
    n = a.rows
    m = [list(row) for row in a._data]
    sign = 1
    for c in range(n):
        pivot_row = None
        for i in range(c, n):
            if m[i][c]:
                pivot_row = i
                break
        if pivot_row is None:
            return ZERO
        if pivot_row != c:
            m[c], m[pivot_row] = m[pivot_row], m[c]
            sign = -sign
        p = m[c][c]
        for i in range(c + 1, n):
            if not m[i][c]:
                continue
            f = m[i][c] / p
            m[i][c] = ZERO
            ops = 0
            for j in range(c + 1, n):
                if m[c][j]:
                    m[i][j] = m[i][j] - f * m[c][j]
                    ops += 1
            if counter is not None:
                counter.tally(mults=ops, adds=ops, divs=1)
    result = m[0][0]
    for i in range(1, n):
        result = result * m[i][i]
    if counter is not None:
        counter.tally(mults=n - 1)
    if sign < 0:
        result = -result
    return result


def inverse(a, counter=None):
    """Exact inverse via Gauss–Jordan on [A | I]; raises Singular."""
    _require_square(a)
    n = a.rows
    reduced, pivots = rref(hstack(a, Matrix.identity(n)), counter)
    if pivots != tuple(range(n)):
        # a singular left block pushes pivots into the identity half
        raise Singular("matrix is singular")
    return Matrix._wrap(tuple(row[n:] for row in reduced._data))


def cross3(u, v, counter=None):
    """Standard determinant-expansion cross product of two length-3
    vectors; exactly orthogonal (bilinear dot) to both inputs."""
    if len(u) != 3 or len(v) != 3:
        raise DimensionMismatch("cross product needs length-3 vectors")
    a1, a2, a3 = u.entries
    b1, b2, b3 = v.entries
    out = (a2 * b3 - a3 * b2, a3 * b1 - a1 * b3, a1 * b2 - a2 * b1)
    if counter is not None:
        counter.tally(mults=6, adds=3)
    return Vector(out, "column")


def is_independent(vectors, candidate, counter=None):
    """True when ``candidate`` lies outside the span of ``vectors``.

    The given vectors are assumed linearly independent (they come from a
    basis under construction); the test is an exact rank comparison.
    """
    if candidate.is_zero():
        return False
    if not vectors:
        return True
    stacked = Matrix.from_rows(
        [v.entries for v in vectors] + [candidate.entries])
    return rank(stacked, counter) == len(vectors) + 1


def _denominator_lcm(entries):
    result = 1
    for e in entries:
        result = lcm(result, e.re.denominator, e.im.denominator)
    return result


def _numerator_gcd(entries):
    result = 0
    for e in entries:
        result = gcd(result, abs(e.re.numerator), abs(e.im.numerator))
    return result


def normalize_eigenvector(v):
    """Canonical representative of the line (or scaled family) through v.

    Divides by the first nonzero component, clears denominators by their
    LCM, and divides out the GCD of the integer numerators. The result is
    a primitive Gaussian-integer vector whose first nonzero component is a
    positive integer. Idempotent, and invariant under scaling by any
    nonzero Gaussian-rational factor — so equal inputs-up-to-scale yield
    the identical output.
    """
    idx = v.first_nonzero_index()
    if idx is None:
        raise ZeroVector("cannot normalize the zero vector")
    pivot = v[idx]
    directed = [e / pivot for e in v.entries]
    scale_up = _denominator_lcm(directed)
    scaled = [e * scale_up for e in directed]
    common = _numerator_gcd(scaled)
    factor = GaussianRational(Rational(1, common))
    return Vector((e * factor for e in scaled), v.orientation)
