"""Exact max-plus scalars, vectors and matrices.

Finite scalars are :class:`fractions.Fraction`; the bottom element of the
semiring is the singleton :data:`NEG_INF`, which is absorbing for ``+`` and
neutral for ``max``.  Nothing in this module touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence, Union

from .errors import InputError


class _NegInf:
    """The bottom element of the max-plus semiring."""

    __slots__ = ()
    _instance: "_NegInf | None" = None

    def __new__(cls) -> "_NegInf":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "NEG_INF"

    def __str__(self) -> str:
        return "-inf"

    def __reduce__(self):
        return (_NegInf, ())

    def __hash__(self) -> int:
        return hash("max-plus bottom")

    def __eq__(self, other) -> bool:
        return other is self

    def __lt__(self, other) -> bool:
        return other is not self

    def __le__(self, other) -> bool:
        return True

    def __gt__(self, other) -> bool:
        return False

    def __ge__(self, other) -> bool:
        return other is self

    def __add__(self, other) -> "_NegInf":
        return self

    __radd__ = __add__

    def __sub__(self, other) -> "_NegInf":
        if other is self:
            raise InputError("-inf - -inf is undefined")
        return self


NEG_INF = _NegInf()

Weight = Union[Fraction, _NegInf]


def is_finite(x: Weight) -> bool:
    return x is not NEG_INF


def weight(x) -> Weight:
    """Coerce ``x`` (int, Fraction, ``"p/q"``, ``"-inf"``, NEG_INF) to a Weight."""
    if x is NEG_INF:
        return x
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise InputError(f"not a max-plus weight: {x!r}")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        token = x.strip()
        if token.lower() in ("-inf", "-∞", "bottom"):
            return NEG_INF
        try:
            return Fraction(token)
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"cannot parse weight {x!r}") from exc
    if isinstance(x, float):
        if x == float("-inf"):
            return NEG_INF
        raise InputError("floating-point weights are not accepted; use 'p/q'")
    raise InputError(f"not a max-plus weight: {x!r}")


def format_weight(x: Weight) -> str:
    return "-inf" if x is NEG_INF else str(x)


def tmax(values: Iterable[Weight]) -> Weight:
    """Max-plus sum; the max of an empty collection is bottom."""
    best: Weight = NEG_INF
    for x in values:
        if x > best:
            best = x
    return best


@dataclass(frozen=True)
class MaxPlusVector:
    entries: tuple

    def __post_init__(self):
        entries = tuple(weight(x) for x in self.entries)
        if not entries:
            raise InputError("vector must have positive dimension")
        object.__setattr__(self, "entries", entries)

    @property
    def dim(self) -> int:
        return len(self.entries)

    def __getitem__(self, i: int) -> Weight:
        return self.entries[i]

    def __iter__(self):
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def is_finite(self) -> bool:
        return all(x is not NEG_INF for x in self.entries)

    def norm(self) -> Fraction:
        """max_i v_i - min_i v_i, defined only for finite vectors."""
        if not self.is_finite():
            raise InputError("norm is only defined for finite vectors")
        return max(self.entries) - min(self.entries)

    def shift(self, lam) -> "MaxPlusVector":
        lam = _finite(lam)
        return MaxPlusVector(tuple(x + lam for x in self.entries))

    def __str__(self) -> str:
        return "(" + ", ".join(format_weight(x) for x in self.entries) + ")"


@dataclass(frozen=True)
class MaxPlusMatrix:
    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(weight(x) for x in row) for row in self.rows)
        if not rows or not rows[0]:
            raise InputError("matrix must have positive dimensions")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise InputError("ragged matrix rows")
        object.__setattr__(self, "rows", rows)

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    @property
    def n_cols(self) -> int:
        return len(self.rows[0])

    @property
    def is_square(self) -> bool:
        return self.n_rows == self.n_cols

    def __getitem__(self, ij) -> Weight:
        i, j = ij
        return self.rows[i][j]

    def entries(self) -> tuple:
        """Row-major flat tuple of all entries."""
        return tuple(x for row in self.rows for x in row)

    def column(self, j: int) -> MaxPlusVector:
        return MaxPlusVector(tuple(row[j] for row in self.rows))

    def negated(self) -> "MaxPlusMatrix":
        """Entrywise negation of a finite-or-bottom matrix with no +inf.

        Only used to pass from min-plus matrices whose infinite entries are
        +inf (mapped to bottom here) to max-plus ones.
        """
        return MaxPlusMatrix(tuple(tuple(NEG_INF if x is NEG_INF else -x for x in row) for row in self.rows))

    def __matmul__(self, other):
        if isinstance(other, MaxPlusMatrix):
            return mat_mul(self, other)
        if isinstance(other, MaxPlusVector):
            return mat_vec(self, other)
        return NotImplemented

    def __str__(self) -> str:
        return "\n".join(" ".join(format_weight(x) for x in row) for row in self.rows)


def matrix(rows: Sequence[Sequence]) -> MaxPlusMatrix:
    return MaxPlusMatrix(tuple(tuple(r) for r in rows))


def vector(entries: Sequence) -> MaxPlusVector:
    return MaxPlusVector(tuple(entries))


def _finite(lam) -> Fraction:
    lam = weight(lam)
    if lam is NEG_INF:
        raise InputError("scaling by bottom is not a homothety")
    return lam


def identity(n: int, diag=0) -> MaxPlusMatrix:
    """[diag]_n: ``diag`` on the diagonal, bottom elsewhere."""
    if n < 1:
        raise InputError("dimension must be positive")
    d = weight(diag)
    return MaxPlusMatrix(tuple(tuple(d if i == j else NEG_INF for j in range(n)) for i in range(n)))


def mat_mul(a: MaxPlusMatrix, b: MaxPlusMatrix) -> MaxPlusMatrix:
    if a.n_cols != b.n_rows:
        raise InputError(f"cannot multiply {a.n_rows}x{a.n_cols} by {b.n_rows}x{b.n_cols}")
    (ra, rb), s = _common_int_rows(a, b)
    return from_int_rows(int_mul(ra, rb), s)


def mat_vec(a: MaxPlusMatrix, v: MaxPlusVector) -> MaxPlusVector:
    if a.n_cols != v.dim:
        raise InputError(f"cannot apply {a.n_rows}x{a.n_cols} matrix to vector of dim {v.dim}")
    out = []
    for row in a.rows:
        best: Weight = NEG_INF
        for x, y in zip(row, v.entries):
            if x is NEG_INF or y is NEG_INF:
                continue
            s = x + y
            if best is NEG_INF or s > best:
                best = s
        out.append(best)
    return MaxPlusVector(tuple(out))


def mat_power(a: MaxPlusMatrix, n: int) -> MaxPlusMatrix:
    if not a.is_square:
        raise InputError("only square matrices have powers")
    if n < 0:
        raise InputError("exponent must be nonnegative")
    rows, scale_ = to_int_rows(a)
    result = int_identity(a.n_rows)
    base = rows
    while n:
        if n & 1:
            result = int_mul(result, base)
        n >>= 1
        if n:
            base = int_mul(base, base)
    return from_int_rows(result, scale_)


def scale(a: MaxPlusMatrix, lam) -> MaxPlusMatrix:
    """lam ⊗ A: add ``lam`` to every finite entry."""
    lam = _finite(lam)
    return MaxPlusMatrix(tuple(tuple(x if x is NEG_INF else x + lam for x in row) for row in a.rows))


def unit_vector(n: int, j: int) -> MaxPlusVector:
    """e^j with 0 at index ``j`` (0-based) and bottom elsewhere."""
    if n < 1 or not 0 <= j < n:
        raise InputError(f"index {j} out of range for dimension {n}")
    return MaxPlusVector(tuple(Fraction(0) if i == j else NEG_INF for i in range(n)))


# Integer engine.  A rational matrix is scaled by the lcm of its entry
# denominators; max-plus products commute with positive scaling, so powers can
# be computed on Python ints (None = bottom) and scaled back exactly.

def denominator_lcm(values: Iterable[Weight]) -> int:
    d = 1
    for x in values:
        if x is not NEG_INF:
            d = lcm(d, x.denominator)
    return d


def to_int_rows(a: MaxPlusMatrix, scale_: int | None = None) -> tuple[list, int]:
    if scale_ is None:
        scale_ = denominator_lcm(a.entries())
    rows = [[None if x is NEG_INF else int(x * scale_) for x in row] for row in a.rows]
    return rows, scale_


def to_int_vector(v: MaxPlusVector, scale_: int) -> list:
    out = []
    for x in v.entries:
        if x is NEG_INF:
            out.append(None)
        else:
            y = x * scale_
            if y.denominator != 1:
                raise InputError("scale does not clear vector denominators")
            out.append(int(y))
    return out


def _common_int_rows(a: MaxPlusMatrix, b: MaxPlusMatrix):
    s = lcm(denominator_lcm(a.entries()), denominator_lcm(b.entries()))
    return (to_int_rows(a, s)[0], to_int_rows(b, s)[0]), s


def from_int_rows(rows, scale_: int) -> MaxPlusMatrix:
    return MaxPlusMatrix(tuple(tuple(NEG_INF if x is None else Fraction(x, scale_) for x in row) for row in rows))


def from_int_vector(vec, scale_: int) -> MaxPlusVector:
    return MaxPlusVector(tuple(NEG_INF if x is None else Fraction(x, scale_) for x in vec))


def int_identity(n: int) -> list:
    return [[0 if i == j else None for j in range(n)] for i in range(n)]


def int_mul(a: list, b: list) -> list:
    """Max-plus product of int/None matrices."""
    m = len(b[0])
    cols = [[row[j] for row in b] for j in range(m)]
    out = []
    for row in a:
        nz = [(k, x) for k, x in enumerate(row) if x is not None]
        new_row = []
        for col in cols:
            best = None
            for k, x in nz:
                y = col[k]
                if y is not None:
                    s = x + y
                    if best is None or s > best:
                        best = s
            new_row.append(best)
        out.append(new_row)
    return out


def int_mat_vec(a: list, v: list) -> list:
    out = []
    for row in a:
        best = None
        for x, y in zip(row, v):
            if x is not None and y is not None:
                s = x + y
                if best is None or s > best:
                    best = s
        out.append(best)
    return out
