"""Exact rational scalars and sparse matrices.

Scalars are :class:`fractions.Fraction`; every matrix kernel here is exact.
Matrices are stored sparsely (row -> {col: value}) and densified only for
elimination, which pivots on the first nonzero entry in row-major order so
that bases come out the same on every run.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import ParseError

Rational = Fraction


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"``; surrounding whitespace is ignored."""
    s = text.strip()
    if not s:
        raise ParseError("empty rational")
    try:
        num, sep, den = s.partition("/")
        if sep:
            return Fraction(int(num), int(den))
        return Fraction(int(num))
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"not a rational: {text!r}") from exc


def format_rational(q: Fraction | int) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_vector(text: str) -> list[Fraction]:
    return [parse_rational(part) for part in text.split(",")]


class RMatrix:
    """Immutable sparse matrix over the rationals.

    Zero entries are never stored.  Index bounds are checked at construction.
    """

    __slots__ = ("rows", "cols", "_rows", "_hash")

    def __init__(self, rows: int, cols: int,
                 entries: Mapping[tuple[int, int], object] | None = None):
        if rows < 0 or cols < 0:
            raise ValueError("negative shape")
        self.rows = rows
        self.cols = cols
        data: dict[int, dict[int, Fraction]] = {}
        if entries:
            for (i, j), v in entries.items():
                if not (0 <= i < rows and 0 <= j < cols):
                    raise IndexError(f"entry ({i}, {j}) outside {rows}x{cols}")
                v = Fraction(v)
                if v:
                    data.setdefault(i, {})[j] = v
        self._rows = data
        self._hash = None

    @classmethod
    def _from_rowdict(cls, rows: int, cols: int,
                      data: dict[int, dict[int, Fraction]]) -> "RMatrix":
        # trusted constructor: data already pruned of zeros
        m = cls.__new__(cls)
        m.rows, m.cols = rows, cols
        m._rows = {i: r for i, r in data.items() if r}
        m._hash = None
        return m

    # -- constructors ------------------------------------------------------
    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RMatrix":
        return cls(rows, cols)

    @classmethod
    def identity(cls, n: int) -> "RMatrix":
        return cls._from_rowdict(n, n, {i: {i: Fraction(1)} for i in range(n)})

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[object]]) -> "RMatrix":
        nr = len(rows)
        nc = len(rows[0]) if nr else 0
        entries = {}
        for i, row in enumerate(rows):
            if len(row) != nc:
                raise ValueError("ragged rows")
            for j, v in enumerate(row):
                entries[i, j] = v
        return cls(nr, nc, entries)

    @classmethod
    def column(cls, values: Sequence[object]) -> "RMatrix":
        return cls(len(values), 1, {(i, 0): v for i, v in enumerate(values)})

    @classmethod
    def row(cls, values: Sequence[object]) -> "RMatrix":
        return cls(1, len(values), {(0, j): v for j, v in enumerate(values)})

    @classmethod
    def unit(cls, rows: int, cols: int, i: int, j: int) -> "RMatrix":
        return cls(rows, cols, {(i, j): 1})

    # -- access ------------------------------------------------------------
    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, key: tuple[int, int]) -> Fraction:
        i, j = key
        return self._rows.get(i, {}).get(j, Fraction(0))

    def items(self) -> Iterator[tuple[tuple[int, int], Fraction]]:
        for i in sorted(self._rows):
            r = self._rows[i]
            for j in sorted(r):
                yield (i, j), r[j]

    def row_dict(self, i: int) -> dict[int, Fraction]:
        return dict(self._rows.get(i, {}))

    @property
    def nnz(self) -> int:
        return sum(len(r) for r in self._rows.values())

    def is_zero(self) -> bool:
        return not self._rows

    def to_rows(self) -> list[list[Fraction]]:
        out = [[Fraction(0)] * self.cols for _ in range(self.rows)]
        for i, r in self._rows.items():
            for j, v in r.items():
                out[i][j] = v
        return out

    def values(self) -> list[Fraction]:
        """Entries of a column or row vector as a flat list."""
        if self.cols == 1:
            return [self[i, 0] for i in range(self.rows)]
        if self.rows == 1:
            return [self[0, j] for j in range(self.cols)]
        raise ValueError(f"{self.rows}x{self.cols} is not a vector")

    def flat(self) -> dict[int, Fraction]:
        """Row-major flattening as a sparse dict index -> value."""
        c = self.cols
        return {i * c + j: v for i, r in self._rows.items() for j, v in r.items()}

    # -- arithmetic --------------------------------------------------------
    def _check_same(self, other: "RMatrix") -> None:
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: "RMatrix") -> "RMatrix":
        self._check_same(other)
        data = {i: dict(r) for i, r in self._rows.items()}
        for i, r in other._rows.items():
            dst = data.setdefault(i, {})
            for j, v in r.items():
                s = dst.get(j, 0) + v
                if s:
                    dst[j] = s
                else:
                    dst.pop(j, None)
        return RMatrix._from_rowdict(self.rows, self.cols, data)

    def __neg__(self) -> "RMatrix":
        return RMatrix._from_rowdict(
            self.rows, self.cols,
            {i: {j: -v for j, v in r.items()} for i, r in self._rows.items()})

    def __sub__(self, other: "RMatrix") -> "RMatrix":
        return self + (-other)

    def scale(self, s: object) -> "RMatrix":
        s = Fraction(s)
        if not s:
            return RMatrix(self.rows, self.cols)
        return RMatrix._from_rowdict(
            self.rows, self.cols,
            {i: {j: s * v for j, v in r.items()} for i, r in self._rows.items()})

    def __mul__(self, s: object) -> "RMatrix":
        if isinstance(s, RMatrix):
            raise TypeError("use @ for matrix products")
        return self.scale(s)

    __rmul__ = __mul__

    def __matmul__(self, other: "RMatrix") -> "RMatrix":
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        orows = other._rows
        data: dict[int, dict[int, Fraction]] = {}
        for i, r in self._rows.items():
            acc: dict[int, Fraction] = {}
            for k, a in r.items():
                ok = orows.get(k)
                if not ok:
                    continue
                for j, b in ok.items():
                    acc[j] = acc.get(j, 0) + a * b
            acc = {j: v for j, v in acc.items() if v}
            if acc:
                data[i] = acc
        return RMatrix._from_rowdict(self.rows, other.cols, data)

    def transpose(self) -> "RMatrix":
        data: dict[int, dict[int, Fraction]] = {}
        for i, r in self._rows.items():
            for j, v in r.items():
                data.setdefault(j, {})[i] = v
        return RMatrix._from_rowdict(self.cols, self.rows, data)

    @property
    def T(self) -> "RMatrix":
        return self.transpose()

    def trace(self) -> Fraction:
        if self.rows != self.cols:
            raise ValueError("trace of non-square matrix")
        return sum((r.get(i, Fraction(0)) for i, r in self._rows.items()), Fraction(0))

    def trace_product(self, other: "RMatrix") -> Fraction:
        """trace(self @ other) without forming the product."""
        if self.cols != other.rows or self.rows != other.cols:
            raise ValueError("shape mismatch in trace_product")
        total = Fraction(0)
        orows = other._rows
        for i, r in self._rows.items():
            for k, a in r.items():
                b = orows.get(k, {}).get(i)
                if b:
                    total += a * b
        return total

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RMatrix):
            return NotImplemented
        return self.shape == other.shape and self._rows == other._rows

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.rows, self.cols, tuple(self.items())))
        return self._hash

    def __repr__(self) -> str:
        if self.rows * self.cols <= 64:
            body = "; ".join(", ".join(format_rational(v) for v in row)
                             for row in self.to_rows())
            return f"RMatrix[{body}]"
        return f"RMatrix({self.rows}x{self.cols}, nnz={self.nnz})"


def bracket(a: RMatrix, b: RMatrix) -> RMatrix:
    """Matrix commutator ab - ba."""
    return a @ b - b @ a


def kron(a: RMatrix, b: RMatrix) -> RMatrix:
    """Kronecker product; entry (i, j) x (k, l) lands at (i*b.rows + k, j*b.cols + l)."""
    br, bc = b.rows, b.cols
    data: dict[int, dict[int, Fraction]] = {}
    for (i, j), x in a.items():
        for (k, l), y in b.items():
            data.setdefault(i * br + k, {})[j * bc + l] = x * y
    return RMatrix._from_rowdict(a.rows * br, a.cols * bc, data)


# -- dense elimination -------------------------------------------------------

def _rref(rows: list[list[Fraction]], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form in place; returns (rows, pivot columns)."""
    pivots: list[int] = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        p = next((k for k in range(r, nrows) if rows[k][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        piv = rows[r][c]
        if piv != 1:
            rows[r] = [v / piv for v in rows[r]]
        prow = rows[r]
        for k in range(nrows):
            if k != r and rows[k][c]:
                f = rows[k][c]
                rows[k] = [x - f * y for x, y in zip(rows[k], prow)]
        pivots.append(c)
        r += 1
    return rows, pivots


def rank(m: RMatrix) -> int:
    # eliminate on the smaller side
    if m.is_zero():
        return 0
    if m.rows > m.cols:
        m = m.transpose()
    _, piv = _rref(m.to_rows(), m.cols)
    return len(piv)


def solve(a: RMatrix, b: RMatrix) -> RMatrix | None:
    """One exact solution of ``a @ x = b`` (free variables set to zero), or None."""
    if a.rows != b.rows:
        raise ValueError(f"dimension mismatch: {a.shape} vs {b.shape}")
    n, k = a.cols, b.cols
    rows = [ra + rb for ra, rb in zip(a.to_rows(), b.to_rows())]
    rows, piv = _rref(rows, n + k)
    if any(c >= n for c in piv):
        return None
    x: dict[tuple[int, int], Fraction] = {}
    for r, c in enumerate(piv):
        for j in range(k):
            x[c, j] = rows[r][n + j]
    return RMatrix(n, k, x)


def kernel(a: RMatrix) -> list[RMatrix]:
    """Basis of the right null space, one column per free variable."""
    n = a.cols
    rows, piv = _rref(a.to_rows(), n)
    pivset = set(piv)
    basis = []
    for free in range(n):
        if free in pivset:
            continue
        v = {(free, 0): Fraction(1)}
        for r, c in enumerate(piv):
            if rows[r][free]:
                v[c, 0] = -rows[r][free]
        basis.append(RMatrix(n, 1, v))
    return basis


def inverse(a: RMatrix) -> RMatrix:
    if a.rows != a.cols:
        raise ValueError("inverse of non-square matrix")
    x = solve(a, RMatrix.identity(a.rows))
    if x is None or rank(a) < a.rows:
        raise ZeroDivisionError("matrix is singular")
    return x


def is_diagonal(a: RMatrix) -> bool:
    return all(i == j for (i, j), _ in a.items())


def leading_minors_positive(a: RMatrix) -> bool:
    """All leading principal minors > 0 (Sylvester test for a symmetric matrix)."""
    rows = a.to_rows()
    n = a.rows
    # Gaussian elimination without pivoting: the k-th pivot is minor_k / minor_{k-1}
    for k in range(n):
        piv = rows[k][k]
        if piv <= 0:
            return False
        for i in range(k + 1, n):
            f = rows[i][k] / piv
            if f:
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[k])]
    return True


def nilpotent_exp(x: RMatrix, s: object = 1) -> RMatrix:
    """exp(s*x) for nilpotent x, as the terminating power series."""
    if x.rows != x.cols:
        raise ValueError("exp of non-square matrix")
    sx = x.scale(s)
    result = RMatrix.identity(x.rows)
    term = result
    for k in range(1, x.rows + 1):
        term = (term @ sx).scale(Fraction(1, k))
        if term.is_zero():
            return result
        result = result + term
    raise ValueError("matrix is not nilpotent")


# -- incremental spans ---------------------------------------------------------

SparseVec = dict  # index -> Fraction


def _axpy(y: dict, a: Fraction, x: Mapping) -> None:
    # y += a*x, dropping cancellations
    for k, v in x.items():
        s = y.get(k, 0) + a * v
        if s:
            y[k] = s
        else:
            y.pop(k, None)


class EchelonBasis:
    """Growing span of sparse vectors with exact membership and coordinates.

    Vectors are dicts index -> Fraction.  ``coordinates`` expresses a member
    in terms of the vectors accepted by :meth:`add`, in insertion order.
    """

    def __init__(self) -> None:
        self._pivots: list[int] = []
        self._reduced: dict[int, dict] = {}   # pivot -> vector with 1 at pivot
        self._combo: dict[int, dict] = {}     # pivot -> combination of originals
        self.size = 0

    def __len__(self) -> int:
        return self.size

    def _reduce(self, vec: Mapping) -> tuple[dict, dict]:
        v = dict(vec)
        combo: dict = {}
        for p in self._pivots:
            c = v.get(p)
            if c:
                _axpy(v, -c, self._reduced[p])
                _axpy(combo, c, self._combo[p])
        return v, combo

    def contains(self, vec: Mapping) -> bool:
        return not self._reduce(vec)[0]

    def add(self, vec: Mapping) -> bool:
        """Insert ``vec`` if independent of the current span; report whether it was."""
        v, combo = self._reduce(vec)
        if not v:
            return False
        p = min(v)
        c = v[p]
        inv = 1 / c
        v = {k: x * inv for k, x in v.items()}
        # new combo expresses v in originals: (vec - combo)/c
        newc = {k: -x * inv for k, x in combo.items()}
        newc[self.size] = newc.get(self.size, 0) + inv
        # keep the basis fully reduced so later reductions see each pivot once
        for q in self._pivots:
            f = self._reduced[q].get(p)
            if f:
                _axpy(self._reduced[q], -f, v)
                _axpy(self._combo[q], -f, newc)
        self._pivots.append(p)
        self._pivots.sort()
        self._reduced[p] = v
        self._combo[p] = newc
        self.size += 1
        return True

    def coordinates(self, vec: Mapping) -> dict | None:
        """Coefficients (by insertion index) reproducing ``vec``, or None if outside the span."""
        v, combo = self._reduce(vec)
        if v:
            return None
        return combo


def span_rank(vectors: Iterable[Mapping]) -> int:
    eb = EchelonBasis()
    for v in vectors:
        eb.add(v)
    return len(eb)
