"""Root data for split simple types.

Conventions (Bourbaki numbering):

* ``cartan[i][j] = <alpha_i, alpha_j^vee>``, so ``alpha_j(h_i) = cartan[j][i]``.
* Roots are integer vectors in simple-root coordinates.
* Weights are integer tuples in fundamental-weight coordinates; the ``i``-th
  coordinate of a weight is its value on the coroot ``h_i``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache

from .errors import InvalidTypeError, NonDominantWeightError, ParseError

Weight = tuple  # tuple[int, ...] in fundamental-weight coordinates

_MIN_RANK = {"A": 1, "B": 2, "C": 3, "D": 4, "E": 6, "F": 4, "G": 2}

# dim g per type, used to validate root enumeration
_DIM_G = {
    "A": lambda n: n * (n + 2),
    "B": lambda n: n * (2 * n + 1),
    "C": lambda n: n * (2 * n + 1),
    "D": lambda n: n * (2 * n - 1),
    "E": lambda n: {6: 78, 7: 133, 8: 248}[n],
    "F": lambda n: 52,
    "G": lambda n: 14,
}


def _chain(n: int) -> list[list[int]]:
    c = [[0] * n for _ in range(n)]
    for i in range(n):
        c[i][i] = 2
        if i + 1 < n:
            c[i][i + 1] = c[i + 1][i] = -1
    return c


def cartan_matrix(series: str, n: int) -> list[list[int]]:
    if series not in _MIN_RANK:
        raise InvalidTypeError(f"unknown series {series!r}")
    lo = _MIN_RANK[series]
    valid = (
        n >= lo if series in "ABCD"
        else (6 <= n <= 8 if series == "E" else n == lo)
    )
    if not valid:
        raise InvalidTypeError(f"invalid rank {n} for series {series}")
    if series == "A":
        return _chain(n)
    if series == "B":
        c = _chain(n)
        c[n - 2][n - 1] = -2
        return c
    if series == "C":
        c = _chain(n)
        c[n - 1][n - 2] = -2
        return c
    if series == "D":
        c = _chain(n)
        c[n - 2][n - 1] = c[n - 1][n - 2] = 0
        c[n - 3][n - 1] = c[n - 1][n - 3] = -1
        return c
    if series == "E":
        c = [[0] * n for _ in range(n)]
        for i in range(n):
            c[i][i] = 2
        edges = [(0, 2), (1, 3), (2, 3)] + [(k, k + 1) for k in range(3, n - 1)]
        for i, j in edges:
            c[i][j] = c[j][i] = -1
        return c
    if series == "F":
        c = _chain(4)
        c[1][2] = -2
        return c
    # G2: alpha_1 short, alpha_2 long
    return [[2, -1], [-3, 2]]


@dataclass(frozen=True)
class RootSystemData:
    series: str
    rank: int
    cartan: tuple
    positive_roots: tuple  # simple-root coordinates, non-decreasing height
    half_lengths: tuple = field(repr=False)  # (alpha_i, alpha_i)/2, shortest = 1

    @property
    def name(self) -> str:
        return f"{self.series}{self.rank}"

    @property
    def delta(self) -> Weight:
        return (1,) * self.rank

    @property
    def dim_g(self) -> int:
        return self.rank + 2 * len(self.positive_roots)

    @property
    def highest_root(self) -> tuple:
        return self.positive_roots[-1]

    def root_weight(self, root) -> Weight:
        """Simple-root coordinates -> fundamental-weight coordinates."""
        r = self.rank
        return tuple(sum(root[k] * self.cartan[k][i] for k in range(r)) for i in range(r))

    def simple_root_weight(self, i: int) -> Weight:
        return tuple(self.cartan[i])

    @cached_property
    def _cartan_inv(self) -> list[list[Fraction]]:
        from .exactlin import RMatrix, inverse
        return inverse(RMatrix.from_rows(self.cartan)).to_rows()

    def weight_to_roots(self, mu) -> list[Fraction]:
        """Fundamental-weight coordinates -> (rational) simple-root coordinates."""
        r = self.rank
        inv = self._cartan_inv
        return [sum((mu[j] * inv[j][k] for j in range(r)), Fraction(0)) for k in range(r)]

    def pair_root(self, mu, root) -> Fraction:
        """(mu, beta) in the normalization where short roots have length^2 = 2."""
        return Fraction(sum(root[i] * mu[i] * self.half_lengths[i] for i in range(self.rank)))

    def inner(self, mu, nu) -> Fraction:
        c = self.weight_to_roots(mu)
        return sum((c[k] * nu[k] * self.half_lengths[k] for k in range(self.rank)), Fraction(0))

    def reflect(self, mu, i: int) -> Weight:
        a = self.cartan[i]
        return tuple(m - mu[i] * a[j] for j, m in enumerate(mu))

    def check_weight(self, mu, dominant: bool = True) -> Weight:
        mu = tuple(int(x) for x in mu)
        if len(mu) != self.rank:
            raise ParseError(f"weight {mu} has length {len(mu)}, expected {self.rank}")
        if dominant and any(x < 0 for x in mu):
            raise NonDominantWeightError(f"weight {mu} is not dominant")
        return mu


def _half_lengths(cartan: list[list[int]]) -> tuple:
    # (alpha_i, alpha_j) = cartan[i][j] * d_j must be symmetric; propagate along edges
    n = len(cartan)
    d: list[Fraction | None] = [None] * n
    d[0] = Fraction(1)
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(n):
            if j != i and cartan[i][j] and d[j] is None:
                d[j] = d[i] * cartan[j][i] / cartan[i][j]
                stack.append(j)
    lo = min(d)
    return tuple(int(x / lo) for x in d)


def _enumerate_positive_roots(cartan: list[list[int]]) -> list[tuple]:
    n = len(cartan)
    simple = [tuple(int(i == k) for k in range(n)) for i in range(n)]
    roots = set(simple)
    layer = list(simple)
    ordered = list(simple)
    while layer:
        nxt: list[tuple] = []
        for beta in layer:
            for i in range(n):
                if beta == simple[i]:
                    continue
                # alpha_i-string through beta: p steps down, q = p - beta(h_i) steps up
                p = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in roots:
                        p += 1
                    else:
                        break
                pairing = sum(beta[k] * cartan[k][i] for k in range(n))
                if p - pairing > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in roots:
                        roots.add(up)
                        nxt.append(up)
        nxt.sort(reverse=True)
        ordered.extend(nxt)
        layer = nxt
    return ordered


@lru_cache(maxsize=None)
def build_root_system(series: str, rank: int) -> RootSystemData:
    series = series.upper()
    cartan = cartan_matrix(series, rank)
    pos = _enumerate_positive_roots(cartan)
    rs = RootSystemData(
        series=series,
        rank=rank,
        cartan=tuple(tuple(r) for r in cartan),
        positive_roots=tuple(pos),
        half_lengths=_half_lengths(cartan),
    )
    if rs.dim_g != _DIM_G[series](rank):
        raise AssertionError(f"root enumeration for {rs.name} gave {len(pos)} roots")
    return rs


_TYPE_RE = re.compile(r"^\s*([A-Ga-g])\s*(\d+)\s*$")


def parse_type(text: str) -> RootSystemData:
    m = _TYPE_RE.match(text)
    if not m:
        raise ParseError(f"bad type string {text!r}")
    return build_root_system(m.group(1).upper(), int(m.group(2)))


def parse_weight(rs: RootSystemData, text: str) -> Weight:
    try:
        coords = tuple(int(p) for p in text.split(","))
    except ValueError as exc:
        raise ParseError(f"bad weight string {text!r}") from exc
    return rs.check_weight(coords, dominant=False)


def format_weight(mu) -> str:
    return ",".join(str(x) for x in mu)


def weyl_dim(rs: RootSystemData, lam) -> int:
    """Dimension of V(lam) by the Weyl dimension formula."""
    lam = rs.check_weight(lam)
    lam_delta = tuple(x + 1 for x in lam)
    num = Fraction(1)
    for beta in rs.positive_roots:
        num *= rs.pair_root(lam_delta, beta) / rs.pair_root(rs.delta, beta)
    assert num.denominator == 1
    return int(num)


def freudenthal_multiplicities(rs: RootSystemData, lam) -> dict[Weight, int]:
    """Weight multiplicities of V(lam), ordered by depth below lam."""
    lam = rs.check_weight(lam)
    r = rs.rank
    shift = lambda mu: tuple(m + 1 for m in mu)  # noqa: E731
    top = rs.inner(shift(lam), shift(lam))
    root_wts = [(beta, rs.root_weight(beta)) for beta in rs.positive_roots]
    simple_wts = [rs.simple_root_weight(i) for i in range(r)]

    mult: dict[Weight, int] = {lam: 1}
    layer = [lam]
    depth = 0
    while layer:
        depth += 1
        cands = sorted({tuple(m - a for m, a in zip(mu, simple_wts[i]))
                        for mu in layer for i in range(r)}, reverse=True)
        nxt = []
        for mu in cands:
            denom = top - rs.inner(shift(mu), shift(mu))
            if denom <= 0:
                # every weight of V(lam) other than lam is strictly shorter after the delta-shift
                continue
            acc = Fraction(0)
            for beta, bw in root_wts:
                ht = sum(beta)
                for k in range(1, depth // ht + 1):
                    nu = tuple(m + k * b for m, b in zip(mu, bw))
                    m_nu = mult.get(nu)
                    if m_nu:
                        acc += m_nu * rs.pair_root(nu, beta)
            val = 2 * acc / denom
            if val:
                assert val.denominator == 1 and val > 0, (mu, val)
                mult[mu] = int(val)
                nxt.append(mu)
        layer = nxt
    return mult
