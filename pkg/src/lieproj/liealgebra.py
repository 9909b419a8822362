"""The matrix Lie algebra rho(g) spanned by a module's generators."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

from .errors import InvariantError
from .exactlin import EchelonBasis, RMatrix, bracket, inverse
from .hwmodule import RepModule
from .rootdata import Weight


@dataclass(eq=False)
class MatrixLieAlgebra:
    """A basis of rho(g) with its Killing form and Killing-dual basis.

    ``basis`` starts with the images of ``H[0..rank-1]`` (so ``cartan_indices``
    is ``range(rank)``), followed by ``E``/``F`` and their iterated brackets.
    Every basis element is an ad-h eigenvector; ``root_weights[a]`` is its
    weight in fundamental-weight coordinates (zero on the Cartan part).
    """

    rep: RepModule
    basis: list
    root_weights: list
    ad: list = field(repr=False)          # ad x_a as d x d matrices in ``basis`` coordinates
    killing: RMatrix = field(repr=False)
    killing_inv: RMatrix = field(repr=False)
    dual_basis: list = field(repr=False)
    cartan_indices: tuple = ()
    _span: EchelonBasis = field(default=None, repr=False)

    @property
    def d(self) -> int:
        return len(self.basis)

    @property
    def rs(self):
        return self.rep.rs

    def coordinates(self, x: RMatrix) -> list[Fraction]:
        """Coordinates of ``x`` in ``basis``; raises if ``x`` is not in rho(g)."""
        c = self._span.coordinates(x.flat())
        if c is None:
            raise ValueError("matrix is not in rho(g)")
        return [c.get(a, Fraction(0)) for a in range(self.d)]

    def contains(self, x: RMatrix) -> bool:
        return self._span.contains(x.flat())

    def combine(self, coeffs, elements=None) -> RMatrix:
        elements = self.basis if elements is None else elements
        n = self.rep.dim
        out = RMatrix(n, n)
        for c, x in zip(coeffs, elements):
            if c:
                out = out + x.scale(c)
        return out

    def killing_pair(self, a: int, b: int) -> Fraction:
        return self.killing[a, b]

    def killing_form(self, x: RMatrix, y: RMatrix) -> Fraction:
        cx, cy = self.coordinates(x), self.coordinates(y)
        k = self.killing
        return sum((cx[a] * k[a, b] * cy[b] for a in range(self.d) if cx[a]
                    for b in range(self.d) if cy[b]), Fraction(0))

    def index_of_root(self, root_weight: Weight) -> int:
        for a, w in enumerate(self.root_weights):
            if a not in self.cartan_indices and w == tuple(root_weight):
                return a
        raise KeyError(f"no root vector of weight {root_weight}")

    @cached_property
    def cartan_killing(self) -> RMatrix:
        """K_h[i][j] = K(rho H_i, rho H_j)."""
        idx = self.cartan_indices
        return RMatrix.from_rows([[self.killing[a, b] for b in idx] for a in idx])

    @cached_property
    def _cartan_killing_inv(self) -> RMatrix:
        return inverse(self.cartan_killing)

    def weight_form(self, mu, nu) -> Fraction:
        """Form on weights dual to the Killing form restricted to the Cartan subalgebra."""
        r = self.rs.rank
        if len(mu) != r or len(nu) != r:
            raise ValueError(f"weights must have length {r}")
        inv = self._cartan_killing_inv
        return sum((mu[i] * inv[i, j] * nu[j] for i in range(r) for j in range(r)
                    if mu[i] and nu[j]), Fraction(0))

    @cached_property
    def _casimir(self) -> RMatrix:
        n = self.rep.dim
        out = RMatrix(n, n)
        for x, y in zip(self.basis, self.dual_basis):
            out = out + x @ y
        return out

    def casimir_matrix(self) -> RMatrix:
        """sum_a x_a x^a acting on V."""
        return self._casimir

    def casimir_eigenvalue(self) -> Fraction:
        lam = self.rep.highest_weight
        return self.weight_form(lam, tuple(x + 2 for x in lam))


def _weight_of(x: RMatrix, H) -> tuple:
    # x is an ad-h eigenvector; read the eigenvalue off one nonzero entry
    (p, q), v = next(x.items())
    out = []
    for h in H:
        out.append(int(h[p, p] - h[q, q]))
    return tuple(out)


def bracket_closure(rep: RepModule) -> MatrixLieAlgebra:
    rs = rep.rs
    r = rs.rank
    if not any(rep.highest_weight):
        raise ValueError("trivial module: rho is not faithful")

    span = EchelonBasis()
    basis: list[RMatrix] = []
    weights: list[tuple] = []

    def push(x: RMatrix) -> bool:
        if x.is_zero() or not span.add(x.flat()):
            return False
        basis.append(x)
        weights.append(_weight_of(x, rep.H) if len(basis) > r else (0,) * r)
        return True

    for h in rep.H:
        if not push(h):
            raise InvariantError("Cartan images are linearly dependent")
    gens = list(rep.E) + list(rep.F)
    frontier = [x for x in gens if push(x)]
    # the algebra generated by gens is the closure of span(gens) under ad(gens)
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = bracket(g, x)
                if push(y):
                    nxt.append(y)
        frontier = nxt

    d = len(basis)
    if d != rs.dim_g:
        raise InvariantError(f"bracket closure has dimension {d}, expected {rs.dim_g}")

    ad = []
    for a in range(d):
        cols = {}
        for b in range(d):
            c = span.coordinates(bracket(basis[a], basis[b]).flat())
            if c is None:
                raise InvariantError("basis is not closed under the bracket")
            for k, v in c.items():
                cols[k, b] = v
        ad.append(RMatrix(d, d, cols))
    killing = RMatrix(d, d, {(a, b): ad[a].trace_product(ad[b])
                             for a in range(d) for b in range(a, d)})
    killing = RMatrix(d, d, {**{(b, a): v for (a, b), v in killing.items()},
                             **dict(killing.items())})
    kinv = inverse(killing)
    # x^a = sum_b (K^{-1})_{ba} x_b
    dual = []
    for a in range(d):
        n = rep.dim
        acc = RMatrix(n, n)
        for b in range(d):
            c = kinv[b, a]
            if c:
                acc = acc + basis[b].scale(c)
        dual.append(acc)

    return MatrixLieAlgebra(
        rep=rep,
        basis=basis,
        root_weights=weights,
        ad=ad,
        killing=killing,
        killing_inv=kinv,
        dual_basis=dual,
        cartan_indices=tuple(range(r)),
        _span=span,
    )


def killing_pair(L: MatrixLieAlgebra, a: int, b: int) -> Fraction:
    return L.killing_pair(a, b)


def weight_form(L: MatrixLieAlgebra, mu, nu) -> Fraction:
    return L.weight_form(mu, nu)
