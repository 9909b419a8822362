"""The highest-weight orbit: membership, quadratic equations, inner ideals.

A line Kv lies in the orbit of the highest weight line iff the Casimir
operator on V (x) V maps v (x) v to (2 lam + 2 delta, 2 lam) v (x) v, iff Kv
is an inner ideal.  Coordinates of (Casimir - constant)(v (x) v) are
quadratic forms in v; after reduction they cut out the orbit closure.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .casimir_projector import casimir_tensor_apply, tensor
from .errors import InvariantError
from .exactlin import EchelonBasis, RMatrix, bracket, nilpotent_exp, rank
from .liealgebra import MatrixLieAlgebra
from .rootdata import weyl_dim


@dataclass(frozen=True, eq=False)
class QuadraticSystem:
    dim: int
    forms: list            # symmetric dim x dim RMatrix; quadric is v^T Q v = 0
    ambient_constant: Fraction

    def term_lists(self) -> list[list[tuple[int, int, Fraction]]]:
        """Each form as (i, j, coeff) with i <= j, 1-based, lexicographic."""
        out = []
        for q in self.forms:
            terms = []
            for (i, j), v in q.items():
                if i < j:
                    terms.append((i + 1, j + 1, 2 * v))
                elif i == j:
                    terms.append((i + 1, j + 1, v))
            out.append(terms)
        return out

    def evaluate(self, v: RMatrix) -> list[Fraction]:
        return [(v.T @ q @ v)[0, 0] for q in self.forms]


@dataclass(frozen=True)
class MembershipResult:
    is_member: bool
    residual: RMatrix


@dataclass(frozen=True, eq=False)
class SubspaceData:
    columns: tuple

    def __post_init__(self):
        if not self.columns:
            raise ValueError("empty subspace")
        n = self.columns[0].rows
        if any(c.shape != (n, 1) for c in self.columns):
            raise ValueError("subspace columns must share one length")
        m = RMatrix(n, len(self.columns),
                    {(i, j): v for j, c in enumerate(self.columns) for (i, _), v in c.items()})
        if rank(m) != len(self.columns):
            raise ValueError("subspace columns are linearly dependent")

    @property
    def dim(self) -> int:
        return len(self.columns)


def lichtenstein_constant(L: MatrixLieAlgebra, lam=None) -> Fraction:
    """(2 lam + 2 delta, 2 lam) in the Killing-dual form; ``lam`` defaults to the module's."""
    if lam is None:
        lam = L.rep.highest_weight
    two_lam = tuple(2 * x for x in lam)
    return L.weight_form(tuple(x + 2 for x in two_lam), two_lam)


def membership_test(L: MatrixLieAlgebra, v: RMatrix,
                    constant: Fraction | None = None) -> MembershipResult:
    n = L.rep.dim
    if v.shape != (n, 1):
        raise ValueError(f"expected a column of length {n}")
    if v.is_zero():
        raise ValueError("zero vector does not define a line")
    if constant is None:
        constant = lichtenstein_constant(L)
    vv = tensor(v, v)
    residual = casimir_tensor_apply(L, vv) - vv.scale(constant)
    return MembershipResult(residual.is_zero(), residual)


def emit_equations(L: MatrixLieAlgebra) -> QuadraticSystem:
    n = L.rep.dim
    const = lichtenstein_constant(L)
    e = [L.rep.unit_vector(i) for i in range(n)]
    monomials = [(i, k) for i in range(n) for k in range(i, n)]
    # column for monomial v_i v_k: (Casimir - const)(e_i (x) e_k + e_k (x) e_i); e_i (x) e_i alone on the diagonal
    rows: dict[int, dict[int, Fraction]] = {}
    for m, (i, k) in enumerate(monomials):
        sym = tensor(e[i], e[k])
        if i != k:
            sym = sym + tensor(e[k], e[i])
        col = casimir_tensor_apply(L, sym) - sym.scale(const)
        for (p, _), v in col.items():
            rows.setdefault(p, {})[m] = v
    basis = EchelonBasis()
    forms = []
    for p in sorted(rows):
        coeffs = rows[p]
        if not basis.add(coeffs):
            continue
        q = {}
        for m, v in coeffs.items():
            i, k = monomials[m]
            if i == k:
                q[i, i] = v
            else:
                q[i, k] = q[k, i] = v / 2
        forms.append(RMatrix(n, n, q))
    return QuadraticSystem(dim=n, forms=forms, ambient_constant=const)


def inner_ideal_test(L: MatrixLieAlgebra, M: SubspaceData) -> bool:
    """Whether pi(m a^T) n lies in M for all basis m, n of M and all coordinate covectors a."""
    if not isinstance(M, SubspaceData):
        M = SubspaceData(tuple(M))
    span = EchelonBasis()
    for c in M.columns:
        span.add({i: v for (i, _), v in c.items()})
    for m in M.columns:
        dual_m = [y @ m for y in L.dual_basis]
        for nvec in M.columns:
            xn = [x @ nvec for x in L.basis]
            # pi(m e_k^T) n = sum_a (x^a m)_k x_a n
            for k in range(L.rep.dim):
                out: dict[int, Fraction] = {}
                for ym, w in zip(dual_m, xn):
                    s = ym[k, 0]
                    if not s:
                        continue
                    for (i, _), val in w.items():
                        out[i] = out.get(i, 0) + s * val
                out = {i: v for i, v in out.items() if v}
                if out and not span.contains(out):
                    return False
    return True


def parse_generator(label: str, rank_: int) -> int:
    """``"E1"``/``"F2"`` (1-based) -> flat generator index."""
    kind, num = label[0].upper(), int(label[1:])
    if kind not in "EF" or not 1 <= num <= rank_:
        raise ValueError(f"bad generator label {label!r}")
    return num - 1 + (rank_ if kind == "F" else 0)


def generator_label(index: int, rank_: int) -> str:
    return f"E{index + 1}" if index < rank_ else f"F{index - rank_ + 1}"


def group_element(L: MatrixLieAlgebra, word: Sequence[tuple[int, Fraction]]) -> RMatrix:
    """prod exp(s_j X_j), with the first word entry acting first on vectors."""
    g = RMatrix.identity(L.rep.dim)
    for idx, s in word:
        g = nilpotent_exp(L.rep.generator(idx), s) @ g
    return g


def orbit_sample(L: MatrixLieAlgebra, word: Sequence[tuple[int, Fraction]]) -> RMatrix:
    return group_element(L, word) @ L.rep.unit_vector(0)


def random_word(rank_: int, rng: random.Random, length: int = 5) -> list[tuple[int, Fraction]]:
    word = []
    for _ in range(length):
        idx = rng.randrange(2 * rank_)
        s = Fraction(rng.choice([-3, -2, -1, 1, 2, 3]), rng.choice([1, 2, 3]))
        word.append((idx, s))
    return word


def random_vector(n: int, rng: random.Random) -> RMatrix:
    while True:
        vals = [Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(n)]
        if any(vals):
            return RMatrix.column(vals)


def designated_non_members(L: MatrixLieAlgebra, count: int = 3, seed: int = 0) -> list[RMatrix]:
    """v0 + (lowest weight vector) and seeded random vectors, each confirmed non-member.

    Returns fewer vectors (possibly none) when the orbit is the whole projective space.
    """
    n = L.rep.dim
    const = lichtenstein_constant(L)
    out = []
    cand = L.rep.unit_vector(0) + L.rep.unit_vector(n - 1)
    if not membership_test(L, cand, const).is_member:
        out.append(cand)
    if not _has_equations(L):
        return out
    rng = random.Random(seed)
    tries = 0
    while len(out) < count and tries < 100:
        tries += 1
        v = random_vector(n, rng)
        if not membership_test(L, v, const).is_member:
            out.append(v)
    return out


def _has_equations(L: MatrixLieAlgebra) -> bool:
    n = L.rep.dim
    two_lam = tuple(2 * x for x in L.rep.highest_weight)
    return n * (n + 1) // 2 > weyl_dim(L.rs, two_lam)


# -- the adjoint example ---------------------------------------------------------

def _is_adjoint(L: MatrixLieAlgebra) -> bool:
    rs = L.rs
    return tuple(L.rep.highest_weight) == rs.root_weight(rs.highest_root)


def adjoint_identity_coefficient(L: MatrixLieAlgebra) -> Fraction:
    """gamma with [v, [v, u]] = gamma K(v, u) v for v the highest root vector, all basis u."""
    if not _is_adjoint(L):
        raise ValueError("adjoint_identity_coefficient needs the adjoint module")
    top = L.index_of_root(L.rs.root_weight(L.rs.highest_root))
    v = L.basis[top]
    gamma = None
    for b, u in enumerate(L.basis):
        lhs = bracket(v, bracket(v, u))
        k = L.killing[top, b]
        if not k:
            if not lhs.is_zero():
                raise InvariantError("[v,[v,u]] != 0 although K(v,u) = 0")
            continue
        (pos, val) = next(lhs.items()) if not lhs.is_zero() else ((0, 0), Fraction(0))
        g = (lhs[pos] / v[pos]) / k if not lhs.is_zero() else Fraction(0)
        if lhs != v.scale(g * k):
            raise InvariantError("[v,[v,u]] is not a multiple of v")
        if gamma is None:
            gamma = g
        elif g != gamma:
            raise InvariantError("inconsistent coefficient across basis elements")
    if gamma is None:
        raise InvariantError("no basis element pairs with the highest root vector")
    return gamma


def adjoint_module_map(L: MatrixLieAlgebra) -> list[RMatrix]:
    """Images in rho(g) of the module basis under the isomorphism V -> g fixing v0 -> e_top.

    Basis vector ``k`` is ``f_ik ... f_i1 v0``; its image is the matching
    iterated commutator applied to the highest root vector.
    """
    if not _is_adjoint(L):
        raise ValueError("module is not adjoint")
    top = L.basis[L.index_of_root(L.rs.root_weight(L.rs.highest_root))]
    images = []
    for word in L.rep.words:
        x = top
        for i in word:
            x = bracket(L.rep.F[i], x)
        images.append(x)
    return images


def adjoint_condition(L: MatrixLieAlgebra, v: RMatrix, gamma: Fraction | None = None,
                      images: list | None = None) -> bool:
    """[X, [X, u]] = gamma K(X, u) X for all basis u, where X is v viewed in g."""
    if gamma is None:
        gamma = adjoint_identity_coefficient(L)
    if images is None:
        images = adjoint_module_map(L)
    X = L.combine(v.values(), images)
    cx = L.coordinates(X)
    for b, u in enumerate(L.basis):
        kxu = sum((cx[a] * L.killing[a, b] for a in range(L.d) if cx[a]), Fraction(0))
        if bracket(X, bracket(X, u)) != X.scale(gamma * kxu):
            return False
    return True
