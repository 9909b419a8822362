"""The projector pi on End(V), the Casimir tensor t on V (x) V, and Faulkner's map.

End(V)* is identified with End(V) through the trace pairing, which turns the
composite End(V) -> End(V)* -> g* -> g -> End(V) into the dual-basis sum

    pi(A) = sum_a trace(A x^a) x_a.

``t`` is the same sum read as an operator on V (x) V, ``sum_a x_a (x) x^a``;
its entries are those of pi reindexed, ``pi(E_jl)[i, k] = t[(i, l), (k, j)]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InvariantError
from .exactlin import RMatrix, inverse, kron, rank
from .liealgebra import MatrixLieAlgebra

DENSE_T_MAX_DIM = 16


@dataclass(frozen=True, eq=False)
class ProjectorData:
    L: MatrixLieAlgebra
    c: Fraction
    casimir_eigenvalue: Fraction


def _check_square(L: MatrixLieAlgebra, A: RMatrix) -> None:
    n = L.rep.dim
    if A.shape != (n, n):
        raise ValueError(f"expected a {n}x{n} matrix, got {A.rows}x{A.cols}")


def pi_apply(L: MatrixLieAlgebra, A: RMatrix) -> RMatrix:
    _check_square(L, A)
    coeffs = [A.trace_product(y) for y in L.dual_basis]
    return L.combine(coeffs)


def pi_coefficients(L: MatrixLieAlgebra, A: RMatrix) -> list[Fraction]:
    """Coordinates of pi(A) in ``L.basis``."""
    _check_square(L, A)
    return [A.trace_product(y) for y in L.dual_basis]


def trace_form_ratio(L: MatrixLieAlgebra) -> Fraction:
    """The scalar c with trace(rho x rho y) = c K(x, y); verified on all basis pairs."""
    c = None
    d = L.d
    for a in range(d):
        for b in range(a, d):
            tr = L.basis[a].trace_product(L.basis[b])
            k = L.killing[a, b]
            if k:
                ratio = tr / k
                if c is None:
                    c = ratio
                elif ratio != c:
                    raise InvariantError("trace form is not proportional to the Killing form")
            elif tr:
                raise InvariantError("trace form is not proportional to the Killing form")
    if not c:
        raise InvariantError("trace form vanishes")
    return c


def pi_constant(L: MatrixLieAlgebra) -> Fraction:
    """The scalar c with pi o pi = c pi."""
    x = L.basis[0]
    px = pi_apply(L, x)
    ppx = pi_apply(L, px)
    (pos, v) = next(px.items())
    c = ppx[pos] / v
    if ppx != px.scale(c):
        raise InvariantError("pi(pi(x_1)) is not proportional to pi(x_1)")
    # pi restricted to rho(g) is c times the identity; that settles the full basis
    for a, xa in enumerate(L.basis):
        if pi_apply(L, xa) != xa.scale(c):
            raise InvariantError(f"pi(x_{a}) != c x_{a}")
    if c != trace_form_ratio(L):
        raise InvariantError("pi constant disagrees with the trace/Killing ratio")
    return c


def projector_data(L: MatrixLieAlgebra) -> ProjectorData:
    return ProjectorData(L=L, c=pi_constant(L), casimir_eigenvalue=L.casimir_eigenvalue())


# -- the tensor t --------------------------------------------------------------

def vec_to_square(w: RMatrix, n: int) -> RMatrix:
    """Column of length n^2 -> n x n matrix W with w[i*n + k] = W[i, k]."""
    if w.shape != (n * n, 1):
        raise ValueError(f"expected a column of length {n * n}, got {w.rows}x{w.cols}")
    return RMatrix(n, n, {(p // n, p % n): v for (p, _), v in w.items()})


def square_to_vec(W: RMatrix) -> RMatrix:
    n = W.rows
    return RMatrix(n * W.cols, 1, {(i * W.cols + k, 0): v for (i, k), v in W.items()})


def tensor(u: RMatrix, v: RMatrix) -> RMatrix:
    """u (x) v as a column, matching :func:`kron`."""
    return kron(u, v)


def t_apply(L: MatrixLieAlgebra, w: RMatrix) -> RMatrix:
    """(sum_a rho x_a (x) rho x^a) w, without materialising the dim^2 x dim^2 operator."""
    n = L.rep.dim
    W = vec_to_square(w, n)
    # (A (x) B) vec(W) = vec(A W B^T) for row-major vec
    out = RMatrix(n, n)
    for x, y in zip(L.basis, L.dual_basis):
        out = out + x @ W @ y.T
    return square_to_vec(out)


def t_matrix(L: MatrixLieAlgebra) -> RMatrix:
    """t as an explicit dim^2 x dim^2 matrix; only for dim <= DENSE_T_MAX_DIM."""
    n = L.rep.dim
    if n > DENSE_T_MAX_DIM:
        raise ValueError(f"t materialisation is limited to dim <= {DENSE_T_MAX_DIM}")
    out = RMatrix(n * n, n * n)
    for x, y in zip(L.basis, L.dual_basis):
        out = out + kron(x, y)
    return out


def casimir_tensor_apply(L: MatrixLieAlgebra, w: RMatrix) -> RMatrix:
    """The Casimir operator of g acting diagonally on V (x) V.

    Expanding sum_a (x_a (x) 1 + 1 (x) x_a)(x^a (x) 1 + 1 (x) x^a) gives
    C (x) 1 + 1 (x) C + 2t, with C the Casimir matrix on V.  On the copy of
    V(2 lam) inside V (x) V this is the scalar (2 lam + 2 delta, 2 lam);
    ``t`` alone acts there by (lam, lam).
    """
    n = L.rep.dim
    W = vec_to_square(w, n)
    C = L.casimir_matrix()
    diag = square_to_vec(C @ W + W @ C.T)
    return diag + t_apply(L, w).scale(2)


def casimir_tensor_matrix(L: MatrixLieAlgebra) -> RMatrix:
    n = L.rep.dim
    C = L.casimir_matrix()
    eye = RMatrix.identity(n)
    return kron(C, eye) + kron(eye, C) + t_matrix(L).scale(2)


def contract_first_slot(a: RMatrix, w: RMatrix, n: int) -> RMatrix:
    """Apply the covector ``a`` (a row) to the first tensor factor of ``w``."""
    W = vec_to_square(w, n)
    return (a @ W).T


def faulkner_D(L: MatrixLieAlgebra, v: RMatrix, a: RMatrix) -> RMatrix:
    """The z in rho(g) with K(z, x) = a(rho(x) v) for every basis element x."""
    n = L.rep.dim
    if v.shape != (n, 1) or a.shape != (1, n):
        raise ValueError("v must be a column and a a row of length dim")
    rhs = [(a @ x @ v)[0, 0] for x in L.basis]
    # z = sum_c z_c x_c with sum_c z_c K_cb = rhs_b
    z = [sum((L.killing_inv[c, b] * rhs[b] for b in range(L.d) if rhs[b]), Fraction(0))
         for c in range(L.d)]
    return L.combine(z)


def aut_check(L: MatrixLieAlgebra, g: RMatrix) -> bool:
    """Whether pi(g A g^-1) = g pi(A) g^-1 for every matrix unit A."""
    n = L.rep.dim
    _check_square(L, g)
    if rank(g) < n:
        raise ValueError("group element is singular")
    ginv = inverse(g)
    # pi(g E_ij g^-1) = sum_a (g^-1 x^a g)_{ji} x_a, so conjugate the dual basis once
    conj_dual = [ginv @ y @ g for y in L.dual_basis]
    conj_basis = [g @ x @ ginv for x in L.basis]
    for i in range(n):
        for j in range(n):
            lhs = L.combine([y[j, i] for y in conj_dual])
            rhs = L.combine([y[j, i] for y in L.dual_basis], conj_basis)
            if lhs != rhs:
                return False
    return True
