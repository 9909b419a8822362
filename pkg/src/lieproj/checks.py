"""Named invariant checks over one (type, highest weight) pair.

Used by ``lieproj verify``.  Each check returns a bool; randomness is seeded
so a run is reproducible byte for byte.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Callable

from .casimir_projector import (
    aut_check, casimir_tensor_apply, contract_first_slot, faulkner_D, pi_apply,
    pi_constant, t_apply, tensor, trace_form_ratio,
)
from .exactlin import EchelonBasis, RMatrix, bracket, is_diagonal, leading_minors_positive, nilpotent_exp
from .homvariety import (
    SubspaceData, adjoint_condition, adjoint_identity_coefficient, designated_non_members,
    emit_equations, inner_ideal_test, lichtenstein_constant, membership_test, orbit_sample,
    random_vector, random_word, _is_adjoint,
)
from .liealgebra import MatrixLieAlgebra
from .rootdata import freudenthal_multiplicities, weyl_dim

SEED = 20240611


def random_matrix(n: int, rng: random.Random) -> RMatrix:
    return RMatrix(n, n, {(i, j): Fraction(rng.randint(-4, 4), rng.randint(1, 4))
                          for i in range(n) for j in range(n)})


def random_row(n: int, rng: random.Random) -> RMatrix:
    return random_vector(n, rng).T


def generators(L: MatrixLieAlgebra) -> list[RMatrix]:
    rep = L.rep
    return list(rep.E) + list(rep.F) + list(rep.H)


def matrix_units(n: int):
    for i in range(n):
        for j in range(n):
            yield RMatrix.unit(n, n, i, j)


# -- module ----------------------------------------------------------------------

def module_dimension(L) -> bool:
    return L.rep.dim == weyl_dim(L.rs, L.rep.highest_weight)


def module_weights(L) -> bool:
    counts: dict = {}
    for w in L.rep.basis_weights:
        counts[w] = counts.get(w, 0) + 1
    return counts == freudenthal_multiplicities(L.rs, L.rep.highest_weight)


def chevalley_relations(L) -> bool:
    rep, C = L.rep, L.rs.cartan
    r = rep.rank
    zero = RMatrix(rep.dim, rep.dim)
    for i in range(r):
        if not is_diagonal(rep.H[i]):
            return False
        for k in range(rep.dim):
            if rep.H[i][k, k] != rep.basis_weights[k][i]:
                return False
        for j in range(r):
            if bracket(rep.E[i], rep.F[j]) != (rep.H[i] if i == j else zero):
                return False
            if bracket(rep.H[i], rep.E[j]) != rep.E[j].scale(C[j][i]):
                return False
            if bracket(rep.H[i], rep.F[j]) != rep.F[j].scale(-C[j][i]):
                return False
    return True


def serre_relations(L) -> bool:
    rep, C = L.rep, L.rs.cartan
    for X in (rep.E, rep.F):
        for i in range(rep.rank):
            for j in range(rep.rank):
                if i == j:
                    continue
                y = X[j]
                for _ in range(1 - C[j][i]):
                    y = bracket(X[i], y)
                if not y.is_zero():
                    return False
    return True


def highest_weight_vector(L) -> bool:
    v0 = L.rep.unit_vector(0)
    return all((e @ v0).is_zero() for e in L.rep.E)


def irreducibility_witness(L) -> bool:
    rep = L.rep
    span = EchelonBasis()
    frontier = [rep.unit_vector(0)]
    span.add(frontier[0].flat())
    while frontier:
        nxt = []
        for v in frontier:
            for f in rep.F:
                w = f @ v
                if span.add(w.flat()):
                    nxt.append(w)
        frontier = nxt
    return len(span) == rep.dim


def contravariant_form(L) -> bool:
    rep = L.rep
    g = rep.gram
    if g != g.T:
        return False
    for idx in rep.weight_spaces().values():
        block = RMatrix.from_rows([[g[p, q] for q in idx] for p in idx])
        if not leading_minors_positive(block):
            return False
    return True


# -- Lie algebra ---------------------------------------------------------------

def closure_dimension(L) -> bool:
    return L.d == L.rs.dim_g


def killing_nondegenerate(L) -> bool:
    from .exactlin import rank
    return L.killing == L.killing.T and rank(L.killing) == L.d


def killing_invariance(L) -> bool:
    d, K = L.d, L.killing
    # K([x_a, x_b], x_c) + K(x_b, [x_a, x_c]) = 0, in coordinates via ad
    for a in range(d):
        A = L.ad[a]
        M = A.T @ K + K @ A
        if not M.is_zero():
            return False
    return True


def dual_basis(L) -> bool:
    d = L.d
    for a in range(d):
        coords = L.coordinates(L.dual_basis[a])
        for b in range(d):
            k = sum((L.killing[b, c] * coords[c] for c in range(d) if coords[c]), Fraction(0))
            if k != (1 if a == b else 0):
                return False
    return True


def casimir_scalar(L) -> bool:
    n = L.rep.dim
    return L.casimir_matrix() == RMatrix.identity(n).scale(L.casimir_eigenvalue())


# -- projector -------------------------------------------------------------------

def pi_equivariance(L, samples: int = 10, seed: int = SEED) -> bool:
    rng = random.Random(seed)
    n = L.rep.dim
    mats = [random_matrix(n, rng) for _ in range(samples)]
    for A in mats:
        pA = pi_apply(L, A)
        for y in generators(L):
            if pi_apply(L, bracket(y, A)) != bracket(y, pA):
                return False
    return True


def pi_projector_identity(L) -> bool:
    c = pi_constant(L)
    for A in matrix_units(L.rep.dim):
        pA = pi_apply(L, A)
        if pi_apply(L, pA) != pA.scale(c):
            return False
    return True


def pi_image(L) -> bool:
    span = EchelonBasis()
    for A in matrix_units(L.rep.dim):
        pA = pi_apply(L, A)
        if not L.contains(pA):
            return False
        span.add(pA.flat())
    return len(span) == L.d


def trace_form_proportional(L) -> bool:
    return trace_form_ratio(L) == pi_constant(L)


def faulkner_consistency(L, samples: int = 5, seed: int = SEED) -> bool:
    rng = random.Random(seed)
    n = L.rep.dim
    for _ in range(samples):
        v, a = random_vector(n, rng), random_row(n, rng)
        if faulkner_D(L, v, a) != pi_apply(L, v @ a):
            return False
    return True


def t_matches_pi(L) -> bool:
    # pi(E_jl)[i, k] = t[(i, l), (k, j)]
    n = L.rep.dim
    for j in range(n):
        for l in range(n):
            p = pi_apply(L, RMatrix.unit(n, n, j, l))
            for k in range(n):
                col = t_apply(L, tensor(L.rep.unit_vector(k), L.rep.unit_vector(j)))
                for i in range(n):
                    if p[i, k] != col[i * n + l, 0]:
                        return False
    return True


def t_equivariance(L, samples: int = 3, seed: int = SEED) -> bool:
    rng = random.Random(seed)
    n = L.rep.dim
    eye = RMatrix.identity(n)
    for _ in range(samples):
        w = random_vector(n * n, rng)
        for y in generators(L):
            def act(z):
                return square_to(z, y, eye, n)
            if t_apply(L, act(w)) != act(t_apply(L, w)):
                return False
            if casimir_tensor_apply(L, act(w)) != act(casimir_tensor_apply(L, w)):
                return False
    return True


def square_to(w: RMatrix, y: RMatrix, eye: RMatrix, n: int) -> RMatrix:
    """(y (x) 1 + 1 (x) y) w."""
    from .casimir_projector import square_to_vec, vec_to_square
    W = vec_to_square(w, n)
    return square_to_vec(y @ W + W @ y.T)


def convolution_identity(L, samples: int = 10, seed: int = SEED) -> bool:
    rng = random.Random(seed)
    n = L.rep.dim
    for _ in range(samples):
        u, a, v = random_vector(n, rng), random_row(n, rng), random_vector(n, rng)
        lhs = pi_apply(L, u @ a) @ v
        rhs = contract_first_slot(a, t_apply(L, tensor(u, v)), n)
        if lhs != rhs:
            return False
    return True


def aut_exponentials(L) -> bool:
    rep = L.rep
    for X in list(rep.E) + list(rep.F):
        for s in (Fraction(1), Fraction(-1), Fraction(1, 2)):
            if not aut_check(L, nilpotent_exp(X, s)):
                return False
    return True


# -- orbit -----------------------------------------------------------------------

def lichtenstein_on_v0(L) -> bool:
    v0 = L.rep.unit_vector(0)
    w = tensor(v0, v0)
    return casimir_tensor_apply(L, w) == w.scale(lichtenstein_constant(L))


def equation_count(L) -> bool:
    n = L.rep.dim
    two_lam = tuple(2 * x for x in L.rep.highest_weight)
    return len(emit_equations(L).forms) == n * (n + 1) // 2 - weyl_dim(L.rs, two_lam)


def orbit_samples(L, samples: int = 5, seed: int = SEED) -> bool:
    rng = random.Random(seed)
    system = emit_equations(L)
    for _ in range(samples):
        v = orbit_sample(L, random_word(L.rs.rank, rng))
        if not membership_test(L, v).is_member:
            return False
        if not inner_ideal_test(L, SubspaceData((v,))):
            return False
        if any(system.evaluate(v)):
            return False
    return True


def three_way_equivalence(L, samples: int = 5, seed: int = SEED) -> bool:
    rng = random.Random(seed)
    n = L.rep.dim
    for v in designated_non_members(L):
        if membership_test(L, v).is_member or inner_ideal_test(L, SubspaceData((v,))):
            return False
    for _ in range(samples):
        v = random_vector(n, rng)
        if membership_test(L, v).is_member != inner_ideal_test(L, SubspaceData((v,))):
            return False
    return True


def adjoint_example(L, samples: int = 3, seed: int = SEED) -> bool:
    gamma = adjoint_identity_coefficient(L)
    rng = random.Random(seed)
    vecs = [orbit_sample(L, random_word(L.rs.rank, rng)) for _ in range(samples)]
    vecs += designated_non_members(L)
    return all(adjoint_condition(L, v, gamma) == membership_test(L, v).is_member for v in vecs)


CHECKS: list[tuple[str, Callable[[MatrixLieAlgebra], bool]]] = [
    ("module_dimension_equals_weyl_dim", module_dimension),
    ("module_weights_match_freudenthal", module_weights),
    ("chevalley_relations", chevalley_relations),
    ("serre_relations", serre_relations),
    ("v0_is_highest_weight_vector", highest_weight_vector),
    ("irreducibility_witness", irreducibility_witness),
    ("contravariant_form_positive", contravariant_form),
    ("closure_dimension_equals_dim_g", closure_dimension),
    ("killing_symmetric_invertible", killing_nondegenerate),
    ("killing_invariance", killing_invariance),
    ("killing_dual_basis", dual_basis),
    ("casimir_scalar", casimir_scalar),
    ("pi_equivariance", pi_equivariance),
    ("pi_squared_equals_c_pi", pi_projector_identity),
    ("pi_image_equals_rho_g", pi_image),
    ("trace_form_proportional_to_killing", trace_form_proportional),
    ("faulkner_D_equals_pi", faulkner_consistency),
    ("t_is_pi_reindexed", t_matches_pi),
    ("t_commutes_with_diagonal_action", t_equivariance),
    ("convolution_identity", convolution_identity),
    ("aut_pi_contains_exponentials", aut_exponentials),
    ("lichtenstein_constant_on_v0", lichtenstein_on_v0),
    ("equation_count", equation_count),
    ("orbit_samples_are_members", orbit_samples),
    ("three_way_equivalence", three_way_equivalence),
]


def run_all(L: MatrixLieAlgebra) -> list[tuple[str, bool]]:
    checks = list(CHECKS)
    if _is_adjoint(L):
        checks.append(("adjoint_example", adjoint_example))
    results = []
    for name, fn in checks:
        try:
            ok = bool(fn(L))
        except Exception:  # a crashing invariant is a failing invariant
            ok = False
        results.append((name, ok))
    return results
