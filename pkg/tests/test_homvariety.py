import random
from fractions import Fraction as Q
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from lieproj import build_algebra, checks
from lieproj.casimir_projector import pi_apply
from lieproj.exactlin import RMatrix, rank
from lieproj.homvariety import (
    SubspaceData, adjoint_condition, adjoint_identity_coefficient, designated_non_members,
    emit_equations, group_element, inner_ideal_test, lichtenstein_constant, membership_test,
    orbit_sample, parse_generator, random_word,
)
from lieproj.rootdata import weyl_dim


def pluecker_coordinates_of_basis(L):
    """Each module basis vector as a vector in Lambda^2 C^4 (oracle).

    Uses textbook sl_4 lowering matrices f_i = E_{i+1,i} acting on e_a ^ e_b
    as a derivation, applied along the basis words starting from e_1 ^ e_2.
    """
    pairs = list(combinations(range(4), 2))

    def f(i, vec):
        out = {}
        for (a, b), c in vec.items():
            for src, other, first in ((a, b, True), (b, a, False)):
                if src != i:
                    continue
                new = (i + 1, other) if first else (other, i + 1)
                x, y = new
                if x == y:
                    continue
                sign = 1 if x < y else -1
                key = (min(x, y), max(x, y))
                out[key] = out.get(key, 0) + sign * c
        return {k: v for k, v in out.items() if v}

    rows = []
    for word in L.rep.words:
        vec = {(0, 1): Q(1)}
        for i in word:
            vec = f(i, vec)
        rows.append([vec.get(p, Q(0)) for p in pairs])
    return pairs, RMatrix.from_rows(rows)


def pluecker_form():
    pairs = list(combinations(range(4), 2))
    idx = {p: k for k, p in enumerate(pairs)}
    q = {}
    for (p1, p2), s in [(((0, 1), (2, 3)), 1), (((0, 2), (1, 3)), -1), (((0, 3), (1, 2)), 1)]:
        i, j = idx[p1], idx[p2]
        q[i, j] = q[j, i] = Q(s, 2)
    return RMatrix(6, 6, q)


def test_a3_pluecker_relation():
    L = build_algebra("A3", (0, 1, 0))
    system = emit_equations(L)
    assert len(system.forms) == 1
    (Qx,) = system.forms
    _, B = pluecker_coordinates_of_basis(L)
    pulled = B @ pluecker_form() @ B.T
    (pos, v) = next(pulled.items())
    scale = Qx[pos] / v
    assert scale != 0 and Qx == pulled.scale(scale)
    # three monomials, coefficients +-1 after a common rescaling
    (terms,) = system.term_lists()
    assert len(terms) == 3
    assert {abs(c / terms[0][2]) for *_, c in terms} == {1}


@pytest.mark.parametrize("t,w,count", [("A1", (1,), 0), ("A1", (2,), 1), ("A3", (0, 1, 0), 1)])
def test_equation_counts(t, w, count):
    assert len(emit_equations(build_algebra(t, w)).forms) == count


def test_equation_count_identity(algebra):
    n = algebra.rep.dim
    two_lam = tuple(2 * x for x in algebra.rep.highest_weight)
    system = emit_equations(algebra)
    assert len(system.forms) == n * (n + 1) // 2 - weyl_dim(algebra.rs, two_lam)
    for q in system.forms:
        assert q == q.T
    assert not any(system.evaluate(algebra.rep.unit_vector(0)))


def test_sl2_conic():
    # adjoint sl_2: the nilpotent cone x_e x_f ~ x_h^2
    L = build_algebra("A1", (2,))
    (terms,) = emit_equations(L).term_lists()
    assert sorted((i, j) for i, j, _ in terms) == [(1, 3), (2, 2)]


@pytest.mark.parametrize("t,w,c", [("A1", (1,), 1), ("A1", (2,), 3)])
def test_lichtenstein_constant(t, w, c):
    assert lichtenstein_constant(build_algebra(t, w)) == c


def test_lichtenstein_constant_trivial_weight():
    L = build_algebra("A1", (1,))
    assert lichtenstein_constant(L, (0,)) == 0


def test_membership_v0(algebra):
    assert membership_test(algebra, algebra.rep.unit_vector(0)).is_member


def test_membership_a3_wedge():
    L = build_algebra("A3", (0, 1, 0))
    assert membership_test(L, L.rep.unit_vector(0)).is_member
    v = L.rep.unit_vector(0) + L.rep.unit_vector(5)
    r = membership_test(L, v)
    assert not r.is_member and not r.residual.is_zero()
    assert not inner_ideal_test(L, SubspaceData((v,)))


def test_sl2_fundamental_everything_is_member():
    L = build_algebra("A1", (1,))
    for v in ([1, 0], [0, 1], [1, 1], [Q(3, 2), Q(-7, 5)]):
        assert membership_test(L, RMatrix.column(v)).is_member


def test_membership_rejects_zero():
    L = build_algebra("A1", (1,))
    with pytest.raises(ValueError):
        membership_test(L, RMatrix(2, 1))


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10_000), st.fractions(min_value=-9, max_value=9, max_denominator=7).filter(bool))
def test_membership_scale_invariant(seed, s):
    L = build_algebra("B2", (1, 0))
    rng = random.Random(seed)
    v = checks.random_vector(L.rep.dim, rng)
    assert membership_test(L, v).is_member == membership_test(L, v.scale(s)).is_member


def test_g_invariance(algebra):
    rng = random.Random(13)
    word = random_word(algebra.rs.rank, rng)
    g = group_element(algebra, word)
    for v in [algebra.rep.unit_vector(0)] + designated_non_members(algebra, count=2):
        assert membership_test(algebra, g @ v).is_member == membership_test(algebra, v).is_member


def test_orbit_sample_empty_word(algebra):
    assert orbit_sample(algebra, []) == algebra.rep.unit_vector(0)


def test_orbit_samples_pass_everything(algebra):
    rng = random.Random(17)
    system = emit_equations(algebra)
    for _ in range(3):
        v = orbit_sample(algebra, random_word(algebra.rs.rank, rng))
        assert membership_test(algebra, v).is_member
        assert inner_ideal_test(algebra, SubspaceData((v,)))
        assert not any(system.evaluate(v))


def test_inner_ideal_examples(algebra):
    n = algebra.rep.dim
    assert inner_ideal_test(algebra, SubspaceData((algebra.rep.unit_vector(0),)))
    whole = SubspaceData(tuple(algebra.rep.unit_vector(k) for k in range(n)))
    assert inner_ideal_test(algebra, whole)


def test_subspace_validation():
    e = RMatrix.column([1, 0])
    with pytest.raises(ValueError):
        SubspaceData((e, e.scale(2)))
    with pytest.raises(ValueError):
        SubspaceData(())


def test_inner_ideal_matches_pi_definition():
    # inner_ideal_test contracts the dual-basis sum; compare with pi_apply used literally
    L = build_algebra("G2", (1, 0))
    n = L.rep.dim
    rng = random.Random(23)
    for v in [orbit_sample(L, random_word(2, rng))] + designated_non_members(L, count=2):
        images = [pi_apply(L, v @ RMatrix.unit(1, n, 0, k)) @ v for k in range(n)]
        literal = all(rank(RMatrix.from_rows([v.values(), w.values()])) == 1
                      for w in images if not w.is_zero())
        assert literal == inner_ideal_test(L, SubspaceData((v,)))


def test_three_way_equivalence(algebra):
    assert checks.three_way_equivalence(algebra)


def test_non_members_exist_iff_equations_exist(algebra):
    nm = designated_non_members(algebra)
    assert bool(nm) == bool(emit_equations(algebra).forms)


def test_adjoint_coefficient_sl2():
    # [e, [e, f]] = [e, h] = -2e and K(e, f) = 4
    assert adjoint_identity_coefficient(build_algebra("A1", (2,))) == Q(-1, 2)


def test_adjoint_coefficient_consistent(adjoint_algebra):
    L = adjoint_algebra
    gamma = adjoint_identity_coefficient(L)
    assert gamma != 0
    rng = random.Random(29)
    for _ in range(3):
        v = orbit_sample(L, random_word(L.rs.rank, rng))
        assert adjoint_condition(L, v, gamma)
    for v in designated_non_members(L):
        assert not adjoint_condition(L, v, gamma)


def test_adjoint_coefficient_needs_adjoint():
    with pytest.raises(ValueError):
        adjoint_identity_coefficient(build_algebra("A2", (1, 0)))


def test_generator_labels():
    assert parse_generator("E1", 2) == 0
    assert parse_generator("F2", 2) == 3
    with pytest.raises(ValueError):
        parse_generator("F3", 2)
