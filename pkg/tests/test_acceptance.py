"""Acceptance gate: ten criteria over the nine-entry matrix, all exact.

Run with ``pytest tests/test_acceptance.py`` or directly as a script; either way
one ``criterion N: PASS|FAIL`` line is printed per criterion.
"""

import random
import sys
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from conftest import ADJOINT, MATRIX, entry_id  # noqa: E402
from lieproj import build_algebra  # noqa: E402
from lieproj.casimir_projector import (  # noqa: E402
    aut_check, casimir_tensor_apply, contract_first_slot, pi_apply, pi_constant,
    t_apply, t_matrix, tensor, trace_form_ratio,
)
from lieproj.checks import SEED, matrix_units, random_matrix, random_row  # noqa: E402
from lieproj.exactlin import RMatrix, bracket, kron, nilpotent_exp, rank  # noqa: E402
from lieproj.homvariety import (  # noqa: E402
    SubspaceData, adjoint_condition, adjoint_identity_coefficient, designated_non_members,
    emit_equations, inner_ideal_test, lichtenstein_constant, membership_test, orbit_sample,
    random_vector, random_word,
)
from lieproj.rootdata import freudenthal_multiplicities, weyl_dim  # noqa: E402

DIM_G = {"A1": 3, "A2": 8, "A3": 15, "B2": 10, "G2": 14}
C_TABLE = {("A1", (1,)): Fraction(1, 4), ("A1", (2,)): Fraction(1), ("A2", (1, 1)): Fraction(1)}
SAMPLES = 25


def algebras(entries=MATRIX):
    for t, w in entries:
        yield entry_id((t, w)), build_algebra(t, w)


def gens(L):
    return list(L.rep.E) + list(L.rep.F) + list(L.rep.H)


def orbit_vectors(L, seed=SEED):
    rng = random.Random(seed)
    return [orbit_sample(L, random_word(L.rs.rank, rng)) for _ in range(SAMPLES)]


def stacked(flats, width):
    return RMatrix(len(flats), width, {(r, k): v for r, f in enumerate(flats) for k, v in f.items()})


def member(L, v):
    return membership_test(L, v).is_member


def inner(L, v):
    return inner_ideal_test(L, SubspaceData((v,)))


def criterion_1():
    bad = []
    for name, L in algebras():
        rep = L.rep
        counts = {}
        for w in rep.basis_weights:
            counts[w] = counts.get(w, 0) + 1
        if (rep.dim != weyl_dim(L.rs, rep.highest_weight)
                or counts != freudenthal_multiplicities(L.rs, rep.highest_weight)
                or L.d != DIM_G[L.rs.name]):
            bad.append(name)
    return bad


def criterion_2():
    bad = []
    for name, L in algebras():
        rng = random.Random(SEED)
        mats = [random_matrix(L.rep.dim, rng) for _ in range(10)]
        for A in mats:
            pA = pi_apply(L, A)
            if any(pi_apply(L, bracket(y, A)) != bracket(y, pA) for y in gens(L)):
                bad.append(name)
                break
    return bad


def criterion_3():
    bad = []
    for (t, w), (name, L) in zip(MATRIX, algebras()):
        c = pi_constant(L)
        images = []
        ok = True
        for A in matrix_units(L.rep.dim):
            pA = pi_apply(L, A)
            ok &= pi_apply(L, pA) == pA.scale(c)
            images.append(pA.flat())
        basis = [x.flat() for x in L.basis]
        # Im pi inside rho(g) and of the same dimension
        width = L.rep.dim ** 2
        ok &= rank(stacked(images, width)) == L.d
        ok &= rank(stacked(images + basis, width)) == L.d
        ok &= c == trace_form_ratio(L)
        ok &= C_TABLE.get((t, w), c) == c
        if not ok:
            bad.append(name)
    return bad


def criterion_4():
    bad = []
    adjoint = {entry_id(e) for e in ADJOINT}
    for name, L in algebras():
        n = L.rep.dim
        eig = L.weight_form(L.rep.highest_weight, tuple(x + 2 for x in L.rep.highest_weight))
        ok = L.casimir_matrix() == RMatrix.identity(n).scale(eig)
        if name in adjoint:
            ok &= eig == 1
        T = t_matrix(L)
        eye = RMatrix.identity(n)
        for y in gens(L):
            D = kron(y, eye) + kron(eye, y)
            ok &= T @ D == D @ T
        if not ok:
            bad.append(name)
    return bad


def criterion_5():
    bad = []
    for name, L in algebras():
        ok = all(member(L, v) and inner(L, v) for v in orbit_vectors(L))
        ok &= not any(member(L, v) or inner(L, v) for v in designated_non_members(L))
        rng = random.Random(SEED + 1)
        for _ in range(SAMPLES):
            v = random_vector(L.rep.dim, rng)
            ok &= member(L, v) == inner(L, v)
        if not ok:
            bad.append(name)
    return bad


def criterion_6():
    bad = []
    expected = {"A1[1]": Fraction(1), "A1[2]": Fraction(3)}
    for name, L in algebras():
        v0 = L.rep.unit_vector(0)
        w = tensor(v0, v0)
        const = lichtenstein_constant(L)
        if casimir_tensor_apply(L, w) != w.scale(const) or expected.get(name, const) != const:
            bad.append(name)
    return bad


def plucker_labels(words):
    """Basis word -> pair (a, b) with the vector equal to e_a ^ e_b, starting from e_1 ^ e_2."""
    labels = []
    for word in words:
        pair = [1, 2]
        for i in word:
            # f_i sends e_{i+1} to e_{i+2} (1-based), and the word is nonzero on the basis
            k = pair.index(i + 1)
            pair[k] = i + 2
        labels.append(tuple(pair))
    return labels


def criterion_7():
    bad = []
    for name, L in algebras():
        rep = L.rep
        n = rep.dim
        system = emit_equations(L)
        two_lam = tuple(2 * x for x in rep.highest_weight)
        ok = len(system.forms) == n * (n + 1) // 2 - weyl_dim(L.rs, two_lam)
        ok &= all(not any(system.evaluate(v)) for v in orbit_vectors(L))
        if name == "A3[0,1,0]":
            idx = {p: k for k, p in enumerate(plucker_labels(rep.words))}
            P = {}
            for (a, b), (c, d), s in [((1, 2), (3, 4), 1), ((1, 3), (2, 4), -1), ((1, 4), (2, 3), 1)]:
                i, j = idx[a, b], idx[c, d]
                P[i, j] = P[j, i] = Fraction(s, 2)
            P = RMatrix(n, n, P)
            ok &= len(system.forms) == 1
            if ok:
                Q = system.forms[0]
                (pos, q) = next(Q.items())
                ok &= Q == P.scale(q / P[pos])
        if not ok:
            bad.append(name)
    return bad


def criterion_8():
    bad = []
    for name, L in algebras():
        for X in list(L.rep.E) + list(L.rep.F):
            if not all(aut_check(L, nilpotent_exp(X, s)) for s in (1, -1, Fraction(1, 2))):
                bad.append(name)
                break
    L = build_algebra("A1", (2,))
    rng = random.Random(SEED)
    while True:
        g = random_matrix(L.rep.dim, rng)
        if rank(g) == L.rep.dim:
            break
    if aut_check(L, g):
        bad.append("A1[2] random matrix")
    return bad


def criterion_9():
    bad = []
    for name, L in algebras(ADJOINT):
        gamma = adjoint_identity_coefficient(L)
        vecs = orbit_vectors(L) + designated_non_members(L)
        if not all(adjoint_condition(L, v, gamma) == member(L, v) for v in vecs):
            bad.append(name)
    return bad


def criterion_10():
    bad = []
    for name, L in algebras():
        n = L.rep.dim
        rng = random.Random(SEED)
        for _ in range(10):
            u, a, v = random_vector(n, rng), random_row(n, rng), random_vector(n, rng)
            if pi_apply(L, u @ a) @ v != contract_first_slot(a, t_apply(L, tensor(u, v)), n):
                bad.append(name)
                break
    return bad


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9, criterion_10]


def report(number, bad):
    line = f"criterion {number}: {'PASS' if not bad else 'FAIL'}"
    return line + (f" ({', '.join(bad)})" if bad else "")


@pytest.mark.parametrize("number", range(1, len(CRITERIA) + 1))
def test_criterion(number, capsys):
    bad = CRITERIA[number - 1]()
    with capsys.disabled():
        print("\n" + report(number, bad))
    assert not bad


if __name__ == "__main__":
    failures = 0
    for k, fn in enumerate(CRITERIA, 1):
        bad = fn()
        failures += bool(bad)
        print(report(k, bad), flush=True)
    sys.exit(1 if failures else 0)
