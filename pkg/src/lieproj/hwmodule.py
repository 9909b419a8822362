"""Irreducible highest-weight modules as exact Chevalley-generator matrices.

The module is built weight space by weight space, descending from the highest
weight.  A candidate vector at weight ``nu`` is ``f_i b`` for a basis vector
``b`` of weight ``nu + alpha_i``; its contravariant (Shapovalov) inner products
are computed from

    <f_i b, f_j b'> = <b, e_i f_j b'>,   e_i f_j b' = f_j e_i b' + delta_ij b'(h_i) b',

which only needs generator matrices on weight spaces that are already done.
Candidates are accepted greedily while they raise the Gram rank.  Working in
coordinates of the accepted bases means everything happens in the irreducible
quotient, where the form is nondegenerate.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DimensionCapError, InvariantError
from .exactlin import RMatrix, inverse, rank, solve
from .rootdata import RootSystemData, Weight, freudenthal_multiplicities, weyl_dim

DEFAULT_MAX_DIM = 64


@dataclass(frozen=True, eq=False)
class RepModule:
    """A highest-weight module with a word-labelled basis.

    ``words[k]`` is the lowering sequence producing basis vector ``k`` from
    ``v0``: the word ``(i1, ..., ik)`` stands for ``f_ik ... f_i1 v0``, so
    ``i1`` acts first.  Index 0 is ``v0``; the last index spans the lowest
    weight space.  ``gram`` holds the contravariant form on this basis
    (block diagonal by weight).
    """

    rs: RootSystemData
    highest_weight: Weight
    dim: int
    basis_weights: tuple
    words: tuple
    E: tuple
    F: tuple
    H: tuple
    gram: RMatrix

    @property
    def rank(self) -> int:
        return self.rs.rank

    @property
    def lowest_index(self) -> int:
        return self.dim - 1

    def generator(self, index: int) -> RMatrix:
        """Generator by flat index: ``0..rank-1`` are E, ``rank..2*rank-1`` are F."""
        r = self.rank
        if not 0 <= index < 2 * r:
            raise IndexError(f"generator index {index} out of range for rank {r}")
        return self.E[index] if index < r else self.F[index - r]

    def unit_vector(self, k: int) -> RMatrix:
        return RMatrix(self.dim, 1, {(k, 0): 1})

    def weight_spaces(self) -> dict:
        spaces: dict = {}
        for k, w in enumerate(self.basis_weights):
            spaces.setdefault(w, []).append(k)
        return spaces


class _Space:
    """One finished weight space during construction."""

    def __init__(self, weight, words, gram, offset):
        self.weight = weight
        self.words = words
        self.gram = gram          # RMatrix, m x m
        self.offset = offset      # global index of first basis vector
        self.F: dict[int, RMatrix] = {}   # i -> matrix (space(weight - a_i) x self)
        self.E: dict[int, RMatrix] = {}   # i -> matrix (space(weight + a_i) x self)

    @property
    def size(self) -> int:
        return len(self.words)


def _column(m: RMatrix, k: int) -> RMatrix:
    return RMatrix(m.rows, 1, {(i, 0): m[i, k] for i in range(m.rows)})


def build_module(rs: RootSystemData, lam, max_dim: int = DEFAULT_MAX_DIM) -> RepModule:
    lam = rs.check_weight(lam)
    dim = weyl_dim(rs, lam)
    if dim > max_dim:
        raise DimensionCapError(f"dim V{lam} = {dim} exceeds cap {max_dim}")
    mults = freudenthal_multiplicities(rs, lam)
    r = rs.rank
    alpha = [rs.simple_root_weight(i) for i in range(r)]

    def shift(w, i, sign):
        return tuple(x + sign * a for x, a in zip(w, alpha[i]))

    spaces: dict = {lam: _Space(lam, [()], RMatrix.identity(1), 0)}
    order = [lam]
    layer = [lam]
    offset = 1
    while layer:
        targets = sorted({shift(w, i, -1) for w in layer for i in range(r)}, reverse=True)
        nxt = []
        for nu in targets:
            target = mults.get(nu, 0)
            if not target:
                continue
            # candidates f_i b, ordered lexicographically by their lowering word
            cands = []
            for i in range(r):
                src = spaces.get(shift(nu, i, +1))
                if src is None:
                    continue
                for k, word in enumerate(src.words):
                    cands.append((word + (i,), i, k))
            cands.sort()
            n = len(cands)

            # e_i f_j b' in the basis of weight nu + alpha_i, one column per (i, candidate)
            def raise_cand(i, cand):
                _, j, k = cand
                src_j = spaces[shift(nu, j, +1)]
                tgt = spaces[shift(nu, i, +1)]
                col = RMatrix(tgt.size, 1)
                if i == j:
                    col = RMatrix(tgt.size, 1, {(k, 0): src_j.weight[i]})
                mid = spaces.get(shift(shift(nu, i, +1), j, +1))
                if mid is not None:
                    # e_i lifts b' into mid, f_j brings it back down to nu + alpha_i
                    col = col + mid.F[j] @ _column(src_j.E[i], k)
                return col

            lifted = {}
            for i in sorted({c[1] for c in cands}):
                for b, cand in enumerate(cands):
                    lifted[i, b] = raise_cand(i, cand)
            gram = [[Fraction(0)] * n for _ in range(n)]
            for a, (_, i, k) in enumerate(cands):
                gk = spaces[shift(nu, i, +1)].gram
                for b in range(n):
                    y = lifted[i, b]
                    gram[a][b] = sum((gk[k, m] * v for (m, _), v in y.items()), Fraction(0))

            chosen: list[int] = []
            for a in range(n):
                trial = chosen + [a]
                sub = RMatrix.from_rows([[gram[p][q] for q in trial] for p in trial])
                if rank(sub) == len(trial):
                    chosen = trial
                    if len(chosen) == target:
                        break
            if len(chosen) != target:
                raise InvariantError(f"weight {nu}: Gram rank {len(chosen)} != multiplicity {target}")

            g_nu = RMatrix.from_rows([[gram[p][q] for q in chosen] for p in chosen])
            # coordinates of every candidate in the chosen basis: G c = <chosen, cand>
            rhs = RMatrix.from_rows([[gram[p][q] for q in range(n)] for p in chosen])
            coords = solve(g_nu, rhs)
            space = _Space(nu, [cands[a][0] for a in chosen], g_nu, offset)
            offset += space.size
            for i in range(r):
                up = shift(nu, i, +1)
                src = spaces.get(up)
                if src is None:
                    continue
                fm = {}
                for a, (_, ci, k) in enumerate(cands):
                    if ci == i:
                        for row in range(space.size):
                            fm[row, k] = coords[row, a]
                f_i = RMatrix(space.size, src.size, fm)
                src.F[i] = f_i
                # adjointness <e_i u, w> = <u, f_i w> gives E = G_up^{-1} F^T G_nu
                space.E[i] = inverse(src.gram) @ f_i.T @ g_nu
            spaces[nu] = space
            order.append(nu)
            nxt.append(nu)
        layer = nxt

    if offset != dim:
        raise InvariantError(f"constructed dimension {offset} != Weyl dimension {dim}")

    basis_weights: list = []
    words: list = []
    for w in order:
        sp = spaces[w]
        basis_weights.extend([w] * sp.size)
        words.extend(sp.words)

    E = [dict() for _ in range(r)]
    F = [dict() for _ in range(r)]
    gram_entries = {}
    for w in order:
        sp = spaces[w]
        for (p, q), v in sp.gram.items():
            gram_entries[sp.offset + p, sp.offset + q] = v
        for i, m in sp.E.items():
            tgt = spaces[shift(w, i, +1)]
            for (p, q), v in m.items():
                E[i][tgt.offset + p, sp.offset + q] = v
        for i, m in sp.F.items():
            tgt = spaces[shift(w, i, -1)]
            for (p, q), v in m.items():
                F[i][tgt.offset + p, sp.offset + q] = v
    H = [RMatrix(dim, dim, {(k, k): basis_weights[k][i] for k in range(dim)}) for i in range(r)]
    return RepModule(
        rs=rs,
        highest_weight=lam,
        dim=dim,
        basis_weights=tuple(basis_weights),
        words=tuple(words),
        E=tuple(RMatrix(dim, dim, e) for e in E),
        F=tuple(RMatrix(dim, dim, f) for f in F),
        H=tuple(H),
        gram=RMatrix(dim, dim, gram_entries),
    )

