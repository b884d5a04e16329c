"""Seeded random generators used by the verification report and the tests.

Everything takes an explicit `random.Random`; results are deterministic
for a fixed seed.  Nilpotent test algebras are produced from the model
constructors plus random basis changes, so validity (Jacobi, nilindex)
is guaranteed by construction rather than by rejection.
"""

from __future__ import annotations

import random
from fractions import Fraction as Q

from . import families
from .cohom import Cochain, MultiMap
from .exactlin import RationalMatrix, invert
from .liealg import LieAlgebra, abelian, basis_change, direct_sum


def rng_for(seed: int) -> random.Random:
    return random.Random(seed)


def random_matrix(n: int, rng: random.Random, lo: int = -3, hi: int = 3) -> RationalMatrix:
    entries = {}
    for i in range(n):
        for j in range(n):
            v = rng.randint(lo, hi)
            if v:
                entries[(i, j)] = Q(v)
    return RationalMatrix(n, n, entries)


def random_invertible(n: int, rng: random.Random, lo: int = -3, hi: int = 3) -> RationalMatrix:
    while True:
        m = random_matrix(n, rng, lo, hi)
        try:
            invert(m)
            return m
        except ValueError:
            continue


def random_unipotent(n: int, rng: random.Random, extra: int = 3) -> RationalMatrix:
    """Sparse upper-triangular unipotent matrix; always invertible and
    keeps transported structure constants sparse."""
    entries = {(i, i): Q(1) for i in range(n)}
    for _ in range(extra):
        i = rng.randrange(n)
        j = rng.randrange(n)
        if i < j:
            entries[(i, j)] = Q(rng.randint(-2, 2))
    return RationalMatrix(n, n, entries)


def random_skew_cochain(n: int, rng: random.Random, entries: int = 4,
                        lo: int = -2, hi: int = 2) -> Cochain:
    coeffs: dict[tuple[int, ...], list[Q]] = {}
    for _ in range(entries):
        i, j = rng.randrange(n), rng.randrange(n)
        if i == j:
            continue
        i, j = min(i, j), max(i, j)
        vec = coeffs.setdefault((i, j), [Q(0)] * n)
        vec[rng.randrange(n)] += Q(rng.randint(lo, hi))
    return Cochain(2, n, {k: tuple(v) for k, v in coeffs.items()})


def random_endomorphism(n: int, rng: random.Random, lo: int = -3, hi: int = 3) -> Cochain:
    coeffs = {}
    for b in range(n):
        vec = tuple(Q(rng.randint(lo, hi)) for _ in range(n))
        if any(vec):
            coeffs[(b,)] = vec
    return Cochain(1, n, coeffs)


def random_two_step(rng: random.Random, dim: int) -> LieAlgebra:
    """Random bracket V x V -> Z with Z central: automatically Lie and
    at most 2-step."""
    if dim < 2:
        return abelian(dim)
    nz = rng.randint(1, max(1, dim // 2))
    nv = dim - nz
    constants = {}
    for i in range(nv):
        for j in range(i + 1, nv):
            vec = [Q(0)] * dim
            hit = False
            for k in range(nv, dim):
                v = rng.randint(-2, 2)
                if v and rng.random() < 0.6:
                    vec[k] = Q(v)
                    hit = True
            if hit:
                constants[(i, j)] = tuple(vec)
    return LieAlgebra(dim, constants)


def random_nilpotent(rng: random.Random, max_dim: int = 6) -> LieAlgebra:
    """Random nilpotent Lie algebra of dim <= max_dim: a model algebra or
    direct sum thereof, disguised by a random invertible basis change."""
    choices = []
    if max_dim >= 1:
        choices.append(abelian(rng.randint(1, max_dim)))
    if max_dim >= 3:
        choices.append(families.heisenberg(1))
    if max_dim >= 4:
        choices.append(families.g_p12(2))
        choices.append(direct_sum(families.heisenberg(1), abelian(1)))
    if max_dim >= 5:
        choices.append(families.g_p1(2))
        choices.append(families.g_k3k2k1(1, 0, 2))
        choices.append(random_two_step(rng, 5))
    if max_dim >= 6:
        choices.append(families.g_p12(3))
        choices.append(families.g_k3k2k1(1, 1, 1))
        choices.append(families.g_k3k2k1(1, 0, 3))
        choices.append(direct_sum(families.g_p1(1), abelian(3)))
        choices.append(random_two_step(rng, 6))
    g = rng.choice(choices)
    if rng.random() < 0.5:
        f = random_unipotent(g.dim, rng)
    else:
        f = random_invertible(g.dim, rng, -2, 2)
    return basis_change(g, f)


def random_commutative_associative(rng: random.Random, dim: int) -> MultiMap:
    """Commutative associative multiplication on dim <= 4: a truncated
    polynomial algebra t^i * t^j = t^(i+j) (zero past degree dim-1),
    conjugated by a random invertible basis change."""
    f = random_invertible(dim, rng, -2, 2)
    finv = invert(f)
    cols = [[f.entries.get((r, c), Q(0)) for r in range(dim)] for c in range(dim)]

    def base_mul(u, v):
        out = [Q(0)] * dim
        for i, a in enumerate(u):
            if a == 0:
                continue
            for j, b in enumerate(v):
                if b != 0 and i + j < dim:
                    out[i + j] += a * b
        return out

    coeffs = {}
    for i in range(dim):
        for j in range(dim):
            prod = base_mul(cols[i], cols[j])
            vec = finv.matvec(prod)
            if any(vec):
                coeffs[(i, j)] = tuple(vec)
    return MultiMap(2, dim, coeffs)
