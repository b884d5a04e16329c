"""Structure-constant Lie algebras over exact rationals.

A `LieAlgebra` stores only the brackets [X_i, X_j] with i < j (0-based);
skew-symmetry and [X_i, X_i] = 0 are structural.  All operations are pure
and values are treated as immutable, so concurrent use is safe.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Mapping, Sequence

from .exactlin import (
    Q,
    QZERO,
    RationalMatrix,
    RowReducer,
    dense_of,
    invert,
    vadd,
    vec_is_zero,
    vscale,
    vzero,
)

DEFAULT_SEED = 0xC0FFEE


class LieAlgebra:
    """Finite-dimensional algebra given by rational structure constants."""

    __slots__ = ("dim", "constants", "_table")

    def __init__(self, dim: int,
                 constants: Mapping[tuple[int, int], Sequence] | None = None):
        if dim < 0:
            raise ValueError("dimension must be nonnegative")
        self.dim = dim
        clean: dict[tuple[int, int], tuple[Q, ...]] = {}
        for (i, j), vec in (constants or {}).items():
            if not (0 <= i < j < dim):
                raise ValueError(f"bracket pair ({i},{j}) must satisfy 0 <= i < j < dim")
            if len(vec) != dim:
                raise ValueError(f"bracket value for ({i},{j}) has wrong length")
            v = tuple(Q(x) for x in vec)
            if not vec_is_zero(v):
                clean[(i, j)] = v
        self.constants = clean
        self._table: dict[tuple[int, int], dict[int, Q]] | None = None

    def bracket_basis(self, i: int, j: int) -> tuple[Q, ...]:
        """[X_i, X_j] as a dense coordinate vector."""
        if i == j:
            return vzero(self.dim)
        if i < j:
            return self.constants.get((i, j), vzero(self.dim))
        vec = self.constants.get((j, i))
        return vzero(self.dim) if vec is None else tuple(-x for x in vec)

    def bracket_table(self) -> dict[tuple[int, int], dict[int, Q]]:
        """Sparse [X_i, X_j] for all ordered pairs with nonzero bracket."""
        if self._table is None:
            table: dict[tuple[int, int], dict[int, Q]] = {}
            for (i, j), vec in self.constants.items():
                sp = {k: x for k, x in enumerate(vec) if x != 0}
                table[(i, j)] = sp
                table[(j, i)] = {k: -x for k, x in sp.items()}
            self._table = table
        return self._table

    def pairs(self) -> list[tuple[int, int]]:
        return sorted(self.constants)

    def __eq__(self, other) -> bool:
        return (isinstance(other, LieAlgebra)
                and self.dim == other.dim and self.constants == other.constants)

    def __repr__(self) -> str:
        return f"LieAlgebra(dim={self.dim}, brackets={len(self.constants)})"


def abelian(n: int) -> LieAlgebra:
    return LieAlgebra(n, {})


@dataclass(frozen=True, order=True)
class CharSeq:
    """Non-increasing partition recording nilpotency block structure."""

    parts: tuple[int, ...]

    def __post_init__(self):
        if any(p <= 0 for p in self.parts):
            raise ValueError("partition parts must be positive")
        if any(a < b for a, b in zip(self.parts, self.parts[1:])):
            raise ValueError("partition parts must be non-increasing")

    @property
    def total(self) -> int:
        return sum(self.parts)

    def __iter__(self):
        return iter(self.parts)


@dataclass(frozen=True)
class SubspaceChain:
    """Descending chain of subspaces with canonical (RREF) bases."""

    dims: tuple[int, ...]
    bases: tuple[tuple[tuple[Q, ...], ...], ...]


# ---------------------------------------------------------------------------
# bracket and validity

def bracket(g: LieAlgebra, x: Sequence[Q], y: Sequence[Q]) -> tuple[Q, ...]:
    """[x, y] for arbitrary coordinate vectors; bilinear and skew."""
    if len(x) != g.dim or len(y) != g.dim:
        raise ValueError("vector length mismatch")
    acc = [QZERO] * g.dim
    for (i, j), vec in g.constants.items():
        coef = Q(x[i]) * Q(y[j]) - Q(x[j]) * Q(y[i])
        if coef != 0:
            for k, v in enumerate(vec):
                if v != 0:
                    acc[k] += coef * v
    return tuple(acc)


def bracket_vec_basis(g: LieAlgebra, v: Sequence[Q], k: int) -> tuple[Q, ...]:
    """[v, X_k] for a coordinate vector v and basis index k."""
    table = g.bracket_table()
    acc = [QZERO] * g.dim
    for s, c in enumerate(v):
        if c == 0:
            continue
        row = table.get((s, k))
        if row:
            for m, w in row.items():
                acc[m] += c * w
    return tuple(acc)


def jacobi_defect(g: LieAlgebra) -> list[tuple[int, int, int]]:
    """Triples (i, j, k), i < j < k, where the Jacobi identity fails."""
    bad = []
    for i in range(g.dim):
        for j in range(i + 1, g.dim):
            bij = g.bracket_basis(i, j)
            for k in range(j + 1, g.dim):
                jac = vadd(
                    vadd(bracket_vec_basis(g, bij, k),
                         bracket_vec_basis(g, g.bracket_basis(j, k), i)),
                    bracket_vec_basis(g, g.bracket_basis(k, i), j))
                if not vec_is_zero(jac):
                    bad.append((i, j, k))
    return bad


def is_lie(g: LieAlgebra) -> bool:
    return not jacobi_defect(g)


def two_step_defect(g: LieAlgebra) -> list[tuple[int, int, int]]:
    """Basis tuples (i, j, k) with [[X_i, X_j], X_k] != 0."""
    bad = []
    for (i, j) in g.pairs():
        vec = g.constants[(i, j)]
        for k in range(g.dim):
            if not vec_is_zero(bracket_vec_basis(g, vec, k)):
                bad.append((i, j, k))
    return bad


def three_step_defect(g: LieAlgebra) -> list[tuple[int, int, int, int]]:
    """Basis tuples (i, j, k, l) with [[[X_i, X_j], X_k], X_l] != 0."""
    bad = []
    for (i, j) in g.pairs():
        vec = g.constants[(i, j)]
        for k in range(g.dim):
            w = bracket_vec_basis(g, vec, k)
            if vec_is_zero(w):
                continue
            for l in range(g.dim):
                if not vec_is_zero(bracket_vec_basis(g, w, l)):
                    bad.append((i, j, k, l))
    return bad


# ---------------------------------------------------------------------------
# central series, nilpotency, characteristic sequence

def _basis_rows(red: RowReducer, n: int) -> tuple[tuple[Q, ...], ...]:
    return tuple(dense_of(red.pivots[c], n) for c in red.pivot_cols())


def lower_central_series(g: LieAlgebra) -> SubspaceChain:
    """Chain g = g^0 ⊇ g^1 ⊇ ... with g^k = [g^(k-1), g].

    The recorded dims stop at the first 0, or repeat once when the chain
    stabilizes at a nonzero ideal (non-nilpotent input).
    """
    n = g.dim
    dims = [n]
    ident = tuple(tuple(QZERO if i != j else Q(1) for j in range(n)) for i in range(n))
    bases: list[tuple[tuple[Q, ...], ...]] = [ident]
    current = ident
    while True:
        red = RowReducer(n)
        for v in current:
            for k in range(n):
                w = bracket_vec_basis(g, v, k)
                if not vec_is_zero(w):
                    red.add({i: x for i, x in enumerate(w) if x != 0})
        nxt = _basis_rows(red, n)
        dims.append(red.rank)
        bases.append(nxt)
        if red.rank == 0 or red.rank == dims[-2]:
            break
        current = nxt
    return SubspaceChain(tuple(dims), tuple(bases))


def nilindex(g: LieAlgebra) -> int:
    """Smallest k with g^k = 0; errors when the series stops short of 0."""
    chain = lower_central_series(g)
    if chain.dims and chain.dims[-1] == 0:
        return len(chain.dims) - 1
    raise ValueError("series stabilized at nonzero ideal")


def is_p_step(g: LieAlgebra, p: int) -> bool:
    return nilindex(g) == p


def ad_matrix(g: LieAlgebra, x: Sequence[Q]) -> RationalMatrix:
    """Matrix of y ↦ [x, y] in the chosen basis."""
    if len(x) != g.dim:
        raise ValueError("vector length mismatch")
    entries = {}
    for j in range(g.dim):
        col = bracket_vec_basis(g, x, j)
        for i, v in enumerate(col):
            if v != 0:
                entries[(i, j)] = v
    return RationalMatrix(g.dim, g.dim, entries)


def jordan_partition(m: RationalMatrix) -> CharSeq:
    """Jordan block sizes of a nilpotent matrix, from its rank sequence.

    The number of blocks of size >= k is rank(m^(k-1)) - rank(m^k).
    """
    if m.nrows != m.ncols:
        raise ValueError("matrix must be square")
    n = m.nrows
    ranks = [n]
    power = m
    while True:
        red = RowReducer(n)
        for row in power.rows_map().values():
            red.add(row)
        r = red.rank
        if r == ranks[-1]:
            raise ValueError("matrix is not nilpotent")
        ranks.append(r)
        if r == 0:
            break
        power = power @ m
    ge = [ranks[k - 1] - ranks[k] for k in range(1, len(ranks))]
    parts: list[int] = []
    for k in range(len(ge), 0, -1):
        count = ge[k - 1] - (ge[k] if k < len(ge) else 0)
        parts.extend([k] * count)
    return CharSeq(tuple(sorted(parts, reverse=True)))


def characteristic_sequence(g: LieAlgebra, seed: int = DEFAULT_SEED,
                            samples: int = 50) -> CharSeq:
    """Lexicographically maximal ad-Jordan partition over elements off g^1.

    Candidates are every basis vector outside the derived subalgebra plus
    `samples` seeded random small-integer combinations outside it.  The
    maximum is attained on a Zariski-open set, so the sampled maximum is
    the true value with overwhelming probability; `samples` is the knob.
    """
    n = g.dim
    if n == 0:
        raise ValueError("characteristic sequence needs positive dimension")
    nilindex(g)  # raises for non-nilpotent input
    chain = lower_central_series(g)
    derived = RowReducer(n)
    for v in chain.bases[1]:
        derived.add({i: x for i, x in enumerate(v) if x != 0})

    def outside_derived(vec: Sequence[Q]) -> bool:
        return bool(derived.residual({i: x for i, x in enumerate(vec) if x != 0}))

    candidates: list[tuple[Q, ...]] = []
    for i in range(n):
        e = tuple(Q(1) if j == i else QZERO for j in range(n))
        if outside_derived(e):
            candidates.append(e)
    rng = random.Random(seed)
    attempts = 0
    found = 0
    while found < samples and attempts < 20 * samples + 20:
        attempts += 1
        vec = tuple(Q(rng.randint(-5, 5)) for _ in range(n))
        if vec_is_zero(vec) or not outside_derived(vec):
            continue
        candidates.append(vec)
        found += 1
    if not candidates:
        raise ValueError("no elements outside the derived subalgebra")
    best: CharSeq | None = None
    for x in candidates:
        part = jordan_partition(ad_matrix(g, x))
        if best is None or part.parts > best.parts:
            best = part
    return best


def center_dim(g: LieAlgebra) -> int:
    """Dimension of {x : [x, X_j] = 0 for all j}."""
    n = g.dim
    table = g.bracket_table()
    rows: dict[tuple[int, int], dict[int, Q]] = {}
    for (i, j), sp in table.items():
        for m, v in sp.items():
            rows.setdefault((j, m), {})[i] = v
    red = RowReducer(n)
    for row in rows.values():
        red.add(row)
    return n - red.rank


def derived_dim(g: LieAlgebra) -> int:
    return lower_central_series(g).dims[1]


def derivation_algebra_dim(g: LieAlgebra) -> int:
    """Dimension of the derivation algebra (= kernel of the degree-1
    Chevalley coboundary), computed exactly."""
    from . import cohom  # local import: cohom depends on this module

    return g.dim * g.dim - cohom.coboundary_rank(g)


def basis_change(g: LieAlgebra, f: RationalMatrix) -> LieAlgebra:
    """Transport of structure: (f·μ)(x, y) = f^(-1) μ(f x, f y)."""
    if f.nrows != g.dim or f.ncols != g.dim:
        raise ValueError("basis change matrix has wrong shape")
    try:
        finv = invert(f)
    except ValueError:
        raise ValueError("singular basis change matrix") from None
    cols = [dense_of(f.column(j), g.dim) for j in range(g.dim)]
    constants = {}
    for i in range(g.dim):
        for j in range(i + 1, g.dim):
            v = bracket(g, cols[i], cols[j])
            if not vec_is_zero(v):
                w = finv.matvec(v)
                if not vec_is_zero(w):
                    constants[(i, j)] = w
    return LieAlgebra(g.dim, constants)


def direct_sum(g1: LieAlgebra, g2: LieAlgebra) -> LieAlgebra:
    n1, n2 = g1.dim, g2.dim
    constants: dict[tuple[int, int], tuple[Q, ...]] = {}
    for (i, j), vec in g1.constants.items():
        constants[(i, j)] = tuple(vec) + vzero(n2)
    for (i, j), vec in g2.constants.items():
        constants[(i + n1, j + n1)] = vzero(n1) + tuple(vec)
    return LieAlgebra(n1 + n2, constants)
