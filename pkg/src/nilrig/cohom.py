"""Cochains, coboundary operators and second-cohomology dimensions.

Three complexes are supported on a structure-constant algebra:

* ``chevalley`` -- the classical adjoint-coefficient complex;
* ``ch``        -- the 2-step deformation complex, whose degree-2 cocycle
  condition is the full vanishing of T(phi)(x,y,z) =
  mu(phi(x,y),z) + phi(mu(x,y),z);
* ``cr``        -- the 3-step deformation complex, pairing the Chevalley
  branch with the associativity chain
  delta_R(phi) = mu o1 mu o1 phi + mu o1 phi o1 mu + phi o1 mu o1 mu.

In every case the degree-2 coboundary space is the image of the common
degree-1 operator  f |-> [f x, y] + [x, f y] - f [x, y].  Dimensions are
exact; H^2 is reported as dim Z^2 - dim B^2 after verifying the
containment B^2 in Z^2.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import product
from typing import Callable, Iterator, Mapping, Sequence

from .exactlin import Q, QZERO, QONE, RowReducer, dense_of, vadd, vec_is_zero, vscale, vzero
from .liealg import LieAlgebra, bracket_vec_basis, jacobi_defect, three_step_defect, two_step_defect


# ---------------------------------------------------------------------------
# cochains and raw multilinear maps

def _perm_sign(idx: Sequence[int]) -> int:
    sign = 1
    lst = list(idx)
    for a in range(len(lst)):
        for b in range(a + 1, len(lst)):
            if lst[a] > lst[b]:
                sign = -sign
    return sign


class Cochain:
    """Skew k-linear map (k = 1, 2, 3) with values in the algebra.

    Coefficients are stored on strictly increasing index tuples only;
    evaluation on any other ordering applies the permutation sign, and
    repeated arguments give zero.
    """

    __slots__ = ("arity", "dim", "coeffs")

    def __init__(self, arity: int, dim: int,
                 coeffs: Mapping[tuple[int, ...], Sequence] | None = None):
        if arity < 1:
            raise ValueError("arity must be positive")
        self.arity = arity
        self.dim = dim
        clean: dict[tuple[int, ...], tuple[Q, ...]] = {}
        for idx, vec in (coeffs or {}).items():
            idx = tuple(idx)
            if len(idx) != arity:
                raise ValueError(f"index tuple {idx} has wrong arity")
            if any(not 0 <= i < dim for i in idx):
                raise ValueError(f"index tuple {idx} out of range")
            if any(a >= b for a, b in zip(idx, idx[1:])):
                raise ValueError(f"index tuple {idx} must be strictly increasing")
            if len(vec) != dim:
                raise ValueError("coefficient vector has wrong length")
            v = tuple(Q(x) for x in vec)
            if not vec_is_zero(v):
                clean[idx] = v
        self.coeffs = clean

    @classmethod
    def zero(cls, arity: int, dim: int) -> "Cochain":
        return cls(arity, dim, {})

    def value(self, idx: Sequence[int]) -> tuple[Q, ...]:
        idx = tuple(idx)
        if len(idx) != self.arity:
            raise ValueError("wrong number of arguments")
        if len(set(idx)) != len(idx):
            return vzero(self.dim)
        key = tuple(sorted(idx))
        vec = self.coeffs.get(key)
        if vec is None:
            return vzero(self.dim)
        return vec if _perm_sign(idx) == 1 else tuple(-x for x in vec)

    def is_zero(self) -> bool:
        return not self.coeffs

    def first_nonzero(self) -> tuple[tuple[int, ...], tuple[Q, ...]] | None:
        if not self.coeffs:
            return None
        key = min(self.coeffs)
        return key, self.coeffs[key]

    def __eq__(self, other) -> bool:
        return (isinstance(other, Cochain) and self.arity == other.arity
                and self.dim == other.dim and self.coeffs == other.coeffs)

    def __repr__(self) -> str:
        return f"Cochain(arity={self.arity}, dim={self.dim}, entries={len(self.coeffs)})"


class MultiMap:
    """Plain k-linear map on basis tuples; no symmetry assumed."""

    __slots__ = ("arity", "dim", "coeffs")

    def __init__(self, arity: int, dim: int,
                 coeffs: Mapping[tuple[int, ...], Sequence] | None = None):
        self.arity = arity
        self.dim = dim
        clean: dict[tuple[int, ...], tuple[Q, ...]] = {}
        for idx, vec in (coeffs or {}).items():
            idx = tuple(idx)
            if len(idx) != arity or any(not 0 <= i < dim for i in idx):
                raise ValueError(f"bad index tuple {idx}")
            v = tuple(Q(x) for x in vec)
            if not vec_is_zero(v):
                clean[idx] = v
        self.coeffs = clean

    @classmethod
    def zero(cls, arity: int, dim: int) -> "MultiMap":
        return cls(arity, dim, {})

    def value(self, idx: Sequence[int]) -> tuple[Q, ...]:
        idx = tuple(idx)
        if len(idx) != self.arity:
            raise ValueError("wrong number of arguments")
        return self.coeffs.get(idx, vzero(self.dim))

    def is_zero(self) -> bool:
        return not self.coeffs

    def first_nonzero(self) -> tuple[tuple[int, ...], tuple[Q, ...]] | None:
        if not self.coeffs:
            return None
        key = min(self.coeffs)
        return key, self.coeffs[key]

    def __eq__(self, other) -> bool:
        return (isinstance(other, MultiMap) and self.arity == other.arity
                and self.dim == other.dim and self.coeffs == other.coeffs)

    def __repr__(self) -> str:
        return f"MultiMap(arity={self.arity}, dim={self.dim}, entries={len(self.coeffs)})"


def eval_mixed(m, args: Sequence) -> tuple[Q, ...]:
    """Evaluate a (Cochain | MultiMap) on a mix of basis indices and vectors."""
    args = list(args)
    for pos, a in enumerate(args):
        if isinstance(a, int):
            continue
        acc = vzero(m.dim)
        for s, c in enumerate(a):
            if c != 0:
                sub = eval_mixed(m, args[:pos] + [s] + args[pos + 1:])
                if not vec_is_zero(sub):
                    acc = vadd(acc, vscale(c, sub))
        return acc
    return m.value(tuple(args))


def mu_map(g: LieAlgebra) -> MultiMap:
    """The bracket of `g` as an arity-2 MultiMap (all ordered pairs)."""
    coeffs: dict[tuple[int, ...], tuple[Q, ...]] = {}
    for (i, j), sp in g.bracket_table().items():
        coeffs[(i, j)] = dense_of(sp, g.dim)
    return MultiMap(2, g.dim, coeffs)


def mm_combine(*terms: tuple[Q, MultiMap]) -> MultiMap:
    """Exact linear combination of MultiMaps of matching shape."""
    if not terms:
        raise ValueError("nothing to combine")
    arity = terms[0][1].arity
    dim = terms[0][1].dim
    acc: dict[tuple[int, ...], tuple[Q, ...]] = {}
    for coef, mm in terms:
        if mm.arity != arity or mm.dim != dim:
            raise ValueError("shape mismatch")
        if coef == 0:
            continue
        for idx, vec in mm.coeffs.items():
            cur = acc.get(idx)
            nv = vscale(Q(coef), vec) if cur is None else vadd(cur, vscale(Q(coef), vec))
            if vec_is_zero(nv):
                acc.pop(idx, None)
            else:
                acc[idx] = nv
    return MultiMap(arity, dim, acc)


# ---------------------------------------------------------------------------
# coboundary operators (concrete form)

def chevalley_delta1(g: LieAlgebra, f: Cochain) -> Cochain:
    """delta f (x, y) = [f x, y] + [x, f y] - f [x, y]; kernel = derivations."""
    if f.arity != 1:
        raise ValueError("expected an arity-1 cochain")
    if f.dim != g.dim:
        raise ValueError("dimension mismatch")
    n = g.dim
    fv = [f.value((i,)) for i in range(n)]
    coeffs = {}
    for i in range(n):
        for j in range(i + 1, n):
            val = vadd(bracket_vec_basis(g, fv[i], j),
                       tuple(-x for x in bracket_vec_basis(g, fv[j], i)))
            cij = g.bracket_basis(i, j)
            if not vec_is_zero(cij):
                for s, c in enumerate(cij):
                    if c != 0:
                        val = vadd(val, vscale(-c, fv[s]))
            if not vec_is_zero(val):
                coeffs[(i, j)] = val
    return Cochain(2, n, coeffs)


def chevalley_delta2(g: LieAlgebra, phi: Cochain) -> Cochain:
    """Classical degree-2 coboundary with adjoint coefficients.

    delta phi (x,y,z) = [x,phi(y,z)] - [y,phi(x,z)] + [z,phi(x,y)]
                        - phi([x,y],z) + phi([x,z],y) - phi([y,z],x)
    """
    if phi.arity != 2 or phi.dim != g.dim:
        raise ValueError("expected an arity-2 cochain of matching dimension")
    n = g.dim
    coeffs = {}
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                val = tuple(-x for x in bracket_vec_basis(g, phi.value((j, k)), i))
                val = vadd(val, bracket_vec_basis(g, phi.value((i, k)), j))
                val = vadd(val, tuple(-x for x in bracket_vec_basis(g, phi.value((i, j)), k)))
                val = vadd(val, vscale(Q(-1), eval_mixed(phi, [g.bracket_basis(i, j), k])))
                val = vadd(val, eval_mixed(phi, [g.bracket_basis(i, k), j]))
                val = vadd(val, vscale(Q(-1), eval_mixed(phi, [g.bracket_basis(j, k), i])))
                if not vec_is_zero(val):
                    coeffs[(i, j, k)] = val
    return Cochain(3, n, coeffs)


def _format_tuple(idx: Sequence[int]) -> str:
    return "(" + ",".join(f"X{i + 1}" for i in idx) + ")"


def _require_two_step(g: LieAlgebra) -> None:
    bad = two_step_defect(g)
    if bad:
        i, j, k = bad[0]
        raise ValueError(f"not 2-step: [[X{i + 1},X{j + 1}],X{k + 1}] != 0")


def _require_three_step(g: LieAlgebra) -> None:
    bad = three_step_defect(g)
    if bad:
        i, j, k, l = bad[0]
        raise ValueError(f"not 3-step: [[[X{i + 1},X{j + 1}],X{k + 1}],X{l + 1}] != 0")


def ch_delta2(g: LieAlgebra, phi: Cochain) -> MultiMap:
    """T(phi)(x,y,z) = mu(phi(x,y),z) + phi(mu(x,y),z) on a 2-step algebra.

    The output is skew in (x, y) only; its full vanishing is the degree-2
    cocycle condition of the 2-step deformation complex.
    """
    if phi.arity != 2 or phi.dim != g.dim:
        raise ValueError("expected an arity-2 cochain of matching dimension")
    _require_two_step(g)
    n = g.dim
    coeffs = {}
    for i in range(n):
        for j in range(i + 1, n):
            pv = phi.value((i, j))
            cij = g.bracket_basis(i, j)
            for k in range(n):
                val = bracket_vec_basis(g, pv, k)
                if not vec_is_zero(cij):
                    val = vadd(val, eval_mixed(phi, [cij, k]))
                if not vec_is_zero(val):
                    coeffs[(i, j, k)] = val
                    coeffs[(j, i, k)] = tuple(-x for x in val)
    return MultiMap(3, n, coeffs)


def _pair_positions(arity: int) -> list[tuple[int, int]]:
    # 0-based slots of the output tuple that the bracket contracts
    if arity % 2 == 0:
        p = arity // 2
        return [(2 * i - 1, 2 * i) for i in range(1, p + 1)]
    p = (arity + 1) // 2
    return [(2 * i, 2 * i + 1) for i in range(1, p)]


def ch_delta_general(g: LieAlgebra, psi: Cochain) -> MultiMap:
    """Literal parity-split coboundary of the 2-step complex.

    Even arity 2p:  mu(x1, psi(x2..)) + sum_i psi(.., mu(x_{2i}, x_{2i+1}), ..);
    odd arity 2p-1: mu(x1, psi(x2..)) + sum_i psi(.., mu(x_{2i+1}, x_{2i+2}), ..).
    Kept for inspection; degree-2 reports use `ch_delta2`.
    """
    if psi.arity > 3:
        raise ValueError("arity at most 3 supported")
    if psi.dim != g.dim:
        raise ValueError("dimension mismatch")
    _require_two_step(g)
    n = g.dim
    positions = _pair_positions(psi.arity)
    coeffs = {}
    for t in product(range(n), repeat=psi.arity + 1):
        val = tuple(-x for x in bracket_vec_basis(g, psi.value(t[1:]), t[0]))
        for (p1, p2) in positions:
            w = g.bracket_basis(t[p1], t[p2])
            if not vec_is_zero(w):
                args = list(t[:p1]) + [w] + list(t[p2 + 1:])
                val = vadd(val, eval_mixed(psi, args))
        if not vec_is_zero(val):
            coeffs[t] = val
    return MultiMap(psi.arity + 1, n, coeffs)


def comp1(f, h) -> MultiMap:
    """comp_1 substitution (f o1 h)(x_1..) = f(h(x_1,..,x_b), x_{b+1}, ..)."""
    if f.dim != h.dim:
        raise ValueError("dimension mismatch")
    n = f.dim
    arity = f.arity + h.arity - 1
    coeffs = {}
    for prefix in product(range(n), repeat=h.arity):
        hv = h.value(prefix)
        if vec_is_zero(hv):
            continue
        nz = [(s, c) for s, c in enumerate(hv) if c != 0]
        for suffix in product(range(n), repeat=f.arity - 1):
            acc = None
            for s, c in nz:
                fv = f.value((s,) + suffix)
                if not vec_is_zero(fv):
                    acc = vscale(c, fv) if acc is None else vadd(acc, vscale(c, fv))
            if acc is not None and not vec_is_zero(acc):
                coeffs[prefix + suffix] = acc
    return MultiMap(arity, n, coeffs)


def bullet_square(phi: Cochain) -> Cochain:
    """Jacobiator (phi . phi)(x,y,z) = phi(phi(x,y),z) + cyclic; fully skew."""
    if phi.arity != 2:
        raise ValueError("expected an arity-2 cochain")
    n = phi.dim
    coeffs = {}
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                val = eval_mixed(phi, [phi.value((i, j)), k])
                val = vadd(val, eval_mixed(phi, [phi.value((j, k)), i]))
                val = vadd(val, eval_mixed(phi, [phi.value((k, i)), j]))
                if not vec_is_zero(val):
                    coeffs[(i, j, k)] = val
    return Cochain(3, n, coeffs)


def r_delta2(g: LieAlgebra, phi: Cochain) -> MultiMap:
    """Associativity-chain coboundary on a 3-step algebra:

    mu o1 mu o1 phi + mu o1 phi o1 mu + phi o1 mu o1 mu, i.e. the 4-linear
    map [[phi(x1,x2),x3],x4] + [phi([x1,x2],x3),x4] + phi([[x1,x2],x3],x4).
    """
    if phi.arity != 2 or phi.dim != g.dim:
        raise ValueError("expected an arity-2 cochain of matching dimension")
    _require_three_step(g)
    mu = mu_map(g)
    return mm_combine(
        (QONE, comp1(mu, comp1(mu, phi))),
        (QONE, comp1(mu, comp1(phi, mu))),
        (QONE, comp1(phi, comp1(mu, mu))),
    )


def r_delta3(g: LieAlgebra, psi: MultiMap) -> MultiMap:
    """delta_R^3(psi)(x1..x5) = mu(psi(x1..x4), x5) - psi(mu(x1,x2), x3, x4, x5)."""
    if psi.arity != 4 or psi.dim != g.dim:
        raise ValueError("expected an arity-4 map of matching dimension")
    n = g.dim
    coeffs = {}
    for t in product(range(n), repeat=5):
        val = bracket_vec_basis(g, psi.value(t[:4]), t[4])
        c12 = g.bracket_basis(t[0], t[1])
        if not vec_is_zero(c12):
            val = vadd(val, vscale(Q(-1), eval_mixed(psi, [c12, t[2], t[3], t[4]])))
        if not vec_is_zero(val):
            coeffs[t] = val
    return MultiMap(5, n, coeffs)


def deformed_bracket(g: LieAlgebra, phi: Cochain, t: Q = QONE) -> LieAlgebra:
    """Structure constants of mu + t*phi (not validated as a Lie bracket)."""
    if phi.arity != 2 or phi.dim != g.dim:
        raise ValueError("expected an arity-2 cochain of matching dimension")
    t = Q(t)
    constants: dict[tuple[int, int], tuple[Q, ...]] = {}
    keys = set(g.constants) | set(phi.coeffs)
    for key in keys:
        vec = vadd(g.constants.get(key, vzero(g.dim)),
                   vscale(t, phi.coeffs.get(key, vzero(g.dim))))
        if not vec_is_zero(vec):
            constants[key] = vec
    return LieAlgebra(g.dim, constants)


# ---------------------------------------------------------------------------
# flat coordinates on the space of 2-cochains

class CochainIndex:
    """Flat coordinates: unknown (pair p, coord m) at index p*dim + m."""

    def __init__(self, dim: int):
        self.dim = dim
        self.pairs = [(i, j) for i in range(dim) for j in range(i + 1, dim)]
        self.pidx = {pair: k for k, pair in enumerate(self.pairs)}
        self.size = len(self.pairs) * dim

    def flat(self, i: int, j: int, m: int) -> tuple[int, int]:
        """Flat index and sign for the coefficient of phi(X_i, X_j) on X_m."""
        if i < j:
            return self.pidx[(i, j)] * self.dim + m, 1
        return self.pidx[(j, i)] * self.dim + m, -1

    def to_flat(self, phi: Cochain) -> dict[int, Q]:
        vec = {}
        for (i, j), val in phi.coeffs.items():
            base = self.pidx[(i, j)] * self.dim
            for m, x in enumerate(val):
                if x != 0:
                    vec[base + m] = x
        return vec

    def to_cochain(self, vec: Mapping[int, Q]) -> Cochain:
        coeffs: dict[tuple[int, ...], list[Q]] = {}
        for u, x in vec.items():
            p, m = divmod(u, self.dim)
            pair = self.pairs[p]
            coeffs.setdefault(pair, [QZERO] * self.dim)[m] = x
        return Cochain(2, self.dim, {k: tuple(v) for k, v in coeffs.items()})


def _action_table(g: LieAlgebra) -> dict[int, list[tuple[int, dict[int, Q]]]]:
    """For each k, the list of (s, sparse [X_s, X_k]) with nonzero bracket."""
    table = g.bracket_table()
    act: dict[int, list[tuple[int, dict[int, Q]]]] = {k: [] for k in range(g.dim)}
    for (s, k), sp in table.items():
        act[k].append((s, sp))
    for lst in act.values():
        lst.sort()
    return act


def _sparse_constants(g: LieAlgebra) -> dict[tuple[int, int], dict[int, Q]]:
    return {(i, j): {k: x for k, x in enumerate(vec) if x != 0}
            for (i, j), vec in g.constants.items()}


def _rows_of(rows: dict[int, dict[int, Q]]) -> Iterator[dict[int, Q]]:
    for m in sorted(rows):
        row = {u: v for u, v in rows[m].items() if v != 0}
        if row:
            yield row


def _add_mu_of_phi(rows, idx: CochainIndex, act, a: int, b: int, z: int, coef: Q) -> None:
    # coef * [phi(X_a, X_b), X_z] as a linear functional of the unknowns
    if a == b:
        return
    for s, sp in act[z]:
        u, sg = idx.flat(a, b, s)
        c = coef * sg
        for m, val in sp.items():
            row = rows.setdefault(m, {})
            row[u] = row.get(u, QZERO) + c * val


def _add_phi_of_vec(rows, idx: CochainIndex, vec: Mapping[int, Q], partner: int, coef: Q) -> None:
    # coef * phi(v, X_partner) with v given in coordinates
    for s, cs in vec.items():
        if s == partner:
            continue
        for m in range(idx.dim):
            u, sg = idx.flat(s, partner, m)
            row = rows.setdefault(m, {})
            row[u] = row.get(u, QZERO) + coef * cs * sg


def t_operator_rows(g: LieAlgebra) -> Iterator[dict[int, Q]]:
    """Constraint rows of T(phi) = 0 over the flat 2-cochain coordinates."""
    idx = CochainIndex(g.dim)
    act = _action_table(g)
    consts = _sparse_constants(g)
    for (i, j) in idx.pairs:
        cij = consts.get((i, j))
        for k in range(g.dim):
            rows: dict[int, dict[int, Q]] = {}
            _add_mu_of_phi(rows, idx, act, i, j, k, QONE)
            if cij:
                _add_phi_of_vec(rows, idx, cij, k, QONE)
            yield from _rows_of(rows)


def chevalley2_rows(g: LieAlgebra) -> Iterator[dict[int, Q]]:
    """Constraint rows of the classical degree-2 coboundary."""
    idx = CochainIndex(g.dim)
    act = _action_table(g)
    consts = _sparse_constants(g)
    n = g.dim
    for i in range(n):
        for j in range(i + 1, n):
            cij = consts.get((i, j), {})
            for k in range(j + 1, n):
                rows: dict[int, dict[int, Q]] = {}
                # [x, phi(y,z)] terms written as -[phi(y,z), x]
                _add_mu_of_phi(rows, idx, act, j, k, i, Q(-1))
                _add_mu_of_phi(rows, idx, act, i, k, j, QONE)
                _add_mu_of_phi(rows, idx, act, i, j, k, Q(-1))
                if cij:
                    _add_phi_of_vec(rows, idx, cij, k, Q(-1))
                cik = consts.get((i, k))
                if cik:
                    _add_phi_of_vec(rows, idx, cik, j, QONE)
                cjk = consts.get((j, k))
                if cjk:
                    _add_phi_of_vec(rows, idx, cjk, i, Q(-1))
                yield from _rows_of(rows)


def r2_rows(g: LieAlgebra) -> Iterator[dict[int, Q]]:
    """Constraint rows of delta_R^2(phi) = 0 (streamed; can be ~1e5 rows)."""
    idx = CochainIndex(g.dim)
    act = _action_table(g)
    consts = _sparse_constants(g)
    table = g.bracket_table()
    n = g.dim
    # double-bracket support: dd[(k, l)] = [(s, sparse [[X_s,X_k],X_l])]
    dd: dict[tuple[int, int], list[tuple[int, dict[int, Q]]]] = {}
    for k in range(n):
        for s, sp in act[k]:
            for l in range(n):
                acc: dict[int, Q] = {}
                for t, c in sp.items():
                    row = table.get((t, l))
                    if row:
                        for m, v in row.items():
                            w = acc.get(m, QZERO) + c * v
                            if w == 0:
                                acc.pop(m, None)
                            else:
                                acc[m] = w
                if acc:
                    dd.setdefault((k, l), []).append((s, acc))
    for (i, j) in idx.pairs:
        cij = consts.get((i, j))
        pbase = idx.pidx[(i, j)] * n
        for k in range(n):
            w: dict[int, Q] = {}
            if cij:
                for s, c in cij.items():
                    row = table.get((s, k))
                    if row:
                        for m, v in row.items():
                            x = w.get(m, QZERO) + c * v
                            if x == 0:
                                w.pop(m, None)
                            else:
                                w[m] = x
            for l in range(n):
                rows: dict[int, dict[int, Q]] = {}
                for s, ddvec in dd.get((k, l), ()):
                    u = pbase + s
                    for m, val in ddvec.items():
                        row = rows.setdefault(m, {})
                        row[u] = row.get(u, QZERO) + val
                if cij:
                    for s, cs in cij.items():
                        if s != k:
                            _add_mu_of_phi(rows, idx, act, s, k, l, cs)
                if w:
                    _add_phi_of_vec(rows, idx, w, l, QONE)
                yield from _rows_of(rows)


# ---------------------------------------------------------------------------
# complexes, reports, dimensions

class ComplexKind(Enum):
    CHEVALLEY = "chevalley"
    CH = "ch"
    CR = "cr"

    @classmethod
    def coerce(cls, kind) -> "ComplexKind":
        if isinstance(kind, cls):
            return kind
        try:
            return cls(str(kind).lower())
        except ValueError:
            raise ValueError(f"unknown complex kind: {kind!r}") from None


@dataclass(frozen=True)
class CohomologyReport:
    kind: ComplexKind
    z2_dim: int
    b2_dim: int
    h2_dim: int
    rigid_candidate: bool
    representatives: tuple[Cochain, ...] | None = None


def _matrix_unit(n: int, a: int, b: int) -> Cochain:
    vec = [QZERO] * n
    vec[a] = QONE
    return Cochain(1, n, {(b,): tuple(vec)})


def coboundary_image_vectors(g: LieAlgebra) -> list[dict[int, Q]]:
    """Flat images delta^1(E_ab) spanning B^2, one per matrix unit."""
    idx = CochainIndex(g.dim)
    out = []
    for a in range(g.dim):
        for b in range(g.dim):
            out.append(idx.to_flat(chevalley_delta1(g, _matrix_unit(g.dim, a, b))))
    return out


def coboundary_rank(g: LieAlgebra) -> int:
    red = RowReducer(CochainIndex(g.dim).size)
    for vec in coboundary_image_vectors(g):
        red.add(vec)
    return red.rank


def _validate_kind(g: LieAlgebra, kind: ComplexKind) -> None:
    bad = jacobi_defect(g)
    if bad:
        raise ValueError(f"not a Lie algebra: Jacobi fails at {_format_tuple(bad[0])}")
    if kind is ComplexKind.CH:
        _require_two_step(g)
    elif kind is ComplexKind.CR:
        _require_three_step(g)


def _z_rows(g: LieAlgebra, kind: ComplexKind) -> Iterator[dict[int, Q]]:
    if kind is ComplexKind.CHEVALLEY:
        yield from chevalley2_rows(g)
    elif kind is ComplexKind.CH:
        yield from t_operator_rows(g)
    else:
        yield from chevalley2_rows(g)
        yield from r2_rows(g)


def space_dims(g: LieAlgebra, kind, *, with_representatives: bool = False,
               progress: Callable[[int], None] | None = None) -> CohomologyReport:
    """Exact Z^2/B^2/H^2 dimensions of the requested complex.

    B^2 is contained in Z^2 for every legal input; this is re-verified on
    each call, so h2 = z2 - b2 is the actual quotient dimension.
    """
    kind = ComplexKind.coerce(kind)
    _validate_kind(g, kind)
    idx = CochainIndex(g.dim)
    red = RowReducer(idx.size, progress=progress)
    for row in _z_rows(g, kind):
        red.add(row)
    z2 = idx.size - red.rank
    bred = RowReducer(idx.size)
    images = coboundary_image_vectors(g)
    for vec in images:
        bred.add(vec)
        if not red.in_kernel(vec):
            raise RuntimeError("coboundary fell outside the cocycle space")
    b2 = bred.rank
    h2 = z2 - b2
    reps = None
    if with_representatives:
        reps = tuple(idx.to_cochain(vec) for vec in red.kernel_basis_sparse())
    return CohomologyReport(kind, z2, b2, h2, h2 == 0, reps)


def ch_kernel_contained_in_chevalley(g: LieAlgebra) -> bool:
    """Rank test: ker T contained in ker(delta^2) on a 2-step algebra."""
    _require_two_step(g)
    idx = CochainIndex(g.dim)
    only_t = RowReducer(idx.size)
    for row in t_operator_rows(g):
        only_t.add(row)
    stacked = RowReducer(idx.size)
    for row in t_operator_rows(g):
        stacked.add(row)
    for row in chevalley2_rows(g):
        stacked.add(row)
    return stacked.rank == only_t.rank


# ---------------------------------------------------------------------------
# linear deformation checks

@dataclass(frozen=True)
class DeformationCheck:
    """Per-condition exact zero tests for a linear one-parameter family."""

    steps: int
    conditions: tuple[tuple[str, bool, tuple[int, ...] | None], ...]

    @property
    def passes_all(self) -> bool:
        return all(ok for _, ok, _ in self.conditions)

    def condition(self, name: str) -> tuple[bool, tuple[int, ...] | None]:
        for cname, ok, witness in self.conditions:
            if cname == name:
                return ok, witness
        raise KeyError(name)

    def failed(self) -> list[str]:
        return [name for name, ok, _ in self.conditions if not ok]


def _zero_condition(name: str, defect) -> tuple[str, bool, tuple[int, ...] | None]:
    hit = defect.first_nonzero()
    return (name, hit is None, None if hit is None else hit[0])


def check_linear_deformation_2step(g: LieAlgebra, phi: Cochain) -> DeformationCheck:
    """mu + t*phi stays a 2-step-or-less Lie bracket for every scalar t
    iff both recorded conditions vanish identically."""
    _require_two_step(g)
    conditions = (
        _zero_condition("ch_cocycle", ch_delta2(g, phi)),
        _zero_condition("quadratic", comp1(phi, phi)),
    )
    return DeformationCheck(2, conditions)


def check_linear_deformation_3step(g: LieAlgebra, phi: Cochain) -> DeformationCheck:
    """The five graded pieces of the 3-step deformation conditions."""
    _require_three_step(g)
    mu = mu_map(g)
    mixed = mm_combine(
        (QONE, comp1(mu, comp1(phi, phi))),
        (QONE, comp1(phi, comp1(phi, mu))),
        (QONE, comp1(phi, comp1(mu, phi))),
    )
    conditions = (
        _zero_condition("chevalley_cocycle", chevalley_delta2(g, phi)),
        _zero_condition("jacobiator_square", bullet_square(phi)),
        _zero_condition("r_cocycle", r_delta2(g, phi)),
        _zero_condition("mixed_quadratic", mixed),
        _zero_condition("cubic", comp1(phi, comp1(phi, phi))),
    )
    return DeformationCheck(3, conditions)


def is_attached(g: LieAlgebra, phi) -> bool:
    """mu o1 phi o1 phi + phi o1 phi o1 mu + phi o1 mu o1 phi = 0."""
    _require_three_step(g)
    mu = mu_map(g)
    defect = mm_combine(
        (QONE, comp1(mu, comp1(phi, phi))),
        (QONE, comp1(phi, comp1(phi, mu))),
        (QONE, comp1(phi, comp1(mu, phi))),
    )
    return defect.is_zero()


# ---------------------------------------------------------------------------
# Jordan-type identities

@dataclass(frozen=True)
class PermCombination:
    """Formal combination of permutations of four arguments."""

    terms: tuple[tuple[tuple[int, int, int, int], Q], ...]

    def __post_init__(self):
        for perm, _ in self.terms:
            if sorted(perm) != [0, 1, 2, 3]:
                raise ValueError(f"not a permutation of four letters: {perm}")


#: v = (2341) + (3142) + tau_34 in one-line notation, zero-based images.
JORDAN_V = PermCombination((
    ((1, 2, 3, 0), QONE),
    ((2, 0, 3, 1), QONE),
    ((0, 1, 3, 2), QONE),
))


def apply_perm_combination(f: MultiMap, pc: PermCombination) -> MultiMap:
    """(F o Phi_v)(x_1..x_4) = sum_sigma c_sigma F(x_sigma(1), .., x_sigma(4))."""
    if f.arity != 4:
        raise ValueError("expected an arity-4 map")
    n = f.dim
    acc: dict[tuple[int, ...], tuple[Q, ...]] = {}
    for t in product(range(n), repeat=4):
        val = None
        for perm, coef in pc.terms:
            fv = f.coeffs.get(tuple(t[p] for p in perm))
            if fv is not None:
                term = vscale(coef, fv)
                val = term if val is None else vadd(val, term)
        if val is not None and not vec_is_zero(val):
            acc[t] = val
    return MultiMap(4, n, acc)


def _require_symmetric(m: MultiMap, what: str) -> None:
    if m.arity != 2:
        raise ValueError(f"{what} must be bilinear")
    for (a, b), vec in m.coeffs.items():
        if m.value((b, a)) != vec:
            raise ValueError(f"{what} must be symmetric")


def _outer(outer: MultiMap, left: MultiMap, right: MultiMap) -> MultiMap:
    """(x1..x4) |-> outer(left(x1,x2), right(x3,x4))."""
    n = outer.dim
    coeffs = {}
    for t12 in product(range(n), repeat=2):
        lv = left.value(t12)
        if vec_is_zero(lv):
            continue
        for t34 in product(range(n), repeat=2):
            rv = right.value(t34)
            if vec_is_zero(rv):
                continue
            val = eval_mixed(outer, [lv, rv])
            if not vec_is_zero(val):
                coeffs[t12 + t34] = val
    return MultiMap(4, n, coeffs)


def jordan_linearized_defect(a: MultiMap) -> MultiMap:
    """Six-term linearized defect; identically zero iff the commutative
    multiplication satisfies the degree-4 Jordan identity."""
    _require_symmetric(a, "multiplication")
    g4 = mm_combine(
        (QONE, comp1(a, comp1(a, a))),
        (Q(-1), _outer(a, a, a)),
    )
    return apply_perm_combination(g4, JORDAN_V)


def jordan_cocycle_defect(a: MultiMap, phi: MultiMap) -> MultiMap:
    """Linearization of the Jordan identity along a symmetric perturbation.

    (phi o1 a o1 a + a o1 phi o1 a + a o1 a o1 phi
       - a o (a x phi) - a o (phi x a) - phi o (a x a)) o Phi_v.
    """
    _require_symmetric(a, "multiplication")
    _require_symmetric(phi, "cochain")
    lin = mm_combine(
        (QONE, comp1(phi, comp1(a, a))),
        (QONE, comp1(a, comp1(phi, a))),
        (QONE, comp1(a, comp1(a, phi))),
        (Q(-1), _outer(a, a, phi)),
        (Q(-1), _outer(a, phi, a)),
        (Q(-1), _outer(phi, a, a)),
    )
    return apply_perm_combination(lin, JORDAN_V)
