"""Independent oracles for the test suite.

Everything here deliberately reimplements the checked functionality with
different machinery (dense Fraction elimination, direct operator
application) so that agreement with the package is a two-route check.
"""

from __future__ import annotations

from fractions import Fraction as Q
from itertools import product

from nilrig.cohom import Cochain, CochainIndex, ch_delta2, chevalley_delta1, chevalley_delta2, r_delta2


def dense_rank(rows: list[list[Q]]) -> int:
    """Plain dense Gauss elimination over Fractions."""
    rows = [list(map(Q, r)) for r in rows if any(x != 0 for x in r)]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    pr = 0
    for c in range(ncols):
        piv = next((r for r in range(pr, len(rows)) if rows[r][c] != 0), None)
        if piv is None:
            continue
        rows[pr], rows[piv] = rows[piv], rows[pr]
        pv = rows[pr][c]
        rows[pr] = [x / pv for x in rows[pr]]
        for r in range(len(rows)):
            if r != pr and rows[r][c] != 0:
                f = rows[r][c]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[pr])]
        pr += 1
        rank += 1
        if pr == len(rows):
            break
    return rank


def span_dim(vectors: list[list[Q]]) -> int:
    return dense_rank(vectors) if vectors else 0


def basis_cochains(n: int):
    idx = CochainIndex(n)
    out = []
    for (i, j) in idx.pairs:
        for m in range(n):
            vec = [Q(0)] * n
            vec[m] = Q(1)
            out.append(Cochain(2, n, {(i, j): tuple(vec)}))
    return out


def brute_z2(g, kind: str) -> int:
    """Kernel dimension of the degree-2 cocycle conditions, built by
    applying the concrete operators to every basis cochain (column route)
    and eliminating densely."""
    n = g.dim
    cols = []
    coords: list[tuple] = []
    seen: dict[tuple, int] = {}

    def col_of(maps) -> dict[int, Q]:
        col: dict[int, Q] = {}
        for tag, mm in enumerate(maps):
            for t, vec in mm.coeffs.items():
                for m, x in enumerate(vec):
                    if x:
                        key = (tag, t, m)
                        if key not in seen:
                            seen[key] = len(coords)
                            coords.append(key)
                        col[seen[key]] = x
        return col

    for bc in basis_cochains(n):
        if kind == "ch":
            maps = [ch_delta2(g, bc)]
        elif kind == "chevalley":
            maps = [chevalley_delta2(g, bc)]
        else:
            maps = [chevalley_delta2(g, bc), r_delta2(g, bc)]
        cols.append(col_of(maps))
    nrows = len(coords)
    dense = [[Q(0)] * len(cols) for _ in range(nrows)]
    for c, col in enumerate(cols):
        for r, x in col.items():
            dense[r][c] = x
    return len(cols) - dense_rank(dense)


def brute_b2(g) -> int:
    n = g.dim
    idx = CochainIndex(n)
    imgs = []
    for a in range(n):
        for b in range(n):
            vec = [Q(0)] * n
            vec[a] = Q(1)
            f = Cochain(1, n, {(b,): tuple(vec)})
            flat = idx.to_flat(chevalley_delta1(g, f))
            imgs.append([flat.get(u, Q(0)) for u in range(idx.size)])
    return dense_rank(imgs)


def jacobiator(g, i: int, j: int, k: int) -> tuple[Q, ...]:
    """Direct expansion of [[x,y],z] + [[y,z],x] + [[z,x],y] reading the
    structure constants straight from the table."""
    n = g.dim

    def bb(a, b):
        if a == b:
            return [Q(0)] * n
        if a < b:
            vec = g.constants.get((a, b))
            return list(vec) if vec else [Q(0)] * n
        vec = g.constants.get((b, a))
        return [-x for x in vec] if vec else [Q(0)] * n

    def b_vec(v, c):
        out = [Q(0)] * n
        for s, x in enumerate(v):
            if x:
                w = bb(s, c)
                for m in range(n):
                    out[m] += x * w[m]
        return out

    total = [Q(0)] * n
    for (a, b, c) in ((i, j, k), (j, k, i), (k, i, j)):
        term = b_vec(bb(a, b), c)
        total = [p + q for p, q in zip(total, term)]
    return tuple(total)
