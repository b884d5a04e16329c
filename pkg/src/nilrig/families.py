"""Constructors for the named nilpotent algebras and parametrized families.

Bracket data is written 1-based, matching the conventional X_1..X_n basis
labels, and converted to the 0-based internal representation here.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, NamedTuple, Sequence

from .cohom import Cochain, ch_delta2, deformed_bracket
from .exactlin import Q, QZERO, QONE, RowReducer
from .liealg import LieAlgebra


def algebra_from_brackets(dim: int,
                          brackets: Mapping[tuple[int, int], Mapping[int, object]]
                          ) -> LieAlgebra:
    """Build an algebra from 1-based bracket data {(i, j): {k: coeff}}."""
    constants: dict[tuple[int, int], tuple[Q, ...]] = {}
    for (i, j), image in brackets.items():
        if not (1 <= i < j <= dim):
            raise ValueError(f"bracket pair ({i},{j}) must satisfy 1 <= i < j <= dim")
        vec = [QZERO] * dim
        for k, c in image.items():
            if not 1 <= k <= dim:
                raise ValueError(f"image index {k} out of range")
            vec[k - 1] += Q(c)
        constants[(i - 1, j - 1)] = tuple(vec)
    return LieAlgebra(dim, constants)


# ---------------------------------------------------------------------------
# model algebras

def heisenberg(p: int) -> LieAlgebra:
    """Dim 2p+1: [X_1,X_2] = ... = [X_{2p-1},X_{2p}] = X_{2p+1}."""
    if p < 1:
        raise ValueError("p must be at least 1")
    n = 2 * p + 1
    return algebra_from_brackets(
        n, {(2 * i - 1, 2 * i): {n: 1} for i in range(1, p + 1)})


def g_p1(p: int) -> LieAlgebra:
    """Dim 2p+1 model with blocks (2,..,2,1): [X_1, X_{2i}] = X_{2i+1}."""
    if p < 1:
        raise ValueError("p must be at least 1")
    return algebra_from_brackets(
        2 * p + 1, {(1, 2 * i): {2 * i + 1: 1} for i in range(1, p + 1)})


def g_p12(p: int) -> LieAlgebra:
    """Dim 2p model with blocks (2,..,2,1,1): [X_1, X_{2i}] = X_{2i+1}, i < p."""
    if p < 2:
        raise ValueError("p must be at least 2")
    return algebra_from_brackets(
        2 * p, {(1, 2 * i): {2 * i + 1: 1} for i in range(1, p)})


_RIGID_2STEP: dict[str, tuple[int, int, dict[tuple[int, int], dict[int, int]]]] = {
    # name: (dim, number of [X1, X_{2i}] = X_{2i+1} rows, extra brackets)
    "g7": (7, 3, {(2, 4): {7: 1}, (2, 6): {5: 1}, (4, 6): {3: 1}}),
    "g9": (9, 4, {(2, 4): {7: 1}, (2, 8): {5: 1}, (4, 6): {9: 1}, (6, 8): {3: 1}}),
    "g6": (6, 2, {(2, 6): {5: 1}, (4, 6): {3: 1}}),
    "g8": (8, 3, {(2, 4): {7: 1}, (4, 8): {3: 1}, (6, 8): {5: 1}}),
    "h6": (6, 2, {(2, 4): {6: 1}}),
    "h8": (8, 3, {(2, 6): {5: 1}, (2, 4): {8: 1}}),
    "h10": (10, 4, {(2, 4): {10: 1}, (2, 6): {5: 1}, (2, 8): {3: 1},
                    (4, 6): {9: 1}, (4, 8): {7: 1}, (6, 8): {3: 1}}),
}


def rigid_2step(which: str) -> LieAlgebra:
    """One of the distinguished rigid 2-step algebras g7/g9/g6/g8/h6/h8/h10."""
    try:
        dim, rows, extra = _RIGID_2STEP[which]
    except KeyError:
        raise ValueError(f"unknown rigid 2-step algebra: {which!r}") from None
    brackets: dict[tuple[int, int], dict[int, int]] = {
        (1, 2 * i): {2 * i + 1: 1} for i in range(1, rows + 1)}
    brackets.update(extra)
    return algebra_from_brackets(dim, brackets)


def g_k3k2k1(k3: int, k2: int, k1: int) -> LieAlgebra:
    """3-step model of dimension 3*k3 + 2*k2 + k1 with block sizes
    (3,..,3,2,..,2,1,..,1) of multiplicities (k3, k2, k1)."""
    if k3 < 1 or k2 < 0 or k1 < 1:
        raise ValueError("need k3 >= 1, k2 >= 0, k1 >= 1")
    n = 3 * k3 + 2 * k2 + k1
    brackets: dict[tuple[int, int], dict[int, int]] = {}
    for i in range(k3):
        brackets[(1, 2 + 3 * i)] = {3 + 3 * i: 1}
        brackets[(1, 3 + 3 * i)] = {4 + 3 * i: 1}
    for j in range(1, k2 + 1):
        brackets[(1, 3 * k3 + 2 * j)] = {3 * k3 + 2 * j + 1: 1}
    return algebra_from_brackets(n, brackets)


def g_p01(p: int) -> LieAlgebra:
    """Dim 3p+1: [X_1, X_{3i-1}] = X_{3i}, [X_1, X_{3i}] = X_{3i+1}."""
    if p < 1:
        raise ValueError("p must be at least 1")
    return g_k3k2k1(p, 0, 1)


def rigid_3step_7() -> LieAlgebra:
    """The distinguished rigid 7-dimensional 3-step algebra."""
    brackets: dict[tuple[int, int], dict[int, int]] = {}
    for i in (1, 2):
        brackets[(1, 3 * i - 1)] = {3 * i: 1}
        brackets[(1, 3 * i)] = {3 * i + 1: 1}
    brackets[(2, 3)] = {4: 1}
    brackets[(3, 5)] = {7: 1}
    brackets[(5, 6)] = {4: 1}
    brackets[(2, 5)] = {6: 1}
    return algebra_from_brackets(7, brackets)


# ---------------------------------------------------------------------------
# normalized cocycle templates

def _coeff_name(i: int, j: int, k: int) -> str:
    return f"a_{{{i},{j}}}^{k}"


@dataclass(frozen=True)
class CocycleTemplate:
    """Normal form of a cocycle space: free coefficient names plus the
    linear pattern tying them to cochain entries.

    `entries` maps a 1-based pair (i, j) to terms (name, k, multiplier)
    meaning: the coefficient of X_k in phi(X_i, X_j) picks up
    multiplier * value(name).  A name may appear under several pairs,
    which encodes the fixed linear couplings of the family.
    """

    family: str
    p: int
    dim: int
    free: tuple[str, ...]
    entries: tuple[tuple[tuple[int, int], tuple[tuple[str, int, Q], ...]], ...]
    relations: tuple[str, ...] = ()

    def instantiate(self, coeffs: Mapping[str, object]) -> Cochain:
        unknown = set(coeffs) - set(self.free)
        if unknown:
            raise ValueError(f"unknown coefficient names: {sorted(unknown)}")
        values = {name: Q(v) for name, v in coeffs.items()}
        data: dict[tuple[int, ...], list[Q]] = {}
        for (i, j), terms in self.entries:
            vec = data.setdefault((i - 1, j - 1), [QZERO] * self.dim)
            for name, k, mult in terms:
                c = values.get(name, QZERO)
                if c != 0:
                    vec[k - 1] += mult * c
        return Cochain(2, self.dim, {key: tuple(v) for key, v in data.items()})

    def random_coeffs(self, rng, lo: int = -3, hi: int = 3) -> dict[str, Q]:
        return {name: Q(rng.randint(lo, hi)) for name in self.free}


def _template_221(p: int) -> CocycleTemplate:
    if p < 2:
        raise ValueError("p must be at least 2")
    dim = 2 * p + 1
    entries = []
    names: list[str] = []

    def term(i, j, k):
        name = _coeff_name(i, j, k)
        names.append(name)
        return (name, k, QONE)

    entries.append(((2, 4), tuple(term(2, 4, 2 * k + 1) for k in range(3, p + 1))))
    for i in range(3, p + 1):
        entries.append(((2, 2 * i),
                        tuple(term(2, 2 * i, 2 * k + 1) for k in range(2, p + 1))))
    for i in range(2, p + 1):
        for j in range(i + 1, p + 1):
            entries.append(((2 * i, 2 * j),
                            tuple(term(2 * i, 2 * j, 2 * k + 1) for k in range(1, p + 1))))
    return CocycleTemplate("221", p, dim, tuple(names),
                           tuple((pair, terms) for pair, terms in entries if terms))


def _template_z2kk(p: int) -> CocycleTemplate:
    if p < 2:
        raise ValueError("p must be at least 2")
    dim = 2 * p
    names = ["a"]
    entries = [((1, 2 * p), (("a", 2 * p, QONE),))]
    for i in range(2, p + 1):
        for j in range(i + 1, p + 1):
            terms = []
            for k in range(1, p):  # odd images X_3 .. X_{2p-1}
                name = _coeff_name(2 * i, 2 * j, 2 * k + 1)
                names.append(name)
                terms.append((name, 2 * k + 1, QONE))
            name = _coeff_name(2 * i, 2 * j, 2 * p)
            names.append(name)
            terms.append((name, 2 * p, QONE))
            entries.append(((2 * i, 2 * j), tuple(terms)))
    return CocycleTemplate("Z2kk", p, dim, tuple(names), tuple(entries))


def _template_c1(p: int) -> CocycleTemplate:
    if p < 2:
        raise ValueError("p must be at least 2")
    dim = 2 * p
    names: list[str] = []
    entries = []
    for i in range(2, p + 1):
        for j in range(i + 1, p + 1):
            terms = []
            for k in range(1, p):
                name = _coeff_name(2 * i, 2 * j, 2 * k + 1)
                names.append(name)
                terms.append((name, 2 * k + 1, QONE))
            entries.append(((2 * i, 2 * j), tuple(terms)))
    return CocycleTemplate("C1", p, dim, tuple(names), tuple(entries))


def _template_c2(p: int) -> CocycleTemplate:
    if p < 2:
        raise ValueError("p must be at least 2")
    dim = 2 * p
    names: list[str] = []
    entries = []
    for i in range(2, p):
        for j in range(i + 1, p):
            terms = []
            for k in range(1, p):
                name = _coeff_name(2 * i, 2 * j, 2 * k + 1)
                names.append(name)
                terms.append((name, 2 * k + 1, QONE))
            name = _coeff_name(2 * i, 2 * j, 2 * p)
            names.append(name)
            terms.append((name, 2 * p, QONE))
            entries.append(((2 * i, 2 * j), tuple(terms)))
    return CocycleTemplate("C2", p, dim, tuple(names), tuple(entries))


def _template_p01(p: int) -> CocycleTemplate:
    if p < 1:
        raise ValueError("p must be at least 1")
    dim = 3 * p + 1
    names: list[str] = []
    entries = []
    relations = []

    def fresh(i, j, k):
        name = _coeff_name(i, j, k)
        names.append(name)
        return name

    for i in range(1, p + 1):
        for j in range(i, p + 1):
            entries.append(((3 * i - 1, 3 * j),
                            tuple((fresh(3 * i - 1, 3 * j, k), 3 * k + 1, QONE)
                                  for k in range(1, p + 1))))
    for i in range(1, p + 1):
        for j in range(i + 1, p + 1):
            entries.append(((3 * i, 3 * j - 1),
                            tuple((fresh(3 * i, 3 * j - 1, k), 3 * k + 1, QONE)
                                  for k in range(1, p + 1))))
    for i in range(1, p + 1):
        for j in range(i + 1, p + 1):
            terms = []
            for k in range(1, p + 1):
                # coupled part: coefficient of X_{3k} is a_{3i,3j-1}^k + a_{3i-1,3j}^k
                terms.append((_coeff_name(3 * i, 3 * j - 1, k), 3 * k, QONE))
                terms.append((_coeff_name(3 * i - 1, 3 * j, k), 3 * k, QONE))
                terms.append((fresh(3 * i - 1, 3 * j - 1, k), 3 * k + 1, QONE))
                relations.append(
                    f"phi(X{3 * i - 1},X{3 * j - 1})|X{3 * k} = "
                    f"{_coeff_name(3 * i, 3 * j - 1, k)} + {_coeff_name(3 * i - 1, 3 * j, k)}")
            entries.append(((3 * i - 1, 3 * j - 1), tuple(terms)))
    return CocycleTemplate("p01", p, dim, tuple(names), tuple(entries),
                           tuple(relations))


def _template_clas3111(p: int) -> CocycleTemplate:
    """Normal form on the dim n = 3 + p algebra with one 3-block; p >= 2."""
    if p < 2:
        raise ValueError("p must be at least 2")
    n = 3 + p
    names: list[str] = []
    entries = []

    def fresh(i, j, k):
        name = _coeff_name(i, j, k)
        names.append(name)
        return name

    entries.append(((2, 3), tuple((fresh(2, 3, i), i, QONE) for i in range(5, n + 1))))
    for k in range(5, n + 1):
        entries.append(((2, k), tuple((fresh(2, k, i), i, QONE) for i in range(4, n + 1))))
    for l in range(5, n + 1):
        for k in range(l + 1, n + 1):
            entries.append(((l, k), tuple((fresh(l, k, i), i, QONE) for i in range(4, n + 1))))
    return CocycleTemplate("clas3111", p, n, tuple(names), tuple(entries))


_TEMPLATES = {
    "221": _template_221,
    "Z2kk": _template_z2kk,
    "C1": _template_c1,
    "C2": _template_c2,
    "p01": _template_p01,
    "clas3111": _template_clas3111,
}


def normalized_cocycle_template(family: str, p: int) -> CocycleTemplate:
    """Normal-form cocycle pattern for one of the families
    221 / Z2kk / C1 / C2 / p01 / clas3111."""
    try:
        builder = _TEMPLATES[family]
    except KeyError:
        raise ValueError(f"unknown template family: {family!r}") from None
    return builder(p)


# ---------------------------------------------------------------------------
# deformed members and classification list

@dataclass(frozen=True)
class FamilyParams:
    """Identifies a family member: template name, sizes, coefficient values."""

    name: str
    p: int = 0
    k3: int = 0
    k2: int = 0
    k1: int = 0
    coeffs: Mapping[str, object] = field(default_factory=dict)


def deformed_2step(base: str, params: FamilyParams) -> LieAlgebra:
    """Member of the 2-step family over g_p1 (template 221) or g_p12
    (templates C1 / C2) with the given template coefficients."""
    if base == "g_p1":
        g0 = g_p1(params.p)
        allowed = {"221"}
    elif base == "g_p12":
        g0 = g_p12(params.p)
        allowed = {"C1", "C2", "Z2kk"}
    else:
        raise ValueError(f"unknown base model: {base!r}")
    if params.name not in allowed:
        raise ValueError(f"template {params.name!r} does not match base {base!r}")
    template = normalized_cocycle_template(params.name, params.p)
    phi = template.instantiate(params.coeffs)
    return deformed_bracket(g0, phi)


#: Coefficient tuples (a1..a5, b1..b5) of the sixteen 7-dimensional
#: 3-step members with block pattern (3,3,1).
F731_TUPLES: tuple[tuple[int, ...], ...] = (
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (0, 0, 1, 0, 0, 0, 0, 0, 0, 0),
    (0, 0, 0, 1, 0, 0, 0, 0, 0, 1),
    (0, 0, 0, 1, 0, 0, 0, 0, 0, 0),
    (0, 0, 0, 1, 0, 1, 0, 0, 0, 0),
    (1, 0, 0, 0, 0, 1, 0, 0, 1, 0),
    (1, 0, 0, 0, 0, 0, 0, 0, 1, 0),
    (1, 0, 0, 0, 1, 0, 1, 0, 0, 0),
    (0, 0, 0, 0, 0, 1, 0, 0, 1, 0),
    (0, 0, 1, 1, 0, 0, 0, 0, 1, 0),
    (1, 0, 0, 1, 0, 0, 1, 0, 0, 0),
    (1, 0, 0, 1, 0, 0, 0, 0, 0, 1),
    (1, 0, 0, 0, 0, 0, 1, 0, 0, 0),
    (0, 0, 0, 0, 0, 0, 0, 0, 1, 0),
    (1, 0, 0, 0, 0, 0, 0, 0, 0, 1),
)

#: (a_m, b_m) tuple entry -> template coefficient name at p = 2.
_F731_NAMES = (
    _coeff_name(2, 3, 1), _coeff_name(3, 5, 1), _coeff_name(2, 6, 1),
    _coeff_name(5, 6, 1), _coeff_name(2, 5, 1),
    _coeff_name(2, 3, 2), _coeff_name(3, 5, 2), _coeff_name(2, 6, 2),
    _coeff_name(5, 6, 2), _coeff_name(2, 5, 2),
)


def f731_cochain(tup: Sequence[int]) -> Cochain:
    template = normalized_cocycle_template("p01", 2)
    return template.instantiate(
        {name: v for name, v in zip(_F731_NAMES, tup) if v != 0})


def classification_F731() -> list[LieAlgebra]:
    """The sixteen 7-dimensional 3-step members with block pattern (3,3,1)."""
    base = g_p01(2)
    return [deformed_bracket(base, f731_cochain(tup)) for tup in F731_TUPLES]


# ---------------------------------------------------------------------------
# cocycle space counting

class CocycleSpaceDim(NamedTuple):
    linear_dim: int
    closed_form: int


def cocycle_space_dim_221(p: int) -> CocycleSpaceDim:
    """Dimension of the 221-pattern cocycle space on g_p1, twice over:
    once by exact linear algebra on the instantiated pattern (verifying
    along the way that every pattern cochain is a T-cocycle), and once by
    the closed form p(p+1)(p-2)/2."""
    if p < 2:
        raise ValueError("p must be at least 2")
    template = normalized_cocycle_template("221", p)
    g = g_p1(p)
    from .cohom import CochainIndex  # local import to avoid cycle at load

    idx = CochainIndex(g.dim)
    red = RowReducer(idx.size)
    for name in template.free:
        phi = template.instantiate({name: 1})
        if not ch_delta2(g, phi).is_zero():
            raise RuntimeError(f"pattern coefficient {name} is not a cocycle")
        red.add(idx.to_flat(phi))
    closed = p * (p + 1) * (p - 2) // 2
    return CocycleSpaceDim(red.rank, closed)
