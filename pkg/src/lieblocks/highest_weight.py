"""Irreducible modules L(lam): dimension, weight multiplicities, Dynkin index."""
from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from itertools import product

from .cartan import (
    CartanData,
    InvariantError,
    LieError,
    LieType,
    Weight,
    build,
    dual_weight,
    integer_form,
    is_dominant,
    to_dominant,
    weyl_orbit,
)

# RepSum: highest weight -> multiplicity (a completely reducible module)
RepSum = dict


def _dominant_input(lie, labels) -> tuple[CartanData, Weight]:
    cd = build(lie)
    lam = cd.check_weight(labels)
    if not is_dominant(lam):
        raise LieError(f"{cd.lie}: {list(lam)} is not dominant")
    return cd, lam


def _pair_with_root(cd: CartanData, lam: Weight, coords) -> Fraction:
    # (lam, alpha) = sum_i c_i lam_i (alpha_i, alpha_i)/2
    return sum((c * x * d for c, x, d in zip(coords, lam, cd.symmetrizers) if c and x),
               Fraction(0))


def dim(lie, labels) -> int:
    """Weyl dimension formula."""
    cd, lam = _dominant_input(lie, labels)
    return _dim(cd.lie, lam)


@lru_cache(maxsize=None)
def _dim(lie: LieType, lam: Weight) -> int:
    cd = build(lie)
    num = Fraction(1)
    shifted = tuple(x + 1 for x in lam)
    for coords in cd.positive_roots:
        num *= _pair_with_root(cd, shifted, coords) / _pair_with_root(cd, cd.weyl_vector, coords)
    if num.denominator != 1:
        raise InvariantError(f"{lie}: Weyl dimension of {list(lam)} is {num}")
    return int(num)


def dominant_weights(lie, labels) -> dict[Weight, int]:
    """Dominant weights of L(lam), mapped to the height of lam - mu."""
    cd, lam = _dominant_input(lie, labels)
    return dict(_dominant_weights(cd.lie, lam))


@lru_cache(maxsize=None)
def _dominant_weights(lie: LieType, lam: Weight) -> tuple[tuple[Weight, int], ...]:
    # Every dominant mu < lam is reachable from lam by subtracting positive
    # roots while staying dominant, so a downward search is complete.
    cd = build(lie)
    depth = {lam: 0}
    frontier = [lam]
    steps = list(zip(cd.positive_root_labels, (sum(c) for c in cd.positive_roots)))
    while frontier:
        nxt = []
        for mu in frontier:
            for alpha, h in steps:
                nu = tuple(m - a for m, a in zip(mu, alpha))
                if nu not in depth and is_dominant(nu):
                    depth[nu] = depth[mu] + h
                    nxt.append(nu)
        frontier = nxt
    return tuple(sorted(depth.items(), key=lambda kv: (kv[1], kv[0])))


def dominant_multiplicities(lie, labels) -> dict[Weight, int]:
    cd, lam = _dominant_input(lie, labels)
    return dict(_freudenthal(cd.lie, lam))


@lru_cache(maxsize=None)
def _freudenthal(lie: LieType, lam: Weight) -> tuple[tuple[Weight, int], ...]:
    cd = build(lie)
    r = cd.rank
    _, g = integer_form(cd)
    # (mu, alpha) scaled by N, as a linear functional on labels
    root_funcs = []
    for alpha in cd.positive_root_labels:
        root_funcs.append((alpha, tuple(sum(g[i][j] * alpha[j] for j in range(r)) for i in range(r))))

    def norm(mu):
        return sum(mu[i] * g[i][j] * mu[j] for i in range(r) for j in range(r) if mu[i] and mu[j])

    top = norm(tuple(x + 1 for x in lam))
    order = _dominant_weights(lie, lam)
    mult: dict[Weight, int] = {}
    dom_cache: dict[Weight, Weight] = {}

    def m_of(nu):
        d = dom_cache.get(nu)
        if d is None:
            d = to_dominant(cd, nu)[0]
            dom_cache[nu] = d
        return mult.get(d, 0)

    for mu, depth in order:
        if depth == 0:
            mult[mu] = 1
            continue
        total = 0
        for alpha, f in root_funcs:
            nu = mu
            while True:
                nu = tuple(a + b for a, b in zip(nu, alpha))
                m = m_of(nu)
                if not m:
                    break
                total += m * sum(x * y for x, y in zip(nu, f) if x)
        denom = top - norm(tuple(x + 1 for x in mu))
        q, rem = divmod(2 * total, denom)
        if rem or denom <= 0:
            raise InvariantError(f"{lie}: Freudenthal step at {list(mu)} gave {2 * total}/{denom}")
        mult[mu] = q
    return tuple((mu, m) for mu, m in mult.items() if m)


def weight_system(lie, labels) -> dict[Weight, int]:
    """All weights of L(lam) with their multiplicities."""
    cd, lam = _dominant_input(lie, labels)
    return dict(_weight_system(cd.lie, lam))


@lru_cache(maxsize=256)
def _weight_system(lie: LieType, lam: Weight) -> tuple[tuple[Weight, int], ...]:
    cd = build(lie)
    out = []
    for mu, m in _freudenthal(lie, lam):
        out += [(nu, m) for nu in weyl_orbit(cd, mu)]
    out.sort()
    return tuple(out)


def dynkin_index(lie, labels) -> int:
    cd, lam = _dominant_input(lie, labels)
    val = _dim(cd.lie, lam) * cd.inner(lam, tuple(x + 2 for x in lam)) / cd.algebra_dim
    if val.denominator != 1:
        raise InvariantError(f"{cd.lie}: Dynkin index of {list(lam)} is {val}, not an integer")
    return int(val)


def index_of_sum(lie, rep_sum: RepSum) -> int:
    return sum(m * dynkin_index(lie, lam) for lam, m in rep_sum.items())


def dim_of_sum(lie, rep_sum: RepSum) -> int:
    return sum(m * dim(lie, lam) for lam, m in rep_sum.items())


def _tie_break_key(lie: LieType, lam: Weight):
    # Ties in (index, dim) only occur between weights exchanged by a diagram
    # automorphism (A_r, D4, E6). Convention: lowest node first, except on the
    # E series where the end of the long arm (highest node) is preferred, so
    # the choice matches w6 < w7 < w8 along E6 < E7 < E8.
    return lam if lie.series == "E" else tuple(-x for x in lam)


def candidate_weights(lie, max_label_sum: int = 2) -> list[Weight]:
    r = LieType.parse(lie).rank
    return [lam for lam in product(range(max_label_sum + 1), repeat=r)
            if 0 < sum(lam) <= max_label_sum]


def minimal_index(lie) -> tuple[int, Weight]:
    """Smallest Dynkin index of a nontrivial module, with a representative.

    The search runs over dominant weights with label sum at most 2.
    """
    lie = LieType.parse(lie)
    best = min(candidate_weights(lie),
               key=lambda lam: (dynkin_index(lie, lam), _dim(lie, lam), _tie_break_key(lie, lam)))
    return dynkin_index(lie, best), best


def adjoint(lie) -> Weight:
    return build(lie).highest_root


def dual(lie, labels) -> Weight:
    return dual_weight(build(lie), labels)


def character_product(a: dict, b: dict) -> Counter:
    out: Counter = Counter()
    for mu, m in a.items():
        for nu, n in b.items():
            out[tuple(x + y for x, y in zip(mu, nu))] += m * n
    return out


def peel(lie, character: dict) -> RepSum:
    """Decompose a Weyl-invariant character into irreducibles.

    Repeatedly removes the weight system of the highest remaining weight.
    Raises InvariantError if a multiplicity would go negative.
    """
    cd = build(lie)
    _, g = integer_form(cd)
    rho_func = [sum(row) for row in g]
    rest = Counter({mu: m for mu, m in character.items() if m})
    out: RepSum = {}
    while rest:
        top = max(rest, key=lambda mu: (sum(x * y for x, y in zip(mu, rho_func)), mu))
        m = rest[top]
        if m < 0 or not is_dominant(top):
            raise InvariantError(f"{cd.lie}: residual character has {m} at {list(top)}")
        out[top] = m
        for nu, k in _weight_system(cd.lie, top):
            left = rest[nu] - m * k
            if left < 0:
                raise InvariantError(f"{cd.lie}: negative residual {left} at {list(nu)}")
            if left:
                rest[nu] = left
            else:
                del rest[nu]
    return dict(sorted(out.items()))
