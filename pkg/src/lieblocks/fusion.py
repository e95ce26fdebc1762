"""Level-l structures: the alcove P_l, tensor products, fusion, conformal-block dimensions."""
from __future__ import annotations

from collections import Counter
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
    to_dominant,
)
from . import highest_weight as hw

# Fusion tables with more than this many (lam, mu, nu) entries are not precomputed.
TABLE_LIMIT = 10**6


def level_of(cd: CartanData, lam) -> int:
    """(lam, theta)."""
    return sum(x * c for x, c in zip(lam, cd.comarks))


def alcove(lie, level: int) -> list[Weight]:
    """Dominant weights with (lam, theta) <= level, by level then label-lex order."""
    if level < 0:
        raise LieError(f"level must be >= 0, got {level}")
    cd = build(lie)
    return list(_alcove(cd.lie, level))


@lru_cache(maxsize=None)
def _alcove(lie: LieType, level: int) -> tuple[Weight, ...]:
    cd = build(lie)
    marks = cd.comarks
    out = []

    def rec(prefix, budget):
        i = len(prefix)
        if i == cd.rank:
            out.append(tuple(prefix))
            return
        for x in range(budget // marks[i] + 1):
            rec(prefix + [x], budget - x * marks[i])

    rec([], level)
    out.sort(key=lambda lam: (level_of(cd, lam), sum(lam), tuple(-x for x in lam)))
    return tuple(out)


def check_in_alcove(lie, level: int, lam) -> Weight:
    cd = build(lie)
    lam = cd.check_weight(lam)
    if min(lam) < 0 or level_of(cd, lam) > level:
        raise LieError(f"{cd.lie}: {list(lam)} is not in the level-{level} alcove")
    return lam


def tensor_decompose(lie, lam, mu) -> hw.RepSum:
    """L(lam) (x) L(mu) by Racah-Speiser reflection of the smaller weight system."""
    cd = build(lie)
    lam, mu = cd.check_weight(lam), cd.check_weight(mu)
    if hw.dim(cd.lie, mu) > hw.dim(cd.lie, lam):
        lam, mu = mu, lam
    return _tensor(cd.lie, lam, mu)


def _tensor(lie: LieType, lam: Weight, mu: Weight) -> hw.RepSum:
    cd = build(lie)
    acc: Counter = Counter()
    for nu, m in hw.weight_system(lie, mu).items():
        shifted = tuple(a + b + 1 for a, b in zip(lam, nu))
        dom, parity = to_dominant(cd, shifted)
        if 0 in dom:
            continue
        acc[tuple(x - 1 for x in dom)] += -m if parity else m
    return _positive(acc)


def _positive(acc: Counter) -> dict:
    out = {}
    for k, v in sorted(acc.items()):
        if v < 0:
            raise InvariantError(f"negative multiplicity {v} at {list(k)}")
        if v:
            out[k] = v
    return out


def _affine_fold(cd: CartanData, w: Weight, height: int) -> tuple[Weight, int] | None:
    """Bring a rho-shifted weight into the open alcove of the given level by the
    affine Weyl group. Returns (weight, parity), or None on a wall."""
    theta = cd.highest_root
    marks = cd.comarks
    parity = 0
    while True:
        for i, x in enumerate(w):
            if x < 0:
                w = cd.reflect(w, i)
                parity ^= 1
                break
        else:
            t = sum(x * c for x, c in zip(w, marks))
            if t > height:
                w = tuple(x - (t - height) * a for x, a in zip(w, theta))
                parity ^= 1
                continue
            if 0 in w or t == height:
                return None
            return w, parity


def fusion_product(lie, level: int, lam, mu) -> hw.RepSum:
    """Kac-Walton: the map nu -> N_{lam mu}^nu."""
    cd = build(lie)
    lam = check_in_alcove(cd.lie, level, lam)
    mu = check_in_alcove(cd.lie, level, mu)
    return dict(_fusion_product(cd.lie, level, lam, mu))


def _fusion_product(lie: LieType, level: int, lam: Weight, mu: Weight) -> tuple:
    table = _fusion_table(lie, level)
    if table is not None:
        return table[lam, mu]
    return _kac_walton(lie, level, lam, mu)


@lru_cache(maxsize=None)
def _kac_walton(lie: LieType, level: int, lam: Weight, mu: Weight) -> tuple:
    cd = build(lie)
    if (hw.dim(lie, mu), mu) > (hw.dim(lie, lam), lam):
        lam, mu = mu, lam
    height = level + cd.dual_coxeter
    acc: Counter = Counter()
    for nu, m in hw.weight_system(lie, mu).items():
        folded = _affine_fold(cd, tuple(a + b + 1 for a, b in zip(lam, nu)), height)
        if folded is None:
            continue
        w, parity = folded
        acc[tuple(x - 1 for x in w)] += -m if parity else m
    return tuple(_positive(acc).items())


@lru_cache(maxsize=None)
def _fusion_table(lie: LieType, level: int) -> dict | None:
    # Idempotent: a concurrent first use only computes the same table twice.
    points = _alcove(lie, level)
    if len(points) ** 3 > TABLE_LIMIT:
        return None
    return {(lam, mu): _kac_walton(lie, level, lam, mu) for lam, mu in product(points, repeat=2)}


def fusion_coeff(lie, level: int, lam, mu, nu) -> int:
    """N_{lam mu nu} = dim B_0(lam, mu, nu); symmetric in all three labels."""
    cd = build(lie)
    nu = check_in_alcove(cd.lie, level, nu)
    return fusion_product(cd.lie, level, lam, mu).get(dual_weight(cd, nu), 0)


STRATEGIES = ("genus_first", "fuse_first", "balanced")


def blocks_dim(lie, level: int, genus: int = 0, labels=(), strategy: str = "genus_first") -> int:
    """Dimension of the conformal-block space on a genus-g curve with labelled points.

    Computed from the factorization rules alone: a non-separating node
    reduces the genus by one and adds a pair (mu, mu*) summed over the
    alcove; a separating node at genus 0 splits off a three-point block.
    ``strategy`` selects the order in which those reductions are applied;
    every order gives the same number.
    """
    cd = build(lie)
    if genus < 0:
        raise LieError(f"genus must be >= 0, got {genus}")
    labels = tuple(check_in_alcove(cd.lie, level, lam) for lam in labels)
    if strategy == "genus_first":
        return _genus_first(cd.lie, level, genus, labels)
    if strategy == "fuse_first":
        v = _fold_labels(cd.lie, level, labels)
        for _ in range(genus):
            v = _add_handle(cd.lie, level, v)
        return v.get(cd.zero, 0)
    if strategy == "balanced":
        return _balanced(cd.lie, level, genus, labels)
    raise LieError(f"unknown strategy {strategy!r}; choose from {STRATEGIES}")


@lru_cache(maxsize=None)
def _genus_first(lie: LieType, level: int, genus: int, labels: tuple) -> int:
    cd = build(lie)
    if genus:
        return sum(_genus_first(lie, level, genus - 1, labels + (mu, dual_weight(cd, mu)))
                   for mu in _alcove(lie, level))
    n = len(labels)
    if n == 0:
        return 1
    if n == 1:
        return int(labels[0] == cd.zero)
    if n == 2:
        return int(labels[1] == dual_weight(cd, labels[0]))
    first, second, rest = labels[0], labels[1], labels[2:]
    return sum(m * _genus_first(lie, level, 0, (nu,) + rest)
               for nu, m in _fusion_product(lie, level, first, second))


def _times(lie, level, v: dict, lam: Weight) -> dict:
    return _multiply(lie, level, v, {lam: 1})


def _multiply(lie, level, v: dict, w: dict) -> dict:
    """Product in the fusion ring of two nonnegative combinations of alcove weights."""
    acc: Counter = Counter()
    for a, c in v.items():
        for b, d in w.items():
            for nu, m in _fusion_product(lie, level, a, b):
                acc[nu] += c * d * m
    return {k: x for k, x in sorted(acc.items()) if x}


def _fold_labels(lie, level, labels) -> dict:
    v = {build(lie).zero: 1}
    for lam in labels:
        v = _times(lie, level, v, lam)
    return v


def _handle(lie, level) -> dict:
    """sum over mu of mu * mu^*: the fusion-ring element of a torus with one hole."""
    cd = build(lie)
    acc: Counter = Counter()
    for mu in _alcove(lie, level):
        acc.update(dict(_fusion_product(lie, level, mu, dual_weight(cd, mu))))
    return dict(sorted(acc.items()))


def _add_handle(lie, level, v: dict) -> dict:
    cd = build(lie)
    acc: Counter = Counter()
    for mu in _alcove(lie, level):
        acc.update(_times(lie, level, _times(lie, level, v, mu), dual_weight(cd, mu)))
    return {k: x for k, x in acc.items() if x}


def _balanced(lie, level, genus, labels) -> int:
    # Glue points and handles pairwise along a balanced tree.
    factors = [{lam: 1} for lam in labels] + [_handle(lie, level)] * genus
    if not factors:
        return 1
    while len(factors) > 1:
        paired = [_multiply(lie, level, a, b) for a, b in zip(factors[::2], factors[1::2])]
        if len(factors) % 2:
            paired.append(factors[-1])
        factors = paired
    return factors[0].get(build(lie).zero, 0)
