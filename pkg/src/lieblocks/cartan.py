"""Cartan data for the simple Lie algebras.

Weights are integer tuples of Dynkin labels (coefficients on the fundamental
weights). Nodes follow Bourbaki numbering, stored 0-based: node ``i`` here is
the Bourbaki node ``i + 1``. This is the single place the convention is fixed.

The Cartan matrix is stored row-wise: row ``i`` holds the Dynkin labels of the
simple root ``alpha_i``, i.e. ``A[i][j] = 2 (alpha_i, alpha_j) / (alpha_j, alpha_j)``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm

Weight = tuple[int, ...]


class LieError(ValueError):
    """Bad input: unknown type, rank mismatch, weight outside a precondition."""


class InvariantError(RuntimeError):
    """An internal consistency check failed."""


_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3}
_FIXED_RANKS = {"E": (6, 7, 8), "F": (4,), "G": (2,)}
_TYPE_RE = re.compile(r"^\s*([A-Ga-g])\s*(\d+)\s*$")


@dataclass(frozen=True, order=True)
class LieType:
    series: str
    rank: int

    def __post_init__(self):
        if self.series in _MIN_RANK:
            ok = self.rank >= _MIN_RANK[self.series]
        elif self.series in _FIXED_RANKS:
            ok = self.rank in _FIXED_RANKS[self.series]
        else:
            raise LieError(f"unknown series {self.series!r}")
        if not ok:
            raise LieError(f"{self.series}{self.rank}: rank not allowed for series {self.series}")

    @classmethod
    def parse(cls, text: str | LieType) -> LieType:
        if isinstance(text, LieType):
            return text
        m = _TYPE_RE.match(str(text))
        if not m:
            raise LieError(f"cannot parse Lie type {text!r}; expected e.g. 'E8'")
        return cls(m.group(1).upper(), int(m.group(2)))

    def __str__(self):
        return f"{self.series}{self.rank}"


def _diagram(lie: LieType) -> tuple[list[Fraction], list[tuple[int, int]]]:
    """Squared lengths of the simple roots (long roots have length 2) and edges."""
    r, s = lie.rank, lie.series
    chain = [(i, i + 1) for i in range(r - 1)]
    one, two = Fraction(1), Fraction(2)
    if s == "A":
        return [two] * r, chain
    if s == "B":
        return [two] * (r - 1) + [one], chain
    if s == "C":
        return [one] * (r - 1) + [two], chain
    if s == "D":
        return [two] * r, [(i, i + 1) for i in range(r - 2)] + [(r - 3, r - 1)]
    if s == "E":
        edges = [(0, 2), (1, 3)] + [(i, i + 1) for i in range(2, r - 1)]
        return [two] * r, edges
    if s == "F":
        return [two, two, one, one], chain
    # G2: node 0 short
    return [Fraction(2, 3), two], chain


def _gram(lie: LieType) -> list[list[Fraction]]:
    lengths, edges = _diagram(lie)
    r = lie.rank
    g = [[Fraction(0)] * r for _ in range(r)]
    for i in range(r):
        g[i][i] = lengths[i]
    for i, j in edges:
        g[i][j] = g[j][i] = -max(lengths[i], lengths[j]) / 2
    return g


def cartan_matrix(lie: LieType) -> tuple[tuple[int, ...], ...]:
    g = _gram(lie)
    r = lie.rank
    rows = []
    for i in range(r):
        row = []
        for j in range(r):
            v = 2 * g[i][j] / g[j][j]
            assert v.denominator == 1
            row.append(int(v))
        rows.append(tuple(row))
    return tuple(rows)


def symmetrizers(a) -> list[Fraction]:
    """Positive d with A[i][j] d[j] == A[j][i] d[i], largest entry 1."""
    r = len(a)
    d: list[Fraction | None] = [None] * r
    d[0] = Fraction(1)
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(r):
            if j != i and a[i][j] != 0 and d[j] is None:
                d[j] = d[i] * a[j][i] / a[i][j]
                stack.append(j)
    if any(x is None for x in d):
        raise InvariantError("Dynkin diagram is not connected")
    top = max(d)
    d = [x / top for x in d]
    for i in range(r):
        for j in range(r):
            if a[i][j] * d[j] != a[j][i] * d[i]:
                raise InvariantError("Cartan matrix is not symmetrizable")
    return d


def rational_inverse(m) -> list[list[Fraction]]:
    n = len(m)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(m)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            raise InvariantError("singular matrix")
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


@dataclass(frozen=True)
class CartanData:
    lie: LieType
    cartan_matrix: tuple[tuple[int, ...], ...]
    symmetrizers: tuple[Fraction, ...]     # (alpha_i, alpha_i) / 2 under the normalized form
    form_matrix: tuple[tuple[Fraction, ...], ...]   # (w_i, w_j)
    positive_roots: tuple[tuple[int, ...], ...]     # simple-root coordinates
    positive_root_labels: tuple[Weight, ...]
    highest_root: Weight
    dual_coxeter: int
    algebra_dim: int

    @property
    def rank(self) -> int:
        return self.lie.rank

    @property
    def weyl_vector(self) -> Weight:
        return (1,) * self.rank

    @property
    def zero(self) -> Weight:
        return (0,) * self.rank

    @property
    def comarks(self) -> tuple[int, ...]:
        """(w_i, theta): the level contributed by one unit of label i."""
        return tuple(int(self.inner(unit(self.rank, i), self.highest_root))
                     for i in range(self.rank))

    def check_weight(self, w) -> Weight:
        w = tuple(w)
        if len(w) != self.rank or not all(isinstance(x, int) for x in w):
            raise LieError(f"{self.lie}: expected {self.rank} integer labels, got {list(w)}")
        return w

    def inner(self, lam, mu) -> Fraction:
        lam, mu = self.check_weight(lam), self.check_weight(mu)
        f = self.form_matrix
        return sum((lam[i] * f[i][j] * mu[j] for i in range(self.rank) for j in range(self.rank)
                    if lam[i] and mu[j]), Fraction(0))

    def reflect(self, mu: Weight, i: int) -> Weight:
        c = mu[i]
        if not c:
            return mu
        row = self.cartan_matrix[i]
        return tuple(m - c * a for m, a in zip(mu, row))

    def labels_of_root(self, coords) -> Weight:
        a = self.cartan_matrix
        r = self.rank
        return tuple(sum(coords[i] * a[i][j] for i in range(r)) for j in range(r))


def unit(r: int, i: int, scale: int = 1) -> Weight:
    return tuple(scale if j == i else 0 for j in range(r))


def _root_closure(a) -> list[tuple[int, ...]]:
    r = len(a)
    simple = [unit(r, i) for i in range(r)]
    seen = set(simple)
    queue = list(simple)
    while queue:
        beta = queue.pop()
        labels = [sum(beta[k] * a[k][j] for k in range(r)) for j in range(r)]
        for i in range(r):
            if labels[i]:
                img = tuple(b - labels[i] * (k == i) for k, b in enumerate(beta))
                if img not in seen:
                    seen.add(img)
                    queue.append(img)
    return sorted(seen)


@lru_cache(maxsize=None)
def _build(lie: LieType) -> CartanData:
    a = cartan_matrix(lie)
    r = lie.rank
    d = symmetrizers(a)
    roots = _root_closure(a)
    pos = [c for c in roots if all(x >= 0 for x in c)]
    if len(pos) * 2 != len(roots):
        raise InvariantError(f"{lie}: root closure is not symmetric")
    pos.sort(key=lambda c: (sum(c), c))
    theta_coords = pos[-1]
    # (theta, theta) with the unnormalized form; rescale so that it equals 2
    theta_sq = sum(theta_coords[i] * theta_coords[j] * a[i][j] * d[j]
                   for i in range(r) for j in range(r))
    scale = Fraction(2) / theta_sq
    d = [x * scale for x in d]
    ainv = rational_inverse(a)
    form = tuple(tuple(ainv[i][j] * d[j] for j in range(r)) for i in range(r))
    partial = CartanData(lie, a, tuple(d), form, tuple(pos), (), (), 0, 0)
    labels = tuple(partial.labels_of_root(c) for c in pos)
    theta = labels[-1]
    h_dual = 1 + partial.inner(theta, (1,) * r)
    if h_dual.denominator != 1:
        raise InvariantError(f"{lie}: non-integral dual Coxeter number {h_dual}")
    return CartanData(lie, a, tuple(d), form, tuple(pos), labels, theta,
                      int(h_dual), r + 2 * len(pos))


def build(lie) -> CartanData:
    return _build(LieType.parse(lie))


def all_types(max_rank: int = 8) -> list[LieType]:
    out = []
    for s, lo in _MIN_RANK.items():
        out += [LieType(s, r) for r in range(lo, max_rank + 1)]
    for s, ranks in _FIXED_RANKS.items():
        out += [LieType(s, r) for r in ranks if r <= max_rank]
    return out


def integer_form(cd: CartanData) -> tuple[int, tuple[tuple[int, ...], ...]]:
    """(N, N*F) with N the least common denominator of the form matrix."""
    n = 1
    for row in cd.form_matrix:
        for x in row:
            n = lcm(n, x.denominator)
    return n, tuple(tuple(int(x * n) for x in row) for row in cd.form_matrix)


def to_dominant(cd: CartanData, mu) -> tuple[Weight, int]:
    """Dominant Weyl conjugate of mu and the parity of the reflections used."""
    mu = tuple(mu)
    parity = 0
    while True:
        for i, x in enumerate(mu):
            if x < 0:
                mu = cd.reflect(mu, i)
                parity ^= 1
                break
        else:
            return mu, parity


def is_dominant(mu) -> bool:
    return all(x >= 0 for x in mu)


def weyl_orbit(cd: CartanData, lam) -> set[Weight]:
    lam = cd.check_weight(lam)
    seen = {lam}
    queue = [lam]
    while queue:
        mu = queue.pop()
        for i in range(cd.rank):
            if mu[i]:
                nu = cd.reflect(mu, i)
                if nu not in seen:
                    seen.add(nu)
                    queue.append(nu)
    return seen


def dual_weight(cd: CartanData, lam) -> Weight:
    """-w0(lam): the highest weight of the dual module."""
    lam = cd.check_weight(lam)
    if not is_dominant(lam):
        raise LieError(f"{cd.lie}: dual_weight needs a dominant weight, got {list(lam)}")
    return to_dominant(cd, tuple(-x for x in lam))[0]


def coroot_labels(cd: CartanData, coords) -> tuple[Fraction, ...]:
    """Coordinates of the coroot of the root with simple-root coordinates ``coords``
    in the basis of simple coroots. Pairing a weight with these gives its label."""
    r = cd.rank
    norm = sum(coords[i] * coords[j] * cd.cartan_matrix[i][j] * cd.symmetrizers[j]
               for i in range(r) for j in range(r))
    return tuple(coords[i] * cd.symmetrizers[i] * 2 / norm for i in range(r))
