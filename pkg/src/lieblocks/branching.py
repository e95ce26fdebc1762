"""Restriction along subalgebra embeddings given by integer projection matrices.

A projection matrix has one row per node of the subalgebra; row ``j`` gives the
coroot of the subalgebra's ``j``-th simple root in the ambient simple-coroot
basis, so ``project(emb, lam)[j]`` is the ``j``-th Dynkin label of the
restricted weight.
"""
from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path

from .cartan import (
    InvariantError,
    LieError,
    LieType,
    Weight,
    build,
    coroot_labels,
    unit,
)
from . import highest_weight as hw


class EmbeddingError(LieError):
    """A projection matrix fails the validation invariants."""


@dataclass(frozen=True)
class Embedding:
    ambient: LieType
    sub: LieType
    projection: tuple[tuple[int, ...], ...]
    name: str = ""

    def __post_init__(self):
        rows = self.projection
        if len(rows) != self.sub.rank or any(len(r) != self.ambient.rank for r in rows):
            raise EmbeddingError(
                f"{self.label}: projection must be {self.sub.rank}x{self.ambient.rank}")
        if not all(isinstance(x, int) for r in rows for x in r):
            raise EmbeddingError(f"{self.label}: projection entries must be integers")

    @property
    def label(self) -> str:
        return self.name or f"{self.sub} < {self.ambient}"


def make(ambient, sub, projection, name: str = "") -> Embedding:
    return Embedding(LieType.parse(ambient), LieType.parse(sub),
                     tuple(tuple(r) for r in projection), name)


def project(emb: Embedding, w) -> Weight:
    w = build(emb.ambient).check_weight(w)
    return tuple(sum(a * x for a, x in zip(row, w)) for row in emb.projection)


def compose(outer: Embedding, inner: Embedding) -> Embedding:
    """The embedding inner.sub < inner.ambient = outer.sub < outer.ambient."""
    if inner.ambient != outer.sub:
        raise LieError(f"cannot compose {inner.label} with {outer.label}")
    p, q = inner.projection, outer.projection
    rows = tuple(tuple(sum(p[i][k] * q[k][j] for k in range(len(q)))
                       for j in range(outer.ambient.rank)) for i in range(len(p)))
    return Embedding(outer.ambient, inner.sub, rows, f"{inner.sub} < {outer.ambient}")


def identity(lie) -> Embedding:
    lie = LieType.parse(lie)
    return Embedding(lie, lie, tuple(unit(lie.rank, i) for i in range(lie.rank)), f"{lie} = {lie}")


def projected_character(emb: Embedding, lam) -> Counter:
    out: Counter = Counter()
    for mu, m in hw.weight_system(emb.ambient, lam).items():
        out[project(emb, mu)] += m
    return out


def branch(emb: Embedding, lam) -> hw.RepSum:
    """Decompose L(lam) restricted to the subalgebra."""
    cd = build(emb.ambient)
    lam = cd.check_weight(lam)
    try:
        result = hw.peel(emb.sub, projected_character(emb, lam))
    except InvariantError as exc:
        raise EmbeddingError(f"{emb.label}: restriction of {list(lam)} does not peel: {exc}") from exc
    if hw.dim_of_sum(emb.sub, result) != hw.dim(emb.ambient, lam):
        raise EmbeddingError(f"{emb.label}: dimension not conserved for {list(lam)}")
    return result


def probe_weights(lie) -> list[Weight]:
    """The two smallest fundamental weights (or w1 and 2 w1 in rank one)."""
    lie = LieType.parse(lie)
    funds = sorted((unit(lie.rank, i) for i in range(lie.rank)),
                   key=lambda w: (hw.dim(lie, w), tuple(-x for x in w)))
    if lie.rank == 1:
        return [funds[0], unit(1, 0, 2)]
    return funds[:2]


def embedding_index(emb: Embedding) -> int:
    """Ratio of Dynkin indices of restricted and ambient modules; must be a
    positive integer independent of the test weight."""
    ratios = []
    for lam in probe_weights(emb.ambient):
        num = hw.index_of_sum(emb.sub, branch(emb, lam))
        den = hw.dynkin_index(emb.ambient, lam)
        if num % den:
            raise EmbeddingError(f"{emb.label}: index ratio {num}/{den} is not integral")
        ratios.append(num // den)
    if len(set(ratios)) != 1 or ratios[0] <= 0:
        raise EmbeddingError(f"{emb.label}: index ratios {ratios} are not a constant positive integer")
    return ratios[0]


def validate(emb: Embedding) -> Embedding:
    """Check Weyl invariance, clean peeling and a constant index on the test weights."""
    sub = build(emb.sub)
    for lam in probe_weights(emb.ambient):
        char = projected_character(emb, lam)
        for nu, m in char.items():
            for i in range(sub.rank):
                if char.get(sub.reflect(nu, i), 0) != m:
                    raise EmbeddingError(f"{emb.label}: projected weights of {list(lam)} "
                                         f"are not Weyl invariant at {list(nu)}")
    embedding_index(emb)
    return emb


def levi(ambient, sub, nodes) -> Embedding:
    """Subdiagram embedding: keep the labels on the given ambient nodes."""
    amb = LieType.parse(ambient)
    sub = LieType.parse(sub)
    rows = tuple(unit(amb.rank, n) for n in nodes)
    return Embedding(amb, sub, rows, f"{sub} < {amb}")


def folding(ambient, sub, orbits) -> Embedding:
    """Fixed points of a diagram automorphism: sum the labels over each node orbit."""
    amb = LieType.parse(ambient)
    sub = LieType.parse(sub)
    rows = tuple(tuple(int(i in orb) for i in range(amb.rank)) for orb in orbits)
    return Embedding(amb, sub, rows, f"{sub} < {amb}")


def root_subsystem(ambient, sub, roots) -> Embedding:
    """Embedding whose simple roots are the given ambient roots (simple-root coordinates)."""
    amb = LieType.parse(ambient)
    sub = LieType.parse(sub)
    cd = build(amb)
    rows = []
    for coords in roots:
        row = coroot_labels(cd, coords)
        if any(x.denominator != 1 for x in row):
            raise EmbeddingError(f"{sub} < {amb}: coroot of {coords} is not integral")
        rows.append(tuple(int(x) for x in row))
    return Embedding(amb, sub, tuple(rows), f"{sub} < {amb}")


def _long_root_d4() -> list[tuple[int, ...]]:
    """Simple roots of the long-root D4 inside F4, found by search: a centre
    joined to three mutually orthogonal legs."""
    cd = build("F4")
    long_roots = [c for c, lab in zip(cd.positive_roots, cd.positive_root_labels)
                  if cd.inner(lab, lab) == 2]
    labels = dict(zip(cd.positive_roots, cd.positive_root_labels))

    def ip(a, b):
        return cd.inner(labels[a], labels[b])

    for centre in long_roots:
        legs = [c for c in long_roots if ip(c, centre) == -1]
        for i, a in enumerate(legs):
            for j, b in enumerate(legs[i + 1:], i + 1):
                if ip(a, b):
                    continue
                for c in legs[j + 1:]:
                    if not ip(a, c) and not ip(b, c):
                        # Bourbaki D4: node 2 is the centre
                        return [a, centre, b, c]
    raise InvariantError("no D4 inside the long roots of F4")


@lru_cache(maxsize=None)
def _tower() -> tuple[Embedding, ...]:
    links = (
        levi("E8", "E7", range(7)),
        levi("E7", "E6", range(6)),
        # E6 diagram automorphism swaps nodes 1<->6 and 3<->5 (Bourbaki)
        folding("E6", "F4", [(1,), (3,), (2, 4), (0, 5)]),
        root_subsystem("F4", "D4", _long_root_d4()),
    )
    return tuple(validate(e) for e in links)


def builtin_tower() -> list[Embedding]:
    """E7 < E8, E6 < E7, F4 < E6, D4 < F4, each validated."""
    return list(_tower())


def chain(embeddings, ambient, sub) -> Embedding:
    """Compose links from ``embeddings`` to get sub < ambient."""
    ambient, sub = LieType.parse(ambient), LieType.parse(sub)
    if ambient == sub:
        return identity(ambient)
    by_ambient = {e.ambient: e for e in embeddings}
    current = by_ambient.get(ambient)
    if current is None:
        raise LieError(f"no embedding with ambient {ambient}")
    while current.sub != sub:
        nxt = by_ambient.get(current.sub)
        if nxt is None:
            raise LieError(f"no chain of embeddings from {ambient} down to {sub}")
        current = compose(current, nxt)
    return current


def load_embedding(path) -> Embedding:
    """Read an embedding from JSON or plain text, then validate it.

    JSON: {"ambient": "E6", "sub": "F4", "projection": [[...], ...]}.
    Text: first line "E6 F4", then one whitespace-separated row per line;
    blank lines and lines starting with '#' are skipped.
    """
    text = Path(path).read_text()
    try:
        data = json.loads(text)
    except json.JSONDecodeError:
        lines = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
        if not lines or len(lines[0]) != 2:
            raise EmbeddingError(f"{path}: expected a header line 'AMBIENT SUB'")
        try:
            rows = [[int(x) for x in ln] for ln in lines[1:]]
        except ValueError as exc:
            raise EmbeddingError(f"{path}: {exc}") from exc
        data = {"ambient": lines[0][0], "sub": lines[0][1], "projection": rows}
    if not isinstance(data, dict) or not {"ambient", "sub", "projection"} <= data.keys():
        raise EmbeddingError(f"{path}: needs keys ambient, sub, projection")
    return validate(make(data["ambient"], data["sub"], data["projection"]))
