"""Claim inventory and the runner behind ``lieblocks verify-paper``.

Each claim is data: an id, a short source description, an evaluator kind with
its arguments, and the expected value. Evaluators take a context carrying the
Cartan builder and the embedding tower, so a test can swap in a faulty one.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Any, Callable

from . import branching, cartan, fusion
from . import highest_weight as hw

W8 = [0, 0, 0, 0, 0, 0, 0, 1]
Z8 = [0] * 8


@dataclass(frozen=True)
class Claim:
    id: str
    source: str
    kind: str
    args: tuple
    expected: Any


def _table_rows():
    rows = {
        "A": ([1, 2, 3, 4], 1, 0), "B": ([3, 4], 2, 0), "C": ([2, 3], 1, 0),
        "D": ([4, 5], 2, 0), "E6": ([6], 6, 5), "E7": ([7], 12, 6), "E8": ([8], 60, 7),
        "F4": ([4], 6, 3), "G2": ([2], 2, 0),
    }
    out = []
    for key, (ranks, d, node) in rows.items():
        series = key[0]
        for r in ranks:
            w = [0] * r
            w[node] = 1
            out.append(Claim(f"table-{series}{r}", f"d(G), rho(G) table, column {key}",
                             "minimal_index", (f"{series}{r}",), [d, w]))
    return out


CLAIMS: list[Claim] = [
    *_table_rows(),
    *[Claim(f"theta-norm-{t}", "normalized form, (theta, theta) = 2", "theta_norm", (str(t),), "2")
      for t in cartan.all_types(8)],
    Claim("e8-level1-alcove", "E8 at level 1: only the trivial weight", "alcove", ("E8", 1), [Z8]),
    *[Claim(f"e8-level1-blocks-g{g}-n{n}", "E8 level-1 blocks are one-dimensional",
            "blocks", ("E8", 1, g, n), 1)
      for g in range(4) for n in range(3)],
    Claim("e8-w8-dim", "E8 representation w8 (adjoint)", "dim", ("E8", W8), 248),
    Claim("e8-w8-weights", "E8 adjoint weights: 240 roots and an 8-fold zero weight",
          "adjoint_weights", ("E8",), {"nonzero": 240, "zero_mult": 8}),
    Claim("e8-w8-index", "Dynkin index of w8 of E8", "dynkin_index", ("E8", W8), 60),
    Claim("f4-branch-w8", "restriction of w8 from E8 to F4", "branch", ("E8", "F4", W8),
          [[[0, 0, 0, 0], 14], [[0, 0, 0, 1], 7], [[1, 0, 0, 0], 1]]),
    Claim("f4-branch-index", "restriction to F4 has Dynkin index 60", "branch_index",
          ("E8", "F4", W8), 60),
    Claim("f4-dimension-identity", "14 + 52 + 7 * 26 = 248", "dimension_identity",
          ("F4", [[[0, 0, 0, 0], 14], [[1, 0, 0, 0], 1], [[0, 0, 0, 1], 7]]), 248),
    *[Claim(f"link-index-{sub}-{amb}", "tower link preserves the index", "embedding_index",
            (amb, sub), 1)
      for amb, sub in [("E8", "E7"), ("E7", "E6"), ("E6", "F4"), ("F4", "D4")]],
    Claim("spin8-branch-index", "restriction of w8 to Spin8 has Dynkin index 60",
          "branch_index", ("E8", "D4", W8), 60),
]


@dataclass
class Context:
    build: Callable = field(default_factory=lambda: cartan.build)
    tower: Callable = field(default_factory=lambda: branching.builtin_tower)


def _pairs(rep_sum) -> list:
    return [[list(k), v] for k, v in sorted(rep_sum.items())]


def _minimal_index(ctx, lie):
    d, w = hw.minimal_index(lie)
    return [d, list(w)]


def _theta_norm(ctx, lie):
    cd = ctx.build(lie)
    return str(cd.inner(cd.highest_root, cd.highest_root))


def _blocks(ctx, lie, level, genus, n):
    zero = [0] * cartan.LieType.parse(lie).rank
    return fusion.blocks_dim(lie, level, genus, [zero] * n)


def _adjoint_weights(ctx, lie):
    ws = hw.weight_system(lie, ctx.build(lie).highest_root)
    zero = (0,) * len(next(iter(ws)))
    return {"nonzero": sum(1 for w in ws if w != zero), "zero_mult": ws.get(zero, 0)}


def _branch(ctx, amb, sub, w):
    emb = branching.chain(ctx.tower(), amb, sub)
    return _pairs(branching.branch(emb, w))


def _branch_index(ctx, amb, sub, w):
    emb = branching.chain(ctx.tower(), amb, sub)
    return hw.index_of_sum(sub, branching.branch(emb, w))


def _dimension_identity(ctx, lie, pairs):
    return hw.dim_of_sum(lie, {tuple(w): m for w, m in pairs})


def _embedding_index(ctx, amb, sub):
    return branching.embedding_index(branching.chain(ctx.tower(), amb, sub))


EVALUATORS: dict[str, Callable] = {
    "minimal_index": _minimal_index,
    "theta_norm": _theta_norm,
    "alcove": lambda ctx, lie, level: [list(w) for w in fusion.alcove(lie, level)],
    "blocks": _blocks,
    "dim": lambda ctx, lie, w: hw.dim(lie, w),
    "adjoint_weights": _adjoint_weights,
    "dynkin_index": lambda ctx, lie, w: hw.dynkin_index(lie, w),
    "branch": _branch,
    "branch_index": _branch_index,
    "dimension_identity": _dimension_identity,
    "embedding_index": _embedding_index,
}


@dataclass
class ClaimResult:
    id: str
    source: str
    expected: Any
    computed: Any
    passed: bool
    elapsed: float
    error: str | None = None

    def as_dict(self, timings: bool = False) -> dict:
        out = {"id": self.id, "source": self.source, "expected": self.expected,
               "computed": self.computed, "passed": self.passed}
        if self.error:
            out["error"] = self.error
        if timings:
            out["elapsed"] = round(self.elapsed, 6)
        return out


def run_claim(claim: Claim, ctx: Context) -> ClaimResult:
    start = time.perf_counter()
    try:
        computed = EVALUATORS[claim.kind](ctx, *claim.args)
        error = None
    except Exception as exc:  # a failing claim is a report entry, not a crash
        computed, error = None, f"{type(exc).__name__}: {exc}"
    return ClaimResult(claim.id, claim.source, claim.expected, computed,
                       error is None and computed == claim.expected,
                       time.perf_counter() - start, error)


def verify_paper(ctx: Context | None = None, claims=None) -> list[ClaimResult]:
    ctx = ctx or Context()
    return [run_claim(c, ctx) for c in (CLAIMS if claims is None else claims)]
