"""Restrict the small E-series and F4 modules down the tower E8 > E7 > E6 > F4 > D4.

    python scripts/tower_branching.py [--max-dim 4000]
"""
import argparse

from lieblocks import branching
from lieblocks import highest_weight as hw
from lieblocks.cartan import build, unit


def fmt(lie, rep_sum):
    return " + ".join(f"{m}*{hw.dim(lie, w)}" if m > 1 else str(hw.dim(lie, w))
                      for w, m in sorted(rep_sum.items(), key=lambda kv: -hw.dim(lie, kv[0])))


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-dim", type=int, default=4000)
    args = ap.parse_args()
    tower = branching.builtin_tower()
    for emb in tower + [branching.chain(tower, "E8", "F4"), branching.chain(tower, "E8", "D4")]:
        print(f"== {emb.label}  (embedding index {branching.embedding_index(emb)})")
        r = build(emb.ambient).rank
        for i in range(r):
            lam = unit(r, i)
            if hw.dim(emb.ambient, lam) > args.max_dim:
                continue
            out = branching.branch(emb, lam)
            print(f"  {list(lam)} ({hw.dim(emb.ambient, lam)}, index {hw.dynkin_index(emb.ambient, lam)})"
                  f" -> {fmt(emb.sub, out)}  [index {hw.index_of_sum(emb.sub, out)}]")


if __name__ == "__main__":
    main()
