"""Print minimal Dynkin indices, adjoint indices and dual Coxeter numbers.

    python scripts/index_table.py [--max-rank 8]
"""
import argparse

from lieblocks import highest_weight as hw
from lieblocks.cartan import all_types, build


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-rank", type=int, default=8)
    args = ap.parse_args()
    print(f"{'type':<5} {'dim g':>6} {'h^v':>4} {'d(G)':>5}  {'rho(G)':<26} {'dim rho':>8} {'adj idx':>8}")
    for lie in all_types(args.max_rank):
        cd = build(lie)
        d, w = hw.minimal_index(lie)
        print(f"{str(lie):<5} {cd.algebra_dim:>6} {cd.dual_coxeter:>4} {d:>5}  {str(list(w)):<26} "
              f"{hw.dim(lie, w):>8} {hw.dynkin_index(lie, cd.highest_root):>8}")


if __name__ == "__main__":
    main()
