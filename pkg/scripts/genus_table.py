"""Tabulate conformal-block dimensions without marked points, by genus and level.

    python scripts/genus_table.py A1 A2 G2 E8 --levels 1 2 3 --max-genus 4
"""
import argparse

from lieblocks import fusion


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("types", nargs="+")
    ap.add_argument("--levels", type=int, nargs="+", default=[1, 2, 3])
    ap.add_argument("--max-genus", type=int, default=4)
    args = ap.parse_args()
    genera = range(args.max_genus + 1)
    print(f"{'type':<5} {'level':>5} {'|P_l|':>6}  " + " ".join(f"{'g=' + str(g):>10}" for g in genera))
    for t in args.types:
        for level in args.levels:
            vals = [fusion.blocks_dim(t, level, g) for g in genera]
            print(f"{t:<5} {level:>5} {len(fusion.alcove(t, level)):>6}  " + " ".join(f"{v:>10}" for v in vals))


if __name__ == "__main__":
    main()
