"""Command-line front end.

Exit codes: 0 success, 1 a verify-paper claim failed, 2 bad arguments or a
violated precondition, 3 an internal invariant failed.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import branching, claims, fusion
from . import highest_weight as hw
from .cartan import InvariantError, LieError, LieType


def parse_weight(text: str) -> tuple[int, ...]:
    try:
        data = json.loads(text)
    except json.JSONDecodeError:
        raise LieError(f"cannot parse weight {text!r}; expected e.g. [0,1,0]") from None
    if not isinstance(data, list) or not all(type(x) is int for x in data):
        raise LieError(f"weight must be a list of integers, got {text!r}")
    return tuple(data)


def _pairs(rep_sum) -> list:
    return [{"weight": list(w), "mult": m} for w, m in sorted(rep_sum.items())]


def _fmt_sum(rep_sum) -> str:
    return "\n".join(f"{m} x {list(w)}" for w, m in sorted(rep_sum.items())) or "0"


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True, separators=(",", ":")))
    else:
        print(text)


def cmd_dim(args):
    lie, w = LieType.parse(args.type), parse_weight(args.weight)
    d = hw.dim(lie, w)
    _emit(args, {"type": str(lie), "weight": list(w), "dim": d}, str(d))


def cmd_index(args):
    lie, w = LieType.parse(args.type), parse_weight(args.weight)
    d = hw.dynkin_index(lie, w)
    _emit(args, {"type": str(lie), "weight": list(w), "index": d}, str(d))


def cmd_alcove(args):
    lie = LieType.parse(args.type)
    ws = fusion.alcove(lie, args.level)
    _emit(args, {"type": str(lie), "level": args.level, "weights": [list(w) for w in ws]},
          "\n".join(json.dumps(list(w)) for w in ws))


def cmd_tensor(args):
    lie = LieType.parse(args.type)
    a, b = parse_weight(args.first), parse_weight(args.second)
    for w in (a, b):
        hw.dim(lie, w)  # dominance check
    out = fusion.tensor_decompose(lie, a, b)
    _emit(args, {"type": str(lie), "factors": [list(a), list(b)], "decomposition": _pairs(out)},
          _fmt_sum(out))


def cmd_fuse(args):
    lie = LieType.parse(args.type)
    ws = [parse_weight(w) for w in args.weights]
    if len(ws) == 3:
        n = fusion.fusion_coeff(lie, args.level, *ws)
        _emit(args, {"type": str(lie), "level": args.level, "labels": [list(w) for w in ws],
                     "coefficient": n}, str(n))
    else:
        out = fusion.fusion_product(lie, args.level, *ws)
        _emit(args, {"type": str(lie), "level": args.level, "labels": [list(w) for w in ws],
                     "decomposition": _pairs(out)}, _fmt_sum(out))


def _read_request(source: str) -> dict:
    if source == "-":
        text = sys.stdin.read()
    elif source.startswith("@"):
        with open(source[1:]) as fh:
            text = fh.read()
    else:
        text = source
    try:
        req = json.loads(text)
    except json.JSONDecodeError as exc:
        raise LieError(f"bad request JSON: {exc}") from None
    if not isinstance(req, dict) or "type" not in req or "level" not in req:
        raise LieError('request needs at least "type" and "level"')
    return req


def cmd_blocks(args):
    if args.request:
        req = _read_request(args.request)
        lie = LieType.parse(req["type"])
        level, genus = req["level"], req.get("genus", 0)
        labels = [parse_weight(json.dumps(w)) for w in req.get("labels", [])]
        if type(level) is not int or type(genus) is not int:
            raise LieError("level and genus must be integers")
    else:
        if args.type is None or args.level is None:
            raise LieError("blocks needs TYPE and --level (or --request)")
        lie, level, genus = LieType.parse(args.type), args.level, args.genus
        labels = [parse_weight(w) for w in args.labels]
    d = fusion.blocks_dim(lie, level, genus, labels)
    _emit(args, {"dim": d}, str(d))


def cmd_branch(args):
    amb, sub = LieType.parse(args.ambient), LieType.parse(args.sub)
    w = parse_weight(args.weight)
    hw.dim(amb, w)
    if args.embedding:
        emb = branching.load_embedding(args.embedding)
        if (emb.ambient, emb.sub) != (amb, sub):
            raise LieError(f"embedding file describes {emb.label}, not {sub} < {amb}")
    else:
        emb = branching.chain(branching.builtin_tower(), amb, sub)
    out = branching.branch(emb, w)
    payload = {"ambient": str(amb), "sub": str(sub), "weight": list(w),
               "decomposition": _pairs(out), "dim": hw.dim_of_sum(sub, out),
               "index": hw.index_of_sum(sub, out)}
    _emit(args, payload, _fmt_sum(out) + f"\ndim {payload['dim']}, index {payload['index']}")


def cmd_verify(args) -> int:
    results = claims.verify_paper()
    ok = all(r.passed for r in results)
    if args.json:
        print(json.dumps({"passed": ok, "claims": [r.as_dict(args.timings) for r in results]},
                         sort_keys=True, separators=(",", ":")))
    else:
        for r in results:
            line = f"{'PASS' if r.passed else 'FAIL'}  {r.id:<28} {r.source}"
            if args.timings:
                line += f"  ({r.elapsed:.3f}s)"
            if not r.passed:
                line += f"\n      expected {r.expected!r}, got {r.computed!r}"
                if r.error:
                    line += f"\n      {r.error}"
            print(line)
        print(f"{sum(r.passed for r in results)}/{len(results)} claims passed")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="lieblocks", description="Exact computations for simple Lie algebras.")
    p.add_argument("--json", action="store_true", help="emit canonical JSON")
    p.add_argument("--table-limit", type=int, default=None,
                   help="largest fusion table (|P_l|^3 entries) to precompute")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("dim", help="Weyl dimension of L(weight)")
    s.add_argument("type")
    s.add_argument("weight")
    s.set_defaults(func=cmd_dim)

    s = sub.add_parser("index", help="Dynkin index of L(weight)")
    s.add_argument("type")
    s.add_argument("weight")
    s.set_defaults(func=cmd_index)

    s = sub.add_parser("alcove", help="dominant weights of level at most --level")
    s.add_argument("type")
    s.add_argument("--level", type=int, required=True)
    s.set_defaults(func=cmd_alcove)

    s = sub.add_parser("tensor", help="decompose a tensor product")
    s.add_argument("type")
    s.add_argument("first")
    s.add_argument("second")
    s.set_defaults(func=cmd_tensor)

    s = sub.add_parser("fuse", help="fusion product (2 weights) or coefficient (3 weights)")
    s.add_argument("type")
    s.add_argument("weights", nargs="+")
    s.add_argument("--level", type=int, required=True)
    s.set_defaults(func=cmd_fuse)

    s = sub.add_parser("blocks", help="dimension of conformal blocks")
    s.add_argument("type", nargs="?")
    s.add_argument("labels", nargs="*", help="point labels as weights")
    s.add_argument("--level", type=int)
    s.add_argument("--genus", type=int, default=0)
    s.add_argument("--request", help="JSON request, '-' for stdin or @FILE")
    s.set_defaults(func=cmd_blocks)

    s = sub.add_parser("branch", help="restrict L(weight) to a subalgebra")
    s.add_argument("ambient")
    s.add_argument("sub")
    s.add_argument("weight")
    s.add_argument("--embedding", help="projection matrix file (JSON or text)")
    s.set_defaults(func=cmd_branch)

    s = sub.add_parser("verify-paper", help="check every tabulated claim")
    s.add_argument("--timings", action="store_true", help="include elapsed times")
    s.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.table_limit is not None:
        fusion.TABLE_LIMIT = args.table_limit
    try:
        if args.command == "fuse" and len(args.weights) not in (2, 3):
            raise LieError("fuse takes two or three weights")
        rc = args.func(args)
    except LieError as exc:
        print(f"lieblocks: error: {exc}", file=sys.stderr)
        return 2
    except InvariantError as exc:
        print(f"lieblocks: internal error: {exc}", file=sys.stderr)
        return 3
    return rc or 0


if __name__ == "__main__":
    sys.exit(main())
