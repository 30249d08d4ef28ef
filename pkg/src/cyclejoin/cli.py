"""Command-line front end.

Subcommands:

  analyze   cycle table plus the pair-count matrix
  count     psi, zeta_G, zeta_Ghat (exact decimals, log2 annotations)
  generate  de Bruijn sequences from the first spanning trees in
            deterministic order (or one greedy tree with --partial)
  sample    sequences from uniformly random spanning trees
  verify    check the de Bruijn property of sequences read from a file
            or stdin

Factors are comma-separated coefficient strings, highest degree first
("11,111,11111").  Sequences print one ASCII bit string per line,
s_0 first.  Exact counts print in full decimal because they usually
exceed 64 bits; log2 values are annotations rounded to one decimal.
"""

import argparse
import itertools
import json
import random
import sys

from .adjacency import best_count, int_log2
from .joining import g_trees, join_cycles, random_spanning_tree, verify_de_bruijn
from .lfsr import parse_state, state_to_str
from .pipeline import FactoredLfsr

DEFAULT_MAX_ORDER = 24


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cyclejoin",
        description="de Bruijn sequences by cycle joining from a factored LFSR",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_factor_opts(p):
        p.add_argument(
            "--factors",
            required=True,
            help="comma-separated irreducible factors, coefficients highest degree first",
        )
        p.add_argument(
            "--max-order",
            type=int,
            default=DEFAULT_MAX_ORDER,
            help=f"safety cap on the total degree (default {DEFAULT_MAX_ORDER})",
        )
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("analyze", help="cycle table and pair-count matrix")
    add_factor_opts(p)

    p = sub.add_parser("count", help="exact counts of constructible sequences")
    add_factor_opts(p)

    p = sub.add_parser("generate", help="emit sequences from deterministic trees")
    add_factor_opts(p)
    p.add_argument("--limit", type=int, default=100, help="number of sequences (default 100)")
    p.add_argument("--tree-index", type=int, default=0, help="start at the k-th tree")
    p.add_argument("--initial-state", help="start state bits, s_0 first (default all zero)")
    p.add_argument("--hex", action="store_true", help="pack output as hex, s_0 at the top bit")
    p.add_argument("--provenance", action="store_true", help="also emit each tree's conjugate pairs")
    p.add_argument(
        "--partial",
        action="store_true",
        help="skip the full graph: find one greedy spanning structure (no order cap)",
    )

    p = sub.add_parser("sample", help="emit sequences from uniformly random trees")
    add_factor_opts(p)
    p.add_argument("--limit", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--initial-state", help="start state bits, s_0 first (default all zero)")
    p.add_argument("--hex", action="store_true")
    p.add_argument("--provenance", action="store_true")

    p = sub.add_parser("verify", help="check the de Bruijn property of input sequences")
    p.add_argument("path", nargs="?", default="-", help="file of bit strings, one per line ('-' = stdin)")
    p.add_argument("--order", type=int, help="expected order n (default: inferred per line)")
    p.add_argument("--format", choices=("text", "json"), default="text")

    return parser


def _instance(args) -> FactoredLfsr:
    inst = FactoredLfsr.from_strings(args.factors)
    cap = getattr(args, "max_order", DEFAULT_MAX_ORDER)
    if inst.n > cap and not getattr(args, "partial", False):
        raise ValueError(
            f"total degree {inst.n} exceeds the safety cap {cap}; raise --max-order "
            "or use generate --partial"
        )
    return inst


def _factor_list(inst):
    from .gf2 import format_poly

    return [format_poly(p) for p in inst.factor_polys]


def _cycle_rows(inst):
    rows = []
    for i, c in enumerate(inst.cycles):
        rows.append(
            {
                "index": i + 1,
                "state": state_to_str(inst.representative(i), inst.n),
                "description": c.describe(),
                "period": c.period,
            }
        )
    return rows


def cmd_analyze(args) -> int:
    inst = _instance(args)
    graph = inst.graph()
    rows = _cycle_rows(inst)
    pair_counts = [[a + 1, b + 1, len(ps)] for (a, b), ps in sorted(graph.edges.items())]
    if args.format == "json":
        print(
            json.dumps(
                {
                    "n": inst.n,
                    "factors": _factor_list(inst),
                    "psi": inst.psi,
                    "connected": graph.is_connected(),
                    "cycles": rows,
                    "pair_counts": pair_counts,
                },
                indent=2,
            )
        )
        return 0
    print(f"factors : {', '.join(_factor_list(inst))}")
    print(f"n       : {inst.n}")
    print(f"psi     : {inst.psi} cycles")
    print()
    width = max(len(r["description"]) for r in rows)
    print(f"{'idx':>4}  {'state':<{inst.n}}  {'cycle':<{width}}  period")
    for r in rows:
        print(f"V{r['index']:<3}  {r['state']}  {r['description']:<{width}}  {r['period']:>6}")
    print()
    print("conjugate pairs between cycles:")
    for a, b, cnt in pair_counts:
        print(f"  {{V{a},V{b}}}: {cnt}")
    if not graph.is_connected():
        print("warning: adjacency graph is disconnected; no de Bruijn sequence is constructible")
    return 0


def cmd_count(args) -> int:
    inst = _instance(args)
    graph = inst.graph()
    zg = best_count(graph)
    zh = best_count(graph, condensed=True)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "n": inst.n,
                    "factors": _factor_list(inst),
                    "psi": inst.psi,
                    "zeta_G": str(zg),
                    "zeta_Ghat": str(zh),
                    "log2_zeta_G": round(int_log2(zg), 1),
                    "log2_zeta_Ghat": round(int_log2(zh), 1),
                }
            )
        )
        return 0
    print(f"factors   : {', '.join(_factor_list(inst))}")
    print(f"n         : {inst.n}")
    print(f"psi       : {inst.psi}")
    print(f"zeta_G    : {zg}  (~2^{int_log2(zg):.1f})")
    print(f"zeta_Ghat : {zh}  (~2^{int_log2(zh):.1f})")
    return 0


def _emit_sequences(inst, trees, args) -> int:
    init = 0
    if getattr(args, "initial_state", None):
        init = parse_state(args.initial_state)
        if init >> inst.n:
            raise ValueError(f"initial state must have {inst.n} bits")
    seqs = []
    for tree in trees:
        seqs.append(join_cycles(tree, inst.lfsr, init))
    if args.format == "json":
        doc = {
            "n": inst.n,
            "psi": inst.psi,
            "sequences": [s.packed_hex() if args.hex else s.bits for s in seqs],
        }
        if args.provenance:
            doc["trees"] = [
                [[state_to_str(p.v, inst.n), state_to_str(p.v_hat, inst.n)] for p in s.pairs]
                for s in seqs
            ]
        print(json.dumps(doc))
        return 0
    for s in seqs:
        if args.provenance:
            pairs = " ".join(f"{state_to_str(p.v, inst.n)}/{state_to_str(p.v_hat, inst.n)}" for p in s.pairs)
            print(f"# tree: {pairs}")
        print(s.packed_hex() if args.hex else s.bits)
    return 0


def cmd_generate(args) -> int:
    inst = _instance(args)
    if args.limit < 1:
        raise ValueError("--limit must be positive")
    if args.partial:
        tree_graph = inst.greedy_tree()
        pairs = tuple(ps[0] for ps in tree_graph.edges.values())
        return _emit_sequences(inst, [pairs], args)
    trees = list(
        itertools.islice(g_trees(inst.graph()), args.tree_index, args.tree_index + args.limit)
    )
    if not trees:
        raise ValueError("tree index is past the last spanning tree")
    return _emit_sequences(inst, trees, args)


def cmd_sample(args) -> int:
    inst = _instance(args)
    if args.limit < 1:
        raise ValueError("--limit must be positive")
    rng = random.Random(args.seed)
    graph = inst.graph()
    trees = [random_spanning_tree(graph, rng) for _ in range(args.limit)]
    return _emit_sequences(inst, trees, args)


def cmd_verify(args) -> int:
    if args.path == "-":
        lines = [l.strip() for l in sys.stdin]
    else:
        with open(args.path) as fh:
            lines = [l.strip() for l in fh]
    lines = [l for l in lines if l and not l.startswith("#")]
    results = []
    for line in lines:
        length = len(line)
        n = args.order if args.order else length.bit_length() - 1
        if length != 1 << n or line.strip("01"):
            results.append({"order": n, "valid": False})
            continue
        results.append({"order": n, "valid": verify_de_bruijn(line, n)})
    ok = all(r["valid"] for r in results) and results
    if args.format == "json":
        print(json.dumps({"results": results, "all_valid": bool(ok)}))
    else:
        for i, r in enumerate(results):
            status = "ok" if r["valid"] else "FAIL"
            print(f"sequence {i + 1}: order {r['order']}: {status}")
        if not results:
            print("no sequences read")
    return 0 if ok else 1


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "analyze": cmd_analyze,
        "count": cmd_count,
        "generate": cmd_generate,
        "sample": cmd_sample,
        "verify": cmd_verify,
    }
    try:
        return handlers[args.command](args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
