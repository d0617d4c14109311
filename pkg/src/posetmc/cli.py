"""Command-line interface.

Exit codes: ``check`` returns 0 when the sentence is true and 1 when it is
false; every command returns 2 on malformed input.
"""

from __future__ import annotations

import argparse
import sys
from typing import List, Optional

from . import bench, generators as gen, poset as po
from .depth import level_sets
from .errors import PosetmcError
from .reducer import Decided, reduce
from .sentence import brute_force_check, format_sentence, parse
from .solver import DEFAULT_BUDGET_BITS, check, check_both


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load(args):
    return po.loads_poset(_read(args.poset)), parse(_read(args.sentence))


def cmd_check(args) -> int:
    P, phi = _load(args)
    if args.method == "brute":
        truth = brute_force_check(P, phi)
        print(f"{str(truth).lower()} method=brute")
        return 0 if truth else 1
    if args.method == "both":
        res, brute = check_both(P, phi, args.budget)
        agree = res.truth == brute
        print(f"{str(res.truth).lower()} method={res.method} brute={str(brute).lower()} agree={'yes' if agree else 'no'}")
        if not agree:
            print("error: decision procedure and brute force disagree", file=sys.stderr)
            return 2
    else:
        res = check(P, phi)
        print(f"{str(res.truth).lower()} method={res.method}")
    if args.stats:
        print(res.stats.record() if res.stats else f"method={res.method} reason={res.reason.replace(' ', '_')}")
    return 0 if res.truth else 1


def cmd_reduce(args) -> int:
    P, phi = _load(args)
    out = reduce(P, phi)
    if isinstance(out, Decided):
        print(f"DECIDED {str(out.value).lower()} {out.reason}")
    else:
        print(format_sentence(out.sentence.inner))
    if args.trace:
        for step in out.trace:
            print(f"# {step}")
    return 0


def cmd_invariants(args) -> int:
    P = po.loads_poset(_read(args.poset))
    print(" ".join(f"{k}={v}" for k, v in po.invariants(P).items()))
    if args.levels is not None:
        levels = level_sets(P, args.levels)
        for i, (nl, nu, npi) in enumerate(levels.sizes()):
            print(f"level={i} L={nl} U={nu} P={npi}")
    return 0


def cmd_gen(args) -> int:
    what = args.what
    if what == "bowtie":
        text = po.dumps_poset(po.bowtie())
    elif what == "phi-k":
        text = format_sentence(gen.phi_k(args.k)) + "\n"
    elif what in ("depth2", "cover3"):
        if not args.hypergraph:
            raise PosetmcError(f"gen {what} needs --hypergraph")
        H = gen.loads_hypergraph(_read(args.hypergraph))
        build = gen.hypergraph_to_depth2 if what == "depth2" else gen.hypergraph_to_cover3
        text = po.dumps_poset(build(H))
    elif what == "random-poset":
        text = po.dumps_poset(gen.random_poset_bounded_width(args.n, args.width, args.density, args.seed))
    elif what == "random-sentence":
        text = format_sentence(gen.random_sentence(args.vars, args.atoms, args.seed)) + "\n"
    else:  # pragma: no cover - argparse restricts choices
        raise PosetmcError(f"unknown generator {what}")
    sys.stdout.write(text)
    return 0


def cmd_bench(args) -> int:
    phi = parse(_read(args.sentence)) if args.sentence else gen.phi_k(2)
    sizes = [int(s) for s in args.sizes.split(",")]
    records = bench.run_bench(
        phi,
        sizes,
        w=args.width,
        seeds=args.seeds,
        seed=args.seed,
        cross_pairs=args.cross_pairs,
        sentence_id=args.sentence_id,
        budget=args.budget,
    )
    for r in records:
        print(r.line(), flush=True)
    slope = bench.growth_exponent(records)
    print(f"# memo_state_growth_exponent={'nan' if slope is None else f'{slope:.3f}'}")
    return 0


def cmd_selftest(args) -> int:
    checked, bad = bench.oracle_sweep(args.max_n, args.sentences, args.seed)
    for P, phi in bad[:10]:
        print(f"disagreement: poset covers={P.cover_pairs()} sentence={format_sentence(phi)}")
    print(f"checked={checked} disagreements={len(bad)}")
    return 0 if not bad else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="posetmc", description="Model checking conjunctive sentences on finite posets.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="decide whether a sentence holds on a poset")
    p.add_argument("--poset", required=True)
    p.add_argument("--sentence", required=True)
    p.add_argument("--method", choices=["fpt", "brute", "both"], default="fpt")
    p.add_argument("--stats", action="store_true")
    p.add_argument("--budget", type=float, default=DEFAULT_BUDGET_BITS, help="brute-force guard in bits")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("reduce", help="rewrite a sentence into reduced form on a poset")
    p.add_argument("--poset", required=True)
    p.add_argument("--sentence", required=True)
    p.add_argument("--trace", action="store_true")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("invariants", help="print poset invariants")
    p.add_argument("--poset", required=True)
    p.add_argument("--levels", type=int, metavar="K")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("gen", help="emit a generated poset or sentence")
    p.add_argument("what", choices=["bowtie", "phi-k", "depth2", "cover3", "random-poset", "random-sentence"])
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--hypergraph")
    p.add_argument("--n", type=int, default=10)
    p.add_argument("--width", type=int, default=2)
    p.add_argument("--density", type=float, default=0.1)
    p.add_argument("--vars", type=int, default=4)
    p.add_argument("--atoms", type=int, default=4)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="size sweep on random bounded-width posets")
    p.add_argument("--sentence", help="sentence file (default: phi_2)")
    p.add_argument("--sentence-id", default="phi2")
    p.add_argument("--sizes", default="125,250,500,1000,2000")
    p.add_argument("--width", type=int, default=2)
    p.add_argument("--seeds", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cross-pairs", type=float, default=4.0)
    p.add_argument("--budget", type=float, default=DEFAULT_BUDGET_BITS)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("selftest", help="exhaustive small-poset comparison with brute force")
    p.add_argument("--max-n", type=int, default=4)
    p.add_argument("--sentences", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    try:
        return args.func(args)
    except (PosetmcError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
