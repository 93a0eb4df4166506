"""Command-line entry point.

Exit codes: 0 success, 1 instance refused as too large, 2 bad input,
3 completed but with a low-confidence decision.
"""

import argparse
import sys

from . import codec, driver
from .codec import EdgeIndexMap, HypergraphBits
from .cost import CostParams, count_cliques, count_independent
from .engine import SIMULABLE_LIMIT, Schedule
from .errors import InstanceTooLarge, ParameterError, ParseError
from .oracle import EXHAUSTIVE_LIMIT
from .pauli import compile_cost, emit

EXIT_TOO_LARGE = 1
EXIT_BAD_INPUT = 2
EXIT_LOW_CONFIDENCE = 3


def _read(path):
    if path in (None, "-"):
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def cmd_encode(args):
    hb = codec.loads(_read(args.file))
    if (hb.N, hb.r) != (args.N, args.r):
        raise ParseError(f"file header is N={hb.N} r={hb.r}, expected N={args.N} r={args.r}", 1)
    print(hb.to_string())


def cmd_decode(args):
    hb = HypergraphBits.from_string(EdgeIndexMap(args.N, args.r), args.bits)
    sys.stdout.write(codec.dumps(hb))


def cmd_cost(args):
    params = CostParams(args.N, args.m, args.n, args.r)
    hb = HypergraphBits.from_string(params.map, args.bits)
    c, i = count_cliques(params, hb), count_independent(params, hb)
    print(c, i, c + i)


def cmd_compile(args):
    params = CostParams(args.N, args.m, args.n, args.r)
    poly = compile_cost(params)
    with open(args.output, "w") as fh:
        fh.write(f"# N={args.N} m={args.m} n={args.n} r={args.r}\n")
        fh.write(emit(poly))
    print(f"terms {len(poly)} locality {poly.locality} bound {params.locality}")


def cmd_ramsey(args):
    if args.backend == "oracle":
        result = driver.ramsey_oracle(args.m, args.n, args.r, args.low,
                                      limit=args.limit or EXHAUSTIVE_LIMIT)
    else:
        result = driver.ramsey_aqe(
            args.m, args.n, args.r, args.low,
            sched=Schedule(args.T, args.steps),
            pol=driver.RepetitionPolicy(args.epsilon, args.delta, args.k_max),
            seed=args.seed, limit=args.limit or SIMULABLE_LIMIT,
            trace_dir=args.trace,
        )
    files = result.write_witnesses(args.witness_dir) if args.witness_dir else None
    print(f"R({args.m},{args.n};{args.r}) = {result.R}")
    sys.stdout.write(result.report(files))
    if result.low_confidence:
        print("warning: repetition cap reached; the final decision is low-confidence",
              file=sys.stderr)
        return EXIT_LOW_CONFIDENCE
    return 0


def build_parser():
    p = argparse.ArgumentParser(prog="hyperramsey",
                                description="Hypergraph Ramsey numbers via cost minimization.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("encode", help="edge-list file -> bit string")
    s.add_argument("N", type=int)
    s.add_argument("r", type=int)
    s.add_argument("file", nargs="?", default="-", help="edge-list file ('-' for stdin)")
    s.set_defaults(func=cmd_encode)

    s = sub.add_parser("decode", help="bit string -> edge-list")
    s.add_argument("N", type=int)
    s.add_argument("r", type=int)
    s.add_argument("bits")
    s.set_defaults(func=cmd_decode)

    s = sub.add_parser("cost", help="print clique count, independent-set count and cost")
    for name in ("N", "m", "n", "r"):
        s.add_argument(name, type=int)
    s.add_argument("bits")
    s.set_defaults(func=cmd_cost)

    s = sub.add_parser("compile", help="write the Pauli-Z term list of the cost")
    for name in ("N", "m", "n", "r"):
        s.add_argument(name, type=int)
    s.add_argument("output")
    s.set_defaults(func=cmd_compile)

    s = sub.add_parser("ramsey", help="compute R(m,n;r)")
    for name in ("m", "n", "r"):
        s.add_argument(name, type=int)
    s.add_argument("--backend", choices=("oracle", "aqe"), default="oracle")
    s.add_argument("--low", type=int, default=None,
                   help="strict lower bound on R (default max(m,n,r))")
    s.add_argument("--T", type=float, default=driver.DEFAULT_SCHEDULE.T)
    s.add_argument("--steps", type=int, default=driver.DEFAULT_SCHEDULE.steps)
    s.add_argument("--epsilon", type=float, default=0.5)
    s.add_argument("--delta", type=float, default=0.99)
    s.add_argument("--k-max", type=int, default=100)
    s.add_argument("--seed", type=int, default=driver.DEFAULT_SEED)
    s.add_argument("--limit", type=int, default=None, help="register size limit")
    s.add_argument("--trace", default=None, help="directory for per-N evolution traces")
    s.add_argument("--witness-dir", default=None, help="directory for witness files")
    s.set_defaults(func=cmd_ramsey)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args) or 0
    except InstanceTooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_TOO_LARGE
    except (ParseError, ParameterError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
