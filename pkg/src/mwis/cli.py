"""Command line interface.

Subcommands: reduce (kernelize a graph file), solve (exact MWIS), gen
(reproducible random instances), oracle (brute force, small graphs only),
verify (check a solution file against its graph).

Exit codes: 0 success, 1 usage or verification failure, 2 malformed input
file, 3 time limit hit (a best-effort solution was still written).
"""

import argparse
import os
import sys
import time

from .blowup import PRESETS, PRESET_NONINCREASING, make_blowup_config
from .blowup import preprocess
from .metisio import (ParseError, parse_graph, read_solution, write_graph,
                      write_kernel, write_solution, write_stats)
from .reductions import ReduceConfig
from .rng import random_gnp_graph, random_path_graph
from .solver import (OPTIMAL, SizeLimit, SolverConfig, brute_force_mwis,
                     solve)
from .struction import VARIANT_OPS
from .translog import verify_lift

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_TIME_LIMIT = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise _UsageError(message)


class _UsageError(Exception):
    pass


def build_parser():
    p = _Parser(prog="mwis",
                description="Exact maximum weight independent set toolkit")
    sub = p.add_subparsers(dest="cmd", required=True)

    red = sub.add_parser("reduce", help="kernelize a graph file")
    red.add_argument("--in", dest="infile", required=True)
    red.add_argument("--out", dest="outfile", required=True)
    red.add_argument("--mode", choices=PRESETS, default=PRESET_NONINCREASING)
    red.add_argument("--nmax", type=int, default=None)
    red.add_argument("--dmax", type=int, default=None)
    red.add_argument("--unsucc", type=int, default=None,
                     help="max unsuccessful blow-up phases (X)")
    red.add_argument("--beta", type=float, default=None)
    red.add_argument("--alpha", type=float, default=None)
    red.add_argument("--variant", choices=sorted(VARIANT_OPS), default=None)
    red.add_argument("--stats", dest="stats", default=None)

    sol = sub.add_parser("solve", help="solve a graph file exactly")
    sol.add_argument("--in", dest="infile", required=True)
    sol.add_argument("--mode", choices=PRESETS, default=PRESET_NONINCREASING)
    sol.add_argument("--sol", dest="solfile", required=True)
    sol.add_argument("--time-limit", type=float, default=None)
    sol.add_argument("--stats", dest="stats", default=None)

    gen = sub.add_parser("gen", help="generate a reproducible random instance")
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--p", type=float, default=None,
                     help="edge probability (gnp type)")
    gen.add_argument("--wmin", type=int, default=1)
    gen.add_argument("--wmax", type=int, default=200)
    gen.add_argument("--seed", type=int, required=True)
    gen.add_argument("--out", dest="outfile", required=True)
    gen.add_argument("--type", dest="kind", choices=("gnp", "path", "cycle"),
                     default="gnp")

    orc = sub.add_parser("oracle", help="brute-force optimum (small graphs)")
    orc.add_argument("--in", dest="infile", required=True)
    orc.add_argument("--limit", type=int, default=30)

    ver = sub.add_parser("verify", help="check a solution file")
    ver.add_argument("--in", dest="infile", required=True)
    ver.add_argument("--sol", dest="solfile", required=True)
    return p


def _reduce_cmd(args):
    g = parse_graph(args.infile)
    t0 = time.monotonic()
    if args.mode == PRESET_NONINCREASING:
        cfg = ReduceConfig()
        if args.dmax is not None:
            cfg.d_max = args.dmax
        if args.variant is not None:
            cfg.variant = args.variant
        kres = preprocess(g, args.mode, reduce_cfg=cfg)
    else:
        bc = make_blowup_config(args.mode, X=args.unsucc, n_max=args.nmax,
                                d_max=args.dmax, beta=args.beta,
                                alpha=args.alpha, variant=args.variant)
        kres = preprocess(g, args.mode, blowup_cfg=bc)
    elapsed_ms = int((time.monotonic() - t0) * 1000)
    write_kernel(kres, args.outfile)
    n, m = kres.kernel.counts()
    print(f"reduce_ms={elapsed_ms}", file=sys.stderr)
    if args.stats:
        stats = {"instance": os.path.basename(args.infile), "mode": args.mode,
                 "seed": 0, "kernel_n": n, "kernel_m": m,
                 "offset": kres.offset}
        if n == 0:
            stats["weight"] = kres.offset
            stats["status"] = OPTIMAL
        write_stats(args.stats, stats)
    print(f"kernel_n={n} kernel_m={m} offset={kres.offset}")
    return EXIT_OK


def _solve_cmd(args):
    g = parse_graph(args.infile)
    cfg = SolverConfig(mode=args.mode, time_limit=args.time_limit)
    t0 = time.monotonic()
    res = solve(g, cfg)
    elapsed_ms = int((time.monotonic() - t0) * 1000)
    write_solution(args.solfile, res.weight, res.solution)
    print(f"solve_ms={elapsed_ms}", file=sys.stderr)
    if args.stats:
        stats = {"instance": os.path.basename(args.infile), "mode": args.mode,
                 "seed": 0, "kernel_n": res.stats["kernel_n"],
                 "kernel_m": res.stats["kernel_m"],
                 "offset": res.stats["offset"], "weight": res.weight,
                 "status": res.status, "branches": res.stats["branches"]}
        write_stats(args.stats, stats)
    print(f"weight={res.weight} status={res.status}")
    return EXIT_OK if res.status == OPTIMAL else EXIT_TIME_LIMIT


def _gen_cmd(args):
    if args.kind == "gnp":
        if args.p is None:
            raise _UsageError("--p is required for --type gnp")
        g = random_gnp_graph(args.n, args.p, args.seed, args.wmin, args.wmax)
    else:
        g = random_path_graph(args.n, args.seed, args.wmin, args.wmax,
                              cycle=(args.kind == "cycle"))
    write_graph(g, args.outfile)
    return EXIT_OK


def _oracle_cmd(args):
    g = parse_graph(args.infile)
    try:
        weight, sol = brute_force_mwis(g, args.limit)
    except SizeLimit as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(f"%weight {weight}")
    for v in sorted(sol):
        print(v + 1)
    return EXIT_OK


def _verify_cmd(args):
    g = parse_graph(args.infile)
    weight, ids = read_solution(args.solfile)
    for v in ids:
        if not g.is_active(v):
            print(f"verify failed: vertex {v + 1} does not exist", file=sys.stderr)
            return EXIT_USAGE
    for v in ids:
        for u in g.neighbors(v):
            if u in ids:
                print(f"verify failed: NotIndependent, edge {v + 1}-{u + 1} "
                      "inside the solution", file=sys.stderr)
                return EXIT_USAGE
    actual = sum(g.weight(v) for v in ids)
    if actual != weight:
        print(f"verify failed: declared weight {weight}, actual {actual}",
              file=sys.stderr)
        return EXIT_USAGE
    if not verify_lift(g, ids, weight):
        print("verify failed", file=sys.stderr)
        return EXIT_USAGE
    print(f"ok weight={weight} size={len(ids)}")
    return EXIT_OK


_COMMANDS = {"reduce": _reduce_cmd, "solve": _solve_cmd, "gen": _gen_cmd,
             "oracle": _oracle_cmd, "verify": _verify_cmd}


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.cmd](args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
