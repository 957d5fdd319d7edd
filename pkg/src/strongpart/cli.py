"""Command-line interface: ``strongpart <subcommand> ...``.

Graphs are read from ``--file`` or standard input in any encode format (the
format is sniffed).  Output is line-oriented ``key=value`` text by default
when stdout is not a terminal; ``--human`` adds headings and alignment.

Exit codes: 0 success, 1 usage error, 2 validation error, 3 violation or
counterexample found.
"""

from __future__ import annotations

import argparse
import logging
import sys

from . import constructions
from .control import is_good_to, render_control_matrix
from .core import (FORMATS, decode, degree_info, encode, is_nearly_regular, is_regular,
                   regularity, sniff_format)
from .errors import ResourceBudgetExceeded, StrongPartError
from .partitions import all_part_stats, census, classify_all, has_st_partition
from .search import SearchConfig, enumerate_instances, sample_random, verify_theorems
from .search.verify import SCOPES

EXIT_OK, EXIT_USAGE, EXIT_INVALID, EXIT_VIOLATION = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _read_graph(args):
    if args.file:
        with open(args.file) as fh:
            text = fh.read()
    else:
        text = sys.stdin.read()
    if not text.strip():
        raise UsageError("no input graph on stdin or --file")
    return decode(text, args.input_format or sniff_format(text))


def _default_format(G):
    return "hex" if G.r == 2 else "structured"


def cmd_gen(args, out):
    G = constructions.named(args.name)
    out.write(encode(G, args.format or _default_format(G)).rstrip("\n") + "\n")
    return EXIT_OK


def cmd_convert(args, out):
    G = _read_graph(args)
    out.write(encode(G, args.to).rstrip("\n") + "\n")
    return EXIT_OK


def cmd_partitions(args, out):
    G = _read_graph(args)
    if args.find_st:
        tau = has_st_partition(G)
        out.write(f"st={tau.text() if tau else 'none'}\n")
        return EXIT_OK
    rows = classify_all(G)
    if args.human:
        out.write(f"{'partition':<12} {'kind':<6} zero-degree vertices\n")
    for tau, cl in rows:
        if args.all_st and cl.kind.value != "st":
            continue
        zeros = ",".join(f"{u}@{k}" for u, k in cl.zero_vertices) or "-"
        if args.human:
            out.write(f"{tau.text():<12} {cl.kind.value:<6} {zeros}\n")
        else:
            out.write(f"partition={tau.text()} kind={cl.kind.value} zero={zeros}\n")
    out.write(census(G).line() + "\n")
    return EXIT_OK


def cmd_classify(args, out):
    G = _read_graph(args)
    if args.human:
        out.write("control matrix (row controls column)\n")
    out.write(render_control_matrix(G).rstrip("\n") + "\n")
    for u in G.vertices():
        good = [j for j in range(1, G.c + 1) if j != u.part and is_good_to(G, u, j)]
        out.write(f"vertex={u} good_to={','.join(map(str, good)) or '-'}\n")
    return EXIT_OK


def cmd_stats(args, out):
    G = _read_graph(args)
    out.write(f"r={G.r} c={G.c} regular={is_regular(G)} nearly_regular={is_nearly_regular(G)}\n")
    for u in G.vertices():
        d = degree_info(G, u)
        out.write(f"vertex={u} out={d.out_degree} in={d.in_degree} "
                  f"regularity={regularity(G, u).value}\n")
    for i in range(1, G.c + 1):
        out.write(f"part={i} regularity={regularity(G, i).value}\n")
    if G.r == 2 and G.c == 5 and is_nearly_regular(G):
        for s in all_part_stats(G):
            nv = " ".join(f"n({u})={v}" for u, v in s.n_vertex.items())
            out.write(f"part={s.part} n={s.n_part} n1={s.n1} n2={s.n2} "
                      f"n_prime={s.n_prime} {nv}\n")
    return EXIT_OK


def cmd_search(args, out):
    cfg = SearchConfig(c=args.c, degree_window=args.window, no_st_only=args.no_st,
                       no_st_pruning=not args.no_pruning and args.c == 5,
                       worker_count=args.workers, seed=args.seed)
    if args.sample:
        for G in sample_random(cfg, args.sample):
            out.write(encode(G, "hex") + "\n")
        return EXIT_OK
    for k, v in cfg.echo().items():
        out.write(f"config.{k}={v}\n")
    found = enumerate_instances(cfg, checkpoint=args.checkpoint, node_budget=args.budget)
    for code in found.codes:
        out.write(f"class={code} automorphisms={found.automorphisms[code]}\n")
    out.write(f"classes={found.unlabeled_count} labeled={found.labeled_count}\n")
    return EXIT_OK


def cmd_verify(args, out):
    opts = {"workers": args.workers, "checkpoint": args.checkpoint, "budget": args.budget,
            "seed": args.seed, "full_c6": args.full_c6}
    if args.samples is not None:
        opts["samples"] = args.samples
    report = verify_theorems(args.scope, **opts)
    out.write(report.render(timing=not args.no_timing))
    return EXIT_OK if report.ok else EXIT_VIOLATION


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="strongpart", description="Strong partitions of balanced multipartite tournaments")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    def graph_input(sp):
        sp.add_argument("--file", help="read the graph from this file instead of stdin")
        sp.add_argument("--input-format", choices=FORMATS, help="skip format sniffing")
        sp.add_argument("--human", action="store_true", default=None,
                        help="human-readable layout (default when stdout is a terminal)")

    sp = sub.add_parser("gen", help="emit a named construction")
    sp.add_argument("name", choices=sorted(constructions.NAMED))
    sp.add_argument("--format", choices=FORMATS)
    sp.set_defaults(fn=cmd_gen)

    sp = sub.add_parser("convert", help="translate between encodings")
    graph_input(sp)
    sp.add_argument("--to", choices=FORMATS, required=True)
    sp.set_defaults(fn=cmd_convert)

    sp = sub.add_parser("partitions", help="classify every partition and print the census")
    graph_input(sp)
    g = sp.add_mutually_exclusive_group()
    g.add_argument("--find-st", action="store_true", help="print the lexicographically first st-partition")
    g.add_argument("--all-st", action="store_true", help="list only the st-partitions")
    sp.set_defaults(fn=cmd_partitions)

    sp = sub.add_parser("classify", help="control matrix and per-vertex goodness")
    graph_input(sp)
    sp.set_defaults(fn=cmd_classify)

    sp = sub.add_parser("stats", help="degrees, regularity and part statistics")
    graph_input(sp)
    sp.set_defaults(fn=cmd_stats)

    def search_flags(sp):
        sp.add_argument("--workers", type=int, default=1)
        sp.add_argument("--checkpoint", help="JSON file recording finished subtrees")
        sp.add_argument("--budget", type=int, help="node budget before stopping")
        sp.add_argument("--seed", type=int, default=0)

    sp = sub.add_parser("search", help="enumerate isomorphism classes or sample instances")
    sp.add_argument("--c", type=int, required=True)
    sp.add_argument("--window", type=int, default=0, help="max |d+ - d-| (0 or 2)")
    sp.add_argument("--no-st", action="store_true", help="keep only classes without an st-partition")
    sp.add_argument("--no-pruning", action="store_true", help="disable the counting-bound cut")
    sp.add_argument("--sample", type=int, help="emit this many seeded random instances instead")
    search_flags(sp)
    sp.set_defaults(fn=cmd_search)

    sp = sub.add_parser("verify", help="run a verification scope and report violations")
    sp.add_argument("--scope", choices=sorted(SCOPES), required=True)
    sp.add_argument("--samples", type=int, help="sample count for lemma_suite")
    sp.add_argument("--full-c6", action="store_true",
                    help="also run the unconditional c = 6 enumeration (very long)")
    sp.add_argument("--no-timing", action="store_true", help="omit wall_time for byte-stable output")
    search_flags(sp)
    sp.set_defaults(fn=cmd_verify)
    return p


def run(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    try:
        args = build_parser().parse_args(argv)
        if args.command is None:
            raise UsageError("a subcommand is required")
    except UsageError as exc:
        out.write(f"error=usage {exc}\n")
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return EXIT_OK if not exc.code else EXIT_USAGE
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
    if getattr(args, "human", False) is None:
        args.human = out.isatty() if hasattr(out, "isatty") else False
    try:
        return args.fn(args, out)
    except UsageError as exc:
        out.write(f"error=usage {exc}\n")
        return EXIT_USAGE
    except ResourceBudgetExceeded as exc:
        out.write(f"error=budget {exc} checkpoint={exc.checkpoint}\n")
        return EXIT_INVALID
    except (StrongPartError, ValueError, OSError) as exc:
        out.write(f"error={type(exc).__name__} {exc}\n")
        return EXIT_INVALID


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
