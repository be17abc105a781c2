"""Command-line entry point: ``graphpart recognize|gen|verify|oracle``.

Exit status is 0 for YES (or a valid certificate), 1 for NO, 2 for usage,
input or configuration errors.
"""

from __future__ import annotations

import argparse
import logging
import sys
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import ConfigError, GraphPartError
from .exclusive import parse_spec, recognize_bounded_a, recognize_cluster_vs_fsg, recognize_exclusive, recognize_small_fsg
from .generate import KINDS, generate_planted
from .graph import Bipartition, Graph, verify_certificate
from .io import parse_certificate, parse_graph_file, write_certificate, write_graph_file
from .monopolar import recognize_monopolar
from .oracle import brute_monopolar, brute_pi_partition, brute_subcoloring
from .stats import SearchStats
from .subcoloring import recognize_subcoloring_ka
from .total import recognize_subcoloring_total

PROBLEMS = ("monopolar", "subcoloring-ka", "subcoloring-total", "generic-exclusive", "bounded-a")
CERT_PROBLEMS = ("monopolar", "subcoloring-ka", "subcoloring-total")
METHODS = ("xp", "cluster-fsg", "small-fsg")
EXIT_YES, EXIT_NO, EXIT_ERROR = 0, 1, 2


@dataclass
class RunConfig:
    problem: str
    k: Optional[int]
    input: str
    certificate: Optional[str] = None
    property_a: Optional[str] = None
    property_b: Optional[str] = None
    method: str = "xp"
    order_mode: str = "degree_sorted"
    stats: bool = False

    def validate(self) -> None:
        needs_k = self.problem in CERT_PROBLEMS or self.problem == "bounded-a" or (
            self.problem == "generic-exclusive" and self.method == "cluster-fsg"
        )
        if needs_k and self.k is None:
            raise ConfigError(f"--k is required for {self.problem}")
        if self.problem in ("generic-exclusive", "bounded-a"):
            if self.property_b is None:
                raise ConfigError("--property-b is required in generic mode")
            if self.property_a is None and not (self.problem == "generic-exclusive" and self.method == "cluster-fsg"):
                raise ConfigError("--property-a is required in generic mode")


def solve(graph: Graph, config: RunConfig, stats: SearchStats) -> Optional[Bipartition]:
    k = config.k
    if config.problem == "monopolar":
        return recognize_monopolar(graph, k, stats, config.order_mode)
    if config.problem == "subcoloring-ka":
        return recognize_subcoloring_ka(graph, k, stats, config.order_mode)
    if config.problem == "subcoloring-total":
        return recognize_subcoloring_total(graph, k, stats)
    spec_b = parse_spec(config.property_b)
    if config.problem == "bounded-a":
        return recognize_bounded_a(graph, k, parse_spec(config.property_a), spec_b, stats)
    if config.method == "cluster-fsg":
        return recognize_cluster_vs_fsg(graph, k, spec_b, stats)
    spec_a = parse_spec(config.property_a)
    if config.method == "small-fsg":
        return recognize_small_fsg(graph, spec_a, spec_b, stats)
    return recognize_exclusive(graph, spec_a, spec_b)


def _bound_mode(problem: str) -> str:
    return "total" if problem == "subcoloring-total" else "a_side"


def _cert_problem(problem: str) -> str:
    return "monopolar" if problem == "monopolar" else "subcoloring"


def _cmd_recognize(args) -> int:
    config = RunConfig(
        problem=args.problem,
        k=args.k,
        input=args.input,
        certificate=args.certificate,
        property_a=args.property_a,
        property_b=args.property_b,
        method=args.method,
        order_mode=args.order,
        stats=args.stats,
    )
    config.validate()
    graph = parse_graph_file(config.input)
    stats = SearchStats()
    found = solve(graph, config, stats)
    print("YES" if found is not None else "NO")
    if found is not None and config.certificate:
        write_certificate(found, config.certificate)
    if config.stats:
        for line in stats.as_lines():
            print(line)
    return EXIT_YES if found is not None else EXIT_NO


def _cmd_gen(args) -> int:
    graph, planted = generate_planted(
        args.kind, args.n, args.k, args.p, args.seed, a_fraction=args.a_fraction, b_clusters=args.b_clusters
    )
    write_graph_file(graph, args.output, args.format)
    if args.certificate:
        if planted is None:
            raise ConfigError(f"{args.kind} graphs have no planted certificate")
        write_certificate(planted, args.certificate)
    return EXIT_YES


def _cmd_verify(args) -> int:
    graph = parse_graph_file(args.input)
    partition = parse_certificate(args.certificate)
    ok = verify_certificate(graph, partition, _cert_problem(args.problem), args.k, _bound_mode(args.problem))
    print("VALID" if ok else "INVALID")
    return EXIT_YES if ok else EXIT_NO


def _cmd_oracle(args) -> int:
    graph = parse_graph_file(args.input)
    if args.problem == "monopolar":
        found = brute_monopolar(graph, args.k)
    elif args.problem in ("subcoloring-ka", "subcoloring-total"):
        found = brute_subcoloring(graph, args.k, _bound_mode(args.problem))
    else:
        if args.property_a is None or args.property_b is None:
            raise ConfigError("--property-a and --property-b are required in generic mode")
        found = brute_pi_partition(graph, parse_spec(args.property_a), parse_spec(args.property_b))
    print("YES" if found is not None else "NO")
    if found is not None and args.certificate:
        write_certificate(found, args.certificate)
    return EXIT_YES if found is not None else EXIT_NO


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="graphpart", description="Vertex bipartitions into cluster-like sides.")
    parser.add_argument("-v", "--verbose", action="store_true", help="log diagnostics to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    rec = sub.add_parser("recognize", help="decide an instance and optionally write a certificate")
    rec.add_argument("--problem", choices=PROBLEMS, required=True)
    rec.add_argument("--k", type=int)
    rec.add_argument("--input", required=True)
    rec.add_argument("--certificate", help="where to write the certificate on YES")
    rec.add_argument("--property-a", help="library property for side A, e.g. clique or cluster:k=2")
    rec.add_argument("--property-b", help="library property for side B, e.g. edgeless")
    rec.add_argument("--method", choices=METHODS, default="xp", help="solver for generic-exclusive")
    rec.add_argument("--order", choices=("degree_sorted", "input"), default="degree_sorted")
    rec.add_argument("--stats", action="store_true", help="print search statistics as key=value lines")
    rec.set_defaults(handler=_cmd_recognize)

    gen = sub.add_parser("gen", help="write a random graph")
    gen.add_argument("--kind", choices=KINDS, required=True)
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--k", type=int, default=0)
    gen.add_argument("--p", type=float, default=0.1)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--a-fraction", type=float, default=0.5)
    gen.add_argument("--b-clusters", type=int)
    gen.add_argument("--format", choices=("dimacs", "edges"), default="dimacs")
    gen.add_argument("--output", required=True)
    gen.add_argument("--certificate", help="where to write the planted partition")
    gen.set_defaults(handler=_cmd_gen)

    ver = sub.add_parser("verify", help="check a certificate file against a graph")
    ver.add_argument("--problem", choices=CERT_PROBLEMS, required=True)
    ver.add_argument("--k", type=int)
    ver.add_argument("--input", required=True)
    ver.add_argument("--certificate", required=True)
    ver.set_defaults(handler=_cmd_verify)

    ora = sub.add_parser("oracle", help="decide a small instance by exhaustive search")
    ora.add_argument("--problem", choices=CERT_PROBLEMS + ("generic-exclusive",), required=True)
    ora.add_argument("--k", type=int)
    ora.add_argument("--input", required=True)
    ora.add_argument("--certificate")
    ora.add_argument("--property-a")
    ora.add_argument("--property-b")
    ora.set_defaults(handler=_cmd_oracle)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_YES
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s: %(message)s")
    try:
        return args.handler(args)
    except (GraphPartError, OSError) as exc:
        print(f"graphpart: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
