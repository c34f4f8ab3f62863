"""
Command-line front end.

    build DESCRIPTOR [--output FILE]
    alpha [GRAPH] [--descriptor D] [--enumerate] [--cap N]
    alpha-m [GRAPH] [--descriptor D] --m M [--oracle]
    verify [GRAPH] [--descriptor D] [--suite NAME ...] [--samples K] [--seed S]

GRAPH is an interchange JSON file, or ``-`` for standard input. Exit status is
0 on success, 1 when a check fails and 2 on bad input or an exceeded cap.
"""
import argparse
import logging
import sys

from symmetric_systems import __version__
from symmetric_systems.analysis.context import SystemAnalysis
from symmetric_systems.analysis.cross_families import (
    alpha_m_bound,
    brute_force_alpha_m,
    classify_optimal,
    is_cross_family,
)
from symmetric_systems.analysis.report import Check, VerificationReport
from symmetric_systems.app.suites import SUITE_ALIASES, SUITE_ORDER, run_suites
from symmetric_systems.core.config import (
    DEFAULT_ENUMERATION_CAP,
    DEFAULT_SAMPLES,
    DEFAULT_SEED,
    VERTEX_CAP_ENV,
)
from symmetric_systems.core.errors import PreconditionError, SymmetricSystemError
from symmetric_systems.core.graph_io import dumps_graph, load_graph, save_graph
from symmetric_systems.systems import build_system, predicted_alpha

logger = logging.getLogger(__name__)

EXIT_OK, EXIT_USAGE = 0, 2


def configure_logging(verbosity: int):
    level = logging.WARNING if verbosity <= 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    logging.basicConfig(
        level=level,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
        force=True,
    )


def load_analysis(args) -> SystemAnalysis:
    """The system named by ``--descriptor``, or the graph file given as GRAPH."""
    if args.descriptor:
        return SystemAnalysis.from_built(build_system(args.descriptor), enumeration_cap=args.cap)
    if not args.graph:
        raise PreconditionError("give a graph file (or '-') or --descriptor")
    graph, generators = load_graph(args.graph)
    return SystemAnalysis(graph, generators, enumeration_cap=args.cap)


def emit(report: VerificationReport, as_json: bool):
    print(report.to_json() if as_json else report.to_text())


# --- commands -----------------------------------------------------------------------


def cmd_build(args) -> int:
    built = build_system(args.system)
    if args.output:
        save_graph(args.output, built.graph, built.generators)
    else:
        print(dumps_graph(built.graph, built.generators))
    return EXIT_OK


def cmd_alpha(args) -> int:
    a = load_analysis(args)
    report = VerificationReport(a.subject)
    report.facts["vertices"] = a.graph.vertex_count
    report.facts["alpha"] = a.alpha
    report.facts["witness"] = list(a.alpha_report.witness.members())
    if a.graph.labels:
        report.facts["witness_labels"] = [a.graph.label(v) for v in a.alpha_report.witness]
    if args.descriptor:
        prediction = predicted_alpha(args.descriptor)
        report.facts["predicted"] = prediction.value
        report.facts["prediction_valid"] = prediction.valid
        report.facts["prediction_condition"] = prediction.condition_text
        if prediction.valid:
            report.add(Check.expect(
                "predicted-alpha",
                prediction.value == a.alpha,
                f"predicted {prediction.value}, computed {a.alpha}",
            ))
        else:
            report.add(Check.skipped("predicted-alpha", f"outside the proven range ({prediction.condition_text})"))
    if args.enumerate:
        family = a.maximum_sets
        report.facts["maximum_sets"] = len(family)
        report.facts["truncated"] = family.truncated
    emit(report, args.json)
    return report.exit_status


def cmd_alpha_m(args) -> int:
    a = load_analysis(args)
    g = a.graph
    bound = alpha_m_bound(g.vertex_count, a.alpha, args.m)
    report = VerificationReport(a.subject)
    report.facts["m"] = args.m
    report.facts["alpha"] = a.alpha
    report.facts["regime"] = bound.regime
    report.facts["bound"] = bound.bound
    if not a.connected:
        logger.warning("graph is disconnected: the closed form assumes a connected system")
        report.facts["warning"] = "graph is disconnected: the closed form assumes a connected system"
    if args.oracle:
        value, family = brute_force_alpha_m(g, args.m)
        report.facts["oracle"] = value
        report.facts["witness"] = family.to_list()
        report.add(Check.expect("witness-is-cross-family", is_cross_family(g, family), f"total {family.total}"))
        hypotheses = a.connected and a.certified_transitive
        if value == bound.bound:
            report.add(Check.passed("oracle-agrees", f"bound {bound.bound}, oracle {value}"))
            classified = classify_optimal(g, a.generators, family, a.alpha)
            report.facts["case"] = classified.case_tag
            for note in classified.notes:
                report.facts.setdefault("notes", []).append(note)
            if classified.falsified:
                report.add(Check.failed("equality-case", f"{family.to_list()} matches no equality case"))
        elif hypotheses and value > bound.bound:
            report.add(Check.failed("oracle-agrees", f"oracle {value} exceeds the bound {bound.bound}"))
        elif hypotheses:
            report.add(Check.passed("oracle-agrees", f"oracle {value} below the bound {bound.bound} (imprimitive system)"))
        else:
            report.add(Check.skipped("oracle-agrees", f"bound {bound.bound}, oracle {value}; hypotheses fail"))
    emit(report, args.json)
    return report.exit_status


def cmd_verify(args) -> int:
    a = load_analysis(args)
    report = VerificationReport(a.subject, seed=args.seed)
    report.extend(run_suites(a, args.suite or ["all"], args.samples, args.seed))
    if "verdict" in vars(a):
        report.facts["primitivity"] = a.verdict.status
    emit(report, args.json)
    return report.exit_status


# --- parser -------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("-v", "--verbose", action="count", default=0, help="log progress (-vv for debug)")

    source = argparse.ArgumentParser(add_help=False, parents=[common])
    source.add_argument("graph", nargs="?", help="graph JSON file, or '-' for standard input")
    source.add_argument("--descriptor", "-d", help="build the system instead, e.g. subsets:n=5,k=2,t=1")
    source.add_argument("--cap", type=int, default=DEFAULT_ENUMERATION_CAP, help="maximum sets to enumerate")

    parser = argparse.ArgumentParser(
        prog="symmetric-systems",
        description="Exact combinatorics of symmetric systems.",
        epilog=f"The vertex cap can be raised with {VERTEX_CAP_ENV}.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", parents=[common], help="build a system and print its graph JSON")
    p.add_argument("system", help="descriptor, e.g. perms:n=4,t=1")
    p.add_argument("--output", "-o", help="write to FILE instead of standard output")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("alpha", parents=[source], help="independence number and a witness")
    p.add_argument("--enumerate", action="store_true", help="also count all maximum independent sets")
    p.set_defaults(func=cmd_alpha)

    p = sub.add_parser("alpha-m", parents=[source], help="cross-family bound for m parts")
    p.add_argument("--m", type=int, required=True, help="number of parts")
    p.add_argument("--oracle", action="store_true", help="also run the exact search")
    p.set_defaults(func=cmd_alpha_m)

    p = sub.add_parser("verify", parents=[source], help="run verification suites")
    p.add_argument(
        "--suite", action="append", choices=SUITE_ORDER + tuple(SUITE_ALIASES) + ("all",),
        help="suite to run (repeatable)",
    )
    p.add_argument("--samples", type=int, default=DEFAULT_SAMPLES, help="random samples per suite")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED, help="seed for the random samples")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.verbose)
    if getattr(args, "m", 1) < 1:
        parser.error("--m must be at least 1")
    if getattr(args, "cap", 1) < 1:
        parser.error("--cap must be at least 1")
    if getattr(args, "samples", 0) < 0:
        parser.error("--samples must not be negative")
    try:
        return args.func(args)
    except SymmetricSystemError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
