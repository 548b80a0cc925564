"""
Command-line interface for the Two-Player Pebbling toolkit
Solves positions, computes pebbling numbers, classifies G_{s,t}
configurations and runs the verification suites
"""
import argparse
import logging
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional

# Add src to path
sys.path.insert(0, str(Path(__file__).parent))

from src.agents import HumanAgent, OptimalAgent
from src.config.settings import settings
from src.esg import read_esg, solve_esg
from src.game import GameSolver, GameState, Player, play
from src.graphs import FamilySpec, FamilyType, GstDescriptor, Graph, build_family
from src.graphs.io import parse_configuration_text, parse_edge_list, read_configuration, read_graph
from src.gst import Fallback, classify
from src.pebbling import EtaKind, eta, eta_rooted, infinity_certificate, pi, pi_rooted
from src.utils import (
    BudgetExceededError,
    MalformedInputError,
    PebblingError,
    StrategyFault,
    configure_logging,
    dumps_json,
    write_json
)
from src.verification import SUITES, SuiteManager, SuiteOptions, graph_record

logger = logging.getLogger("pebbling.cli")

EXIT_OK = 0
EXIT_DISAGREEMENT = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3
EXIT_STRATEGY_FAULT = 4

FAMILIES = [
    FamilyType.COMPLETE, FamilyType.PATH, FamilyType.PATH_POWER, FamilyType.GRID,
    FamilyType.CYCLE, FamilyType.STAR, FamilyType.COMPLETE_MULTIPARTITE,
]


def _ints(text: str) -> List[int]:
    try:
        return [int(tok) for tok in text.replace(",", " ").split()]
    except ValueError:
        raise MalformedInputError(f"expected integers, got {text!r}") from None


def _emit(args: argparse.Namespace, data: Dict[str, Any]):
    """Print the report, or write it when --output is given"""
    if getattr(args, "output", None):
        path = write_json(data, args.output)
        logger.info(f"report written to {path}")
    else:
        sys.stdout.write(dumps_json(data))


def load_graph(args: argparse.Namespace) -> Graph:
    """Graph from a file argument or from --family and its parameters"""
    if args.graph:
        graph = read_graph(args.graph)
    elif args.family:
        kind = FamilyType(args.family)
        params: Dict[str, Any] = {}
        for name in ("n", "m", "k", "v"):
            value = getattr(args, name)
            if value is not None:
                params[name] = value
        if args.parts:
            params["parts"] = _ints(args.parts)
        graph = build_family(FamilySpec(kind, params))
    else:
        raise MalformedInputError("give a graph file or --family")
    root = getattr(args, "root", None)
    return graph.with_root(root) if root is not None else graph


def load_configuration(args: argparse.Namespace, graph: Graph):
    if getattr(args, "counts", None):
        return parse_configuration_text(args.counts, graph.n)
    if getattr(args, "config", None):
        return read_configuration(args.config, graph.n)
    raise MalformedInputError("give a configuration file or --counts")


def cmd_solve(args: argparse.Namespace) -> int:
    graph = load_graph(args)
    config = load_configuration(args, graph)
    solver = GameSolver(graph)
    state = GameState.initial(config)
    winner = solver.solve(state)
    report = {
        "graph": graph_record(graph),
        "root": graph.root,
        "config": list(config),
        "winner": winner.value,
        "winning_moves": [m.to_dict() for m in solver.winning_moves(state)]
    }
    if args.transcript:
        agent = OptimalAgent()
        transcript = play(graph, state, agent, agent)
        Path(args.transcript).write_text(transcript.to_jsonl())
        report["transcript"] = args.transcript
    _emit(args, report)
    return EXIT_OK


def cmd_pi(args: argparse.Namespace) -> int:
    graph = load_graph(args)
    limit = args.limit or settings.numbers.pi_search_limit
    value = pi_rooted(graph, graph.root, limit) if graph.root is not None else pi(graph, limit)
    _emit(args, {"graph": graph_record(graph), "root": graph.root, "pi": value})
    return EXIT_OK


def cmd_eta(args: argparse.Namespace) -> int:
    graph = load_graph(args)
    if graph.root is not None:
        result = eta_rooted(graph, graph.root, args.budget, args.max_cut)
    else:
        result = eta(graph, args.budget, args.max_cut)
    report = {"graph": graph_record(graph), **result.to_dict(), "pi": None}
    if result.is_finite:
        # pi <= eta, so a pi search capped at eta always settles
        limit = result.value
        report["pi"] = pi_rooted(graph, graph.root, limit) if graph.root is not None else pi(graph, limit)
    _emit(args, report)
    if result.kind == EtaKind.EXCEEDS_BUDGET:
        raise BudgetExceededError(result.budget)
    return EXIT_OK


def cmd_certify(args: argparse.Namespace) -> int:
    graph = load_graph(args)
    roots = [graph.root] if graph.root is not None else list(graph.vertices())
    certificates = {}
    for r in roots:
        cert = infinity_certificate(graph.with_root(r), r, args.max_cut)
        certificates[str(r)] = cert.to_dict() if cert is not None else None
    _emit(args, {"graph": graph_record(graph), "max_cut": args.max_cut, "certificates": certificates})
    return EXIT_OK


def cmd_classify(args: argparse.Namespace) -> int:
    descriptor = GstDescriptor(s=args.s, t=args.t, h_edges=frozenset(parse_edge_list(args.h_edges or "")))
    graph = descriptor.to_graph()
    config = load_configuration(args, graph)
    outcome = classify(descriptor, config, Fallback(args.fallback))
    _emit(args, {"gst": descriptor.to_dict(), "config": list(config), **outcome.to_dict()})
    return EXIT_OK


def cmd_esg(args: argparse.Namespace) -> int:
    instance = read_esg(args.instance)
    if args.rounds is not None:
        instance = instance.with_rounds(args.rounds)
    _emit(args, {"instance": instance.to_dict(), "winner": solve_esg(instance).value})
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    options = SuiteOptions(
        s_max=args.s_max,
        t_values=tuple(range(2, args.t_max + 1)),
        max_pebbles=args.max_pebbles,
        seed=args.seed,
        workers=args.workers,
        executor=args.executor,
        fallback=args.fallback,
        stretch=args.stretch
    )
    manager = SuiteManager()
    report = manager.run(args.suite, options)
    data = report.to_dict(include_timing=args.timing or settings.report.include_timing)
    if args.json:
        write_json(data, args.json)
    if args.csv:
        manager.analytics.to_csv(args.csv)
    if not args.json or args.output:
        _emit(args, data)
    return EXIT_OK if report.passed else EXIT_DISAGREEMENT


def cmd_play(args: argparse.Namespace) -> int:
    graph = load_graph(args)
    config = load_configuration(args, graph)
    engine = OptimalAgent()
    human = HumanAgent() if args.interactive else engine
    mover, defender = (human, engine) if args.side == Player.MOVER.value else (engine, human)
    transcript = play(graph, GameState.initial(config), mover, defender)
    if args.interactive:
        print(f"\n{transcript.winner.value} wins")
    _emit(args, transcript.to_dict())
    return EXIT_OK


def _add_graph_arguments(parser: argparse.ArgumentParser):
    parser.add_argument("graph", nargs="?", help="Graph file ('n root' then 'u v' lines)")
    parser.add_argument("--family", choices=[f.value for f in FAMILIES])
    parser.add_argument("--n", type=int)
    parser.add_argument("--m", type=int)
    parser.add_argument("--k", type=int)
    parser.add_argument("--v", type=int)
    parser.add_argument("--parts", help="Part sizes, e.g. '3,3'")
    parser.add_argument("--root", type=int)


def _add_config_arguments(parser: argparse.ArgumentParser):
    parser.add_argument("--config", help="Configuration file (n integers)")
    parser.add_argument("--counts", help="Configuration inline, e.g. '0 0 4'")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pebbling", description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--log-level", default=None, help="Override PEBBLING_LOG_LEVEL")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="Winner of a configuration with Mover to move")
    _add_graph_arguments(p)
    _add_config_arguments(p)
    p.add_argument("config_file", nargs="?", help="Configuration file")
    p.add_argument("--transcript", help="Write an optimal-play transcript (JSON lines)")
    p.add_argument("--output")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("pi", help="Classical pebbling number")
    _add_graph_arguments(p)
    p.add_argument("--limit", type=int)
    p.add_argument("--output")
    p.set_defaults(func=cmd_pi)

    p = sub.add_parser("eta", help="Two-player pebbling number")
    _add_graph_arguments(p)
    p.add_argument("--budget", type=int, default=settings.numbers.default_budget)
    p.add_argument("--max-cut", type=int, default=settings.numbers.default_max_cut)
    p.add_argument("--output")
    p.set_defaults(func=cmd_eta)

    p = sub.add_parser("certify-infinite", help="Search for a cut-set certificate of infinite eta")
    _add_graph_arguments(p)
    p.add_argument("--max-cut", type=int, default=settings.numbers.default_max_cut)
    p.add_argument("--output")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("classify", help="Classify a configuration on a member of G_{s,t}")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--h-edges", default="", help="Edges of H on 0..s-1, e.g. '0-1,1-2'")
    _add_config_arguments(p)
    p.add_argument("--fallback", choices=[f.value for f in Fallback], default=Fallback.ESG.value)
    p.add_argument("--output")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("esg", help="Solve an Element Selecting Game instance")
    p.add_argument("instance", help="ESG file ('u p j', universe, then p set lines)")
    p.add_argument("--rounds", type=int, help="Override the instance's round count")
    p.add_argument("--output")
    p.set_defaults(func=cmd_esg)

    p = sub.add_parser("verify", help="Run a verification suite")
    p.add_argument("suite", choices=sorted(SUITES))
    p.add_argument("--s-max", type=int, default=settings.sweep.s_max)
    p.add_argument("--t-max", type=int, default=max(settings.sweep.t_values))
    p.add_argument("--max-pebbles", type=int, default=settings.sweep.max_pebbles)
    p.add_argument("--seed", type=int, default=settings.sweep.seed)
    p.add_argument("--workers", type=int, default=settings.sweep.workers)
    p.add_argument("--executor", choices=["process", "thread"], default=settings.sweep.executor)
    p.add_argument("--fallback", choices=[f.value for f in Fallback], default=Fallback.ESG.value)
    p.add_argument("--json", help="Write the report here")
    p.add_argument("--csv", help="Write the per-configuration sweep table here")
    p.add_argument("--output")
    p.add_argument("--timing", action="store_true", help="Include wall time in the report")
    p.add_argument("--stretch", action="store_true", help="Include the long-running checks")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("play", help="Play a game out, optionally against the engine at a prompt")
    _add_graph_arguments(p)
    _add_config_arguments(p)
    p.add_argument("--interactive", action="store_true")
    p.add_argument("--side", choices=[pl.value for pl in Player], default=Player.MOVER.value)
    p.add_argument("--output")
    p.set_defaults(func=cmd_play)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.log_level)
    if getattr(args, "config_file", None) and not args.config:
        args.config = args.config_file
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        logger.warning(str(exc))
        return EXIT_BUDGET
    except StrategyFault as exc:
        logger.error(str(exc))
        return EXIT_STRATEGY_FAULT
    except (PebblingError, ValueError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
