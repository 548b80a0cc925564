"""
Verification suites

Each runner checks one family of results against exhaustive search and
returns a VerificationReport. Sweeps over G_{s,t} fan out one job per
(s, t, H) through the SweepService.
"""
import logging
import random
from itertools import combinations_with_replacement
from typing import Callable, Dict, List, Optional, Tuple

from pydantic import BaseModel

from .jobs import (
    JobResult,
    esg_equivalence_job,
    gin_g_job,
    gst_jobs,
    multipartite_boundary_job,
    oracle_sweep_job
)
from .report import VerificationReport, graph_record
from ..agents import CutSetDefender, GreedyAgent, OptimalAgent, RandomAgent
from ..analytics.sweep_analytics import SweepAnalytics
from ..config.settings import settings
from ..esg.builder import JRule
from ..esg.equivalence import consistent_rules, select_j_rule
from ..game.models import GameState, Player
from ..game.play import play
from ..game.solver import GameSolver
from ..graphs.corpus import (
    certificate_tree,
    diameter_two_certificate_graph,
    dominating_root_corpus,
    non_monotone_triple,
    sandwich_corpus
)
from ..graphs.families import complete, complete_multipartite, grid, path, path_power, star
from ..graphs.graph import Configuration, Graph
from ..gst.formulas import eta_multipartite_formula, multipartite_boundary_winner, multipartite_max_over_roots
from ..pebbling.certificates import InfinityCertificate, infinity_certificate
from ..pebbling.eta import EtaResult, eta, eta_rooted, fixed_strategy_threshold
from ..pebbling.solvability import pi
from ..services.sweep_service import SweepService

logger = logging.getLogger(__name__)


class SuiteOptions(BaseModel):
    """Per-run options; defaults come from settings"""
    s_max: int = settings.sweep.s_max
    t_values: Tuple[int, ...] = settings.sweep.t_values
    max_pebbles: int = settings.sweep.max_pebbles
    seed: int = settings.sweep.seed
    workers: int = settings.sweep.workers
    executor: str = settings.sweep.executor
    fallback: str = "esg"
    samples: int = settings.sweep.certificate_samples
    budget: int = settings.numbers.default_budget
    max_cut: int = settings.numbers.default_max_cut
    stretch: bool = False

    def parameters(self) -> Dict[str, object]:
        return self.model_dump()


def _merge(report: VerificationReport, results: List[JobResult]):
    for result in results:
        report.merge(result.cases, result.agreements, result.disagreements, result.findings)


def record_violations(report: VerificationReport, graph: Graph, result: EtaResult, **context):
    """Copy the non-monotone sizes of an eta sweep into the report as a finding"""
    if not result.violations:
        return
    report.add_finding("monotonicity-violation", {
        **context, "graph": graph_record(graph), "root": result.root,
        "sizes": list(result.violations), "budget": result.budget,
        "eta": result.to_dict()["eta"], "witness": None if result.witness is None else list(result.witness)
    })


def _gst_sweep(options: SuiteOptions, worker: Callable, label: str, s_min: int = 1) -> List[JobResult]:
    jobs = gst_jobs(range(s_min, options.s_max + 1), options.t_values, options.max_pebbles, options.fallback)
    service = SweepService(options.workers, options.executor)
    return service.run(worker, jobs, label)


def run_oracle_sweep(options: SuiteOptions, analytics: Optional[SweepAnalytics] = None) -> VerificationReport:
    """classify against brute force on every non-trivial configuration of every swept G_{s,t}"""
    report = VerificationReport("oracle-sweep", options.parameters())
    analytics = analytics if analytics is not None else SweepAnalytics()
    results = _gst_sweep(options, oracle_sweep_job, "oracle-sweep")
    _merge(report, results)
    for result in results:
        analytics.add_rows(result.rows)
    report.details["rules"] = analytics.rule_counts()
    report.details["winners"] = analytics.winner_split()
    report.details["jobs"] = len(results)
    return report.finish()


def run_gin_g(options: SuiteOptions, analytics: Optional[SweepAnalytics] = None) -> VerificationReport:
    """eta(G, r) = t + 2s + 4 / t + 2s + 3 on every labeled H, with the Defender witness at eta - 1"""
    report = VerificationReport("gin-g", options.parameters())
    results = _gst_sweep(options, gin_g_job, "gin-g")
    _merge(report, results)
    report.details["jobs"] = len(results)
    return report.finish()


def run_multipartite(options: SuiteOptions, analytics: Optional[SweepAnalytics] = None) -> VerificationReport:
    """
    The complete multipartite results

    Formula identity over part vectors with parts 3..5 and up to 4 parts,
    the boundary formula on swept members whose H is complete multipartite,
    and brute-force eta(K_{3,3}) = 11.
    """
    report = VerificationReport("multipartite", options.parameters())

    identity_cases = 0
    for m in range(2, 5):
        for parts in combinations_with_replacement(range(3, 6), m):
            identity_cases += 1
            formula = eta_multipartite_formula(parts)
            best = multipartite_max_over_roots(parts)
            report.check(formula == best, {"parts": list(parts), "expected": best, "got": formula,
                                           "check": "formula-vs-max-over-roots"})
    report.details["identity_part_vectors"] = identity_cases

    for counts, c_x, expected in (((2, 2), 6, Player.MOVER), ((2, 2), 4, Player.DEFENDER),
                                  ((1, 1, 1, 1), 4, Player.DEFENDER)):
        got = multipartite_boundary_winner(counts, c_x)
        report.check(got is expected, {"part_free_counts": list(counts), "c_x": c_x,
                                       "expected": expected.value, "got": got.value})

    results = _gst_sweep(options, multipartite_boundary_job, "multipartite")
    _merge(report, results)

    k33 = complete_multipartite([3, 3])
    result = eta(k33, budget=11, max_cut=0)
    record_violations(report, k33, result, name="K_3,3")
    report.check(result.is_finite and result.value == 11, {
        "graph": graph_record(k33), "expected": 11, "got": result.to_dict()["eta"], "check": "eta(K_3,3)"
    })

    if options.stretch:
        for v in (3, 4):
            for name, graph, expected in ((f"K_1,{v}", star(v), v + 4),
                                          (f"K_2,{v}", complete_multipartite([2, v]), v + 7)):
                got = eta(graph, budget=expected, max_cut=0)
                record_violations(report, graph, got, name=name)
                report.check(got.is_finite and got.value == expected, {
                    "name": name, "graph": graph_record(graph), "expected": expected, "got": got.to_dict()["eta"]
                })
    return report.finish()


def run_esg_equivalence(options: SuiteOptions, analytics: Optional[SweepAnalytics] = None) -> VerificationReport:
    """
    Brute force against the ESG on every swept boundary configuration

    The selected round rule must agree on every instance.
    """
    report = VerificationReport("esg-equivalence", options.parameters())
    results = _gst_sweep(options, esg_equivalence_job, "esg-equivalence")
    _merge(report, results)
    reports = [r for result in results for r in result.extra.get("reports", [])]

    consistent = consistent_rules(reports)
    selected = select_j_rule(reports) or JRule.default()
    for item in reports:
        agree = selected in item.agreeing
        report.check(agree, None if agree else {**item.to_dict(), "j_rule": selected.value})

    report.details["boundary_configurations"] = len(reports)
    report.details["consistent_rules"] = [rule.value for rule in consistent]
    report.details["selected_j_rule"] = selected.value if consistent else None
    report.details["per_rule_agreement"] = {
        rule.value: sum(1 for r in reports if rule in r.agreeing) for rule in JRule
    }
    if not consistent:
        logger.warning("no round rule agrees with brute force on every boundary configuration")
    return report.finish()


def _sample_supported(rng: random.Random, graph: Graph, cert: InfinityCertificate, size: int) -> Configuration:
    """A random size-pebble configuration with no pebbles on G_0 ∪ S"""
    allowed = [v for v in graph.vertices() if v not in cert.blocked]
    counts = [0] * graph.n
    for _ in range(size):
        counts[rng.choice(allowed)] += 1
    return tuple(counts)


GRID_CORNERS = (0, 3, 12, 15)


def _certificate_cases() -> List[Tuple[str, Graph, int]]:
    cases = [(f"grid(4,4) root {r}", grid(4, 4), r) for r in GRID_CORNERS]
    cases.append(("certificate tree", certificate_tree(), 0))
    cases.append(("diameter-2 graph", diameter_two_certificate_graph(), 0))
    return cases


def run_infinity(options: SuiteOptions, analytics: Optional[SweepAnalytics] = None) -> VerificationReport:
    """
    Cut-set certificates and the soundness of their Defender strategy

    For every certified graph, sampled supported configurations of at most
    12 pebbles are solved with Mover searching every line against the fixed
    cut-set Defender, and a 20-pebble random game is played out.
    """
    report = VerificationReport("infinity", options.parameters())
    rng = random.Random(options.seed)
    exhaustive_limit = 12
    samples = max(1, options.samples // len(_certificate_cases()))

    for name, graph, root in _certificate_cases():
        rooted = graph.with_root(root)
        cert = infinity_certificate(rooted, root, options.max_cut)
        found = cert is not None and cert.validate(rooted)
        report.check(found, {"name": name, "graph": graph_record(rooted), "root": root,
                             "expected": "certificate", "got": None if cert is None else cert.to_dict()})
        if not found:
            continue

        defender = CutSetDefender.from_certificate(cert)
        solver = GameSolver(rooted)
        for _ in range(samples):
            config = _sample_supported(rng, rooted, cert, rng.randint(2, exhaustive_limit))
            winner = solver.solve_against(GameState.initial(config), defender)
            report.check(winner is Player.DEFENDER, {
                "name": name, "graph": graph_record(rooted), "root": root, "config": list(config),
                "certificate": cert.to_dict(), "expected": Player.DEFENDER.value, "got": winner.value,
                "check": "exhaustive-mover-vs-cut-set"
            })

        config = _sample_supported(rng, rooted, cert, 20)
        mover = RandomAgent(seed=options.seed)
        transcript = play(rooted, GameState.initial(config), mover, defender)
        report.check(transcript.winner is Player.DEFENDER, {
            "name": name, "graph": graph_record(rooted), "root": root, "config": list(config),
            "expected": Player.DEFENDER.value, "got": transcript.winner.value, "check": "random-mover-play"
        })

    square = grid(4, 4)
    uncertified = [
        r for r in square.vertices()
        if r not in GRID_CORNERS and infinity_certificate(square.with_root(r), r, options.max_cut) is None
    ]
    if uncertified:
        report.add_finding("no-certificate-non-corner-roots", {
            "graph": graph_record(square), "roots": uncertified, "max_cut": options.max_cut
        })
    report.details["grid(4,4) scope"] = (
        "the cut-set certificate covers the corner roots 0, 3, 12 and 15; "
        "non-corner roots are out of scope for it and their eta is left open"
    )
    for n in range(2, 6):
        kn = complete(n, root=0)
        cert = infinity_certificate(kn, 0, options.max_cut)
        report.check(cert is None, {"graph": graph_record(kn), "root": 0, "expected": None,
                                    "got": None if cert is None else cert.to_dict()})
    return report.finish()


def path_bound(n: int) -> int:
    """floor(3/2 * 2^(n-1) - n)"""
    return 3 * 2 ** (n - 1) // 2 - n


def run_paths(options: SuiteOptions, analytics: Optional[SweepAnalytics] = None) -> VerificationReport:
    """
    eta on paths against the upper bound 3/2 * 2^(n-1) - n and pi(P_n) = 2^(n-1)

    With stretch: eta(P_6) = 35, eta(P_n^(n-1)) = n, and the certificate
    search on P_9^2.
    """
    report = VerificationReport("paths", options.parameters())
    lengths = [4, 5, 6] if options.stretch else [4, 5]
    for n in lengths:
        graph = path(n)
        bound = path_bound(n)
        result = eta(graph, budget=bound, max_cut=0)
        record_violations(report, graph, result, name=f"P_{n}")
        report.check(result.is_finite and result.value <= bound, {
            "graph": graph_record(graph), "expected": f"<= {bound}", "got": result.to_dict()["eta"]
        })
        p = pi(graph)
        report.check(p == 2 ** (n - 1) and (not result.is_finite or p <= result.value), {
            "graph": graph_record(graph), "expected": 2 ** (n - 1), "got": p, "check": "pi"
        })
        if n == 6 and result.is_finite:
            report.check(result.value == 35, {"graph": graph_record(graph), "expected": 35, "got": result.value})
        report.details[f"P_{n}"] = {"eta": result.value, "pi": p, "bound": bound}

    graph = path(4)
    optimal = eta_rooted(graph, 0, budget=path_bound(4), max_cut=0)
    record_violations(report, graph, optimal, name="P_4")
    greedy = fixed_strategy_threshold(graph, 0, GreedyAgent(), OptimalAgent(), budget=path_bound(4) + 4)
    report.details["P_4 greedy Mover"] = {"eta": optimal.value, "greedy_threshold": greedy.to_dict()["eta"]}
    if not greedy.is_finite or greedy.value > optimal.value:
        report.add_finding("greedy-mover-not-optimal", {"graph": graph_record(graph.with_root(0)),
                                                        "eta": optimal.value, "greedy": greedy.to_dict()["eta"]})

    if options.stretch:
        for n in range(2, 6):
            pp = path_power(n, n - 1)
            result = eta(pp, budget=n, max_cut=0)
            record_violations(report, pp, result, name=f"P_{n}^({n - 1})")
            report.check(result.is_finite and result.value == n, {
                "graph": graph_record(pp), "expected": n, "got": result.to_dict()["eta"]
            })
        p9 = path_power(9, 2)
        certified = [r for r in p9.vertices() if infinity_certificate(p9, r, options.max_cut) is not None]
        report.add_finding("path-power-certificate-search", {
            "graph": graph_record(p9), "max_cut": options.max_cut, "certified_roots": certified
        })
    return report.finish()


def root_edge_monotonicity(report: VerificationReport, name: str, graph: Graph, budget: int):
    """
    eta(G - rv, r) >= eta(G, r) for every root edge rv whose removal keeps G connected

    Both sweeps report their violations.
    """
    root = graph.root
    base = eta_rooted(graph, root, budget=budget, max_cut=0)
    record_violations(report, graph, base, name=name)
    for v in sorted(graph.adjacency[root]):
        smaller = graph.without_edge(root, v)
        if not smaller.is_connected():
            continue
        reduced = eta_rooted(smaller, root, budget=budget, max_cut=0)
        record_violations(report, smaller, reduced, name=name, removed_edge=[root, v])
        if base.is_finite and reduced.is_finite:
            report.check(reduced.value >= base.value, {
                "name": name, "graph": graph_record(graph), "removed_edge": [root, v], "root": root,
                "expected": f">= {base.value}", "got": reduced.value, "check": "root-edge-monotonicity"
            })


def run_sandwich(options: SuiteOptions, analytics: Optional[SweepAnalytics] = None) -> VerificationReport:
    """
    |V| <= pi <= eta, eta(K_n) = n, dominating roots, root-edge monotonicity,
    the non-monotone triple and the product counterexample
    """
    report = VerificationReport("sandwich", options.parameters())
    budget = options.budget

    for n in range(2, 7):
        kn = complete(n)
        result = eta(kn, budget=max(budget, n), max_cut=0)
        record_violations(report, kn, result, name=f"K_{n}")
        report.check(result.is_finite and result.value == n, {
            "graph": graph_record(kn), "expected": n, "got": result.to_dict()["eta"], "check": "eta(K_n)"
        })

    for entry in sandwich_corpus():
        result = eta(entry.graph, budget=budget, max_cut=options.max_cut)
        record_violations(report, entry.graph, result, name=entry.name)
        if not result.is_finite:
            report.add_finding("eta-not-finite-within-budget", {"name": entry.name, **result.to_dict()})
            continue
        p = pi(entry.graph)
        n = entry.graph.n
        report.check(n <= p <= result.value, {
            "name": entry.name, "graph": graph_record(entry.graph),
            "expected": "|V| <= pi <= eta", "got": {"n": n, "pi": p, "eta": result.value}
        })
        report.details[entry.name] = {"n": n, "pi": p, "eta": result.value}

    for entry in dominating_root_corpus():
        n = entry.graph.n
        result = eta_rooted(entry.graph, 0, budget=n + 2, max_cut=0)
        record_violations(report, entry.graph, result, name=entry.name)
        report.check(result.is_finite and result.value == n, {
            "name": entry.name, "graph": graph_record(entry.graph), "root": 0,
            "expected": n, "got": result.to_dict()["eta"], "check": "dominating-root"
        })

    for entry in sandwich_corpus():
        root_edge_monotonicity(report, entry.name, entry.graph.with_root(0), budget)

    _non_monotone_triple(report, options)

    p4 = eta(path(4), budget=path_bound(4), max_cut=0)
    record_violations(report, path(4), p4, name="P_4")
    grid_cert = infinity_certificate(grid(4, 4, root=0), 0, options.max_cut)
    report.check(p4.is_finite and grid_cert is not None, {
        "expected": "eta(P_4) finite, grid(4,4) certified",
        "got": {"P_4": p4.to_dict()["eta"], "grid": None if grid_cert is None else grid_cert.to_dict()},
        "check": "product-counterexample"
    })
    return report.finish()


def _edge_set(graph: Graph) -> frozenset:
    return frozenset(graph.edges())


def _non_monotone_triple(report: VerificationReport, options: SuiteOptions):
    """K_6 ⊃ D ⊃ P_6 by edges with eta finite, infinite, finite"""
    (_, big), (_, middle), (_, small) = [(e.name, e.graph) for e in non_monotone_triple()]
    nested = _edge_set(small) < _edge_set(middle) < _edge_set(big)
    report.check(nested, {"expected": "P_6 ⊂ D ⊂ K_6", "got": "edge sets not nested", "check": "triple-nesting"})

    top = eta(big, budget=max(options.budget, 6), max_cut=0)
    record_violations(report, big, top, name="K_6")
    report.check(top.is_finite and top.value == 6, {
        "graph": graph_record(big), "expected": 6, "got": top.to_dict()["eta"], "check": "triple-K_6"
    })
    cert = infinity_certificate(middle.with_root(0), 0, options.max_cut)
    report.check(cert is not None, {
        "graph": graph_record(middle), "root": 0, "expected": "certificate", "got": None, "check": "triple-middle"
    })
    if options.stretch:
        bottom = eta_rooted(small, 0, budget=path_bound(6), max_cut=0)
        record_violations(report, small, bottom, name="P_6")
        report.check(bottom.is_finite, {
            "graph": graph_record(small), "root": 0, "expected": "finite",
            "got": bottom.to_dict()["eta"], "check": "triple-P_6"
        })
    else:
        report.details["triple P_6"] = "finiteness checked with --stretch"


SUITES: Dict[str, Callable[..., VerificationReport]] = {
    "oracle-sweep": run_oracle_sweep,
    "gin-g": run_gin_g,
    "multipartite": run_multipartite,
    "esg-equivalence": run_esg_equivalence,
    "infinity": run_infinity,
    "paths": run_paths,
    "sandwich": run_sandwich,
}
