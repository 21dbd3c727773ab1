"""
mdcolor - Majority Dominator Coloring Toolkit
LangGraph-based command pipeline: load the graph, run one command, report.

Commands:
    solve    exact χ_md with witness and the bound chain
    verify   check a coloring file against a graph
    family   closed form and witness for a family such as path:13
    check    run named theorem suites
    explore  list graphs with χ_md = χ_d, graphs attaining the α bound, or
             corona values (--problem)
"""

import argparse
import json
import os
import sys
from dataclasses import dataclass, field
from datetime import datetime, timezone

UTC = timezone.utc
from typing import Any, Dict, List, Optional, Tuple, TypedDict

from dotenv import load_dotenv
from langgraph.graph import END, StateGraph
from rich.console import Console

from utils.families import chi_md_closed_form
from utils.graph import FamilySpec, Graph, family_graph
from utils.harness import (
    SUITES,
    GraphPopulation,
    PopulationMode,
    SuiteOptions,
    default_bipartite_bases,
    default_nonbipartite_bases,
    explore_alpha_bound_sharpness,
    explore_corona_values,
    explore_equality_chi_d,
    run_suite,
)
from utils.invariants import (
    SOLVED,
    UNDECIDED,
    chromatic_number,
    dominator_chromatic_number,
    domination_number,
    independence_number,
    matching_number,
)
from utils.io_formats import parse_graph_file, read_coloring_file
from utils.mdc import Coloring, mdc_number, verify_mdc
from utils import reporting


# Load environment variables
load_dotenv()


COMMANDS = ('solve', 'verify', 'family', 'check', 'explore')
PROBLEMS = ('chi_d', 'alpha_sharpness', 'corona')

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_INPUT_ERROR = 2
EXIT_BUDGET = 3

EXIT_CODES = {
    'COMPLETED': EXIT_OK,
    'FAILED': EXIT_VIOLATION,
    'INPUT_ERROR': EXIT_INPUT_ERROR,
    'BUDGET_EXHAUSTED': EXIT_BUDGET,
}


# ============================================================================
# CONFIGURATION
# ============================================================================

def _env_int(name: str) -> Optional[int]:
    raw = os.getenv(name)
    if raw is None or raw.strip() == '':
        return None
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{name} must be an integer, got '{raw}'") from None


@dataclass
class RunConfig:
    """
    One CLI invocation.

    At most one graph source (input path or family spec) may be given; solve,
    verify and family require one.
    """
    command: str
    input_path: Optional[str] = None
    family: Optional[str] = None
    graph_format: str = 'auto'
    coloring_path: Optional[str] = None
    output_format: str = 'text'
    output_path: Optional[str] = None
    budget: Optional[int] = None
    seed: int = 42
    suites: List[str] = field(default_factory=list)
    max_n: int = 5
    workers: int = 1
    problem: str = 'chi_d'

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise ValueError(f"Unknown command '{self.command}' (expected one of {', '.join(COMMANDS)})")
        if self.input_path and self.family:
            raise ValueError("Give either --input or --family, not both")
        if self.command in ('solve', 'verify') and not (self.input_path or self.family):
            raise ValueError(f"'{self.command}' needs a graph: --input PATH or --family SPEC")
        if self.command == 'family' and not self.family:
            raise ValueError("'family' needs --family SPEC, e.g. path:13")
        if self.command == 'verify' and not self.coloring_path:
            raise ValueError("'verify' needs --coloring PATH")
        if self.output_format not in ('text', 'json'):
            raise ValueError(f"Output format must be text or json, got '{self.output_format}'")
        if self.budget is not None and self.budget < 1:
            raise ValueError(f"Node budget must be positive, got {self.budget}")
        if self.workers < 1:
            raise ValueError(f"Worker count must be positive, got {self.workers}")
        for name in self.suites:
            if name not in SUITES:
                raise ValueError(f"Unknown suite '{name}' (known: {', '.join(SUITES)})")
        if self.problem not in PROBLEMS:
            raise ValueError(f"Unknown problem '{self.problem}' (expected one of {', '.join(PROBLEMS)})")


# ============================================================================
# STATE DEFINITION
# ============================================================================

class RunState(TypedDict):
    """
    State tracked throughout the LangGraph workflow.
    """
    config: RunConfig

    # Graph loaded from --input or --family
    graph: Optional[Graph]

    # Workflow status: 'PROCESSING', 'COMPLETED', 'FAILED', 'BUDGET_EXHAUSTED', 'INPUT_ERROR'
    workflow_status: str

    # Command result, rendered as text or JSON at the end
    report: Dict[str, Any]

    # Timestamped trail of what each node did
    audit_log: List[str]


def _log(state: RunState, message: str):
    state['audit_log'].append(f"[{datetime.now(UTC).isoformat()}] {message}")


def _input_error(state: RunState, error: Exception) -> RunState:
    state['workflow_status'] = 'INPUT_ERROR'
    state['report'] = {'error': str(error)}
    _log(state, f"Input error: {error}")
    reporting.log_fail(str(error))
    return state


# ============================================================================
# LOAD NODE
# ============================================================================

def load_node(state: RunState) -> RunState:
    config = state['config']
    try:
        if config.input_path:
            state['graph'] = parse_graph_file(config.input_path, config.graph_format)
            _log(state, f"Loaded {config.input_path}")
        elif config.family:
            state['graph'] = family_graph(FamilySpec.parse(config.family))
            _log(state, f"Built family {config.family}")
    except (ValueError, OSError) as e:
        return _input_error(state, e)
    state['workflow_status'] = 'PROCESSING'
    return state


def route_command(state: RunState) -> str:
    if state['workflow_status'] == 'INPUT_ERROR':
        return 'input_error'
    return state['config'].command


# ============================================================================
# COMMAND NODES
# ============================================================================

def solve_node(state: RunState) -> RunState:
    """χ_md with witness plus the bound-chain invariants."""
    g = state['graph']
    budget = state['config'].budget
    if g.n == 0:
        return _input_error(state, ValueError("Graph has no vertices"))

    mdc = mdc_number(g, budget)
    chi = chromatic_number(g, budget)
    chi_d = dominator_chromatic_number(g, budget)
    gamma = domination_number(g)
    alpha = independence_number(g)
    nu = matching_number(g)

    decided = mdc.solved and chi.solved and chi_d.solved
    status = SOLVED if decided else UNDECIDED
    state['report'] = {
        'n': g.n,
        'm': g.edge_count,
        'chi_md': mdc.value,
        'coloring': list(mdc.witness.colors) if mdc.witness is not None else None,
        'bounds': {
            'chi': chi.value,
            'chi_d': chi_d.value,
            'gamma': gamma.value,
            'alpha': alpha.value,
            'matching': nu.value,
        },
        'stats': {
            'nodes': mdc.nodes_explored + chi.nodes_explored + chi_d.nodes_explored,
            'status': status,
        },
    }
    state['workflow_status'] = 'COMPLETED' if decided else 'BUDGET_EXHAUSTED'
    _log(state, f"Solve: chi_md={mdc.value} status={status}")
    return state


def verify_node(state: RunState) -> RunState:
    g = state['graph']
    try:
        coloring = Coloring(tuple(read_coloring_file(state['config'].coloring_path)))
        violations = verify_mdc(g, coloring)
    except (ValueError, OSError) as e:
        return _input_error(state, e)

    state['report'] = {
        'n': g.n,
        'k': coloring.k,
        'ok': not violations,
        'violations': [v.to_dict() for v in violations],
        'violation_text': [v.describe() for v in violations],
    }
    state['workflow_status'] = 'FAILED' if violations else 'COMPLETED'
    _log(state, f"Verify: {len(violations)} violation(s)")
    return state


def family_node(state: RunState) -> RunState:
    spec = FamilySpec.parse(state['config'].family)
    formula = chi_md_closed_form(spec)
    witness_ok = not verify_mdc(state['graph'], formula.witness)
    state['report'] = {
        'family': str(spec),
        'n': spec.order,
        'value': formula.value,
        'witness': list(formula.witness.colors),
        'provenance': formula.provenance,
        'witness_ok': witness_ok,
    }
    state['workflow_status'] = 'COMPLETED' if witness_ok else 'FAILED'
    _log(state, f"Family {spec}: closed form {formula.value}")
    return state


def _suite_options(config: RunConfig) -> SuiteOptions:
    return SuiteOptions(max_n=config.max_n, budget=config.budget, workers=config.workers, seed=config.seed)


def check_node(state: RunState) -> RunState:
    config = state['config']
    names = config.suites or [name for name in SUITES if name != 'random_bounds']
    try:
        reports = [r for name in names for r in run_suite(name, _suite_options(config))]
    except ValueError as e:
        return _input_error(state, e)

    failed = any(r.failures for r in reports)
    skipped = any(r.skipped for r in reports)
    state['report'] = {'suites': [r.to_dict() for r in reports]}
    if failed:
        state['workflow_status'] = 'FAILED'
    elif skipped:
        state['workflow_status'] = 'BUDGET_EXHAUSTED'
    else:
        state['workflow_status'] = 'COMPLETED'
    _log(state, f"Check: {len(reports)} report(s), failures={failed}, skips={skipped}")
    return state


def _explore_corona(state: RunState) -> RunState:
    config = state['config']
    if state['graph'] is not None:
        bases = [state['graph']]
        population = "explicit (1 graph)"
    else:
        bases = default_bipartite_bases() + default_nonbipartite_bases()
        population = f"default corona bases ({len(bases)} graphs)"
    try:
        values = explore_corona_values(bases, config.budget, config.workers)
    except ValueError as e:
        return _input_error(state, e)
    state['report'] = {'problem': 'corona', 'population': population, 'values': values}
    state['workflow_status'] = 'COMPLETED'
    _log(state, f"Explore: corona values for {len(values)} of {len(bases)} base graph(s)")
    return state


def explore_node(state: RunState) -> RunState:
    config = state['config']
    if config.problem == 'corona':
        return _explore_corona(state)

    # The α bound only speaks about connected graphs.
    connected_only = config.problem == 'alpha_sharpness'
    try:
        if state['graph'] is not None:
            pop = GraphPopulation(PopulationMode.EXPLICIT, graphs=(state['graph'],),
                                  budget=config.budget, connected_only=connected_only)
        else:
            pop = GraphPopulation(PopulationMode.EXHAUSTIVE, max_n=config.max_n, budget=config.budget,
                                  workers=config.workers, connected_only=connected_only)
        if connected_only:
            graphs = explore_alpha_bound_sharpness(pop)
        else:
            graphs = explore_equality_chi_d(pop)
    except ValueError as e:
        return _input_error(state, e)
    state['report'] = {'problem': config.problem, 'population': pop.describe(), 'graphs': graphs}
    state['workflow_status'] = 'COMPLETED'
    _log(state, f"Explore ({config.problem}): {len(graphs)} graph(s) found")
    return state


# ============================================================================
# WORKFLOW ROUTER
# ============================================================================

def route_status(state: RunState) -> str:
    if state['workflow_status'] == 'BUDGET_EXHAUSTED':
        return 'budget_exhausted'
    return 'complete'


# ============================================================================
# TERMINAL NODES
# ============================================================================

def budget_exhausted_node(state: RunState) -> RunState:
    reporting.log_warning("Node budget exhausted; result is undecided")
    _log(state, "Budget exhausted")
    return state


def complete_node(state: RunState) -> RunState:
    _log(state, f"Workflow finished with status {state['workflow_status']}")
    return state


def input_error_node(state: RunState) -> RunState:
    return state


# ============================================================================
# GRAPH CONSTRUCTION
# ============================================================================

def create_workflow_graph():
    """
    Create the LangGraph workflow: load -> command -> status routing -> END.
    """
    workflow = StateGraph(RunState)

    workflow.add_node("load", load_node)
    workflow.add_node("solve", solve_node)
    workflow.add_node("verify", verify_node)
    workflow.add_node("family", family_node)
    workflow.add_node("check", check_node)
    workflow.add_node("explore", explore_node)
    workflow.add_node("budget_exhausted", budget_exhausted_node)
    workflow.add_node("complete", complete_node)
    workflow.add_node("input_error", input_error_node)

    workflow.set_entry_point("load")

    workflow.add_conditional_edges(
        "load",
        route_command,
        {name: name for name in COMMANDS + ('input_error',)},
    )

    for name in COMMANDS:
        workflow.add_conditional_edges(
            name,
            route_status,
            {"budget_exhausted": "budget_exhausted", "complete": "complete"},
        )

    workflow.add_edge("budget_exhausted", END)
    workflow.add_edge("complete", END)
    workflow.add_edge("input_error", END)

    return workflow.compile()


# ============================================================================
# RUN
# ============================================================================

def run(config: RunConfig) -> Tuple[int, Dict[str, Any]]:
    """
    Execute one command.

    Returns:
        (exit code, report dict)
    """
    graph = create_workflow_graph()
    initial_state: RunState = {
        'config': config,
        'graph': None,
        'workflow_status': 'PROCESSING',
        'report': {},
        'audit_log': [],
    }
    final_state = graph.invoke(initial_state)
    status = final_state['workflow_status']
    return EXIT_CODES.get(status, EXIT_VIOLATION), final_state['report']


RENDERERS = {
    'solve': reporting.render_solve,
    'verify': reporting.render_verify,
    'family': reporting.render_family,
    'check': reporting.render_checks,
    'explore': reporting.render_explore,
}


def emit(config: RunConfig, exit_code: int, report: Dict[str, Any]):
    """Write the report to stdout or --output."""
    if exit_code == EXIT_INPUT_ERROR:
        return
    if config.output_format == 'json':
        text = json.dumps(report, indent=2)
        if config.output_path:
            with open(config.output_path, 'w') as f:
                f.write(text + '\n')
            reporting.log_ok(f"Report written to {config.output_path}")
        else:
            print(text)
        return

    if config.output_path:
        with open(config.output_path, 'w') as f:
            RENDERERS[config.command](report, Console(file=f, width=120))
        reporting.log_ok(f"Report written to {config.output_path}")
    else:
        RENDERERS[config.command](report, Console())


# ============================================================================
# MAIN EXECUTION
# ============================================================================

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='mdcolor', description="Majority dominator coloring toolkit")
    parser.add_argument('command', choices=COMMANDS)
    parser.add_argument('--input', dest='input_path', help="graph file (DIMACS .col or edge list)")
    parser.add_argument('--family', help="family spec such as path:13 or multistar:3,3,3")
    parser.add_argument('--graph-format', default='auto', choices=('auto', 'dimacs', 'edgelist'))
    parser.add_argument('--coloring', dest='coloring_path', help="coloring file for verify")
    parser.add_argument('--format', dest='output_format', default='text', choices=('text', 'json'))
    parser.add_argument('--output', dest='output_path', help="write the report here instead of stdout")
    parser.add_argument('--budget', type=int, help="search node budget (env MDC_NODE_BUDGET)")
    parser.add_argument('--seed', type=int, help="seed for random populations (env MDC_SEED)")
    parser.add_argument('--suite', dest='suites', action='append', default=[],
                        help=f"suite to run, repeatable ({', '.join(SUITES)})")
    parser.add_argument('--max-n', type=int, default=5, help="largest order for exhaustive populations")
    parser.add_argument('--workers', type=int, help="worker processes for check suites (env MDC_WORKERS)")
    parser.add_argument('--problem', default='chi_d', choices=PROBLEMS,
                        help="what explore looks for: chi_md = chi_d, alpha bound sharpness, corona values")
    return parser


def config_from_args(argv: Optional[List[str]] = None) -> RunConfig:
    args = build_parser().parse_args(argv)
    budget = args.budget if args.budget is not None else _env_int('MDC_NODE_BUDGET')
    seed = args.seed if args.seed is not None else _env_int('MDC_SEED')
    workers = args.workers if args.workers is not None else _env_int('MDC_WORKERS')
    return RunConfig(
        command=args.command,
        input_path=args.input_path,
        family=args.family,
        graph_format=args.graph_format,
        coloring_path=args.coloring_path,
        output_format=args.output_format,
        output_path=args.output_path,
        budget=budget,
        seed=42 if seed is None else seed,
        suites=args.suites,
        max_n=args.max_n,
        workers=1 if workers is None else workers,
        problem=args.problem,
    )


def main(argv: Optional[List[str]] = None) -> int:
    try:
        config = config_from_args(argv)
    except ValueError as e:
        reporting.log_fail(str(e))
        return EXIT_INPUT_ERROR

    exit_code, report = run(config)
    emit(config, exit_code, report)
    return exit_code


if __name__ == "__main__":
    sys.exit(main())
