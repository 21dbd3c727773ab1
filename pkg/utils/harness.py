"""
Theorem Harness
Executable checks for the χ_md bounds and characterizations over exhaustive and
seeded random graph populations.

Every check returns a CheckReport. Budget-limited solves land in ``skipped``,
never in the passing count.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from enum import Enum
from functools import partial
from itertools import combinations
from typing import Any, Callable, Dict, Iterator, List, Optional, Sequence, Tuple

import networkx as nx

from utils.families import (
    chi_md_closed_form,
    complement_matching_outside,
    corona_lower_bound,
    corona_upper_bound,
    witness_from_alpha_bound,
    witness_from_matching_bound,
)
from utils.graph import (
    FamilyKind,
    FamilySpec,
    Graph,
    bipartitions,
    build_graph,
    complement,
    components,
    corona_product,
    encode_graph,
    family_graph,
    from_networkx,
    induced_subgraph,
    is_bipartite,
    is_connected,
)
from utils.invariants import (
    InvariantResult,
    chromatic_number,
    dominator_chromatic_number,
    domination_number,
    independence_number,
    max_degree,
)
from utils.mdc import mdc_number, recolor_for_high_degree, verify_mdc
from utils.reporting import log_info, log_warning


ENUMERATION_MAX_ORDER = 6
K1 = build_graph(1, [])


# ============================================================================
# TYPES
# ============================================================================

@dataclass
class CheckFailure:
    graph: str
    relation: str
    observed: Dict[str, Any]


@dataclass
class CheckReport:
    """
    Outcome of one theorem check over one population.

    Attributes:
        theorem_id: Name of the checked statement
        population: Human-readable population description
        tested: Members fully checked
        failures: Members refuting the statement
        skipped: graph6 encodings of members whose solve ran out of budget
        sharp: graph6 encodings of members attaining equality in a bound
        observed: Free-form per-member records (tightness values, exploration data)
    """
    theorem_id: str
    population: str
    tested: int = 0
    failures: List[CheckFailure] = field(default_factory=list)
    skipped: List[str] = field(default_factory=list)
    sharp: List[str] = field(default_factory=list)
    observed: List[Dict[str, Any]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


class PopulationMode(Enum):
    EXHAUSTIVE = 'exhaustive'
    RANDOM = 'random'
    EXPLICIT = 'explicit'


@dataclass
class GraphPopulation:
    """
    A reproducible stream of graphs.

    EXHAUSTIVE walks every labeled graph of order min_n..max_n; RANDOM draws
    ``count`` G(n, p) samples per (n, p) pair from ``seed``; EXPLICIT replays ``graphs``.
    Filters drop members that are disconnected (``connected_only``) or have fewer
    than ``min_components`` components.
    """
    mode: PopulationMode = PopulationMode.EXHAUSTIVE
    max_n: int = 5
    min_n: int = 1
    n_values: Tuple[int, ...] = ()
    p_values: Tuple[float, ...] = (0.2, 0.5, 0.8)
    count: int = 50
    seed: int = 42
    graphs: Tuple[Graph, ...] = ()
    connected_only: bool = False
    min_components: int = 1
    budget: Optional[int] = None
    workers: int = 1

    def describe(self) -> str:
        if self.mode == PopulationMode.EXHAUSTIVE:
            text = f"exhaustive labeled n={self.min_n}..{self.max_n}"
        elif self.mode == PopulationMode.RANDOM:
            ns = ','.join(str(n) for n in self.n_values)
            ps = ','.join(str(p) for p in self.p_values)
            text = f"random n={ns} p={ps} x{self.count} seed={self.seed}"
        else:
            text = f"explicit ({len(self.graphs)} graphs)"
        if self.connected_only:
            text += ", connected"
        if self.min_components > 1:
            text += f", >= {self.min_components} components"
        return text

    def _raw(self) -> Iterator[Graph]:
        if self.mode == PopulationMode.EXHAUSTIVE:
            for n in range(self.min_n, self.max_n + 1):
                yield from enumerate_graphs(n)
        elif self.mode == PopulationMode.RANDOM:
            rng = random.Random(self.seed)
            for n in self.n_values:
                for p in self.p_values:
                    for _ in range(self.count):
                        yield random_graph(n, p, rng.randrange(2 ** 32))
        else:
            yield from self.graphs

    def members(self) -> Iterator[Graph]:
        for g in self._raw():
            if g.n < self.min_n:
                continue
            if self.connected_only and not is_connected(g):
                continue
            if self.min_components > 1 and len(components(g)) < self.min_components:
                continue
            yield g


def enumerate_graphs(n: int) -> Iterator[Graph]:
    """All 2^(n(n-1)/2) labeled graphs on n vertices, edge subsets in binary order."""
    if n < 0:
        raise ValueError(f"Order must be nonnegative, got {n}")
    if n > ENUMERATION_MAX_ORDER:
        raise ValueError(f"Exhaustive enumeration capped at order {ENUMERATION_MAX_ORDER}, got {n}")
    pairs = list(combinations(range(n), 2))
    for subset in range(1 << len(pairs)):
        yield build_graph(n, [pairs[i] for i in range(len(pairs)) if subset >> i & 1])


def random_graph(n: int, p: float, seed: int) -> Graph:
    """Seeded G(n, p) sample."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"Edge probability must lie in [0, 1], got {p}")
    return from_networkx(nx.gnp_random_graph(n, p, seed=seed))


# ============================================================================
# MEMBER EVALUATION
# ============================================================================

class _Skip(Exception):
    pass


@dataclass
class _Outcome:
    graph: str
    status: str  # 'ok', 'fail', 'skip', 'ignore'
    relation: str = ''
    observed: Dict[str, Any] = field(default_factory=dict)
    sharp: bool = False
    record: Optional[Dict[str, Any]] = None


def _value(result: InvariantResult) -> int:
    if not result.solved:
        raise _Skip()
    return result.value


def _evaluate(member_check: Callable[[Graph], _Outcome], g: Graph) -> _Outcome:
    try:
        return member_check(g)
    except _Skip:
        return _Outcome(encode_graph(g), 'skip')


def _run(theorem_id: str, pop: GraphPopulation, member_check: Callable[[Graph], _Outcome]) -> CheckReport:
    """Evaluate every member, in parallel when asked, merging by member index."""
    report = CheckReport(theorem_id, pop.describe())
    members = list(pop.members())
    task = partial(_evaluate, member_check)
    if pop.workers > 1 and len(members) > 1:
        with ProcessPoolExecutor(max_workers=pop.workers) as executor:
            outcomes = list(executor.map(task, members, chunksize=16))
    else:
        outcomes = [task(g) for g in members]

    for outcome in outcomes:
        if outcome.status == 'ignore':
            continue
        if outcome.record is not None:
            report.observed.append(outcome.record)
        if outcome.status == 'skip':
            report.skipped.append(outcome.graph)
            continue
        report.tested += 1
        if outcome.status == 'fail':
            report.failures.append(CheckFailure(outcome.graph, outcome.relation, outcome.observed))
        if outcome.sharp:
            report.sharp.append(outcome.graph)

    if report.skipped:
        log_warning(f"{theorem_id}: {len(report.skipped)} member(s) skipped on budget")
    log_info(f"{theorem_id}: {report.tested} tested, {len(report.failures)} failure(s) [{report.population}]")
    return report


def _outcome(g: Graph, holds: bool, relation: str, observed: Dict[str, Any], sharp: bool = False) -> _Outcome:
    return _Outcome(encode_graph(g), 'ok' if holds else 'fail', relation, observed, sharp)


# ============================================================================
# BOUNDS
# ============================================================================

def _bound_chain_member(g: Graph, budget: Optional[int]) -> _Outcome:
    chi = _value(chromatic_number(g, budget))
    chi_md = _value(mdc_number(g, budget))
    chi_d = _value(dominator_chromatic_number(g, budget))
    gamma = domination_number(g).value
    observed = {'n': g.n, 'chi': chi, 'chi_md': chi_md, 'chi_d': chi_d, 'gamma': gamma}
    holds = chi <= chi_md <= chi_d <= g.n and chi_md <= chi + gamma
    return _outcome(g, holds, "chi <= chi_md <= chi_d <= n and chi_md <= chi + gamma", observed)


def check_bound_chain(pop: GraphPopulation) -> CheckReport:
    return _run('bound_chain', pop, partial(_bound_chain_member, budget=pop.budget))


def _alpha_bound_member(g: Graph, budget: Optional[int]) -> _Outcome:
    if not is_connected(g):
        return _Outcome('', 'ignore')
    chi = _value(chromatic_number(g, budget))
    chi_md = _value(mdc_number(g, budget))
    alpha = independence_number(g).value
    bound = chi + -(-alpha // 2) - 1
    witness = witness_from_alpha_bound(g)
    witness_ok = not verify_mdc(g, witness) and witness.k <= bound
    observed = {'chi': chi, 'alpha': alpha, 'chi_md': chi_md, 'bound': bound, 'witness_colors': witness.k}
    return _outcome(
        g, chi_md <= bound and witness_ok,
        "chi_md <= chi + ceil(alpha/2) - 1 with a valid constructive witness",
        observed, sharp=chi_md == bound,
    )


def check_alpha_bound(pop: GraphPopulation) -> CheckReport:
    return _run('alpha_bound', pop, partial(_alpha_bound_member, budget=pop.budget))


def _matching_bound_member(g: Graph, budget: Optional[int]) -> _Outcome:
    if g.n < 2 or not is_connected(g):
        return _Outcome('', 'ignore')
    chi_md = _value(mdc_number(g, budget))
    independent = independence_number(g).witness
    matching = complement_matching_outside(g, independent)
    bound = g.n + 1 - len(independent) - len(matching)
    witness = witness_from_matching_bound(g, independent, matching)
    witness_ok = not verify_mdc(g, witness) and witness.k == bound
    observed = {'n': g.n, 'alpha': len(independent), 'nu': len(matching), 'chi_md': chi_md, 'bound': bound}
    return _outcome(
        g, chi_md <= bound and witness_ok,
        "chi_md <= n + 1 - alpha - nu(complement(G - I))",
        observed, sharp=chi_md == bound,
    )


def check_matching_bound(pop: GraphPopulation) -> CheckReport:
    return _run('matching_bound', pop, partial(_matching_bound_member, budget=pop.budget))


def _degree_bound_member(g: Graph, budget: Optional[int]) -> _Outcome:
    if max_degree(g) < g.n - 2:
        return _Outcome('', 'ignore')
    chi = chromatic_number(g, budget)
    chi_value = _value(chi)
    chi_md = _value(mdc_number(g, budget))
    witness = recolor_for_high_degree(g, chi.witness)
    witness_ok = not verify_mdc(g, witness) and witness.k == chi_value
    return _outcome(
        g, chi_md == chi_value and witness_ok,
        "Delta >= n-2 implies chi_md = chi",
        {'chi': chi_value, 'chi_md': chi_md, 'witness_colors': witness.k},
    )


def check_degree_bound(pop: GraphPopulation) -> CheckReport:
    return _run('degree_bound', pop, partial(_degree_bound_member, budget=pop.budget))


def _component_values(g: Graph, budget: Optional[int]) -> List[int]:
    values = []
    for comp in components(g):
        sub, _ = induced_subgraph(g, comp)
        values.append(_value(mdc_number(sub, budget)))
    return values


def _disconnected_member(g: Graph, budget: Optional[int]) -> _Outcome:
    if len(components(g)) < 2:
        return _Outcome('', 'ignore')
    parts = _component_values(g, budget)
    chi_md = _value(mdc_number(g, budget))
    observed = {'chi_md': chi_md, 'components': parts, 'max': max(parts), 'sum': sum(parts)}
    outcome = _outcome(
        g, max(parts) <= chi_md <= sum(parts),
        "max_j chi_md(G_j) <= chi_md(G) <= sum_j chi_md(G_j)",
        observed, sharp=chi_md in (max(parts), sum(parts)),
    )
    outcome.record = {'graph': outcome.graph, **observed}
    return outcome


def check_disconnected_bounds(pop: GraphPopulation) -> CheckReport:
    return _run('disconnected_bounds', pop, partial(_disconnected_member, budget=pop.budget))


# ============================================================================
# CHARACTERIZATIONS
# ============================================================================

def is_trivial_one(g: Graph) -> bool:
    """K_1 or the edgeless graph on two vertices."""
    return g.n <= 2 and g.edge_count == 0


def two_coloring_condition(g: Graph) -> bool:
    """
    Some bipartition (X, Y), |X| <= |Y|, satisfies one of:
        (i)   1 <= |X| <= |Y| <= 2
        (ii)  1 <= |X| <= 2 < |Y| and every y in Y has a neighbor
        (iii) 3 <= |X| <= |Y|, 2·d(x) >= |Y| on X and 2·d(y) >= |X| on Y
    """
    if is_trivial_one(g):
        return False
    for a, b in bipartitions(g):
        x, y = (a, b) if len(a) <= len(b) else (b, a)
        if len(x) < 1:
            continue
        if len(y) <= 2:
            return True
        if len(x) <= 2:
            if all(g.degree(v) >= 1 for v in y):
                return True
            continue
        if all(2 * g.degree(v) >= len(y) for v in x) and all(2 * g.degree(v) >= len(x) for v in y):
            return True
    return False


def _small_values_member(g: Graph, budget: Optional[int]) -> _Outcome:
    chi_md = _value(mdc_number(g, budget))
    one_expected = is_trivial_one(g)
    two_expected = two_coloring_condition(g)
    holds = (chi_md == 1) == one_expected and (chi_md == 2) == two_expected
    return _outcome(
        g, holds,
        "chi_md = 1 iff G in {K_1, co-K_2}; chi_md = 2 iff bipartite condition",
        {'chi_md': chi_md, 'is_trivial_one': one_expected, 'two_condition': two_expected},
    )


def check_small_value_characterizations(pop: GraphPopulation) -> CheckReport:
    return _run('small_values', pop, partial(_small_values_member, budget=pop.budget))


def complement_is_small_star(g: Graph) -> bool:
    """Missing edges form a star with 1..n-2 edges, i.e. G = K_n - E'(v)."""
    missing = complement(g).edges()
    if not 1 <= len(missing) <= g.n - 2:
        return False
    common = set(missing[0])
    for edge in missing[1:]:
        common &= set(edge)
    return bool(common)


def _large_values_member(g: Graph, budget: Optional[int]) -> _Outcome:
    chi_md = _value(mdc_number(g, budget))
    complete = g.edge_count == g.n * (g.n - 1) // 2
    observed: Dict[str, Any] = {'n': g.n, 'chi_md': chi_md, 'complete': complete}
    holds = (chi_md == g.n) == complete

    if g.n >= 3 and is_connected(g):
        star = complement_is_small_star(g)
        observed['complement_star'] = star
        holds = holds and (chi_md == g.n - 1) == star

    if max_degree(g) >= g.n - 2:
        chi = _value(chromatic_number(g, budget))
        observed['chi'] = chi
        holds = holds and chi_md == chi

    return _outcome(
        g, holds,
        "chi_md = n iff complete; chi_md = n-1 iff K_n - E'(v) (connected); Delta >= n-2 implies chi_md = chi",
        observed,
    )


def check_large_value_characterizations(pop: GraphPopulation) -> CheckReport:
    return _run('large_values', pop, partial(_large_values_member, budget=pop.budget))


# ============================================================================
# CORONAS
# ============================================================================

def _require_connected_base(g: Graph, bipartite: bool):
    if g.n < 2 or not is_connected(g):
        raise ValueError(f"Corona checks need a connected graph of order >= 2, got {encode_graph(g)}")
    if bipartite and not is_bipartite(g):
        raise ValueError(f"Graph {encode_graph(g)} is not bipartite")


def _bipartite_corona_member(g: Graph, budget: Optional[int]) -> _Outcome:
    chi_md = _value(mdc_number(corona_product(g, K1), budget))
    expected = -(-g.n // 2) + 1
    return _outcome(
        g, chi_md == expected,
        "chi_md(G o K_1) = ceil(n/2) + 1 for connected bipartite G",
        {'n': g.n, 'chi_md': chi_md, 'expected': expected},
    )


def check_bipartite_corona(graphs: Sequence[Graph], budget: Optional[int] = None, workers: int = 1) -> CheckReport:
    for g in graphs:
        _require_connected_base(g, bipartite=True)
    pop = GraphPopulation(PopulationMode.EXPLICIT, graphs=tuple(graphs), budget=budget, workers=workers)
    return _run('bipartite_corona', pop, partial(_bipartite_corona_member, budget=budget))


def _corona_sandwich_member(g: Graph, budget: Optional[int]) -> _Outcome:
    chi = _value(chromatic_number(g, budget))
    chi_md = _value(mdc_number(corona_product(g, K1), budget))
    low = corona_lower_bound(g, chi)
    high = corona_upper_bound(g, chi)
    outcome = _outcome(
        g, low <= chi_md <= high,
        "max{chi, ceil(n/2)+1} <= chi_md(G o K_1) <= chi + ceil(n/2) - 1",
        {'n': g.n, 'chi': chi, 'chi_md': chi_md, 'low': low, 'high': high},
        sharp=chi_md == low,
    )
    outcome.record = {'graph': outcome.graph, 'n': g.n, 'chi': chi, 'corona_chi_md': chi_md}
    return outcome


def check_corona_sandwich(graphs: Sequence[Graph], budget: Optional[int] = None, workers: int = 1) -> CheckReport:
    for g in graphs:
        _require_connected_base(g, bipartite=False)
    pop = GraphPopulation(PopulationMode.EXPLICIT, graphs=tuple(graphs), budget=budget, workers=workers)
    return _run('corona_sandwich', pop, partial(_corona_sandwich_member, budget=budget))


# ============================================================================
# FAMILIES
# ============================================================================

def check_family_table(specs: Sequence[FamilySpec], budget: Optional[int] = None) -> CheckReport:
    """Closed form against the exact solver, and the witness against the verifier."""
    report = CheckReport('family_table', f"{len(specs)} family instances")
    for spec in specs:
        g = family_graph(spec)
        formula = chi_md_closed_form(spec)
        solved = mdc_number(g, budget)
        label = str(spec)
        if not solved.solved:
            report.skipped.append(label)
            continue
        report.tested += 1
        witness_ok = not verify_mdc(g, formula.witness) and formula.witness.k == formula.value
        report.observed.append({'family': label, 'closed_form': formula.value, 'solver': solved.value})
        if solved.value != formula.value or not witness_ok:
            report.failures.append(CheckFailure(
                label, "closed form = solver and witness valid",
                {'closed_form': formula.value, 'solver': solved.value, 'witness_ok': witness_ok},
            ))
    return report


# ============================================================================
# EXPLORATION
# ============================================================================

def _equality_chi_d_member(g: Graph, budget: Optional[int]) -> _Outcome:
    chi_md = _value(mdc_number(g, budget))
    chi_d = _value(dominator_chromatic_number(g, budget))
    return _outcome(g, True, '', {}, sharp=chi_md == chi_d)


def explore_equality_chi_d(pop: GraphPopulation) -> List[str]:
    """graph6 encodings of members with χ_md = χ_d. Asserts nothing."""
    return _run('explore_chi_md_eq_chi_d', pop, partial(_equality_chi_d_member, budget=pop.budget)).sharp


def explore_alpha_bound_sharpness(pop: GraphPopulation) -> List[str]:
    """Connected members attaining χ_md = χ + ⌈α/2⌉ - 1."""
    return check_alpha_bound(pop).sharp


def explore_corona_values(
    graphs: Sequence[Graph], budget: Optional[int] = None, workers: int = 1,
) -> List[Dict[str, Any]]:
    """χ_md(G∘K_1) next to χ(G) and n for each connected input."""
    return check_corona_sandwich(graphs, budget, workers).observed


# ============================================================================
# SUITES
# ============================================================================

def default_bipartite_bases() -> List[Graph]:
    """Connected bipartite graphs of order 2..6 used by the corona suite."""
    specs = [
        FamilySpec(FamilyKind.PATH, (n,)) for n in range(2, 7)
    ] + [
        FamilySpec(FamilyKind.CYCLE, (4,)),
        FamilySpec(FamilyKind.CYCLE, (6,)),
        FamilySpec(FamilyKind.STAR, (5,)),
        FamilySpec(FamilyKind.COMPLETE_BIPARTITE, (2, 3)),
        FamilySpec(FamilyKind.COMPLETE_BIPARTITE, (3, 3)),
        FamilySpec(FamilyKind.DOUBLE_STAR, (3, 3)),
    ]
    return [family_graph(s) for s in specs]


def default_nonbipartite_bases() -> List[Graph]:
    return [
        family_graph(FamilySpec(FamilyKind.CYCLE, (3,))),
        family_graph(FamilySpec(FamilyKind.CYCLE, (5,))),
        family_graph(FamilySpec(FamilyKind.WHEEL, (4,))),
        family_graph(FamilySpec(FamilyKind.COMPLETE, (4,))),
    ]


@dataclass
class SuiteOptions:
    """Knobs shared by every named suite."""
    max_n: int = 5
    budget: Optional[int] = None
    workers: int = 1
    seed: int = 42
    samples: int = 50
    random_orders: Tuple[int, ...] = tuple(range(7, 13))

    def exhaustive(self, **filters) -> GraphPopulation:
        return GraphPopulation(
            PopulationMode.EXHAUSTIVE, max_n=self.max_n,
            budget=self.budget, workers=self.workers, **filters,
        )

    def sampled(self, **filters) -> GraphPopulation:
        return GraphPopulation(
            PopulationMode.RANDOM, n_values=self.random_orders, count=self.samples,
            seed=self.seed, budget=self.budget, workers=self.workers, **filters,
        )


def _random_bounds(opts: SuiteOptions) -> List[CheckReport]:
    return [
        check_bound_chain(opts.sampled()),
        check_alpha_bound(opts.sampled(connected_only=True)),
        check_matching_bound(opts.sampled(connected_only=True, min_n=2)),
        check_disconnected_bounds(opts.sampled(min_components=2)),
    ]


SUITES: Dict[str, Callable[[SuiteOptions], List[CheckReport]]] = {
    'bound_chain': lambda o: [check_bound_chain(o.exhaustive())],
    'alpha_bound': lambda o: [check_alpha_bound(o.exhaustive(connected_only=True))],
    'matching_bound': lambda o: [check_matching_bound(o.exhaustive(connected_only=True, min_n=2))],
    'degree_bound': lambda o: [check_degree_bound(o.exhaustive())],
    'small_values': lambda o: [check_small_value_characterizations(o.exhaustive())],
    'large_values': lambda o: [check_large_value_characterizations(o.exhaustive())],
    'disconnected': lambda o: [check_disconnected_bounds(o.exhaustive(min_n=2, min_components=2))],
    'bipartite_corona': lambda o: [check_bipartite_corona(default_bipartite_bases(), o.budget, o.workers)],
    'corona_sandwich': lambda o: [check_corona_sandwich(
        default_nonbipartite_bases() + default_bipartite_bases(), o.budget, o.workers)],
    'random_bounds': _random_bounds,
}


def run_suite(name: str, opts: Optional[SuiteOptions] = None) -> List[CheckReport]:
    """Run one named suite; most suites produce a single report."""
    if name not in SUITES:
        raise ValueError(f"Unknown suite '{name}' (known: {', '.join(SUITES)})")
    return SUITES[name](opts or SuiteOptions())
