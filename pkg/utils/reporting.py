"""
Console Reporting
Tagged diagnostics on stderr and rich rendering of CLI reports.
"""

import os
from typing import Any, Dict, List

from rich.console import Console
from rich.panel import Panel
from rich.table import Table


# Library diagnostics stay off stdout so JSON reports remain parseable.
console = Console(stderr=True, quiet=os.getenv('MDC_QUIET', '').strip() not in ('', '0', 'false', 'False'))


def log_ok(message: str):
    console.print(f"[green][OK][/green] {message}")


def log_info(message: str):
    console.print(f"[cyan][INFO][/cyan] {message}")


def log_warning(message: str):
    console.print(f"[yellow][WARNING][/yellow] {message}")


def log_fail(message: str):
    console.print(f"[red][FAIL][/red] {message}")


def banner(title: str, out: Console = console):
    out.print("\n" + "=" * 70)
    out.print(title)
    out.print("=" * 70)


def format_classes(coloring: List[int]) -> str:
    """Classes as '1:{0,2} 2:{1}'."""
    classes: Dict[int, List[int]] = {}
    for v, c in enumerate(coloring):
        classes.setdefault(c, []).append(v)
    return ' '.join(
        f"{c}:{{{','.join(str(v) for v in members)}}}" for c, members in sorted(classes.items())
    )


def render_solve(report: Dict[str, Any], out: Console):
    banner("[SOLVE] Majority Dominator Chromatic Number", out)
    table = Table(title="[bold cyan]Invariants[/bold cyan]", show_header=True, header_style="bold magenta")
    table.add_column("Invariant", style="cyan")
    table.add_column("Value", justify="right", style="green")
    table.add_row("n", str(report['n']))
    table.add_row("m", str(report['m']))
    table.add_row("χ_md", str(report['chi_md']) if report['chi_md'] is not None else "undecided")
    for name, value in report['bounds'].items():
        table.add_row(name, str(value) if value is not None else "undecided")
    out.print(table)
    if report['coloring']:
        out.print(f"\nWitness classes: {format_classes(report['coloring'])}")
    stats = report['stats']
    out.print(f"Search nodes: {stats['nodes']:,}  Status: {stats['status']}")


def render_verify(report: Dict[str, Any], out: Console):
    banner("[VERIFY] Majority Dominator Coloring Check", out)
    if report['ok']:
        out.print(f"[green][OK][/green] Valid majority dominator coloring with {report['k']} colors")
        return
    out.print(f"[red][FAIL][/red] {len(report['violations'])} violation(s)")
    for line in report['violation_text']:
        out.print(f"   - {line}")


def render_family(report: Dict[str, Any], out: Console):
    banner(f"[FAMILY] {report['family']}", out)
    out.print(Panel.fit(
        f"[bold]Closed form:[/bold] {report['value']}\n"
        f"[bold]Rule:[/bold] {report['provenance']}\n"
        f"[bold]Witness:[/bold] {','.join(str(c) for c in report['witness'])}\n"
        f"[bold]Witness valid:[/bold] {report['witness_ok']}",
        border_style="green" if report['witness_ok'] else "red",
    ))


def render_checks(report: Dict[str, Any], out: Console):
    banner("[CHECK] Theorem Suites", out)
    table = Table(show_header=True, header_style="bold magenta")
    table.add_column("Suite", style="cyan")
    table.add_column("Population")
    table.add_column("Tested", justify="right")
    table.add_column("Failures", justify="right")
    table.add_column("Skipped", justify="right")
    table.add_column("Sharp", justify="right")
    for entry in report['suites']:
        failures = len(entry['failures'])
        table.add_row(
            entry['theorem_id'],
            entry['population'],
            str(entry['tested']),
            f"[red]{failures}[/red]" if failures else "0",
            str(len(entry['skipped'])),
            str(len(entry['sharp'])),
        )
    out.print(table)
    for entry in report['suites']:
        for failure in entry['failures'][:10]:
            out.print(f"[red][FAIL][/red] {entry['theorem_id']}: {failure['graph']} {failure['relation']} {failure['observed']}")


EXPLORE_TITLES = {
    'chi_d': ("[EXPLORE] χ_md = χ_d", "Members attaining equality"),
    'alpha_sharpness': ("[EXPLORE] χ_md = χ + ⌈α/2⌉ - 1", "Connected members attaining the bound"),
}


def render_explore(report: Dict[str, Any], out: Console):
    problem = report.get('problem', 'chi_d')
    if problem == 'corona':
        banner("[EXPLORE] χ_md(G∘K_1)", out)
        out.print(f"Population: {report['population']}")
        table = Table(show_header=True, header_style="bold magenta")
        table.add_column("Graph", style="cyan")
        table.add_column("n", justify="right")
        table.add_column("χ", justify="right")
        table.add_column("χ_md(G∘K_1)", justify="right", style="green")
        for row in report['values']:
            table.add_row(row['graph'], str(row['n']), str(row['chi']), str(row['corona_chi_md']))
        out.print(table)
        return

    title, label = EXPLORE_TITLES[problem]
    banner(title, out)
    out.print(f"Population: {report['population']}")
    out.print(f"{label}: {len(report['graphs'])}")
    for encoding in report['graphs'][:50]:
        out.print(f"   {encoding}")
    if len(report['graphs']) > 50:
        out.print(f"   ... {len(report['graphs']) - 50} more")
