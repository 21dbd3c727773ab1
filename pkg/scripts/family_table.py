"""
Family Table - closed forms against the exact solver
Prints one row per family instance with the closed-form χ_md, the solver's
value and whether the explicit witness verifies.

Usage:
    python scripts/family_table.py            # default grid
    MDC_FULL_SUITE=1 python scripts/family_table.py   # adds the larger instances
"""

import os
import sys
from typing import List

from dotenv import load_dotenv

# Add parent directory to path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from rich.console import Console
from rich.progress import Progress, SpinnerColumn, TextColumn
from rich.table import Table

from utils.graph import FamilyKind, FamilySpec
from utils.harness import check_family_table

# Load environment variables
load_dotenv()

console = Console()


def default_specs(full: bool) -> List[FamilySpec]:
    """Instances small enough for the exact solver; ``full`` adds the slower ones."""
    top_path = 20 if full else 13
    top_cycle = 18 if full else 14
    top_corona = 8 if full else 6
    specs = [FamilySpec(FamilyKind.PATH, (n,)) for n in range(1, top_path + 1)]
    specs += [FamilySpec(FamilyKind.CYCLE, (n,)) for n in range(3, top_cycle + 1)]
    specs += [FamilySpec(FamilyKind.WHEEL, (n,)) for n in range(3, 9)]
    specs += [FamilySpec(FamilyKind.DOUBLE_STAR, (a, b)) for a in range(2, 5) for b in range(a, 5)]
    specs += [FamilySpec(FamilyKind.CORONA_CYCLE, (n,)) for n in range(3, top_corona + 1)]
    specs += [
        FamilySpec(FamilyKind.MULTISTAR, counts)
        for counts in ((1, 1), (2, 2), (1, 1, 1), (3, 3, 2), (3, 3, 3))
    ]
    specs += [FamilySpec(FamilyKind.EMPTY, (n,)) for n in range(1, 8)]
    return specs


def main():
    """Build and print the comparison table; exit 1 on any mismatch."""
    full = os.getenv('MDC_FULL_SUITE', '').strip() not in ('', '0', 'false', 'False')
    budget = os.getenv('MDC_NODE_BUDGET')
    specs = default_specs(full)

    console.print("\n" + "=" * 70)
    console.print("[bold cyan]Majority Dominator Chromatic Number - Family Table[/bold cyan]")
    console.print("=" * 70)

    with Progress(
        SpinnerColumn(),
        TextColumn("[progress.description]{task.description}"),
        console=console,
        transient=True
    ) as progress:
        progress.add_task(description=f"Solving {len(specs)} family instances...", total=None)
        report = check_family_table(specs, int(budget) if budget else None)

    table = Table(
        title="[bold cyan]Closed form vs exact solver[/bold cyan]",
        show_header=True,
        header_style="bold magenta",
    )
    table.add_column("Family", style="cyan")
    table.add_column("Closed form", justify="right")
    table.add_column("Solver", justify="right")
    table.add_column("Match", justify="center")

    for row in report.observed:
        match = row['closed_form'] == row['solver']
        table.add_row(
            row['family'],
            str(row['closed_form']),
            str(row['solver']),
            "[green]yes[/green]" if match else "[red]NO[/red]",
        )
    for label in report.skipped:
        table.add_row(label, "-", "[yellow]budget[/yellow]", "-")
    console.print(table)

    if report.failures:
        for failure in report.failures:
            console.print(f"[red][FAIL][/red] {failure.graph}: {failure.observed}")
        sys.exit(1)
    console.print(f"\n[green][OK][/green] {report.tested} instance(s) agree, {len(report.skipped)} skipped")


if __name__ == "__main__":
    main()
