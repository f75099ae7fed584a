"""
Formatter Rich per output CLI avanzato.

Richiede ``rich`` come dipendenza opzionale:
    pip install gsp4-verify[rich]

Una tabella per report con i testimoni e il loro errore stimato.
Fallback graceful: se rich non è installato, :func:`is_rich_available`
ritorna False e il CLI usa il testo piatto.
"""

from typing import Sequence

from gsp4_verify.cli.formatters import render_value
from gsp4_verify.models.results import VerificationReport

try:
    from rich.console import Console
    from rich.panel import Panel
    from rich.table import Table

    RICH_AVAILABLE = True
except ImportError:
    RICH_AVAILABLE = False


def is_rich_available() -> bool:
    """Verifica se la libreria rich è disponibile."""
    return RICH_AVAILABLE


def format_reports_rich(reports: Sequence[VerificationReport], digits: int) -> str:
    """Ritorna la stringa renderizzata (non stampa direttamente)."""
    console = Console(record=True, width=80)

    for report in reports:
        color = "green" if report.passed else "red"
        console.print()
        console.print(
            Panel(
                f"[bold]{report.check}[/bold] — {report.status.upper()}",
                title="[bold blue]gsp4-verify[/bold blue]",
                border_style=color,
            )
        )

        table = Table(show_header=True, header_style="bold")
        table.add_column("Witness", style="bold", width=34)
        table.add_column("Value", width=30)
        table.add_column("Error", justify="right", width=10)
        for w in report.witnesses:
            value = render_value(w.value, digits)
            table.add_row(w.description, "" if value is None else str(value), "" if w.error is None else f"{w.error:.2g}")
        console.print(table)

        for c in report.citations:
            console.print(f"  [dim]↳ {c}[/dim]")

    if len(reports) > 1:
        passed = sum(1 for r in reports if r.passed)
        console.print()
        console.print(f"[bold]{passed}/{len(reports)} checks passed[/bold]")

    return console.export_text()
