"""Orlik-Terao algebras, Betti tables, resonance and nets of plane line arrangements."""

import json

from ._otb import (
    Arrangement,
    InputError,
    VerificationError,
    betti_table,
    builtin_names,
    command_names,
    h1_dimension,
    poincare,
    tor_dimension,
)
from ._otb import run as _run

__all__ = [
    "Arrangement",
    "InputError",
    "VerificationError",
    "betti_table",
    "builtin_names",
    "command_names",
    "h1_dimension",
    "poincare",
    "report",
    "tor_dimension",
]


def report(arrangement, command="report", **options):
    """Run a subcommand and return its report as a dict."""
    if isinstance(arrangement, str):
        arrangement = Arrangement.parse(arrangement)
    return json.loads(_run(command, arrangement, **options))
