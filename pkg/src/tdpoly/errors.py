"""Shared exception types.

Plain ``ValueError`` is used for ordinary domain errors (bad vertex, bad
range); the classes here exist because callers need to tell parse errors,
blown enumeration budgets, and broken internal cross-checks apart (the CLI
maps them to distinct exit codes).
"""


class GraphParseError(ValueError):
    """Malformed edge-list input; message names the offending line."""


class BudgetError(RuntimeError):
    """An enumeration was refused because it exceeds the fixed desk-scale budget."""


class InternalConsistencyError(RuntimeError):
    """Two routes that must agree produced different values."""
