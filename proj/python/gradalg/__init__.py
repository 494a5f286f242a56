"""Exact computations with finite-dimensional group-graded algebras."""

from ._gradalg import (
    Algebra,
    BudgetExceeded,
    InputError,
    Unsupported,
    examples,
    one_dim_char_trivial,
    replay,
    run_cli,
    scenarios,
    weak_equivalence,
)

__all__ = [
    "Algebra",
    "BudgetExceeded",
    "InputError",
    "Unsupported",
    "examples",
    "one_dim_char_trivial",
    "replay",
    "run_cli",
    "scenarios",
    "weak_equivalence",
]
