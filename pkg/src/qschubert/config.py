"""Run-time budgets.

Degree and component-size caps make long-running computations fail fast
with BudgetExceeded instead of exhausting memory.  Defaults are generous
for desk-scale work and can be overridden through environment variables.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

ENV_MAX_DEGREE = "QSCHUBERT_MAX_DEGREE"
ENV_MAX_COMPONENT = "QSCHUBERT_MAX_COMPONENT"


@dataclass(frozen=True)
class Budget:
    """Caps applied by the algebraic engines.

    max_degree bounds the length of any word produced by a product;
    max_component bounds the number of candidate monomials (or basis
    words) a single linear solve may involve.
    """

    max_degree: int = 24
    max_component: int = 200_000


def _env_int(name: str, fallback: int) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return fallback
    try:
        return int(raw)
    except ValueError:
        return fallback


def default_budget() -> Budget:
    """The active budget; environment variables override the defaults."""
    return Budget(
        max_degree=_env_int(ENV_MAX_DEGREE, Budget.max_degree),
        max_component=_env_int(ENV_MAX_COMPONENT, Budget.max_component),
    )
