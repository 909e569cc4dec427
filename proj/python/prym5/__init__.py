from ._core import (
    BudgetExceeded,
    block_net,
    castelnuovo_bound,
    genus2,
    liaison,
    net_fixture,
    pipeline_3_16,
    ruled_numerology,
    segre_quadratic,
)

__all__ = [
    "BudgetExceeded",
    "block_net",
    "castelnuovo_bound",
    "genus2",
    "liaison",
    "net_fixture",
    "pipeline_3_16",
    "ruled_numerology",
    "segre_quadratic",
]
