"""Search for an unknown vertex of a graph with ball queries.

Results of the searches and experiments are plain dicts with the same keys as
the command-line tool's JSON output.
"""

from ._core import (
    ContractViolation,
    DomainError,
    Graph,
    ParseError,
    ball,
    ball_stats,
    diameter,
    distance,
    exact_adaptive,
    exact_K,
    fano_signature,
    fano_verify,
    gnp_experiment,
    greedy_covering,
    halving_query_bound,
    hamming_code,
    is_connected,
    is_identifying,
    is_separating,
    katona_lower_bound,
    metric_dimension,
    min_nonadaptive,
    predicted_diameter,
    run_search,
    sandwich_check,
    sphere_covering_lower,
    v_ball,
    worst_case_queries,
)

__all__ = [name for name in dir() if not name.startswith("_")]
