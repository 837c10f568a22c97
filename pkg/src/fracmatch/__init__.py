"""Extremal counts for hypergraphs without fractional matchings of cardinality s."""
from .construct import (
    ThresholdFamily,
    ThresholdWeights,
    build_extremal,
    build_threshold_family,
    count_threshold,
    threshold_profile,
)
from .core import Hypergraph, parse_hypergraph, parse_rational, relabel, serialize_hypergraph
from .counting import CountBounds, ExtremalCount, binomial, bounds_M, eval_M
from .lp import LpResult, check_certificates, has_matching, matching_number
from .verify import (
    VerifyReport,
    cross_check_bounds,
    exhaustive_tightness,
    randomized_tightness,
    threshold_search,
    verify_extremal,
)

__version__ = "0.1.0"
