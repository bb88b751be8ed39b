"""Colored compositions over minimal-variety weight multisets.

Counting, enumeration, certified growth-exponent brackets and gap analysis
for generating functions of the form b(t) = 1 / (1 - a(t)).
"""

from minvar.series import TruncatedSeries, eval_lower, recip_one_minus
from minvar.multisets import MultisetSpec, parse_spec
from minvar.growth import b_sequence, roots_table, solve_alpha, beta_bracket

__all__ = [
    "TruncatedSeries",
    "eval_lower",
    "recip_one_minus",
    "MultisetSpec",
    "parse_spec",
    "b_sequence",
    "roots_table",
    "solve_alpha",
    "beta_bracket",
]

__version__ = "0.1.0"
