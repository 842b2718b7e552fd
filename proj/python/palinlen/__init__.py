"""Palindromic prefix lengths of the Sierpinski word.

Every quantity can be computed along independent routes — a letter-level
oracle, self-similar recurrences, digit patterns of the ternary expansion,
and automata or substitution systems — and the routes are meant to be
played against each other.  See ``verify`` for the packaged property
suites that do exactly that.
"""

from ._core import (
    cf_dp,
    cf_dq,
    cf_dt,
    cf_q,
    cf_q_vs_overline,
    cf_t,
    count_s,
    decompose_groups,
    dfao_eval,
    diff_prefix,
    from_ternary,
    in_s,
    is_palindrome,
    mirror,
    morphic_output,
    oracle_p,
    oracle_q,
    oracle_qj,
    overline,
    p,
    pl,
    pl_table,
    product_pair_count,
    q,
    q_ternary,
    qj,
    sierpinski_prefix,
    t,
    to_ternary,
    verify,
)

__all__ = [
    "cf_dp",
    "cf_dq",
    "cf_dt",
    "cf_q",
    "cf_q_vs_overline",
    "cf_t",
    "count_s",
    "decompose_groups",
    "dfao_eval",
    "diff_prefix",
    "from_ternary",
    "in_s",
    "is_palindrome",
    "mirror",
    "morphic_output",
    "oracle_p",
    "oracle_q",
    "oracle_qj",
    "overline",
    "p",
    "pl",
    "pl_table",
    "product_pair_count",
    "q",
    "q_ternary",
    "qj",
    "sierpinski_prefix",
    "t",
    "to_ternary",
    "verify",
]

__version__ = "0.1.0"
