"""Gale-Church link costs: category prior plus character-length match."""

import math
from typing import Collection, Sequence

from .models import AlignerParameters, LinkCategory, Lexicon

# -log of the smallest positive double; used when erfc underflows.
_MAX_LENGTH_COST = -math.log(5e-324)


def length_delta(src_len: int, tgt_len: int, params: AlignerParameters) -> float:
    """
    Standardized length difference of a link.

    The variance term uses the mean of both lengths so that links with an
    empty side are defined and swapping the sides leaves ``|delta|`` unchanged.
    """
    c = params.mean_ratio
    mean = (src_len + tgt_len / c) / 2.0
    if mean == 0:
        return 0.0
    return (tgt_len - src_len * c) / math.sqrt(mean * params.variance)


def length_cost(src_len: int, tgt_len: int, params: AlignerParameters) -> float:
    """``-log P(match | delta)`` with ``P = 2·(1 - Φ(|delta|))``."""
    delta = abs(length_delta(src_len, tgt_len, params))
    probability = math.erfc(delta / math.sqrt(2.0))
    if probability <= 0.0:
        return _MAX_LENGTH_COST
    return -math.log(probability)


def link_cost(
    category: LinkCategory,
    src_len: int,
    tgt_len: int,
    params: AlignerParameters,
) -> float:
    """Cost of a link over spans whose concatenated lengths are given."""
    return -math.log(params.prior(category)) + length_cost(src_len, tgt_len, params)


def lexical_coverage(
    src_tokens: Sequence[str],
    tgt_tokens: Sequence[str],
    lexicon: Lexicon,
) -> float:
    """Share of tokens on both sides that have a lexicon partner on the other side."""
    if not src_tokens or not tgt_tokens or not lexicon:
        return 0.0
    tgt_set: Collection[str] = set(tgt_tokens)
    src_set: Collection[str] = set(src_tokens)
    covered_src = sum(1 for s in src_tokens if lexicon.targets(s) & tgt_set)
    covered_tgt = sum(
        1 for t in tgt_tokens if any((s, t) in lexicon for s in src_set)
    )
    return (covered_src + covered_tgt) / (len(src_tokens) + len(tgt_tokens))
