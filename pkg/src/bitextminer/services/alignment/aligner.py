"""Two-pass sentence alignment: length-based DP, automatic dictionary, realignment."""

import math
from collections import Counter
from typing import List, Optional, Sequence, Tuple

from ...config.logging import get_logger
from ...core.textproc import Sentence
from .length_model import lexical_coverage, link_cost
from .models import (
    SEARCH_ORDER,
    AlignerParameters,
    AlignmentLink,
    Lexicon,
    LinkCategory,
    SentenceAlignment,
)

logger = get_logger(__name__)

DEFAULT_PARAMETERS = AlignerParameters()


def _dynamic_program(
    src: Sequence[Sentence],
    tgt: Sequence[Sentence],
    params: AlignerParameters,
    lexicon: Optional[Lexicon],
) -> SentenceAlignment:
    n, m = len(src), len(tgt)
    src_prefix = [0]
    for s in src:
        src_prefix.append(src_prefix[-1] + s.char_len)
    tgt_prefix = [0]
    for t in tgt:
        tgt_prefix.append(tgt_prefix[-1] + t.char_len)
    use_lexicon = lexicon is not None and len(lexicon) > 0 and params.lexical_weight > 0

    cost = [[math.inf] * (m + 1) for _ in range(n + 1)]
    back: List[List[Optional[LinkCategory]]] = [[None] * (m + 1) for _ in range(n + 1)]
    step = [[0.0] * (m + 1) for _ in range(n + 1)]
    cost[0][0] = 0.0

    for i in range(n + 1):
        for j in range(m + 1):
            if i == 0 and j == 0:
                continue
            best, best_category, best_step = math.inf, None, 0.0
            for category in SEARCH_ORDER:
                pi, pj = i - category.src_size, j - category.tgt_size
                if pi < 0 or pj < 0 or cost[pi][pj] == math.inf:
                    continue
                link = link_cost(
                    category,
                    src_prefix[i] - src_prefix[pi],
                    tgt_prefix[j] - tgt_prefix[pj],
                    params,
                )
                if use_lexicon and category.src_size and category.tgt_size:
                    src_tokens = [tok for s in src[pi:i] for tok in s.tokens]
                    tgt_tokens = [tok for t in tgt[pj:j] for tok in t.tokens]
                    link -= params.lexical_weight * lexical_coverage(
                        src_tokens, tgt_tokens, lexicon
                    )
                total = cost[pi][pj] + link
                if total < best:
                    best, best_category, best_step = total, category, link
            cost[i][j] = best
            back[i][j] = best_category
            step[i][j] = best_step

    links = []
    i, j = n, m
    while i > 0 or j > 0:
        category = back[i][j]
        pi, pj = i - category.src_size, j - category.tgt_size
        links.append(
            AlignmentLink(
                src=tuple(range(pi, i)), tgt=tuple(range(pj, j)), score=step[i][j]
            )
        )
        i, j = pi, pj
    links.reverse()
    return SentenceAlignment(links=tuple(links), total_cost=cost[n][m])


def align_length_based(
    src: Sequence[Sentence],
    tgt: Sequence[Sentence],
    params: AlignerParameters = DEFAULT_PARAMETERS,
) -> SentenceAlignment:
    """
    Minimum-cost monotone alignment using sentence lengths only.

    Ties prefer 1-1 links, then lower category index; either side may be empty.
    """
    return _dynamic_program(src, tgt, params, lexicon=None)


def align_with_lexicon(
    src: Sequence[Sentence],
    tgt: Sequence[Sentence],
    lexicon: Lexicon,
    params: AlignerParameters = DEFAULT_PARAMETERS,
) -> SentenceAlignment:
    """Same DP with every non-empty link's cost reduced by ``λ·coverage``."""
    return _dynamic_program(src, tgt, params, lexicon=lexicon)


def build_auto_lexicon(
    src: Sequence[Sentence],
    tgt: Sequence[Sentence],
    alignment: SentenceAlignment,
    min_count: int = DEFAULT_PARAMETERS.lexicon_min_count,
    score_floor: float = DEFAULT_PARAMETERS.lexicon_score_floor,
) -> Lexicon:
    """
    Build a word-association table from the 1-1 links of an alignment.

    Counts are per link (a word repeated in one sentence counts once) and an
    entry scores ``count(s, t) / max(count(s), count(t))``.
    """
    if min_count < 1:
        raise ValueError("min_count must be at least 1")
    return lexicon_from_pairs(
        [(src[i].tokens, tgt[j].tokens) for i, j in alignment.one_to_one()],
        min_count=min_count,
        score_floor=score_floor,
    )


def lexicon_from_pairs(
    pairs: Sequence[Tuple[Sequence[str], Sequence[str]]],
    min_count: int = DEFAULT_PARAMETERS.lexicon_min_count,
    score_floor: float = DEFAULT_PARAMETERS.lexicon_score_floor,
) -> Lexicon:
    """Co-occurrence lexicon over tokenized sentence pairs."""
    src_counts: Counter = Counter()
    tgt_counts: Counter = Counter()
    pair_counts: Counter = Counter()
    for src_tokens, tgt_tokens in pairs:
        src_types, tgt_types = set(src_tokens), set(tgt_tokens)
        src_counts.update(src_types)
        tgt_counts.update(tgt_types)
        pair_counts.update((s, t) for s in src_types for t in tgt_types)

    entries = {}
    for (s, t), count in pair_counts.items():
        if count < min_count:
            continue
        score = count / max(src_counts[s], tgt_counts[t])
        if score >= score_floor:
            entries[(s, t)] = score
    return Lexicon(entries)


def align_two_pass(
    src: Sequence[Sentence],
    tgt: Sequence[Sentence],
    external_lexicon: Optional[Lexicon] = None,
    params: AlignerParameters = DEFAULT_PARAMETERS,
) -> Tuple[SentenceAlignment, Lexicon]:
    """
    Align, learn a dictionary from the first pass, and realign with it.

    With an external lexicon the first pass already combines it with the
    length evidence; the second pass uses the learned entries merged with
    the external ones. Returns the second-pass alignment and that lexicon.
    """
    if external_lexicon:
        first = align_with_lexicon(src, tgt, external_lexicon, params)
    else:
        first = align_length_based(src, tgt, params)

    learned = build_auto_lexicon(
        src,
        tgt,
        first,
        min_count=params.lexicon_min_count,
        score_floor=params.lexicon_score_floor,
    )
    lexicon = external_lexicon.merged_with(learned) if external_lexicon else learned
    second = align_with_lexicon(src, tgt, lexicon, params)

    logger.debug(
        "Two-pass alignment finished",
        src_sentences=len(src),
        tgt_sentences=len(tgt),
        first_pass_cost=round(first.total_cost, 6),
        second_pass_cost=round(second.total_cost, 6),
        lexicon_size=lexicon.size,
    )
    return second, lexicon


def suggested_positions(alignment: SentenceAlignment, n_src: int) -> List[int]:
    """
    Target position the aligner suggests for each source sentence.

    Deleted source sentences (1-0 links) get the position right after the
    preceding target span.
    """
    positions = [0] * n_src
    next_tgt = 0
    for link in alignment:
        for i in link.src:
            positions[i] = link.tgt[0] if link.tgt else next_tgt
        next_tgt += len(link.tgt)
    return positions
