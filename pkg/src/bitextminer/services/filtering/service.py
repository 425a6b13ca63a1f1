"""Corpus-level filtering: greedy, tier-by-tier matching of translated lines."""

import time
from typing import Dict, List, Optional, Sequence, Tuple, Union

from ...config.logging import get_logger, log_performance
from ...core.textproc import DEFAULT_MAX_VARIANTS, StopwordSet, SynonymLexicon
from ...exceptions import ConfigurationError, InputMismatchError
from .matcher import TierScorer
from .models import AcceptedPair, FilterReport, FilterTier

logger = get_logger(__name__)

WindowPolicy = Union[str, int, None]

AUTO_WINDOW_MAX_LINES = 500
AUTO_WINDOW_RADIUS = 50


def resolve_window(policy: WindowPolicy, n_src: int, n_tgt: int) -> Optional[int]:
    """
    Turn a window policy into a radius, ``None`` meaning the whole document.

    ``auto`` is unbounded for documents of at most 500 lines per side and
    ±50 around the aligner suggestion otherwise.
    """
    if policy is None or policy == "unbounded":
        return None
    if policy == "auto":
        return None if max(n_src, n_tgt) <= AUTO_WINDOW_MAX_LINES else AUTO_WINDOW_RADIUS
    if isinstance(policy, int) and not isinstance(policy, bool) and policy >= 1:
        return policy
    raise ConfigurationError(
        "filtering.window", f"expected 'auto', 'unbounded' or a positive integer, got {policy!r}"
    )


def proportional_positions(n_src: int, n_tgt: int) -> List[int]:
    """Diagonal guesses used when no alignment is available."""
    if n_src == 0 or n_tgt == 0:
        return [0] * n_src
    return [min(n_tgt - 1, (i * n_tgt) // n_src) for i in range(n_src)]


def filter_corpus(
    src_lines: Sequence[str],
    trans_lines: Sequence[str],
    tgt_lines: Sequence[str],
    tiers: Sequence[FilterTier],
    window: WindowPolicy = "auto",
    stops: Optional[StopwordSet] = None,
    lex: Optional[SynonymLexicon] = None,
    suggested: Optional[Sequence[int]] = None,
    max_variants: int = DEFAULT_MAX_VARIANTS,
    ratio_without_stopwords: bool = True,
) -> Tuple[List[AcceptedPair], FilterReport]:
    """
    Match translated source lines to target lines and keep the accepted pairs.

    Tiers run in order. In each tier every still-unmatched source line is
    scored against the unclaimed target lines of its window, and the cells
    reaching the tier threshold are claimed greedily by descending score
    (ties to the lower source, then target, index). Lines left unmatched
    move on to the next tier. Each target line is claimed at most once.

    Returns:
        Accepted pairs in source order and the document's filter report

    Raises:
        InputMismatchError: If source and translation line counts differ
    """
    if len(src_lines) != len(trans_lines):
        raise InputMismatchError("translation file", len(src_lines), len(trans_lines))
    if not tiers:
        raise ValueError("At least one filter tier is required")

    start_time = time.perf_counter()
    n, m = len(src_lines), len(tgt_lines)
    radius = resolve_window(window, n, m)
    if suggested is not None and len(suggested) != n:
        raise InputMismatchError("suggested positions", n, len(suggested))
    positions = list(suggested) if suggested is not None else proportional_positions(n, m)

    scorer = TierScorer(
        stops or StopwordSet(lang="xx"),
        lex,
        max_variants=max_variants,
        ratio_without_stopwords=ratio_without_stopwords,
    )
    trans_features = [scorer.features(line) for line in trans_lines]
    tgt_features = [scorer.features(line) for line in tgt_lines]

    def window_of(i: int) -> range:
        if radius is None:
            return range(m)
        return range(max(0, positions[i] - radius), min(m, positions[i] + radius + 1))

    open_lines = [i for i in range(n) if src_lines[i].strip() and trans_lines[i].strip()]
    matched: Dict[int, Tuple[int, float, int]] = {}
    claimed = set()
    tallies = [0] * len(tiers)

    # Greedy per tier, not a maximum matching: raising a threshold can in rare
    # cases free a target that lets a later line match, so accepted counts are
    # not guaranteed monotone in the thresholds.
    for tier_index, tier in enumerate(tiers):
        cells = []
        for i in open_lines:
            if i in matched:
                continue
            for j in window_of(i):
                if j in claimed:
                    continue
                score = scorer.score(tier.comparator, trans_features[i], tgt_features[j])
                if score >= tier.threshold and score > 0.0:
                    cells.append((-score, i, j))
        cells.sort()
        for neg_score, i, j in cells:
            if i in matched or j in claimed:
                continue
            matched[i] = (j, -neg_score, tier_index)
            claimed.add(j)
            tallies[tier_index] += 1

    pairs = [
        AcceptedPair(
            src_index=i,
            tgt_index=j,
            src=src_lines[i],
            tgt=tgt_lines[j],
            score=score,
            tier=tiers[tier_index].name,
        )
        for i, (j, score, tier_index) in sorted(matched.items())
    ]
    report = FilterReport(
        src_lines=n,
        tgt_lines=m,
        candidates_in=len(open_lines),
        accepted=len(pairs),
        rejected=len(open_lines) - len(pairs),
        tier_tallies=tallies,
        window=radius,
    )

    log_performance(
        "filter_corpus",
        (time.perf_counter() - start_time) * 1000,
        src_lines=n,
        tgt_lines=m,
        accepted=report.accepted,
        window=radius,
    )
    return pairs, report
