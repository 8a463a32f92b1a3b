"""Graph-based sentence ranking and pruning.

Sentences become graph nodes, weighted by lexical overlap, and a damped
power iteration scores them.  :func:`prune_text` drops the lowest-ranked
share of sentences and re-emits the survivors in their original order,
reusing the original inter-sentence separators so that a pruning ratio of
zero returns the input byte for byte.
"""

from __future__ import annotations

import math
import re

import numpy as np

from .errors import ContractViolation

__all__ = [
    "split_sentences",
    "tokenize",
    "sentence_similarity",
    "similarity_matrix",
    "rank_scores",
    "ranked_indices",
    "prune_text",
]

DAMPING = 0.85
_TOKEN_RE = re.compile(r"[^\W_]+")
_TERMINALS = ".!?"


def split_sentences(text: str, split_colon: bool = False) -> list[tuple[str, str]]:
    """Split into ``(sentence, trailing_separator)`` spans.

    A sentence ends after a run of terminal characters that is followed by
    whitespace or the end of the text, so abbreviating dots inside words
    ("3.14") do not split.  Concatenating all spans reproduces *text*
    exactly.
    """
    terminals = _TERMINALS + (":" if split_colon else "")
    spans: list[tuple[str, str]] = []
    n = len(text)
    start = 0
    i = 0
    while i < n:
        if text[i] in terminals:
            j = i + 1
            while j < n and text[j] in terminals:
                j += 1
            if j >= n or text[j].isspace():
                sep_end = j
                while sep_end < n and text[sep_end].isspace():
                    sep_end += 1
                spans.append((text[start:j], text[j:sep_end]))
                start = sep_end
                i = sep_end
                continue
            i = j
            continue
        i += 1
    if start < n:
        spans.append((text[start:], ""))
    return spans


def tokenize(sentence: str) -> list[str]:
    """Lowercased alphanumeric runs of length two or more.

    Single-character words carry no overlap signal worth counting: keeping
    them lets articles like "a" create spurious similarity between
    otherwise unrelated sentences.
    """
    return [t for t in _TOKEN_RE.findall(sentence.lower()) if len(t) >= 2]


def sentence_similarity(a: str, b: str) -> float:
    ta, tb = tokenize(a), tokenize(b)
    if len(ta) < 2 or len(tb) < 2:
        return 0.0
    shared = len(set(ta) & set(tb))
    if shared == 0:
        return 0.0
    return shared / (math.log(len(ta)) + math.log(len(tb)))


def similarity_matrix(sentences: list[str]) -> np.ndarray:
    n = len(sentences)
    tokens = [tokenize(s) for s in sentences]
    sets = [set(t) for t in tokens]
    w = np.zeros((n, n))
    for i in range(n):
        if len(tokens[i]) < 2:
            continue
        for j in range(i + 1, n):
            if len(tokens[j]) < 2:
                continue
            shared = len(sets[i] & sets[j])
            if shared:
                w[i, j] = w[j, i] = shared / (
                    math.log(len(tokens[i])) + math.log(len(tokens[j])))
    return w


def rank_scores(sentences: list[str], damping: float = DAMPING,
                tol: float = 1e-6, max_iter: int = 100) -> np.ndarray:
    """Stationary importance scores via damped power iteration."""
    n = len(sentences)
    if n == 0:
        return np.zeros(0)
    if n == 1:
        return np.ones(1)
    w = similarity_matrix(sentences)
    out = w.sum(axis=1)
    ranks = np.full(n, 1.0 / n)
    base = (1.0 - damping) / n
    for _ in range(max_iter):
        spread = np.divide(ranks, out, out=np.zeros_like(ranks), where=out > 0)
        updated = base + damping * (w @ spread)
        if np.abs(updated - ranks).sum() < tol:
            return updated
        ranks = updated
    return ranks


def ranked_indices(scores: np.ndarray) -> list[int]:
    """Indices sorted best first; equal scores keep document order."""
    return sorted(range(len(scores)), key=lambda i: (-scores[i], i))


def _removal_count(ratio: float, n: int, rounding: str) -> int:
    # round() guards float artifacts such as 0.7 * 10 == 6.999...
    exact = round(ratio * n, 12)
    if rounding == "floor":
        count = math.floor(exact)
    elif rounding == "ceiling":
        count = math.ceil(exact)
    else:
        raise ContractViolation(f"unknown rounding mode: {rounding!r}")
    return min(max(count, 0), n)


def prune_text(text: str, ratio: float, rounding: str = "floor",
               split_colon: bool = False, damping: float = DAMPING) -> str:
    """Remove the *ratio* lowest-ranked share of sentences from *text*.

    With ``rounding="ceiling"`` at least one sentence survives unless the
    ratio is exactly 1; under floor rounding that holds arithmetically.
    Kept neighbours are rejoined with their original separator, gaps get a
    single space.
    """
    if not 0.0 <= ratio <= 1.0:
        raise ContractViolation(f"pruning ratio out of range: {ratio}")
    spans = split_sentences(text, split_colon=split_colon)
    n = len(spans)
    if n == 0:
        return text
    keep = n - _removal_count(ratio, n, rounding)
    if ratio < 1.0:
        keep = max(keep, 1)
    if keep >= n:
        return text
    if keep == 0:
        return ""
    scores = rank_scores([s for s, _ in spans], damping=damping)
    kept = sorted(ranked_indices(scores)[:keep])
    parts: list[str] = []
    for pos, idx in enumerate(kept):
        parts.append(spans[idx][0])
        if pos + 1 < len(kept):
            parts.append(spans[idx][1] if kept[pos + 1] == idx + 1 else " ")
    return "".join(parts)
