"""String matching primitives for the offline indexes: banded edit distance,
character trigrams, and normalized similarity."""

from __future__ import annotations


def levenshtein(a: str, b: str, max_dist: int | None = None) -> int:
    """Edit distance with an optional early-exit band.

    Returns max_dist + 1 as soon as the distance provably exceeds max_dist,
    which keeps fuzzy index scans cheap.
    """
    if a == b:
        return 0
    la, lb = len(a), len(b)
    if max_dist is not None and abs(la - lb) > max_dist:
        return max_dist + 1
    if la == 0 or lb == 0:
        return max(la, lb)
    if la > lb:
        a, b, la, lb = b, a, lb, la
    prev = list(range(la + 1))
    cur = [0] * (la + 1)
    for j in range(1, lb + 1):
        cur[0] = j
        row_min = j
        bj = b[j - 1]
        for i in range(1, la + 1):
            cost = 0 if a[i - 1] == bj else 1
            cur[i] = min(prev[i] + 1, cur[i - 1] + 1, prev[i - 1] + cost)
            if cur[i] < row_min:
                row_min = cur[i]
        if max_dist is not None and row_min > max_dist:
            return max_dist + 1
        prev, cur = cur, prev
    return prev[la]


def trigrams(text: str) -> frozenset[str]:
    """Character trigrams of the padded, case-folded string."""
    padded = f"  {text.lower().strip()} "
    return frozenset(padded[i:i + 3] for i in range(len(padded) - 2))


def trigram_overlap(a: str, b: str) -> float:
    """Jaccard overlap of character trigrams, in [0, 1]."""
    ta, tb = trigrams(a), trigrams(b)
    if not ta or not tb:
        return 0.0
    return len(ta & tb) / len(ta | tb)


def similarity(a: str, b: str) -> float:
    """Normalized edit similarity: 1 - distance / longer length."""
    a, b = a.lower().strip(), b.lower().strip()
    if not a and not b:
        return 1.0
    longer = max(len(a), len(b))
    if longer == 0:
        return 1.0
    return 1.0 - levenshtein(a, b) / longer


def tokenize(text: str) -> list[str]:
    """Lowercased word tokens; apostrophes and hyphens stay inside tokens."""
    out = []
    word: list[str] = []
    for ch in text.lower():
        if ch.isalnum() or (ch in "'’-" and word):
            word.append(ch)
        elif word:
            out.append("".join(word).strip("'’-"))
            word = []
    if word:
        out.append("".join(word).strip("'’-"))
    return [w for w in out if w]
