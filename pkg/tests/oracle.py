"""Independent brute-force reference for n-gram window counting.

Deliberately naive: no Counter, no shared code with the engine beyond the
cleaned token stream it consumes. Used to pin down exact counts.
"""

from __future__ import annotations


def window_counts(
    sentences,
    nmax: int,
    edge_stopwords=frozenset(),
) -> dict[str, int]:
    """Count every window of 1..nmax tokens inside each sentence, skipping
    windows that start or end on an edge stopword."""
    table: dict[str, int] = {}
    for sentence in sentences:
        tokens = list(sentence)
        for size in range(1, nmax + 1):
            position = 0
            while position + size <= len(tokens):
                window = tokens[position : position + size]
                position += 1
                if window[0] in edge_stopwords:
                    continue
                if window[len(window) - 1] in edge_stopwords:
                    continue
                phrase = " ".join(window)
                if phrase in table:
                    table[phrase] = table[phrase] + 1
                else:
                    table[phrase] = 1
    return table


def count_stream(stream, config) -> dict[str, int]:
    """Run the reference counter with the engine's configuration knobs."""
    edges = config.stopword_list if config.keep_interior_stopwords else frozenset()
    return window_counts(stream.sentences, config.nmax, edges)


def merge_and_rank(per_article: dict[str, dict[str, int]], min_frequency: int):
    """Sum per-article tables and rank like the engine: total descending,
    phrase ascending. Returns (ordered phrases, totals)."""
    totals: dict[str, int] = {}
    for entries in per_article.values():
        for phrase, count in entries.items():
            totals[phrase] = totals.get(phrase, 0) + count
    kept = [phrase for phrase, count in totals.items() if count >= min_frequency]
    kept.sort()
    kept.sort(key=lambda phrase: totals[phrase], reverse=True)
    return kept, totals
