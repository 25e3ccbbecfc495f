"""
Mining ranked candidate terms
=============================

The pipeline turns article text into ranked uni/bi/trigrams:
normalize -> drop entities and numerics -> count n-grams per sentence ->
merge across articles -> rank by total frequency.
"""

from pathlib import Path

from ontoforge import (
    PipelineConfig,
    clean,
    extract_ngrams,
    load_fixture_corpus,
    mine_corpus,
    normalize,
    rank_candidates,
)

REPO = Path(__file__).resolve().parent.parent

config = PipelineConfig()  # min_frequency 2, nmax 3, interior stopwords kept

# stage by stage on one sentence
text = "The Horns Rev plant delivers 160 MW of wind power near Denmark."
print("raw:", text)
print("tokens:", normalize(text, config).sentences[0])
print("cleaned:", clean(text, config).sentences[0])
# 'Horns Rev' and 'Denmark' vanish as capitalized mid-sentence tokens,
# '160' as a numeric, and 'MW' because its casing also marks it as a name.

table = extract_ngrams(clean(text, config), config)
print("windows:", dict(sorted(table.entries.items())))

# the full corpus, ranked
corpus = load_fixture_corpus(REPO / "fixtures" / "corpus.jsonl")
candidates = rank_candidates(mine_corpus(corpus, config), config)
print(f"\n{len(candidates)} candidates at min_frequency={config.min_frequency}")
print("top 15:")
for cand in candidates[:15]:
    print(f"  {cand.total_frequency:5d}  {cand.phrase}")

# interior stopwords survive inside phrases but never at the edges
phrases = {c.phrase for c in candidates}
print("\n'meteorology and climatology' kept:", "meteorology and climatology" in phrases)
print("'and climatology' kept:", "and climatology" in phrases)
